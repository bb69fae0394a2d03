fn main() {
    std::process::exit(sheafstrata::cli::run());
}
