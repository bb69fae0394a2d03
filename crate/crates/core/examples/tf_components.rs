//! Full component inventory of a rank-2 torsion-free moduli stack.
//!
//! Run with:
//! ```bash
//! cargo run --example tf_components
//! ```
//!
//! Nonprioritary components are indexed by a twist class D with
//! D.f <= (c1.f - 2)/2 and a count n1 of singular points; the finitely
//! many admissible D live in an explicit region that the crate can
//! describe symbolically, so a window only truncates the printout, not
//! the theory.

use sheafstrata::{
    admissible_region_description, enumerate_nonprioritary, prioritary_component, ChernData,
    DivisorClass, SurfaceModel, Window,
};

fn main() -> Result<(), sheafstrata::Error> {
    let q = SurfaceModel::quadric();
    let c1 = DivisorClass::two(1, 1);
    let c2 = 2;
    let window = Window::new(vec![(-2, 2), (-2, 2)])?;

    let region = admissible_region_description(&q, &c1, c2)?;
    println!("Quadric, c1 = {c1}, c2 = {c2}. Admissible (D, n1) satisfy:");
    println!("  {}", region.fiber_condition);
    println!("  {}", region.count_condition);
    println!("  {}", region.capacity_condition);

    let comps = enumerate_nonprioritary(&q, &c1, c2, &window)?;
    println!("\nNonprioritary components with D in the window [-2,2]^2:");
    println!("  {:>8} {:>4} {:>4} {:>5} {:>7} {:>6}", "D", "n1", "n2", "dim", "codim", "lfree");
    for c in &comps {
        let d = c.d.as_ref().unwrap();
        println!(
            "  {:>8} {:>4} {:>4} {:>5} {:>7} {:>6}",
            format!("{d}"),
            c.n1.unwrap(),
            c.n2.unwrap(),
            c.dimension,
            c.embedding_codim.map_or("?".to_string(), |v| v.to_string()),
            c.generic_locally_free
        );
    }

    let chern = ChernData::new(2, c1.clone(), c2)?;
    if let Some(p) = prioritary_component(&q, &chern)? {
        println!(
            "\nPrioritary component: dimension {}, embedding codim {:?}.",
            p.dimension, p.embedding_codim
        );
        for c in &comps {
            assert!(c.dimension >= p.dimension);
        }
        println!(
            "Every nonprioritary component has dimension >= {} as required.",
            p.dimension
        );
    }
    Ok(())
}
