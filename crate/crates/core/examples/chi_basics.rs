//! Euler characteristics of line bundles and rank-2 sheaves on the
//! built-in surface models.
//!
//! Run with:
//! ```bash
//! cargo run --example chi_basics
//! ```
//!
//! The walkthrough computes chi(O(D)) on the plane, the quadric and a
//! product ruled surface, checks Serre symmetry chi(D) = chi(K - D),
//! and finishes with the rank-2 pairing chi(E, E) that drives every
//! stack dimension in the crate.

use sheafstrata::{
    chi_line_bundle, chi_pair, chi_self_pair, chi_sheaf, line_cohomology, ChernData, DivisorClass,
    SurfaceModel,
};

fn main() -> Result<(), sheafstrata::Error> {
    let p2 = SurfaceModel::p2();
    println!("chi(O(d)) on the plane, against the closed form (d+1)(d+2)/2:");
    for d in -4..=4 {
        let class = DivisorClass::one(d);
        let chi = chi_line_bundle(&p2, &class)?;
        let closed = (d + 1) * (d + 2) / 2;
        assert_eq!(chi, closed);
        println!("  d = {d:>2}: chi = {chi:>3}");
    }

    let q = SurfaceModel::quadric();
    println!("\nchi(O(a,b)) on the quadric is (a+1)(b+1):");
    for (a, b) in [(0, 0), (2, 1), (-2, 3), (3, 3)] {
        let class = DivisorClass::two(a, b);
        let chi = chi_line_bundle(&q, &class)?;
        assert_eq!(chi, (a + 1) * (b + 1));
        let coh = line_cohomology(&q, &class)?;
        println!(
            "  (a,b) = ({a:>2},{b:>2}): chi = {chi:>3}, (h0,h1,h2) = ({},{},{})",
            coh.h0, coh.h1, coh.h2
        );
    }

    let ruled = SurfaceModel::product_ruled(2)?;
    let k = ruled.canonical_class();
    println!("\nSerre symmetry chi(D) = chi(K - D) on a genus-2 product ruled surface:");
    for (a, b) in [(1, 1), (3, -2), (-1, 4)] {
        let d = DivisorClass::two(a, b);
        let dual = k.sub(&d)?;
        let lhs = chi_line_bundle(&ruled, &d)?;
        let rhs = chi_line_bundle(&ruled, &dual)?;
        assert_eq!(lhs, rhs);
        println!("  D = {d}: chi(D) = {lhs}, chi(K-D) = {rhs}");
    }

    println!("\nRank-2 characteristics on the plane, c1 = 4, c2 = 3:");
    let chern = ChernData::new(2, DivisorClass::one(4), 3)?;
    let chi = chi_sheaf(&p2, &chern)?;
    let self_pair = chi_self_pair(&p2, &chern)?;
    println!("  chi(E)    = {chi}");
    println!("  chi(E, E) = {self_pair}  (stack dimension of the prioritary component is {})", -self_pair);
    let other = ChernData::new(2, DivisorClass::one(1), 0)?;
    println!("  chi(E, F) = {} for F with c1 = 1, c2 = 0", chi_pair(&p2, &chern, &other)?);
    Ok(())
}
