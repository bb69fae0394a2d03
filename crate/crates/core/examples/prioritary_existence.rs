//! When does a prioritary sheaf with given invariants exist, and what
//! does its component look like?
//!
//! Run with:
//! ```bash
//! cargo run --example prioritary_existence
//! ```
//!
//! On the plane the bound is 2 r c2 - (r-1) c1^2 >= -d(r-d) with
//! d = -c1.f mod r; on ruled surfaces a sheaf exists for every c2 when
//! c1.f is odd, and needs 4 c2 >= c1^2 when c1.f is even. The component,
//! when present, is a single irreducible one of stack dimension
//! -chi(E, E) with embedding codimension 0.

use sheafstrata::{prioritary_component, prioritary_exists, ChernData, DivisorClass, SurfaceModel};

fn main() -> Result<(), sheafstrata::Error> {
    let p2 = SurfaceModel::p2();
    println!("Plane, rank 2, c1 = 0: smallest admissible c2 is 0.");
    for c2 in -2..=3 {
        let chern = ChernData::new(2, DivisorClass::one(0), c2)?;
        let exists = prioritary_exists(&p2, &chern)?;
        match prioritary_component(&p2, &chern)? {
            Some(c) => println!(
                "  c2 = {c2:>2}: exists, stack dimension {:>2}, embedding codim {:?}",
                c.dimension, c.embedding_codim
            ),
            None => println!("  c2 = {c2:>2}: none"),
        }
        assert_eq!(exists, c2 >= 0);
    }

    println!("\nQuadric, rank 2: parity of c1.f decides whether c2 is constrained.");
    let q = SurfaceModel::quadric();
    for (c1, c2s) in [
        (DivisorClass::two(0, 0), vec![-1, 0, 1]),
        (DivisorClass::two(1, 0), vec![-5, -1, 0]),
        (DivisorClass::two(2, 2), vec![1, 2, 3]),
    ] {
        for c2 in c2s {
            let chern = ChernData::new(2, c1.clone(), c2)?;
            let exists = prioritary_exists(&q, &chern)?;
            let fiber_degree = q.intersect(&c1, &q.fiber_class())?;
            let verdict = if exists { "exists" } else { "none" };
            println!("  c1 = {c1}, c1.f = {fiber_degree}, c2 = {c2:>2}: {verdict}");
        }
    }

    println!("\nThe dimension-0 case: c1 = 0, c2 = 1 on the plane.");
    let chern = ChernData::new(2, DivisorClass::one(0), 1)?;
    let c = prioritary_component(&p2, &chern)?.expect("component present");
    assert_eq!(c.dimension, 0);
    assert_eq!(c.embedding_codim, Some(0));
    println!(
        "  one component, dimension {}, embedding codim {:?}, generically locally free: {}",
        c.dimension, c.embedding_codim, c.generic_locally_free
    );
    Ok(())
}
