//! How the Brill-Noether component list changes as N sweeps up to
//! chi(O(E)).
//!
//! Run with:
//! ```bash
//! cargo run --example survey_thresholds
//! ```
//!
//! Small N admits no special position at all, curve types enter one
//! class at a time as their brackets open, and once N clears the
//! prioritary threshold the prioritary type appears and eventually
//! absorbs the curve types whose codimension it undercuts.

use sheafstrata::{bn_components, chi_line_bundle, BNKind, DivisorClass, SurfaceModel};

fn describe(comps: &[sheafstrata::BNComponent]) -> String {
    if comps.is_empty() {
        return "empty locus".to_string();
    }
    comps
        .iter()
        .map(|c| match c.kind {
            BNKind::CurveType => format!(
                "curve D={} n={} codim {}",
                c.d.as_ref().unwrap(),
                c.n.unwrap(),
                c.codim
            ),
            BNKind::PrioritaryType => format!("prioritary codim {}", c.codim),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn main() -> Result<(), sheafstrata::Error> {
    let p2 = SurfaceModel::p2();
    let e = DivisorClass::one(4);
    let chi = chi_line_bundle(&p2, &e)?;
    println!("Plane, E = 4, chi = {chi}. Components by N:");
    for n in 1..=chi {
        let comps = bn_components(&p2, &e, n)?;
        println!("  N = {n:>2}: {}", describe(&comps));
    }

    let q = SurfaceModel::quadric();
    let e = DivisorClass::two(2, 2);
    let chi = chi_line_bundle(&q, &e)?;
    println!("\nQuadric, E = (2,2), chi = {chi}. Components by N:");
    for n in 1..=chi {
        let comps = bn_components(&q, &e, n)?;
        println!("  N = {n:>2}: {}", describe(&comps));
    }

    println!("\nParity contrast at E = (2,1) and E = (2,2): the odd column uses the");
    println!("shifted threshold plus the isolated family at N = e1 + 2.");
    for (e1, e2) in [(2, 1), (2, 2)] {
        let e = DivisorClass::two(e1, e2);
        let chi = chi_line_bundle(&q, &e)?;
        let first = (1..=chi)
            .find(|&n| {
                bn_components(&q, &e, n)
                    .unwrap()
                    .iter()
                    .any(|c| c.kind == BNKind::PrioritaryType)
            })
            .map_or("never".to_string(), |n| n.to_string());
        println!("  E = ({e1},{e2}): prioritary type first present at N = {first} (chi = {chi})");
    }
    Ok(())
}
