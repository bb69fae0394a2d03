//! The quadric family (e1, 1, e1 + 2): an isolated prioritary case that
//! the general threshold misses.
//!
//! Run with:
//! ```bash
//! cargo run --example bn_quadric_special
//! ```
//!
//! For E = (e1, 1) the prioritary type usually needs
//! 2N >= (e1 + 2)(e2 + 1) + 2, but at exactly N = e1 + 2 it appears
//! anyway. The example sweeps e1, shows the two components at the
//! special point, and verifies that one step below the special N the
//! prioritary type is absent.

use sheafstrata::bn::prioritary_type_present;
use sheafstrata::{bn_components, BNKind, DivisorClass, SurfaceModel};

fn main() -> Result<(), sheafstrata::Error> {
    let q = SurfaceModel::quadric();

    println!("Presence of the prioritary type for E = (e1, 1) near N = e1 + 2:");
    for e1 in 0..=4 {
        let e = DivisorClass::two(e1, 1);
        let special = e1 + 2;
        let threshold = (2 * special >= (e1 + 2) * 2 + 2) as i32;
        let below = special > 1 && prioritary_type_present(&q, &e, special - 1)?;
        let at = prioritary_type_present(&q, &e, special)?;
        println!(
            "  e1 = {e1}: N = {} gives {}, N = {} gives {} (general threshold met: {})",
            special - 1,
            if below { "present" } else { "absent" },
            special,
            if at { "present" } else { "absent" },
            threshold == 1
        );
        assert!(at);
        assert!(!below);
    }

    println!("\nFull component list at e1 = 0, E = (0, 1), N = 2:");
    let comps = bn_components(&q, &DivisorClass::two(0, 1), 2)?;
    for c in &comps {
        println!("  {} (codim {}, dim {})", c.description, c.codim, c.dim);
    }

    println!("\nFull component list at e1 = 2, E = (2, 1), N = 4:");
    let comps = bn_components(&q, &DivisorClass::two(2, 1), 4)?;
    for c in &comps {
        println!("  {} (codim {}, dim {})", c.description, c.codim, c.dim);
    }
    assert_eq!(comps.len(), 2);
    let curve = &comps[0];
    assert_eq!(curve.kind, BNKind::CurveType);
    assert_eq!(curve.d, Some(DivisorClass::two(1, 0)));
    assert_eq!((curve.n, curve.gamma_degree, curve.codim), (Some(1), Some(0), 2));
    let prioritary = &comps[1];
    assert_eq!(prioritary.kind, BNKind::PrioritaryType);
    assert_eq!(prioritary.codim, 3);
    println!("\nThe curve type puts 3 of the 4 points on a ruling line; the prioritary");
    println!("type exists only through the special family and sits in codimension 3.");
    Ok(())
}
