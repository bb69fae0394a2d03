//! Cohomology of the generic line bundle in a numerical class.
//!
//! "Generic" matters on the product models: for a class a*h + b*f on
//! C x P1 the f-degree-b factor is a generic degree-b bundle on the
//! genus-g curve C, not a fixed one. A generic bundle of degree b has
//! h0 = max(b - g + 1, 0) and h1 = max(g - 1 - b, 0); in particular
//! generic bundles of degree 0 <= b < g have no sections at all, unlike
//! O_C. Everything else is the Kunneth formula over the two factors,
//! with the familiar P1 blocks h0(a) = max(a+1, 0), h1(a) = max(-a-1, 0).
//!
//! On the plane the closed forms are the binomial count for h0 and its
//! Serre dual for h2; h1 always vanishes.
//!
//! The numerical ruled model is rejected: its definition carries only
//! Euler-characteristic data, and individual cohomology groups there
//! depend on the bundle defining the ruling. Callers that need an h1
//! on that model must report it unavailable instead.

use crate::arith::{add, halve, mul};
use crate::surface::{DivisorClass, SurfaceKind, SurfaceModel};
use crate::{Error, Result};

/// Dimensions (h0, h1, h2) of the cohomology of a generic line bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CohomologyTriple {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
}

impl CohomologyTriple {
    /// h0 - h1 + h2.
    pub fn euler(&self) -> i64 {
        self.h0 - self.h1 + self.h2
    }
}

/// (h0, h1, h2) of the generic line bundle of class D.
pub fn line_cohomology(s: &SurfaceModel, d: &DivisorClass) -> Result<CohomologyTriple> {
    s.check_class(d)?;
    match s.kind() {
        SurfaceKind::ProjectivePlane => {
            let deg = d.coeff(0);
            Ok(CohomologyTriple {
                h0: plane_sections(deg)?,
                h1: 0,
                h2: plane_sections(-deg - 3)?,
            })
        }
        SurfaceKind::Quadric => kunneth(p1_block(d.coeff(0))?, p1_block(d.coeff(1))?),
        SurfaceKind::ProductRuled { genus } => {
            kunneth(p1_block(d.coeff(0))?, genus_block(genus, d.coeff(1))?)
        }
        SurfaceKind::NumericalRuled { .. } => {
            Err(Error::UnsupportedSurface("line-bundle cohomology"))
        }
    }
}

/// h1 of the generic line bundle of class D.
pub fn h1_of(s: &SurfaceModel, d: &DivisorClass) -> Result<i64> {
    Ok(line_cohomology(s, d)?.h1)
}

fn plane_sections(deg: i64) -> Result<i64> {
    if deg < 0 {
        return Ok(0);
    }
    halve(mul(add(deg, 1)?, add(deg, 2)?)?, "plane_sections")
}

fn p1_block(deg: i64) -> Result<(i64, i64)> {
    Ok((add(deg, 1)?.max(0), add(-deg, -1)?.max(0)))
}

fn genus_block(genus: i64, deg: i64) -> Result<(i64, i64)> {
    Ok((
        add(deg, 1 - genus)?.max(0),
        add(genus - 1, -deg)?.max(0),
    ))
}

fn kunneth(a: (i64, i64), b: (i64, i64)) -> Result<CohomologyTriple> {
    Ok(CohomologyTriple {
        h0: mul(a.0, b.0)?,
        h1: add(mul(a.0, b.1)?, mul(a.1, b.0)?)?,
        h2: mul(a.1, b.1)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::chi_line_bundle;

    #[test]
    fn plane_triples() {
        let p2 = SurfaceModel::p2();
        assert_eq!(
            line_cohomology(&p2, &DivisorClass::one(-3)).unwrap(),
            CohomologyTriple { h0: 0, h1: 0, h2: 1 }
        );
        assert_eq!(
            line_cohomology(&p2, &DivisorClass::one(4)).unwrap(),
            CohomologyTriple { h0: 15, h1: 0, h2: 0 }
        );
        for d in -12..=12 {
            assert_eq!(h1_of(&p2, &DivisorClass::one(d)).unwrap(), 0);
        }
    }

    #[test]
    fn quadric_triples() {
        let q = SurfaceModel::quadric();
        assert_eq!(
            line_cohomology(&q, &DivisorClass::two(-2, 3)).unwrap(),
            CohomologyTriple { h0: 0, h1: 4, h2: 0 }
        );
        assert_eq!(h1_of(&q, &DivisorClass::two(-6, -4)).unwrap(), 0);
        assert_eq!(h1_of(&q, &DivisorClass::two(-2, 0)).unwrap(), 1);
    }

    #[test]
    fn product_ruled_triples() {
        let s = SurfaceModel::product_ruled(2).unwrap();
        assert_eq!(
            line_cohomology(&s, &DivisorClass::two(1, 2)).unwrap(),
            CohomologyTriple { h0: 2, h1: 0, h2: 0 }
        );
        let low = line_cohomology(&s, &DivisorClass::two(0, 1)).unwrap();
        assert_eq!(low.h0, 0);
    }

    #[test]
    fn numerical_ruled_is_rejected() {
        let s = SurfaceModel::numerical_ruled(1, 0, true).unwrap();
        assert!(matches!(
            line_cohomology(&s, &DivisorClass::two(1, 1)),
            Err(Error::UnsupportedSurface(_))
        ));
    }

    #[test]
    fn euler_characteristic_agrees() {
        let p2 = SurfaceModel::p2();
        for d in -12..=12 {
            let c = DivisorClass::one(d);
            let t = line_cohomology(&p2, &c).unwrap();
            assert_eq!(t.euler(), chi_line_bundle(&p2, &c).unwrap());
        }
        let mut models = vec![SurfaceModel::quadric()];
        for g in 1..=3 {
            models.push(SurfaceModel::product_ruled(g).unwrap());
        }
        for s in models {
            for a in -12..=12 {
                for b in -12..=12 {
                    let c = DivisorClass::two(a, b);
                    let t = line_cohomology(&s, &c).unwrap();
                    assert_eq!(t.euler(), chi_line_bundle(&s, &c).unwrap(), "{s} {c}");
                }
            }
        }
    }

    #[test]
    fn serre_duality_on_the_grid() {
        let mut models = vec![SurfaceModel::p2(), SurfaceModel::quadric()];
        for g in 1..=3 {
            models.push(SurfaceModel::product_ruled(g).unwrap());
        }
        for s in models {
            let k = s.canonical_class();
            let classes: Vec<DivisorClass> = if s.ns_rank() == 1 {
                (-12..=12).map(DivisorClass::one).collect()
            } else {
                let mut v = Vec::new();
                for a in -12..=12 {
                    for b in -12..=12 {
                        v.push(DivisorClass::two(a, b));
                    }
                }
                v
            };
            for c in classes {
                let t = line_cohomology(&s, &c).unwrap();
                let dual = line_cohomology(&s, &k.sub(&c).unwrap()).unwrap();
                assert_eq!(t.h2, dual.h0, "{s} {c}");
                assert_eq!(t.h1, dual.h1, "{s} {c}");
                assert_eq!(t.h0, dual.h2, "{s} {c}");
            }
        }
    }

    #[test]
    fn sections_grow_along_the_fiber_direction() {
        let mut models = vec![SurfaceModel::quadric()];
        for g in 1..=3 {
            models.push(SurfaceModel::product_ruled(g).unwrap());
        }
        for s in models {
            let f = s.fiber_class();
            for a in 0..=8 {
                for b in -8..=8 {
                    let c = DivisorClass::two(a, b);
                    let here = line_cohomology(&s, &c).unwrap().h0;
                    let up = line_cohomology(&s, &c.add(&f).unwrap()).unwrap().h0;
                    assert!(up >= here, "{s} {c}");
                }
            }
        }
    }
}
