//! Surface models: Neron-Severi lattices, intersection pairing, canonical
//! and fiber classes, effectiveness predicates.
//!
//! Four families are supported.
//!
//! * `ProjectivePlane`: NS = Z generated by the line class; a divisor
//!   class is a single degree `d` and `d . d' = d*d'`.
//! * `Quadric`: P1xP1 with classes stored as bidegrees `(d1, d2)`, so
//!   `(d1,d2) . (e1,e2) = d1*e2 + d2*e1`. The fiber class is the fiber of
//!   the first projection, bidegree `(1,0)`, hence `D . f = d2`.
//! * `ProductRuled(g)`: the product of a genus-g curve (g >= 1) and P1,
//!   with classes `a*h + b*f` stored as `(a, b)`, where `h` is a section
//!   and `f` a fiber of the projection to the curve; `h.h = f.f = 0`,
//!   `h.f = 1`, so `D . f = a`.
//! * `NumericalRuled(g, e)`: a ruled surface over a genus-g curve known
//!   only through its numerical invariants, basis `(h, f)` with
//!   `h.h = -e`, `h.f = 1`, `f.f = 0`. The caller must assert that the
//!   surface carries no curve of negative self-intersection; the model
//!   cannot verify that hypothesis because it depends on the bundle
//!   defining the ruling, not on the numerics. Only Euler-characteristic
//!   data is available here, no individual cohomology groups.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so the types are safe to share across threads freely.

use std::fmt;

use crate::arith::{add, mul, neg, sub};
use crate::{Error, Result};

/// Which surface a [`SurfaceModel`] denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    /// The projective plane; NS rank 1.
    ProjectivePlane,
    /// P1xP1; NS rank 2, classes are bidegrees.
    Quadric,
    /// C x P1 for a genus-g curve, g >= 1; NS rank 2, basis (h, f).
    ProductRuled { genus: i64 },
    /// Numerical ruled-surface model; NS rank 2, basis (h, f), h.h = -e.
    NumericalRuled { genus: i64, invariant_e: i64 },
}

/// A surface together with its lattice, canonical class and fiber class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceModel {
    kind: SurfaceKind,
}

/// An integer divisor class in the basis of the surface's NS lattice.
///
/// Length 1 on the plane, length 2 on the ruled models. The derived `Ord`
/// is lexicographic on the coefficients, which is the canonical sort order
/// used by every enumerator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    coeffs: Vec<i64>,
}

/// Numerical invariants (rank, c1, c2) of a coherent sheaf.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChernData {
    pub rank: i64,
    pub c1: DivisorClass,
    pub c2: i64,
}

impl DivisorClass {
    /// Class from raw coefficients. Lattice-rank agreement is checked at
    /// the point of use, not here.
    pub fn new(coeffs: Vec<i64>) -> Self {
        DivisorClass { coeffs }
    }

    /// Rank-1 class (projective plane): a single degree.
    pub fn one(d: i64) -> Self {
        DivisorClass { coeffs: vec![d] }
    }

    /// Rank-2 class: bidegree on the quadric, (h, f) coefficients on the
    /// ruled models.
    pub fn two(a: i64, b: i64) -> Self {
        DivisorClass { coeffs: vec![a, b] }
    }

    /// Parse the CLI form: `"3"` or `"4,3"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        for part in text.split(',') {
            let v: i64 = part.trim().parse().map_err(|_| {
                Error::InvalidInput(format!("cannot parse divisor class component {part:?}"))
            })?;
            coeffs.push(v);
        }
        if coeffs.is_empty() || coeffs.len() > 2 {
            return Err(Error::InvalidInput(format!(
                "divisor class {text:?} must have 1 or 2 components"
            )));
        }
        Ok(DivisorClass { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i]
    }

    /// Coefficientwise checked sum.
    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.zip(other, add)
    }

    /// Coefficientwise checked difference.
    pub fn sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.zip(other, sub)
    }

    /// Checked scalar multiple.
    pub fn scale(&self, k: i64) -> Result<DivisorClass> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            coeffs.push(mul(k, c)?);
        }
        Ok(DivisorClass { coeffs })
    }

    /// Checked negation.
    pub fn negate(&self) -> Result<DivisorClass> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            coeffs.push(neg(c)?);
        }
        Ok(DivisorClass { coeffs })
    }

    /// Swap the two coordinates of a rank-2 class; identity on rank 1.
    pub fn swapped(&self) -> DivisorClass {
        if self.coeffs.len() == 2 {
            DivisorClass::two(self.coeffs[1], self.coeffs[0])
        } else {
            self.clone()
        }
    }

    /// The comma-separated form accepted back by [`DivisorClass::parse`],
    /// e.g. `"-4"` or `"1,0"`. Used for all machine-readable output.
    pub fn plain(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    fn zip(&self, other: &DivisorClass, op: fn(i64, i64) -> Result<i64>) -> Result<DivisorClass> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::DimensionMismatch {
                want: self.coeffs.len(),
                got: other.coeffs.len(),
            });
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (&a, &b) in self.coeffs.iter().zip(&other.coeffs) {
            coeffs.push(op(a, b)?);
        }
        Ok(DivisorClass { coeffs })
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(
                f,
                "({})",
                self.coeffs
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        }
    }
}

impl ChernData {
    pub fn new(rank: i64, c1: DivisorClass, c2: i64) -> Result<Self> {
        if rank < 1 {
            return Err(Error::InvalidRank(rank));
        }
        Ok(ChernData { rank, c1, c2 })
    }
}

impl SurfaceModel {
    /// The projective plane.
    pub fn p2() -> Self {
        SurfaceModel {
            kind: SurfaceKind::ProjectivePlane,
        }
    }

    /// P1xP1.
    pub fn quadric() -> Self {
        SurfaceModel {
            kind: SurfaceKind::Quadric,
        }
    }

    /// The product of a genus-g curve and P1; requires g >= 1 (for g = 0
    /// use [`SurfaceModel::quadric`], whose basis conventions differ).
    pub fn product_ruled(genus: i64) -> Result<Self> {
        if genus < 1 {
            return Err(Error::InvalidInput(format!(
                "product ruled surface requires genus >= 1, got {genus}"
            )));
        }
        Ok(SurfaceModel {
            kind: SurfaceKind::ProductRuled { genus },
        })
    }

    /// Numerical ruled-surface model over a genus-g curve with invariant
    /// e (so the section class h has h.h = -e). The final argument is the
    /// caller's assertion that the surface has no curve of negative
    /// self-intersection; the model is refused without it.
    pub fn numerical_ruled(
        genus: i64,
        invariant_e: i64,
        no_negative_curves_asserted: bool,
    ) -> Result<Self> {
        if genus < 0 {
            return Err(Error::InvalidInput(format!(
                "numerical ruled surface requires genus >= 0, got {genus}"
            )));
        }
        if !no_negative_curves_asserted {
            return Err(Error::InvalidInput(
                "numerical ruled surface requires the caller to assert the absence of curves \
                 of negative self-intersection (spell it assert-no-negative-curves)"
                    .to_string(),
            ));
        }
        Ok(SurfaceModel {
            kind: SurfaceKind::NumericalRuled { genus, invariant_e },
        })
    }

    /// Parse a surface spec string: `p2`, `quadric`, `product:g=2`, or
    /// `ruled:g=1,e=0,assert-no-negative-curves`.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        match spec {
            "p2" => return Ok(SurfaceModel::p2()),
            "quadric" => return Ok(SurfaceModel::quadric()),
            _ => {}
        }
        if let Some(rest) = spec.strip_prefix("product:") {
            let genus = parse_key_int(rest, "g")?;
            return SurfaceModel::product_ruled(genus);
        }
        if let Some(rest) = spec.strip_prefix("ruled:") {
            let mut genus = None;
            let mut e = None;
            let mut asserted = false;
            for part in rest.split(',') {
                let part = part.trim();
                if part == "assert-no-negative-curves" {
                    asserted = true;
                } else if let Some(v) = part.strip_prefix("g=") {
                    genus = Some(parse_int(v)?);
                } else if let Some(v) = part.strip_prefix("e=") {
                    e = Some(parse_int(v)?);
                } else {
                    return Err(Error::InvalidInput(format!(
                        "unrecognized ruled-surface parameter {part:?}"
                    )));
                }
            }
            let genus = genus
                .ok_or_else(|| Error::InvalidInput("ruled surface spec needs g=".to_string()))?;
            let e =
                e.ok_or_else(|| Error::InvalidInput("ruled surface spec needs e=".to_string()))?;
            return SurfaceModel::numerical_ruled(genus, e, asserted);
        }
        Err(Error::InvalidInput(format!(
            "unrecognized surface spec {spec:?}; expected p2, quadric, product:g=G, or \
             ruled:g=G,e=E,assert-no-negative-curves"
        )))
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    /// Rank of the Neron-Severi lattice: 1 on the plane, 2 otherwise.
    pub fn ns_rank(&self) -> usize {
        match self.kind {
            SurfaceKind::ProjectivePlane => 1,
            _ => 2,
        }
    }

    /// chi(O_S): 1 on the rational surfaces, 1 - g on the genus-g ruled
    /// models.
    pub fn chi_o(&self) -> i64 {
        match self.kind {
            SurfaceKind::ProjectivePlane | SurfaceKind::Quadric => 1,
            SurfaceKind::ProductRuled { genus } => 1 - genus,
            SurfaceKind::NumericalRuled { genus, .. } => 1 - genus,
        }
    }

    /// The canonical class K_S in the lattice basis.
    pub fn canonical_class(&self) -> DivisorClass {
        match self.kind {
            SurfaceKind::ProjectivePlane => DivisorClass::one(-3),
            SurfaceKind::Quadric => DivisorClass::two(-2, -2),
            SurfaceKind::ProductRuled { genus } => DivisorClass::two(-2, 2 * genus - 2),
            SurfaceKind::NumericalRuled { genus, invariant_e } => {
                DivisorClass::two(-2, 2 * genus - 2 - invariant_e)
            }
        }
    }

    /// The fiber class f; on the plane, the line class. On the quadric
    /// this is the bidegree-(1,0) fiber of the first projection, so that
    /// `D . f` is the second component of the bidegree.
    pub fn fiber_class(&self) -> DivisorClass {
        match self.kind {
            SurfaceKind::ProjectivePlane => DivisorClass::one(1),
            SurfaceKind::Quadric => DivisorClass::two(1, 0),
            SurfaceKind::ProductRuled { .. } | SurfaceKind::NumericalRuled { .. } => {
                DivisorClass::two(0, 1)
            }
        }
    }

    /// The symmetric bilinear intersection pairing.
    pub fn intersect(&self, a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
        self.check_class(a)?;
        self.check_class(b)?;
        match self.kind {
            SurfaceKind::ProjectivePlane => mul(a.coeff(0), b.coeff(0)),
            SurfaceKind::Quadric | SurfaceKind::ProductRuled { .. } => add(
                mul(a.coeff(0), b.coeff(1))?,
                mul(a.coeff(1), b.coeff(0))?,
            ),
            SurfaceKind::NumericalRuled { invariant_e, .. } => {
                let off = add(
                    mul(a.coeff(0), b.coeff(1))?,
                    mul(a.coeff(1), b.coeff(0))?,
                )?;
                sub(off, mul(invariant_e, mul(a.coeff(0), b.coeff(0))?)?)
            }
        }
    }

    /// D . D.
    pub fn self_intersect(&self, d: &DivisorClass) -> Result<i64> {
        self.intersect(d, d)
    }

    /// Whether the class contains an irreducible curve (and is effective).
    /// Defined on the plane (d >= 1) and the quadric (both components at
    /// least 1, or one of the two rulings (1,0), (0,1)); the ruled models
    /// would need knowledge of the actual surface.
    pub fn is_effective_irreducible(&self, d: &DivisorClass) -> Result<bool> {
        self.check_class(d)?;
        match self.kind {
            SurfaceKind::ProjectivePlane => Ok(d.coeff(0) >= 1),
            SurfaceKind::Quadric => {
                let (a, b) = (d.coeff(0), d.coeff(1));
                Ok((a >= 1 && b >= 1) || (a, b) == (1, 0) || (a, b) == (0, 1))
            }
            _ => Err(Error::UnsupportedSurface("irreducibility testing")),
        }
    }

    /// Parse a divisor class and check it against this surface's rank.
    pub fn parse_class(&self, text: &str) -> Result<DivisorClass> {
        let d = DivisorClass::parse(text)?;
        self.check_class(&d)?;
        Ok(d)
    }

    /// The spec string this model parses from.
    pub fn spec_string(&self) -> String {
        match self.kind {
            SurfaceKind::ProjectivePlane => "p2".to_string(),
            SurfaceKind::Quadric => "quadric".to_string(),
            SurfaceKind::ProductRuled { genus } => format!("product:g={genus}"),
            SurfaceKind::NumericalRuled { genus, invariant_e } => {
                format!("ruled:g={genus},e={invariant_e},assert-no-negative-curves")
            }
        }
    }

    pub(crate) fn check_class(&self, d: &DivisorClass) -> Result<()> {
        if d.len() != self.ns_rank() {
            return Err(Error::DimensionMismatch {
                want: self.ns_rank(),
                got: d.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

fn parse_key_int(text: &str, key: &str) -> Result<i64> {
    let text = text.trim();
    match text.strip_prefix(key).and_then(|r| r.strip_prefix('=')) {
        Some(v) => parse_int(v),
        None => Err(Error::InvalidInput(format!(
            "expected {key}=<integer>, got {text:?}"
        ))),
    }
}

fn parse_int(v: &str) -> Result<i64> {
    v.trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("cannot parse integer {v:?}")))
}
