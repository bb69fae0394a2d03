//! Components of the stack of rank-2 torsion-free sheaves with fixed
//! Chern data.
//!
//! The component list has two parts. At most one component has prioritary
//! general member, and it exists exactly when a divisibility-and-
//! discriminant test passes ([`prioritary_exists`]); it is generically
//! smooth of stack dimension -chi(E,E), which is frequently negative.
//!
//! The remaining components are indexed by pairs (D, n1): the general
//! member sits in an extension of I_{Z2}(c1 - D) by I_{Z1}(D) with
//! len Z1 = n1, len Z2 = n2, where the pair is admissible exactly when
//!
//! * 2 D.f <= -2 + c1.f (the subsheaf is fiber-negative enough),
//! * n1 >= 0 and n2 := c2 + D.(D - c1) - n1 >= 0,
//! * n1 + n2 <= chi(O(2D - c1)).
//!
//! Each admissible pair contributes exactly one component, of stack
//! dimension -chi(E,E) + chi(O(2D - c1)) - n1 - n2, with generic
//! embedding codimension n2 + h1(O(2D - c1)); its general member fails
//! to be locally free exactly along Z1. The admissible set is infinite
//! (D can march off to fiber-degree minus infinity), so enumeration
//! demands an explicit finite [`Window`] of D coefficients, and
//! [`admissible_region_description`] reports the defining inequalities
//! symbolically with all constants evaluated, plus (on the plane) a
//! threshold below which the region is provably nonempty.
//!
//! Everything is exact integer arithmetic; half-integer comparisons are
//! carried out doubled.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{add, halve, mul, neg, sub};
use crate::cohomology::h1_of;
use crate::euler::{chi_line_bundle, chi_self_pair};
use crate::surface::{ChernData, DivisorClass, SurfaceKind, SurfaceModel};
use crate::{Error, Result};

/// Whether a component's general member is prioritary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TFKind {
    Prioritary,
    Nonprioritary,
}

impl TFKind {
    pub fn label(&self) -> &'static str {
        match self {
            TFKind::Prioritary => "prioritary",
            TFKind::Nonprioritary => "nonprioritary",
        }
    }
}

/// One irreducible component of the stack of rank-2 torsion-free sheaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TFComponent {
    pub kind: TFKind,
    /// Subsheaf twist class D; absent for the prioritary component.
    pub d: Option<DivisorClass>,
    /// Length of Z1 (where the general member is singular); absent for
    /// the prioritary component.
    pub n1: Option<i64>,
    /// Length of Z2 (quotient side), derived as c2 + D.(D-c1) - n1;
    /// absent for the prioritary component.
    pub n2: Option<i64>,
    /// Stack dimension; can be zero or negative.
    pub dimension: i64,
    /// Generic embedding codimension; `None` when the surface model
    /// cannot supply the h1 it needs.
    pub embedding_codim: Option<i64>,
    pub generic_locally_free: bool,
    pub singular_locus_length: i64,
}

/// A finite box of divisor-class coefficients, one closed interval per
/// lattice coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    ranges: Vec<(i64, i64)>,
}

impl Window {
    pub fn new(ranges: Vec<(i64, i64)>) -> Result<Self> {
        if ranges.is_empty() || ranges.len() > 2 {
            return Err(Error::InvalidInput(format!(
                "window must have 1 or 2 coordinate ranges, got {}",
                ranges.len()
            )));
        }
        Ok(Window { ranges })
    }

    /// Parse `"lo..hi"` or `"lo..hi,lo..hi"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut ranges = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            let (lo, hi) = part.split_once("..").ok_or_else(|| {
                Error::InvalidInput(format!("window range {part:?} must look like lo..hi"))
            })?;
            let lo: i64 = lo.trim().parse().map_err(|_| {
                Error::InvalidInput(format!("cannot parse window bound {lo:?}"))
            })?;
            let hi: i64 = hi.trim().parse().map_err(|_| {
                Error::InvalidInput(format!("cannot parse window bound {hi:?}"))
            })?;
            ranges.push((lo, hi));
        }
        Window::new(ranges)
    }

    pub fn rank(&self) -> usize {
        self.ranges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranges.iter().any(|&(lo, hi)| lo > hi)
    }

    /// All classes in the box, in lexicographic coefficient order.
    pub fn classes(&self) -> Vec<DivisorClass> {
        if self.is_empty() {
            return Vec::new();
        }
        match self.ranges.len() {
            1 => (self.ranges[0].0..=self.ranges[0].1)
                .map(DivisorClass::one)
                .collect(),
            _ => {
                let mut out = Vec::new();
                for a in self.ranges[0].0..=self.ranges[0].1 {
                    for b in self.ranges[1].0..=self.ranges[1].1 {
                        out.push(DivisorClass::two(a, b));
                    }
                }
                out
            }
        }
    }

    pub fn contains(&self, d: &DivisorClass) -> bool {
        d.len() == self.ranges.len()
            && d.coeffs()
                .iter()
                .zip(&self.ranges)
                .all(|(&c, &(lo, hi))| lo <= c && c <= hi)
    }

    /// The window with the two coordinate ranges exchanged; identity at
    /// rank 1.
    pub fn swapped(&self) -> Window {
        let mut ranges = self.ranges.clone();
        if ranges.len() == 2 {
            ranges.swap(0, 1);
        }
        Window { ranges }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .ranges
            .iter()
            .map(|(lo, hi)| format!("{lo}..{hi}"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// Whether a prioritary sheaf with the given invariants exists, any rank.
///
/// On the plane the test is 2 r c2 - (r-1) c1^2 >= -d (r-d) with
/// d = (-c1) mod r; on the ruled models it is automatic unless r divides
/// c1.f, in which case it is 2 r c2 >= (r-1) c1^2.
pub fn prioritary_exists(s: &SurfaceModel, chern: &ChernData) -> Result<bool> {
    s.check_class(&chern.c1)?;
    let r = chern.rank;
    let c1f = s.intersect(&chern.c1, &s.fiber_class())?;
    let c1sq = s.self_intersect(&chern.c1)?;
    match s.kind() {
        SurfaceKind::ProjectivePlane => {
            let d = neg(c1f)?.rem_euclid(r);
            let lhs = sub(mul(2, mul(r, chern.c2)?)?, mul(r - 1, c1sq)?)?;
            let rhs = neg(mul(d, sub(r, d)?)?)?;
            Ok(lhs >= rhs)
        }
        _ => {
            if c1f.rem_euclid(r) == 0 {
                Ok(mul(2, mul(r, chern.c2)?)? >= mul(r - 1, c1sq)?)
            } else {
                Ok(true)
            }
        }
    }
}

/// Rank-2 existence test on the ruled models in its parity phrasing:
/// c1.f even demands 4 c2 >= c1^2, c1.f odd puts no condition on c2.
/// Kept as a separate codepath so the two formulations can be compared.
pub fn prioritary_exists_parity(s: &SurfaceModel, chern: &ChernData) -> Result<bool> {
    if chern.rank != 2 {
        return Err(Error::InvalidRank(chern.rank));
    }
    if s.kind() == SurfaceKind::ProjectivePlane {
        return Err(Error::UnsupportedSurface(
            "parity phrasing applies to the ruled models",
        ));
    }
    let c1f = s.intersect(&chern.c1, &s.fiber_class())?;
    if c1f.rem_euclid(2) == 0 {
        Ok(mul(4, chern.c2)? >= s.self_intersect(&chern.c1)?)
    } else {
        Ok(true)
    }
}

/// Why no prioritary sheaf exists, or `None` when one does.
pub fn prioritary_obstruction(s: &SurfaceModel, chern: &ChernData) -> Result<Option<String>> {
    if prioritary_exists(s, chern)? {
        return Ok(None);
    }
    let r = chern.rank;
    let c1sq = s.self_intersect(&chern.c1)?;
    let lhs = sub(mul(2, mul(r, chern.c2)?)?, mul(r - 1, c1sq)?)?;
    let msg = match s.kind() {
        SurfaceKind::ProjectivePlane => {
            let c1f = s.intersect(&chern.c1, &s.fiber_class())?;
            let d = neg(c1f)?.rem_euclid(r);
            let rhs = neg(mul(d, sub(r, d)?)?)?;
            format!(
                "no prioritary sheaf: 2*r*c2 - (r-1)*c1^2 = {lhs} is below the floor \
                 -d*(r-d) = {rhs} (d = {d})"
            )
        }
        _ => {
            let c1f = s.intersect(&chern.c1, &s.fiber_class())?;
            format!(
                "no prioritary sheaf: c1.f = {c1f} is divisible by r = {r} and \
                 2*r*c2 - (r-1)*c1^2 = {lhs} is negative"
            )
        }
    };
    Ok(Some(msg))
}

/// The component with prioritary general member, when it exists (rank 2).
pub fn prioritary_component(s: &SurfaceModel, chern: &ChernData) -> Result<Option<TFComponent>> {
    if chern.rank != 2 {
        return Err(Error::InvalidRank(chern.rank));
    }
    if !prioritary_exists(s, chern)? {
        return Ok(None);
    }
    let dimension = neg(chi_self_pair(s, chern)?)?;
    Ok(Some(TFComponent {
        kind: TFKind::Prioritary,
        d: None,
        n1: None,
        n2: None,
        dimension,
        embedding_codim: Some(0),
        generic_locally_free: true,
        singular_locus_length: 0,
    }))
}

/// c2 + D.(D - c1), the total point count n1 + n2 of the pair (D, n1).
pub(crate) fn pair_point_total(
    s: &SurfaceModel,
    c1: &DivisorClass,
    c2: i64,
    d: &DivisorClass,
) -> Result<i64> {
    add(c2, s.intersect(d, &d.sub(c1)?)?)
}

/// chi(O(2D - c1)), the ceiling on n1 + n2.
pub(crate) fn pair_capacity(s: &SurfaceModel, c1: &DivisorClass, d: &DivisorClass) -> Result<i64> {
    chi_line_bundle(s, &d.scale(2)?.sub(c1)?)
}

/// Whether (D, n1) indexes a component of the rank-2 stack with Chern
/// data (c1, c2).
pub fn nonprioritary_admissible(
    s: &SurfaceModel,
    c1: &DivisorClass,
    c2: i64,
    d: &DivisorClass,
    n1: i64,
) -> Result<bool> {
    s.check_class(c1)?;
    s.check_class(d)?;
    let f = s.fiber_class();
    let fiber_ok = mul(2, s.intersect(d, &f)?)? <= add(-2, s.intersect(c1, &f)?)?;
    if !fiber_ok || n1 < 0 {
        return Ok(false);
    }
    let total = pair_point_total(s, c1, c2, d)?;
    let n2 = sub(total, n1)?;
    if n2 < 0 {
        return Ok(false);
    }
    Ok(total <= pair_capacity(s, c1, d)?)
}

/// Build the component record for an admissible pair (D, n1); rejects
/// inadmissible pairs loudly instead of producing a junk record.
pub(crate) fn build_nonprioritary(
    s: &SurfaceModel,
    c1: &DivisorClass,
    c2: i64,
    d: &DivisorClass,
    n1: i64,
) -> Result<TFComponent> {
    if !nonprioritary_admissible(s, c1, c2, d, n1)? {
        return Err(Error::AdmissibilityViolation(format!(
            "pair (D = {d}, n1 = {n1}) is not admissible for (c1 = {c1}, c2 = {c2}) on {s}"
        )));
    }
    let total = pair_point_total(s, c1, c2, d)?;
    let n2 = sub(total, n1)?;
    let chern = ChernData::new(2, c1.clone(), c2)?;
    let minus_chi = neg(chi_self_pair(s, &chern)?)?;
    let twist = d.scale(2)?.sub(c1)?;
    let dimension = sub(add(minus_chi, chi_line_bundle(s, &twist)?)?, total)?;
    debug_assert_eq!(
        dimension,
        nonprioritary_dimension_alt(s, c1, c2, d)?,
        "dimension closed forms disagree"
    );
    let embedding_codim = match s.kind() {
        SurfaceKind::NumericalRuled { .. } => None,
        _ => Some(add(n2, h1_of(s, &twist)?)?),
    };
    Ok(TFComponent {
        kind: TFKind::Nonprioritary,
        d: Some(d.clone()),
        n1: Some(n1),
        n2: Some(n2),
        dimension,
        embedding_codim,
        generic_locally_free: n1 == 0,
        singular_locus_length: n1,
    })
}

/// The second closed form for the dimension of the (D, n1) components:
/// -chi(E,E) + chi(O(-c1)) + D.(D - c1 - K) - c2. Independent of n1.
pub fn nonprioritary_dimension_alt(
    s: &SurfaceModel,
    c1: &DivisorClass,
    c2: i64,
    d: &DivisorClass,
) -> Result<i64> {
    let chern = ChernData::new(2, c1.clone(), c2)?;
    let minus_chi = neg(chi_self_pair(s, &chern)?)?;
    let base = chi_line_bundle(s, &c1.negate()?)?;
    let k = s.canonical_class();
    let pairing = s.intersect(d, &d.sub(c1)?.sub(&k)?)?;
    sub(add(add(minus_chi, base)?, pairing)?, c2)
}

/// All components indexed by pairs (D, n1) with D inside the window,
/// sorted lexicographically by (D coefficients, n1).
pub fn enumerate_nonprioritary(
    s: &SurfaceModel,
    c1: &DivisorClass,
    c2: i64,
    window: &Window,
) -> Result<Vec<TFComponent>> {
    s.check_class(c1)?;
    if window.rank() != s.ns_rank() {
        return Err(Error::DimensionMismatch {
            want: s.ns_rank(),
            got: window.rank(),
        });
    }
    let mut out = Vec::new();
    for d in window.classes() {
        if !nonprioritary_admissible(s, c1, c2, &d, 0)? {
            continue;
        }
        let total = pair_point_total(s, c1, c2, &d)?;
        for n1 in 0..=total {
            out.push(build_nonprioritary(s, c1, c2, &d, n1)?);
        }
    }
    Ok(out)
}

/// The defining inequalities of the admissible (D, n1) set, with all
/// constants folded in, plus a nonemptiness threshold on the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleRegion {
    /// Solved fiber-degree bound, e.g. `d <= -1` or `d2 <= -1`.
    pub fiber_condition: String,
    /// The window for n1, e.g. `0 <= n <= d^2 + 2`.
    pub count_condition: String,
    /// Point total against capacity, e.g. `d^2 + 2 <= 2*d^2 + 3*d + 1`.
    pub capacity_condition: String,
    /// On the plane: a degree below which the region is provably
    /// nonempty, as `d <= -3`; `None` if no such threshold was found or
    /// the surface has lattice rank 2.
    pub nonempty_hint: Option<String>,
}

impl AdmissibleRegion {
    pub fn lines(&self) -> Vec<String> {
        let mut v = vec![
            self.fiber_condition.clone(),
            self.count_condition.clone(),
            self.capacity_condition.clone(),
        ];
        if let Some(h) = &self.nonempty_hint {
            v.push(format!("nonempty for {h}"));
        }
        v
    }
}

impl fmt::Display for AdmissibleRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.lines().join("\n"))
    }
}

/// Describe the admissible (D, n1) region symbolically.
pub fn admissible_region_description(
    s: &SurfaceModel,
    c1: &DivisorClass,
    c2: i64,
) -> Result<AdmissibleRegion> {
    s.check_class(c1)?;
    let rank = s.ns_rank();
    let vars: &[&str] = if rank == 1 { &["d"] } else { &["d1", "d2"] };
    let d_sym: Vec<Poly> = (0..rank).map(Poly::var).collect();
    let c1_sym = const_class(c1);
    let k_sym = const_class(&s.canonical_class());

    let count = sym_intersect(s, &d_sym, &sym_sub(&d_sym, &c1_sym)?)?.add(&Poly::constant(c2))?;

    let twist = sym_sub(&sym_scale(&d_sym, 2)?, &c1_sym)?;
    let twist_minus_k = sym_sub(&twist, &k_sym)?;
    let cap_doubled = sym_intersect(s, &twist, &twist_minus_k)?
        .add(&Poly::constant(mul(2, s.chi_o())?))?;
    let cap = cap_doubled.halve_exact("capacity polynomial")?;

    let f = s.fiber_class();
    let c1f = s.intersect(c1, &f)?;
    let bound = sub(c1f, 2)?.div_euclid(2);
    let fiber_var = match s.kind() {
        SurfaceKind::ProjectivePlane => "d",
        SurfaceKind::Quadric => "d2",
        _ => "d1",
    };

    let nonempty_hint = if s.kind() == SurfaceKind::ProjectivePlane {
        plane_nonempty_threshold(c1f, bound, &count, &cap)?
    } else {
        None
    };

    Ok(AdmissibleRegion {
        fiber_condition: format!("{fiber_var} <= {bound}"),
        count_condition: format!("0 <= n <= {}", count.render(vars)),
        capacity_condition: format!("{} <= {}", count.render(vars), cap.render(vars)),
        nonempty_hint,
    })
}

/// Largest d0 such that the region is nonempty at every degree <= d0,
/// found by scanning down from the fiber bound. Both the point total and
/// the capacity margin are upward-opening quadratics in d, so once both
/// are nonnegative at some d0 left of both vertices they stay
/// nonnegative further left.
fn plane_nonempty_threshold(
    c1_deg: i64,
    fiber_bound: i64,
    count: &Poly,
    cap: &Poly,
) -> Result<Option<String>> {
    let margin = cap.sub(count)?;
    let vertex_floor = sub(c1_deg, 3)?.div_euclid(2);
    let start = fiber_bound.min(vertex_floor);
    let mut d = start;
    for _ in 0..10_000 {
        if count.eval(&[d])? >= 0 && margin.eval(&[d])? >= 0 {
            return Ok(Some(format!("d <= {d}")));
        }
        d = sub(d, 1)?;
    }
    Ok(None)
}

/// Sparse integer polynomial in at most two variables, used only to
/// print the region inequalities and to scan for nonemptiness.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Poly {
    terms: BTreeMap<(u32, u32), i64>,
}

impl Poly {
    fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    fn constant(c: i64) -> Self {
        let mut p = Poly::zero();
        if c != 0 {
            p.terms.insert((0, 0), c);
        }
        p
    }

    fn var(i: usize) -> Self {
        let mut p = Poly::zero();
        let key = if i == 0 { (1, 0) } else { (0, 1) };
        p.terms.insert(key, 1);
        p
    }

    fn add(&self, other: &Poly) -> Result<Poly> {
        let mut out = self.clone();
        for (&k, &v) in &other.terms {
            let entry = out.terms.entry(k).or_insert(0);
            *entry = add(*entry, v)?;
        }
        out.prune();
        Ok(out)
    }

    fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.scale(-1)?)
    }

    fn scale(&self, k: i64) -> Result<Poly> {
        let mut out = Poly::zero();
        for (&key, &v) in &self.terms {
            let c = mul(k, v)?;
            if c != 0 {
                out.terms.insert(key, c);
            }
        }
        Ok(out)
    }

    fn mul(&self, other: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (&(a1, a2), &va) in &self.terms {
            for (&(b1, b2), &vb) in &other.terms {
                let key = (a1 + b1, a2 + b2);
                let entry = out.terms.entry(key).or_insert(0);
                *entry = add(*entry, mul(va, vb)?)?;
            }
        }
        out.prune();
        Ok(out)
    }

    fn halve_exact(&self, context: &'static str) -> Result<Poly> {
        let mut out = Poly::zero();
        for (&key, &v) in &self.terms {
            out.terms.insert(key, halve(v, context)?);
        }
        Ok(out)
    }

    fn eval(&self, vals: &[i64]) -> Result<i64> {
        let mut acc = 0i64;
        for (&(e1, e2), &c) in &self.terms {
            let mut term = c;
            for _ in 0..e1 {
                term = mul(term, vals[0])?;
            }
            for _ in 0..e2 {
                term = mul(term, *vals.get(1).unwrap_or(&0))?;
            }
            acc = add(acc, term)?;
        }
        Ok(acc)
    }

    fn prune(&mut self) {
        self.terms.retain(|_, v| *v != 0);
    }

    fn render(&self, vars: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut items: Vec<(&(u32, u32), &i64)> = self.terms.iter().collect();
        items.sort_by(|a, b| {
            let ta = a.0 .0 + a.0 .1;
            let tb = b.0 .0 + b.0 .1;
            tb.cmp(&ta).then(b.0 .0.cmp(&a.0 .0))
        });
        let mut out = String::new();
        for (i, (&(e1, e2), &c)) in items.into_iter().enumerate() {
            let mut pieces: Vec<String> = Vec::new();
            for (e, v) in [(e1, vars[0]), (e2, vars.get(1).copied().unwrap_or("_"))] {
                match e {
                    0 => {}
                    1 => pieces.push(v.to_string()),
                    _ => pieces.push(format!("{v}^{e}")),
                }
            }
            let mag = c.unsigned_abs();
            let body = if pieces.is_empty() {
                mag.to_string()
            } else if mag == 1 {
                pieces.join("*")
            } else {
                format!("{}*{}", mag, pieces.join("*"))
            };
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

fn const_class(d: &DivisorClass) -> Vec<Poly> {
    d.coeffs().iter().map(|&c| Poly::constant(c)).collect()
}

fn sym_sub(a: &[Poly], b: &[Poly]) -> Result<Vec<Poly>> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

fn sym_scale(a: &[Poly], k: i64) -> Result<Vec<Poly>> {
    a.iter().map(|x| x.scale(k)).collect()
}

fn sym_intersect(s: &SurfaceModel, a: &[Poly], b: &[Poly]) -> Result<Poly> {
    match s.kind() {
        SurfaceKind::ProjectivePlane => a[0].mul(&b[0]),
        SurfaceKind::Quadric | SurfaceKind::ProductRuled { .. } => {
            a[0].mul(&b[1])?.add(&a[1].mul(&b[0])?)
        }
        SurfaceKind::NumericalRuled { invariant_e, .. } => {
            let off = a[0].mul(&b[1])?.add(&a[1].mul(&b[0])?)?;
            off.sub(&a[0].mul(&b[0])?.scale(invariant_e)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn models() -> Vec<SurfaceModel> {
        vec![
            SurfaceModel::p2(),
            SurfaceModel::quadric(),
            SurfaceModel::product_ruled(2).unwrap(),
            SurfaceModel::numerical_ruled(1, -1, true).unwrap(),
        ]
    }

    fn random_class(s: &SurfaceModel, rng: &mut ChaCha8Rng, bound: i64) -> DivisorClass {
        let mut coeffs = Vec::new();
        for _ in 0..s.ns_rank() {
            coeffs.push(rng.gen_range(-bound..=bound));
        }
        DivisorClass::new(coeffs)
    }

    #[test]
    fn prioritary_existence_cases() {
        let p2 = SurfaceModel::p2();
        assert!(
            prioritary_exists(&p2, &ChernData::new(2, DivisorClass::one(1), 0).unwrap()).unwrap()
        );
        assert!(
            prioritary_exists(&p2, &ChernData::new(2, DivisorClass::one(0), 1).unwrap()).unwrap()
        );
        assert!(
            !prioritary_exists(&p2, &ChernData::new(2, DivisorClass::one(0), -1).unwrap())
                .unwrap()
        );
        let q = SurfaceModel::quadric();
        assert!(
            !prioritary_exists(&q, &ChernData::new(2, DivisorClass::two(0, 0), -1).unwrap())
                .unwrap()
        );
        let pr = SurfaceModel::product_ruled(1).unwrap();
        assert!(
            prioritary_exists(&pr, &ChernData::new(2, DivisorClass::two(1, 1), -7).unwrap())
                .unwrap()
        );
    }

    #[test]
    fn parity_codepath_agrees_on_ruled_models() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for s in models().into_iter().skip(1) {
            for _ in 0..2000 {
                let chern =
                    ChernData::new(2, random_class(&s, &mut rng, 10), rng.gen_range(-10..=10))
                        .unwrap();
                assert_eq!(
                    prioritary_exists(&s, &chern).unwrap(),
                    prioritary_exists_parity(&s, &chern).unwrap(),
                    "{s} {:?}",
                    chern
                );
            }
        }
    }

    #[test]
    fn prioritary_component_cases() {
        let p2 = SurfaceModel::p2();
        let c = prioritary_component(&p2, &ChernData::new(2, DivisorClass::one(0), 1).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(c.kind, TFKind::Prioritary);
        assert_eq!(c.dimension, 0);
        assert_eq!(c.embedding_codim, Some(0));
        assert!(c.generic_locally_free);
        assert!(prioritary_component(
            &p2,
            &ChernData::new(2, DivisorClass::one(0), -1).unwrap()
        )
        .unwrap()
        .is_none());
        let q = SurfaceModel::quadric();
        let c = prioritary_component(&q, &ChernData::new(2, DivisorClass::two(1, 1), 0).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(c.dimension, -6);
    }

    #[test]
    fn obstruction_matches_existence() {
        let p2 = SurfaceModel::p2();
        assert!(prioritary_obstruction(
            &p2,
            &ChernData::new(2, DivisorClass::one(0), 1).unwrap()
        )
        .unwrap()
        .is_none());
        let reason = prioritary_obstruction(
            &p2,
            &ChernData::new(2, DivisorClass::one(0), -1).unwrap(),
        )
        .unwrap()
        .unwrap();
        assert!(reason.contains("no prioritary sheaf"));
    }

    #[test]
    fn admissibility_cases() {
        let p2 = SurfaceModel::p2();
        let c1 = DivisorClass::one(0);
        assert!(
            nonprioritary_admissible(&p2, &c1, 2, &DivisorClass::one(-4), 5).unwrap()
        );
        assert!(
            !nonprioritary_admissible(&p2, &c1, 2, &DivisorClass::one(-1), 0).unwrap()
        );
        let q = SurfaceModel::quadric();
        assert!(nonprioritary_admissible(
            &q,
            &DivisorClass::two(4, 3),
            4,
            &DivisorClass::two(1, 0),
            1
        )
        .unwrap());
    }

    #[test]
    fn enumerate_plane_example() {
        let p2 = SurfaceModel::p2();
        let comps = enumerate_nonprioritary(
            &p2,
            &DivisorClass::one(0),
            2,
            &Window::new(vec![(-4, -1)]).unwrap(),
        )
        .unwrap();
        assert_eq!(comps.len(), 19);
        for (i, c) in comps.iter().enumerate() {
            assert_eq!(c.d, Some(DivisorClass::one(-4)));
            assert_eq!(c.n1, Some(i as i64));
            assert_eq!(c.n2, Some(18 - i as i64));
            assert_eq!(c.dimension, 7);
            assert_eq!(c.embedding_codim, Some(18 - i as i64));
            assert_eq!(c.generic_locally_free, i == 0);
            assert_eq!(c.singular_locus_length, i as i64);
        }
    }

    #[test]
    fn enumerate_quadric_square_window() {
        let q = SurfaceModel::quadric();
        let comps = enumerate_nonprioritary(
            &q,
            &DivisorClass::two(0, 0),
            0,
            &Window::new(vec![(-3, 3), (-3, 3)]).unwrap(),
        )
        .unwrap();
        assert_eq!(comps.len(), 54);
        let mut per_class: BTreeMap<DivisorClass, i64> = BTreeMap::new();
        for c in &comps {
            *per_class.entry(c.d.clone().unwrap()).or_insert(0) += 1;
        }
        let expected: BTreeMap<DivisorClass, i64> = [
            (DivisorClass::two(-3, -3), 19),
            (DivisorClass::two(-3, -2), 13),
            (DivisorClass::two(-2, -3), 13),
            (DivisorClass::two(-2, -2), 9),
        ]
        .into_iter()
        .collect();
        assert_eq!(per_class, expected);
    }

    #[test]
    fn enumerate_empty_window() {
        for s in models() {
            let c1 = if s.ns_rank() == 1 {
                DivisorClass::one(0)
            } else {
                DivisorClass::two(0, 0)
            };
            let w = if s.ns_rank() == 1 {
                Window::new(vec![(1, 0)]).unwrap()
            } else {
                Window::new(vec![(1, 0), (0, 0)]).unwrap()
            };
            assert!(enumerate_nonprioritary(&s, &c1, 3, &w).unwrap().is_empty());
        }
    }

    #[test]
    fn enumerate_is_sorted_and_deterministic() {
        let q = SurfaceModel::quadric();
        let c1 = DivisorClass::two(1, 1);
        let w = Window::new(vec![(-4, 4), (-4, 4)]).unwrap();
        let a = enumerate_nonprioritary(&q, &c1, 3, &w).unwrap();
        let b = enumerate_nonprioritary(&q, &c1, 3, &w).unwrap();
        assert_eq!(a, b);
        let keys: Vec<(DivisorClass, i64)> = a
            .iter()
            .map(|c| (c.d.clone().unwrap(), c.n1.unwrap()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn dimension_forms_agree_and_dominate_prioritary() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for s in models() {
            for _ in 0..40 {
                let c1 = random_class(&s, &mut rng, 4);
                let c2 = rng.gen_range(-4..=8);
                let w = if s.ns_rank() == 1 {
                    Window::new(vec![(-8, 8)]).unwrap()
                } else {
                    Window::new(vec![(-8, 8), (-8, 8)]).unwrap()
                };
                let chern = ChernData::new(2, c1.clone(), c2).unwrap();
                let prio = prioritary_component(&s, &chern).unwrap();
                for comp in enumerate_nonprioritary(&s, &c1, c2, &w).unwrap() {
                    let alt =
                        nonprioritary_dimension_alt(&s, &c1, c2, comp.d.as_ref().unwrap())
                            .unwrap();
                    assert_eq!(comp.dimension, alt, "{s}");
                    if let Some(p) = &prio {
                        assert!(comp.dimension >= p.dimension, "{s}");
                    }
                }
            }
        }
    }

    #[test]
    fn numerical_ruled_has_no_embedding_codim() {
        let s = SurfaceModel::numerical_ruled(1, 0, true).unwrap();
        let c1 = DivisorClass::two(0, 0);
        let w = Window::new(vec![(-4, 4), (-4, 4)]).unwrap();
        let comps = enumerate_nonprioritary(&s, &c1, 2, &w).unwrap();
        assert!(!comps.is_empty());
        for c in comps {
            assert_eq!(c.embedding_codim, None);
            assert_eq!(c.kind.label(), "nonprioritary");
        }
    }

    #[test]
    fn region_strings_on_the_plane() {
        let p2 = SurfaceModel::p2();
        let r = admissible_region_description(&p2, &DivisorClass::one(0), 2).unwrap();
        assert_eq!(r.fiber_condition, "d <= -1");
        assert_eq!(r.count_condition, "0 <= n <= d^2 + 2");
        assert_eq!(r.capacity_condition, "d^2 + 2 <= 2*d^2 + 3*d + 1");
        assert_eq!(r.nonempty_hint, Some("d <= -4".to_string()));

        let r = admissible_region_description(&p2, &DivisorClass::one(0), 0).unwrap();
        assert_eq!(r.nonempty_hint, Some("d <= -3".to_string()));
    }

    #[test]
    fn region_strings_on_the_quadric() {
        let q = SurfaceModel::quadric();
        let r = admissible_region_description(&q, &DivisorClass::two(0, 0), 0).unwrap();
        assert_eq!(r.fiber_condition, "d2 <= -1");
        assert_eq!(r.count_condition, "0 <= n <= 2*d1*d2");
        assert_eq!(
            r.capacity_condition,
            "2*d1*d2 <= 4*d1*d2 + 2*d1 + 2*d2 + 1"
        );
        assert_eq!(r.nonempty_hint, None);
    }

    #[test]
    fn region_polynomials_match_direct_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for s in models() {
            for _ in 0..60 {
                let c1 = random_class(&s, &mut rng, 5);
                let c2 = rng.gen_range(-5..=5);
                let rank = s.ns_rank();
                let d_sym: Vec<Poly> = (0..rank).map(Poly::var).collect();
                let c1_sym = const_class(&c1);
                let count = sym_intersect(&s, &d_sym, &sym_sub(&d_sym, &c1_sym).unwrap())
                    .unwrap()
                    .add(&Poly::constant(c2))
                    .unwrap();
                let twist = sym_sub(&sym_scale(&d_sym, 2).unwrap(), &c1_sym).unwrap();
                let tmk = sym_sub(&twist, &const_class(&s.canonical_class())).unwrap();
                let cap = sym_intersect(&s, &twist, &tmk)
                    .unwrap()
                    .add(&Poly::constant(2 * s.chi_o()))
                    .unwrap()
                    .halve_exact("test capacity")
                    .unwrap();
                for _ in 0..20 {
                    let d = random_class(&s, &mut rng, 6);
                    assert_eq!(
                        count.eval(d.coeffs()).unwrap(),
                        pair_point_total(&s, &c1, c2, &d).unwrap()
                    );
                    assert_eq!(
                        cap.eval(d.coeffs()).unwrap(),
                        pair_capacity(&s, &c1, &d).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn window_parsing() {
        let w = Window::parse("-3..3,-2..2").unwrap();
        assert_eq!(w.rank(), 2);
        assert_eq!(w.to_string(), "-3..3,-2..2");
        assert!(w.contains(&DivisorClass::two(0, -2)));
        assert!(!w.contains(&DivisorClass::two(0, 3)));
        assert_eq!(w.classes().len(), 35);
        let w = Window::parse("-9..9").unwrap();
        assert_eq!(w.rank(), 1);
        assert_eq!(w.classes().len(), 19);
        assert!(Window::parse("1..2,3..4,5..6").is_err());
        assert!(Window::parse("nope").is_err());
        assert!(Window::parse("1...3").is_err());
    }

    #[test]
    fn window_classes_are_lex_sorted() {
        let w = Window::parse("-2..1,-1..1").unwrap();
        let classes = w.classes();
        let mut sorted = classes.clone();
        sorted.sort();
        assert_eq!(classes, sorted);
    }

    #[test]
    fn build_rejects_inadmissible_pairs() {
        let p2 = SurfaceModel::p2();
        let err = build_nonprioritary(&p2, &DivisorClass::one(0), 2, &DivisorClass::one(-1), 0)
            .unwrap_err();
        assert!(matches!(err, Error::AdmissibilityViolation(_)));
        assert_eq!(err.exit_code(), 4);
    }
}
