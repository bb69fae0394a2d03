//! Independent verification machinery.
//!
//! Nothing in this module trusts the closed forms elsewhere in the
//! crate. It checks them from below, with exact linear algebra over the
//! rationals:
//!
//! * [`hilbert_function`] evaluates the monomial basis of H0(O(E)) at an
//!   explicit point configuration, computes the exact rank of the
//!   evaluation matrix by fraction-free elimination over big integers,
//!   and reads off h0 and h1 of the twisted ideal sheaf. A predicted
//!   Brill-Noether component either shows its extra section here or the
//!   prediction is wrong.
//! * [`sample_component_configuration`] draws the witness: a random
//!   curve in |D| with exact rational coefficients, points on it, and
//!   free points beside it. The on-curve points must represent a
//!   specific divisor class on the curve. When the curve-part degree
//!   meets the genus cap that class is generic and parametrized points
//!   suffice; below the cap the points are cut out by an explicit
//!   auxiliary curve, built from pieces that each leave exactly one
//!   intersection root to solve, so every coordinate stays rational.
//!   Same seed, same configuration, every run.
//! * [`split_bundle_chern`] and [`chi_pair_split`] evaluate Euler
//!   pairings of direct sums of line bundles the slow way, term by term,
//!   which is the ground truth the closed-form pairing is validated
//!   against.
//! * [`cross_ruling_diagnostic`] runs the quadric enumeration with each
//!   ruling cast as the fiber and reports how the two component lists
//!   line up. It gathers evidence and judges nothing.
//!
//! Point coordinates live in a single affine chart and are drawn as
//! small integers, so matrix entries stay small and elimination stays
//! fast; everything downstream of the draw is exact.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{add, halve, sub};
use crate::bn::{BNComponent, BNKind};
use crate::euler::chi_line_bundle;
use crate::surface::{ChernData, DivisorClass, SurfaceKind, SurfaceModel};
use crate::tf::{enumerate_nonprioritary, TFComponent, Window};
use crate::{Error, Result};

const COORD_BOUND: i64 = 50;
const PARAM_BOUND: i64 = 60;
const CURVE_COEFF_BOUND: i64 = 9;
const MAP_COEFF_BOUND: i64 = 5;
const CURVE_ATTEMPTS: u32 = 60;
const PIECE_ATTEMPTS: u32 = 200;
const POINT_ATTEMPTS: u32 = 4000;

/// An exact rational point, as affine chart coordinates: (x, y) on the
/// plane, (s, t) on the quadric.
pub type RationalPoint = (BigRational, BigRational);

/// How a configuration splits between free points and points on a curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSplit {
    pub n_free: i64,
    pub n_on_curve: i64,
    pub curve_class: DivisorClass,
    /// Coefficients of the curve equation in the monomial basis of the
    /// curve class (see [`monomial_basis`]).
    pub curve_coefficients: Vec<BigRational>,
}

/// A finite list of distinct rational points, optionally split into
/// on-curve and free parts. The first `n_on_curve` points lie on the
/// curve; the rest are free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    pub points: Vec<RationalPoint>,
    pub split: Option<CurveSplit>,
}

/// Exact section counts of a twisted ideal sheaf I_X(E).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HilbertReport {
    /// h0(I_X(E)) = h0(O(E)) - rank.
    pub h0_ideal: i64,
    /// h1(I_X(E)) = N - rank.
    pub h1_ideal: i64,
    /// h1 of a fully general configuration of the same length,
    /// max(0, N - chi(O(E))).
    pub expected_h1: i64,
    /// Rank of the N x h0(O(E)) evaluation matrix.
    pub rank: i64,
}

/// Exponent pairs of the monomial basis of H0(O_S(E)) in the affine
/// chart: on the plane all (i, j) with i + j <= e, listed by total
/// degree and then by descending i (1, x, y, x^2, x*y, y^2, ...); on
/// the quadric all (i, j) with i <= e1, j <= e2, listed i-major.
pub fn monomial_basis(s: &SurfaceModel, e: &DivisorClass) -> Result<Vec<(i64, i64)>> {
    s.check_class(e)?;
    if e.coeffs().iter().any(|&c| c < 0) {
        return Err(Error::ENotEffective(format!(
            "class {e} has no sections to index"
        )));
    }
    match s.kind() {
        SurfaceKind::ProjectivePlane => {
            let deg = e.coeff(0);
            let mut out = Vec::new();
            for total in 0..=deg {
                for i in (0..=total).rev() {
                    out.push((i, total - i));
                }
            }
            Ok(out)
        }
        SurfaceKind::Quadric => {
            let (e1, e2) = (e.coeff(0), e.coeff(1));
            let mut out = Vec::new();
            for i in 0..=e1 {
                for j in 0..=e2 {
                    out.push((i, j));
                }
            }
            Ok(out)
        }
        _ => Err(Error::UnsupportedSurface(
            "monomial bases exist on the plane and the quadric",
        )),
    }
}

fn monomial_value(point: &RationalPoint, exps: (i64, i64)) -> BigRational {
    let mut v = BigRational::one();
    for _ in 0..exps.0 {
        v *= &point.0;
    }
    for _ in 0..exps.1 {
        v *= &point.1;
    }
    v
}

fn evaluate_in_basis(
    basis: &[(i64, i64)],
    coeffs: &[BigRational],
    point: &RationalPoint,
) -> BigRational {
    let mut acc = BigRational::zero();
    for (exps, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            acc += c * monomial_value(point, *exps);
        }
    }
    acc
}

/// Exact section counts of I_X(E) for an explicit configuration X.
pub fn hilbert_function(
    s: &SurfaceModel,
    e: &DivisorClass,
    config: &PointConfiguration,
) -> Result<HilbertReport> {
    let basis = monomial_basis(s, e)?;
    let n = config.points.len() as i64;
    let mut seen = HashSet::new();
    for p in &config.points {
        if !seen.insert(p.clone()) {
            return Err(Error::DegenerateInput(
                "configuration contains a duplicate point".to_string(),
            ));
        }
    }
    if let Some(split) = &config.split {
        if split.n_free < 0 || split.n_on_curve < 0 {
            return Err(Error::DegenerateInput(
                "negative count in the curve split".to_string(),
            ));
        }
        if add(split.n_free, split.n_on_curve)? != n {
            return Err(Error::DegenerateInput(format!(
                "curve split {} + {} does not cover {n} points",
                split.n_free, split.n_on_curve
            )));
        }
        let curve_basis = monomial_basis(s, &split.curve_class)?;
        if curve_basis.len() != split.curve_coefficients.len() {
            return Err(Error::DimensionMismatch {
                want: curve_basis.len(),
                got: split.curve_coefficients.len(),
            });
        }
        for p in config.points.iter().take(split.n_on_curve as usize) {
            if !evaluate_in_basis(&curve_basis, &split.curve_coefficients, p).is_zero() {
                return Err(Error::DegenerateInput(
                    "a point marked on-curve misses the curve".to_string(),
                ));
            }
        }
    }
    let rows: Vec<Vec<BigRational>> = config
        .points
        .iter()
        .map(|p| basis.iter().map(|&m| monomial_value(p, m)).collect())
        .collect();
    let rank = rational_rank(&rows) as i64;
    let h0 = basis.len() as i64;
    let chi = chi_line_bundle(s, e)?;
    debug_assert_eq!(h0, chi, "section count differs from chi on {s}");
    Ok(HilbertReport {
        h0_ideal: sub(h0, rank)?,
        h1_ideal: sub(n, rank)?,
        expected_h1: sub(n, chi)?.max(0),
        rank,
    })
}

/// Exact rank of a rational matrix: rows are scaled integral, then
/// reduced by fraction-free (Bareiss) elimination over big integers.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for v in row {
                lcm = lcm.lcm(v.denom());
            }
            row.iter().map(|v| (v * &lcm).to_integer()).collect()
        })
        .collect();
    let rows_n = m.len();
    if rows_n == 0 {
        return 0;
    }
    let cols_n = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut col = 0;
    while rank < rows_n && col < cols_n {
        let pivot = (rank..rows_n).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows_n {
            for c in col + 1..cols_n {
                let num = &m[r][c] * &m[rank][col] - &m[r][col] * &m[rank][c];
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        col += 1;
    }
    rank
}

/// Basis of the right nullspace of a rational matrix, via Gauss-Jordan.
fn rational_nullspace(rows: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut().skip(col) {
            let scaled = &*v * &inv;
            *v = scaled;
        }
        let pivot_row = m[row].clone();
        for (r, current) in m.iter_mut().enumerate() {
            if r != row && !current[col].is_zero() {
                let factor = current[col].clone();
                for (v, pv) in current.iter_mut().zip(&pivot_row).skip(col) {
                    let delta = &factor * pv;
                    *v -= delta;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let pivot_set: HashSet<usize> = pivot_cols.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Scale a rational vector to a primitive integer vector with positive
/// leading entry, for deterministic output.
fn normalize_vector(v: &[BigRational]) -> Vec<BigRational> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() {
        gcd = BigInt::one();
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            gcd = -gcd;
        }
    }
    ints.iter()
        .map(|x| BigRational::from_integer(x / &gcd))
        .collect()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn eval_int_poly(coeffs: &[i64], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for &c in coeffs.iter().rev() {
        acc = acc * x + rat(c);
    }
    acc
}

/// Whether two integer polynomials (ascending coefficients) are coprime,
/// by the Euclidean algorithm over the rationals.
fn coprime_polys(a: &[i64], b: &[i64]) -> bool {
    fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
        while v.last().is_some_and(|x| x.is_zero()) {
            v.pop();
        }
        v
    }
    fn rem(mut a: Vec<BigRational>, b: &[BigRational]) -> Vec<BigRational> {
        let db = b.len() - 1;
        let lead = b[db].clone();
        while a.len() > db {
            let da = a.len() - 1;
            let factor = &a[da] / &lead;
            for i in 0..=db {
                let delta = &factor * &b[i];
                a[da - db + i] -= delta;
            }
            a = trim(a);
            if a.is_empty() {
                break;
            }
        }
        a
    }
    let mut p = trim(a.iter().map(|&c| rat(c)).collect());
    let mut q = trim(b.iter().map(|&c| rat(c)).collect());
    if p.is_empty() || q.is_empty() {
        return false;
    }
    while !q.is_empty() {
        if q.len() == 1 {
            return true;
        }
        let r = rem(p, &q);
        p = q;
        q = r;
    }
    p.len() == 1
}

fn draw_nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

fn draw_poly(rng: &mut ChaCha8Rng, degree: i64, bound: i64) -> Vec<i64> {
    let mut coeffs: Vec<i64> = (0..degree).map(|_| rng.gen_range(-bound..=bound)).collect();
    coeffs.push(draw_nonzero(rng, bound));
    coeffs
}

struct SampledCurve {
    coefficients: Vec<BigRational>,
    points: Vec<RationalPoint>,
}

fn draw_distinct_params(
    rng: &mut ChaCha8Rng,
    count: usize,
    reject: impl Fn(&BigRational) -> bool,
) -> Result<Vec<BigRational>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count {
        if tries >= POINT_ATTEMPTS {
            return Err(Error::SamplingFailure {
                what: "distinct curve parameters",
                tries,
            });
        }
        tries += 1;
        let t = rat(rng.gen_range(-PARAM_BOUND..=PARAM_BOUND));
        if reject(&t) || !seen.insert(t.clone()) {
            continue;
        }
        out.push(t);
    }
    Ok(out)
}

fn place_in_basis(
    basis: &[(i64, i64)],
    entries: &[((i64, i64), BigRational)],
) -> Result<Vec<BigRational>> {
    let mut out = vec![BigRational::zero(); basis.len()];
    for (exps, value) in entries {
        let idx = basis.iter().position(|m| m == exps).ok_or_else(|| {
            Error::DegenerateInput(format!("monomial {exps:?} outside the curve basis"))
        })?;
        out[idx] = value.clone();
    }
    Ok(out)
}

fn sample_plane_curve(
    s: &SurfaceModel,
    degree: i64,
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Result<SampledCurve> {
    let basis = monomial_basis(s, &DivisorClass::one(degree))?;
    if degree == 1 {
        let a = rng.gen_range(-CURVE_COEFF_BOUND..=CURVE_COEFF_BOUND);
        let b = if a == 0 {
            draw_nonzero(rng, CURVE_COEFF_BOUND)
        } else {
            rng.gen_range(-CURVE_COEFF_BOUND..=CURVE_COEFF_BOUND)
        };
        let c = rng.gen_range(-CURVE_COEFF_BOUND..=CURVE_COEFF_BOUND);
        let coefficients =
            place_in_basis(&basis, &[((0, 0), rat(c)), ((1, 0), rat(a)), ((0, 1), rat(b))])?;
        let points = if b != 0 {
            draw_distinct_params(rng, count, |_| false)?
                .into_iter()
                .map(|t| {
                    let y = -(rat(a) * &t + rat(c)) / rat(b);
                    (t, y)
                })
                .collect()
        } else {
            let x = -rat(c) / rat(a);
            draw_distinct_params(rng, count, |_| false)?
                .into_iter()
                .map(|t| (x.clone(), t))
                .collect()
        };
        return Ok(SampledCurve {
            coefficients,
            points,
        });
    }
    let curve = draw_graph_plane_curve(s, degree, rng)?;
    let points = draw_distinct_params(rng, count, |t| eval_int_poly(&curve.a, t).is_zero())?
        .into_iter()
        .map(|t| plane_graph_point(&curve, &t))
        .collect();
    Ok(SampledCurve {
        coefficients: curve.coefficients,
        points,
    })
}

/// A plane curve of the form A(x) y + B(x) with deg A = d - 1 and
/// deg B = d. Its affine points form the graph y = -B(x)/A(x), so the
/// curve is smooth in the chart and rationally parametrized by x.
struct GraphPlaneCurve {
    a: Vec<i64>,
    b: Vec<i64>,
    coefficients: Vec<BigRational>,
}

fn draw_graph_plane_curve(
    s: &SurfaceModel,
    degree: i64,
    rng: &mut ChaCha8Rng,
) -> Result<GraphPlaneCurve> {
    let basis = monomial_basis(s, &DivisorClass::one(degree))?;
    let a = draw_poly(rng, degree - 1, CURVE_COEFF_BOUND);
    let b = draw_poly(rng, degree, CURVE_COEFF_BOUND);
    if !coprime_polys(&a, &b) {
        return Err(Error::SamplingFailure {
            what: "coprime curve equation",
            tries: 1,
        });
    }
    let mut entries: Vec<((i64, i64), BigRational)> = Vec::new();
    for (i, &c) in a.iter().enumerate() {
        entries.push(((i as i64, 1), rat(c)));
    }
    for (i, &c) in b.iter().enumerate() {
        entries.push(((i as i64, 0), rat(c)));
    }
    let coefficients = place_in_basis(&basis, &entries)?;
    Ok(GraphPlaneCurve { a, b, coefficients })
}

fn plane_graph_point(curve: &GraphPlaneCurve, t: &BigRational) -> RationalPoint {
    let y = -eval_int_poly(&curve.b, t) / eval_int_poly(&curve.a, t);
    (t.clone(), y)
}

/// On-curve points of a plane cubic component whose class constraint is
/// binding: the points are cut out by `lines` chords plus `gamma` loose
/// parameters. Each chord passes through two sampled curve points; the
/// third intersection with the cubic is the remaining root of a cubic
/// with two known rational roots, hence rational.
fn sample_plane_linked(
    s: &SurfaceModel,
    lines: i64,
    gamma: i64,
    rng: &mut ChaCha8Rng,
) -> Result<SampledCurve> {
    let curve = draw_graph_plane_curve(s, 3, rng)?;
    let a2 = rat(curve.a[2]);
    let a1 = rat(curve.a[1]);
    let b3 = rat(curve.b[3]);
    let b2 = rat(curve.b[2]);
    let mut used: HashSet<BigRational> = HashSet::new();
    let mut points: Vec<RationalPoint> = Vec::new();
    let fresh = |rng: &mut ChaCha8Rng, used: &HashSet<BigRational>, curve: &GraphPlaneCurve| {
        let t = rat(rng.gen_range(-PARAM_BOUND..=PARAM_BOUND));
        if used.contains(&t) || eval_int_poly(&curve.a, &t).is_zero() {
            None
        } else {
            Some(t)
        }
    };
    for _ in 0..lines {
        let mut placed = false;
        for _ in 0..PIECE_ATTEMPTS {
            let Some(t1) = fresh(rng, &used, &curve) else {
                continue;
            };
            let Some(t2) = fresh(rng, &used, &curve) else {
                continue;
            };
            if t1 == t2 {
                continue;
            }
            let p1 = plane_graph_point(&curve, &t1);
            let p2 = plane_graph_point(&curve, &t2);
            let alpha = &p2.1 - &p1.1;
            let beta = &t1 - &t2;
            let delta = -(&alpha * &t1 + &beta * &p1.1);
            let lead = &alpha * &a2 - &beta * &b3;
            if lead.is_zero() {
                continue;
            }
            let quad = &alpha * &a1 - &beta * &b2 + &delta * &a2;
            let t3 = -quad / lead - &t1 - &t2;
            if t3 == t1 || t3 == t2 || used.contains(&t3) {
                continue;
            }
            debug_assert!(!eval_int_poly(&curve.a, &t3).is_zero());
            let p3 = plane_graph_point(&curve, &t3);
            debug_assert!((&alpha * &p3.0 + &beta * &p3.1 + &delta).is_zero());
            used.insert(t1);
            used.insert(t2);
            used.insert(t3);
            points.push(p1);
            points.push(p2);
            points.push(p3);
            placed = true;
            break;
        }
        if !placed {
            return Err(Error::SamplingFailure {
                what: "chord through fresh rational curve points",
                tries: PIECE_ATTEMPTS,
            });
        }
    }
    for _ in 0..gamma {
        let mut placed = false;
        for _ in 0..PIECE_ATTEMPTS {
            let Some(t) = fresh(rng, &used, &curve) else {
                continue;
            };
            points.push(plane_graph_point(&curve, &t));
            used.insert(t);
            placed = true;
            break;
        }
        if !placed {
            return Err(Error::SamplingFailure {
                what: "loose rational curve point",
                tries: PIECE_ATTEMPTS,
            });
        }
    }
    Ok(SampledCurve {
        coefficients: curve.coefficients,
        points,
    })
}

fn sample_quadric_curve(
    s: &SurfaceModel,
    d: &DivisorClass,
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Result<SampledCurve> {
    let (d1, d2) = (d.coeff(0), d.coeff(1));
    let basis = monomial_basis(s, d)?;
    if (d1, d2) == (1, 0) || (d1, d2) == (0, 1) {
        let c = rng.gen_range(-COORD_BOUND..=COORD_BOUND);
        let fixed_exp = if d1 == 1 { (1, 0) } else { (0, 1) };
        let coefficients =
            place_in_basis(&basis, &[((0, 0), rat(-c)), (fixed_exp, rat(1))])?;
        let params = draw_distinct_params(rng, count, |_| false)?;
        let points = params
            .into_iter()
            .map(|t| {
                if d1 == 1 {
                    (rat(c), t)
                } else {
                    (t, rat(c))
                }
            })
            .collect();
        return Ok(SampledCurve {
            coefficients,
            points,
        });
    }
    if d2 == 1 {
        let a = draw_poly(rng, d1, CURVE_COEFF_BOUND);
        let b: Vec<i64> = (0..=d1)
            .map(|_| rng.gen_range(-CURVE_COEFF_BOUND..=CURVE_COEFF_BOUND))
            .collect();
        if !coprime_polys(&a, &b) {
            return Err(Error::SamplingFailure {
                what: "coprime curve equation",
                tries: 1,
            });
        }
        let mut entries: Vec<((i64, i64), BigRational)> = Vec::new();
        for (i, &c) in a.iter().enumerate() {
            entries.push(((i as i64, 1), rat(c)));
        }
        for (i, &c) in b.iter().enumerate() {
            if c != 0 {
                entries.push(((i as i64, 0), rat(c)));
            }
        }
        let coefficients = place_in_basis(&basis, &entries)?;
        let points = draw_distinct_params(rng, count, |u| eval_int_poly(&a, u).is_zero())?
            .into_iter()
            .map(|u| {
                let t = -eval_int_poly(&b, &u) / eval_int_poly(&a, &u);
                (u, t)
            })
            .collect();
        return Ok(SampledCurve {
            coefficients,
            points,
        });
    }
    let curve = draw_parametrized_quadric_curve(s, d, rng)?;
    let params = draw_distinct_params(rng, count, |_| false)?;
    let mut points = Vec::new();
    let mut seen: HashSet<RationalPoint> = HashSet::new();
    let mut tries = 0;
    let mut queue: Vec<BigRational> = params;
    while points.len() < count {
        let u = match queue.pop() {
            Some(u) => u,
            None => {
                if tries >= POINT_ATTEMPTS {
                    return Err(Error::SamplingFailure {
                        what: "distinct points on the parametrized curve",
                        tries,
                    });
                }
                tries += 1;
                rat(rng.gen_range(-PARAM_BOUND..=PARAM_BOUND))
            }
        };
        let p = curve.point(&u);
        if seen.insert(p.clone()) {
            points.push(p);
        }
    }
    Ok(SampledCurve {
        coefficients: curve.coefficients,
        points,
    })
}

/// A rational curve on the quadric given by a parametrization
/// u -> (phi(u), psi(u)) together with its certified implicit equation
/// of bidegree (d1, d2).
struct ParametrizedQuadricCurve {
    phi: Vec<i64>,
    psi: Vec<i64>,
    d1: i64,
    d2: i64,
    coefficients: Vec<BigRational>,
}

impl ParametrizedQuadricCurve {
    fn point(&self, u: &BigRational) -> RationalPoint {
        (eval_int_poly(&self.phi, u), eval_int_poly(&self.psi, u))
    }

    fn coeff_at(&self, i: i64, j: i64) -> &BigRational {
        let idx = (i * (self.d2 + 1) + j) as usize;
        &self.coefficients[idx]
    }

    fn value_at(&self, p: &RationalPoint) -> BigRational {
        let mut acc = BigRational::zero();
        for i in 0..=self.d1 {
            for j in 0..=self.d2 {
                let c = self.coeff_at(i, j);
                if !c.is_zero() {
                    acc += c * monomial_value(p, (i, j));
                }
            }
        }
        acc
    }

    fn is_smooth_at(&self, p: &RationalPoint) -> bool {
        let mut ds = BigRational::zero();
        let mut dt = BigRational::zero();
        for i in 0..=self.d1 {
            for j in 0..=self.d2 {
                let c = self.coeff_at(i, j);
                if c.is_zero() {
                    continue;
                }
                if i > 0 {
                    ds += c * rat(i) * monomial_value(p, (i - 1, j));
                }
                if j > 0 {
                    dt += c * rat(j) * monomial_value(p, (i, j - 1));
                }
            }
        }
        !(ds.is_zero() && dt.is_zero())
    }
}

/// Draw a parametrized curve of class (d1, d2), d1 >= 1 and d2 >= 2, and
/// recover its implicit equation by evaluating the curve-class monomials
/// at more probe points than the degree of any pullback, then taking the
/// nullspace. The draw only counts when that nullspace is a line, which
/// certifies the image really has the requested class.
fn draw_parametrized_quadric_curve(
    s: &SurfaceModel,
    d: &DivisorClass,
    rng: &mut ChaCha8Rng,
) -> Result<ParametrizedQuadricCurve> {
    let (d1, d2) = (d.coeff(0), d.coeff(1));
    if d1 < 1 || d2 < 2 {
        return Err(Error::DegenerateInput(format!(
            "class {d} is not an irreducible curve class on the quadric"
        )));
    }
    let basis = monomial_basis(s, d)?;
    let phi = draw_poly(rng, d2, MAP_COEFF_BOUND);
    let psi = draw_poly(rng, d1, MAP_COEFF_BOUND);
    let probe_count = (2 * d1 * d2 + d1 + d2 + 2) as usize;
    let probes = draw_distinct_params(rng, probe_count, |_| false)?;
    let probe_points: Vec<RationalPoint> = probes
        .iter()
        .map(|u| (eval_int_poly(&phi, u), eval_int_poly(&psi, u)))
        .collect();
    let rows: Vec<Vec<BigRational>> = probe_points
        .iter()
        .map(|p| basis.iter().map(|&m| monomial_value(p, m)).collect())
        .collect();
    let nullspace = rational_nullspace(&rows);
    if nullspace.len() != 1 {
        return Err(Error::SamplingFailure {
            what: "parametrized curve of the requested class",
            tries: 1,
        });
    }
    let coefficients = normalize_vector(&nullspace[0]);
    debug_assert_eq!(coefficients.len(), ((d1 + 1) * (d2 + 1)) as usize);
    Ok(ParametrizedQuadricCurve {
        phi,
        psi,
        d1,
        d2,
        coefficients,
    })
}

/// On-curve points of a quadric (2,2) component whose class constraint
/// is binding: the points are cut out by `aux_a` rulings in the first
/// family, `aux_b` in the second, plus `gamma` loose parameters. Each
/// ruling passes through one sampled curve point; the other intersection
/// is the remaining root of a quadratic with one known rational root.
fn sample_quadric_linked(
    s: &SurfaceModel,
    aux_a: i64,
    aux_b: i64,
    gamma: i64,
    rng: &mut ChaCha8Rng,
) -> Result<SampledCurve> {
    let curve = draw_parametrized_quadric_curve(s, &DivisorClass::two(2, 2), rng)?;
    let mut seen: HashSet<RationalPoint> = HashSet::new();
    let mut points: Vec<RationalPoint> = Vec::new();
    for piece in 0..(aux_a + aux_b) {
        let first_family = piece < aux_a;
        let mut placed = false;
        for _ in 0..PIECE_ATTEMPTS {
            let u = rat(rng.gen_range(-PARAM_BOUND..=PARAM_BOUND));
            let base = curve.point(&u);
            if seen.contains(&base) || !curve.is_smooth_at(&base) {
                continue;
            }
            let other = if first_family {
                let g2 = (0..=2)
                    .map(|i| curve.coeff_at(i, 2) * monomial_value(&base, (i, 0)))
                    .sum::<BigRational>();
                let g1 = (0..=2)
                    .map(|i| curve.coeff_at(i, 1) * monomial_value(&base, (i, 0)))
                    .sum::<BigRational>();
                if g2.is_zero() {
                    continue;
                }
                (base.0.clone(), -g1 / g2 - &base.1)
            } else {
                let h2 = (0..=2)
                    .map(|j| curve.coeff_at(2, j) * monomial_value(&base, (0, j)))
                    .sum::<BigRational>();
                let h1 = (0..=2)
                    .map(|j| curve.coeff_at(1, j) * monomial_value(&base, (0, j)))
                    .sum::<BigRational>();
                if h2.is_zero() {
                    continue;
                }
                (-h1 / h2 - &base.0, base.1.clone())
            };
            if other == base || seen.contains(&other) || !curve.is_smooth_at(&other) {
                continue;
            }
            debug_assert!(curve.value_at(&other).is_zero());
            seen.insert(base.clone());
            seen.insert(other.clone());
            points.push(base);
            points.push(other);
            placed = true;
            break;
        }
        if !placed {
            return Err(Error::SamplingFailure {
                what: "ruling pair on the sampled curve",
                tries: PIECE_ATTEMPTS,
            });
        }
    }
    for _ in 0..gamma {
        let mut placed = false;
        for _ in 0..PIECE_ATTEMPTS {
            let u = rat(rng.gen_range(-PARAM_BOUND..=PARAM_BOUND));
            let p = curve.point(&u);
            if seen.contains(&p) {
                continue;
            }
            seen.insert(p.clone());
            points.push(p);
            placed = true;
            break;
        }
        if !placed {
            return Err(Error::SamplingFailure {
                what: "loose rational curve point",
                tries: PIECE_ATTEMPTS,
            });
        }
    }
    Ok(SampledCurve {
        coefficients: curve.coefficients,
        points,
    })
}

fn draw_free_points(
    rng: &mut ChaCha8Rng,
    count: usize,
    taken: &mut HashSet<RationalPoint>,
) -> Result<Vec<RationalPoint>> {
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count {
        if tries >= POINT_ATTEMPTS {
            return Err(Error::SamplingFailure {
                what: "distinct free points",
                tries,
            });
        }
        tries += 1;
        let p = (
            rat(rng.gen_range(-COORD_BOUND..=COORD_BOUND)),
            rat(rng.gen_range(-COORD_BOUND..=COORD_BOUND)),
        );
        if taken.insert(p.clone()) {
            out.push(p);
        }
    }
    Ok(out)
}

/// N distinct pseudo-random points with no imposed structure.
pub fn sample_general_configuration(
    s: &SurfaceModel,
    n: i64,
    seed: u64,
) -> Result<PointConfiguration> {
    if !matches!(
        s.kind(),
        SurfaceKind::ProjectivePlane | SurfaceKind::Quadric
    ) {
        return Err(Error::UnsupportedSurface(
            "point sampling works in the affine charts of the plane and the quadric",
        ));
    }
    if n < 0 {
        return Err(Error::NegativeCount {
            name: "point count",
            value: n,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut taken = HashSet::new();
    let points = draw_free_points(&mut rng, n as usize, &mut taken)?;
    Ok(PointConfiguration {
        points,
        split: None,
    })
}

/// Data shared by the witness sampler and its reachability test.
struct WitnessPlan {
    d: DivisorClass,
    n_free: i64,
    n_curve: i64,
    gamma: i64,
    /// The class cutting out the on-curve points, E - K - D.
    aux: DivisorClass,
    /// Whether the on-curve class constraint is vacuous: gamma meets the
    /// genus cap, so generic parametrized points already satisfy it.
    vacuous: bool,
}

fn witness_plan(s: &SurfaceModel, e: &DivisorClass, comp: &BNComponent) -> Result<WitnessPlan> {
    if comp.kind != BNKind::CurveType {
        return Err(Error::InvalidInput(
            "only curve-type components carry a point-on-curve witness".to_string(),
        ));
    }
    let d = comp.d.clone().ok_or_else(|| {
        Error::DegenerateInput("curve-type component without a curve class".to_string())
    })?;
    let n_free = comp.n.ok_or_else(|| {
        Error::DegenerateInput("curve-type component without a free-point count".to_string())
    })?;
    let gamma = comp.gamma_degree.ok_or_else(|| {
        Error::DegenerateInput("curve-type component without a curve-part degree".to_string())
    })?;
    s.check_class(e)?;
    let n_points = halve(add(comp.dim, comp.codim)?, "component point count")?;
    let n_curve = sub(n_points, n_free)?;
    if n_free < 0 || n_curve < 0 || gamma < 0 {
        return Err(Error::DegenerateInput(format!(
            "component claims {n_free} free and {n_curve} on-curve points"
        )));
    }
    let residual = e.sub(&d)?;
    let ded = s.intersect(&d, &residual)?;
    if add(ded, 1)? != comp.codim {
        return Err(Error::DegenerateInput(format!(
            "component with class {d} does not belong to sections of {e}"
        )));
    }
    let aux = residual.sub(&s.canonical_class())?;
    let dedk = s.intersect(&d, &aux)?;
    if add(dedk, gamma)? != n_curve {
        return Err(Error::DegenerateInput(format!(
            "component with class {d} does not belong to sections of {e}"
        )));
    }
    let genus = chi_line_bundle(s, &d.add(&s.canonical_class())?)?;
    Ok(WitnessPlan {
        d,
        n_free,
        n_curve,
        gamma,
        aux,
        vacuous: gamma >= genus,
    })
}

/// Whether [`sample_component_configuration`] can build a witness for
/// this component. Generic on-curve points work exactly when the
/// curve-part degree meets the genus cap; below the cap the sampler
/// needs its linkage construction, which covers plane cubics and
/// quadric (2,2) curves. Everything else below the cap is out of reach
/// of rational coordinates drawn this way.
pub fn witness_in_reach(s: &SurfaceModel, e: &DivisorClass, comp: &BNComponent) -> Result<bool> {
    let plan = witness_plan(s, e, comp)?;
    if plan.vacuous {
        return Ok(matches!(
            s.kind(),
            SurfaceKind::ProjectivePlane | SurfaceKind::Quadric
        ));
    }
    Ok(match s.kind() {
        SurfaceKind::ProjectivePlane => plan.d.coeff(0) == 3,
        SurfaceKind::Quadric => (plan.d.coeff(0), plan.d.coeff(1)) == (2, 2),
        _ => false,
    })
}

/// The witness configuration of a curve-type component of sections of
/// O(E) through N points: a random curve in |D|, N - n points on it
/// representing the class the component prescribes, and n free points.
/// Deterministic in the seed.
pub fn sample_component_configuration(
    s: &SurfaceModel,
    e: &DivisorClass,
    comp: &BNComponent,
    seed: u64,
) -> Result<PointConfiguration> {
    let plan = witness_plan(s, e, comp)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_err = None;
    for _ in 0..CURVE_ATTEMPTS {
        let drawn = match (s.kind(), plan.vacuous) {
            (SurfaceKind::ProjectivePlane, true) => {
                sample_plane_curve(s, plan.d.coeff(0), plan.n_curve as usize, &mut rng)
            }
            (SurfaceKind::ProjectivePlane, false) => {
                if plan.d.coeff(0) != 3 {
                    return Err(Error::SamplingFailure {
                        what: "on-curve class constraint outside the linkage sampler",
                        tries: 0,
                    });
                }
                sample_plane_linked(s, plan.aux.coeff(0), plan.gamma, &mut rng)
            }
            (SurfaceKind::Quadric, true) => {
                sample_quadric_curve(s, &plan.d, plan.n_curve as usize, &mut rng)
            }
            (SurfaceKind::Quadric, false) => {
                if (plan.d.coeff(0), plan.d.coeff(1)) != (2, 2) {
                    return Err(Error::SamplingFailure {
                        what: "on-curve class constraint outside the linkage sampler",
                        tries: 0,
                    });
                }
                sample_quadric_linked(s, plan.aux.coeff(0), plan.aux.coeff(1), plan.gamma, &mut rng)
            }
            _ => Err(Error::UnsupportedSurface(
                "point sampling works in the affine charts of the plane and the quadric",
            )),
        };
        match drawn {
            Ok(curve) => {
                debug_assert_eq!(curve.points.len(), plan.n_curve as usize);
                let mut taken: HashSet<RationalPoint> = curve.points.iter().cloned().collect();
                if taken.len() != curve.points.len() {
                    last_err = Some(Error::SamplingFailure {
                        what: "distinct on-curve points",
                        tries: 1,
                    });
                    continue;
                }
                let free = draw_free_points(&mut rng, plan.n_free as usize, &mut taken)?;
                let mut points = curve.points;
                points.extend(free);
                return Ok(PointConfiguration {
                    points,
                    split: Some(CurveSplit {
                        n_free: plan.n_free,
                        n_on_curve: plan.n_curve,
                        curve_class: plan.d,
                        curve_coefficients: curve.coefficients,
                    }),
                });
            }
            Err(e @ Error::SamplingFailure { .. }) => {
                last_err = Some(e);
            }
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap_or(Error::SamplingFailure {
        what: "curve with usable rational points",
        tries: CURVE_ATTEMPTS,
    }))
}

/// Chern data of a direct sum of line bundles, by the Whitney formula:
/// rank = count, c1 = sum, c2 = sum of pairwise intersections.
pub fn split_bundle_chern(s: &SurfaceModel, classes: &[DivisorClass]) -> Result<ChernData> {
    if classes.is_empty() {
        return Err(Error::InvalidRank(0));
    }
    let mut c1 = classes[0].clone();
    for a in &classes[1..] {
        c1 = c1.add(a)?;
    }
    let mut c2 = 0i64;
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            c2 = add(c2, s.intersect(&classes[i], &classes[j])?)?;
        }
    }
    ChernData::new(classes.len() as i64, c1, c2)
}

/// chi of a pair of split bundles the slow way: the double sum of
/// chi(O(B_j - A_i)) over all summand pairs.
pub fn chi_pair_split(
    s: &SurfaceModel,
    a: &[DivisorClass],
    b: &[DivisorClass],
) -> Result<i64> {
    let mut acc = 0i64;
    for ai in a {
        for bj in b {
            acc = add(acc, chi_line_bundle(s, &bj.sub(ai)?)?)?;
        }
    }
    Ok(acc)
}

/// The quadric component lists computed with each ruling cast as the
/// fiber, plus an attempted matching between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossRulingReport {
    /// Components for (c1, c2) with the standard fiber.
    pub primary: Vec<TFComponent>,
    /// Components for the coordinate-swapped problem, in its own
    /// (swapped) coordinates.
    pub swapped: Vec<TFComponent>,
    /// Index pairs (primary, swapped) matched by equal dimension, equal
    /// embedding codimension, and coordinate-swapped D.
    pub matched: Vec<(usize, usize)>,
    pub unmatched_primary: Vec<usize>,
    pub unmatched_swapped: Vec<usize>,
}

/// Enumerate the quadric stack twice, once per ruling, and line the two
/// component lists up without judging discrepancies.
pub fn cross_ruling_diagnostic(
    c1: &DivisorClass,
    c2: i64,
    window: &Window,
) -> Result<CrossRulingReport> {
    let s = SurfaceModel::quadric();
    let primary = enumerate_nonprioritary(&s, c1, c2, window)?;
    let swapped = enumerate_nonprioritary(&s, &c1.swapped(), c2, &window.swapped())?;
    let mut matched = Vec::new();
    let mut used = vec![false; swapped.len()];
    let mut unmatched_primary = Vec::new();
    for (i, comp) in primary.iter().enumerate() {
        let want_d = comp.d.as_ref().map(|d| d.swapped());
        let hit = swapped.iter().enumerate().find(|(j, cand)| {
            !used[*j]
                && cand.dimension == comp.dimension
                && cand.embedding_codim == comp.embedding_codim
                && cand.d == want_d
        });
        match hit {
            Some((j, _)) => {
                used[j] = true;
                matched.push((i, j));
            }
            None => unmatched_primary.push(i),
        }
    }
    let unmatched_swapped = (0..swapped.len()).filter(|&j| !used[j]).collect();
    Ok(CrossRulingReport {
        primary,
        swapped,
        matched,
        unmatched_primary,
        unmatched_swapped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bn::bn_components;

    fn p2() -> SurfaceModel {
        SurfaceModel::p2()
    }

    fn quadric() -> SurfaceModel {
        SurfaceModel::quadric()
    }

    fn int_points(pts: &[(i64, i64)]) -> Vec<RationalPoint> {
        pts.iter().map(|&(x, y)| (rat(x), rat(y))).collect()
    }

    #[test]
    fn basis_orders() {
        let b = monomial_basis(&p2(), &DivisorClass::one(2)).unwrap();
        assert_eq!(b, vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]);
        let b = monomial_basis(&quadric(), &DivisorClass::two(2, 1)).unwrap();
        assert_eq!(b, vec![(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]);
        assert!(monomial_basis(&p2(), &DivisorClass::one(-1)).is_err());
    }

    #[test]
    fn collinear_points_drop_rank() {
        let config = PointConfiguration {
            points: int_points(&[(0, 0), (1, 1), (2, 2), (3, 3)]),
            split: None,
        };
        let report = hilbert_function(&p2(), &DivisorClass::one(2), &config).unwrap();
        assert_eq!(report.rank, 3);
        assert_eq!(report.h0_ideal, 3);
        assert_eq!(report.h1_ideal, 1);
        assert_eq!(report.expected_h1, 0);
    }

    #[test]
    fn general_points_have_full_rank() {
        let config = PointConfiguration {
            points: int_points(&[(0, 0), (1, 0), (0, 1), (2, 3)]),
            split: None,
        };
        let report = hilbert_function(&p2(), &DivisorClass::one(2), &config).unwrap();
        assert_eq!(report.rank, 4);
        assert_eq!(report.h1_ideal, 0);
    }

    #[test]
    fn ruling_points_drop_rank_on_the_quadric() {
        let config = PointConfiguration {
            points: int_points(&[(0, 0), (0, 1), (0, 2), (1, 1)]),
            split: None,
        };
        let report = hilbert_function(&quadric(), &DivisorClass::two(2, 1), &config).unwrap();
        assert_eq!(report.rank, 3);
        assert_eq!(report.h1_ideal, 1);
    }

    #[test]
    fn duplicate_points_are_rejected() {
        let config = PointConfiguration {
            points: int_points(&[(0, 0), (0, 0)]),
            split: None,
        };
        assert!(matches!(
            hilbert_function(&p2(), &DivisorClass::one(2), &config),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn off_curve_marked_points_are_rejected() {
        let basis_len = monomial_basis(&p2(), &DivisorClass::one(1)).unwrap().len();
        let mut coeffs = vec![BigRational::zero(); basis_len];
        coeffs[2] = BigRational::one();
        let config = PointConfiguration {
            points: int_points(&[(0, 1), (1, 0)]),
            split: Some(CurveSplit {
                n_free: 1,
                n_on_curve: 1,
                curve_class: DivisorClass::one(1),
                curve_coefficients: coeffs,
            }),
        };
        assert!(matches!(
            hilbert_function(&p2(), &DivisorClass::one(2), &config),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn rank_is_stable_under_permutation_and_rescale() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..50 {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(1..=6);
            let m: Vec<Vec<BigRational>> = (0..rows)
                .map(|_| (0..cols).map(|_| rat(rng.gen_range(-4..=4))).collect())
                .collect();
            let base = rational_rank(&m);
            let mut shuffled = m.clone();
            for i in (1..shuffled.len()).rev() {
                let j = rng.gen_range(0..=i);
                shuffled.swap(i, j);
            }
            for row in shuffled.iter_mut() {
                let scale = rat(draw_nonzero(&mut rng, 7));
                for v in row.iter_mut() {
                    *v *= &scale;
                }
            }
            assert_eq!(rational_rank(&shuffled), base);
        }
    }

    #[test]
    fn rank_matches_rational_gauss_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..60 {
            let rows = rng.gen_range(1..=7);
            let cols = rng.gen_range(1..=7);
            let m: Vec<Vec<BigRational>> = (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| rat(rng.gen_range(-5..=5)) / rat(draw_nonzero(&mut rng, 5)))
                        .collect()
                })
                .collect();
            let cols_n = m[0].len();
            let null_dim = rational_nullspace(&m).len();
            assert_eq!(rational_rank(&m), cols_n - null_dim);
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let s = p2();
        let a = sample_general_configuration(&s, 6, 9).unwrap();
        let b = sample_general_configuration(&s, 6, 9).unwrap();
        assert_eq!(a, b);
        let e = DivisorClass::one(2);
        let comps = bn_components(&s, &e, 4).unwrap();
        let x = sample_component_configuration(&s, &e, &comps[0], 3).unwrap();
        let y = sample_component_configuration(&s, &e, &comps[0], 3).unwrap();
        assert_eq!(x, y);
        let z = sample_component_configuration(&s, &e, &comps[0], 4).unwrap();
        assert_ne!(x, z);
    }

    #[test]
    fn conic_component_samples_witness_h1() {
        let s = p2();
        let e = DivisorClass::one(2);
        let comps = bn_components(&s, &e, 4).unwrap();
        for seed in 0..10 {
            let config = sample_component_configuration(&s, &e, &comps[0], seed).unwrap();
            assert_eq!(config.points.len(), 4);
            let report = hilbert_function(&s, &e, &config).unwrap();
            assert!(report.h1_ideal >= 1, "seed {seed}");
        }
    }

    #[test]
    fn quadric_component_samples_witness_h1() {
        let s = quadric();
        let e = DivisorClass::two(2, 1);
        let comps = bn_components(&s, &e, 4).unwrap();
        for seed in 0..10 {
            let config = sample_component_configuration(&s, &e, &comps[0], seed).unwrap();
            let split = config.split.as_ref().unwrap();
            assert_eq!(split.n_on_curve, 3);
            assert_eq!(split.n_free, 1);
            let report = hilbert_function(&s, &e, &config).unwrap();
            assert!(report.h1_ideal >= 1, "seed {seed}");
        }
    }

    #[test]
    fn plane_cubic_chords_witness_h1() {
        let s = p2();
        let e = DivisorClass::one(5);
        let comps = bn_components(&s, &e, 15).unwrap();
        let cubic = comps
            .iter()
            .find(|c| c.d == Some(DivisorClass::one(3)))
            .expect("a cubic component on this grid point");
        assert_eq!(cubic.gamma_degree, Some(0));
        for seed in 0..5 {
            let config = sample_component_configuration(&s, &e, cubic, seed).unwrap();
            let split = config.split.as_ref().unwrap();
            assert_eq!(split.n_on_curve, 15);
            let report = hilbert_function(&s, &e, &config).unwrap();
            assert_eq!(report.expected_h1, 0);
            assert!(report.h1_ideal >= 1, "seed {seed}");
        }
    }

    #[test]
    fn quadric_ruling_pairs_witness_h1() {
        let s = quadric();
        let e = DivisorClass::two(3, 4);
        let comps = bn_components(&s, &e, 14).unwrap();
        let curve = comps
            .iter()
            .find(|c| c.d == Some(DivisorClass::two(2, 2)))
            .expect("a (2,2) component on this grid point");
        assert_eq!(curve.gamma_degree, Some(0));
        for seed in 0..3 {
            let config = sample_component_configuration(&s, &e, curve, seed).unwrap();
            let split = config.split.as_ref().unwrap();
            assert_eq!(split.n_on_curve, 14);
            let report = hilbert_function(&s, &e, &config).unwrap();
            assert!(report.h1_ideal >= 1, "seed {seed}");
        }
    }

    #[test]
    fn genus_cap_splits_the_sampling_paths() {
        let s = quadric();
        let e = DivisorClass::two(4, 4);
        let comps = bn_components(&s, &e, 17).unwrap();
        let on_cap: Vec<&BNComponent> = comps
            .iter()
            .filter(|c| c.d == Some(DivisorClass::two(2, 2)))
            .collect();
        let gammas: Vec<Option<i64>> = on_cap.iter().map(|c| c.gamma_degree).collect();
        assert!(gammas.contains(&Some(0)) && gammas.contains(&Some(1)));
        for comp in on_cap {
            assert!(witness_in_reach(&s, &e, comp).unwrap());
            for seed in 0..2 {
                let config = sample_component_configuration(&s, &e, comp, seed).unwrap();
                let report = hilbert_function(&s, &e, &config).unwrap();
                assert!(report.h1_ideal >= 1, "gamma {:?} seed {seed}", comp.gamma_degree);
            }
        }
    }

    #[test]
    fn binding_constraint_off_the_linkage_grid_is_reported() {
        let s = quadric();
        let e = DivisorClass::two(5, 4);
        let comps = bn_components(&s, &e, 20).unwrap();
        let curve = comps
            .iter()
            .find(|c| c.d == Some(DivisorClass::two(3, 2)))
            .expect("a (3,2) component on this grid point");
        assert_eq!(curve.gamma_degree, Some(0));
        assert!(!witness_in_reach(&s, &e, curve).unwrap());
        assert!(matches!(
            sample_component_configuration(&s, &e, curve, 0),
            Err(Error::SamplingFailure { .. })
        ));
    }

    #[test]
    fn implicitized_quadric_curve_samples_witness_h1() {
        let s = quadric();
        let e = DivisorClass::two(4, 4);
        let comps = bn_components(&s, &e, 15).unwrap();
        let curve = comps
            .iter()
            .find(|c| c.d == Some(DivisorClass::two(1, 2)))
            .expect("a (1,2) component on this grid point");
        for seed in 0..3 {
            let config = sample_component_configuration(&s, &e, curve, seed).unwrap();
            let split = config.split.as_ref().unwrap();
            assert_eq!(split.curve_class, DivisorClass::two(1, 2));
            let report = hilbert_function(&s, &e, &config).unwrap();
            assert!(report.h1_ideal >= 1, "seed {seed}");
        }
    }

    #[test]
    fn mismatched_class_and_component_are_rejected() {
        let s = p2();
        let e = DivisorClass::one(2);
        let comps = bn_components(&s, &e, 4).unwrap();
        assert!(matches!(
            sample_component_configuration(&s, &DivisorClass::one(3), &comps[0], 0),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn general_samples_have_no_h1() {
        let s = p2();
        let e = DivisorClass::one(2);
        for seed in 0..10 {
            let config = sample_general_configuration(&s, 4, seed).unwrap();
            let report = hilbert_function(&s, &e, &config).unwrap();
            assert_eq!(report.h1_ideal, 0, "seed {seed}");
        }
        let s = quadric();
        let e = DivisorClass::two(2, 2);
        for seed in 0..10 {
            let config = sample_general_configuration(&s, 7, seed).unwrap();
            let report = hilbert_function(&s, &e, &config).unwrap();
            assert_eq!(report.h1_ideal, 0, "seed {seed}");
        }
    }

    #[test]
    fn h1_minus_h0_identity() {
        let s = p2();
        let e = DivisorClass::one(3);
        let chi = chi_line_bundle(&s, &e).unwrap();
        for n in [1, 4, 9, 14] {
            let config = sample_general_configuration(&s, n, 77).unwrap();
            let report = hilbert_function(&s, &e, &config).unwrap();
            assert_eq!(report.h1_ideal - report.h0_ideal, n - chi);
            assert_eq!(report.expected_h1, (n - chi).max(0));
        }
    }

    #[test]
    fn split_bundle_whitney_values() {
        let s = p2();
        let chern = split_bundle_chern(
            &s,
            &[DivisorClass::one(1), DivisorClass::one(-1)],
        )
        .unwrap();
        assert_eq!(chern.rank, 2);
        assert_eq!(chern.c1, DivisorClass::one(0));
        assert_eq!(chern.c2, -1);
        assert!(split_bundle_chern(&s, &[]).is_err());
    }

    #[test]
    fn cross_ruling_symmetric_input_matches_fully() {
        let w = Window::parse("-3..3,-3..3").unwrap();
        let report = cross_ruling_diagnostic(&DivisorClass::two(0, 0), 0, &w).unwrap();
        assert_eq!(report.primary.len(), 54);
        assert_eq!(report.swapped.len(), 54);
        assert_eq!(report.matched.len(), 54);
        assert!(report.unmatched_primary.is_empty());
        assert!(report.unmatched_swapped.is_empty());
    }

    #[test]
    fn cross_ruling_reports_the_worked_component() {
        let w = Window::parse("-2..2,-2..2").unwrap();
        let report = cross_ruling_diagnostic(&DivisorClass::two(4, 3), 4, &w).unwrap();
        assert!(report.primary.iter().any(|c| {
            c.d == Some(DivisorClass::two(1, 0)) && c.n1 == Some(1) && c.n2 == Some(0)
        }));
    }

    #[test]
    fn cross_ruling_asymmetric_input_produces_both_lists() {
        let w = Window::parse("-3..3,-3..3").unwrap();
        let report = cross_ruling_diagnostic(&DivisorClass::two(1, 0), 0, &w).unwrap();
        let total = report.matched.len()
            + report.unmatched_primary.len().max(report.unmatched_swapped.len());
        assert!(total >= report.primary.len().min(report.swapped.len()));
    }

    #[test]
    fn coprimality_filter() {
        assert!(coprime_polys(&[1, 1], &[1, 0, 1]));
        assert!(!coprime_polys(&[-1, 1], &[-1, 0, 0, 1]));
        assert!(coprime_polys(&[5], &[0, 0, 1]));
    }
}
