//! Exhaustive lattice enumeration over embedding boxes, and the decomposability oracle.
//!
//! An element `v1 + v2 x + v3 x^2` is determined by its three embeddings through the
//! Vandermonde matrix of the roots. Boxes of embedding values are turned into coordinate
//! ranges one coordinate at a time (first `v3`, then `v2` given `v3`, then `v1` given both),
//! with floating-point bounds widened outward. Every enumerated point is re-checked exactly by
//! the caller, so the enumeration is exhaustive and never reports a false candidate.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::ops::ControlFlow;

use crate::cubic::{AlgInt, OrderSpec, Signature};
use crate::error::{Error, Result};

/// A pair of elements of the queried signature that sum to the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionWitness {
    /// The two summands.
    pub parts: [AlgInt; 2],
}

/// Outcome of the decomposability oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Decomposition {
    /// The element splits as shown.
    Decomposable(DecompositionWitness),
    /// No split exists.
    Indecomposable,
}

impl Decomposition {
    /// True iff no split exists.
    pub fn is_indecomposable(&self) -> bool {
        matches!(self, Decomposition::Indecomposable)
    }
}

/// An open interval of real values, possibly unbounded on neither side.
pub type Interval = (f64, f64);

/// Widens an interval outward to absorb floating-point error.
fn widen((lo, hi): Interval) -> Interval {
    let m = 1e-9 * (1.0 + lo.abs().max(hi.abs()));
    (lo - m, hi + m)
}

/// Integer range `[ceil lo, floor hi]` of a widened interval, or `None` if empty or too large.
fn int_range((lo, hi): Interval) -> Option<(i64, i64)> {
    let (lo, hi) = widen((lo, hi));
    if !(lo.is_finite() && hi.is_finite()) || lo.abs() > 9e15 || hi.abs() > 9e15 {
        return None;
    }
    let (a, b) = (lo.ceil() as i64, hi.floor() as i64);
    (a <= b).then_some((a, b))
}

fn scale(iv: Interval, c: f64) -> Interval {
    if c >= 0.0 {
        (iv.0 * c, iv.1 * c)
    } else {
        (iv.1 * c, iv.0 * c)
    }
}

fn add(a: Interval, b: Interval) -> Interval {
    (a.0 + b.0, a.1 + b.1)
}

fn intersect(a: Interval, b: Interval) -> Interval {
    (a.0.max(b.0), a.1.min(b.1))
}

/// Enumerates all coordinate triples whose embedding `i` (label order) may lie in `boxes[i]`.
///
/// `trace_max`, when given, additionally restricts to elements of trace at most that value.
/// The visitor may stop the enumeration early by returning `ControlFlow::Break`.
pub fn enumerate_box<B>(
    order: &OrderSpec,
    boxes: [Interval; 3],
    trace_max: Option<f64>,
    mut visit: impl FnMut([i64; 3]) -> ControlFlow<B>,
) -> Result<Option<B>> {
    let r: [f64; 3] = std::array::from_fn(|i| order.root_approx(i));
    let w: [f64; 3] = std::array::from_fn(|i| {
        (0..3).filter(|&j| j != i).map(|j| 1.0 / (r[i] - r[j])).product()
    });
    let (p, q, _) = order.coeffs();
    let (p, q) = (p as f64, q as f64);
    let v3_iv = (0..3).fold((0.0, 0.0), |acc, i| add(acc, scale(boxes[i], w[i])));
    let too_big = || Error::Parse("enumeration box exceeds the i64 coordinate range".into());
    let Some((v3lo, v3hi)) = int_range(v3_iv) else {
        return if widen(v3_iv).0 > widen(v3_iv).1 { Ok(None) } else { Err(too_big()) };
    };
    for v3 in v3lo..=v3hi {
        let v3f = v3 as f64;
        let mut v2_iv = (f64::NEG_INFINITY, f64::INFINITY);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            // v2 = (b_i - b_j) / (r_i - r_j) - v3 (r_i + r_j).
            let d = 1.0 / (r[i] - r[j]);
            let diff = add(boxes[i], scale(boxes[j], -1.0));
            let iv = add(scale(diff, d), (-v3f * (r[i] + r[j]), -v3f * (r[i] + r[j])));
            v2_iv = intersect(v2_iv, widen(iv));
        }
        let Some((v2lo, v2hi)) = int_range(v2_iv) else { continue };
        for v2 in v2lo..=v2hi {
            let v2f = v2 as f64;
            let mut v1_iv = (f64::NEG_INFINITY, f64::INFINITY);
            for i in 0..3 {
                let shift = -(v2f * r[i] + v3f * r[i] * r[i]);
                v1_iv = intersect(v1_iv, widen(add(boxes[i], (shift, shift))));
            }
            if let Some(t) = trace_max {
                // Tr = 3 v1 - p v2 + (p^2 - 2q) v3.
                let cap = (t + p * v2f - (p * p - 2.0 * q) * v3f) / 3.0;
                v1_iv.1 = v1_iv.1.min(cap + 1e-9 * (1.0 + cap.abs()));
            }
            let Some((v1lo, v1hi)) = int_range(v1_iv) else { continue };
            for v1 in v1lo..=v1hi {
                if let ControlFlow::Break(b) = visit([v1, v2, v3]) {
                    return Ok(Some(b));
                }
            }
        }
    }
    Ok(None)
}

/// Box of embedding values strictly between `0` and `x` in every embedding.
pub fn box_below(order: &OrderSpec, x: &AlgInt) -> [Interval; 3] {
    std::array::from_fn(|i| {
        let v = order.approx(x, i);
        if v > 0.0 {
            (0.0, v)
        } else {
            (v, 0.0)
        }
    })
}

/// True iff `b` has signature `s`, with a cheap floating-point rejection first.
pub(crate) fn has_signature(order: &OrderSpec, b: &AlgInt, s: Signature) -> bool {
    if b.is_zero() {
        return false;
    }
    (0..3).all(|i| {
        let want = match s.0[i] {
            crate::cubic::Sign::Pos => Ordering::Greater,
            crate::cubic::Sign::Neg => Ordering::Less,
        };
        order.sign_at(b, i) == want
    })
}

/// Decides whether `x` of signature `s` is a sum of two elements of signature `s`.
///
/// The search is exhaustive: every summand lies in the open box between `0` and `x` in each
/// embedding, and all lattice points of that box are examined.
pub fn is_decomposable(order: &OrderSpec, x: &AlgInt, s: Signature) -> Result<Decomposition> {
    let actual = order.signature(x)?;
    if actual != s {
        return Err(Error::SignatureMismatch {
            expected: s.to_string(),
            actual: actual.to_string(),
        });
    }
    // Decomposability is preserved by unit multiples, and a balanced multiple has a box whose
    // coordinate ranges are far shorter than those of a skewed element of the same norm.
    let (y, back) = match balancing_unit(order, x)? {
        Some((e, e_inv)) => (order.mul(&e, x), Some(e_inv)),
        None => (x.clone(), None),
    };
    let t = order.signature(&y)?;
    let found = enumerate_box(order, box_below(order, &y), None, |c| {
        let b = AlgInt::from_i64(c);
        if has_signature(order, &b, t) {
            let rest = &y - &b;
            if has_signature(order, &rest, t) {
                return ControlFlow::Break([b, rest]);
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(match found {
        Some(parts) => {
            let parts = match &back {
                Some(e_inv) => parts.map(|p| order.mul(e_inv, &p)),
                None => parts,
            };
            Decomposition::Decomposable(DecompositionWitness { parts })
        }
        None => Decomposition::Indecomposable,
    })
}

/// A unit `e`, with its inverse, for which the embeddings of `e x` are as close as possible to
/// `|N(x)|^(1/3)` in absolute value. Returns `None` when the order carries no units.
fn balancing_unit(order: &OrderSpec, x: &AlgInt) -> Result<Option<(AlgInt, AlgInt)>> {
    if !order.has_units() {
        return Ok(None);
    }
    let (u1, u2) = order.units()?;
    let l = |v: &AlgInt| -> [f64; 3] { std::array::from_fn(|i| order.ln_abs(v, i)) };
    let (l1, l2) = (l(u1), l(u2));
    let spread = |v: [f64; 3]| {
        let m = (v[0] + v[1] + v[2]) / 3.0;
        v.iter().map(|a| (a - m).abs()).fold(0.0, f64::max)
    };
    let d = l1[0] * l2[1] - l1[1] * l2[0];
    let mut best = (0i64, 0i64);
    let mut cur = l(x);
    // Two refinement rounds absorb the rounding of the first estimate.
    for _ in 0..2 {
        let m = (cur[0] + cur[1] + cur[2]) / 3.0;
        let (t0, t1) = (m - cur[0], m - cur[1]);
        let k0 = ((t0 * l2[1] - t1 * l2[0]) / d).round() as i64;
        let m0 = ((l1[0] * t1 - l1[1] * t0) / d).round() as i64;
        let mut pick = (f64::INFINITY, 0, 0);
        for dk in -1..=1 {
            for dl in -1..=1 {
                let (k, ll) = (k0 + dk, m0 + dl);
                let v: [f64; 3] =
                    std::array::from_fn(|i| cur[i] + k as f64 * l1[i] + ll as f64 * l2[i]);
                let sp = spread(v);
                if sp < pick.0 - 1e-12 {
                    pick = (sp, k, ll);
                }
            }
        }
        best = (best.0 + pick.1, best.1 + pick.2);
        cur = std::array::from_fn(|i| cur[i] + pick.1 as f64 * l1[i] + pick.2 as f64 * l2[i]);
    }
    if best == (0, 0) {
        return Ok(None);
    }
    let e = order.mul(&order.unit_pow(u1, best.0)?, &order.unit_pow(u2, best.1)?);
    let e_inv = order.mul(&order.unit_pow(u1, -best.0)?, &order.unit_pow(u2, -best.1)?);
    Ok(Some((e, e_inv)))
}

/// Convenience wrapper using the element's own signature.
pub fn is_indecomposable(order: &OrderSpec, x: &AlgInt) -> Result<bool> {
    let s = order.signature(x)?;
    Ok(is_decomposable(order, x, s)?.is_indecomposable())
}

/// All totally positive indecomposable elements of trace at most `t`, sorted by trace.
///
/// Candidates are processed by increasing trace; a candidate is decomposable exactly when some
/// already found indecomposable lies strictly below it in every embedding.
pub fn harvest_indecomposables(order: &OrderSpec, t: i64) -> Result<Vec<AlgInt>> {
    let big = t as f64;
    let mut cands: Vec<(i64, AlgInt, [f64; 3])> = Vec::new();
    enumerate_box(order, [(0.0, big); 3], Some(big), |c| {
        let x = AlgInt::from_i64(c);
        if !x.is_zero() && order.is_totally_positive(&x) {
            let tr = crate::cubic::order::to_i64(&order.trace(&x));
            if tr <= t {
                let e = std::array::from_fn(|i| order.approx(&x, i));
                cands.push((tr, x, e));
            }
        }
        ControlFlow::<()>::Continue(())
    })?;
    cands.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut found: Vec<(AlgInt, [f64; 3])> = Vec::new();
    for (_, x, e) in cands {
        let below = found.iter().any(|(y, f)| {
            let gaps: [f64; 3] = std::array::from_fn(|i| e[i] - f[i]);
            let tol = 1e-9;
            if gaps.iter().any(|&g| g < -tol * (1.0 + e.iter().map(|v| v.abs()).fold(0.0, f64::max))) {
                return false;
            }
            if gaps.iter().all(|&g| g > tol * (1.0 + e.iter().map(|v| v.abs()).fold(0.0, f64::max))) {
                return true;
            }
            order.is_totally_positive(&(&x - y))
        });
        if !below {
            found.push((x, e));
        }
    }
    Ok(found.into_iter().map(|(x, _)| x).collect())
}
