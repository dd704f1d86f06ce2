//! The homogeneous Jacobi-Perron algorithm on triples of order elements.

use num_bigint::BigInt;
use std::collections::HashMap;

use super::record::{Algorithm, ExpansionRecord, States, Status};
use crate::cubic::{AlgInt, FieldElem, OrderSpec};
use crate::error::{Error, Result};

/// Default iteration bound of the expansion engines.
pub const DEFAULT_MAX_ITER: usize = 1000;

/// Projective key `(b2/b1, b3/b1)` of a state; equal keys mean proportional states.
pub(crate) fn projective_key(order: &OrderSpec, b: &[AlgInt; 3]) -> (FieldElem, FieldElem) {
    let inv = FieldElem::from_int(b[0].clone())
        .inv(order)
        .expect("pivot is nonzero");
    (
        FieldElem::from_int(b[1].clone()).mul(&inv, order),
        FieldElem::from_int(b[2].clone()).mul(&inv, order),
    )
}

/// Unit `e` with `later = e * earlier` componentwise, if it exists in the order.
pub(crate) fn unit_between(order: &OrderSpec, later: &[AlgInt; 3], earlier: &[AlgInt; 3]) -> Option<AlgInt> {
    let e = order.divide_exact(&later[0], &earlier[0]).ok()?;
    if !order.is_unit(&e) {
        return None;
    }
    (0..3)
        .all(|i| order.mul(&e, &earlier[i]) == later[i])
        .then_some(e)
}

/// One JPA step: digits `(floor(b2/b1), floor(b3/b1))` and the next state.
pub fn jpa_step(order: &OrderSpec, b: &[AlgInt; 3], track: usize) -> Result<([BigInt; 2], [AlgInt; 3])> {
    let d1 = order.floor_ratio(&b[1], &b[0], track)?;
    let d2 = order.floor_ratio(&b[2], &b[0], track)?;
    let next = [&b[1] - &b[0].scale(&d1), &b[2] - &b[0].scale(&d2), b[0].clone()];
    Ok(([d1, d2], next))
}

/// Expands a triple with the homogeneous Jacobi-Perron algorithm.
///
/// Floors are taken in embedding `track`. After each step the new state is compared with every
/// earlier proportional state; the run is periodic as soon as the proportionality factor is a
/// unit of the order, which gives the minimal preperiod and period. A zero pivot ends the run
/// as `Terminated` when the state is rational and is reported as [`Error::ZeroPivot`] otherwise.
pub fn jpa_expand(order: &OrderSpec, beta: [AlgInt; 3], track: usize, max_iter: usize) -> Result<ExpansionRecord> {
    if beta[0].is_zero() {
        return Err(Error::ZeroPivot { step: 0 });
    }
    let mut states = vec![beta];
    let mut digits = Vec::new();
    let mut seen: HashMap<(FieldElem, FieldElem), Vec<usize>> = HashMap::new();
    seen.entry(projective_key(order, &states[0])).or_default().push(0);
    let mut status = Status::BoundExhausted;
    let (mut l0, mut l1, mut unit) = (None, None, None);
    for step in 0..max_iter {
        let (d, next) = jpa_step(order, &states[step], track)?;
        digits.push(d.to_vec());
        states.push(next);
        let k = step + 1;
        let cur = &states[k];
        if cur[0].is_zero() {
            if cur.iter().all(AlgInt::is_rational) {
                status = Status::Terminated;
                break;
            }
            return Err(Error::ZeroPivot { step: k });
        }
        let key = projective_key(order, cur);
        let earlier = seen.entry(key).or_default();
        if let Some(&m) = earlier
            .iter()
            .find(|&&m| unit_between(order, &states[k], &states[m]).is_some())
        {
            unit = unit_between(order, &states[k], &states[m]);
            l0 = Some(m);
            l1 = Some(k - m);
            status = Status::Periodic;
            break;
        }
        earlier.push(k);
    }
    Ok(ExpansionRecord {
        algorithm: Algorithm::Jpa,
        tracking_root: order.label(track).to_string(),
        tracking_index: track,
        states: States::Integral(states),
        digits,
        l0,
        l1,
        period_unit: unit,
        status,
    })
}

/// The vector `(1, |t|, t^2)` for `t = x` taken in the tracking embedding `track`.
pub fn abs_tau_vector(order: &OrderSpec, track: usize) -> [AlgInt; 3] {
    let x = AlgInt::x();
    let sign = order.sign_at(&x, track);
    let t = if sign == std::cmp::Ordering::Less { -x.clone() } else { x.clone() };
    [AlgInt::one(), t, order.square(&x)]
}
