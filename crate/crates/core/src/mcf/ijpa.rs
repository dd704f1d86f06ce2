//! The inhomogeneous Jacobi-Perron algorithm on pairs of field elements, and the
//! Hasse-Bernstein unit of a periodic run.

use num_bigint::BigInt;
use std::collections::HashMap;

use super::record::{Algorithm, ExpansionRecord, States, Status};
use crate::cubic::{AlgInt, FieldElem, OrderSpec};
use crate::error::{Error, Result};

/// One iJPA step: digits `(floor a1, floor a2)` and the next pair, or `None` when `a1` is an integer.
pub fn ijpa_step(
    order: &OrderSpec,
    alpha: &[FieldElem; 2],
    track: usize,
) -> Result<([BigInt; 2], Option<[FieldElem; 2]>)> {
    let a1 = alpha[0].floor_at(order, track);
    let a2 = alpha[1].floor_at(order, track);
    let d = alpha[0].sub_int(&a1);
    if d.is_zero() {
        return Ok(([a1, a2], None));
    }
    let inv = d.inv(order)?;
    let next = [alpha[1].sub_int(&a2).mul(&inv, order), inv];
    Ok(([a1, a2], Some(next)))
}

/// Expands a pair with the inhomogeneous Jacobi-Perron algorithm.
///
/// The run is periodic at the first exact repetition of a state, and `Terminated` when the
/// first component becomes an integer.
pub fn ijpa_expand(order: &OrderSpec, theta: [FieldElem; 2], track: usize, max_iter: usize) -> Result<ExpansionRecord> {
    let mut states = vec![theta];
    let mut digits = Vec::new();
    let mut seen: HashMap<[FieldElem; 2], usize> = HashMap::new();
    seen.insert(states[0].clone(), 0);
    let mut status = Status::BoundExhausted;
    let (mut l0, mut l1) = (None, None);
    for step in 0..max_iter {
        let (d, next) = ijpa_step(order, &states[step], track)?;
        digits.push(d.to_vec());
        let Some(next) = next else {
            status = Status::Terminated;
            break;
        };
        let k = step + 1;
        if let Some(&m) = seen.get(&next) {
            states.push(next);
            l0 = Some(m);
            l1 = Some(k - m);
            status = Status::Periodic;
            break;
        }
        seen.insert(next.clone(), k);
        states.push(next);
    }
    Ok(ExpansionRecord {
        algorithm: Algorithm::IJpa,
        tracking_root: order.label(track).to_string(),
        tracking_index: track,
        states: States::Rational(states),
        digits,
        l0,
        l1,
        period_unit: None,
        status,
    })
}

/// The Hasse-Bernstein unit of a periodic run.
///
/// For iJPA it is the product of the second coordinates over one period; for JPA and Brun it is
/// the inverse of the period unit. Fails unless the result is a unit of the order.
pub fn hasse_bernstein_unit(order: &OrderSpec, rec: &ExpansionRecord) -> Result<AlgInt> {
    let (Some(l0), Some(l1)) = (rec.l0, rec.l1) else {
        return Err(Error::NotPeriodic);
    };
    let unit = match &rec.states {
        States::Rational(states) => {
            let mut acc = FieldElem::from_integer(1);
            for st in &states[l0 + 1..=l0 + l1] {
                acc = acc.mul(&st[1], order);
            }
            acc.as_int().cloned().ok_or(Error::NotAUnit)?
        }
        States::Integral(_) => {
            let e = rec.period_unit.as_ref().ok_or(Error::NotPeriodic)?;
            order.unit_inverse(e)?
        }
    };
    if !order.is_unit(&unit) {
        return Err(Error::NotAUnit);
    }
    Ok(unit)
}

/// Checks that the JPA expansion of `(1, t1, t2)` and the iJPA expansion of `(t1, t2)` run in
/// lockstep: equal digits, and `state_jpa[k] = b1 * (1, alpha[k])` at every common step.
pub fn lockstep_check(order: &OrderSpec, jpa: &ExpansionRecord, ijpa: &ExpansionRecord) -> bool {
    let (Some(js), Some(is)) = (jpa.states.integral(), ijpa.states.rational()) else {
        return false;
    };
    let n = js.len().min(is.len());
    for k in 0..n {
        let b1 = FieldElem::from_int(js[k][0].clone());
        for c in 0..2 {
            if b1.mul(&is[k][c], order) != FieldElem::from_int(js[k][c + 1].clone()) {
                return false;
            }
        }
    }
    let m = jpa.digits.len().min(ijpa.digits.len());
    jpa.digits[..m] == ijpa.digits[..m]
}
