//! Brun's sort-and-subtract algorithm on triples of order elements.

use num_bigint::BigInt;
use std::cmp::Ordering;
use std::collections::HashMap;

use super::jpa::{projective_key, unit_between};
use super::record::{Algorithm, ExpansionRecord, States, Status};
use crate::cubic::{AlgInt, FieldElem, OrderSpec};
use crate::error::{Error, Result};

/// Sorts a triple ascending in embedding `track`, returning the sorted triple and the permutation.
fn sort_at(order: &OrderSpec, b: [AlgInt; 3], track: usize) -> ([AlgInt; 3], [usize; 3]) {
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&i, &j| order.cmp_at(&b[i], &b[j], track).then(i.cmp(&j)));
    (idx.map(|i| b[i].clone()), idx)
}

/// Expands a triple with Brun's algorithm.
///
/// Each step subtracts the middle component from the largest and re-sorts in embedding
/// `track`; the digit vector is the sorting permutation. Periodicity up to a unit is detected
/// as in the Jacobi-Perron engine; a zero component ends the run as `Terminated`.
pub fn brun_expand(order: &OrderSpec, beta: [AlgInt; 3], track: usize, max_iter: usize) -> Result<ExpansionRecord> {
    for (i, b) in beta.iter().enumerate() {
        if order.sign_at(b, track) == Ordering::Less {
            return Err(Error::NegativeComponent { index: i });
        }
    }
    let (first, _) = sort_at(order, beta, track);
    let mut states = vec![first];
    let mut digits = Vec::new();
    let mut status = Status::BoundExhausted;
    let (mut l0, mut l1, mut unit) = (None, None, None);
    let mut seen: HashMap<(FieldElem, FieldElem), Vec<usize>> = HashMap::new();
    if states[0].iter().any(AlgInt::is_zero) {
        status = Status::Terminated;
    } else {
        seen.entry(projective_key(order, &states[0])).or_default().push(0);
        for step in 0..max_iter {
            let s = &states[step];
            let raw = [s[0].clone(), s[1].clone(), &s[2] - &s[1]];
            let (next, perm) = sort_at(order, raw, track);
            digits.push(perm.iter().map(|&p| BigInt::from(p)).collect());
            states.push(next);
            let k = step + 1;
            if states[k].iter().any(AlgInt::is_zero) {
                status = Status::Terminated;
                break;
            }
            let earlier = seen.entry(projective_key(order, &states[k])).or_default();
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
    }
    Ok(ExpansionRecord {
        algorithm: Algorithm::Brun,
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
