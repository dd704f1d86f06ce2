//! Generalized semiconvergents `beta_p - i beta_1 - j beta_q` filtered by signature conditions.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::record::ExpansionRecord;
use crate::cubic::order::to_i64;
use crate::cubic::{AlgInt, OrderSpec};
use crate::error::Result;

/// Largest `j` examined when the signature never changes along the ray.
pub const J_CAP: u64 = 4096;

/// An element `beta_p^{(k)} - i beta_1^{(k)} - j beta_q^{(k)}` with `{p, q} = {2, 3}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedRow {
    /// Step index.
    pub k: usize,
    /// Leading component index `p`.
    pub p: usize,
    /// Multiple of the pivot subtracted.
    pub i: u64,
    /// Multiple of the other component subtracted.
    pub j: u64,
    /// The element.
    pub value: AlgInt,
}

/// Rows of steps `0..cycle_end()` satisfying the three conditions.
///
/// For `1 <= i <= floor(beta_p / beta_1) - 1` the rows `j = 0, 1, ...` are emitted while the
/// signature agrees with that of `beta_p - i beta_1`, provided no element
/// `(l - i) beta_1 - beta_q` with `i < l < floor(beta_p / beta_1)` has that signature.
/// Along the ray in `j` each embedding is affine, so the admissible `j` form an initial segment.
pub fn generalized_semiconvergents(order: &OrderSpec, rec: &ExpansionRecord) -> Result<Vec<GeneralizedRow>> {
    let mut out = Vec::new();
    for k in 0..rec.cycle_end().min(rec.digits.len()) {
        let b = rec.state(k);
        for (p, q) in [(2usize, 3usize), (3, 2)] {
            let fl = to_i64(&rec.digits[k][p - 2]);
            for i in 1..fl {
                let base = &b[p - 1] - &b[0].scale(&BigInt::from(i));
                if base.is_zero() {
                    continue;
                }
                let s = order.signature(&base)?;
                let blocked = (i + 1..fl).any(|l| {
                    let e = &b[0].scale(&BigInt::from(l - i)) - &b[q - 1];
                    !e.is_zero() && order.signature(&e).ok() == Some(s)
                });
                if blocked {
                    continue;
                }
                let mut value = base;
                let mut j = 0u64;
                while j <= J_CAP && !value.is_zero() && order.signature(&value)? == s {
                    out.push(GeneralizedRow {
                        k,
                        p,
                        i: i as u64,
                        j,
                        value: value.clone(),
                    });
                    value = &value - &b[q - 1];
                    j += 1;
                }
            }
        }
    }
    Ok(out)
}
