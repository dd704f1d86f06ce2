//! Minimal absolute norm of integers not associated to rational integers.

use num_bigint::BigInt;
use num_traits::Signed;
use std::ops::ControlFlow;

use crate::cubic::{AlgInt, OrderSpec, Sign, UnitFactor};
use crate::error::{Error, Result};

use super::catalog::catalog;
use super::oracle::enumerate_box;

/// True iff `x` is a unit multiple of a rational integer.
pub fn is_rational_associate(order: &OrderSpec, x: &AlgInt) -> bool {
    let c = x.content();
    order.norm(x).abs() == &c * &c * &c
}

/// Minimum of `|N(x)|` over the catalog representatives and the elements `1 + eta`.
///
/// `eta` runs over totally positive units `+-u1^k u2^l` with `|k|, |l| <= bound`. Every
/// element of minimal norm among those not associated to rational integers is either a non-unit
/// indecomposable or a sum of two units of equal signature, and the latter is a unit times
/// `1 + eta`.
pub fn min_nonassociated_norm(order: &OrderSpec, bound: i64) -> Result<BigInt> {
    order.units()?;
    let family = order.family().ok_or(Error::MissingUnits)?;
    let cat = catalog(family)?;
    let mut best: Option<BigInt> = None;
    let mut consider = |x: &AlgInt| {
        if x.is_zero() || is_rational_associate(order, x) {
            return;
        }
        let n = order.norm(x).abs();
        if best.as_ref().is_none_or(|b| &n < b) {
            best = Some(n);
        }
    };
    for e in &cat.entries {
        consider(&e.value);
    }
    for k in -bound..=bound {
        for l in -bound..=bound {
            for sign in [Sign::Pos, Sign::Neg] {
                let eta = order.unit_compose(UnitFactor { sign, k, l })?;
                if order.is_totally_positive(&eta) {
                    consider(&(&eta + &AlgInt::one()));
                }
            }
        }
    }
    best.ok_or(Error::BoundViolated("no candidate found".into()))
}

/// Exhaustive minimum of `|N(x)|` over nonzero `x` not associated to rational integers, among
/// norms at most `limit`; `None` means every such norm exceeds `limit`.
///
/// Multiplying by units moves the logarithmic embedding of `x` into the fundamental
/// parallelogram of the unit lattice centred on `ln|N(x)|/3 (1,1,1)`, so some associate of
/// every `x` with `|N(x)| <= limit` satisfies `|sigma_i| <= limit^(1/3) exp(R)` with `R` half
/// the sum of the sup norms of the fundamental unit log vectors. That box is enumerated.
pub fn box_min_norm(order: &OrderSpec, limit: u64) -> Result<Option<BigInt>> {
    let (u1, u2) = order.units()?;
    let sup = |u: &AlgInt| (0..3).map(|i| order.ln_abs(u, i).abs()).fold(0.0, f64::max);
    let radius = (limit as f64).cbrt() * (0.5 * (sup(u1) + sup(u2))).exp() * 1.001 + 1e-6;
    let lim = BigInt::from(limit);
    let mut best: Option<BigInt> = None;
    enumerate_box(order, [(-radius, radius); 3], None, |c| {
        let x = AlgInt::from_i64(c);
        if !x.is_zero() {
            let n = order.norm(&x).abs();
            if n <= lim && best.as_ref().is_none_or(|b| &n < b) && !is_rational_associate(order, &x) {
                best = Some(n);
            }
        }
        ControlFlow::<()>::Continue(())
    })?;
    Ok(best)
}

/// The norm bound `2a - 3` as a machine integer, for reporting.
pub fn ennola_norm_bound(a: i64) -> i64 {
    2 * a - 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilyId};

    #[test]
    fn ennola_minimal_norms() {
        for a in [3, 4, 6] {
            let o = construct(FamilyId::EnnolaI(a)).unwrap();
            let want = BigInt::from(ennola_norm_bound(a));
            assert_eq!(min_nonassociated_norm(&o, 4).unwrap(), want);
            assert_eq!(box_min_norm(&o, (2 * a - 3) as u64).unwrap(), Some(want));
        }
    }

    #[test]
    fn rational_associates_are_detected() {
        let o = construct(FamilyId::EnnolaI(4)).unwrap();
        let x = o.mul(&AlgInt::int(3), &AlgInt::x());
        assert!(is_rational_associate(&o, &x));
        assert!(!is_rational_associate(&o, &AlgInt::from_i64([1, 1, 1])));
    }
}
