//! Codifferent certificates: a codifferent element `d` of signature `s` with `Tr(x d) = 1`
//! proves that `x` is `s`-indecomposable.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cubic::{codifferent_trace, AlgInt, CodifferentElem, OrderSpec, Signature};
use crate::error::{Error, Result};

use super::oracle::has_signature;

/// Outcome of a certificate search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certificate {
    /// A codifferent element of the right signature with trace `1` against the input.
    Found(CodifferentElem),
    /// No such element has numerator coordinates within the searched bound.
    NoCertificate,
}

/// Default numerator bound `4 a^2` for a family parameter `a` (at least 16).
pub fn default_search_bound(a: Option<i64>) -> i64 {
    a.map(|a| (4 * a * a).max(16)).unwrap_or(64)
}

/// The integer linear form `n -> Tr(x n / f'(x))` as coefficients over the power basis.
///
/// Since `Tr(x^m / f'(x))` is `0, 0, 1` for `m = 0, 1, 2`, the trace of `y / f'(x)` is the
/// coefficient of `x^2` in `y`.
pub fn trace_form(order: &OrderSpec, x: &AlgInt) -> [BigInt; 3] {
    let mut basis = AlgInt::one();
    std::array::from_fn(|_| {
        let c = order.mul(x, &basis).c[2].clone();
        basis = order.mul_x(&basis);
        c
    })
}

/// Searches numerators with coordinates in `[-bound, bound]` for a codifferent certificate.
pub fn certify_by_codifferent(order: &OrderSpec, x: &AlgInt, s: Signature, bound: i64) -> Result<Certificate> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let actual = order.signature(x)?;
    if actual != s {
        return Err(Error::SignatureMismatch {
            expected: s.to_string(),
            actual: actual.to_string(),
        });
    }
    let want = s * order.signature(&order.f_prime())?;
    let c = trace_form(order, x);
    // Solve for the coordinate with the largest nonzero coefficient.
    let Some(solve) = (0..3).filter(|&j| !c[j].is_zero()).max_by_key(|&j| c[j].abs()) else {
        return Ok(Certificate::NoCertificate);
    };
    let free: Vec<usize> = (0..3).filter(|&j| j != solve).collect();
    let b = BigInt::from(bound);
    for n0 in -bound..=bound {
        for n1 in -bound..=bound {
            let rest = BigInt::one() - &c[free[0]] * n0 - &c[free[1]] * n1;
            if !(&rest % &c[solve]).is_zero() {
                continue;
            }
            let ns = &rest / &c[solve];
            if ns.abs() > b {
                continue;
            }
            let mut num = AlgInt::zero();
            num.c[free[0]] = BigInt::from(n0);
            num.c[free[1]] = BigInt::from(n1);
            num.c[solve] = ns;
            if has_signature(order, &num, want) {
                let d = CodifferentElem::new(num);
                debug_assert_eq!(codifferent_trace(order, &d, x).ok(), Some(BigInt::one()));
                return Ok(Certificate::Found(d));
            }
        }
    }
    Ok(Certificate::NoCertificate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilyId};
    use crate::indecomposables::catalog::{lambda, mu};

    #[test]
    fn lambda_has_the_linear_certificate() {
        // (x + a) / f'(x) pairs to trace 1 with every lambda_{v,w}.
        let a = 5;
        let o = construct(FamilyId::EnnolaI(a)).unwrap();
        let d = CodifferentElem::new(AlgInt::from_i64([a, 1, 0]));
        for (v, w) in [(1, 1), (2, 3), (4, 4)] {
            let l = lambda(a, v, w);
            assert_eq!(codifferent_trace(&o, &d, &l).unwrap(), BigInt::one());
            assert_eq!(d.signature(&o).unwrap(), o.signature(&l).unwrap());
        }
    }

    #[test]
    fn mu_has_no_certificate() {
        let a = 4;
        let o = construct(FamilyId::EnnolaI(a)).unwrap();
        let m = mu(1);
        let s = o.signature(&m).unwrap();
        assert_eq!(certify_by_codifferent(&o, &m, s, 40).unwrap(), Certificate::NoCertificate);
    }

    #[test]
    fn zero_is_rejected() {
        let o = construct(FamilyId::EnnolaI(4)).unwrap();
        assert!(certify_by_codifferent(&o, &AlgInt::zero(), Signature::TOTALLY_POSITIVE, 4).is_err());
    }
}
