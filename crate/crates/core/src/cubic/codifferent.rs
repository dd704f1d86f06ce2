//! Elements of the codifferent `(1/f'(x)) Z[x]`, stored by their numerator.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::algint::AlgInt;
use super::field::FieldElem;
use super::order::OrderSpec;
use super::signature::Signature;
use crate::error::{Error, Result};

/// The codifferent element `numerator / f'(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodifferentElem {
    /// Numerator in the power basis.
    pub numerator: AlgInt,
}

impl CodifferentElem {
    /// Wraps a numerator.
    pub fn new(numerator: AlgInt) -> Self {
        CodifferentElem { numerator }
    }

    /// The element as a field element.
    pub fn to_field(&self, order: &OrderSpec) -> FieldElem {
        let fp = FieldElem::from_int(order.f_prime());
        FieldElem::from_int(self.numerator.clone())
            .div(&fp, order)
            .expect("f' does not vanish on a squarefree polynomial")
    }

    /// Signature, obtained from the signatures of the numerator and of `f'(x)`.
    pub fn signature(&self, order: &OrderSpec) -> Result<Signature> {
        Ok(order.signature(&self.numerator)? * order.signature(&order.f_prime())?)
    }
}

/// Exact trace `Tr(a * d)` computed through field arithmetic.
///
/// Fails with [`Error::NonIntegralTrace`] when the result is not an integer, which means that
/// `d` is not in the codifferent of the order.
pub fn codifferent_trace(order: &OrderSpec, d: &CodifferentElem, a: &AlgInt) -> Result<BigInt> {
    let prod = d.to_field(order).mul(&FieldElem::from_int(a.clone()), order);
    let (num, den) = prod.trace(order);
    if den.is_one() {
        Ok(num)
    } else {
        Err(Error::NonIntegralTrace {
            num: num.to_string(),
            den: den.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_against_dual_basis_formula() {
        // Tr(x^j / f'(x)) is 0 for j = 0, 1 and 1 for j = 2.
        let o = OrderSpec::new(2, -3, -1).unwrap();
        let d = CodifferentElem::new(AlgInt::one());
        for (j, want) in [(0, 0), (1, 0), (2, 1)] {
            let mut e = AlgInt::zero();
            e.c[j] = BigInt::from(1);
            assert_eq!(codifferent_trace(&o, &d, &e).unwrap(), BigInt::from(want));
        }
        assert_eq!(codifferent_trace(&o, &d, &AlgInt::zero()).unwrap(), BigInt::from(0));
    }
}
