//! Field elements `num / den` with an order element numerator and a positive integer denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::algint::AlgInt;
use super::order::OrderSpec;
use crate::error::{Error, Result};

/// An element of the cubic field, stored in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    num: AlgInt,
    den: BigInt,
}

impl FieldElem {
    /// Builds `num / den`, normalizing signs and common factors.
    pub fn new(num: AlgInt, den: BigInt) -> Result<FieldElem> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (mut num, mut den) = if den.is_negative() { (-num, -den) } else { (num, den) };
        let g = num.content().gcd(&den);
        if !g.is_one() && !g.is_zero() {
            for c in num.c.iter_mut() {
                *c = &*c / &g;
            }
            den = &den / &g;
        }
        if num.is_zero() {
            den = BigInt::one();
        }
        Ok(FieldElem { num, den })
    }

    /// Embeds an order element.
    pub fn from_int(a: AlgInt) -> FieldElem {
        FieldElem {
            num: a,
            den: BigInt::one(),
        }
    }

    /// The rational integer `n`.
    pub fn from_integer(n: impl Into<BigInt>) -> FieldElem {
        FieldElem::from_int(AlgInt::int(n))
    }

    /// Numerator.
    pub fn num(&self) -> &AlgInt {
        &self.num
    }

    /// Positive denominator.
    pub fn den(&self) -> &BigInt {
        &self.den
    }

    /// True iff the element is zero.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True iff the element lies in the order.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// The order element, if integral.
    pub fn as_int(&self) -> Option<&AlgInt> {
        self.is_integral().then_some(&self.num)
    }

    /// True iff the element is a rational number.
    pub fn is_rational(&self) -> bool {
        self.num.is_rational()
    }

    /// Sum.
    pub fn add(&self, o: &FieldElem) -> FieldElem {
        let num = self.num.scale(&o.den) + o.num.scale(&self.den);
        FieldElem::new(num, &self.den * &o.den).expect("nonzero denominator")
    }

    /// Difference.
    pub fn sub(&self, o: &FieldElem) -> FieldElem {
        let num = self.num.scale(&o.den) - o.num.scale(&self.den);
        FieldElem::new(num, &self.den * &o.den).expect("nonzero denominator")
    }

    /// Subtracts a rational integer.
    pub fn sub_int(&self, n: &BigInt) -> FieldElem {
        let mut num = self.num.clone();
        num.c[0] -= n * &self.den;
        FieldElem {
            num,
            den: self.den.clone(),
        }
    }

    /// Product in the field.
    pub fn mul(&self, o: &FieldElem, order: &OrderSpec) -> FieldElem {
        FieldElem::new(order.mul(&self.num, &o.num), &self.den * &o.den).expect("nonzero denominator")
    }

    /// Multiplicative inverse.
    pub fn inv(&self, order: &OrderSpec) -> Result<FieldElem> {
        if self.num.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let n = order.norm(&self.num);
        let adj = order.adjugate(&self.num);
        FieldElem::new(adj.scale(&self.den), n)
    }

    /// Quotient.
    pub fn div(&self, o: &FieldElem, order: &OrderSpec) -> Result<FieldElem> {
        Ok(self.mul(&o.inv(order)?, order))
    }

    /// Trace as a reduced fraction `(num, den)`.
    pub fn trace(&self, order: &OrderSpec) -> (BigInt, BigInt) {
        let t = order.trace(&self.num);
        let g = t.gcd(&self.den);
        if g.is_zero() {
            return (t, self.den.clone());
        }
        (&t / &g, &self.den / &g)
    }

    /// Floor of embedding `i`.
    pub fn floor_at(&self, order: &OrderSpec, i: usize) -> BigInt {
        order.floor_div_at(&self.num, &self.den, i)
    }

    /// Formats with a chosen variable name.
    pub fn display_with(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.display_with(var)
        } else {
            format!("({})/{}", self.num.display_with(var), self.den)
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{}", self.num, self.den)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

/// Serialized as three rational strings such as `"3/7"`.
impl Serialize for FieldElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<String> = self
            .num
            .c
            .iter()
            .map(|c| {
                let g = c.gcd(&self.den);
                if c.is_zero() {
                    "0".to_string()
                } else if (&self.den / &g).is_one() {
                    (c / &g).to_string()
                } else {
                    format!("{}/{}", c / &g, &self.den / &g)
                }
            })
            .collect();
        parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let parts: [String; 3] = Deserialize::deserialize(d)?;
        let mut nums = Vec::new();
        let mut dens = Vec::new();
        for p in &parts {
            let (n, dn) = match p.split_once('/') {
                Some((n, dn)) => (n.trim(), dn.trim()),
                None => (p.trim(), "1"),
            };
            let n: BigInt = n.parse().map_err(|_| D::Error::custom(format!("bad rational {p:?}")))?;
            let dn: BigInt = dn.parse().map_err(|_| D::Error::custom(format!("bad rational {p:?}")))?;
            if dn.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            nums.push(n);
            dens.push(dn);
        }
        let l = dens.iter().fold(BigInt::one(), |acc, d| acc.lcm(d));
        let num = AlgInt::new(
            &nums[0] * (&l / &dens[0]),
            &nums[1] * (&l / &dens[1]),
            &nums[2] * (&l / &dens[2]),
        );
        FieldElem::new(num, l).map_err(|e| D::Error::custom(e.to_string()))
    }
}
