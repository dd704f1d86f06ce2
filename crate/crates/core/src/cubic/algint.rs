//! Elements of a cubic order in the power basis `1, x, x^2`.
//!
//! Addition, subtraction and scaling do not depend on the defining polynomial and are
//! implemented here directly. Ring multiplication lives on [`crate::cubic::OrderSpec`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// An element `v1 + v2*x + v3*x^2` of the order `Z[x]/(f)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AlgInt {
    /// Coordinates `(v1, v2, v3)` in the power basis.
    pub c: [BigInt; 3],
}

impl AlgInt {
    /// Builds an element from arbitrary integer coordinates.
    pub fn new(v1: impl Into<BigInt>, v2: impl Into<BigInt>, v3: impl Into<BigInt>) -> Self {
        AlgInt {
            c: [v1.into(), v2.into(), v3.into()],
        }
    }

    /// Builds an element from machine integers.
    pub fn from_i64(v: [i64; 3]) -> Self {
        AlgInt::new(v[0], v[1], v[2])
    }

    /// The zero element.
    pub fn zero() -> Self {
        AlgInt::default()
    }

    /// The unit element.
    pub fn one() -> Self {
        AlgInt::new(1, 0, 0)
    }

    /// The generator `x` of the order.
    pub fn x() -> Self {
        AlgInt::new(0, 1, 0)
    }

    /// The rational integer `n`.
    pub fn int(n: impl Into<BigInt>) -> Self {
        AlgInt::new(n, 0, 0)
    }

    /// True iff all coordinates vanish.
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// True iff the element is a rational integer.
    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero()
    }

    /// Multiplies every coordinate by an integer.
    pub fn scale(&self, k: &BigInt) -> Self {
        AlgInt {
            c: [&self.c[0] * k, &self.c[1] * k, &self.c[2] * k],
        }
    }

    /// Greatest common divisor of the coordinates (zero for the zero element).
    pub fn content(&self) -> BigInt {
        self.c
            .iter()
            .fold(BigInt::zero(), |g, v| g.gcd(v))
    }

    /// Coordinates as `i64` if they all fit.
    pub fn to_i64(&self) -> Option<[i64; 3]> {
        use num_traits::ToPrimitive;
        Some([self.c[0].to_i64()?, self.c[1].to_i64()?, self.c[2].to_i64()?])
    }

    /// Formats the element with a chosen name for the generator, e.g. `-1+rho^2`.
    pub fn display_with(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let neg = v.is_negative();
            let mag = v.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^2"),
            };
            if k == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&mono);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Debug for AlgInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c[0], self.c[1], self.c[2])
    }
}

impl fmt::Display for AlgInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl Add for &AlgInt {
    type Output = AlgInt;
    fn add(self, o: &AlgInt) -> AlgInt {
        AlgInt {
            c: [&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2]],
        }
    }
}

impl Add for AlgInt {
    type Output = AlgInt;
    fn add(self, o: AlgInt) -> AlgInt {
        &self + &o
    }
}

impl Sub for &AlgInt {
    type Output = AlgInt;
    fn sub(self, o: &AlgInt) -> AlgInt {
        AlgInt {
            c: [&self.c[0] - &o.c[0], &self.c[1] - &o.c[1], &self.c[2] - &o.c[2]],
        }
    }
}

impl Sub for AlgInt {
    type Output = AlgInt;
    fn sub(self, o: AlgInt) -> AlgInt {
        &self - &o
    }
}

impl AddAssign<&AlgInt> for AlgInt {
    fn add_assign(&mut self, o: &AlgInt) {
        for k in 0..3 {
            self.c[k] += &o.c[k];
        }
    }
}

impl SubAssign<&AlgInt> for AlgInt {
    fn sub_assign(&mut self, o: &AlgInt) {
        for k in 0..3 {
            self.c[k] -= &o.c[k];
        }
    }
}

impl Neg for &AlgInt {
    type Output = AlgInt;
    fn neg(self) -> AlgInt {
        AlgInt {
            c: [-&self.c[0], -&self.c[1], -&self.c[2]],
        }
    }
}

impl Neg for AlgInt {
    type Output = AlgInt;
    fn neg(self) -> AlgInt {
        -&self
    }
}

impl Mul<&BigInt> for &AlgInt {
    type Output = AlgInt;
    fn mul(self, k: &BigInt) -> AlgInt {
        self.scale(k)
    }
}

impl Mul<i64> for &AlgInt {
    type Output = AlgInt;
    fn mul(self, k: i64) -> AlgInt {
        self.scale(&BigInt::from(k))
    }
}

/// Largest magnitude serialized as a JSON number; larger values become decimal strings.
const JSON_SAFE: i64 = 1 << 53;

/// Serializes an integer as a JSON number when it is exactly representable, else as a string.
pub(crate) fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    use num_traits::ToPrimitive;
    match v.to_i64() {
        Some(n) if n.abs() < JSON_SAFE => s.serialize_i64(n),
        _ => s.serialize_str(&v.to_string()),
    }
}

/// An integer that may arrive as a JSON number or a decimal string.
#[derive(Deserialize)]
#[serde(untagged)]
pub(crate) enum IntRepr {
    Num(i64),
    Str(String),
}

impl IntRepr {
    pub(crate) fn into_bigint<E: serde::de::Error>(self) -> Result<BigInt, E> {
        match self {
            IntRepr::Num(n) => Ok(BigInt::from(n)),
            IntRepr::Str(s) => s
                .trim()
                .parse::<BigInt>()
                .map_err(|_| E::custom(format!("invalid integer literal {s:?}"))),
        }
    }
}

impl Serialize for AlgInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        struct B<'a>(&'a BigInt);
        impl Serialize for B<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                ser_bigint(self.0, s)
            }
        }
        let mut seq = s.serialize_seq(Some(3))?;
        for v in &self.c {
            seq.serialize_element(&B(v))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for AlgInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: [IntRepr; 3] = Deserialize::deserialize(d)?;
        let [a, b, c] = raw;
        Ok(AlgInt {
            c: [a.into_bigint()?, b.into_bigint()?, c.into_bigint()?],
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_uses_chosen_variable() {
        assert_eq!(AlgInt::from_i64([-1, 0, 1]).display_with("rho"), "-1+rho^2");
        assert_eq!(AlgInt::from_i64([0, -3, 2]).display_with("t"), "-3t+2t^2");
        assert_eq!(AlgInt::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip_small_and_big() {
        let big = AlgInt::new(BigInt::from(10).pow(30), -5, 0);
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(s, "[\"1000000000000000000000000000000\",-5,0]");
        let back: AlgInt = serde_json::from_str(&s).unwrap();
        assert_eq!(back, big);
    }

    #[test]
    fn content_is_coordinate_gcd() {
        assert_eq!(AlgInt::from_i64([6, -9, 12]).content(), BigInt::from(3));
    }
}

/// Field adapter for `#[serde(with = ...)]` on a single `BigInt`.
pub(crate) mod bigint_serde {
    use super::{ser_bigint, IntRepr};
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub(crate) fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        ser_bigint(v, s)
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        IntRepr::deserialize(d)?.into_bigint()
    }
}
