//! Signs of real embeddings and signatures of nonzero elements.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Sign of a nonzero real number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    /// Strictly positive.
    Pos,
    /// Strictly negative.
    Neg,
}

impl Sign {
    /// The sign as `+1` or `-1`.
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    /// The opposite sign.
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, o: Sign) -> Sign {
        if self == o {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        })
    }
}

/// The triple of embedding signs, indexed by the order's label order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature(pub [Sign; 3]);

impl Signature {
    /// The totally positive signature.
    pub const TOTALLY_POSITIVE: Signature = Signature([Sign::Pos; 3]);

    /// Builds a signature from `+1`/`-1` style integers.
    pub fn from_ints(s: [i32; 3]) -> Signature {
        Signature(s.map(|v| if v > 0 { Sign::Pos } else { Sign::Neg }))
    }

    /// The signature with every sign flipped.
    pub fn negate(self) -> Signature {
        Signature(self.0.map(Sign::flip))
    }

    /// True iff all signs are positive.
    pub fn is_totally_positive(self) -> bool {
        self == Self::TOTALLY_POSITIVE
    }
}

impl Mul for Signature {
    type Output = Signature;
    fn mul(self, o: Signature) -> Signature {
        Signature([self.0[0] * o.0[0], self.0[1] * o.0[1], self.0[2] * o.0[2]])
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Accepts `(+,-,+)`, `+-+` and similar spellings.
    fn from_str(s: &str) -> Result<Signature> {
        let signs: Vec<Sign> = s
            .chars()
            .filter_map(|c| match c {
                '+' => Some(Sign::Pos),
                '-' | '\u{2212}' => Some(Sign::Neg),
                _ => None,
            })
            .collect();
        match signs.as_slice() {
            [a, b, c] => Ok(Signature([*a, *b, *c])),
            _ => Err(Error::Parse(format!("invalid signature {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let s: Signature = "(+,-,+)".parse().unwrap();
        assert_eq!(s.to_string(), "(+,-,+)");
        assert_eq!("+-+".parse::<Signature>().unwrap(), s);
        assert!("++".parse::<Signature>().is_err());
    }

    #[test]
    fn product_is_componentwise() {
        let a = Signature::from_ints([1, -1, -1]);
        let b = Signature::from_ints([-1, -1, 1]);
        assert_eq!(a * b, Signature::from_ints([-1, 1, -1]));
        assert_eq!(a * a, Signature::TOTALLY_POSITIVE);
    }
}
