//! The record of an expansion run and its JSON representation.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cubic::algint::{ser_bigint, IntRepr};
use crate::cubic::{AlgInt, FieldElem};

/// The expansion algorithm that produced a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    /// Inhomogeneous Jacobi-Perron algorithm on a pair of field elements.
    #[serde(rename = "iJPA")]
    IJpa,
    /// Homogeneous Jacobi-Perron algorithm on a triple of order elements.
    #[serde(rename = "JPA")]
    Jpa,
    /// Brun's sort-and-subtract algorithm.
    #[serde(rename = "Brun")]
    Brun,
}

/// How a run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    /// A recurrence was detected; `l0` and `l1` are set.
    Periodic,
    /// The iteration bound was reached without a recurrence.
    BoundExhausted,
    /// The expansion stopped on a rational endpoint.
    Terminated,
}

/// States of a run: order-element triples or field-element pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum States {
    /// JPA and Brun states.
    Integral(Vec<[AlgInt; 3]>),
    /// iJPA states.
    Rational(Vec<[FieldElem; 2]>),
}

impl States {
    /// Number of recorded states.
    pub fn len(&self) -> usize {
        match self {
            States::Integral(v) => v.len(),
            States::Rational(v) => v.len(),
        }
    }

    /// True iff no state is recorded.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The integral states, if this is a JPA or Brun run.
    pub fn integral(&self) -> Option<&[[AlgInt; 3]]> {
        match self {
            States::Integral(v) => Some(v),
            States::Rational(_) => None,
        }
    }

    /// The field states, if this is an iJPA run.
    pub fn rational(&self) -> Option<&[[FieldElem; 2]]> {
        match self {
            States::Rational(v) => Some(v),
            States::Integral(_) => None,
        }
    }
}

/// A complete expansion run.
///
/// `states[k]` is the state at step `k`, `digits[k]` the digit vector used to pass from
/// `states[k]` to `states[k+1]`. For a periodic run the states `0..=l0+l1` are recorded and
/// state `l0+l1` repeats state `l0` (exactly for iJPA, up to `period_unit` otherwise).
/// Brun digits are the sorting permutation applied after the subtraction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionRecord {
    /// Algorithm used.
    pub algorithm: Algorithm,
    /// Label of the embedding used for every floor and comparison.
    pub tracking_root: String,
    /// Label index of the tracking embedding.
    pub tracking_index: usize,
    /// Recorded states.
    pub states: States,
    /// Digit vectors.
    #[serde(serialize_with = "ser_digits", deserialize_with = "de_digits")]
    pub digits: Vec<Vec<BigInt>>,
    /// Preperiod length.
    pub l0: Option<usize>,
    /// Period length.
    pub l1: Option<usize>,
    /// Unit with `state[l0+l1] = period_unit * state[l0]` (JPA and Brun only).
    pub period_unit: Option<AlgInt>,
    /// Termination status.
    pub status: Status,
}

impl ExpansionRecord {
    /// True iff a recurrence was detected.
    pub fn is_periodic(&self) -> bool {
        self.status == Status::Periodic
    }

    /// Digits as machine integers.
    pub fn digits_i64(&self) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.digits
            .iter()
            .map(|d| d.iter().map(|v| v.to_i64().expect("digit fits in i64")).collect())
            .collect()
    }

    /// Integral state `k`.
    pub fn state(&self, k: usize) -> &[AlgInt; 3] {
        &self.states.integral().expect("integral states")[k]
    }

    /// Number of steps covering the preperiod and one period (or all recorded steps).
    pub fn cycle_end(&self) -> usize {
        match (self.l0, self.l1) {
            (Some(l0), Some(l1)) => l0 + l1,
            _ => self.digits.len(),
        }
    }
}

fn ser_digits<S: Serializer>(d: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    struct Row<'a>(&'a [BigInt]);
    impl Serialize for Row<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(self.0.len()))?;
            for v in self.0 {
                seq.serialize_element(&B(v))?;
            }
            seq.end()
        }
    }
    struct B<'a>(&'a BigInt);
    impl Serialize for B<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            ser_bigint(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(d.len()))?;
    for row in d {
        seq.serialize_element(&Row(row))?;
    }
    seq.end()
}

fn de_digits<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
    let raw: Vec<Vec<IntRepr>> = Deserialize::deserialize(d)?;
    raw.into_iter()
        .map(|row| row.into_iter().map(IntRepr::into_bigint).collect())
        .collect()
}
