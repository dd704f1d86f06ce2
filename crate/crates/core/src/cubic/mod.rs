//! Exact arithmetic, embeddings and units for a monic cubic order with three real roots.

pub mod algint;
pub mod codifferent;
pub mod field;
pub mod order;
pub mod roots;
pub mod signature;

pub use algint::AlgInt;
pub use codifferent::{codifferent_trace, CodifferentElem};
pub use field::FieldElem;
pub use order::{discriminant, OrderSpec, TotalOrder, UnitFactor, UNIT_EXPONENT_BOUND};
pub use signature::{Sign, Signature};
