//! Exact arithmetic for totally real cubic orders, multidimensional continued fractions
//! (Jacobi-Perron and Brun) with periodicity detection, catalogs and exhaustive oracles for
//! additively indecomposable integers, and sums-of-squares searches.

pub mod cubic;
pub mod error;
pub mod families;
pub mod indecomposables;
pub mod mcf;
pub mod pythagoras;
pub mod scan;

pub use cubic::{AlgInt, FieldElem, OrderSpec, Sign, Signature, TotalOrder, UnitFactor};
pub use error::{Error, Result};
pub use families::{construct, construct_at, FamilyId, FamilySpec};
