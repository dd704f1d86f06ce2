//! Multidimensional continued fractions: Jacobi-Perron (homogeneous and inhomogeneous) and
//! Brun expansions, semiconvergents and their classification, and coset covers.

pub mod brun;
pub mod cover;
pub mod generalized;
pub mod ijpa;
pub mod jpa;
pub mod record;
pub mod semiconv;

pub use brun::brun_expand;
pub use cover::{lattice_cover_check, CoverReport, CoverVerdict};
pub use generalized::{generalized_semiconvergents, GeneralizedRow};
pub use ijpa::{hasse_bernstein_unit, ijpa_expand, lockstep_check};
pub use jpa::{abs_tau_vector, jpa_expand, DEFAULT_MAX_ITER};
pub use record::{Algorithm, ExpansionRecord, States, Status};
pub use semiconv::{classify_element, classify_rows, classify_semiconvergents, semiconvergents, summary_flags, Reference, SemiconvergentRow, SummaryFlags, Verdict};
