//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failures reported by the arithmetic, expansion and search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A sign or signature was requested for the zero element.
    #[error("the zero element has no sign")]
    ZeroElement,
    /// Division by the zero element.
    #[error("division by zero")]
    ZeroDivisor,
    /// The quotient of two order elements does not lie in the order.
    #[error("quotient is not an element of the order")]
    NotDivisible,
    /// The element is not a unit of the order.
    #[error("element is not a unit")]
    NotAUnit,
    /// No exponent pair within the search bound reproduces the unit.
    #[error("no unit decomposition with exponents bounded by {bound}")]
    DecompositionNotFound { bound: i64 },
    /// The two elements differ by a non-unit factor.
    #[error("elements are not associated")]
    NotAssociated,
    /// A candidate codifferent element produced a non-integral trace.
    #[error("trace {num}/{den} is not an integer")]
    NonIntegralTrace { num: String, den: String },
    /// The order carries no fundamental units.
    #[error("fundamental units are not available for this order")]
    MissingUnits,
    /// The polynomial does not have three distinct real roots.
    #[error("polynomial x^3{p:+}x^2{q:+}x{r:+} is not totally real (discriminant {disc})")]
    NotTotallyReal { p: i64, q: i64, r: i64, disc: String },
    /// The polynomial has a rational root.
    #[error("polynomial has the rational root {root}")]
    Reducible { root: String },
    /// A family parameter lies outside its admissible range.
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    /// An isolated root violates a known closed-form bound.
    #[error("root bound violated: {0}")]
    BoundViolated(String),
    /// The requested conjugate has no expression in the order.
    #[error("conjugate {0} is not expressible in the order")]
    NotGalois(String),
    /// An element does not have the signature it was queried with.
    #[error("element signature {actual} differs from requested {expected}")]
    SignatureMismatch { expected: String, actual: String },
    /// Three parallelepiped generators are linearly dependent.
    #[error("parallelepiped generators are linearly dependent")]
    DegenerateBasis,
    /// The element is not totally positive.
    #[error("element is not totally positive")]
    NotTotallyPositive,
    /// The target is not a sum of squares from the available set.
    #[error("target is not a sum of the available squares")]
    NoRepresentation,
    /// Every representation needs more squares than allowed.
    #[error("more than {cap} squares are required")]
    MoreThanCap { cap: usize },
    /// The expansion is not periodic.
    #[error("expansion is not periodic")]
    NotPeriodic,
    /// The pivot component vanished on an irrational input.
    #[error("zero pivot at step {step}")]
    ZeroPivot { step: usize },
    /// A Brun input component is negative in the tracking embedding.
    #[error("component {index} is negative in the tracking embedding")]
    NegativeComponent { index: usize },
    /// A root label is not known to the order.
    #[error("unknown root label {0:?}")]
    UnknownLabel(String),
    /// Supplied units are not units or are dependent.
    #[error("invalid fundamental units: {0}")]
    InvalidUnits(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
