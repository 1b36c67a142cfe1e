use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a quaternion of norm {0:e}")]
    ZeroDivision(f64),

    #[error("components do not share a common slice plane (off-plane residual {0:e})")]
    NotInSliceCone(f64),

    #[error("imaginary units are not distinct (|J - K| = {0:e})")]
    DegenerateSlicePair(f64),

    #[error("not an imaginary unit: {0}")]
    InvalidUnit(String),

    #[error("empty set of imaginary units")]
    EmptyUnitSet,

    #[error("need at least two admissible imaginary units, found {0}")]
    InsufficientUnits(usize),

    #[error("symmetrized stem is not real (imaginary residual {residual:e} > {bound:e})")]
    NonRealSymmetrization { residual: f64, bound: f64 },

    #[error("no witness path from the real subspace was found for the point")]
    NoWitnessPath,

    #[error("finite-difference step {step:e} must be below a quarter of the radius {radius:e}")]
    StepOutOfRange { step: f64, radius: f64 },

    #[error("point outside the function's domain: {0}")]
    OutOfDomain(String),

    #[error("incompatible operands: {0}")]
    IncompatibleDomains(String),

    #[error("precondition was asserted, not verified: {0}")]
    PreconditionUnverified(String),

    #[error("domain check failed: {0}")]
    DomainCheckFailed(String),

    #[error("root finder did not converge: {0}")]
    NoConvergence(String),

    #[error("function vanishes identically; its zero set is the whole domain")]
    IdenticallyZero,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
