use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("1-form is not invariant under generator {generator}")]
    NotInvariant { generator: usize },

    #[error("non-isolated singularity: quotient algebra is infinite-dimensional ({0})")]
    NonIsolated(String),

    #[error("root finder did not converge after {iterations} iterations (best scaled residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("degenerate residue pairing on {which}: inertia {inertia}\n{dump}")]
    DegeneratePairing {
        which: String,
        inertia: String,
        dump: String,
    },

    #[error("jacobian class vanishes in the quotient algebra")]
    ZeroJacobianClass,

    #[error("functional vanishes on the jacobian class")]
    DegenerateFunctional,

    #[error("subgroup lattice bound exceeded: |G| = {order} > {bound}")]
    GroupTooLarge { order: usize, bound: usize },

    #[error("subgroup mismatch: {0}")]
    SubgroupMismatch(String),

    #[error("not quasihomogeneous: {0}")]
    NotQuasihomogeneous(String),

    #[error("degenerate perturbation: {0}")]
    DegeneratePerturbation(String),

    #[error("ambiguous classification: {0} (try another seed or a different t)")]
    AmbiguousClassification(String),

    #[error("{0}")]
    Parse(String),
}
