use thiserror::Error;

use crate::domination::DominationCertificate;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Text input that does not parse; `line` is 1-based.
    #[error("malformed input at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph6 decode error: {0}")]
    Graph6(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// The exact solver ran out of budget. Carries the best certificate
    /// found so far (not proven optimal).
    #[error("solver budget exhausted after {nodes} nodes; best known size {}", best.size)]
    SolverBudget {
        nodes: u64,
        best: Box<DominationCertificate>,
    },

    #[error("random generation failed after {attempts} attempts")]
    GenerationFailed { attempts: usize },

    /// An internal consistency check failed. Always a bug.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Graph6(_) => "graph6",
            Error::Validation(_) => "validation",
            Error::Precondition(_) => "precondition",
            Error::ResourceLimit(_) => "resource-limit",
            Error::SolverBudget { .. } => "resource-limit",
            Error::GenerationFailed { .. } => "generation-failed",
            Error::Verification(_) => "verification",
        }
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit(_) | Error::SolverBudget { .. })
    }
}
