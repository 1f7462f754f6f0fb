//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by any fallkolor operation.
///
/// Verification *verdicts* (a coloring that is not fall, a design that fails
/// its coverage check) are not errors; they are reported as witnesses by the
/// corresponding functions. `Error` covers malformed inputs, violated
/// hypotheses, exceeded budgets, and post-verification failures of
/// constructions that are supposed to be correct by construction.
#[derive(Debug, Error)]
pub enum Error {
    #[error("arithmetic overflow while computing {0}")]
    Overflow(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("rank {rank} out of range: C({n},{m}) = {count}")]
    RankOutOfRange { rank: u64, n: u32, m: u32, count: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid design: {0}")]
    InvalidDesign(String),

    #[error("design verification too large: {subsets} t-subsets exceed budget {budget}")]
    VerifyBudgetExceeded { subsets: u64, budget: u64 },

    #[error("no Steiner triple system exists for v = {0}: v must be 1 or 3 (mod 6)")]
    NoSts(u32),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex budget exceeded: C({n},{m}) = {count} > {budget}")]
    VertexBudgetExceeded { n: u32, m: u32, count: u64, budget: u64 },

    #[error("vertex index {index} out of range: graph has {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("shape mismatch: coloring covers {coloring} vertices, graph has {graph}")]
    ShapeMismatch { coloring: usize, graph: usize },

    #[error("graph has no vertex labels: {0}")]
    MissingLabels(String),

    #[error("map endpoints do not match: {0}")]
    EndpointMismatch(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("design rejected: {0}")]
    DesignRejected(String),

    #[error("input coloring is not a fall coloring: {0}")]
    NotFall(String),

    /// A construction that should be correct by construction failed its
    /// mandatory post-verification. Indicates a bug, never returned silently.
    #[error("construction failed post-verification: {0}")]
    ConstructionUnverified(String),

    /// The star-extension recipe built a candidate coloring that did not
    /// verify as fall. Distinguished from `ConstructionUnverified` because
    /// the recipe is not backed by a proof; failure is a legitimate outcome.
    #[error("star-extension recipe failed verification: {0}")]
    RecipeUnverified(String),

    #[error("graph too large for MIS enumeration: {vertices} vertices > budget {budget}")]
    MisBudgetExceeded { vertices: usize, budget: usize },

    #[error("MIS catalog cap exceeded: more than {cap} maximal independent sets")]
    CatalogCapExceeded { cap: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
