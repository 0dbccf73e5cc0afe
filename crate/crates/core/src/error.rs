use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Debug, Error)]
pub enum CatError {
    #[error("linear algebra: {0}")]
    LinAlg(String),

    #[error("invalid Dynkin data: {0}")]
    Dynkin(String),

    #[error("quiver file: {0}")]
    Parse(String),

    #[error("knitting failed: {0}")]
    Knitting(String),

    #[error("translation quiver inconsistency: {0}")]
    MeshSymmetry(String),

    #[error("mesh category construction: {0}")]
    Mesh(String),

    #[error("morphism endpoints do not match: {0}")]
    Compose(String),

    #[error("tilting machinery: {0}")]
    Tilting(String),

    #[error("not an almost complete tilting object: {0}")]
    NotAlmostComplete(String),

    #[error("approximation verification failed: {0}")]
    Approximation(String),

    #[error("module category: {0}")]
    View(String),

    #[error("Ext formula inapplicable: {0}")]
    ExtFormula(String),

    #[error("left part: {0}")]
    LeftPart(String),

    #[error("slice: {0}")]
    Slice(String),

    #[error("quiver graph: {0}")]
    QuiverGraph(String),

    #[error("oracle: {0}")]
    Oracle(String),

    #[error("unknown object label: {0}")]
    UnknownLabel(String),
}

pub type Result<T> = std::result::Result<T, CatError>;
