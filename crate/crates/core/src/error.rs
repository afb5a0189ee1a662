use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("homology obstruction: {0}")]
    HomologyObstruction(String),

    #[error("form evaluated on its singular locus: {0}")]
    Singularity(String),

    #[error("charge violates Dirac quantization: 2g is {defect} away from an integer")]
    Quantization { defect: f64 },

    #[error("period is not integral: {defect} away from the nearest integer")]
    Integrality { defect: f64 },

    #[error("Cech cocycle check failed: residual {residual}")]
    Cocycle { residual: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
