//! Error types shared across the toolkit.

use crate::surface::SurfaceSig;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("{0} is closed; the polygon model requires at least one boundary component")]
    ClosedSurfaceModel(SurfaceSig),
    #[error("surface mismatch: {0} vs {1}")]
    SurfaceMismatch(SurfaceSig, SurfaceSig),
    #[error("curve is not simple: normalized form has {crossings} self-crossings")]
    NotSimple { crossings: usize },
    #[error("letter {0} is out of range for {1}")]
    LetterOutOfRange(i16, SurfaceSig),
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unsupported surface {0}")]
    UnsupportedSurface(SurfaceSig),
    #[error("unknown curve name `{0}`")]
    UnknownName(String),
    #[error("duplicate curve name `{0}`")]
    DuplicateName(String),
    #[error("certified fact failed: {0}")]
    FactFailed(String),
    #[error("malformed catalog: {0}")]
    Malformed(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Error)]
pub enum ScriptError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("step {step}: {msg}")]
    Rejected { step: usize, msg: String },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}
