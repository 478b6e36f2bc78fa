//! Instance files, SVG rendering, and the benchmark harness.
//!
//! Documents are JSON with a `version` field and one of three payloads: a
//! polygonal domain (`outer` + optional `holes`), collinear `positions`, or
//! an orthogonal graph drawing (`vertices` + `edges` + `kappa`). Ring
//! orientation in input files is ignored; rings are normalized on load.
//! Every load runs full geometric validation, so a parsed document is
//! always usable directly.

mod bench;
mod instance;
mod svg;

pub use bench::{run_bench, BenchConfig, BenchOutcome, CSV_HEADER};
pub use instance::{
    parse_instance, parse_sidecar, read_instance, serialize_instance, serialize_sidecar,
    write_instance, write_text_atomic, Document, Sidecar,
};
pub use svg::{render_svg, SvgScene};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    /// The document is not well-formed (syntax, missing or mistyped fields).
    #[error("parse error: {0}")]
    Parse(String),
    /// The document is well-formed but describes an invalid instance.
    #[error("invalid instance: {0}")]
    Validation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
