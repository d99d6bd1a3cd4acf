//! Library side of the `engel-lab` command line: group spec strings, the
//! on-disk group cache, the per-subcommand reports and the verification
//! sweep. The binary only parses arguments and prints.

pub mod cache;
pub mod commands;
pub mod spec;
pub mod verify;

use thiserror::Error;

use crate::analysis::AnalysisError;
use crate::engel::EngelError;
use crate::genus::GenusError;
use crate::group::GroupError;
use crate::spectra::SpectraError;

pub use cache::{GroupCache, CACHE_ENV, MAX_CACHED_ORDER};
pub use commands::{
    cmd_analyze, cmd_graph, cmd_group, cmd_sweep_single_arcs, AnalysisDocument, GraphFormat, GraphKind, GroupSummary,
    SweepRow,
};
pub use spec::GroupSpec;
pub use verify::{
    any_failed, cmd_verify_paper, records_to_csv, records_to_json, Status, SweepFamily, VerificationRecord,
    VerifyOptions, DEFAULT_MAX_ORDER,
};

/// Version tag carried by every JSON document and cache entry.
pub const SCHEMA: &str = "engel-lab/1";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid group spec {spec:?}: {reason}")]
    InvalidSpec { spec: String, reason: String },
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Engel(#[from] EngelError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Genus(#[from] GenusError),
}

impl CliError {
    /// 2 for malformed input, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::InvalidSpec { .. } | Self::Usage(_) => 2,
            _ => 1,
        }
    }
}
