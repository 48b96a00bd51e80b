//! Command implementations behind the `artin-rd` binary.
//!
//! Every command returns a [`Report`] holding a text rendering, a JSON value
//! and the CSV artifacts to write; the binary decides what to print.

pub mod commands;
pub mod config;
pub mod repro;

use serde::Serialize;
use thiserror::Error;

pub use commands::{run, Command};
pub use config::{Presets, RunConfig};

/// Failures reported to the user as error JSON.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Artin(#[from] artin::Error),
    #[error(transparent)]
    Presentation(#[from] artin::PresentationError),
    #[error("unknown preset {0:?}; known presets: {1}")]
    UnknownPreset(String, String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("letter order {0:?} must list every letter exactly once")]
    BadOrder(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        use artin::Error as E;
        match self {
            CliError::Artin(e) => match e {
                E::Parse(_) => "parse",
                E::Presentation(_) => "presentation",
                E::NotLargeType => "not_large_type",
                E::Hypothesis33m => "hypothesis_33m",
                E::NotFreelyReduced => "not_freely_reduced",
                E::ForeignLetter { .. } => "foreign_letter",
                E::InfiniteLabel => "infinite_label",
                E::Unsigned => "unsigned",
                E::Identity => "identity",
                E::NotCritical => "not_critical",
                E::NotOverCritical(_) => "not_over_critical",
                E::BadPair { .. } => "bad_pair",
                E::Budget { .. } => "budget",
                E::OutsideBall { .. } => "outside_ball",
                E::Shape(_) => "shape",
                E::TailNotUnique { .. } => "tail_not_unique",
                E::Cache(_) => "cache",
            },
            CliError::Presentation(_) => "presentation",
            CliError::UnknownPreset(..) => "unknown_preset",
            CliError::Io { .. } => "io",
            CliError::BadOrder(_) => "bad_order",
            CliError::Usage(_) => "usage",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

/// Version of the JSON and CSV layouts documented in `docs/schemas.md`.
pub const SCHEMA_VERSION: u32 = 1;

/// A named CSV file produced by a command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Artifact {
    pub file_name: String,
    pub contents: String,
}

/// Output of one command.
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
    pub artifacts: Vec<Artifact>,
    /// False when the command ran but a check it performs failed.
    pub ok: bool,
}

impl Report {
    fn new(text: String, mut json: serde_json::Value) -> Self {
        json["schema_version"] = SCHEMA_VERSION.into();
        Report { text, json, artifacts: Vec::new(), ok: true }
    }
}
