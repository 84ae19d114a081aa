//! Patent record ingestion: text normalization, IPC code parsing, and
//! institution name resolution.
//!
//! Input records come in as JSON Lines (one record per line). Every string
//! field is passed through [`normalize_text`] so that downstream keys
//! (registration ids, IPC subclasses, institution names) compare reliably.

mod institutions;
mod ipc;
mod normalize;
mod record;

pub use institutions::{resolve_institutions, ResolverConfig};
pub use ipc::{extract_ipc_codes, parse_ipc, IpcCode};
pub use normalize::normalize_text;
pub use record::{load_records, parse_record, Ingest, ParseMode, PatentRecord};

use thiserror::Error;

/// Errors produced while parsing and validating patent records.
#[derive(Debug, Error)]
pub enum CorpusError {
    /// A required field is absent or empty after normalization.
    #[error("missing required field `{field}`{at}")]
    MissingField {
        field: &'static str,
        at: RecordContext,
    },

    /// An IPC token does not match the `A61K 31/00` shape.
    #[error("malformed IPC token `{token}`{at}")]
    MalformedIpc { token: String, at: RecordContext },

    /// A field is present but its value is unusable.
    #[error("invalid value for field `{field}`{at}: {reason}")]
    InvalidField {
        field: &'static str,
        reason: String,
        at: RecordContext,
    },

    /// A line of the JSONL input is not valid JSON.
    #[error("line {line}: invalid JSON: {source}")]
    Json {
        line: usize,
        #[source]
        source: serde_json::Error,
    },

    #[error("failed to read `{path}`: {source}")]
    Io {
        path: std::path::PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Where an error was found: input line and/or registration id, when known.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct RecordContext {
    pub line: Option<usize>,
    pub registration_id: Option<String>,
}

impl RecordContext {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn at_line(line: usize) -> Self {
        Self {
            line: Some(line),
            registration_id: None,
        }
    }

    pub fn with_registration_id(mut self, id: &str) -> Self {
        if !id.is_empty() {
            self.registration_id = Some(id.to_string());
        }
        self
    }
}

impl std::fmt::Display for RecordContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (&self.line, &self.registration_id) {
            (Some(line), Some(id)) => write!(f, " (line {line}, record {id})"),
            (Some(line), None) => write!(f, " (line {line})"),
            (None, Some(id)) => write!(f, " (record {id})"),
            (None, None) => Ok(()),
        }
    }
}
