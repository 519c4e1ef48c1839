use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

/// A malformed textual or JSON input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),

    /// A genus-series coefficient was requested outside its known window.
    #[error("coefficient at t^{exponent}, degree {degree} is outside the truncation window")]
    OutsideWindow { exponent: i64, degree: u32 },

    /// An input series is missing a coefficient the computation needs.
    #[error("insufficient input window: missing chi^S_n for (g, n) = ({g}, {n})")]
    MissingInput { g: i64, n: u32 },

    /// Several required fixture entries are absent.
    #[error("missing fixtures: {}", format_cells(.0))]
    MissingFixtures(Vec<(i64, u32)>),

    #[error("invalid fixture entry (g, n) = ({g}, {n}): {reason}")]
    Fixture { g: i64, n: u32, reason: String },

    #[error("input series has a nonzero unstable coefficient at (g, n) = ({g}, {n})")]
    UnstableInput { g: i64, n: u32 },

    #[error("interpolation failed: {0}")]
    Interpolation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn format_cells(cells: &[(i64, u32)]) -> String {
    cells
        .iter()
        .map(|(g, n)| format!("({g}, {n})"))
        .collect::<Vec<_>>()
        .join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
