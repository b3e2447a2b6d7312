//! File formats, randomized self-tests and shared plumbing for the
//! `linkhom` command line tool. The algorithms live in `linkhom-core`;
//! this crate only parses, prints and drives them.

pub mod files;
pub mod gen;
pub mod moveparse;
pub mod selftest;

use std::fmt;

/// An error carrying the process exit code it maps to.
///
/// Codes: 2 usage (produced by clap), 3 file I/O, 4 file/word syntax,
/// 5 validation (diagram or surface data invariants, mismatched strand
/// counts), 6 move errors, 7 realization target errors, 8 Milnor index
/// errors. Code 1 is reserved for negative verdicts (`equiv`, `gamma`,
/// `selftest`), not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> CliError {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn io(path: &std::path::Path, err: std::io::Error) -> CliError {
        CliError::new(3, format!("{}: {err}", path.display()))
    }

    pub fn parse(message: impl Into<String>) -> CliError {
        CliError::new(4, message)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for CliError {}

impl From<linkhom_core::Error> for CliError {
    fn from(err: linkhom_core::Error) -> CliError {
        use linkhom_core::Error::*;
        let code = match err {
            WordSyntax(_) | GeneratorOutOfRange { .. } => 4,
            NoSuchArrow { .. } | MoveNotApplicable(_) => 6,
            TargetUsesOwnMeridian { .. } => 7,
            BadMilnorIndex(_) => 8,
            _ => 5,
        };
        CliError::new(code, err.to_string())
    }
}
