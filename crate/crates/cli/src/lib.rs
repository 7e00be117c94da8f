//! Front end for the engine: session files, task execution, envelopes and
//! the named verification scenarios the binary exposes.

pub mod envelope;
pub mod parse;
pub mod print;
pub mod runner;
pub mod scenario;
pub mod session;

use parafrac_core::EngineError;
use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Parse(parse::ParseError),
    Input(String),
    Unknown { what: &'static str, name: String },
    Engine(EngineError),
}

impl CliError {
    pub fn unknown(what: &'static str, name: &str) -> CliError {
        CliError::Unknown {
            what,
            name: name.to_string(),
        }
    }

    /// 2 for bad input, 3 for a stabilization cap, per the exit-code contract.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(EngineError::StabilizationCapExceeded { .. })
            | CliError::Engine(EngineError::UnmixedCapExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "{}", e),
            CliError::Input(msg) => write!(f, "{}", msg),
            CliError::Unknown { what, name } => write!(f, "unknown {} `{}`", what, name),
            CliError::Engine(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for CliError {}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        CliError::Engine(e)
    }
}

impl From<parse::ParseError> for CliError {
    fn from(e: parse::ParseError) -> Self {
        CliError::Parse(e)
    }
}
