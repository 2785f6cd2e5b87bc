use std::fmt;
use std::process::ExitCode;

use ppn_core::phylo::PhyloError;
use ppn_core::ppn::PpnError;
use ppn_core::seqio::SeqError;

/// How a failed run is reported to the calling shell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Failure {
    Io,
    Validation,
    MalformedInput,
}

impl Failure {
    pub fn exit_code(self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Io => 1,
            Failure::Validation => 2,
            Failure::MalformedInput => 3,
        })
    }
}

#[derive(Debug)]
pub struct CliError {
    pub kind: Failure,
    pub message: String,
}

impl CliError {
    pub fn new(kind: Failure, message: impl Into<String>) -> Self {
        CliError { kind, message: message.into() }
    }

    pub fn io(context: &str, err: std::io::Error) -> Self {
        CliError::new(Failure::Io, format!("{context}: {err}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn ppn_kind(err: &PpnError) -> Failure {
    match err {
        PpnError::EmptySequence | PpnError::InvalidCharacter { .. } => Failure::MalformedInput,
        _ => Failure::Validation,
    }
}

impl From<PpnError> for CliError {
    fn from(err: PpnError) -> Self {
        CliError::new(ppn_kind(&err), err.to_string())
    }
}

impl From<SeqError> for CliError {
    fn from(err: SeqError) -> Self {
        let kind = match &err {
            SeqError::Io(_) => Failure::Io,
            SeqError::InvalidSimulation(_) => Failure::Validation,
            _ => Failure::MalformedInput,
        };
        CliError::new(kind, err.to_string())
    }
}

impl From<PhyloError> for CliError {
    fn from(err: PhyloError) -> Self {
        let kind = match &err {
            PhyloError::Io(_) => Failure::Io,
            PhyloError::TooFewTaxa(_) | PhyloError::TooFewLeaves(_) | PhyloError::LeafSetMismatch => {
                Failure::Validation
            }
            PhyloError::Sequence { source, .. } => ppn_kind(source),
            _ => Failure::MalformedInput,
        };
        CliError::new(kind, err.to_string())
    }
}
