//! FASTA input/output and a seeded generator of random sequence sets.

mod fasta;
mod simulate;

use thiserror::Error;

pub use fasta::{encode_record, read_fasta, write_fasta, FastaReader, FastaRecord, FASTA_LINE_WIDTH};
pub use simulate::{simulate, SimulationSpec};

use crate::ppn::PpnError;

#[derive(Error, Debug)]
pub enum SeqError {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed FASTA at line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("duplicate sequence id '{0}'")]
    DuplicateId(String),
    #[error("record '{id}' is empty after sanitization")]
    EmptySequence { id: String },
    #[error("record '{id}': {source}")]
    Record { id: String, source: PpnError },
    #[error("invalid simulation: {0}")]
    InvalidSimulation(String),
}
