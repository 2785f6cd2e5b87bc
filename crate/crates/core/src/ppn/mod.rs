//! Prime-product neighborhood (PPN) vectors.
//!
//! A sequence is sampled at window centers spaced `t + 1` apart. Each window of
//! radius `l` is summarized by the product of one prime per base occurrence,
//! which encodes the window's base frequencies uniquely. Summing those products
//! over all windows gives one scalar per assignment of the primes {2, 3, 5, 7}
//! to the bases, and the 24 assignments together form the sequence's vector.

mod encoding;
mod gamma;
mod params;
mod permutation;
mod vector;
mod window;

use thiserror::Error;

pub use encoding::{encode, EncodedSequence, Nucleotide, SanitizePolicy};
pub(crate) use encoding::encode_bytes;
pub use gamma::{factor_gamma, gamma, PrimePowerTable};
pub use params::{Metric, PpnParams};
pub use permutation::{PermutationTable, PERMUTATION_COUNT, PRIMES};
pub use vector::{
    count_histogram, distance, eta, ppn_vector, representative_sequence, CountHistogram,
    PpnVector, RepresentativeSequence,
};
pub use window::{window_centers, window_count, window_counts_at, WindowCounts, WindowWalker};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PpnError {
    #[error("sequence is empty after sanitization")]
    EmptySequence,
    #[error("invalid character '{character}' at offset {position}")]
    InvalidCharacter { character: char, position: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("window center {center} outside 1..={len}")]
    OutOfRange { center: usize, len: usize },
    #[error("arithmetic overflow")]
    Overflow,
    #[error("{0} has a prime factor outside {{2, 3, 5, 7}}")]
    NotSmooth(u64),
    #[error("vectors were computed with different parameters")]
    ParamsMismatch,
}
