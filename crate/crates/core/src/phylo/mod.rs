//! Distance matrices, UPGMA trees, Newick interchange and tree comparison.

mod matrix;
mod newick;
mod quartet;
mod splits;
mod tree;
mod upgma;

use thiserror::Error;

pub use matrix::{matrix_from_vectors, pairwise_matrix, DistanceMatrix};
pub use newick::{from_newick, is_valid_label, to_newick, NewickError};
pub use quartet::{nqd, Quartet};
pub use splits::{nrf, SplitSet};
pub use tree::{Node, NodeId, PhyloTree};
pub use upgma::upgma;

use crate::ppn::PpnError;

#[derive(Error, Debug)]
pub enum PhyloError {
    #[error("need at least 2 taxa, got {0}")]
    TooFewTaxa(usize),
    #[error("duplicate taxon label '{0}'")]
    DuplicateLabel(String),
    #[error("distance matrix is not symmetric at ({0}, {1})")]
    Asymmetric(String, String),
    #[error("non-zero diagonal entry for '{0}'")]
    NonZeroDiagonal(String),
    #[error("non-finite distance between '{row}' and '{column}'")]
    NonFiniteDistance { row: String, column: String },
    #[error("malformed distance matrix at line {line}: {reason}")]
    MalformedMatrix { line: usize, reason: String },
    #[error("sequence '{id}': {source}")]
    Sequence { id: String, source: PpnError },
    #[error("trees have different leaf sets")]
    LeafSetMismatch,
    #[error("need at least 4 leaves, got {0}")]
    TooFewLeaves(usize),
    #[error("duplicate leaf label '{0}'")]
    DuplicateLeaf(String),
    #[error("leaf without a label")]
    UnlabeledLeaf,
    #[error("label '{0}' contains whitespace or one of ()[],:;")]
    InvalidLabel(String),
    #[error("invalid branch length {0}")]
    InvalidBranchLength(f64),
    #[error(transparent)]
    Newick(#[from] NewickError),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}
