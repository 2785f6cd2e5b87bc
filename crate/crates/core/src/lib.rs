//! Alignment-free DNA comparison with prime-product neighborhood vectors.
//!
//! - [`ppn`]: sequence encoding, windowing and the 24-component vectors.
//! - [`seqio`]: FASTA reading/writing and seeded random sequence sets.
//! - [`phylo`]: distance matrices, UPGMA, Newick, and RF/quartet tree distances.

pub mod phylo;
pub mod ppn;
pub mod seqio;

pub use phylo::{
    from_newick, nqd, nrf, pairwise_matrix, to_newick, upgma, DistanceMatrix, PhyloError,
    PhyloTree,
};
pub use ppn::{
    distance, encode, ppn_vector, EncodedSequence, Metric, Nucleotide, PpnError, PpnParams,
    PpnVector, SanitizePolicy,
};
pub use seqio::{read_fasta, simulate, write_fasta, SeqError, SimulationSpec};
