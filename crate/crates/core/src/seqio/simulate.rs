use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SeqError;
use crate::ppn::{EncodedSequence, Nucleotide};

/// Shape of a simulated data set of i.i.d. uniform sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimulationSpec {
    species_count: usize,
    length: usize,
    seed: u64,
}

impl SimulationSpec {
    pub fn new(species_count: usize, length: usize, seed: u64) -> Result<Self, SeqError> {
        if species_count == 0 || length == 0 {
            return Err(SeqError::InvalidSimulation(format!(
                "species count and length must be positive (got {species_count} x {length})"
            )));
        }
        Ok(Self {
            species_count,
            length,
            seed,
        })
    }

    pub fn species_count(&self) -> usize {
        self.species_count
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Generates `species_count` sequences of uniform random bases.
///
/// The generator is ChaCha8 seeded through `SeedableRng::seed_from_u64(seed)`.
/// Each `next_u64` word yields 32 bases, two bits at a time starting from the
/// least significant pair, using the codes A=0, C=1, G=2, T=3. Every sequence
/// starts on a fresh word; unused bits of its last word are discarded. Ids are
/// `sp` followed by the 1-based index zero-padded to the width of the count.
pub fn simulate(spec: &SimulationSpec) -> Vec<EncodedSequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let width = spec.species_count.to_string().len();
    (0..spec.species_count)
        .map(|i| {
            let mut codes = Vec::with_capacity(spec.length);
            while codes.len() < spec.length {
                let mut word = rng.next_u64();
                let take = (spec.length - codes.len()).min(32);
                for _ in 0..take {
                    codes.push(Nucleotide::ALL[(word & 3) as usize]);
                    word >>= 2;
                }
            }
            EncodedSequence::new(format!("sp{:0width$}", i + 1), codes)
                .expect("length is positive")
        })
        .collect()
}
