//! The 24 assignments of the primes {2, 3, 5, 7} to the bases (A, C, G, T).
//!
//! Rows are enumerated in lexicographic order of the prime 4-tuple, so row 0 is
//! the identity assignment `A=2, C=3, G=5, T=7` and row 23 is `A=7, C=5, G=3, T=2`.
//! Vector component indices follow this order and are part of the output format.

use super::Nucleotide;

pub const PRIMES: [u64; 4] = [2, 3, 5, 7];
pub const PERMUTATION_COUNT: usize = 24;

/// Row `j` holds, for each base in `A, C, G, T` order, an index into [`PRIMES`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationTable {
    rows: [[u8; 4]; PERMUTATION_COUNT],
}

static STANDARD: PermutationTable = PermutationTable {
    rows: lexicographic_rows(),
};

const fn lexicographic_rows() -> [[u8; 4]; PERMUTATION_COUNT] {
    let mut rows = [[0u8; 4]; PERMUTATION_COUNT];
    let mut next = 0;
    let mut code = 0;
    // Walk all 4^4 index tuples in lexicographic order and keep those without repeats.
    while code < 256 {
        let tuple = [
            (code >> 6) as u8 & 3,
            (code >> 4) as u8 & 3,
            (code >> 2) as u8 & 3,
            code as u8 & 3,
        ];
        let mut seen = 0u8;
        let mut distinct = true;
        let mut k = 0;
        while k < 4 {
            let bit = 1u8 << tuple[k];
            if seen & bit != 0 {
                distinct = false;
            }
            seen |= bit;
            k += 1;
        }
        if distinct {
            rows[next] = tuple;
            next += 1;
        }
        code += 1;
    }
    rows
}

impl PermutationTable {
    pub fn standard() -> &'static PermutationTable {
        &STANDARD
    }

    /// Prime indices (into [`PRIMES`]) for A, C, G, T under permutation `j`.
    #[inline]
    pub fn prime_indices(&self, j: usize) -> [u8; 4] {
        self.rows[j]
    }

    /// Primes assigned to A, C, G, T under permutation `j`.
    pub fn primes(&self, j: usize) -> [u64; 4] {
        self.rows[j].map(|p| PRIMES[p as usize])
    }

    #[inline]
    pub fn prime_for(&self, j: usize, base: Nucleotide) -> u64 {
        PRIMES[self.rows[j][base.index()] as usize]
    }

    /// Index of the row assigning `primes` to A, C, G, T, if it is a permutation of [`PRIMES`].
    pub fn index_of(&self, primes: [u64; 4]) -> Option<usize> {
        self.rows.iter().position(|row| row.map(|p| PRIMES[p as usize]) == primes)
    }

    /// Row `j'` such that assigning primes by `j'` to the original bases gives the
    /// same products as assigning primes by `j` to the relabeled bases, i.e.
    /// `prime(j', b) == prime(j, mapping[b])` for every base `b`.
    pub fn compose_relabeling(&self, j: usize, mapping: [Nucleotide; 4]) -> usize {
        let row = self.rows[j];
        let composed = Nucleotide::ALL.map(|b| row[mapping[b.index()].index()]);
        self.rows
            .iter()
            .position(|r| *r == composed)
            .expect("composition of permutations is a permutation")
    }

    pub fn len(&self) -> usize {
        PERMUTATION_COUNT
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn identity_first_and_reverse_last() {
        let table = PermutationTable::standard();
        assert_eq!(table.primes(0), [2, 3, 5, 7]);
        assert_eq!(table.primes(1), [2, 3, 7, 5]);
        assert_eq!(table.primes(23), [7, 5, 3, 2]);
    }

    #[test]
    fn all_rows_distinct_and_sorted() {
        let table = PermutationTable::standard();
        let rows: Vec<[u64; 4]> = (0..PERMUTATION_COUNT).map(|j| table.primes(j)).collect();
        let unique: HashSet<_> = rows.iter().collect();
        assert_eq!(unique.len(), 24);
        assert!(rows.windows(2).all(|w| w[0] < w[1]));
        for row in &rows {
            let mut sorted = *row;
            sorted.sort_unstable();
            assert_eq!(sorted, PRIMES);
        }
    }

    #[test]
    fn index_of_inverts_primes() {
        let table = PermutationTable::standard();
        for j in 0..PERMUTATION_COUNT {
            assert_eq!(table.index_of(table.primes(j)), Some(j));
        }
        assert_eq!(table.index_of([2, 2, 5, 7]), None);
    }

    #[test]
    fn identity_relabeling_is_noop() {
        let table = PermutationTable::standard();
        for j in 0..PERMUTATION_COUNT {
            assert_eq!(table.compose_relabeling(j, Nucleotide::ALL), j);
        }
    }
}
