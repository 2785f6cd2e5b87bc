//! Prime-product encoding of window counts and its inverse.

use super::{PermutationTable, PpnError, WindowCounts, PRIMES};

/// `PRIMES[p]^e` for every prime and every exponent up to the window span.
#[derive(Debug, Clone)]
pub struct PrimePowerTable {
    // powers[p][e]
    powers: [Vec<u64>; 4],
}

impl PrimePowerTable {
    /// Table for exponents `0..=max_exponent`.
    ///
    /// Panics if `7^max_exponent` does not fit in a `u64`; callers derive
    /// `max_exponent = 2l + 1` from validated parameters.
    pub fn new(max_exponent: u32) -> Self {
        let powers = PRIMES.map(|p| {
            (0..=max_exponent)
                .map(|e| p.checked_pow(e).expect("prime power exceeds u64"))
                .collect()
        });
        Self { powers }
    }

    pub fn max_exponent(&self) -> u32 {
        (self.powers[0].len() - 1) as u32
    }

    /// Product of prime powers for permutation row `prime_indices`.
    #[inline]
    pub fn product(&self, prime_indices: [u8; 4], counts: &WindowCounts) -> Result<u64, PpnError> {
        let mut value = 1u64;
        for (base, &p) in prime_indices.iter().enumerate() {
            let factor = *self.powers[p as usize]
                .get(counts.0[base] as usize)
                .ok_or(PpnError::Overflow)?;
            value = value.checked_mul(factor).ok_or(PpnError::Overflow)?;
        }
        Ok(value)
    }
}

/// Prime product of the window counts under permutation `j`.
pub fn gamma(counts: &WindowCounts, j: usize) -> Result<u64, PpnError> {
    let primes = PermutationTable::standard().primes(j);
    primes
        .iter()
        .zip(counts.0)
        .try_fold(1u64, |acc, (&p, e)| {
            p.checked_pow(e).and_then(|f| acc.checked_mul(f))
        })
        .ok_or(PpnError::Overflow)
}

/// Recovers the window counts from a prime product under permutation `j`.
///
/// Fails with [`PpnError::NotSmooth`] when `value` is zero or has a prime
/// factor other than 2, 3, 5 or 7.
pub fn factor_gamma(value: u64, j: usize) -> Result<WindowCounts, PpnError> {
    if value == 0 {
        return Err(PpnError::NotSmooth(value));
    }
    let primes = PermutationTable::standard().primes(j);
    let mut rest = value;
    let mut counts = [0u32; 4];
    for (base, &p) in primes.iter().enumerate() {
        while rest % p == 0 {
            rest /= p;
            counts[base] += 1;
        }
    }
    if rest != 1 {
        return Err(PpnError::NotSmooth(value));
    }
    Ok(WindowCounts(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_values() {
        assert_eq!(gamma(&WindowCounts::new(0, 2, 1, 0), 0), Ok(45));
        assert_eq!(gamma(&WindowCounts::new(1, 1, 0, 0), 0), Ok(6));
        assert_eq!(gamma(&WindowCounts::new(0, 0, 0, 0), 0), Ok(1));
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factor_gamma(45, 0), Ok(WindowCounts::new(0, 2, 1, 0)));
        assert_eq!(factor_gamma(1, 0), Ok(WindowCounts::new(0, 0, 0, 0)));
        assert_eq!(factor_gamma(105, 0), Ok(WindowCounts::new(0, 1, 1, 1)));
        assert_eq!(factor_gamma(22, 0), Err(PpnError::NotSmooth(22)));
        assert_eq!(factor_gamma(0, 0), Err(PpnError::NotSmooth(0)));
    }

    #[test]
    fn factor_respects_permutation() {
        // Row 23 assigns A=7, C=5, G=3, T=2.
        assert_eq!(factor_gamma(7 * 7 * 2, 23), Ok(WindowCounts::new(2, 0, 0, 1)));
    }

    #[test]
    fn largest_window_fits() {
        let table = PrimePowerTable::new(21);
        let all_seven = [3u8, 0, 1, 2];
        assert_eq!(
            table.product(all_seven, &WindowCounts::new(21, 0, 0, 0)),
            Ok(7u64.pow(21))
        );
        assert!(7u64.pow(21) < 1 << 63);
        assert_eq!(
            table.product(all_seven, &WindowCounts::new(22, 0, 0, 0)),
            Err(PpnError::Overflow)
        );
    }

    #[test]
    fn table_agrees_with_gamma() {
        let table = PrimePowerTable::new(7);
        let perms = PermutationTable::standard();
        let counts = WindowCounts::new(2, 1, 3, 1);
        for j in 0..24 {
            assert_eq!(table.product(perms.prime_indices(j), &counts), gamma(&counts, j));
        }
    }
}
