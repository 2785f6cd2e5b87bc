//! Representative sequences, per-permutation sums and the 24-component vector.

use std::collections::BTreeMap;

use super::{
    window_count, EncodedSequence, Metric, PermutationTable, PpnError, PpnParams, PrimePowerTable,
    WindowCounts, WindowWalker, PERMUTATION_COUNT,
};

/// Prime products of every window, in window order, for one permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentativeSequence(pub Vec<u64>);

impl RepresentativeSequence {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> Result<u128, PpnError> {
        self.0
            .iter()
            .try_fold(0u128, |acc, &v| acc.checked_add(v as u128))
            .ok_or(PpnError::Overflow)
    }
}

pub fn representative_sequence(
    seq: &EncodedSequence,
    params: &PpnParams,
    j: usize,
) -> Result<RepresentativeSequence, PpnError> {
    let table = PrimePowerTable::new(params.window_span());
    let row = PermutationTable::standard().prime_indices(j);
    let values = walker(seq, params)
        .map(|counts| table.product(row, &counts))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RepresentativeSequence(values))
}

/// Sum of the representative sequence for permutation `j`, computed window by window.
pub fn eta(seq: &EncodedSequence, params: &PpnParams, j: usize) -> Result<u128, PpnError> {
    let table = PrimePowerTable::new(params.window_span());
    let row = PermutationTable::standard().prime_indices(j);
    walker(seq, params).try_fold(0u128, |acc, counts| {
        let value = table.product(row, &counts)?;
        acc.checked_add(value as u128).ok_or(PpnError::Overflow)
    })
}

fn walker<'a>(seq: &'a EncodedSequence, params: &PpnParams) -> WindowWalker<'a> {
    WindowWalker::new(seq.codes(), params.radius() as usize, params.stride() as usize)
}

/// Distinct window-count tuples and how many windows realize each.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CountHistogram {
    entries: BTreeMap<WindowCounts, u64>,
}

impl CountHistogram {
    pub fn entries(&self) -> &BTreeMap<WindowCounts, u64> {
        &self.entries
    }

    /// Number of distinct count tuples.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    /// Total multiplicity; equals the window count.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn get(&self, counts: &WindowCounts) -> u64 {
        self.entries.get(counts).copied().unwrap_or(0)
    }

    /// `sum(multiplicity * gamma)` for permutation `j`.
    pub fn weighted_sum(&self, table: &PrimePowerTable, j: usize) -> Result<u128, PpnError> {
        let row = PermutationTable::standard().prime_indices(j);
        self.entries.iter().try_fold(0u128, |acc, (counts, &mult)| {
            let value = table.product(row, counts)? as u128;
            value
                .checked_mul(mult as u128)
                .and_then(|v| acc.checked_add(v))
                .ok_or(PpnError::Overflow)
        })
    }
}

/// Groups windows by count tuple in a single pass.
///
/// Tuples are packed into a dense index in base `2l + 2`, updated as bases
/// enter and leave the running window, so the pass itself does no hashing.
pub fn count_histogram(seq: &EncodedSequence, params: &PpnParams) -> CountHistogram {
    let base = params.window_span() as usize + 1;
    let weights = [base * base * base, base * base, base, 1];
    let mut dense = vec![0u64; base.pow(4)];
    let mut index = 0usize;

    let mut walk = walker(seq, params);
    loop {
        let mut delta_add = 0usize;
        let mut delta_remove = 0usize;
        let advanced = walk.advance_with(
            |b| delta_add += weights[b.index()],
            |b| delta_remove += weights[b.index()],
        );
        if advanced.is_none() {
            break;
        }
        index = index + delta_add - delta_remove;
        dense[index] += 1;
    }

    let entries = dense
        .iter()
        .enumerate()
        .filter(|(_, &mult)| mult > 0)
        .map(|(packed, &mult)| {
            let counts = weights.map(|w| ((packed / w) % base) as u32);
            (WindowCounts(counts), mult)
        })
        .collect();
    CountHistogram { entries }
}

/// The 24 per-permutation sums of one sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PpnVector {
    etas: [u128; PERMUTATION_COUNT],
    source_length: usize,
    params: PpnParams,
}

impl PpnVector {
    /// Wraps precomputed components. No positivity check is made.
    pub fn from_components(
        etas: [u128; PERMUTATION_COUNT],
        source_length: usize,
        params: PpnParams,
    ) -> Self {
        Self {
            etas,
            source_length,
            params,
        }
    }

    pub fn components(&self) -> &[u128; PERMUTATION_COUNT] {
        &self.etas
    }

    pub fn component(&self, j: usize) -> u128 {
        self.etas[j]
    }

    pub fn source_length(&self) -> usize {
        self.source_length
    }

    /// Number of windows the components were summed over.
    pub fn window_count(&self) -> usize {
        window_count(self.source_length.max(1), self.params.stride() as usize)
    }

    pub fn params(&self) -> &PpnParams {
        &self.params
    }

    /// Components divided by the window count.
    pub fn normalized(&self) -> [f64; PERMUTATION_COUNT] {
        let n = self.window_count() as f64;
        self.etas.map(|e| e as f64 / n)
    }

    pub fn sorted_components(&self) -> [u128; PERMUTATION_COUNT] {
        let mut sorted = self.etas;
        sorted.sort_unstable();
        sorted
    }
}

/// Computes all 24 components from one histogram pass over the sequence.
pub fn ppn_vector(seq: &EncodedSequence, params: &PpnParams) -> Result<PpnVector, PpnError> {
    let histogram = count_histogram(seq, params);
    let table = PrimePowerTable::new(params.window_span());
    let mut etas = [0u128; PERMUTATION_COUNT];
    for (j, eta) in etas.iter_mut().enumerate() {
        *eta = histogram.weighted_sum(&table, j)?;
    }
    Ok(PpnVector {
        etas,
        source_length: seq.len(),
        params: *params,
    })
}

/// Distance between two vectors computed with the same radius, stride and
/// normalization.
///
/// Component differences are taken exactly on integers. Squares and sums stay
/// in `u128` while they fit; the single conversion to `f64` happens at the end.
pub fn distance(a: &PpnVector, b: &PpnVector, metric: Metric) -> Result<f64, PpnError> {
    let (pa, pb) = (a.params, b.params);
    if pa.radius() != pb.radius() || pa.stride() != pb.stride() || pa.normalize() != pb.normalize()
    {
        return Err(PpnError::ParamsMismatch);
    }
    if pa.normalize() {
        return Ok(float_distance(&a.normalized(), &b.normalized(), metric));
    }

    let diffs = a.etas.iter().zip(&b.etas).map(|(&x, &y)| x.abs_diff(y));
    let value = match metric {
        Metric::Manhattan => {
            let exact = diffs.clone().try_fold(0u128, |acc, d| acc.checked_add(d));
            match exact {
                Some(sum) => sum as f64,
                None => diffs.map(|d| d as f64).sum(),
            }
        }
        Metric::Euclidean => {
            let exact = diffs
                .clone()
                .try_fold(0u128, |acc, d| d.checked_mul(d).and_then(|sq| acc.checked_add(sq)));
            match exact {
                Some(sum) => (sum as f64).sqrt(),
                None => diffs.map(|d| (d as f64) * (d as f64)).sum::<f64>().sqrt(),
            }
        }
    };
    Ok(value)
}

fn float_distance(a: &[f64], b: &[f64], metric: Metric) -> f64 {
    let diffs = a.iter().zip(b).map(|(x, y)| (x - y).abs());
    match metric {
        Metric::Manhattan => diffs.sum(),
        Metric::Euclidean => diffs.map(|d| d * d).sum::<f64>().sqrt(),
    }
}
