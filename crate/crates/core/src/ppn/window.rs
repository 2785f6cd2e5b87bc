//! Window geometry and per-window base counts.
//!
//! Positions in this module are 1-based: the first base of a sequence is at
//! position 1. Window `k` (0-based) is centered at `1 + k(t+1)` and covers
//! positions `center - l ..= center + l`, truncated to `1..=N`.

use super::{EncodedSequence, Nucleotide, PpnError};

/// Base frequencies `(A, C, G, T)` inside one window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WindowCounts(pub [u32; 4]);

impl WindowCounts {
    pub fn new(a: u32, c: u32, g: u32, t: u32) -> Self {
        Self([a, c, g, t])
    }

    #[inline]
    pub fn get(&self, base: Nucleotide) -> u32 {
        self.0[base.index()]
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn of(bases: &[Nucleotide]) -> Self {
        let mut counts = [0u32; 4];
        for b in bases {
            counts[b.index()] += 1;
        }
        Self(counts)
    }
}

/// Number of windows, `1 + floor((N - 1) / (t + 1))`.
///
/// Requires `len >= 1` and `stride >= 1`.
pub fn window_count(len: usize, stride: usize) -> usize {
    debug_assert!(len >= 1 && stride >= 1);
    1 + (len - 1) / (stride + 1)
}

/// 1-based center positions of every window, in order.
pub fn window_centers(len: usize, stride: usize) -> impl Iterator<Item = usize> {
    let n = window_count(len, stride);
    (0..n).map(move |k| 1 + k * (stride + 1))
}

/// Counts bases within `radius` of the 1-based `center`.
pub fn window_counts_at(
    seq: &EncodedSequence,
    center: usize,
    radius: usize,
) -> Result<WindowCounts, PpnError> {
    let len = seq.len();
    if center < 1 || center > len {
        return Err(PpnError::OutOfRange { center, len });
    }
    let lo = center.saturating_sub(radius).max(1);
    let hi = (center + radius).min(len);
    Ok(WindowCounts::of(&seq.codes()[lo - 1..hi]))
}

/// Walks all windows of a sequence, updating counts incrementally as the
/// center advances by `t + 1`.
///
/// Total work is `O(N)` regardless of radius: each base enters and leaves the
/// running window at most once.
#[derive(Debug, Clone)]
pub struct WindowWalker<'a> {
    codes: &'a [Nucleotide],
    radius: usize,
    step: usize,
    next_center: usize,
    // Current window as a half-open 0-based range.
    lo: usize,
    hi: usize,
    counts: [u32; 4],
}

impl<'a> WindowWalker<'a> {
    pub fn new(codes: &'a [Nucleotide], radius: usize, stride: usize) -> Self {
        Self {
            codes,
            radius,
            step: stride + 1,
            next_center: 0,
            lo: 0,
            hi: 0,
            counts: [0; 4],
        }
    }

    /// Moves to the next window, reporting each base that enters or leaves it.
    #[inline]
    pub(crate) fn advance_with(
        &mut self,
        mut on_add: impl FnMut(Nucleotide),
        mut on_remove: impl FnMut(Nucleotide),
    ) -> Option<[u32; 4]> {
        let center = self.next_center;
        if center >= self.codes.len() {
            return None;
        }
        let new_lo = center.saturating_sub(self.radius);
        let new_hi = (center + self.radius + 1).min(self.codes.len());

        // Remove bases left of the new window (or the whole old window if disjoint).
        let remove_end = self.hi.min(new_lo);
        for &b in &self.codes[self.lo..remove_end] {
            self.counts[b.index()] -= 1;
            on_remove(b);
        }
        let add_start = self.hi.max(new_lo);
        for &b in &self.codes[add_start..new_hi] {
            self.counts[b.index()] += 1;
            on_add(b);
        }
        self.lo = new_lo;
        self.hi = new_hi;
        self.next_center += self.step;
        Some(self.counts)
    }
}

impl Iterator for WindowWalker<'_> {
    type Item = WindowCounts;

    #[inline]
    fn next(&mut self) -> Option<WindowCounts> {
        self.advance_with(|_| {}, |_| {}).map(WindowCounts)
    }
}
