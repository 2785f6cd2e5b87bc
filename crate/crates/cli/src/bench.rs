//! Timing and peak-memory measurements over simulated sequence sets.
//!
//! Peak memory is the process high-water mark (`VmHWM` in `/proc/self/status`).
//! Before each repetition the mark is reset through `/proc/self/clear_refs`
//! when the kernel allows it; otherwise the reported value is the peak since
//! process start. On platforms without procfs the column is 0. Figures are
//! therefore approximate and platform-dependent.

use std::fmt::Write as _;
use std::fs;
use std::time::Instant;

use log::warn;
use ppn_core::phylo::matrix_from_vectors;
use ppn_core::ppn::{ppn_vector, PpnParams, PpnVector};
use ppn_core::seqio::{simulate, SimulationSpec};
use rayon::prelude::*;

use crate::error::{CliError, Failure};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub species: usize,
    pub length: usize,
    pub reps: usize,
    pub mean_wall_secs: f64,
    pub mean_vector_secs: f64,
    pub peak_rss_kb: u64,
}

fn reset_peak_rss() -> bool {
    fs::write("/proc/self/clear_refs", "5").is_ok()
}

fn peak_rss_kb() -> u64 {
    let Ok(status) = fs::read_to_string("/proc/self/status") else {
        return 0;
    };
    status
        .lines()
        .find_map(|line| line.strip_prefix("VmHWM:"))
        .and_then(|rest| rest.split_whitespace().next())
        .and_then(|kb| kb.parse().ok())
        .unwrap_or(0)
}

/// One row per (species count, length) pair, sorted by species count and then
/// length. A set with a single species times the vector stage only.
pub fn run(
    species: &[usize],
    lengths: &[usize],
    reps: usize,
    seed: u64,
    params: &PpnParams,
) -> Result<Vec<BenchRow>, CliError> {
    if reps == 0 {
        return Err(CliError::new(Failure::Validation, "--reps must be at least 1"));
    }
    let mut sizes: Vec<(usize, usize)> =
        species.iter().flat_map(|&s| lengths.iter().map(move |&l| (s, l))).collect();
    sizes.sort_unstable();
    sizes.dedup();

    let mut resettable = true;
    let mut rows = Vec::with_capacity(sizes.len());
    for (count, length) in sizes {
        let seqs = simulate(&SimulationSpec::new(count, length, seed)?);
        let labels: Vec<String> = seqs.iter().map(|s| s.id().to_owned()).collect();
        let (mut wall, mut vector, mut peak) = (0.0, 0.0, 0u64);
        for _ in 0..reps {
            resettable &= reset_peak_rss();
            let start = Instant::now();
            let vectors: Vec<PpnVector> = seqs
                .par_iter()
                .map(|s| ppn_vector(s, params))
                .collect::<Result<_, _>>()?;
            vector += start.elapsed().as_secs_f64();
            if vectors.len() >= 2 {
                let matrix = matrix_from_vectors(labels.clone(), &vectors, params)?;
                std::hint::black_box(&matrix);
            }
            wall += start.elapsed().as_secs_f64();
            peak = peak.max(peak_rss_kb());
        }
        rows.push(BenchRow {
            species: count,
            length,
            reps,
            mean_wall_secs: wall / reps as f64,
            mean_vector_secs: vector / reps as f64,
            peak_rss_kb: peak,
        });
    }
    if !resettable {
        warn!("could not reset the peak-memory mark; peaks include earlier allocations");
    }
    Ok(rows)
}

pub fn tsv(rows: &[BenchRow]) -> String {
    let mut out = String::from("#species\tlength\treps\tmean_wall_s\tmean_vector_s\tpeak_rss_kb\n");
    for r in rows {
        writeln!(
            out,
            "{}\t{}\t{}\t{:.6}\t{:.6}\t{}",
            r.species, r.length, r.reps, r.mean_wall_secs, r.mean_vector_secs, r.peak_rss_kb
        )
        .unwrap();
    }
    out
}

pub fn table(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:>8} {:>10} {:>5} {:>12} {:>12} {:>12}\n",
        "species", "length", "reps", "wall (s)", "vector (s)", "peak RSS KiB"
    );
    for r in rows {
        writeln!(
            out,
            "{:>8} {:>10} {:>5} {:>12.4} {:>12.4} {:>12}",
            r.species, r.length, r.reps, r.mean_wall_secs, r.mean_vector_secs, r.peak_rss_kb
        )
        .unwrap();
    }
    out
}
