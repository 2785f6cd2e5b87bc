use std::collections::HashSet;
use std::fmt::Write as _;
use std::io::BufRead;

use rayon::prelude::*;

use super::PhyloError;
use crate::ppn::{distance, ppn_vector, EncodedSequence, PpnParams, PpnVector};

/// Labeled symmetric matrix of pairwise distances with a zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    labels: Vec<String>,
    values: Vec<f64>,
}

impl DistanceMatrix {
    /// Validates dimension, label uniqueness, zero diagonal and exact symmetry.
    pub fn new(labels: Vec<String>, values: Vec<f64>) -> Result<Self, PhyloError> {
        let k = labels.len();
        if k < 2 {
            return Err(PhyloError::TooFewTaxa(k));
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(PhyloError::DuplicateLabel(label.clone()));
            }
        }
        if values.len() != k * k {
            return Err(PhyloError::MalformedMatrix {
                line: 0,
                reason: format!("expected {} values, got {}", k * k, values.len()),
            });
        }
        for i in 0..k {
            if values[i * k + i] != 0.0 {
                return Err(PhyloError::NonZeroDiagonal(labels[i].clone()));
            }
            for j in 0..i {
                if values[i * k + j].to_bits() != values[j * k + i].to_bits() {
                    return Err(PhyloError::Asymmetric(labels[i].clone(), labels[j].clone()));
                }
            }
        }
        Ok(Self { labels, values })
    }

    /// Fills the strict upper triangle from `f(i, j)` and mirrors it.
    pub fn from_fn(labels: Vec<String>, f: impl Fn(usize, usize) -> f64) -> Result<Self, PhyloError> {
        let k = labels.len();
        let mut values = vec![0.0; k * k];
        for i in 0..k {
            for j in i + 1..k {
                let d = f(i, j);
                values[i * k + j] = d;
                values[j * k + i] = d;
            }
        }
        Self::new(labels, values)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.dim() + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        let k = self.dim();
        &self.values[i * k..(i + 1) * k]
    }

    /// Relaxed PHYLIP: the taxon count, then one line per taxon with its label
    /// and full row, tab separated. Values use the shortest text that parses
    /// back to the same `f64`.
    pub fn to_phylip(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.dim()).unwrap();
        for (i, label) in self.labels.iter().enumerate() {
            out.push_str(label);
            for v in self.row(i) {
                write!(out, "\t{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Reads relaxed PHYLIP with either full rows or lower-triangle rows.
    pub fn from_phylip<R: BufRead>(reader: R) -> Result<Self, PhyloError> {
        let mut lines = reader
            .lines()
            .enumerate()
            .map(|(i, l)| l.map(|l| (i + 1, l)))
            .filter(|l| !matches!(l, Ok((_, text)) if text.trim().is_empty()));

        let malformed = |line: usize, reason: String| PhyloError::MalformedMatrix { line, reason };
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| malformed(1, "empty matrix file".into()))??;
        let k: usize = header
            .trim()
            .parse()
            .map_err(|_| malformed(line_no, format!("invalid taxon count '{}'", header.trim())))?;

        let mut labels = Vec::with_capacity(k);
        let mut rows: Vec<Vec<f64>> = Vec::with_capacity(k);
        for i in 0..k {
            let (line_no, text) = lines
                .next()
                .ok_or_else(|| malformed(line_no + i + 1, format!("expected {k} rows")))??;
            let mut fields = text.split_whitespace();
            let label = fields.next().expect("blank lines are skipped");
            let row = fields
                .map(|f| f.parse::<f64>().map_err(|_| malformed(line_no, format!("invalid value '{f}'"))))
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != k && row.len() != i {
                return Err(malformed(
                    line_no,
                    format!("row '{label}' has {} values, expected {k} or {i}", row.len()),
                ));
            }
            labels.push(label.to_owned());
            rows.push(row);
        }
        if let Some(extra) = lines.next() {
            let (line_no, _) = extra?;
            return Err(malformed(line_no, "unexpected data after the matrix".into()));
        }

        let lower = rows.iter().enumerate().all(|(i, r)| r.len() == i) && k > 1;
        let mut values = vec![0.0; k * k];
        for (i, row) in rows.iter().enumerate() {
            if lower {
                for (j, &v) in row.iter().enumerate() {
                    values[i * k + j] = v;
                    values[j * k + i] = v;
                }
            } else if row.len() == k {
                values[i * k..(i + 1) * k].copy_from_slice(row);
            } else {
                return Err(malformed(0, "mixed full and lower-triangle rows".into()));
            }
        }
        Self::new(labels, values)
    }
}

/// Computes each sequence's vector once, then every pairwise distance with the
/// metric in `params`.
///
/// Work is spread over the current rayon pool. Results are assembled in input
/// order, so the matrix does not depend on the thread count.
pub fn pairwise_matrix(
    seqs: &[EncodedSequence],
    params: &PpnParams,
) -> Result<DistanceMatrix, PhyloError> {
    let vectors: Vec<PpnVector> = seqs
        .par_iter()
        .map(|s| {
            ppn_vector(s, params).map_err(|source| PhyloError::Sequence {
                id: s.id().to_owned(),
                source,
            })
        })
        .collect::<Result<_, _>>()?;
    matrix_from_vectors(seqs.iter().map(|s| s.id().to_owned()).collect(), &vectors, params)
}

/// Pairwise distances between precomputed vectors.
pub fn matrix_from_vectors(
    labels: Vec<String>,
    vectors: &[PpnVector],
    params: &PpnParams,
) -> Result<DistanceMatrix, PhyloError> {
    let k = vectors.len();
    if k < 2 {
        return Err(PhyloError::TooFewTaxa(k));
    }
    let metric = params.metric();
    let rows: Vec<Vec<f64>> = (0..k)
        .into_par_iter()
        .map(|i| {
            (i + 1..k)
                .map(|j| {
                    distance(&vectors[i], &vectors[j], metric).map_err(|source| PhyloError::Sequence {
                        id: labels[j].clone(),
                        source,
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    DistanceMatrix::from_fn(labels, |i, j| rows[i][j - i - 1])
}
