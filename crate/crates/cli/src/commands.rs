use std::fmt::Write as _;

use log::warn;
use ppn_core::phylo::{
    from_newick, nqd, nrf, pairwise_matrix, to_newick, upgma, DistanceMatrix, PhyloTree,
};
use ppn_core::ppn::{ppn_vector, Metric, PpnParams, PpnVector, SanitizePolicy};
use ppn_core::seqio::{read_fasta, simulate, write_fasta, SimulationSpec};
use ppn_core::EncodedSequence;
use rayon::prelude::*;

use crate::error::{CliError, Failure};
use crate::output::{read_input, write_output};
use crate::ParamArgs;

pub fn build_params(args: &ParamArgs) -> Result<PpnParams, CliError> {
    let params = if args.allow_gaps {
        if args.t > args.l {
            warn!(
                "stride t={} exceeds radius l={}: positions between windows are skipped",
                args.t, args.l
            );
        }
        PpnParams::with_gaps(args.l, args.t)?
    } else {
        PpnParams::new(args.l, args.t)?
    };
    Ok(params
        .with_metric(args.metric.into())
        .with_normalization(args.normalize))
}

fn load_fasta(path: &str, policy: SanitizePolicy) -> Result<Vec<EncodedSequence>, CliError> {
    let bytes = read_input(path)?;
    let seqs = read_fasta(bytes.as_slice(), policy)?;
    for s in &seqs {
        if s.dropped() > 0 {
            warn!("'{}': dropped {} non-ACGT characters", s.id(), s.dropped());
        }
    }
    Ok(seqs)
}

pub fn vector_table(seqs: &[EncodedSequence], params: &PpnParams) -> Result<String, CliError> {
    let vectors: Vec<PpnVector> = seqs
        .par_iter()
        .map(|s| ppn_vector(s, params))
        .collect::<Result<_, _>>()?;
    let mut out = String::from("#id\tN\tn\tl\tt");
    for j in 0..24 {
        write!(out, "\teta{j}").unwrap();
    }
    out.push('\n');
    for (s, v) in seqs.iter().zip(&vectors) {
        write!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            s.id(),
            v.source_length(),
            v.window_count(),
            params.radius(),
            params.stride()
        )
        .unwrap();
        for e in v.components() {
            write!(out, "\t{e}").unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn cmd_vector(input: &str, output: &str, args: &ParamArgs) -> Result<(), CliError> {
    let params = build_params(args)?;
    let seqs = load_fasta(input, args.policy.into())?;
    write_output(output, vector_table(&seqs, &params)?.as_bytes())
}

pub fn cmd_matrix(input: &str, output: &str, args: &ParamArgs) -> Result<(), CliError> {
    let params = build_params(args)?;
    let seqs = load_fasta(input, args.policy.into())?;
    let matrix = pairwise_matrix(&seqs, &params)?;
    write_output(output, matrix.to_phylip().as_bytes())
}

/// Builds the UPGMA tree from FASTA or from a relaxed-PHYLIP matrix. Input
/// whose first non-blank byte is `>` is read as FASTA.
pub fn cmd_tree(input: &str, output: &str, args: &ParamArgs) -> Result<(), CliError> {
    let params = build_params(args)?;
    let bytes = read_input(input)?;
    let is_fasta = bytes.iter().find(|b| !b.is_ascii_whitespace()) == Some(&b'>');
    let matrix = if is_fasta {
        let seqs = read_fasta(bytes.as_slice(), args.policy.into())?;
        pairwise_matrix(&seqs, &params)?
    } else {
        DistanceMatrix::from_phylip(bytes.as_slice())?
    };
    let mut text = to_newick(&upgma(&matrix)?)?;
    text.push('\n');
    write_output(output, text.as_bytes())
}

fn load_tree(path: &str) -> Result<PhyloTree, CliError> {
    let bytes = read_input(path)?;
    let text = String::from_utf8(bytes)
        .map_err(|_| CliError::new(Failure::MalformedInput, format!("'{path}' is not UTF-8")))?;
    from_newick(text.trim()).map_err(|e| CliError::new(Failure::MalformedInput, format!("'{path}': {e}")))
}

pub fn cmd_treedist(inputs: &[String], output: &str) -> Result<(), CliError> {
    let [a, b] = inputs else {
        return Err(CliError::new(
            Failure::Validation,
            format!("treedist needs exactly two --input trees, got {}", inputs.len()),
        ));
    };
    let (t1, t2) = (load_tree(a)?, load_tree(b)?);
    let report = format!("nRF\t{:.4}\nnQD\t{:.4}\n", nrf(&t1, &t2)?, nqd(&t1, &t2)?);
    write_output(output, report.as_bytes())
}

pub fn cmd_simulate(species: usize, length: usize, seed: u64, output: &str) -> Result<(), CliError> {
    let spec = SimulationSpec::new(species, length, seed)?;
    let mut buf = Vec::new();
    write_fasta(&mut buf, &simulate(&spec)).map_err(|e| CliError::io("formatting FASTA", e))?;
    write_output(output, &buf)
}

impl From<crate::MetricArg> for Metric {
    fn from(m: crate::MetricArg) -> Self {
        match m {
            crate::MetricArg::Euclidean => Metric::Euclidean,
            crate::MetricArg::Manhattan => Metric::Manhattan,
        }
    }
}

impl From<crate::PolicyArg> for SanitizePolicy {
    fn from(p: crate::PolicyArg) -> Self {
        match p {
            crate::PolicyArg::Drop => SanitizePolicy::Drop,
            crate::PolicyArg::Strict => SanitizePolicy::Strict,
        }
    }
}
