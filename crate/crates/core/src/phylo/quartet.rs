//! Normalized quartet distance.

use std::collections::VecDeque;

use super::splits::common_leaves;
use super::{PhyloError, PhyloTree};

/// Topology a tree induces on four leaves `a < b < c < d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quartet {
    /// ab|cd
    AbCd,
    /// ac|bd
    AcBd,
    /// ad|bc
    AdBc,
    Unresolved,
}

impl Quartet {
    /// Picks the pairing with the strictly smallest sum of within-pair path
    /// lengths; ties mean the four paths meet at one node.
    pub fn from_path_sums(ab_cd: u32, ac_bd: u32, ad_bc: u32) -> Self {
        if ab_cd < ac_bd && ab_cd < ad_bc {
            Quartet::AbCd
        } else if ac_bd < ab_cd && ac_bd < ad_bc {
            Quartet::AcBd
        } else if ad_bc < ab_cd && ad_bc < ac_bd {
            Quartet::AdBc
        } else {
            Quartet::Unresolved
        }
    }
}

/// Edge counts between every pair of leaves, indexed by position in `labels`.
fn leaf_edge_distances(tree: &PhyloTree, labels: &[String]) -> Vec<Vec<u32>> {
    let n = tree.len();
    let mut adjacency = vec![Vec::new(); n];
    for (id, node) in tree.nodes().iter().enumerate() {
        if let Some(p) = node.parent {
            adjacency[id].push(p);
            adjacency[p].push(id);
        }
    }
    let leaf_ids: Vec<usize> = labels
        .iter()
        .map(|l| tree.find_leaf(l).expect("leaf sets already compared"))
        .collect();

    leaf_ids
        .iter()
        .map(|&source| {
            let mut dist = vec![u32::MAX; n];
            dist[source] = 0;
            let mut queue = VecDeque::from([source]);
            while let Some(v) = queue.pop_front() {
                for &w in &adjacency[v] {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            leaf_ids.iter().map(|&t| dist[t]).collect()
        })
        .collect()
}

/// Fraction of four-leaf subsets whose induced topology differs between the
/// trees. An unresolved quartet only matches another unresolved quartet.
///
/// Enumerates all `C(k, 4)` subsets, so it is meant for trees of up to a few
/// dozen leaves.
pub fn nqd(t1: &PhyloTree, t2: &PhyloTree) -> Result<f64, PhyloError> {
    let labels = common_leaves(t1, t2)?;
    let k = labels.len();
    let d1 = leaf_edge_distances(t1, &labels);
    let d2 = leaf_edge_distances(t2, &labels);
    let topology = |d: &[Vec<u32>], a: usize, b: usize, c: usize, e: usize| {
        Quartet::from_path_sums(d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c])
    };

    let mut differing = 0u64;
    let mut total = 0u64;
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for e in c + 1..k {
                    total += 1;
                    if topology(&d1, a, b, c, e) != topology(&d2, a, b, c, e) {
                        differing += 1;
                    }
                }
            }
        }
    }
    Ok(differing as f64 / total as f64)
}
