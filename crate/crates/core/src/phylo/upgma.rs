//! Average-linkage (UPGMA) tree construction.

use std::cmp::Ordering;

use super::tree::Node;
use super::{DistanceMatrix, NodeId, PhyloError, PhyloTree};

struct Cluster {
    node: NodeId,
    size: usize,
    height: f64,
    // Smallest leaf label in the cluster, used for tie-breaking and child order.
    key: String,
}

/// Builds a rooted ultrametric tree by repeatedly merging the closest pair of
/// clusters.
///
/// Distances to a merged cluster are size-weighted averages of the distances
/// to its two parts, and the merged node sits at half the pair distance.
/// Among pairs at equal distance, the pair whose ordered cluster keys (each
/// cluster's smallest leaf label) compare lowest is merged first; the child
/// with the smaller key is written first.
pub fn upgma(matrix: &DistanceMatrix) -> Result<PhyloTree, PhyloError> {
    let k = matrix.dim();
    for i in 0..k {
        for j in 0..k {
            if !matrix.get(i, j).is_finite() {
                return Err(PhyloError::NonFiniteDistance {
                    row: matrix.labels()[i].clone(),
                    column: matrix.labels()[j].clone(),
                });
            }
        }
    }

    let mut nodes: Vec<Node> = Vec::with_capacity(2 * k - 1);
    let mut clusters: Vec<Option<Cluster>> = Vec::with_capacity(k);
    for label in matrix.labels() {
        nodes.push(Node {
            parent: None,
            children: Vec::new(),
            label: Some(label.clone()),
            branch_length: None,
        });
        clusters.push(Some(Cluster {
            node: nodes.len() - 1,
            size: 1,
            height: 0.0,
            key: label.clone(),
        }));
    }
    let mut dist: Vec<Vec<f64>> = (0..k).map(|i| matrix.row(i).to_vec()).collect();

    for _ in 1..k {
        let (a, b) = closest_pair(&clusters, &dist);
        let merge_distance = dist[a][b];
        let first = clusters[a].take().expect("active cluster");
        let second = clusters[b].take().expect("active cluster");
        let (size_a, size_b) = (first.size as f64, second.size as f64);
        let (left, right) = if first.key <= second.key {
            (first, second)
        } else {
            (second, first)
        };

        let height = merge_distance / 2.0;
        let parent = nodes.len();
        nodes.push(Node {
            parent: None,
            children: vec![left.node, right.node],
            label: None,
            branch_length: None,
        });
        for child in [&left, &right] {
            nodes[child.node].parent = Some(parent);
            nodes[child.node].branch_length = Some((height - child.height).max(0.0));
        }

        let size = left.size + right.size;
        for (other, slot) in clusters.iter().enumerate() {
            if slot.is_none() || other == a || other == b {
                continue;
            }
            let d = (dist[a][other] * size_a + dist[b][other] * size_b) / size as f64;
            dist[a][other] = d;
            dist[other][a] = d;
        }
        let key = left.key.clone();
        clusters[a] = Some(Cluster {
            node: parent,
            size,
            height,
            key,
        });
    }

    let root = nodes.len() - 1;
    Ok(PhyloTree::from_parts(nodes, root))
}

fn closest_pair(clusters: &[Option<Cluster>], dist: &[Vec<f64>]) -> (usize, usize) {
    let active: Vec<usize> = (0..clusters.len()).filter(|&i| clusters[i].is_some()).collect();
    let key = |i: usize| clusters[i].as_ref().map(|c| c.key.as_str()).unwrap_or("");
    let ordered = |i: usize, j: usize| {
        let (ki, kj) = (key(i), key(j));
        if ki <= kj {
            (ki, kj)
        } else {
            (kj, ki)
        }
    };

    let mut best: Option<(usize, usize)> = None;
    for (pos, &i) in active.iter().enumerate() {
        for &j in &active[pos + 1..] {
            best = match best {
                None => Some((i, j)),
                Some((bi, bj)) => match dist[i][j].partial_cmp(&dist[bi][bj]) {
                    Some(Ordering::Less) => Some((i, j)),
                    Some(Ordering::Equal) if ordered(i, j) < ordered(bi, bj) => Some((i, j)),
                    _ => Some((bi, bj)),
                },
            };
        }
    }
    best.expect("at least two active clusters")
}
