//! Bipartitions and the normalized Robinson-Foulds distance.

use std::collections::{BTreeSet, HashMap};

use super::{PhyloError, PhyloTree};

/// Leaf labels shared by two trees, sorted, or an error if they differ or
/// there are fewer than four.
pub(crate) fn common_leaves(t1: &PhyloTree, t2: &PhyloTree) -> Result<Vec<String>, PhyloError> {
    t1.validate()?;
    t2.validate()?;
    let sorted = |t: &PhyloTree| {
        let mut labels: Vec<String> = t.leaf_labels().into_iter().map(str::to_owned).collect();
        labels.sort();
        labels
    };
    let (a, b) = (sorted(t1), sorted(t2));
    if a != b {
        return Err(PhyloError::LeafSetMismatch);
    }
    if a.len() < 4 {
        return Err(PhyloError::TooFewLeaves(a.len()));
    }
    Ok(a)
}

/// Nontrivial bipartitions of a tree's leaves, ignoring the root.
///
/// Each split is stored as a bitset over the sorted leaf labels, oriented so
/// the first leaf is on the unset side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitSet {
    labels: Vec<String>,
    splits: BTreeSet<Vec<u64>>,
}

impl SplitSet {
    pub fn from_tree(tree: &PhyloTree) -> Result<Self, PhyloError> {
        tree.validate()?;
        let mut labels: Vec<String> = tree.leaf_labels().into_iter().map(str::to_owned).collect();
        labels.sort();
        Ok(Self::with_labels(tree, labels))
    }

    fn with_labels(tree: &PhyloTree, labels: Vec<String>) -> Self {
        let k = labels.len();
        let words = k.div_ceil(64);
        let index: HashMap<&str, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();

        // Leaf sets below each node, filled children-first.
        let order = tree.preorder();
        let mut below: Vec<Vec<u64>> = vec![Vec::new(); tree.len()];
        let mut splits = BTreeSet::new();
        for &id in order.iter().rev() {
            let node = tree.node(id);
            let mut bits = vec![0u64; words];
            if node.is_leaf() {
                let i = index[node.label.as_deref().unwrap_or("")];
                bits[i / 64] |= 1 << (i % 64);
            } else {
                for &c in &node.children {
                    for (w, cw) in bits.iter_mut().zip(&below[c]) {
                        *w |= cw;
                    }
                }
                for &c in &node.children {
                    below[c] = Vec::new();
                }
            }
            if id != tree.root() {
                let size: u32 = bits.iter().map(|w| w.count_ones()).sum();
                if size >= 2 && size as usize + 2 <= k {
                    splits.insert(canonical(&bits, k));
                }
            }
            below[id] = bits;
        }
        Self { labels, splits }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.splits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.splits.is_empty()
    }

    /// Each split as the sorted labels on the side not containing the first leaf.
    pub fn sides(&self) -> Vec<Vec<&str>> {
        self.splits
            .iter()
            .map(|bits| {
                (0..self.labels.len())
                    .filter(|&i| bits[i / 64] >> (i % 64) & 1 == 1)
                    .map(|i| self.labels[i].as_str())
                    .collect()
            })
            .collect()
    }

    pub fn symmetric_difference(&self, other: &SplitSet) -> usize {
        self.splits.symmetric_difference(&other.splits).count()
    }
}

fn canonical(bits: &[u64], k: usize) -> Vec<u64> {
    if bits[0] & 1 == 0 {
        return bits.to_vec();
    }
    let mut flipped: Vec<u64> = bits.iter().map(|w| !w).collect();
    let tail = k % 64;
    if tail != 0 {
        *flipped.last_mut().expect("at least one word") &= (1u64 << tail) - 1;
    }
    flipped
}

/// Robinson-Foulds distance divided by the total number of nontrivial splits
/// in both trees. Two star trees are at distance 0.
pub fn nrf(t1: &PhyloTree, t2: &PhyloTree) -> Result<f64, PhyloError> {
    let labels = common_leaves(t1, t2)?;
    let a = SplitSet::with_labels(t1, labels.clone());
    let b = SplitSet::with_labels(t2, labels);
    let total = a.len() + b.len();
    if total == 0 {
        return Ok(0.0);
    }
    Ok(a.symmetric_difference(&b) as f64 / total as f64)
}
