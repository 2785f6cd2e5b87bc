//! Independent reference implementations shared by the integration tests.
//!
//! Nothing here calls the fast paths it is used to check: windows are recounted
//! from scratch, metrics use big integers, splits come from edge removal and
//! quartets from path intersection.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::{BigInt, BigUint};
use ppn_core::phylo::{from_newick, DistanceMatrix, PhyloTree};
use ppn_core::{EncodedSequence, Nucleotide};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_sequence(rng: &mut StdRng, len: usize) -> EncodedSequence {
    let codes = (0..len).map(|_| Nucleotide::ALL[rng.random_range(0..4)]).collect();
    EncodedSequence::new("r", codes).unwrap()
}

/// Permutations of [2, 3, 5, 7] in lexicographic order, built recursively.
pub fn oracle_permutations() -> Vec<[u64; 4]> {
    fn extend(prefix: &mut Vec<u64>, rest: &[u64], out: &mut Vec<[u64; 4]>) {
        if rest.is_empty() {
            out.push([prefix[0], prefix[1], prefix[2], prefix[3]]);
            return;
        }
        for i in 0..rest.len() {
            prefix.push(rest[i]);
            let remaining: Vec<u64> =
                rest.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v).collect();
            extend(prefix, &remaining, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &[2, 3, 5, 7], &mut out);
    out
}

/// Window products for permutation `primes`, recounting every window from scratch.
pub fn naive_representative(seq: &EncodedSequence, l: usize, t: usize, primes: [u64; 4]) -> Vec<u64> {
    let codes = seq.codes();
    let n_len = codes.len();
    let mut out = Vec::new();
    let mut center = 1usize;
    while center <= n_len {
        let lo = center.saturating_sub(l).max(1);
        let hi = (center + l).min(n_len);
        let mut value = 1u64;
        for pos in lo..=hi {
            value *= primes[codes[pos - 1].index()];
        }
        out.push(value);
        center += t + 1;
    }
    out
}

pub fn naive_eta(seq: &EncodedSequence, l: usize, t: usize, primes: [u64; 4]) -> u128 {
    naive_representative(seq, l, t, primes).iter().map(|&v| v as u128).sum()
}

/// Exact Euclidean distance as a decimal computed with big-integer square root.
pub fn exact_euclidean(a: &[u128], b: &[u128]) -> f64 {
    let sum: BigUint = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| {
            let d = BigInt::from(x) - BigInt::from(y);
            (&d * &d).to_biguint().unwrap()
        })
        .sum();
    // floor(sqrt(sum) * 10^30)
    let scaled = sum * BigUint::from(10u32).pow(60);
    let root = scaled.sqrt();
    format!("{root}e-30").parse().unwrap()
}

pub fn exact_manhattan(a: &[u128], b: &[u128]) -> f64 {
    let sum: BigUint = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| (BigInt::from(x) - BigInt::from(y)).magnitude().clone())
        .sum();
    sum.to_string().parse().unwrap()
}

pub fn leaf_labels(k: usize) -> Vec<String> {
    (0..k).map(|i| format!("t{i:02}")).collect()
}

/// Random rooted binary tree in Newick form, built by joining random pairs.
pub fn random_binary_newick(rng: &mut StdRng, k: usize) -> String {
    let mut parts: Vec<String> = leaf_labels(k);
    while parts.len() > 1 {
        let i = rng.random_range(0..parts.len());
        let a = parts.swap_remove(i);
        let j = rng.random_range(0..parts.len());
        let b = parts.swap_remove(j);
        let (la, lb): (f64, f64) = (rng.random_range(0.1..2.0), rng.random_range(0.1..2.0));
        parts.push(format!("({a}:{la},{b}:{lb})"));
    }
    format!("{};", parts[0])
}

pub fn random_binary_tree(rng: &mut StdRng, k: usize) -> PhyloTree {
    from_newick(&random_binary_newick(rng, k)).unwrap()
}

/// Random ultrametric matrix: cophenetic distances of random merges at
/// increasing heights. Returns the matrix with labels in shuffled order.
pub fn random_ultrametric(rng: &mut StdRng, k: usize) -> DistanceMatrix {
    let mut clusters: Vec<Vec<usize>> = (0..k).map(|i| vec![i]).collect();
    let mut d = vec![vec![0.0f64; k]; k];
    let mut height = 0.0;
    while clusters.len() > 1 {
        height += rng.random_range(0.05..1.0);
        let i = rng.random_range(0..clusters.len());
        let a = clusters.swap_remove(i);
        let j = rng.random_range(0..clusters.len());
        let b = clusters.swap_remove(j);
        for &x in &a {
            for &y in &b {
                d[x][y] = 2.0 * height;
                d[y][x] = 2.0 * height;
            }
        }
        clusters.push(a.into_iter().chain(b).collect());
    }
    let labels = leaf_labels(k);
    DistanceMatrix::from_fn(labels, |i, j| d[i][j]).unwrap()
}

fn undirected(tree: &PhyloTree) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); tree.len()];
    for (id, node) in tree.nodes().iter().enumerate() {
        if let Some(p) = node.parent {
            adj[id].push(p);
            adj[p].push(id);
        }
    }
    adj
}

/// Nontrivial splits found by deleting each edge and flood-filling one side.
/// Each split is the sorted label set of the side without the smallest label.
pub fn oracle_splits(tree: &PhyloTree) -> BTreeSet<Vec<String>> {
    let adj = undirected(tree);
    let mut all: Vec<String> = tree.leaf_labels().into_iter().map(str::to_owned).collect();
    all.sort();
    let k = all.len();
    let mut out = BTreeSet::new();
    for (child, node) in tree.nodes().iter().enumerate() {
        let Some(parent) = node.parent else { continue };
        let mut seen = vec![false; tree.len()];
        seen[child] = true;
        seen[parent] = true;
        let mut queue = VecDeque::from([child]);
        let mut side = Vec::new();
        while let Some(v) = queue.pop_front() {
            let n = tree.node(v);
            if n.children.is_empty() {
                side.push(n.label.clone().unwrap());
            }
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if side.len() < 2 || side.len() > k - 2 {
            continue;
        }
        side.sort();
        if side.contains(&all[0]) {
            let set: HashSet<_> = side.iter().cloned().collect();
            side = all.iter().filter(|l| !set.contains(*l)).cloned().collect();
        }
        out.insert(side);
    }
    out
}

pub fn oracle_nrf(t1: &PhyloTree, t2: &PhyloTree) -> f64 {
    let (a, b) = (oracle_splits(t1), oracle_splits(t2));
    let total = a.len() + b.len();
    if total == 0 {
        return 0.0;
    }
    a.symmetric_difference(&b).count() as f64 / total as f64
}

/// Edges `(child, parent)` on the path between two nodes.
fn path_edges(tree: &PhyloTree, a: usize, b: usize) -> HashSet<usize> {
    let ancestors = |mut v: usize| {
        let mut path = vec![v];
        while let Some(p) = tree.node(v).parent {
            path.push(p);
            v = p;
        }
        path
    };
    let (pa, pb) = (ancestors(a), ancestors(b));
    let set_b: HashSet<_> = pb.iter().copied().collect();
    let lca = *pa.iter().find(|v| set_b.contains(v)).unwrap();
    // Each edge is identified by its lower endpoint.
    pa.iter()
        .take_while(|&&v| v != lca)
        .chain(pb.iter().take_while(|&&v| v != lca))
        .copied()
        .collect()
}

/// 0 = ab|cd, 1 = ac|bd, 2 = ad|bc, 3 = unresolved. A pairing is the
/// topology when its two paths are edge-disjoint and both other pairings'
/// paths share an edge.
pub fn oracle_quartet(tree: &PhyloTree, leaves: [usize; 4]) -> u8 {
    let [a, b, c, d] = leaves;
    let pairings = [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))];
    let shares: Vec<bool> = pairings
        .iter()
        .map(|&((x, y), (u, v))| {
            let p = path_edges(tree, x, y);
            let q = path_edges(tree, u, v);
            !p.is_disjoint(&q)
        })
        .collect();
    let disjoint: Vec<usize> = (0..3).filter(|&i| !shares[i]).collect();
    if disjoint.len() == 1 {
        disjoint[0] as u8
    } else {
        3
    }
}

pub fn oracle_nqd(t1: &PhyloTree, t2: &PhyloTree) -> f64 {
    let mut labels: Vec<String> = t1.leaf_labels().into_iter().map(str::to_owned).collect();
    labels.sort();
    let ids1: Vec<usize> = labels.iter().map(|l| t1.find_leaf(l).unwrap()).collect();
    let ids2: Vec<usize> = labels.iter().map(|l| t2.find_leaf(l).unwrap()).collect();
    let k = labels.len();
    let (mut differ, mut total) = (0u64, 0u64);
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    total += 1;
                    let q1 = oracle_quartet(t1, [ids1[a], ids1[b], ids1[c], ids1[d]]);
                    let q2 = oracle_quartet(t2, [ids2[a], ids2[b], ids2[c], ids2[d]]);
                    if q1 != q2 {
                        differ += 1;
                    }
                }
            }
        }
    }
    differ as f64 / total as f64
}

/// Maximum absolute difference between tree path lengths and matrix entries.
pub fn max_path_error(tree: &PhyloTree, m: &DistanceMatrix) -> f64 {
    let ids: Vec<usize> = m.labels().iter().map(|l| tree.find_leaf(l).unwrap()).collect();
    let mut worst = 0.0f64;
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            worst = worst.max((tree.path_length(ids[i], ids[j]) - m.get(i, j)).abs());
        }
    }
    worst
}
