mod common;

use common::*;
use ppn_core::phylo::{
    from_newick, nqd, nrf, pairwise_matrix, to_newick, upgma, DistanceMatrix, SplitSet,
};
use ppn_core::ppn::{ppn_vector, Metric, PpnParams};
use ppn_core::{encode, SanitizePolicy};
use proptest::prelude::*;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

#[test]
fn worked_example_pair_matches_exact_oracle() {
    let a = encode("ACTGCCTCGATAA", SanitizePolicy::Drop).unwrap().with_id("orig");
    let b = encode("ACTGCCTCGATAC", SanitizePolicy::Drop).unwrap().with_id("mut");
    for metric in [Metric::Euclidean, Metric::Manhattan] {
        let params = PpnParams::new(1, 1).unwrap().with_metric(metric);
        let m = pairwise_matrix(&[a.clone(), b.clone()], &params).unwrap();
        let ea: Vec<u128> = oracle_permutations().iter().map(|p| naive_eta(&a, 1, 1, *p)).collect();
        let eb: Vec<u128> = oracle_permutations().iter().map(|p| naive_eta(&b, 1, 1, *p)).collect();
        let oracle = match metric {
            Metric::Euclidean => exact_euclidean(&ea, &eb),
            Metric::Manhattan => exact_manhattan(&ea, &eb),
        };
        assert!((m.get(0, 1) - oracle).abs() <= 1e-12 * oracle);
        assert_eq!(m.get(1, 0), m.get(0, 1));
    }
    // Only the last window changes: {A,A} = 4 becomes {A,C} = 6 under the identity row.
    let params = PpnParams::new(1, 1).unwrap().with_metric(Metric::Manhattan);
    let (va, vb) = (ppn_vector(&a, &params).unwrap(), ppn_vector(&b, &params).unwrap());
    assert_eq!(vb.component(0) - va.component(0), 2);
}

#[test]
fn random_matrix_triangle_inequality() {
    let mut rng = rng(21);
    let params = PpnParams::default();
    for _ in 0..10 {
        let seqs: Vec<_> = (0..3)
            .map(|i| random_sequence(&mut rng, 500).with_id(format!("s{i}")))
            .collect();
        let m = pairwise_matrix(&seqs, &params).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert!(m.get(i, k) <= m.get(i, j) + m.get(j, k) + 1e-9);
                }
            }
        }
    }
}

#[test]
fn nrf_matches_split_enumeration() {
    let mut rng = rng(22);
    for k in 4..=16 {
        for _ in 0..10 {
            let t1 = random_binary_tree(&mut rng, k);
            let t2 = random_binary_tree(&mut rng, k);
            assert_eq!(nrf(&t1, &t2).unwrap(), oracle_nrf(&t1, &t2));
            let sides: Vec<Vec<String>> = SplitSet::from_tree(&t1)
                .unwrap()
                .sides()
                .into_iter()
                .map(|s| s.into_iter().map(str::to_owned).collect())
                .collect();
            let mut expected: Vec<_> = oracle_splits(&t1).into_iter().collect();
            let mut got = sides;
            expected.sort();
            got.sort();
            assert_eq!(got, expected);
            assert_eq!(got.len(), k - 3);
        }
    }
}

#[test]
fn nqd_matches_path_intersection_oracle() {
    let mut rng = rng(23);
    for k in [4, 5, 7, 10] {
        for _ in 0..10 {
            let t1 = random_binary_tree(&mut rng, k);
            let t2 = random_binary_tree(&mut rng, k);
            assert_eq!(nqd(&t1, &t2).unwrap(), oracle_nqd(&t1, &t2));
        }
    }
}

#[test]
fn nqd_on_multifurcating_trees() {
    let t1 = from_newick("((t00,t01,t02),(t03,t04));").unwrap();
    let t2 = from_newick("((t00,t01),(t02,t03,t04));").unwrap();
    assert_eq!(nqd(&t1, &t2).unwrap(), oracle_nqd(&t1, &t2));
    assert_eq!(nrf(&t1, &t2).unwrap(), oracle_nrf(&t1, &t2));
}

#[test]
fn distances_ignore_rooting() {
    let mut rng = rng(24);
    for _ in 0..30 {
        let k = rng.random_range(4..=12);
        let t1 = random_binary_tree(&mut rng, k);
        let t2 = random_binary_tree(&mut rng, k);
        let internal: Vec<usize> = (0..t1.len()).filter(|&i| !t1.node(i).is_leaf()).collect();
        let rerooted = t1.reroot(*internal.choose(&mut rng).unwrap());
        assert_eq!(nrf(&rerooted, &t2).unwrap(), nrf(&t1, &t2).unwrap());
        assert_eq!(nqd(&rerooted, &t2).unwrap(), nqd(&t1, &t2).unwrap());
        assert_eq!(nrf(&rerooted, &t1).unwrap(), 0.0);
        assert_eq!(nqd(&rerooted, &t1).unwrap(), 0.0);
    }
}

#[test]
fn upgma_reproduces_ultrametric_inputs() {
    let mut rng = rng(25);
    for _ in 0..100 {
        let k = rng.random_range(2..=12);
        let m = random_ultrametric(&mut rng, k);
        let tree = upgma(&m).unwrap();
        assert!(tree.is_ultrametric(1e-9));
        assert!(max_path_error(&tree, &m) <= 1e-9);
    }
}

#[test]
fn upgma_is_order_independent() {
    let mut rng = rng(26);
    for _ in 0..20 {
        let k = rng.random_range(3..=10);
        // Coarse integer distances make ties common.
        let base: Vec<Vec<f64>> = {
            let mut d = vec![vec![0.0; k]; k];
            for i in 0..k {
                for j in i + 1..k {
                    let v = rng.random_range(1..4) as f64;
                    d[i][j] = v;
                    d[j][i] = v;
                }
            }
            d
        };
        let labels = leaf_labels(k);
        let m = DistanceMatrix::from_fn(labels.clone(), |i, j| base[i][j]).unwrap();
        let mut order: Vec<usize> = (0..k).collect();
        order.shuffle(&mut rng);
        let permuted = DistanceMatrix::from_fn(
            order.iter().map(|&i| labels[i].clone()).collect(),
            |i, j| base[order[i]][order[j]],
        )
        .unwrap();
        let a = to_newick(&upgma(&m).unwrap()).unwrap();
        let b = to_newick(&upgma(&permuted).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}

proptest! {
    #[test]
    fn upgma_newick_round_trip(seed in any::<u64>(), k in 2usize..15) {
        let mut rng = rng(seed);
        let values: Vec<f64> = (0..k * k).map(|_| rng.random_range(0.0..10.0)).collect();
        let m = DistanceMatrix::from_fn(leaf_labels(k), |i, j| values[i * k + j]).unwrap();
        let tree = upgma(&m).unwrap();
        prop_assert!(tree.is_ultrametric(1e-9));
        let text = to_newick(&tree).unwrap();
        let back = from_newick(&text).unwrap();
        prop_assert_eq!(to_newick(&back).unwrap(), text);
        for label in m.labels() {
            let (a, b) = (tree.find_leaf(label).unwrap(), back.find_leaf(label).unwrap());
            prop_assert!((tree.depth(a) - back.depth(b)).abs() <= 1e-12);
        }
        if k >= 4 {
            prop_assert_eq!(nrf(&tree, &back).unwrap(), 0.0);
        }
    }

    #[test]
    fn tree_distances_are_bounded_and_symmetric(seed in any::<u64>(), k in 4usize..9) {
        let mut rng = rng(seed);
        let t1 = random_binary_tree(&mut rng, k);
        let t2 = random_binary_tree(&mut rng, k);
        for f in [nrf, nqd] {
            let d = f(&t1, &t2).unwrap();
            prop_assert!((0.0..=1.0).contains(&d));
            prop_assert_eq!(d, f(&t2, &t1).unwrap());
            prop_assert_eq!(f(&t1, &t1).unwrap(), 0.0);
        }
    }
}
