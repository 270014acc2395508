//! Centrality and clustering checked against brute-force recomputation.

use deptflow_core::graph::DeptGraph;
use deptflow_core::metrics;
use deptflow_testkit as oracle;

#[test]
fn betweenness_matches_path_enumeration() {
    for seed in 0..25 {
        let g = oracle::gnp_digraph(18, 0.15, seed);
        let fast = metrics::betweenness(&g);
        let slow = oracle::betweenness_by_enumeration(&g);
        for v in 0..g.node_count() {
            assert!(
                (fast[v] - slow[v]).abs() < 1e-9,
                "seed {seed}, node {v}: {} vs {}",
                fast[v],
                slow[v]
            );
        }
    }
}

#[test]
fn closeness_matches_floyd_warshall_recomputation() {
    for seed in 0..30 {
        let g = oracle::gnp_digraph(12, 0.18, seed);
        let fast = metrics::closeness(&g);
        let slow = oracle::closeness_from_matrix(&oracle::floyd_warshall(&g));
        for v in 0..g.node_count() {
            assert!((fast[v] - slow[v]).abs() < 1e-12, "seed {seed}, node {v}");
        }
    }
}

#[test]
fn clustering_matches_bruteforce_triangles() {
    for seed in 0..30 {
        let g = oracle::gnp_digraph(12, 0.2, seed);
        let fast = metrics::clustering(&g);
        let (slow, slow_avg) = oracle::clustering_bruteforce(&g);
        for v in 0..g.node_count() {
            assert!((fast.per_node[v] - slow[v]).abs() < 1e-12, "seed {seed}");
        }
        assert!((fast.average - slow_avg).abs() < 1e-12, "seed {seed}");
    }
}

#[test]
fn histogram_counts_match_direct_recount() {
    for seed in 0..10 {
        let g = oracle::gnp_digraph(20, 0.15, seed);
        let h = metrics::degree_histogram(&g, metrics::DegreeKind::Weighted);
        assert_eq!(h.counts.values().sum::<usize>(), g.node_count());
        let all = metrics::degrees(&g);
        for (&value, &count) in &h.counts {
            let recount = all.iter().filter(|m| m.weighted_degree == value).count();
            assert_eq!(count, recount, "seed {seed}, value {value}");
        }
    }
}

#[test]
fn betweenness_sum_identity_on_out_trees() {
    // On a tree oriented away from the root every shortest path is unique,
    // so sum(B) = sum over reachable pairs of (d - 1).
    use rand::{Rng, SeedableRng};
    for seed in 0..20 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = 2 + (seed as usize % 10);
        let labels: Vec<String> = (0..n).map(|i| format!("T{i}")).collect();
        let edges: Vec<(usize, usize, u64)> = (1..n)
            .map(|v| (rng.random_range(0..v), v, 1))
            .collect();
        let g = DeptGraph::from_parts(labels, edges).unwrap();
        let total: f64 = metrics::betweenness(&g).iter().sum();
        let mut expected = 0u64;
        for src in 0..n {
            for d in g.hop_distances_from(src).into_iter().flatten() {
                if d >= 2 {
                    expected += u64::from(d) - 1;
                }
            }
        }
        assert!(
            (total - expected as f64).abs() < 1e-9,
            "seed {seed}: {total} vs {expected}"
        );
    }
}

#[test]
fn node_metrics_are_permutation_equivariant() {
    for seed in 0..10 {
        let g = oracle::gnp_digraph(12, 0.2, seed);
        let (p, perm) = oracle::permuted_copy(&g, seed + 500);
        let original = metrics::node_metrics(&g);
        let permuted = metrics::node_metrics(&p);
        for (new_id, &old_id) in perm.iter().enumerate() {
            let a = &permuted[new_id];
            let b = &original[old_id];
            assert_eq!(a.degree, b.degree);
            assert_eq!(a.weighted_degree, b.weighted_degree);
            assert!((a.betweenness - b.betweenness).abs() < 1e-9);
            assert!((a.closeness - b.closeness).abs() < 1e-12);
            assert!((a.clustering - b.clustering).abs() < 1e-12);
        }
    }
}

#[test]
fn degree_identities_hold_on_random_graphs() {
    for seed in 0..10 {
        let g = oracle::gnp_digraph(15, 0.2, seed);
        for m in metrics::degrees(&g) {
            assert_eq!(m.degree, m.in_degree + m.out_degree);
            assert_eq!(m.weighted_degree, m.weighted_in + m.weighted_out);
        }
        let all = metrics::degrees(&g);
        let degree_sum: usize = all.iter().map(|m| m.degree).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
    }
}

#[test]
fn centrality_ranges_are_respected() {
    for seed in 0..10 {
        let g = oracle::gnp_digraph(15, 0.15, seed);
        for v in metrics::closeness(&g) {
            assert!((0.0..=1.0).contains(&v));
        }
        for v in metrics::clustering(&g).per_node {
            assert!((0.0..=1.0).contains(&v));
        }
        for v in metrics::betweenness(&g) {
            assert!(v >= 0.0);
        }
    }
}

#[test]
fn top_k_is_stable_across_reruns() {
    let g = oracle::gnp_digraph(20, 0.2, 77);
    let a = metrics::top_k(&g, &metrics::node_metrics(&g), "betweenness", 5).unwrap();
    let b = metrics::top_k(&g, &metrics::node_metrics(&g), "betweenness", 5).unwrap();
    assert_eq!(a, b);
}
