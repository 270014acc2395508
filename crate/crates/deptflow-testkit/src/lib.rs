//! Brute-force oracles and seeded generators backing the workspace's test
//! suites. Everything here recomputes results along an independent route:
//! path enumeration instead of Brandes accumulation, Floyd-Warshall instead
//! of per-source BFS, exhaustive partition search instead of Louvain.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use deptflow_core::community::{modularity, UGraph};
use deptflow_core::graph::DeptGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded Erdos-Renyi style digraph: each ordered pair (u, v), u != v,
/// carries an edge with probability `p`; weights are random in 1..=9.
pub fn gnp_digraph(n: usize, p: f64, seed: u64) -> DeptGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (0..n).map(|i| format!("N{i}")).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random::<f64>() < p {
                edges.push((u, v, rng.random_range(1..=9)));
            }
        }
    }
    DeptGraph::from_parts(labels, edges).expect("generator emits valid edges")
}

/// A relabeled copy of `g`: node order shuffled by `seed`. Returns the
/// copy and `perm` where the copy's id `k` holds `g`'s node `perm[k]`.
pub fn permuted_copy(g: &DeptGraph, seed: u64) -> (DeptGraph, Vec<usize>) {
    let n = g.node_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    use rand::seq::SliceRandom;
    perm.shuffle(&mut rng);
    // inverse[old] = new
    let mut inverse = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        inverse[old] = new;
    }
    let labels: Vec<String> = perm.iter().map(|&old| g.label(old).to_string()).collect();
    let edges = g.edges().map(|(s, d, w)| (inverse[s], inverse[d], w));
    (
        DeptGraph::from_parts(labels, edges).expect("relabeling preserves validity"),
        perm,
    )
}

/// All-pairs hop distances by Floyd-Warshall on the adjacency matrix — a
/// different algorithm than the per-source BFS used by the library.
pub fn floyd_warshall(g: &DeptGraph) -> Vec<Vec<Option<u32>>> {
    let n = g.node_count();
    let inf = u64::MAX / 4;
    let mut dist = vec![vec![inf; n]; n];
    for v in 0..n {
        dist[v][v] = 0;
    }
    for (s, d, _) in g.edges() {
        dist[s][d] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = dist[i][k] + dist[k][j];
                if via < dist[i][j] {
                    dist[i][j] = via;
                }
            }
        }
    }
    dist.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|d| if d >= inf { None } else { Some(d as u32) })
                .collect()
        })
        .collect()
}

/// APL and diameter recomputed from a distance matrix; `None` when no
/// ordered pair is reachable.
pub fn apl_diameter_from_matrix(dist: &[Vec<Option<u32>>]) -> Option<(f64, u32)> {
    let mut sum = 0u64;
    let mut pairs = 0u64;
    let mut diameter = 0u32;
    for (i, row) in dist.iter().enumerate() {
        for (j, d) in row.iter().enumerate() {
            if i == j {
                continue;
            }
            if let Some(d) = d {
                sum += u64::from(*d);
                pairs += 1;
                diameter = diameter.max(*d);
            }
        }
    }
    if pairs == 0 {
        None
    } else {
        Some((sum as f64 / pairs as f64, diameter))
    }
}

/// Reachable-set-normalized out-closeness recomputed from a distance matrix.
pub fn closeness_from_matrix(dist: &[Vec<Option<u32>>]) -> Vec<f64> {
    dist.iter()
        .enumerate()
        .map(|(v, row)| {
            let mut reachable = 0u64;
            let mut total = 0u64;
            for (u, d) in row.iter().enumerate() {
                if u == v {
                    continue;
                }
                if let Some(d) = d {
                    reachable += 1;
                    total += u64::from(*d);
                }
            }
            if reachable == 0 {
                0.0
            } else {
                reachable as f64 / total as f64
            }
        })
        .collect()
}

/// Betweenness by explicit enumeration of every shortest path per ordered
/// pair, counting interior pass-throughs.
pub fn betweenness_by_enumeration(g: &DeptGraph) -> Vec<f64> {
    let n = g.node_count();
    let mut centrality = vec![0.0; n];
    for s in 0..n {
        let dist = bfs_distances(g, s);
        // Predecessors on shortest paths from s.
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (u, v, _) in g.edges() {
            if let (Some(du), Some(dv)) = (dist[u], dist[v]) {
                if du + 1 == dv {
                    preds[v].push(u);
                }
            }
        }
        for t in 0..n {
            if t == s || dist[t].is_none() || dist[t] == Some(0) {
                continue;
            }
            let mut paths: Vec<Vec<usize>> = Vec::new();
            let mut stack = vec![t];
            enumerate_paths(&preds, s, t, &mut stack, &mut paths);
            let count = paths.len() as f64;
            let mut through: BTreeMap<usize, usize> = BTreeMap::new();
            for path in &paths {
                for &v in path {
                    if v != s && v != t {
                        *through.entry(v).or_insert(0) += 1;
                    }
                }
            }
            for (v, passes) in through {
                centrality[v] += passes as f64 / count;
            }
        }
    }
    centrality
}

fn bfs_distances(g: &DeptGraph, src: usize) -> Vec<Option<u32>> {
    let n = g.node_count();
    let mut dist = vec![None; n];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v].unwrap();
        for &(w, _) in g.out_edges(v) {
            if dist[w].is_none() {
                dist[w] = Some(dv + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn enumerate_paths(
    preds: &[Vec<usize>],
    s: usize,
    node: usize,
    stack: &mut Vec<usize>,
    paths: &mut Vec<Vec<usize>>,
) {
    if node == s {
        let mut path = stack.clone();
        path.reverse();
        paths.push(path);
        return;
    }
    for &p in &preds[node] {
        stack.push(p);
        enumerate_paths(preds, s, p, stack, paths);
        stack.pop();
    }
}

/// Hop distances from `src` by exhaustive simple-path enumeration (minimum
/// path length per target). Only sensible for very small graphs.
pub fn distances_by_simple_paths(g: &DeptGraph, src: usize) -> Vec<Option<u32>> {
    let n = g.node_count();
    let mut best: Vec<Option<u32>> = vec![None; n];
    best[src] = Some(0);
    let mut visited = vec![false; n];
    visited[src] = true;
    fn walk(
        g: &DeptGraph,
        v: usize,
        depth: u32,
        visited: &mut Vec<bool>,
        best: &mut Vec<Option<u32>>,
    ) {
        for &(w, _) in g.out_edges(v) {
            if visited[w] {
                continue;
            }
            if best[w].map_or(true, |b| depth + 1 < b) {
                best[w] = Some(depth + 1);
            }
            visited[w] = true;
            walk(g, w, depth + 1, visited, best);
            visited[w] = false;
        }
    }
    walk(g, src, 0, &mut visited, &mut best);
    best
}

/// Strongly connected components by pairwise BFS reachability: group
/// mutually reachable nodes, order components like the library does.
pub fn scc_by_reachability(g: &DeptGraph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let reach: Vec<Vec<bool>> = (0..n)
        .map(|s| {
            let d = bfs_distances(g, s);
            (0..n).map(|t| d[t].is_some()).collect()
        })
        .collect();
    let mut assigned = vec![false; n];
    let mut components = Vec::new();
    for v in 0..n {
        if assigned[v] {
            continue;
        }
        let mut component = Vec::new();
        for u in v..n {
            if !assigned[u] && reach[v][u] && reach[u][v] {
                assigned[u] = true;
                component.push(u);
            }
        }
        components.push(component);
    }
    sort_component_list(&mut components);
    components
}

/// Weakly connected components by iterated label merging to fixpoint.
pub fn wcc_by_label_merge(g: &DeptGraph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for (s, d, _) in g.edges() {
            let low = label[s].min(label[d]);
            if label[s] != low {
                label[s] = low;
                changed = true;
            }
            if label[d] != low {
                label[d] = low;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &l) in label.iter().enumerate() {
        groups.entry(l).or_default().push(v);
    }
    let mut components: Vec<Vec<usize>> = groups.into_values().collect();
    sort_component_list(&mut components);
    components
}

fn sort_component_list(components: &mut [Vec<usize>]) {
    for c in components.iter_mut() {
        c.sort_unstable();
    }
    components.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a[0].cmp(&b[0])));
}

/// Local clustering by brute-force neighbor-pair counting on an explicit
/// symmetric adjacency matrix, plus the average over degree >= 2 nodes.
pub fn clustering_bruteforce(g: &DeptGraph) -> (Vec<f64>, f64) {
    let n = g.node_count();
    let mut adj = vec![vec![false; n]; n];
    for (s, d, _) in g.edges() {
        adj[s][d] = true;
        adj[d][s] = true;
    }
    let mut per_node = vec![0.0; n];
    let mut sum = 0.0;
    let mut included = 0usize;
    for v in 0..n {
        let neighbors: Vec<usize> = (0..n).filter(|&u| u != v && adj[v][u]).collect();
        let k = neighbors.len();
        if k < 2 {
            continue;
        }
        let mut links = 0usize;
        for i in 0..k {
            for j in (i + 1)..k {
                if adj[neighbors[i]][neighbors[j]] {
                    links += 1;
                }
            }
        }
        per_node[v] = links as f64 / (k * (k - 1) / 2) as f64;
        sum += per_node[v];
        included += 1;
    }
    let average = if included == 0 { 0.0 } else { sum / included as f64 };
    (per_node, average)
}

/// Calls `f` with every partition of `n` elements, encoded as a restricted
/// growth string (community of element i, ids dense in order of first use).
pub fn for_each_partition<F: FnMut(&[usize])>(n: usize, mut f: F) {
    assert!(n >= 1, "partitions of an empty set are not enumerated");
    let mut assignment = vec![0usize; n];
    visit_partitions(&mut assignment, 1, &mut f);
}

fn visit_partitions<F: FnMut(&[usize])>(assignment: &mut Vec<usize>, index: usize, f: &mut F) {
    let n = assignment.len();
    if index == n {
        f(assignment);
        return;
    }
    let max_used = assignment[..index].iter().copied().max().unwrap_or(0);
    for c in 0..=(max_used + 1) {
        assignment[index] = c;
        visit_partitions(assignment, index + 1, f);
    }
    assignment[index] = 0;
}

/// Exhaustively best modularity over every partition of `ug`'s nodes.
pub fn best_modularity(ug: &UGraph, resolution: f64) -> (f64, Vec<usize>) {
    let n = ug.node_count();
    let mut best_q = f64::NEG_INFINITY;
    let mut best_assignment = vec![0usize; n];
    for_each_partition(n, |assignment| {
        let q = modularity(ug, assignment, resolution).expect("enumerated partitions are valid");
        if q > best_q {
            best_q = q;
            best_assignment = assignment.to_vec();
        }
    });
    (best_q, best_assignment)
}

/// Planted-partition undirected graph: `blocks` communities of
/// `block_size` nodes, unit-weight edges with probability `p_in` inside a
/// block and `p_out` across blocks. Returns the graph and the planted
/// assignment.
pub fn planted_ugraph(
    blocks: usize,
    block_size: usize,
    p_in: f64,
    p_out: f64,
    seed: u64,
) -> (UGraph, Vec<usize>) {
    let n = blocks * block_size;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (0..n).map(|i| format!("N{i}")).collect();
    let truth: Vec<usize> = (0..n).map(|i| i / block_size).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let p = if truth[u] == truth[v] { p_in } else { p_out };
            if rng.random::<f64>() < p {
                edges.push((u, v, 1.0));
            }
        }
    }
    (
        UGraph::from_weighted_edges(labels, &edges).expect("generator emits valid edges"),
        truth,
    )
}

/// Planted two-community digraph for layout separation tests: dense inside
/// each group, a single bridge arc between them. Returns the graph and the
/// group of each node.
pub fn planted_two_communities(
    size_per: usize,
    p_in: f64,
    seed: u64,
) -> (DeptGraph, Vec<usize>) {
    let n = 2 * size_per;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (0..n).map(|i| format!("N{i}")).collect();
    let truth: Vec<usize> = (0..n).map(|i| i / size_per).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if truth[u] == truth[v] && rng.random::<f64>() < p_in {
                edges.push((u, v, 1));
            }
        }
    }
    edges.push((0, size_per, 1));
    (
        DeptGraph::from_parts(labels, edges).expect("generator emits valid edges"),
        truth,
    )
}

/// True when two assignments describe the same grouping up to community
/// relabeling.
pub fn same_partition(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut forward: BTreeMap<usize, usize> = BTreeMap::new();
    let mut used: BTreeSet<usize> = BTreeSet::new();
    for (&ca, &cb) in a.iter().zip(b) {
        match forward.get(&ca) {
            Some(&mapped) => {
                if mapped != cb {
                    return false;
                }
            }
            None => {
                if !used.insert(cb) {
                    return false;
                }
                forward.insert(ca, cb);
            }
        }
    }
    true
}
