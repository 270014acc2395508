//! Modularity and Louvain community detection on the symmetrized graph.
//!
//! The directed transfer graph is folded into an undirected weighted graph
//! (`w(u,v) = w(u->v) + w(v->u)`) before any community computation. The
//! Louvain passes are seed-controlled and strictly single-threaded: the
//! result depends on move order, so determinism comes first.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::DeptGraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CommunityError {
    /// Graph has no edges, so modularity is undefined.
    #[error("graph has no edges")]
    EmptyGraph,
    /// Partition does not assign exactly the graph's nodes.
    #[error("partition covers {got} nodes, graph has {expected}")]
    CoverageMismatch { expected: usize, got: usize },
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("edge endpoint out of range: {u} -- {v}")]
    EdgeOutOfRange { u: usize, v: usize },
    #[error("non-positive weight on edge {u} -- {v}")]
    NonPositiveWeight { u: usize, v: usize },
}

/// Undirected weighted graph: the symmetric view the modularity formula
/// is defined on.
#[derive(Debug, Clone, PartialEq)]
pub struct UGraph {
    labels: Vec<String>,
    adj: Vec<Vec<(usize, f64)>>,
    total_weight: f64,
}

impl UGraph {
    /// Folds a directed graph: `w(u,v) = w(u->v) + w(v->u)`.
    pub fn symmetrize(g: &DeptGraph) -> UGraph {
        let mut weights: BTreeMap<(usize, usize), f64> = BTreeMap::new();
        for (s, d, w) in g.edges() {
            let key = if s < d { (s, d) } else { (d, s) };
            *weights.entry(key).or_insert(0.0) += w as f64;
        }
        Self::from_pair_weights(g.labels().to_vec(), weights)
    }

    /// Builds an undirected graph from explicit edges; duplicate pairs
    /// aggregate. Base-level graphs may not carry self-loops.
    pub fn from_weighted_edges(
        labels: Vec<String>,
        edges: &[(usize, usize, f64)],
    ) -> Result<UGraph, CommunityError> {
        let n = labels.len();
        let mut weights: BTreeMap<(usize, usize), f64> = BTreeMap::new();
        for &(u, v, w) in edges {
            if u >= n || v >= n {
                return Err(CommunityError::EdgeOutOfRange { u, v });
            }
            if u == v {
                return Err(CommunityError::SelfLoop(labels[u].clone()));
            }
            if w <= 0.0 {
                return Err(CommunityError::NonPositiveWeight { u, v });
            }
            let key = if u < v { (u, v) } else { (v, u) };
            *weights.entry(key).or_insert(0.0) += w;
        }
        Ok(Self::from_pair_weights(labels, weights))
    }

    fn from_pair_weights(labels: Vec<String>, weights: BTreeMap<(usize, usize), f64>) -> UGraph {
        let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); labels.len()];
        let mut total_weight = 0.0;
        for (&(u, v), &w) in &weights {
            adj[u].push((v, w));
            adj[v].push((u, w));
            total_weight += w;
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        }
        UGraph {
            labels,
            adj,
            total_weight,
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Total edge weight `m` (each undirected edge counted once).
    pub fn total_weight(&self) -> f64 {
        self.total_weight
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, f64)] {
        &self.adj[v]
    }
}

/// A node-to-community assignment with its modularity score.
///
/// Community ids are dense `0..c` and ordered by decreasing size (ties by
/// smallest contained node id).
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    pub assignment: Vec<usize>,
    pub q: f64,
    pub seed: u64,
    pub resolution: f64,
}

/// Modularity `Q = (1/2m) * sum_ij [A_ij - r * k_i k_j / 2m] delta(c_i, c_j)`
/// with resolution `r` multiplying the null term.
pub fn modularity(
    ug: &UGraph,
    assignment: &[usize],
    resolution: f64,
) -> Result<f64, CommunityError> {
    if ug.total_weight <= 0.0 {
        return Err(CommunityError::EmptyGraph);
    }
    if assignment.len() != ug.node_count() {
        return Err(CommunityError::CoverageMismatch {
            expected: ug.node_count(),
            got: assignment.len(),
        });
    }
    let level = LevelGraph::from_ugraph(ug);
    Ok(level.modularity_of(assignment, resolution))
}

/// Louvain two-phase modularity maximization.
///
/// Phase 1 visits nodes in a seed-shuffled order and moves each to the
/// neighboring community with the largest positive modularity gain (ties:
/// smallest community id), sweeping until a full sweep makes no move.
/// Phase 2 aggregates communities into super-nodes and repeats; the loop
/// stops when aggregation no longer changes the partition.
pub fn louvain(ug: &UGraph, seed: u64, resolution: f64) -> Result<Partition, CommunityError> {
    louvain_inner(ug, seed, resolution, None)
}

/// As [`louvain`], but records the flat modularity after every sweep that
/// made at least one move. Aggregation preserves modularity, so the level
/// score recorded here equals the flat score.
pub(crate) fn louvain_inner(
    ug: &UGraph,
    seed: u64,
    resolution: f64,
    mut history: Option<&mut Vec<f64>>,
) -> Result<Partition, CommunityError> {
    if ug.total_weight <= 0.0 {
        return Err(CommunityError::EmptyGraph);
    }
    let n = ug.node_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut level = LevelGraph::from_ugraph(ug);
    // Original node -> node of the current level.
    let mut flat: Vec<usize> = (0..n).collect();

    loop {
        let comm = local_moving(&level, &mut rng, resolution, history.as_deref_mut());
        let (aggregated, remap) = match level.aggregate(&comm) {
            Some(pair) => pair,
            None => break, // every node kept its own community
        };
        for slot in flat.iter_mut() {
            *slot = remap[comm[*slot]];
        }
        level = aggregated;
    }

    let assignment = renumber_by_size(&flat);
    let q = modularity(ug, &assignment, resolution)?;
    Ok(Partition {
        assignment,
        q,
        seed,
        resolution,
    })
}

/// `(community id, node count, percentage)` sorted by decreasing count,
/// ties by community id.
pub fn community_shares(partition: &Partition) -> Vec<(usize, usize, f64)> {
    let n = partition.assignment.len();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &partition.assignment {
        *counts.entry(c).or_insert(0) += 1;
    }
    let mut shares: Vec<(usize, usize, f64)> = counts
        .into_iter()
        .map(|(c, count)| (c, count, 100.0 * count as f64 / n as f64))
        .collect();
    shares.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    shares
}

/// Weighted graph of one Louvain level. Aggregated super-nodes carry the
/// intra-community weight as a self-loop; a self-loop of weight `s`
/// contributes `2s` to its node's degree.
struct LevelGraph {
    adj: Vec<Vec<(usize, f64)>>,
    self_weight: Vec<f64>,
    degree: Vec<f64>,
    two_m: f64,
}

impl LevelGraph {
    fn from_ugraph(ug: &UGraph) -> LevelGraph {
        let n = ug.node_count();
        let adj = ug.adj.clone();
        let self_weight = vec![0.0; n];
        Self::finish(adj, self_weight)
    }

    fn finish(adj: Vec<Vec<(usize, f64)>>, self_weight: Vec<f64>) -> LevelGraph {
        let degree: Vec<f64> = adj
            .iter()
            .zip(&self_weight)
            .map(|(nbrs, &s)| row_weight(nbrs, s))
            .collect();
        let two_m = degree.iter().sum();
        LevelGraph {
            adj,
            self_weight,
            degree,
            two_m,
        }
    }

    fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Modularity of an assignment over this level's nodes.
    fn modularity_of(&self, assignment: &[usize], resolution: f64) -> f64 {
        let mut intra: BTreeMap<usize, f64> = BTreeMap::new();
        let mut degree_sum: BTreeMap<usize, f64> = BTreeMap::new();
        for v in 0..self.node_count() {
            let c = assignment[v];
            let mut row = 0.0;
            for &(u, w) in &self.adj[v] {
                if assignment[u] == c {
                    row += w;
                }
            }
            row += 2.0 * self.self_weight[v];
            *intra.entry(c).or_insert(0.0) += row;
            *degree_sum.entry(c).or_insert(0.0) += self.degree[v];
        }
        let mut q = 0.0;
        for (c, &within) in &intra {
            let k = degree_sum[c] / self.two_m;
            q += within / self.two_m - resolution * k * k;
        }
        q
    }

    /// Collapses communities into super-nodes. Returns `None` when every
    /// node is its own community (aggregation would be the identity).
    /// Otherwise returns the new level and the map community id -> new id.
    fn aggregate(&self, assignment: &[usize]) -> Option<(LevelGraph, Vec<usize>)> {
        let n = self.node_count();
        let mut remap = vec![usize::MAX; n];
        let mut next = 0usize;
        // Community ids are node ids here; numbering by ascending id keeps
        // aggregation deterministic.
        for v in 0..n {
            let c = assignment[v];
            if remap[c] == usize::MAX {
                remap[c] = next;
                next += 1;
            }
        }
        if next == n {
            return None;
        }
        let mut adj_weights: BTreeMap<(usize, usize), f64> = BTreeMap::new();
        let mut self_weight = vec![0.0; next];
        for v in 0..n {
            let cv = remap[assignment[v]];
            self_weight[cv] += self.self_weight[v];
            for &(u, w) in &self.adj[v] {
                let cu = remap[assignment[u]];
                if cu == cv {
                    // Counted from both endpoints; halve to store once.
                    if v < u {
                        self_weight[cv] += w;
                    }
                } else {
                    *adj_weights.entry((cv, cu)).or_insert(0.0) += w;
                }
            }
        }
        let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); next];
        for (&(a, b), &w) in &adj_weights {
            adj[a].push((b, w));
        }
        Some((Self::finish(adj, self_weight), remap))
    }
}

fn row_weight(neighbors: &[(usize, f64)], self_weight: f64) -> f64 {
    let mut row = 0.0;
    for &(_, w) in neighbors {
        row += w;
    }
    row + 2.0 * self_weight
}

/// One Louvain level: sweeps of greedy local moves until quiescent.
fn local_moving(
    level: &LevelGraph,
    rng: &mut ChaCha8Rng,
    resolution: f64,
    mut history: Option<&mut Vec<f64>>,
) -> Vec<usize> {
    let n = level.node_count();
    let mut comm: Vec<usize> = (0..n).collect();
    let mut sum_tot: Vec<f64> = level.degree.clone();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);

    loop {
        let mut moves = 0usize;
        for &v in &order {
            let kv = level.degree[v];
            let cv = comm[v];
            let mut weight_to: BTreeMap<usize, f64> = BTreeMap::new();
            for &(u, w) in &level.adj[v] {
                *weight_to.entry(comm[u]).or_insert(0.0) += w;
            }
            sum_tot[cv] -= kv;
            // Gain of joining community c, up to a constant shared by all
            // candidates: k_{v,c} - r * sum_tot(c) * k_v / 2m.
            let gain =
                |c: usize, w_c: f64| w_c - resolution * sum_tot[c] * kv / level.two_m;
            let mut best_c = cv;
            let mut best_gain = gain(cv, weight_to.get(&cv).copied().unwrap_or(0.0));
            for (&c, &w_c) in &weight_to {
                if c == cv {
                    continue;
                }
                // Ascending iteration + strict comparison: the smallest
                // community id wins ties, and a tie with the current
                // community means no move.
                let g = gain(c, w_c);
                if g > best_gain {
                    best_gain = g;
                    best_c = c;
                }
            }
            sum_tot[best_c] += kv;
            if best_c != cv {
                comm[v] = best_c;
                moves += 1;
            }
        }
        if moves == 0 {
            break;
        }
        if let Some(h) = history.as_deref_mut() {
            h.push(level.modularity_of(&comm, resolution));
        }
    }
    comm
}

/// Renumbers community labels densely: largest community first, ties by
/// smallest contained node id.
fn renumber_by_size(assignment: &[usize]) -> Vec<usize> {
    let mut size: BTreeMap<usize, usize> = BTreeMap::new();
    let mut first_node: BTreeMap<usize, usize> = BTreeMap::new();
    for (v, &c) in assignment.iter().enumerate() {
        *size.entry(c).or_insert(0) += 1;
        first_node.entry(c).or_insert(v);
    }
    let mut communities: Vec<(usize, usize, usize)> = size
        .iter()
        .map(|(&c, &count)| (c, count, first_node[&c]))
        .collect();
    communities.sort_by(|a, b| b.1.cmp(&a.1).then(a.2.cmp(&b.2)));
    let rank: BTreeMap<usize, usize> = communities
        .iter()
        .enumerate()
        .map(|(rank, &(c, _, _))| (c, rank))
        .collect();
    assignment.iter().map(|c| rank[c]).collect()
}
