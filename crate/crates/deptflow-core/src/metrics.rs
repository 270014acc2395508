//! Per-node centrality and degree metrics plus network-level summaries.
//!
//! Conventions, pinned once and used everywhere:
//! - betweenness: unnormalized, over directed hop-shortest paths (Brandes);
//! - closeness: out-closeness normalized by the reachable set,
//!   `|R(v)| / sum of d(v, u)` over reachable `u`, zero when nothing is
//!   reachable, so values stay in `[0, 1]` on disconnected graphs;
//! - clustering: on the undirected view, nodes of undirected degree < 2
//!   score zero and are excluded from the network average;
//! - network `avg_degree` is `|E| / n`, while per-node degree is in + out.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{DeptGraph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricsError {
    #[error("unknown metric `{0}`")]
    UnknownMetric(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Per-node metric values. `degree = in_degree + out_degree` and
/// `weighted_degree = weighted_in + weighted_out` by construction.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct NodeMetrics {
    pub degree: usize,
    pub in_degree: usize,
    pub out_degree: usize,
    pub weighted_degree: u64,
    pub weighted_in: u64,
    pub weighted_out: u64,
    pub betweenness: f64,
    pub closeness: f64,
    pub clustering: f64,
}

/// Metric names accepted by [`top_k`] and the per-node series lookup.
pub const METRIC_NAMES: [&str; 9] = [
    "degree",
    "in_degree",
    "out_degree",
    "weighted_degree",
    "weighted_in",
    "weighted_out",
    "betweenness",
    "closeness",
    "clustering",
];

impl NodeMetrics {
    /// Value of a named metric as a float, `None` for unknown names.
    pub fn value(&self, metric: &str) -> Option<f64> {
        Some(match metric {
            "degree" => self.degree as f64,
            "in_degree" => self.in_degree as f64,
            "out_degree" => self.out_degree as f64,
            "weighted_degree" => self.weighted_degree as f64,
            "weighted_in" => self.weighted_in as f64,
            "weighted_out" => self.weighted_out as f64,
            "betweenness" => self.betweenness,
            "closeness" => self.closeness,
            "clustering" => self.clustering,
            _ => return None,
        })
    }
}

/// Network-level summary: one row of the temporal table, minus the year.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkSummary {
    pub node_count: usize,
    pub edge_count: usize,
    pub density: f64,
    /// `|E| / n`, the network-level average (distinct from mean in+out).
    pub avg_degree: f64,
    /// Total transfer weight divided by the node count.
    pub avg_weighted_degree: f64,
    pub apl: f64,
    pub diameter: u32,
    /// Average clustering coefficient over nodes of undirected degree >= 2.
    pub acc: f64,
    pub wcc_count: usize,
    pub scc_count: usize,
    /// Filled by the community module; `None` until then.
    pub modularity: Option<f64>,
}

/// Exact degree frequency table for one metric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeHistogram {
    pub metric: String,
    pub counts: BTreeMap<u64, usize>,
}

/// Which degree the histogram tabulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeKind {
    Plain,
    Weighted,
}

/// Degree and weighted-degree counts per node; centrality fields stay zero.
pub fn degrees(g: &DeptGraph) -> Vec<NodeMetrics> {
    (0..g.node_count())
        .map(|v| {
            let in_degree = g.in_edges(v).len();
            let out_degree = g.out_edges(v).len();
            let weighted_in: u64 = g.in_edges(v).iter().map(|&(_, w)| w).sum();
            let weighted_out: u64 = g.out_edges(v).iter().map(|&(_, w)| w).sum();
            NodeMetrics {
                degree: in_degree + out_degree,
                in_degree,
                out_degree,
                weighted_degree: weighted_in + weighted_out,
                weighted_in,
                weighted_out,
                ..NodeMetrics::default()
            }
        })
        .collect()
}

/// Frequency table of (weighted) degree values; counts sum to `n`.
pub fn degree_histogram(g: &DeptGraph, which: DegreeKind) -> DegreeHistogram {
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for m in degrees(g) {
        let value = match which {
            DegreeKind::Plain => m.degree as u64,
            DegreeKind::Weighted => m.weighted_degree,
        };
        *counts.entry(value).or_insert(0) += 1;
    }
    DegreeHistogram {
        metric: match which {
            DegreeKind::Plain => "degree".to_string(),
            DegreeKind::Weighted => "weighted_degree".to_string(),
        },
        counts,
    }
}

/// Unnormalized directed betweenness over hop-shortest paths, by the
/// Brandes accumulation scheme: per-source BFS, then dependency
/// back-propagation `delta(v) += sigma(v)/sigma(w) * (1 + delta(w))`.
/// Sources are processed in ascending id order so accumulation is
/// bitwise deterministic.
pub fn betweenness(g: &DeptGraph) -> Vec<f64> {
    let n = g.node_count();
    let mut centrality = vec![0.0f64; n];
    let mut queue = alloc::collections::VecDeque::new();
    for s in 0..n {
        let mut stack: Vec<usize> = Vec::with_capacity(n);
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut sigma = vec![0.0f64; n];
        let mut dist = vec![u32::MAX; n];
        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &(w, _) in g.out_edges(v) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        let mut delta = vec![0.0f64; n];
        while let Some(w) = stack.pop() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                centrality[w] += delta[w];
            }
        }
    }
    centrality
}

/// Reachable-set-normalized out-closeness in `[0, 1]`.
pub fn closeness(g: &DeptGraph) -> Vec<f64> {
    let n = g.node_count();
    (0..n)
        .map(|v| {
            let mut reachable = 0u64;
            let mut total = 0u64;
            for (u, d) in g.hop_distances_from(v).into_iter().enumerate() {
                if u == v {
                    continue;
                }
                if let Some(d) = d {
                    reachable += 1;
                    total += u64::from(d);
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

/// Per-node local clustering on the undirected view, plus the average
/// over nodes with at least two neighbors (0.0 when no node qualifies).
pub struct ClusteringScores {
    pub per_node: Vec<f64>,
    pub average: f64,
}

pub fn clustering(g: &DeptGraph) -> ClusteringScores {
    let neighbors = g.undirected_neighbors();
    let n = g.node_count();
    let adjacent = |a: usize, b: usize| neighbors[a].binary_search(&b).is_ok();
    let mut per_node = vec![0.0f64; n];
    let mut sum = 0.0f64;
    let mut included = 0usize;
    for v in 0..n {
        let k = neighbors[v].len();
        if k < 2 {
            continue;
        }
        let mut links = 0usize;
        for i in 0..k {
            for j in (i + 1)..k {
                if adjacent(neighbors[v][i], neighbors[v][j]) {
                    links += 1;
                }
            }
        }
        per_node[v] = links as f64 / (k * (k - 1) / 2) as f64;
        sum += per_node[v];
        included += 1;
    }
    let average = if included == 0 { 0.0 } else { sum / included as f64 };
    ClusteringScores { per_node, average }
}

/// All per-node metrics combined: degrees, betweenness, closeness,
/// clustering.
pub fn node_metrics(g: &DeptGraph) -> Vec<NodeMetrics> {
    let mut all = degrees(g);
    let bc = betweenness(g);
    let cc = closeness(g);
    let cl = clustering(g);
    for (v, m) in all.iter_mut().enumerate() {
        m.betweenness = bc[v];
        m.closeness = cc[v];
        m.clustering = cl.per_node[v];
    }
    all
}

/// Top `k` nodes by a named metric, descending, ties broken by label.
pub fn top_k(
    g: &DeptGraph,
    metrics: &[NodeMetrics],
    metric: &str,
    k: usize,
) -> Result<Vec<(String, f64)>, MetricsError> {
    if !METRIC_NAMES.contains(&metric) {
        return Err(MetricsError::UnknownMetric(metric.to_string()));
    }
    let mut rows: Vec<(String, f64)> = metrics
        .iter()
        .enumerate()
        .map(|(v, m)| {
            (
                g.label(v).to_string(),
                m.value(metric).expect("metric name checked above"),
            )
        })
        .collect();
    rows.sort_by(|a, b| {
        b.1.partial_cmp(&a.1)
            .expect("metric values are finite")
            .then_with(|| a.0.cmp(&b.0))
    });
    rows.truncate(k);
    Ok(rows)
}

/// Fills every network-level field except modularity.
pub fn summarize(g: &DeptGraph) -> Result<NetworkSummary, MetricsError> {
    let n = g.node_count();
    let density = g.density()?;
    let (apl, diameter) = g.apl_and_diameter()?;
    let acc = clustering(g).average;
    Ok(NetworkSummary {
        node_count: n,
        edge_count: g.edge_count(),
        density,
        avg_degree: g.edge_count() as f64 / n as f64,
        avg_weighted_degree: g.total_weight() as f64 / n as f64,
        apl,
        diameter,
        acc,
        wcc_count: g.weakly_connected_components().len(),
        scc_count: g.strongly_connected_components().len(),
        modularity: None,
    })
}
