//! Episode-to-network construction: the static transfer graph and the
//! calendar-year temporal graphs, with the noise thresholds applied.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use chrono::{Datelike, NaiveDateTime};

use crate::episode::Episode;
use crate::graph::{DeptGraph, GraphError};

/// How the minimum-interaction threshold is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ThresholdScope {
    /// Drop every node whose weighted degree (in + out) is below the
    /// threshold, together with its incident edges. Single pass, no
    /// cascading re-evaluation after removal.
    #[default]
    NodeWeightedDegree,
    /// Drop every edge below the threshold, then drop nodes left without
    /// any incident edge.
    EdgeWeight,
}

/// Time windowing for the temporal networks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Windowing {
    #[default]
    CalendarYear,
    None,
}

/// Thresholds and windowing for network construction.
#[derive(Debug, Clone, PartialEq)]
pub struct BuildConfig {
    /// Minimum interactions over the whole log for the static network.
    pub static_min_interactions: u64,
    /// Minimum interactions within one window for the temporal networks.
    pub window_min_interactions: u64,
    pub threshold_scope: ThresholdScope,
    pub window: Windowing,
}

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig {
            static_min_interactions: 10,
            window_min_interactions: 5,
            threshold_scope: ThresholdScope::default(),
            window: Windowing::default(),
        }
    }
}

/// Year-keyed temporal networks, ordered by year.
pub type TemporalNetworks = BTreeMap<i32, DeptGraph>;

/// One directed transfer between consecutive visits of an episode.
/// Dated by the source visit's timestamp.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer<'a> {
    pub src: &'a str,
    pub dst: &'a str,
    pub at: NaiveDateTime,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// `build_yearly` called with windowing disabled in the config.
    #[error("temporal build requested but windowing is disabled")]
    WindowingDisabled,
}

/// Consecutive visit pairs of one episode; an episode with `k` visits
/// yields `k - 1` transfers.
pub fn transfers_of(episode: &Episode) -> Vec<Transfer<'_>> {
    episode
        .visits
        .windows(2)
        .map(|pair| Transfer {
            src: &pair[0].department,
            dst: &pair[1].department,
            at: pair[0].at,
        })
        .collect()
}

/// Aggregates every transfer into one static graph, then applies the
/// static threshold in a single pass.
pub fn build_static(episodes: &[Episode], cfg: &BuildConfig) -> Result<DeptGraph, BuildError> {
    let pairs = episodes
        .iter()
        .flat_map(|e| e.visits.windows(2))
        .map(|pair| (pair[0].department.as_str(), pair[1].department.as_str()));
    let graph = DeptGraph::from_transfers(pairs)?;
    Ok(apply_threshold(
        &graph,
        cfg.static_min_interactions,
        cfg.threshold_scope,
    ))
}

/// Groups transfers by the calendar year of their source timestamp and
/// builds one thresholded graph per year present in the data.
pub fn build_yearly(episodes: &[Episode], cfg: &BuildConfig) -> Result<TemporalNetworks, BuildError> {
    if cfg.window != Windowing::CalendarYear {
        return Err(BuildError::WindowingDisabled);
    }
    let mut by_year: BTreeMap<i32, Vec<(&str, &str)>> = BTreeMap::new();
    for episode in episodes {
        for transfer in transfers_of(episode) {
            by_year
                .entry(transfer.at.year())
                .or_default()
                .push((transfer.src, transfer.dst));
        }
    }
    let mut networks = TemporalNetworks::new();
    for (year, pairs) in by_year {
        let graph = DeptGraph::from_transfers(pairs)?;
        networks.insert(
            year,
            apply_threshold(&graph, cfg.window_min_interactions, cfg.threshold_scope),
        );
    }
    Ok(networks)
}

/// One-pass threshold filter over a fixed aggregate graph.
pub fn apply_threshold(graph: &DeptGraph, min: u64, scope: ThresholdScope) -> DeptGraph {
    if min == 0 {
        return graph.clone();
    }
    let n = graph.node_count();
    match scope {
        ThresholdScope::NodeWeightedDegree => {
            let mut weighted = alloc::vec![0u64; n];
            for (s, d, w) in graph.edges() {
                weighted[s] += w;
                weighted[d] += w;
            }
            let keep: Vec<bool> = weighted.iter().map(|&w| w >= min).collect();
            rebuild(graph, &keep, |_, _, _| true)
        }
        ThresholdScope::EdgeWeight => {
            let mut incident = alloc::vec![false; n];
            for (s, d, w) in graph.edges() {
                if w >= min {
                    incident[s] = true;
                    incident[d] = true;
                }
            }
            rebuild(graph, &incident, |_, _, w| w >= min)
        }
    }
}

fn rebuild<F>(graph: &DeptGraph, keep: &[bool], keep_edge: F) -> DeptGraph
where
    F: Fn(usize, usize, u64) -> bool,
{
    let mut remap = alloc::vec![usize::MAX; keep.len()];
    let mut labels: Vec<String> = Vec::new();
    for (id, label) in graph.labels().iter().enumerate() {
        if keep[id] {
            remap[id] = labels.len();
            labels.push(label.clone());
        }
    }
    let edges = graph
        .edges()
        .filter(|&(s, d, w)| keep[s] && keep[d] && keep_edge(s, d, w))
        .map(|(s, d, w)| (remap[s], remap[d], w));
    DeptGraph::from_parts(labels, edges).expect("filtered graph preserves invariants")
}
