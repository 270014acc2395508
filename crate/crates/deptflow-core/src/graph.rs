//! Directed weighted department graph and its structural queries.
//!
//! Nodes are department labels with dense integer ids assigned in first-
//! appearance order; an edge weight counts transferred patients. The graph
//! is immutable after construction, so every query below is a pure function
//! safe to run from any number of threads.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

/// Errors from graph construction and structural queries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    /// A transfer or edge with identical endpoints; the default pipeline
    /// collapses repeated visits, so this signals a misuse upstream.
    #[error("self-loop on department `{0}`")]
    SelfLoop(String),
    /// Query needs at least two nodes.
    #[error("graph too small: {nodes} node(s)")]
    TooSmall { nodes: usize },
    /// Label not present in the graph.
    #[error("unknown department `{0}`")]
    UnknownNode(String),
    /// No ordered pair of nodes is connected by a directed path.
    #[error("no reachable ordered pair of nodes")]
    NoPaths,
    /// Node list passed to `from_parts` repeats a label.
    #[error("duplicate department label `{0}`")]
    DuplicateLabel(String),
    /// Department labels must be non-empty after trimming.
    #[error("empty department label")]
    EmptyLabel,
    /// Edge endpoint outside the node list.
    #[error("edge endpoint out of range: {src} -> {dst}")]
    EdgeOutOfRange { src: usize, dst: usize },
    /// Edge weights count patients and must be at least 1.
    #[error("zero-weight edge {src} -> {dst}")]
    ZeroWeight { src: String, dst: String },
}

/// Directed weighted graph of departments.
///
/// Invariants: label/id mapping is a bijection, ids are dense `0..n`,
/// at most one edge per ordered pair (weights aggregate), weights >= 1,
/// no self-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeptGraph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    out: Vec<Vec<(usize, u64)>>,
    inc: Vec<Vec<(usize, u64)>>,
    edge_count: usize,
    total_weight: u64,
}

impl DeptGraph {
    /// Builds a graph by counting ordered transfer pairs.
    ///
    /// Node ids follow first appearance across all pairs (source before
    /// destination); the weight of `u -> v` is the multiplicity of the pair.
    pub fn from_transfers<'a, I>(pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut labels: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut weights: BTreeMap<(usize, usize), u64> = BTreeMap::new();

        let mut intern = |label: &str, labels: &mut Vec<String>| -> Result<usize, GraphError> {
            let trimmed = label.trim();
            if trimmed.is_empty() {
                return Err(GraphError::EmptyLabel);
            }
            if let Some(&id) = index.get(trimmed) {
                return Ok(id);
            }
            let id = labels.len();
            labels.push(trimmed.to_string());
            index.insert(trimmed.to_string(), id);
            Ok(id)
        };

        for (src, dst) in pairs {
            let s = intern(src, &mut labels)?;
            let d = intern(dst, &mut labels)?;
            if s == d {
                return Err(GraphError::SelfLoop(labels[s].clone()));
            }
            *weights.entry((s, d)).or_insert(0) += 1;
        }

        Ok(Self::assemble(labels, index, weights))
    }

    /// Builds a graph from an explicit node list and weighted edges.
    ///
    /// Keeps isolated nodes, aggregates duplicate `(src, dst)` pairs, and
    /// enforces the `DeptGraph` invariants. This is the constructor behind
    /// the JSON graph reader and the threshold rebuilds.
    pub fn from_parts<I>(labels: Vec<String>, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut index = BTreeMap::new();
        for (id, label) in labels.iter().enumerate() {
            if label.trim().is_empty() {
                return Err(GraphError::EmptyLabel);
            }
            if index.insert(label.clone(), id).is_some() {
                return Err(GraphError::DuplicateLabel(label.clone()));
            }
        }

        let n = labels.len();
        let mut weights: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (src, dst, w) in edges {
            if src >= n || dst >= n {
                return Err(GraphError::EdgeOutOfRange { src, dst });
            }
            if src == dst {
                return Err(GraphError::SelfLoop(labels[src].clone()));
            }
            if w == 0 {
                return Err(GraphError::ZeroWeight {
                    src: labels[src].clone(),
                    dst: labels[dst].clone(),
                });
            }
            *weights.entry((src, dst)).or_insert(0) += w;
        }

        Ok(Self::assemble(labels, index, weights))
    }

    fn assemble(
        labels: Vec<String>,
        index: BTreeMap<String, usize>,
        weights: BTreeMap<(usize, usize), u64>,
    ) -> Self {
        let n = labels.len();
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        let mut total_weight = 0u64;
        let edge_count = weights.len();
        for (&(s, d), &w) in &weights {
            out[s].push((d, w));
            inc[d].push((s, w));
            total_weight += w;
        }
        for nbrs in &mut inc {
            nbrs.sort_unstable();
        }
        DeptGraph {
            labels,
            index,
            out,
            inc,
            edge_count,
            total_weight,
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sum of all edge weights, i.e. the total number of transfers.
    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    pub fn node_id(&self, label: &str) -> Option<usize> {
        self.index.get(label.trim()).copied()
    }

    /// Outgoing `(dst, weight)` pairs, sorted by destination id.
    pub fn out_edges(&self, id: usize) -> &[(usize, u64)] {
        &self.out[id]
    }

    /// Incoming `(src, weight)` pairs, sorted by source id.
    pub fn in_edges(&self, id: usize) -> &[(usize, u64)] {
        &self.inc[id]
    }

    /// All edges as `(src, dst, weight)`, ordered by `(src, dst)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(s, nbrs)| nbrs.iter().map(move |&(d, w)| (s, d, w)))
    }

    /// Directed simple-graph density `|E| / (n * (n - 1))`.
    pub fn density(&self) -> Result<f64, GraphError> {
        let n = self.node_count();
        if n < 2 {
            return Err(GraphError::TooSmall { nodes: n });
        }
        Ok(self.edge_count as f64 / (n as f64 * (n - 1) as f64))
    }

    /// Undirected neighbor ids per node (no weights, no duplicates).
    pub(crate) fn undirected_neighbors(&self) -> Vec<Vec<usize>> {
        let n = self.node_count();
        let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (s, d, _) in self.edges() {
            nbrs[s].push(d);
            nbrs[d].push(s);
        }
        for list in &mut nbrs {
            list.sort_unstable();
            list.dedup();
        }
        nbrs
    }

    /// Connected components of the undirected view, each sorted by id,
    /// ordered by decreasing size then smallest contained id.
    pub fn weakly_connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.node_count();
        let undirected = self.undirected_neighbors();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            let mut component = Vec::new();
            let mut queue = VecDeque::new();
            seen[root] = true;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                component.push(v);
                for &w in &undirected[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        sort_components(&mut components);
        components
    }

    /// Maximal sets of mutually reachable nodes (Tarjan, iterative),
    /// singletons included, ordered like the weak components.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.node_count();
        const UNVISITED: usize = usize::MAX;
        let mut order = vec![UNVISITED; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<usize> = Vec::new();
        let mut components: Vec<Vec<usize>> = Vec::new();
        let mut counter = 0usize;
        // Explicit DFS frames of (node, next out-edge index).
        let mut frames: Vec<(usize, usize)> = Vec::new();

        for root in 0..n {
            if order[root] != UNVISITED {
                continue;
            }
            frames.push((root, 0));
            while let Some(frame) = frames.last_mut() {
                let (v, cursor) = *frame;
                if cursor == 0 {
                    order[v] = counter;
                    low[v] = counter;
                    counter += 1;
                    stack.push(v);
                    on_stack[v] = true;
                }
                if cursor < self.out[v].len() {
                    frame.1 += 1;
                    let w = self.out[v][cursor].0;
                    if order[w] == UNVISITED {
                        frames.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(order[w]);
                    }
                } else {
                    frames.pop();
                    if let Some(parent) = frames.last() {
                        let p = parent.0;
                        low[p] = low[p].min(low[v]);
                    }
                    if low[v] == order[v] {
                        let mut component = Vec::new();
                        while let Some(w) = stack.pop() {
                            on_stack[w] = false;
                            component.push(w);
                            if w == v {
                                break;
                            }
                        }
                        component.sort_unstable();
                        components.push(component);
                    }
                }
            }
        }
        sort_components(&mut components);
        components
    }

    /// Directed hop distances from `src`; `None` marks unreachable nodes.
    pub fn hop_distances_from(&self, src: usize) -> Vec<Option<u32>> {
        let n = self.node_count();
        let mut dist = vec![None; n];
        dist[src] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].expect("queued node has a distance");
            for &(w, _) in &self.out[v] {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Hop distances from a department by label; unreachable nodes are
    /// absent from the result.
    pub fn shortest_paths(&self, src: &str) -> Result<BTreeMap<String, u32>, GraphError> {
        let id = self
            .node_id(src)
            .ok_or_else(|| GraphError::UnknownNode(src.trim().to_string()))?;
        let dist = self.hop_distances_from(id);
        Ok(dist
            .into_iter()
            .enumerate()
            .filter_map(|(v, d)| d.map(|d| (self.labels[v].clone(), d)))
            .collect())
    }

    /// Mean and maximum directed hop distance over reachable ordered pairs.
    pub fn apl_and_diameter(&self) -> Result<(f64, u32), GraphError> {
        let n = self.node_count();
        let mut sum = 0u64;
        let mut pairs = 0u64;
        let mut diameter = 0u32;
        for src in 0..n {
            for (dst, d) in self.hop_distances_from(src).into_iter().enumerate() {
                if dst == src {
                    continue;
                }
                if let Some(d) = d {
                    sum += u64::from(d);
                    pairs += 1;
                    diameter = diameter.max(d);
                }
            }
        }
        if pairs == 0 {
            return Err(GraphError::NoPaths);
        }
        Ok((sum as f64 / pairs as f64, diameter))
    }
}

fn sort_components(components: &mut [Vec<usize>]) {
    components.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a[0].cmp(&b[0])));
}
