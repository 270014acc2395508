//! Per-window summary table, metric time series, and Pearson correlation
//! across windows.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::build::TemporalNetworks;
use crate::community::{louvain, CommunityError, UGraph};
use crate::math;
use crate::metrics::{node_metrics, summarize, MetricsError, METRIC_NAMES};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TemporalError {
    #[error("series lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("series has no variance")]
    ZeroVariance,
    #[error("series too short: {0} point(s), need at least 2")]
    TooShort(usize),
    #[error("need at least 2 windows, got {0}")]
    TooFewWindows(usize),
    #[error("unknown metric `{0}`")]
    UnknownMetric(String),
    #[error("window {year}: {source}")]
    WindowMetrics {
        year: i32,
        source: MetricsError,
    },
    #[error("window {year}: {source}")]
    WindowCommunity {
        year: i32,
        source: CommunityError,
    },
}

/// One row of the per-window table.
#[derive(Debug, Clone, PartialEq)]
pub struct TemporalRow {
    pub year: i32,
    pub wcc_count: usize,
    pub scc_count: usize,
    pub apl: f64,
    pub acc: f64,
    pub modularity: f64,
    pub nodes: usize,
    pub edges: usize,
    pub density: f64,
    pub diameter: u32,
    pub avg_degree: f64,
    pub avg_weighted_degree: f64,
}

/// Rows sorted by year; one per window.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TemporalTable {
    pub rows: Vec<TemporalRow>,
}

/// Metric columns of the table, in presentation order.
pub const TABLE_METRICS: [&str; 11] = [
    "wcc_count",
    "scc_count",
    "apl",
    "acc",
    "modularity",
    "nodes",
    "edges",
    "density",
    "diameter",
    "avg_degree",
    "avg_weighted_degree",
];

impl TemporalRow {
    pub fn metric(&self, name: &str) -> Option<f64> {
        Some(match name {
            "wcc_count" => self.wcc_count as f64,
            "scc_count" => self.scc_count as f64,
            "apl" => self.apl,
            "acc" => self.acc,
            "modularity" => self.modularity,
            "nodes" => self.nodes as f64,
            "edges" => self.edges as f64,
            "density" => self.density,
            "diameter" => f64::from(self.diameter),
            "avg_degree" => self.avg_degree,
            "avg_weighted_degree" => self.avg_weighted_degree,
            _ => return None,
        })
    }
}

/// Summarizes every window: network metrics plus Louvain modularity, the
/// same seed reused across windows so the column is comparable.
pub fn window_summary(
    networks: &TemporalNetworks,
    seed: u64,
    resolution: f64,
) -> Result<TemporalTable, TemporalError> {
    let mut rows = Vec::with_capacity(networks.len());
    for (&year, graph) in networks {
        let summary =
            summarize(graph).map_err(|source| TemporalError::WindowMetrics { year, source })?;
        let ug = UGraph::symmetrize(graph);
        let partition = louvain(&ug, seed, resolution)
            .map_err(|source| TemporalError::WindowCommunity { year, source })?;
        rows.push(TemporalRow {
            year,
            wcc_count: summary.wcc_count,
            scc_count: summary.scc_count,
            apl: summary.apl,
            acc: summary.acc,
            modularity: partition.q,
            nodes: summary.node_count,
            edges: summary.edge_count,
            density: summary.density,
            diameter: summary.diameter,
            avg_degree: summary.avg_degree,
            avg_weighted_degree: summary.avg_weighted_degree,
        });
    }
    Ok(TemporalTable { rows })
}

/// Sample Pearson correlation of two equally long series.
pub fn pearson(a: &[f64], b: &[f64]) -> Result<f64, TemporalError> {
    if a.len() != b.len() {
        return Err(TemporalError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.len() < 2 {
        return Err(TemporalError::TooShort(a.len()));
    }
    let n = a.len() as f64;
    let mean_a = a.iter().sum::<f64>() / n;
    let mean_b = b.iter().sum::<f64>() / n;
    let all_equal = |s: &[f64]| s.iter().all(|&v| v == s[0]);
    if all_equal(a) || all_equal(b) {
        return Err(TemporalError::ZeroVariance);
    }
    let mut cov = 0.0;
    let mut var_a = 0.0;
    let mut var_b = 0.0;
    for (&x, &y) in a.iter().zip(b) {
        let dx = x - mean_a;
        let dy = y - mean_b;
        cov += dx * dy;
        var_a += dx * dx;
        var_b += dy * dy;
    }
    if var_a == 0.0 || var_b == 0.0 {
        return Err(TemporalError::ZeroVariance);
    }
    Ok(cov / (math::sqrt(var_a) * math::sqrt(var_b)))
}

/// Pairwise Pearson matrix over the table's metric columns.
///
/// Zero-variance columns are flagged as degenerate and all of their cells
/// (including the diagonal) are `None`; every other diagonal cell is
/// exactly 1 and the matrix is exactly symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    pub metrics: Vec<String>,
    pub cells: Vec<Vec<Option<f64>>>,
    pub degenerate: Vec<String>,
}

pub fn correlation_matrix(table: &TemporalTable) -> Result<CorrelationMatrix, TemporalError> {
    if table.rows.len() < 2 {
        return Err(TemporalError::TooFewWindows(table.rows.len()));
    }
    let columns: Vec<Vec<f64>> = TABLE_METRICS
        .iter()
        .map(|name| {
            table
                .rows
                .iter()
                .map(|row| row.metric(name).expect("table metric names are fixed"))
                .collect()
        })
        .collect();
    let degenerate_flags: Vec<bool> = columns
        .iter()
        .map(|col| col.iter().all(|&v| v == col[0]))
        .collect();
    let k = TABLE_METRICS.len();
    let mut cells: Vec<Vec<Option<f64>>> = alloc::vec![alloc::vec![None; k]; k];
    for i in 0..k {
        if degenerate_flags[i] {
            continue;
        }
        cells[i][i] = Some(1.0);
        for j in (i + 1)..k {
            if degenerate_flags[j] {
                continue;
            }
            let r = pearson(&columns[i], &columns[j])?;
            cells[i][j] = Some(r);
            cells[j][i] = Some(r);
        }
    }
    Ok(CorrelationMatrix {
        metrics: TABLE_METRICS.iter().map(|s| s.to_string()).collect(),
        cells,
        degenerate: TABLE_METRICS
            .iter()
            .zip(&degenerate_flags)
            .filter(|(_, &d)| d)
            .map(|(name, _)| name.to_string())
            .collect(),
    })
}

/// A per-window value sequence for one department and metric. Windows
/// where the department was thresholded out carry `None`, not zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub metric: String,
    pub points: Vec<(i32, Option<f64>)>,
}

pub fn node_metric_series(
    networks: &TemporalNetworks,
    label: &str,
    metric: &str,
) -> Result<Series, TemporalError> {
    if !METRIC_NAMES.contains(&metric) {
        return Err(TemporalError::UnknownMetric(metric.to_string()));
    }
    let mut points = Vec::with_capacity(networks.len());
    for (&year, graph) in networks {
        let value = graph.node_id(label).map(|id| {
            node_metrics(graph)[id]
                .value(metric)
                .expect("metric name checked above")
        });
        points.push((year, value));
    }
    Ok(Series {
        label: label.to_string(),
        metric: metric.to_string(),
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DeptGraph;
    use alloc::vec;

    fn ring(labels: &[&str]) -> DeptGraph {
        let pairs: Vec<(&str, &str)> = labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, labels[(i + 1) % labels.len()]))
            .collect();
        DeptGraph::from_transfers(pairs).unwrap()
    }

    #[test]
    fn pearson_exact_on_linear_series() {
        let r = pearson(&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]).unwrap();
        assert!((r - 1.0).abs() < 1e-12);
        let r = pearson(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]).unwrap();
        assert!((r + 1.0).abs() < 1e-12);
    }

    #[test]
    fn pearson_rejects_constant_series() {
        assert_eq!(
            pearson(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]).unwrap_err(),
            TemporalError::ZeroVariance
        );
    }

    #[test]
    fn pearson_rejects_mismatched_lengths() {
        assert_eq!(
            pearson(&[1.0], &[1.0, 2.0]).unwrap_err(),
            TemporalError::LengthMismatch { left: 1, right: 2 }
        );
    }

    #[test]
    fn pearson_rejects_too_short() {
        assert_eq!(pearson(&[1.0], &[2.0]).unwrap_err(), TemporalError::TooShort(1));
    }

    #[test]
    fn pearson_is_affine_invariant() {
        let a = [3.0, 1.0, 4.0, 1.0, 5.0, 9.0];
        let b = [2.0, 7.0, 1.0, 8.0, 2.0, 8.0];
        let r = pearson(&a, &b).unwrap();
        let a2: Vec<f64> = a.iter().map(|x| 3.5 * x + 11.0).collect();
        let r2 = pearson(&a2, &b).unwrap();
        assert!((r - r2).abs() < 1e-12);
        let a3: Vec<f64> = a.iter().map(|x| -2.0 * x + 1.0).collect();
        let r3 = pearson(&a3, &b).unwrap();
        assert!((r + r3).abs() < 1e-12);
    }

    fn three_year_networks() -> TemporalNetworks {
        let mut tn = TemporalNetworks::new();
        tn.insert(2010, ring(&["A", "B", "C"]));
        tn.insert(2011, ring(&["A", "B", "C", "D"]));
        tn.insert(2012, ring(&["A", "B", "C", "D", "E"]));
        tn
    }

    #[test]
    fn window_summary_has_one_row_per_year() {
        let table = window_summary(&three_year_networks(), 42, 1.0).unwrap();
        assert_eq!(table.rows.len(), 3);
        assert_eq!(table.rows[0].year, 2010);
        assert_eq!(table.rows[0].nodes, 3);
        assert_eq!(table.rows[2].nodes, 5);
    }

    #[test]
    fn window_summary_row_matches_direct_computation() {
        let tn = three_year_networks();
        let table = window_summary(&tn, 7, 1.0).unwrap();
        let direct = summarize(&tn[&2011]).unwrap();
        let row = &table.rows[1];
        assert_eq!(row.nodes, direct.node_count);
        assert_eq!(row.edges, direct.edge_count);
        assert_eq!(row.apl, direct.apl);
        assert_eq!(row.density, direct.density);
        assert_eq!(row.diameter, direct.diameter);
    }

    #[test]
    fn window_summary_reports_year_on_error() {
        let mut tn = TemporalNetworks::new();
        tn.insert(
            2015,
            DeptGraph::from_parts(vec!["A".into(), "B".into()], core::iter::empty()).unwrap(),
        );
        match window_summary(&tn, 1, 1.0).unwrap_err() {
            TemporalError::WindowMetrics { year, .. } => assert_eq!(year, 2015),
            other => panic!("unexpected error: {other:?}"),
        }
    }

    #[test]
    fn matrix_needs_two_rows() {
        let mut tn = TemporalNetworks::new();
        tn.insert(2010, ring(&["A", "B", "C"]));
        let table = window_summary(&tn, 1, 1.0).unwrap();
        assert_eq!(
            correlation_matrix(&table).unwrap_err(),
            TemporalError::TooFewWindows(1)
        );
    }

    #[test]
    fn matrix_is_symmetric_with_unit_diagonal() {
        let table = window_summary(&three_year_networks(), 13, 1.0).unwrap();
        let m = correlation_matrix(&table).unwrap();
        let k = m.metrics.len();
        for i in 0..k {
            for j in 0..k {
                assert_eq!(m.cells[i][j], m.cells[j][i]);
            }
            if !m.degenerate.contains(&m.metrics[i]) {
                assert_eq!(m.cells[i][i], Some(1.0));
            }
        }
    }

    #[test]
    fn identical_columns_correlate_to_one() {
        // nodes and edges are both 3,4,5 on rings: r must be exactly 1.
        let table = window_summary(&three_year_networks(), 13, 1.0).unwrap();
        let m = correlation_matrix(&table).unwrap();
        let nodes_idx = m.metrics.iter().position(|s| s == "nodes").unwrap();
        let edges_idx = m.metrics.iter().position(|s| s == "edges").unwrap();
        let r = m.cells[nodes_idx][edges_idx].unwrap();
        assert!((r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_columns_are_flagged_and_undefined() {
        // Rings always have diameter n-1, apl varies; wcc_count is always 1.
        let table = window_summary(&three_year_networks(), 13, 1.0).unwrap();
        let m = correlation_matrix(&table).unwrap();
        assert!(m.degenerate.contains(&"wcc_count".to_string()));
        let idx = m.metrics.iter().position(|s| s == "wcc_count").unwrap();
        assert!(m.cells[idx].iter().all(|c| c.is_none()));
        assert!(m.cells.iter().all(|row| row[idx].is_none()));
    }

    #[test]
    fn series_marks_missing_windows_absent() {
        let mut tn = TemporalNetworks::new();
        tn.insert(2010, ring(&["A", "B", "C"]));
        tn.insert(2011, ring(&["B", "C"]));
        tn.insert(2012, ring(&["A", "B", "C"]));
        let s = node_metric_series(&tn, "A", "degree").unwrap();
        assert_eq!(
            s.points,
            vec![(2010, Some(2.0)), (2011, None), (2012, Some(2.0))]
        );
    }

    #[test]
    fn series_on_constant_networks_is_constant() {
        let mut tn = TemporalNetworks::new();
        for year in 2010..2013 {
            tn.insert(year, ring(&["A", "B", "C"]));
        }
        let s = node_metric_series(&tn, "B", "betweenness").unwrap();
        assert!(s.points.iter().all(|&(_, v)| v == Some(1.0)));
    }

    #[test]
    fn series_rejects_unknown_metric() {
        let tn = three_year_networks();
        assert_eq!(
            node_metric_series(&tn, "A", "eccentricity").unwrap_err(),
            TemporalError::UnknownMetric("eccentricity".into())
        );
    }
}
