//! `metrics.json`: network summary, per-node metric rows, and the ranked
//! top tables.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use deptflow_core::graph::DeptGraph;
use deptflow_core::metrics::{NetworkSummary, NodeMetrics};
use serde::{Deserialize, Serialize};

use super::FormatError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryDoc {
    pub node_count: usize,
    pub edge_count: usize,
    pub density: f64,
    pub avg_degree: f64,
    pub avg_weighted_degree: f64,
    pub apl: f64,
    pub diameter: u32,
    pub acc: f64,
    pub wcc_count: usize,
    pub scc_count: usize,
    pub modularity: Option<f64>,
}

impl From<&NetworkSummary> for SummaryDoc {
    fn from(s: &NetworkSummary) -> Self {
        SummaryDoc {
            node_count: s.node_count,
            edge_count: s.edge_count,
            density: s.density,
            avg_degree: s.avg_degree,
            avg_weighted_degree: s.avg_weighted_degree,
            apl: s.apl,
            diameter: s.diameter,
            acc: s.acc,
            wcc_count: s.wcc_count,
            scc_count: s.scc_count,
            modularity: s.modularity,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeRow {
    pub label: String,
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

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopEntry {
    pub label: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsDoc {
    pub summary: SummaryDoc,
    pub nodes: Vec<NodeRow>,
    pub top: BTreeMap<String, Vec<TopEntry>>,
}

pub fn build_doc(
    graph: &DeptGraph,
    summary: &NetworkSummary,
    nodes: &[NodeMetrics],
    top: &BTreeMap<String, Vec<(String, f64)>>,
) -> MetricsDoc {
    MetricsDoc {
        summary: summary.into(),
        nodes: nodes
            .iter()
            .enumerate()
            .map(|(id, m)| NodeRow {
                label: graph.label(id).to_string(),
                degree: m.degree,
                in_degree: m.in_degree,
                out_degree: m.out_degree,
                weighted_degree: m.weighted_degree,
                weighted_in: m.weighted_in,
                weighted_out: m.weighted_out,
                betweenness: m.betweenness,
                closeness: m.closeness,
                clustering: m.clustering,
            })
            .collect(),
        top: top
            .iter()
            .map(|(metric, rows)| {
                (
                    metric.clone(),
                    rows.iter()
                        .map(|(label, value)| TopEntry {
                            label: label.clone(),
                            value: *value,
                        })
                        .collect(),
                )
            })
            .collect(),
    }
}

pub fn write_metrics<W: Write>(mut writer: W, doc: &MetricsDoc) -> Result<(), FormatError> {
    serde_json::to_writer_pretty(&mut writer, doc)?;
    writer.write_all(b"\n")?;
    Ok(())
}

pub fn read_metrics<R: Read>(reader: R) -> Result<MetricsDoc, FormatError> {
    Ok(serde_json::from_reader(reader)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use deptflow_core::metrics::{node_metrics, summarize, top_k};

    #[test]
    fn metrics_document_round_trips() {
        let g = DeptGraph::from_transfers([("A", "B"), ("B", "C"), ("C", "A")]).unwrap();
        let summary = summarize(&g).unwrap();
        let nodes = node_metrics(&g);
        let mut top = BTreeMap::new();
        top.insert(
            "betweenness".to_string(),
            top_k(&g, &nodes, "betweenness", 2).unwrap(),
        );
        let doc = build_doc(&g, &summary, &nodes, &top);
        let mut buffer = Vec::new();
        write_metrics(&mut buffer, &doc).unwrap();
        let back = read_metrics(buffer.as_slice()).unwrap();
        assert_eq!(back, doc);
    }
}
