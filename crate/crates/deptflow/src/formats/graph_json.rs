//! Graph JSON: `{"nodes":[{"id","label"}],"edges":[{"source","target","weight"}]}`
//! with ids dense `0..n` in listing order.

use std::io::{Read, Write};

use deptflow_core::graph::DeptGraph;
use serde::{Deserialize, Serialize};

use super::FormatError;

#[derive(Debug, Serialize, Deserialize)]
struct NodeDoc {
    id: usize,
    label: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeDoc {
    source: usize,
    target: usize,
    weight: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphDoc {
    nodes: Vec<NodeDoc>,
    edges: Vec<EdgeDoc>,
}

pub fn write_graph<W: Write>(mut writer: W, graph: &DeptGraph) -> Result<(), FormatError> {
    let doc = GraphDoc {
        nodes: graph
            .labels()
            .iter()
            .enumerate()
            .map(|(id, label)| NodeDoc {
                id,
                label: label.clone(),
            })
            .collect(),
        edges: graph
            .edges()
            .map(|(source, target, weight)| EdgeDoc {
                source,
                target,
                weight,
            })
            .collect(),
    };
    serde_json::to_writer_pretty(&mut writer, &doc)?;
    writer.write_all(b"\n")?;
    Ok(())
}

pub fn read_graph<R: Read>(reader: R) -> Result<DeptGraph, FormatError> {
    let doc: GraphDoc = serde_json::from_reader(reader)?;
    for (position, node) in doc.nodes.iter().enumerate() {
        if node.id != position {
            return Err(FormatError::Invalid(format!(
                "node ids must be dense and in order: id {} at position {position}",
                node.id
            )));
        }
    }
    let labels: Vec<String> = doc.nodes.into_iter().map(|n| n.label).collect();
    let edges = doc.edges.into_iter().map(|e| (e.source, e.target, e.weight));
    DeptGraph::from_parts(labels, edges).map_err(|e| FormatError::Invalid(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trips() {
        let g = DeptGraph::from_transfers([("A", "B"), ("A", "B"), ("B", "C")]).unwrap();
        let mut buffer = Vec::new();
        write_graph(&mut buffer, &g).unwrap();
        let back = read_graph(buffer.as_slice()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn writer_is_deterministic() {
        let g = DeptGraph::from_transfers([("A", "B"), ("C", "A")]).unwrap();
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_graph(&mut a, &g).unwrap();
        write_graph(&mut b, &g).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn reader_rejects_sparse_ids() {
        let doc = r#"{"nodes":[{"id":0,"label":"A"},{"id":2,"label":"B"}],"edges":[]}"#;
        assert!(matches!(
            read_graph(doc.as_bytes()),
            Err(FormatError::Invalid(_))
        ));
    }

    #[test]
    fn reader_rejects_self_loops() {
        let doc = r#"{"nodes":[{"id":0,"label":"A"}],"edges":[{"source":0,"target":0,"weight":1}]}"#;
        assert!(matches!(
            read_graph(doc.as_bytes()),
            Err(FormatError::Invalid(_))
        ));
    }

    #[test]
    fn isolated_nodes_survive_the_round_trip() {
        let g = DeptGraph::from_parts(
            vec!["A".into(), "Lonely".into(), "B".into()],
            [(0, 2, 4)],
        )
        .unwrap();
        let mut buffer = Vec::new();
        write_graph(&mut buffer, &g).unwrap();
        let back = read_graph(buffer.as_slice()).unwrap();
        assert_eq!(back.node_count(), 3);
        assert_eq!(back.label(1), "Lonely");
    }
}
