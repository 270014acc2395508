//! `coords.json`: label-keyed plane positions, the bridge between the
//! layout stage and the export stage.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use deptflow_core::graph::DeptGraph;
use deptflow_core::layout::Coordinates;

use super::FormatError;

pub type CoordsDoc = BTreeMap<String, (f64, f64)>;

pub fn build_doc(graph: &DeptGraph, coords: &[(f64, f64)]) -> Result<CoordsDoc, FormatError> {
    if coords.len() != graph.node_count() {
        let missing = graph
            .labels()
            .get(coords.len())
            .cloned()
            .unwrap_or_default();
        return Err(FormatError::MissingCoordinate(missing));
    }
    Ok(graph
        .labels()
        .iter()
        .zip(coords)
        .map(|(label, &xy)| (label.clone(), xy))
        .collect())
}

pub fn write_coords<W: Write>(mut writer: W, doc: &CoordsDoc) -> Result<(), FormatError> {
    serde_json::to_writer_pretty(&mut writer, doc)?;
    writer.write_all(b"\n")?;
    Ok(())
}

pub fn read_coords<R: Read>(reader: R) -> Result<CoordsDoc, FormatError> {
    Ok(serde_json::from_reader(reader)?)
}

/// Positions in the graph's node-id order; every node must be covered.
pub fn coords_for_graph(doc: &CoordsDoc, graph: &DeptGraph) -> Result<Coordinates, FormatError> {
    graph
        .labels()
        .iter()
        .map(|label| {
            doc.get(label)
                .copied()
                .ok_or_else(|| FormatError::MissingCoordinate(label.clone()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coords_round_trip_through_label_map() {
        let g = DeptGraph::from_transfers([("B", "A"), ("A", "C")]).unwrap();
        let coords = vec![(1.0, 2.0), (-0.5, 0.25), (3.0, -4.0)];
        let doc = build_doc(&g, &coords).unwrap();
        let mut buffer = Vec::new();
        write_coords(&mut buffer, &doc).unwrap();
        let back = read_coords(buffer.as_slice()).unwrap();
        assert_eq!(coords_for_graph(&back, &g).unwrap(), coords);
    }

    #[test]
    fn missing_node_is_reported_by_label() {
        let g = DeptGraph::from_transfers([("A", "B")]).unwrap();
        let doc: CoordsDoc = [("A".to_string(), (0.0, 0.0))].into_iter().collect();
        match coords_for_graph(&doc, &g).unwrap_err() {
            FormatError::MissingCoordinate(label) => assert_eq!(label, "B"),
            other => panic!("unexpected: {other}"),
        }
    }
}
