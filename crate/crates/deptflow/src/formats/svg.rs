//! SVG 1.1 rendering of a laid-out graph: one line per edge (width grows
//! with log weight), one circle per node (radius grows with the square
//! root of weighted degree), fills keyed by community when a partition is
//! given. Element order is node id / edge (source, target), so a re-render
//! of identical inputs is byte-identical.

use std::io::Write;

use deptflow_core::community::Partition;
use deptflow_core::graph::DeptGraph;
use deptflow_core::metrics::degrees;

use super::{xml_escape, FormatError};

const PALETTE: [&str; 12] = [
    "#7b4fa6", // violet
    "#59a14f", // green
    "#4e9fc7", // azure
    "#f28e2b", // orange
    "#2e6930", // forest
    "#e15759", "#b07aa1", "#edc948", "#76b7b2", "#ff9da7", "#9c755f", "#bab0ac",
];

const DEFAULT_FILL: &str = "#69b3a2";

fn community_color(id: usize) -> String {
    if id < PALETTE.len() {
        PALETTE[id].to_string()
    } else {
        format!("hsl({}, 65%, 55%)", (id * 137) % 360)
    }
}

pub fn render_svg<W: Write>(
    mut w: W,
    graph: &DeptGraph,
    coords: &[(f64, f64)],
    partition: Option<&Partition>,
) -> Result<(), FormatError> {
    if coords.len() != graph.node_count() {
        let missing = graph
            .labels()
            .get(coords.len())
            .cloned()
            .unwrap_or_default();
        return Err(FormatError::MissingCoordinate(missing));
    }

    let metrics = degrees(graph);
    let radii: Vec<f64> = metrics
        .iter()
        .map(|m| 2.0 + 1.5 * (m.weighted_degree as f64).sqrt())
        .collect();

    let margin = radii.iter().copied().fold(0.0f64, f64::max) + 10.0;
    let (mut min_x, mut min_y, mut max_x, mut max_y) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for &(x, y) in coords {
        min_x = min_x.min(x);
        min_y = min_y.min(y);
        max_x = max_x.max(x);
        max_y = max_y.max(y);
    }

    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{:.3} {:.3} {:.3} {:.3}">"#,
        min_x - margin,
        min_y - margin,
        (max_x - min_x) + 2.0 * margin,
        (max_y - min_y) + 2.0 * margin
    )?;
    for (source, target, weight) in graph.edges() {
        let (x1, y1) = coords[source];
        let (x2, y2) = coords[target];
        let width = 0.5 * (1.0 + (1.0 + weight as f64).ln());
        writeln!(
            w,
            r##"  <line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#999999" stroke-opacity="0.6" stroke-width="{width:.3}"/>"##
        )?;
    }
    for (id, &(x, y)) in coords.iter().enumerate() {
        let fill = match partition {
            Some(p) => community_color(p.assignment[id]),
            None => DEFAULT_FILL.to_string(),
        };
        writeln!(
            w,
            r##"  <circle cx="{x:.3}" cy="{y:.3}" r="{:.3}" fill="{fill}" stroke="#333333" stroke-width="0.5"><title>{}</title></circle>"##,
            radii[id],
            xml_escape(graph.label(id))
        )?;
    }
    writeln!(w, "</svg>")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(graph: &DeptGraph, partition: Option<&Partition>) -> String {
        let coords: Vec<(f64, f64)> = (0..graph.node_count())
            .map(|i| (i as f64 * 10.0, (i % 3) as f64 * 5.0))
            .collect();
        let mut buffer = Vec::new();
        render_svg(&mut buffer, graph, &coords, partition).unwrap();
        String::from_utf8(buffer).unwrap()
    }

    #[test]
    fn one_circle_per_node_one_line_per_edge() {
        let g = DeptGraph::from_transfers([("A", "B"), ("B", "C")]).unwrap();
        let text = render(&g, None);
        assert_eq!(text.matches("<circle ").count(), 3);
        assert_eq!(text.matches("<line ").count(), 2);
    }

    #[test]
    fn five_communities_get_five_distinct_fills() {
        let pairs: Vec<(String, String)> = (0..10)
            .map(|i| (format!("N{i}"), format!("N{}", (i + 1) % 10)))
            .collect();
        let g =
            DeptGraph::from_transfers(pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())))
                .unwrap();
        let partition = Partition {
            assignment: (0..10).map(|i| i % 5).collect(),
            q: 0.0,
            seed: 0,
            resolution: 1.0,
        };
        let text = render(&g, Some(&partition));
        let mut fills: Vec<&str> = text
            .match_indices("fill=\"")
            .map(|(at, _)| {
                let rest = &text[at + 6..];
                &rest[..rest.find('"').unwrap()]
            })
            .collect();
        fills.sort();
        fills.dedup();
        assert_eq!(fills.len(), 5);
    }

    #[test]
    fn rerender_is_byte_identical() {
        let g = DeptGraph::from_transfers([("A", "B"), ("B", "C"), ("C", "A")]).unwrap();
        assert_eq!(render(&g, None), render(&g, None));
    }

    #[test]
    fn missing_coordinates_are_an_error() {
        let g = DeptGraph::from_transfers([("A", "B")]).unwrap();
        let mut buffer = Vec::new();
        match render_svg(&mut buffer, &g, &[(0.0, 0.0)], None).unwrap_err() {
            FormatError::MissingCoordinate(label) => assert_eq!(label, "B"),
            other => panic!("unexpected: {other}"),
        }
    }
}
