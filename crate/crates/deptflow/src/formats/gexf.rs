//! GEXF 1.2 export: directed weighted edges, optional viz positions and a
//! `community` node attribute. Element order is fixed — nodes by id,
//! edges by (source, target) — so output is byte-stable.

use std::io::Write;

use deptflow_core::community::Partition;
use deptflow_core::graph::DeptGraph;

use super::{xml_escape, FormatError};

pub fn write_gexf<W: Write>(
    mut w: W,
    graph: &DeptGraph,
    coords: Option<&[(f64, f64)]>,
    partition: Option<&Partition>,
) -> Result<(), FormatError> {
    if let Some(c) = coords {
        if c.len() != graph.node_count() {
            let missing = graph.labels().get(c.len()).cloned().unwrap_or_default();
            return Err(FormatError::MissingCoordinate(missing));
        }
    }
    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        w,
        r#"<gexf xmlns="http://www.gexf.net/1.2draft" xmlns:viz="http://www.gexf.net/1.2draft/viz" version="1.2">"#
    )?;
    writeln!(w, r#"  <graph defaultedgetype="directed">"#)?;
    if partition.is_some() {
        writeln!(w, r#"    <attributes class="node">"#)?;
        writeln!(
            w,
            r#"      <attribute id="0" title="community" type="integer"/>"#
        )?;
        writeln!(w, r#"    </attributes>"#)?;
    }
    writeln!(w, r#"    <nodes>"#)?;
    for (id, label) in graph.labels().iter().enumerate() {
        let label = xml_escape(label);
        let has_body = partition.is_some() || coords.is_some();
        if !has_body {
            writeln!(w, r#"      <node id="{id}" label="{label}"/>"#)?;
            continue;
        }
        writeln!(w, r#"      <node id="{id}" label="{label}">"#)?;
        if let Some(p) = partition {
            writeln!(
                w,
                r#"        <attvalues><attvalue for="0" value="{}"/></attvalues>"#,
                p.assignment[id]
            )?;
        }
        if let Some(c) = coords {
            writeln!(
                w,
                r#"        <viz:position x="{:.3}" y="{:.3}" z="0.0"/>"#,
                c[id].0, c[id].1
            )?;
        }
        writeln!(w, r#"      </node>"#)?;
    }
    writeln!(w, r#"    </nodes>"#)?;
    writeln!(w, r#"    <edges>"#)?;
    for (edge_id, (source, target, weight)) in graph.edges().enumerate() {
        writeln!(
            w,
            r#"      <edge id="{edge_id}" source="{source}" target="{target}" weight="{weight}"/>"#
        )?;
    }
    writeln!(w, r#"    </edges>"#)?;
    writeln!(w, r#"  </graph>"#)?;
    writeln!(w, r#"</gexf>"#)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(graph: &DeptGraph) -> String {
        let mut buffer = Vec::new();
        write_gexf(&mut buffer, graph, None, None).unwrap();
        String::from_utf8(buffer).unwrap()
    }

    #[test]
    fn minimal_document_shape() {
        let g = DeptGraph::from_transfers([("A", "B"), ("A", "B")]).unwrap();
        let text = render(&g);
        assert_eq!(text.matches("<node ").count(), 2);
        assert_eq!(text.matches("<edge ").count(), 1);
        assert!(text.contains(r#"weight="2""#));
        assert!(text.contains(r#"defaultedgetype="directed""#));
    }

    #[test]
    fn empty_graph_is_valid() {
        let g = DeptGraph::from_transfers(std::iter::empty()).unwrap();
        let text = render(&g);
        assert!(text.contains("<nodes>"));
        assert!(text.contains("<edges>"));
        assert_eq!(text.matches("<node ").count(), 0);
    }

    #[test]
    fn labels_are_escaped() {
        let g = DeptGraph::from_transfers([("A&B <Lab>", "C\"D'")]).unwrap();
        let text = render(&g);
        assert!(text.contains("A&amp;B &lt;Lab&gt;"));
        assert!(text.contains("C&quot;D&apos;"));
    }

    #[test]
    fn output_is_deterministic() {
        let g = DeptGraph::from_transfers([("A", "B"), ("B", "C")]).unwrap();
        assert_eq!(render(&g), render(&g));
    }
}
