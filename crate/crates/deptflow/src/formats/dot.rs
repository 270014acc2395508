//! Graphviz DOT export with the transfer count as the edge label.

use std::io::Write;

use deptflow_core::graph::DeptGraph;

use super::FormatError;

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn write_dot<W: Write>(mut w: W, graph: &DeptGraph) -> Result<(), FormatError> {
    writeln!(w, "digraph transfers {{")?;
    for label in graph.labels() {
        writeln!(w, "  {};", quote(label))?;
    }
    for (source, target, weight) in graph.edges() {
        writeln!(
            w,
            "  {} -> {} [label={weight}];",
            quote(graph.label(source)),
            quote(graph.label(target))
        )?;
    }
    writeln!(w, "}}")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_contains_weight_labels_and_quoted_names() {
        let g = DeptGraph::from_transfers([
            ("Cardiology One", "ICU"),
            ("Cardiology One", "ICU"),
        ])
        .unwrap();
        let mut buffer = Vec::new();
        write_dot(&mut buffer, &g).unwrap();
        let text = String::from_utf8(buffer).unwrap();
        assert!(text.contains(r#""Cardiology One" -> "ICU" [label=2];"#));
        assert!(text.starts_with("digraph transfers {"));
    }
}
