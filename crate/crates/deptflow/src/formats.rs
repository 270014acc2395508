//! File formats for every pipeline stage boundary.
//!
//! Each format has a writer and a reader so artifacts can be re-consumed
//! by later stages (graphs feed metrics/communities/layout, coordinates
//! feed export, event CSVs feed ingest). Writers are deterministic:
//! identical inputs give byte-identical files.

pub mod coords_json;
pub mod dot;
pub mod events_csv;
pub mod gexf;
pub mod graph_json;
pub mod histogram_csv;
pub mod metrics_json;
pub mod partition_json;
pub mod series_csv;
pub mod svg;
pub mod temporal_files;
pub mod truth_json;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error("no coordinate for node `{0}`")]
    MissingCoordinate(String),
}

pub(crate) fn xml_escape(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for c in value.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            other => out.push(other),
        }
    }
    out
}
