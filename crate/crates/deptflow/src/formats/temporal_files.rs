//! `temporal.json` (table + correlation matrix) and `temporal.csv` (one
//! row per window, columns in the summary-table order).

use std::io::{Read, Write};

use deptflow_core::temporal::{CorrelationMatrix, TemporalRow, TemporalTable};
use serde::{Deserialize, Serialize};

use super::FormatError;

pub const CSV_HEADER: [&str; 12] = [
    "Year",
    "Weakly_Connected",
    "Strongly_Connected",
    "APL",
    "ACC",
    "Modularity",
    "Node",
    "Edge",
    "Density",
    "Diameter",
    "Ave_Degree",
    "Ave_Weighted_degree",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowDoc {
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

impl From<&TemporalRow> for RowDoc {
    fn from(r: &TemporalRow) -> Self {
        RowDoc {
            year: r.year,
            wcc_count: r.wcc_count,
            scc_count: r.scc_count,
            apl: r.apl,
            acc: r.acc,
            modularity: r.modularity,
            nodes: r.nodes,
            edges: r.edges,
            density: r.density,
            diameter: r.diameter,
            avg_degree: r.avg_degree,
            avg_weighted_degree: r.avg_weighted_degree,
        }
    }
}

impl From<RowDoc> for TemporalRow {
    fn from(r: RowDoc) -> Self {
        TemporalRow {
            year: r.year,
            wcc_count: r.wcc_count,
            scc_count: r.scc_count,
            apl: r.apl,
            acc: r.acc,
            modularity: r.modularity,
            nodes: r.nodes,
            edges: r.edges,
            density: r.density,
            diameter: r.diameter,
            avg_degree: r.avg_degree,
            avg_weighted_degree: r.avg_weighted_degree,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub metrics: Vec<String>,
    pub cells: Vec<Vec<Option<f64>>>,
    pub degenerate: Vec<String>,
}

impl From<&CorrelationMatrix> for MatrixDoc {
    fn from(m: &CorrelationMatrix) -> Self {
        MatrixDoc {
            metrics: m.metrics.clone(),
            cells: m.cells.clone(),
            degenerate: m.degenerate.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TemporalDoc {
    pub table: Vec<RowDoc>,
    /// Absent when there are not enough windows to correlate.
    pub matrix: Option<MatrixDoc>,
}

pub fn build_doc(table: &TemporalTable, matrix: Option<&CorrelationMatrix>) -> TemporalDoc {
    TemporalDoc {
        table: table.rows.iter().map(RowDoc::from).collect(),
        matrix: matrix.map(MatrixDoc::from),
    }
}

pub fn write_temporal_json<W: Write>(mut writer: W, doc: &TemporalDoc) -> Result<(), FormatError> {
    serde_json::to_writer_pretty(&mut writer, doc)?;
    writer.write_all(b"\n")?;
    Ok(())
}

pub fn read_temporal_json<R: Read>(reader: R) -> Result<TemporalDoc, FormatError> {
    Ok(serde_json::from_reader(reader)?)
}

pub fn write_temporal_csv<W: Write>(writer: W, table: &TemporalTable) -> Result<(), FormatError> {
    let mut csv_writer = csv::Writer::from_writer(writer);
    csv_writer.write_record(CSV_HEADER)?;
    for row in &table.rows {
        csv_writer.write_record([
            row.year.to_string(),
            row.wcc_count.to_string(),
            row.scc_count.to_string(),
            row.apl.to_string(),
            row.acc.to_string(),
            row.modularity.to_string(),
            row.nodes.to_string(),
            row.edges.to_string(),
            row.density.to_string(),
            row.diameter.to_string(),
            row.avg_degree.to_string(),
            row.avg_weighted_degree.to_string(),
        ])?;
    }
    csv_writer.flush()?;
    Ok(())
}

pub fn read_temporal_csv<R: Read>(reader: R) -> Result<TemporalTable, FormatError> {
    let mut csv_reader = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
    let parse = |s: &str| -> Result<f64, FormatError> {
        s.parse()
            .map_err(|_| FormatError::Invalid(format!("bad number `{s}`")))
    };
    let mut rows = Vec::new();
    for record in csv_reader.records() {
        let record = record?;
        if record.len() != CSV_HEADER.len() {
            return Err(FormatError::Invalid(format!(
                "expected {} columns, got {}",
                CSV_HEADER.len(),
                record.len()
            )));
        }
        rows.push(TemporalRow {
            year: parse(&record[0])? as i32,
            wcc_count: parse(&record[1])? as usize,
            scc_count: parse(&record[2])? as usize,
            apl: parse(&record[3])?,
            acc: parse(&record[4])?,
            modularity: parse(&record[5])?,
            nodes: parse(&record[6])? as usize,
            edges: parse(&record[7])? as usize,
            density: parse(&record[8])?,
            diameter: parse(&record[9])? as u32,
            avg_degree: parse(&record[10])?,
            avg_weighted_degree: parse(&record[11])?,
        });
    }
    Ok(TemporalTable { rows })
}
