//! IO, file formats, configuration and the CLI for department-transfer
//! network analysis. The algorithms live in `deptflow-core`; this crate
//! moves bytes: CSV event logs in, JSON/CSV/SVG/GEXF/DOT artifacts out.

#![forbid(unsafe_code)]

pub mod cli;
pub mod config;
pub mod formats;
pub mod ingest;
