//! Per-node metric time series as two-column CSV; windows where the node
//! was thresholded out emit an empty value, not zero.

use std::io::Write;

use deptflow_core::temporal::Series;

use super::FormatError;

pub fn write_series<W: Write>(writer: W, series: &Series) -> Result<(), FormatError> {
    let mut csv_writer = csv::Writer::from_writer(writer);
    csv_writer.write_record(["year", &series.metric])?;
    for &(year, value) in &series.points {
        let rendered = value.map(|v| v.to_string()).unwrap_or_default();
        csv_writer.write_record([year.to_string(), rendered])?;
    }
    csv_writer.flush()?;
    Ok(())
}
