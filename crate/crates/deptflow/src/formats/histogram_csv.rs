//! Degree histograms as two-column CSV for plotting.

use std::io::Write;

use deptflow_core::metrics::DegreeHistogram;

use super::FormatError;

pub fn write_histogram<W: Write>(
    writer: W,
    histogram: &DegreeHistogram,
) -> Result<(), FormatError> {
    let mut csv_writer = csv::Writer::from_writer(writer);
    csv_writer.write_record(["value", "count"])?;
    for (&value, &count) in &histogram.counts {
        csv_writer.write_record([value.to_string(), count.to_string()])?;
    }
    csv_writer.flush()?;
    Ok(())
}
