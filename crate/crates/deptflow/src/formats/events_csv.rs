//! Event-log CSV emission, the exact format the ingest module reads.

use std::io::Write;

use deptflow_core::episode::EventRecord;

use super::FormatError;

pub fn write_records<W: Write>(writer: W, records: &[EventRecord]) -> Result<(), FormatError> {
    let mut csv_writer = csv::Writer::from_writer(writer);
    csv_writer.write_record(["patient_id", "episode_id", "department", "timestamp"])?;
    for record in records {
        csv_writer.write_record([
            record.patient_id.as_str(),
            record.episode_id.as_str(),
            record.department.as_str(),
            &record.timestamp.format("%Y-%m-%dT%H:%M:%S").to_string(),
        ])?;
    }
    csv_writer.flush()?;
    Ok(())
}
