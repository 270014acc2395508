//! CSV event-log parsing into validated [`EventRecord`]s.
//!
//! Input contract: UTF-8 CSV with a header row, RFC 4180 quoting, required
//! columns `patient_id`, `episode_id`, `department`, `timestamp` in any
//! order (extra columns ignored), timestamps ISO-8601 — date-only values
//! are read as midnight. Errors carry the 1-based data row number.

use std::io::Read;

use chrono::{NaiveDate, NaiveDateTime};
use deptflow_core::episode::EventRecord;

#[derive(Debug, thiserror::Error)]
pub enum IngestError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("missing required column `{0}`")]
    MissingColumn(String),
    #[error("row {row}: unparsable timestamp `{value}`")]
    BadTimestamp { row: usize, value: String },
    #[error("row {row}: empty {field}")]
    EmptyField { row: usize, field: &'static str },
}

/// Column names to read each field from; override for other layouts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnMap {
    pub patient_id: String,
    pub episode_id: String,
    pub department: String,
    pub timestamp: String,
}

impl Default for ColumnMap {
    fn default() -> Self {
        ColumnMap {
            patient_id: "patient_id".into(),
            episode_id: "episode_id".into(),
            department: "department".into(),
            timestamp: "timestamp".into(),
        }
    }
}

/// Parses an event log with the standard column names.
pub fn parse_event_log<R: Read>(reader: R) -> Result<Vec<EventRecord>, IngestError> {
    parse_event_log_with(reader, &ColumnMap::default())
}

/// Parses an event log with a custom column mapping.
pub fn parse_event_log_with<R: Read>(
    reader: R,
    columns: &ColumnMap,
) -> Result<Vec<EventRecord>, IngestError> {
    let mut csv_reader = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
    let headers = csv_reader.headers()?.clone();
    let find = |name: &str| -> Result<usize, IngestError> {
        headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| IngestError::MissingColumn(name.to_string()))
    };
    let patient_idx = find(&columns.patient_id)?;
    let episode_idx = find(&columns.episode_id)?;
    let department_idx = find(&columns.department)?;
    let timestamp_idx = find(&columns.timestamp)?;

    let mut records = Vec::new();
    for (seq, row) in csv_reader.records().enumerate() {
        let row = row?;
        let row_number = seq + 1;
        let require = |idx: usize, name: &'static str| -> Result<&str, IngestError> {
            let value = row.get(idx).unwrap_or("").trim();
            if value.is_empty() {
                Err(IngestError::EmptyField {
                    row: row_number,
                    field: name,
                })
            } else {
                Ok(value)
            }
        };
        let patient_id = require(patient_idx, "patient_id")?.to_string();
        let episode_id = require(episode_idx, "episode_id")?.to_string();
        let department = require(department_idx, "department")?.to_string();
        let raw_timestamp = require(timestamp_idx, "timestamp")?;
        let timestamp =
            parse_timestamp(raw_timestamp).ok_or_else(|| IngestError::BadTimestamp {
                row: row_number,
                value: raw_timestamp.to_string(),
            })?;
        records.push(EventRecord {
            patient_id,
            episode_id,
            department,
            timestamp,
            seq,
        });
    }
    Ok(records)
}

/// ISO-8601 date or datetime; date-only reads as 00:00:00.
pub fn parse_timestamp(value: &str) -> Option<NaiveDateTime> {
    let value = value.trim();
    for format in [
        "%Y-%m-%dT%H:%M:%S%.f",
        "%Y-%m-%d %H:%M:%S%.f",
        "%Y-%m-%dT%H:%M",
        "%Y-%m-%d %H:%M",
    ] {
        if let Ok(parsed) = NaiveDateTime::parse_from_str(value, format) {
            return Some(parsed);
        }
    }
    NaiveDate::parse_from_str(value, "%Y-%m-%d")
        .ok()
        .and_then(|date| date.and_hms_opt(0, 0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_well_formed_row() {
        let csv = "patient_id,episode_id,department,timestamp\n\
                   p1,e1,Cardiology One,2010-03-04T10:00:00\n";
        let records = parse_event_log(csv.as_bytes()).unwrap();
        assert_eq!(records.len(), 1);
        let r = &records[0];
        assert_eq!(r.patient_id, "p1");
        assert_eq!(r.episode_id, "e1");
        assert_eq!(r.department, "Cardiology One");
        assert_eq!(r.timestamp, "2010-03-04T10:00:00".parse().unwrap());
        assert_eq!(r.seq, 0);
    }

    #[test]
    fn header_only_file_gives_empty_list() {
        let csv = "patient_id,episode_id,department,timestamp\n";
        assert!(parse_event_log(csv.as_bytes()).unwrap().is_empty());
    }

    #[test]
    fn rejects_non_iso_timestamp_naming_the_row() {
        let csv = "patient_id,episode_id,department,timestamp\n\
                   p1,e1,Lab,04/03/2010\n";
        match parse_event_log(csv.as_bytes()).unwrap_err() {
            IngestError::BadTimestamp { row, value } => {
                assert_eq!(row, 1);
                assert_eq!(value, "04/03/2010");
            }
            other => panic!("unexpected: {other}"),
        }
    }

    #[test]
    fn rejects_missing_column() {
        let csv = "patient_id,department,timestamp\np1,Lab,2010-01-01\n";
        match parse_event_log(csv.as_bytes()).unwrap_err() {
            IngestError::MissingColumn(name) => assert_eq!(name, "episode_id"),
            other => panic!("unexpected: {other}"),
        }
    }

    #[test]
    fn rejects_blank_fields_naming_row_and_field() {
        let csv = "patient_id,episode_id,department,timestamp\n\
                   p1,e1,Lab,2010-01-01\n\
                   p2,e2,  ,2010-01-02\n";
        match parse_event_log(csv.as_bytes()).unwrap_err() {
            IngestError::EmptyField { row, field } => {
                assert_eq!(row, 2);
                assert_eq!(field, "department");
            }
            other => panic!("unexpected: {other}"),
        }
    }

    #[test]
    fn accepts_any_column_order_and_ignores_extras() {
        let csv = "ward,timestamp,department,episode_id,patient_id\n\
                   W1,2010-06-07,ICU,e5,p9\n";
        let records = parse_event_log(csv.as_bytes()).unwrap();
        assert_eq!(records[0].department, "ICU");
        assert_eq!(
            records[0].timestamp,
            "2010-06-07T00:00:00".parse().unwrap()
        );
    }

    #[test]
    fn respects_rfc4180_quoting() {
        let csv = "patient_id,episode_id,department,timestamp\n\
                   p1,e1,\"Surgery, Cardiac\",2010-03-04T10:00:00\n";
        let records = parse_event_log(csv.as_bytes()).unwrap();
        assert_eq!(records[0].department, "Surgery, Cardiac");
    }

    #[test]
    fn custom_column_mapping() {
        let csv = "pid,eid,dept,when\np1,e1,Lab,2010-01-01T08:00:00\n";
        let map = ColumnMap {
            patient_id: "pid".into(),
            episode_id: "eid".into(),
            department: "dept".into(),
            timestamp: "when".into(),
        };
        let records = parse_event_log_with(csv.as_bytes(), &map).unwrap();
        assert_eq!(records[0].department, "Lab");
    }

    #[test]
    fn timestamp_formats() {
        assert!(parse_timestamp("2010-03-04T10:00:00").is_some());
        assert!(parse_timestamp("2010-03-04 10:00:00").is_some());
        assert!(parse_timestamp("2010-03-04T10:00").is_some());
        assert!(parse_timestamp("2010-03-04T10:00:00.250").is_some());
        assert_eq!(
            parse_timestamp("2010-03-04").unwrap(),
            "2010-03-04T00:00:00".parse().unwrap()
        );
        assert!(parse_timestamp("04/03/2010").is_none());
        assert!(parse_timestamp("not a date").is_none());
    }
}
