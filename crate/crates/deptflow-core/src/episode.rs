//! Event records and their grouping into chronologically ordered episodes.
//!
//! An episode is one clinical stay: the ordered sequence of department
//! visits sharing an episode id. Consecutive visits to the same department
//! are collapsed by default so the downstream transfer graph never sees
//! self-loops.

use alloc::string::String;
use alloc::vec::Vec;

use chrono::NaiveDateTime;

/// One timestamped department visit as read from the event log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventRecord {
    pub patient_id: String,
    pub episode_id: String,
    pub department: String,
    pub timestamp: NaiveDateTime,
    /// 0-based ordinal of the row in the input file; breaks timestamp ties.
    pub seq: usize,
}

/// A single visit inside an episode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Visit {
    pub department: String,
    pub at: NaiveDateTime,
}

/// Chronologically ordered visit sequence sharing one episode id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Episode {
    pub episode_id: String,
    pub visits: Vec<Visit>,
}

impl Episode {
    /// Number of visits in the episode.
    pub fn len(&self) -> usize {
        self.visits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.visits.is_empty()
    }
}

/// Groups records by episode id and sorts each episode by `(timestamp, seq)`.
///
/// With `collapse_repeats` (the default pipeline behavior) consecutive
/// same-department visits merge into one, keeping the earliest timestamp.
/// Episodes come out in order of first appearance in the input.
pub fn build_episodes(records: &[EventRecord], collapse_repeats: bool) -> Vec<Episode> {
    let mut order: Vec<&str> = Vec::new();
    let mut groups: alloc::collections::BTreeMap<&str, Vec<&EventRecord>> =
        alloc::collections::BTreeMap::new();
    for record in records {
        let entry = groups.entry(&record.episode_id).or_default();
        if entry.is_empty() {
            order.push(&record.episode_id);
        }
        entry.push(record);
    }

    order
        .into_iter()
        .map(|episode_id| {
            let mut group = groups.remove(episode_id).expect("grouped above");
            group.sort_by(|a, b| a.timestamp.cmp(&b.timestamp).then(a.seq.cmp(&b.seq)));
            let mut visits: Vec<Visit> = Vec::with_capacity(group.len());
            for record in group {
                if collapse_repeats {
                    if let Some(last) = visits.last() {
                        if last.department == record.department {
                            continue;
                        }
                    }
                }
                visits.push(Visit {
                    department: record.department.clone(),
                    at: record.timestamp,
                });
            }
            Episode {
                episode_id: String::from(episode_id),
                visits,
            }
        })
        .collect()
}
