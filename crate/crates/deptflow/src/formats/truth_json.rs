//! Ground-truth JSON for synthetic corpora:
//! `{department: {community, transfers}}`; hubs have `community: null`.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use deptflow_core::syngen::{DeptTruth, GroundTruth};
use serde::{Deserialize, Serialize};

use super::FormatError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeptTruthDoc {
    pub community: Option<usize>,
    pub transfers: u64,
}

pub type TruthDoc = BTreeMap<String, DeptTruthDoc>;

pub fn build_doc(truth: &GroundTruth) -> TruthDoc {
    truth
        .departments
        .iter()
        .map(|(label, t)| {
            (
                label.clone(),
                DeptTruthDoc {
                    community: t.community,
                    transfers: t.transfers,
                },
            )
        })
        .collect()
}

pub fn write_truth<W: Write>(mut writer: W, truth: &GroundTruth) -> Result<(), FormatError> {
    serde_json::to_writer_pretty(&mut writer, &build_doc(truth))?;
    writer.write_all(b"\n")?;
    Ok(())
}

pub fn read_truth<R: Read>(reader: R) -> Result<GroundTruth, FormatError> {
    let doc: TruthDoc = serde_json::from_reader(reader)?;
    Ok(GroundTruth {
        departments: doc
            .into_iter()
            .map(|(label, t)| {
                (
                    label,
                    DeptTruth {
                        community: t.community,
                        transfers: t.transfers,
                    },
                )
            })
            .collect(),
    })
}
