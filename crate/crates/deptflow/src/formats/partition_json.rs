//! `partition.json`: seed, resolution, modularity, and the communities
//! with their members.

use std::io::{Read, Write};

use deptflow_core::community::{community_shares, Partition};
use deptflow_core::graph::DeptGraph;
use serde::{Deserialize, Serialize};

use super::FormatError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommunityDoc {
    pub id: usize,
    pub size: usize,
    pub share: f64,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionDoc {
    pub seed: u64,
    pub resolution: f64,
    pub q: f64,
    pub communities: Vec<CommunityDoc>,
}

pub fn build_doc(graph: &DeptGraph, partition: &Partition) -> PartitionDoc {
    let shares = community_shares(partition);
    let communities = shares
        .into_iter()
        .map(|(id, size, share)| {
            let mut members: Vec<String> = partition
                .assignment
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c == id)
                .map(|(v, _)| graph.label(v).to_string())
                .collect();
            members.sort();
            CommunityDoc {
                id,
                size,
                share,
                members,
            }
        })
        .collect();
    PartitionDoc {
        seed: partition.seed,
        resolution: partition.resolution,
        q: partition.q,
        communities,
    }
}

pub fn write_partition<W: Write>(mut writer: W, doc: &PartitionDoc) -> Result<(), FormatError> {
    serde_json::to_writer_pretty(&mut writer, doc)?;
    writer.write_all(b"\n")?;
    Ok(())
}

pub fn read_partition<R: Read>(reader: R) -> Result<PartitionDoc, FormatError> {
    Ok(serde_json::from_reader(reader)?)
}

/// Community id per graph node, looked up by label; errors when the
/// document does not cover the graph.
pub fn assignment_for(doc: &PartitionDoc, graph: &DeptGraph) -> Result<Vec<usize>, FormatError> {
    let mut assignment = vec![usize::MAX; graph.node_count()];
    for community in &doc.communities {
        for member in &community.members {
            if let Some(id) = graph.node_id(member) {
                assignment[id] = community.id;
            }
        }
    }
    if let Some(missing) = assignment.iter().position(|&c| c == usize::MAX) {
        return Err(FormatError::Invalid(format!(
            "partition does not cover node `{}`",
            graph.label(missing)
        )));
    }
    Ok(assignment)
}
