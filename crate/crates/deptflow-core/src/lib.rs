//! Core algorithms for department-transfer network analysis.
//!
//! Everything in this crate is pure computation over owned values: episode
//! assembly, directed weighted graph construction with noise thresholds,
//! centrality and clustering metrics, Louvain community detection, temporal
//! window summaries with Pearson correlation, ForceAtlas2 layout, and a
//! seeded synthetic event-log generator. File formats, CSV ingest and the
//! CLI live in the companion `deptflow` crate.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature only switches float math to the platform intrinsics and enables
//! `std::error::Error` on the error types.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod build;
pub mod community;
pub mod episode;
pub mod graph;
mod math;
pub mod metrics;
pub mod syngen;
pub mod temporal;

pub mod layout;

pub use build::{BuildConfig, ThresholdScope, Windowing};
pub use community::{Partition, UGraph};
pub use episode::{Episode, EventRecord, Visit};
pub use graph::DeptGraph;
pub use metrics::{NetworkSummary, NodeMetrics};
