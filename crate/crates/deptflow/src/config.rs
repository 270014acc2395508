//! TOML run configuration. Every value is optional; command-line flags
//! override file values, and unknown keys are rejected.

use std::path::Path;

use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("config {path}: {source}")]
    Parse {
        path: String,
        source: Box<toml::de::Error>,
    },
    #[error("config {path}: unknown {field} `{value}`")]
    BadEnum {
        path: String,
        field: &'static str,
        value: String,
    },
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub top_k: Option<usize>,
    pub build: BuildSection,
    pub columns: ColumnsSection,
    pub community: CommunitySection,
    pub layout: LayoutSection,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BuildSection {
    pub min_weighted_degree: Option<u64>,
    pub window_min_weighted_degree: Option<u64>,
    /// "node-weighted-degree" or "edge-weight".
    pub threshold_scope: Option<String>,
    /// "calendar-year" or "none".
    pub window: Option<String>,
    pub collapse_repeats: Option<bool>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ColumnsSection {
    pub patient_id: Option<String>,
    pub episode_id: Option<String>,
    pub department: Option<String>,
    pub timestamp: Option<String>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CommunitySection {
    pub resolution: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct LayoutSection {
    pub iterations: Option<u32>,
    pub scaling: Option<f64>,
    pub gravity: Option<f64>,
    pub linlog: Option<bool>,
    pub edge_weight_influence: Option<f64>,
    pub expand: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        toml::from_str(&text).map_err(|source| ConfigError::Parse {
            path: path.display().to_string(),
            source: Box::new(source),
        })
    }
}
