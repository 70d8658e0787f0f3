use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::Path;

/// What is needed to reproduce a run.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: Vec<String>,
    pub config: BTreeMap<String, String>,
    /// input path -> sha256 of its contents
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub version: &'static str,
    pub wall_time_ms: u64,
}

impl RunManifest {
    pub fn new(command: Vec<String>, config: BTreeMap<String, String>) -> Self {
        RunManifest {
            command,
            config,
            inputs: BTreeMap::new(),
            seed: None,
            version: env!("CARGO_PKG_VERSION"),
            wall_time_ms: 0,
        }
    }

    pub fn record_input(&mut self, path: &Path, contents: &[u8]) {
        self.inputs
            .insert(path.display().to_string(), hex::encode(Sha256::digest(contents)));
    }
}
