//! End-to-end run: graph, local structure, encoding, classification,
//! structural clauses, extraction and the arrow decision.

use crate::cert::Certificate;
use crate::config::Config;
use crate::encoder::{encode_with_modulus, Encoding};
use crate::error::Error;
use crate::extract::extract_bk;
use crate::ordgraph::{check_local_structure, make_theta, OrderedGraph, ThetaSpec};
use crate::ramsey::arrow_check;
use crate::repset::{classify, verify_theorem_properties_capped, Classification, Clause};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub enum GraphSource {
    /// `Θ_{k,l}` in the configured interleaving.
    Theta,
    Given { graph: OrderedGraph, label: String },
}

#[derive(Clone, Debug)]
pub struct PipelineInput {
    pub k: usize,
    pub ell: usize,
    pub source: GraphSource,
    /// Colours for the arrow stage.
    pub r: usize,
}

/// A failed stage and the error it raised.
#[derive(Debug, thiserror::Error)]
#[error("stage {stage} failed: {error}")]
pub struct StageError {
    pub stage: &'static str,
    #[source]
    pub error: Error,
}

fn at<T>(stage: &'static str, r: crate::Result<T>) -> Result<T, StageError> {
    r.map_err(|error| StageError { stage, error })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Bundle {
    pub params: BTreeMap<String, Value>,
    pub graph: Value,
    pub local_structure: Certificate,
    pub encoding: Value,
    pub classification: Classification,
    pub properties: Certificate,
    pub extraction: Certificate,
    pub arrow: Certificate,
}

impl Bundle {
    /// Verifier certificates, in stage order.
    pub fn certificates(&self) -> [&Certificate; 3] {
        [&self.local_structure, &self.properties, &self.extraction]
    }

    /// All verifiers passed. The arrow stage is a decision and does not count.
    pub fn passed(&self) -> bool {
        self.certificates().iter().all(|c| c.passed) && self.classification.ell == self.params["ell"]
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("bundle serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("bundle serializes")
    }
}

pub fn run(input: &PipelineInput, cfg: &Config) -> Result<Bundle, StageError> {
    let (k, ell) = (input.k, input.ell);
    let (graph, label) = match &input.source {
        GraphSource::Theta => {
            let spec = ThetaSpec::new(k, ell).with_interleaving(cfg.interleaving.clone());
            (at("theta", make_theta(&spec))?, format!("theta({k},{ell},{})", cfg.interleaving.name()))
        }
        GraphSource::Given { graph, label } => (graph.clone(), label.clone()),
    };

    let local_structure = at("local-structure", check_local_structure(&graph, k, ell, 2 * k))?;

    let m = cfg.modulus.unwrap_or(2 * k as u64 + 1);
    let enc: Encoding = at("encode", encode_with_modulus(&graph, k, m))?;
    let x = enc.set();

    let classification = at("classify", classify(x, k))?;
    let properties = at(
        "properties",
        verify_theorem_properties_capped(x, k, ell as u64, &Clause::ALL, cfg.rep_cap),
    )?;
    let extraction = at("extract", extract_bk(x, &enc, k))?.certificate;
    let verdict = at("arrow", arrow_check(x, k, ell as u64, input.r, cfg))?;
    let arrow = at("arrow", verdict.set_certificate(x, k, ell as u64, input.r))?;

    let mut params = BTreeMap::new();
    params.insert("k".to_string(), json!(k));
    params.insert("ell".to_string(), json!(ell));
    params.insert("r".to_string(), json!(input.r));
    params.insert("source".to_string(), json!(label));
    params.insert("config".to_string(), json!(cfg.to_map()));

    Ok(Bundle {
        params,
        graph: graph.to_json(),
        local_structure,
        encoding: json!({ "m": enc.m(), "set": x.to_json(), "mapping": enc.mapping_file() }),
        classification,
        properties,
        extraction,
        arrow,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_bundle() {
        let input = PipelineInput {
            k: 2,
            ell: 2,
            source: GraphSource::Theta,
            r: 2,
        };
        let b = run(&input, &Config::default()).unwrap();
        assert!(b.passed(), "{}", b.to_json_pretty());
        assert!(b.classification.is_bkl && b.classification.ell == 2);
        assert!(!b.arrow.passed);
        assert_eq!(b, run(&input, &Config::default()).unwrap());
    }

    #[test]
    fn theta_3_2_bundle() {
        let input = PipelineInput {
            k: 3,
            ell: 2,
            source: GraphSource::Theta,
            r: 2,
        };
        let b = run(&input, &Config::default()).unwrap();
        assert!(b.passed());
        let size = b.extraction.params["subset"].as_array().unwrap().len();
        assert!(size >= 2);
    }

    #[test]
    fn failing_stage_is_named() {
        let input = PipelineInput {
            k: 2,
            ell: 1,
            source: GraphSource::Theta,
            r: 2,
        };
        let err = run(&input, &Config::default()).unwrap_err();
        assert_eq!(err.stage, "theta");
    }
}
