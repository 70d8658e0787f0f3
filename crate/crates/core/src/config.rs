//! Search guards and defaults.
//!
//! Configuration files are plain `key = value` lines; `#` starts a comment.
//! Every key can be overridden through the environment as
//! `GSIDON_<KEY>` with the key upper-cased, e.g. `GSIDON_MAX_SET_ELEMENTS=20`.

use crate::error::{Error, Result};
use crate::ordgraph::Interleaving;
use std::collections::BTreeMap;
use std::path::Path;

pub const ENV_PREFIX: &str = "GSIDON_";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Representations materialised per target; beyond this only counts are kept.
    pub rep_cap: usize,
    /// Largest set `arrow_check` accepts for two colours. More colours shrink
    /// the limit so that the search space stays comparable.
    pub max_set_elements: usize,
    /// Largest edge count `edge_arrow_check` accepts for two colours.
    pub max_graph_edges: usize,
    /// Largest combined family size for forest searches.
    pub max_forest_copies: usize,
    /// Largest graph the brute-force cycle oracle accepts.
    pub max_oracle_vertices: usize,
    pub interleaving: Interleaving,
    /// Odd modulus overriding `2k + 1` in the encoder (experiments only).
    pub modulus: Option<u64>,
    /// Depth at which colouring searches fan out to worker threads.
    pub split_depth: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            rep_cap: 10_000,
            max_set_elements: 24,
            max_graph_edges: 30,
            max_forest_copies: 18,
            max_oracle_vertices: 20,
            interleaving: Interleaving::LevelMajor,
            modulus: None,
            split_depth: 8,
        }
    }
}

fn parse_usize(key: &str, value: &str, line: usize) -> Result<usize> {
    value.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("{key}: expected a nonnegative integer, got {value:?}"),
    })
}

impl Config {
    pub const KEYS: [&'static str; 8] = [
        "rep_cap",
        "max_set_elements",
        "max_graph_edges",
        "max_forest_copies",
        "max_oracle_vertices",
        "interleaving",
        "modulus",
        "split_depth",
    ];

    /// Sets one key. `line` is only used for error reporting.
    pub fn set(&mut self, key: &str, value: &str, line: usize) -> Result<()> {
        let value = value.trim();
        match key {
            "rep_cap" => self.rep_cap = parse_usize(key, value, line)?,
            "max_set_elements" => self.max_set_elements = parse_usize(key, value, line)?,
            "max_graph_edges" => self.max_graph_edges = parse_usize(key, value, line)?,
            "max_forest_copies" => self.max_forest_copies = parse_usize(key, value, line)?,
            "max_oracle_vertices" => self.max_oracle_vertices = parse_usize(key, value, line)?,
            "split_depth" => self.split_depth = parse_usize(key, value, line)?,
            "interleaving" => {
                self.interleaving = match value {
                    "level-major" => Interleaving::LevelMajor,
                    "path-major" => Interleaving::PathMajor,
                    other => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("interleaving must be level-major or path-major, got {other:?}"),
                        })
                    }
                }
            }
            "modulus" => {
                self.modulus = if value.is_empty() || value == "auto" {
                    None
                } else {
                    Some(parse_usize(key, value, line)? as u64)
                }
            }
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown config key {other:?}"),
                })
            }
        }
        Ok(())
    }

    pub fn parse_str(text: &str) -> Result<Self> {
        let mut cfg = Config::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: idx + 1,
                msg: format!("expected `key = value`, got {line:?}"),
            })?;
            cfg.set(key.trim(), value, idx + 1)?;
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse_str(&std::fs::read_to_string(path)?)
    }

    /// Applies `GSIDON_*` overrides from the given variables.
    pub fn apply_env<I>(&mut self, vars: I) -> Result<()>
    where
        I: IntoIterator<Item = (String, String)>,
    {
        for (name, value) in vars {
            if let Some(key) = name.strip_prefix(ENV_PREFIX) {
                let key = key.to_ascii_lowercase();
                if Self::KEYS.contains(&key.as_str()) {
                    self.set(&key, &value, 0)?;
                }
            }
        }
        Ok(())
    }

    pub fn to_map(&self) -> BTreeMap<String, String> {
        let mut map = BTreeMap::new();
        map.insert("rep_cap".into(), self.rep_cap.to_string());
        map.insert("max_set_elements".into(), self.max_set_elements.to_string());
        map.insert("max_graph_edges".into(), self.max_graph_edges.to_string());
        map.insert("max_forest_copies".into(), self.max_forest_copies.to_string());
        map.insert("max_oracle_vertices".into(), self.max_oracle_vertices.to_string());
        map.insert("interleaving".into(), self.interleaving.name().to_string());
        map.insert(
            "modulus".into(),
            self.modulus.map_or_else(|| "auto".to_string(), |m| m.to_string()),
        );
        map.insert("split_depth".into(), self.split_depth.to_string());
        map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_file_and_env() {
        let cfg = Config::parse_str(
            "# guards\nmax_set_elements = 12\ninterleaving = path-major\n\nmodulus = 7 # odd\n",
        )
        .unwrap();
        assert_eq!(cfg.max_set_elements, 12);
        assert_eq!(cfg.interleaving, Interleaving::PathMajor);
        assert_eq!(cfg.modulus, Some(7));

        let mut cfg = cfg;
        cfg.apply_env(vec![
            ("GSIDON_MAX_SET_ELEMENTS".to_string(), "9".to_string()),
            ("OTHER".to_string(), "x".to_string()),
            ("GSIDON_UNRELATED".to_string(), "x".to_string()),
        ])
        .unwrap();
        assert_eq!(cfg.max_set_elements, 9);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(matches!(
            Config::parse_str("nope = 1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(Config::parse_str("rep_cap = -1").is_err());
        assert!(Config::parse_str("just words").is_err());
    }

    #[test]
    fn map_round_trips_through_parser() {
        let cfg = Config {
            max_graph_edges: 11,
            ..Config::default()
        };
        let text: String = cfg
            .to_map()
            .iter()
            .map(|(k, v)| format!("{k} = {v}\n"))
            .collect();
        assert_eq!(Config::parse_str(&text).unwrap(), cfg);
    }
}
