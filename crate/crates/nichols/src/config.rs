//! Engine limits and tuning knobs, with a plain `key = value` file
//! format.  Values resolve in three layers: built-in defaults, then an
//! optional config file, then command-line flags; each layer only
//! overrides what it mentions.

use crate::error::{EngineError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Highest tensor degree the series computation will visit.
    pub kmax: usize,
    /// Largest multidegree block the symmetrizer will materialize.
    pub block_cap: usize,
    /// Object bound for the reflection closure.
    pub max_objects: usize,
    /// Largest admissible |Cartan entry| before the closure is declared
    /// unbounded.
    pub max_cartan_entry: i64,
    /// Depth bound for the chamber walk.
    pub root_depth: usize,
    /// Worker threads for block-parallel computations.
    pub workers: usize,
    /// Multiplicative order of the evaluation point used by the
    /// probabilistic generic rank.
    pub probabilistic_order: u32,
    /// Seed for the probabilistic evaluation point.
    pub probabilistic_seed: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            kmax: 12,
            block_cap: 20_000,
            max_objects: 1024,
            max_cartan_entry: 8,
            root_depth: 64,
            workers: 1,
            probabilistic_order: 10_007,
            probabilistic_seed: 20_260_822,
        }
    }
}

impl EngineConfig {
    /// Apply a config file: one `key = value` per line, `#` comments,
    /// blank lines ignored.  Unknown keys and malformed values are
    /// errors - silently dropping a limit someone set is worse than
    /// refusing to run.
    pub fn apply_file(&mut self, text: &str) -> Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(EngineError::InvalidInput(format!(
                    "config line {}: expected key = value, got {:?}",
                    lineno + 1,
                    raw.trim()
                )));
            };
            let key = key.trim();
            let value = value.trim();
            let parse_err = |what: &str| {
                EngineError::InvalidInput(format!(
                    "config line {}: {} is not a valid {}",
                    lineno + 1,
                    value,
                    what
                ))
            };
            match key {
                "kmax" => self.kmax = value.parse().map_err(|_| parse_err("degree"))?,
                "block_cap" => self.block_cap = value.parse().map_err(|_| parse_err("size"))?,
                "max_objects" => self.max_objects = value.parse().map_err(|_| parse_err("size"))?,
                "max_cartan_entry" => {
                    self.max_cartan_entry = value.parse().map_err(|_| parse_err("integer"))?
                }
                "root_depth" => self.root_depth = value.parse().map_err(|_| parse_err("depth"))?,
                "workers" => self.workers = value.parse().map_err(|_| parse_err("count"))?,
                "probabilistic_order" => {
                    self.probabilistic_order = value.parse().map_err(|_| parse_err("order"))?
                }
                "probabilistic_seed" => {
                    self.probabilistic_seed = value.parse().map_err(|_| parse_err("seed"))?
                }
                other => {
                    return Err(EngineError::InvalidInput(format!(
                        "config line {}: unknown key {:?}",
                        lineno + 1,
                        other
                    )))
                }
            }
        }
        Ok(())
    }
}
