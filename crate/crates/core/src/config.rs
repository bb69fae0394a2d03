//! Flat key=value run configuration files.
//!
//! A config file supplies defaults for the command-line flags, one
//! `key = value` pair per line, keys named exactly like the flags they
//! stand in for (`surface`, `c1`, `c2`, `e`, `N`, `window`, `format`,
//! `out`, `seed`, `samples`, `rank`, `check`, `pair`, `cross-ruling`,
//! `mode`). Blank lines and `#` comments are ignored. A flag given on
//! the command line always overrides the file.

use std::collections::BTreeMap;
use std::path::Path;

use crate::{Error, Result};

/// Key-value pairs loaded from a config file. Later occurrences of a
/// key override earlier ones.
pub fn load_config(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::InvalidInput(format!("cannot read config {}: {e}", path.display()))
    })?;
    parse_config(&text)
}

/// The parser behind [`load_config`], split out for testing.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::InvalidInput(format!(
                "config line {}: expected key=value, got {line:?}",
                idx + 1
            )));
        };
        let key = key.trim();
        if key.is_empty() {
            return Err(Error::InvalidInput(format!(
                "config line {}: empty key",
                idx + 1
            )));
        }
        map.insert(key.to_string(), value.trim().to_string());
    }
    Ok(map)
}

/// Truthiness of config values for flags that are switches on the
/// command line.
pub fn config_bool(value: &str) -> Result<bool> {
    match value {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        other => Err(Error::InvalidInput(format!(
            "expected a boolean (true/false), got {other:?}"
        ))),
    }
}
