//! Run records and renderers.
//!
//! Every command reduces its result to one of the record structs below,
//! then renders it as pretty JSON, a plain-text table, or CSV. The
//! records are the stable output contract:
//!
//! * JSON keys appear in struct declaration order, absent optionals are
//!   omitted (never null), and every value is an integer, string,
//!   boolean, array, or object. No floats anywhere, so parsing and
//!   re-serializing a record is byte-identical.
//! * Divisor classes are serialized as plain coefficient strings
//!   ("3", "1,0") so they stay scalars in every format.
//! * Survey output is JSON Lines: one compact record per line.

use serde::{Deserialize, Serialize};

use crate::bn::BNComponent;
use crate::tf::TFComponent;
use crate::{Error, Result};

/// Output format of a command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

impl OutputFormat {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "table" => Ok(OutputFormat::Table),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::InvalidInput(format!(
                "unknown format {other:?}: expected table, json, or csv"
            ))),
        }
    }
}

/// One component of the rank-2 torsion-free stack, flattened for output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TFComponentRecord {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n1: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n2: Option<i64>,
    pub dimension: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub embedding_codim: Option<i64>,
    pub generic_locally_free: bool,
    pub singular_locus_length: i64,
}

impl From<&TFComponent> for TFComponentRecord {
    fn from(c: &TFComponent) -> Self {
        TFComponentRecord {
            kind: c.kind.label().to_string(),
            d: c.d.as_ref().map(|d| d.plain()),
            n1: c.n1,
            n2: c.n2,
            dimension: c.dimension,
            embedding_codim: c.embedding_codim,
            generic_locally_free: c.generic_locally_free,
            singular_locus_length: c.singular_locus_length,
        }
    }
}

/// One component of the Brill-Noether locus, flattened for output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BNComponentRecord {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma_degree: Option<i64>,
    pub codim: i64,
    pub dim: i64,
    pub description: String,
}

impl From<&BNComponent> for BNComponentRecord {
    fn from(c: &BNComponent) -> Self {
        BNComponentRecord {
            kind: c.kind.label().to_string(),
            d: c.d.as_ref().map(|d| d.plain()),
            n: c.n,
            gamma_degree: c.gamma_degree,
            codim: c.codim,
            dim: c.dim,
            description: c.description.clone(),
        }
    }
}

/// Result of a single `tf` run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TFRunRecord {
    pub surface: String,
    pub c1: String,
    pub c2: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub window: Option<String>,
    pub prioritary_present: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prioritary_obstruction: Option<String>,
    pub components: Vec<TFComponentRecord>,
    pub admissible_region: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// One `--check` row of a `bn` run: the Serre image and the two
/// codimension computations for the component at `component`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub component: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub serre_dimension: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub serre_n2: Option<i64>,
    pub codim_closed_form: i64,
    pub codim_stack_path: i64,
    pub consistent: bool,
}

/// Result of a single `bn` run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BNRunRecord {
    pub surface: String,
    pub e: String,
    #[serde(rename = "N")]
    pub n_points: i64,
    pub chi: i64,
    pub components: Vec<BNComponentRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub checks: Option<Vec<CheckRecord>>,
}

/// Result of a `chi` run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiRecord {
    pub surface: String,
    pub rank: i64,
    pub c1: String,
    pub c2: i64,
    pub chi: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chi_pair_self: Option<i64>,
}

/// Result of a `cohom` run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomRecord {
    pub surface: String,
    pub c1: String,
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
    pub chi: i64,
}

/// Per-component result of a `verify` run in Brill-Noether mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyComponentRecord {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<i64>,
    pub codim: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub serre_dimension: Option<i64>,
    pub codim_closed_form: i64,
    pub codim_stack_path: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_samples: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_min_h1: Option<i64>,
    pub passed: bool,
}

/// Result of a `verify` run in Brill-Noether mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyBNRecord {
    pub surface: String,
    pub e: String,
    #[serde(rename = "N")]
    pub n_points: i64,
    pub samples: i64,
    pub seed: u64,
    pub components: Vec<VerifyComponentRecord>,
    pub general_samples: i64,
    pub general_h1_expected: bool,
    pub passed: bool,
}

/// Result of a `verify --cross-ruling` run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossRulingRecord {
    pub surface: String,
    pub c1: String,
    pub c2: i64,
    pub window: String,
    pub primary_components: i64,
    pub swapped_components: i64,
    pub matched: i64,
    pub unmatched_primary: i64,
    pub unmatched_swapped: i64,
}

/// One record of a `survey tf` run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TFSurveyRecord {
    pub surface: String,
    pub c1: String,
    pub c2: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub window: Option<String>,
    pub prioritary_present: bool,
    pub components: Vec<TFComponentRecord>,
}

/// One record of a `survey bn` run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BNSurveyRecord {
    pub surface: String,
    pub e: String,
    #[serde(rename = "N")]
    pub n_points: i64,
    pub chi: i64,
    pub components: Vec<BNComponentRecord>,
}

/// Pretty JSON with a trailing newline, for single-run output.
pub fn to_pretty_json<T: Serialize>(value: &T) -> Result<String> {
    let body = serde_json::to_string_pretty(value)
        .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))?;
    Ok(format!("{body}\n"))
}

/// Compact single-line JSON, for survey records.
pub fn to_json_line<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string(value)
        .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))
}

/// Plain-text table: left-aligned columns padded to the widest cell,
/// two spaces between columns, no trailing spaces.
pub fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate().take(cols) {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let mut emit = |cells: Vec<&str>| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < cells.len() {
                for _ in cell.len()..widths[i] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    emit(header.to_vec());
    for row in rows {
        emit(row.iter().map(String::as_str).collect());
    }
    out
}

/// Aligned `key  value` lines for run headers and scalar results.
pub fn render_kv(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in pairs {
        out.push_str(k);
        for _ in k.len()..width {
            out.push(' ');
        }
        out.push_str("  ");
        out.push_str(v);
        out.push('\n');
    }
    out
}

fn csv_escape(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// CSV with a header row; fields containing commas, quotes, or
/// newlines are quoted with doubled inner quotes.
pub fn render_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(
        &header
            .iter()
            .map(|h| csv_escape(h))
            .collect::<Vec<_>>()
            .join(","),
    );
    out.push('\n');
    for row in rows {
        out.push_str(
            &row.iter()
                .map(|c| csv_escape(c))
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push('\n');
    }
    out
}

/// "-" for absent optionals in table and CSV cells.
pub fn cell_opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => "-".to_string(),
    }
}

/// "yes"/"no" for booleans in table cells.
pub fn cell_bool(v: bool) -> String {
    if v { "yes" } else { "no" }.to_string()
}
