//! Text file formats: curve records, α/β table records, and run manifests.
//!
//! Everything is human-editable TOML-style text; exact rationals travel as
//! `"p/q"` strings and every writer's output is accepted back by the matching
//! reader (round-trip property).

use crate::curvezeta::CurveData;
use crate::error::{Error, Result};
use crate::exactmath::{fmt_qq, parse_qq};
use crate::zetassembly::AlphaBetaTable;
use serde::Deserialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

/// On-disk curve record: `{q, g, numerator}` or `{q, g, point_counts}`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveRecord {
    q: u64,
    g: usize,
    numerator: Option<Vec<i64>>,
    point_counts: Option<Vec<i64>>,
}

/// Parse a curve record from text.
pub fn parse_curve_str(text: &str) -> Result<CurveData> {
    let record: CurveRecord =
        toml::from_str(text).map_err(|e| Error::input(format!("malformed curve file: {e}")))?;
    match (record.numerator, record.point_counts) {
        (Some(coeffs), None) => CurveData::from_numerator(record.q, record.g, &coeffs),
        (None, Some(counts)) => CurveData::from_counts(record.q, record.g, &counts),
        (Some(_), Some(_)) => Err(Error::input(
            "curve file must carry exactly one of 'numerator' or 'point_counts', got both",
        )),
        (None, None) => Err(Error::input(
            "curve file must carry one of 'numerator' or 'point_counts'",
        )),
    }
}

/// Read a curve record from a file.
pub fn read_curve_file(path: impl AsRef<Path>) -> Result<CurveData> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read curve file {}: {e}", path.display())))?;
    parse_curve_str(&text)
}

/// Serialize a curve as its exact numerator record (canonical form; counts,
/// when the curve was built from them, are already folded in).
pub fn curve_to_toml(curve: &CurveData) -> String {
    let coeffs: Vec<String> = curve
        .numerator_coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect();
    format!(
        "q = {}\ng = {}\nnumerator = [{}]\n",
        curve.q(),
        curve.g(),
        coeffs.join(", ")
    )
}

/// Write a curve record to a file.
pub fn write_curve_file(path: impl AsRef<Path>, curve: &CurveData) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, curve_to_toml(curve))
        .map_err(|e| Error::input(format!("cannot write curve file {}: {e}", path.display())))
}

/// On-disk α/β table record.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AbRecord {
    n: usize,
    g: usize,
    base: String,
    alphas: Vec<String>,
    beta: String,
}

/// Parse an α/β table record from text.
pub fn parse_ab_str(text: &str) -> Result<AlphaBetaTable> {
    let record: AbRecord =
        toml::from_str(text).map_err(|e| Error::input(format!("malformed table file: {e}")))?;
    let base = parse_qq(&record.base)?;
    let alphas = record
        .alphas
        .iter()
        .map(|s| parse_qq(s))
        .collect::<Result<Vec<_>>>()?;
    let beta = parse_qq(&record.beta)?;
    AlphaBetaTable::new(record.n, record.g, base, alphas, beta)
}

/// Read an α/β table record from a file.
pub fn read_ab_file(path: impl AsRef<Path>) -> Result<AlphaBetaTable> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read table file {}: {e}", path.display())))?;
    parse_ab_str(&text)
}

/// Serialize an α/β table record.
pub fn ab_to_toml(table: &AlphaBetaTable) -> String {
    let alphas: Vec<String> = table
        .alphas()
        .iter()
        .map(|a| format!("\"{}\"", fmt_qq(a)))
        .collect();
    format!(
        "n = {}\ng = {}\nbase = \"{}\"\nalphas = [{}]\nbeta = \"{}\"\n",
        table.rank(),
        table.genus(),
        fmt_qq(table.base()),
        alphas.join(", "),
        fmt_qq(table.beta())
    )
}

/// Write an α/β table record to a file.
pub fn write_ab_file(path: impl AsRef<Path>, table: &AlphaBetaTable) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, ab_to_toml(table))
        .map_err(|e| Error::input(format!("cannot write table file {}: {e}", path.display())))
}

/// Record of one CLI invocation: command, inputs, parameters, precision.
/// Identical manifests must produce byte-identical outputs, so the
/// serialization is fully deterministic (sorted parameter keys).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunManifest {
    pub command: String,
    pub inputs: Vec<String>,
    pub params: BTreeMap<String, String>,
    pub precision_digits: u32,
    pub seed: Option<u64>,
}

impl RunManifest {
    pub fn new(command: impl Into<String>) -> Self {
        RunManifest {
            command: command.into(),
            inputs: Vec::new(),
            params: BTreeMap::new(),
            precision_digits: 40,
            seed: None,
        }
    }

    pub fn with_input(mut self, path: impl Into<String>) -> Self {
        self.inputs.push(path.into());
        self
    }

    pub fn with_param(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn with_precision(mut self, digits: u32) -> Self {
        self.precision_digits = digits;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// Deterministic text form, suitable for echoing alongside results.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command = \"{}\"", self.command);
        for input in &self.inputs {
            let _ = writeln!(out, "input = \"{input}\"");
        }
        for (k, v) in &self.params {
            let _ = writeln!(out, "param.{k} = \"{v}\"");
        }
        let _ = writeln!(out, "precision = {}", self.precision_digits);
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed = {seed}");
        }
        out
    }
}
