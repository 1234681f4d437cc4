//! Point files and configuration parsing.
//!
//! JSON point files are objects with a `"points"` array (or a bare array);
//! each point is an array of integers or rational strings. CSV files have a
//! mandatory header whose coordinate columns are `x0, x1, ...`; other columns
//! (such as `label`) are ignored on input.

use std::fs;
use std::path::Path;

use hadastick_core::{
    format_rational, parse_rational, validate_config, AConfig, IndexSet, ProjPoint, Rational,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::args::{ConfigArgs, PointFormat};
use crate::error::CliError;

/// The default configuration `A = ([1:1], [1:2], [1:3], [1:4])`.
pub const DEFAULT_A: &str = "1/1,1/2,1/3,1/4";

/// Parses four points of `P^1`. Each entry is `alpha/beta` with integer
/// parts or `alpha:beta` with rational parts; the pair is kept as written.
pub fn parse_a_points(text: &str) -> Result<[(Rational, Rational); 4], CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(CliError::Input(format!(
            "A needs four points, got {}",
            parts.len()
        )));
    }
    let mut out = Vec::with_capacity(4);
    for part in parts {
        let (a, b) = part
            .split_once(':')
            .or_else(|| part.split_once('/'))
            .ok_or_else(|| {
                CliError::Input(format!("point {part:?} is not of the form alpha/beta"))
            })?;
        let a = parse_rational(a)?;
        let b = parse_rational(b)?;
        out.push((a, b));
    }
    Ok(out.try_into().expect("four entries"))
}

/// `alpha/beta` for integer pairs, `alpha:beta` otherwise.
pub fn format_a_point(alpha: &Rational, beta: &Rational) -> String {
    if alpha.is_integer() && beta.is_integer() {
        format!("{}/{}", alpha.numer(), beta.numer())
    } else {
        format!("{}:{}", format_rational(alpha), format_rational(beta))
    }
}

/// Builds and validates the configuration for a `rows x cols` grid.
pub fn build_config(args: &ConfigArgs, rows: usize, cols: usize) -> Result<AConfig, CliError> {
    let points = parse_a_points(args.a_points.as_deref().unwrap_or(DEFAULT_A))?;
    let ia = match &args.ia {
        Some(v) => IndexSet::new(v.clone())?,
        None => IndexSet::evens(rows),
    };
    let ib = match &args.ib {
        Some(v) => IndexSet::new(v.clone())?,
        None => IndexSet::evens(cols),
    };
    Ok(validate_config(points, ia, ib)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigDoc {
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "Ia")]
    pub ia: Vec<u64>,
    #[serde(rename = "Ib")]
    pub ib: Vec<u64>,
}

impl ConfigDoc {
    /// The configuration with only the index values actually used.
    pub fn new(cfg: &AConfig, rows: &[u64], cols: &[u64]) -> Self {
        ConfigDoc {
            a: (0..4)
                .map(|i| format_a_point(&cfg.alpha()[i], &cfg.beta()[i]))
                .collect(),
            ia: rows.to_vec(),
            ib: cols.to_vec(),
        }
    }
}

pub fn point_strings(p: &ProjPoint) -> Vec<String> {
    p.coords().iter().map(ToString::to_string).collect()
}

/// CSV with header `x0,...,xn,label`.
pub fn points_to_csv(points: &[ProjPoint], labels: &[String]) -> Result<String, CliError> {
    let n = points.first().map_or(4, ProjPoint::dim);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
    header.push("label".into());
    let csv_err = |e: csv::Error| CliError::Input(format!("csv: {e}"));
    w.write_record(&header).map_err(csv_err)?;
    for (p, label) in points.iter().zip(labels) {
        let mut row = point_strings(p);
        row.push(label.clone());
        w.write_record(&row).map_err(csv_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Input(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| CliError::Input(e.to_string()))
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Format from the extension, then from the first non-blank character.
pub fn detect_format(path: &Path, text: &str) -> PointFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some(e) if e.eq_ignore_ascii_case("csv") => PointFormat::Csv,
        Some(e) if e.eq_ignore_ascii_case("json") => PointFormat::Json,
        _ => match text.trim_start().chars().next() {
            Some('{') | Some('[') => PointFormat::Json,
            _ => PointFormat::Csv,
        },
    }
}

pub fn parse_points(text: &str, format: PointFormat) -> Result<Vec<ProjPoint>, CliError> {
    let points = match format {
        PointFormat::Json => parse_json_points(text)?,
        PointFormat::Csv => parse_csv_points(text)?,
    };
    if points.is_empty() {
        return Err(CliError::Input("no points in input".into()));
    }
    Ok(points)
}

fn parse_json_points(text: &str) -> Result<Vec<ProjPoint>, CliError> {
    let bad = |m: String| CliError::Input(format!("malformed JSON point file: {m}"));
    let doc: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let array = match &doc {
        Value::Array(a) => a,
        Value::Object(o) => match o.get("points") {
            Some(Value::Array(a)) => a,
            _ => return Err(bad("missing \"points\" array".into())),
        },
        _ => return Err(bad("expected an object or an array".into())),
    };
    array
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let coords = p
                .as_array()
                .ok_or_else(|| bad(format!("point {i} is not an array")))?
                .iter()
                .map(|c| match c {
                    Value::String(s) => Ok(parse_rational(s)?),
                    Value::Number(n) if n.is_i64() || n.is_u64() => {
                        Ok(parse_rational(&n.to_string())?)
                    }
                    other => Err(bad(format!("point {i}: coordinate {other} is not exact"))),
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            point_from(i, &coords)
        })
        .collect()
}

fn parse_csv_points(text: &str) -> Result<Vec<ProjPoint>, CliError> {
    let bad = |m: String| CliError::Input(format!("malformed CSV point file: {m}"));
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| bad(e.to_string()))?.clone();
    let mut columns = Vec::new();
    while let Some(pos) = header
        .iter()
        .position(|h| h == format!("x{}", columns.len()))
    {
        columns.push(pos);
    }
    if columns.is_empty() {
        return Err(bad("header must name coordinate columns x0, x1, ...".into()));
    }
    reader
        .records()
        .enumerate()
        .map(|(i, rec)| {
            let rec = rec.map_err(|e| bad(e.to_string()))?;
            let coords = columns
                .iter()
                .map(|&c| match rec.get(c) {
                    Some(field) => Ok(parse_rational(field)?),
                    None => Err(bad(format!("row {} is too short", i + 1))),
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            point_from(i, &coords)
        })
        .collect()
}

fn point_from(i: usize, coords: &[Rational]) -> Result<ProjPoint, CliError> {
    ProjPoint::new(coords).map_err(|e| CliError::Input(format!("point {i}: {e}")))
}
