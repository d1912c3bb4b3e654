//! JSON sample files and coefficient files.
//!
//! Sample file:
//!
//! ```json
//! { "grid": { "family": 0, "n": 1 }, "p": 1,
//!   "rows": [[1.0, -0.5, -0.5], [0.0, -0.866, 0.866]], "mode": "strict" }
//! ```
//!
//! The grid may give `n` or the node count `N` (or both, if consistent);
//! `mode` is optional. Coefficient files are written with a fixed field
//! order and every number in 17 significant digits, so rebuilding from the
//! same input is byte-identical and re-reading is lossless.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::Error;
use crate::grid::{GridFamily, GridSpec};
use crate::hermite::{BuildMode, HermiteTrigPoly};
use crate::spectral::HermiteSamples;

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("{0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Invalid(#[from] Error),
}

fn field_error(field: impl Into<String>, message: impl Into<String>) -> FileError {
    FileError::Field {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridDescriptor {
    family: i64,
    n: Option<i64>,
    #[serde(rename = "N")]
    node_count: Option<i64>,
}

impl GridDescriptor {
    fn resolve(&self) -> Result<GridSpec, FileError> {
        let family = GridFamily::from_index(self.family)
            .map_err(|e| field_error("grid.family", e.to_string()))?;
        let from_count = match self.node_count {
            Some(nn) if nn < 0 => {
                return Err(field_error("grid.N", format!("must be positive, got {nn}")))
            }
            Some(nn) => Some(
                GridSpec::from_node_count(family, nn as usize)
                    .map_err(|e| field_error("grid.N", e.to_string()))?,
            ),
            None => None,
        };
        let from_n = match self.n {
            Some(n) if n < 1 => {
                return Err(field_error(
                    "grid.n",
                    format!("must be at least 1, got {n}"),
                ))
            }
            Some(n) => Some(GridSpec::new(family, n as usize)),
            None => None,
        };
        match (from_n, from_count) {
            (Some(a), Some(b)) if a != b => Err(field_error(
                "grid",
                format!(
                    "n = {} implies N = {}, but N = {} was given",
                    a.n(),
                    a.node_count(),
                    b.node_count()
                ),
            )),
            (Some(g), _) | (None, Some(g)) => Ok(g),
            (None, None) => Err(field_error("grid", "one of 'n' or 'N' is required")),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSampleFile {
    grid: GridDescriptor,
    p: usize,
    rows: Vec<Vec<f64>>,
    #[serde(default)]
    mode: Option<BuildMode>,
}

/// A parsed sample file.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleFile {
    pub samples: HermiteSamples<f64>,
    pub mode: Option<BuildMode>,
}

pub fn parse_sample_file(text: &str) -> Result<SampleFile, FileError> {
    let raw: RawSampleFile = serde_json::from_str(text)?;
    let grid = raw.grid.resolve()?;
    if raw.p > crate::hermite::MAX_ORDER {
        return Err(field_error("p", Error::OrderTooHigh(raw.p).to_string()));
    }
    if raw.rows.len() != raw.p + 1 {
        return Err(field_error(
            "rows",
            format!(
                "expected p + 1 = {} rows, found {}",
                raw.p + 1,
                raw.rows.len()
            ),
        ));
    }
    for (m, row) in raw.rows.iter().enumerate() {
        if row.len() != grid.node_count() {
            return Err(field_error(
                format!("rows[{m}]"),
                format!(
                    "expected N = {} entries, found {}",
                    grid.node_count(),
                    row.len()
                ),
            ));
        }
    }
    let samples = HermiteSamples::new(grid, raw.p, raw.rows)?;
    Ok(SampleFile {
        samples,
        mode: raw.mode,
    })
}

pub fn write_sample_file(samples: &HermiteSamples<f64>, mode: Option<BuildMode>) -> String {
    let grid = samples.grid();
    let mut out = String::from("{\n");
    let _ = writeln!(
        out,
        "  \"grid\": {{\"family\": {}, \"n\": {}, \"N\": {}}},",
        grid.family().index(),
        grid.n(),
        grid.node_count()
    );
    let _ = writeln!(out, "  \"p\": {},", samples.p());
    if let Some(mode) = mode {
        let _ = writeln!(out, "  \"mode\": \"{mode}\",");
    }
    out.push_str("  \"rows\": [\n");
    let rows: Vec<String> = samples
        .rows()
        .iter()
        .map(|row| {
            format!(
                "    [{}]",
                row.iter()
                    .map(|&v| fmt_real(v))
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        })
        .collect();
    out.push_str(&rows.join(",\n"));
    out.push_str("\n  ]\n}\n");
    out
}

/// Formats with 17 significant digits in JSON-compatible exponent form.
pub fn fmt_real(v: f64) -> String {
    format!("{v:.16e}")
}

fn write_pairs(out: &mut String, key: &str, map: &BTreeMap<usize, f64>) {
    let _ = write!(out, "  \"{key}\": [");
    let entries: Vec<String> = map
        .iter()
        .map(|(w, c)| format!("\n    [{w}, {}]", fmt_real(*c)))
        .collect();
    out.push_str(&entries.join(","));
    out.push_str("\n  ],\n");
}

pub fn write_poly_file(poly: &HermiteTrigPoly<f64>) -> String {
    let grid = poly.grid();
    let mut out = String::from("{\n");
    let _ = writeln!(
        out,
        "  \"grid\": {{\"family\": {}, \"n\": {}, \"N\": {}}},",
        grid.family().index(),
        grid.n(),
        grid.node_count()
    );
    let _ = writeln!(out, "  \"p\": {},", poly.p());
    let _ = writeln!(out, "  \"mode\": \"{}\",", poly.mode());
    let _ = writeln!(out, "  \"const_term\": {},", fmt_real(poly.const_term()));
    write_pairs(&mut out, "cos", poly.cos_coeffs());
    write_pairs(&mut out, "sin", poly.sin_coeffs());
    let means: Vec<String> = poly.mean_terms().iter().map(|&v| fmt_real(v)).collect();
    let _ = writeln!(out, "  \"mean_terms\": [{}]", means.join(", "));
    out.push_str("}\n");
    out
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPolyFile {
    grid: GridDescriptor,
    p: usize,
    mode: BuildMode,
    const_term: f64,
    cos: Vec<(usize, f64)>,
    sin: Vec<(usize, f64)>,
    mean_terms: Vec<f64>,
}

fn to_map(field: &str, pairs: Vec<(usize, f64)>) -> Result<BTreeMap<usize, f64>, FileError> {
    let len = pairs.len();
    let map: BTreeMap<usize, f64> = pairs.into_iter().collect();
    if map.len() != len {
        return Err(field_error(field, "duplicate frequency"));
    }
    Ok(map)
}

pub fn parse_poly_file(text: &str) -> Result<HermiteTrigPoly<f64>, FileError> {
    let raw: RawPolyFile = serde_json::from_str(text)?;
    let grid = raw.grid.resolve()?;
    let cos = to_map("cos", raw.cos)?;
    let sin = to_map("sin", raw.sin)?;
    Ok(HermiteTrigPoly::from_parts(
        grid,
        raw.p,
        raw.mode,
        raw.const_term,
        cos,
        sin,
        raw.mean_terms,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;
    use crate::hermite::build_hermite;

    const COS_T: &str = r#"{
        "grid": {"family": 0, "n": 1},
        "p": 1,
        "rows": [[1.0, -0.5, -0.5], [0.0, -0.8660254037844386, 0.8660254037844387]]
    }"#;

    #[test]
    fn parse_basic() {
        let file = parse_sample_file(COS_T).unwrap();
        assert_eq!(file.mode, None);
        assert_eq!(file.samples.grid(), make_grid(0, 1).unwrap());
        assert_eq!(file.samples.row(0), &[1.0, -0.5, -0.5]);
    }

    #[test]
    fn even_node_count_rejected() {
        let text = r#"{"grid": {"family": 0, "N": 4}, "p": 0, "rows": [[1, 2, 3, 4]]}"#;
        let err = parse_sample_file(text).unwrap_err();
        assert!(
            err.to_string().contains("N must be odd (N = 2n+1)"),
            "{err}"
        );
    }

    #[test]
    fn dimension_errors_name_the_field() {
        let text = r#"{"grid": {"family": 1, "n": 1}, "p": 1, "rows": [[1, 2, 3], [1, 2]]}"#;
        let err = parse_sample_file(text).unwrap_err().to_string();
        assert_eq!(err, "rows[1]: expected N = 3 entries, found 2");
        let text = r#"{"grid": {"family": 1, "n": 1}, "p": 2, "rows": [[1, 2, 3]]}"#;
        assert!(parse_sample_file(text)
            .unwrap_err()
            .to_string()
            .starts_with("rows:"));
        let text = r#"{"grid": {"family": 1, "n": 2, "N": 7}, "p": 0, "rows": [[1, 2, 3, 4, 5]]}"#;
        assert!(parse_sample_file(text)
            .unwrap_err()
            .to_string()
            .starts_with("grid:"));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_sample_file("{\n  \"grid\": {\"family\": 0, \"n\": 1},\n  \"p\": x\n}")
            .unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }

    #[test]
    fn poly_file_round_trip_is_exact() {
        let g = make_grid(1, 3).unwrap();
        let s = HermiteSamples::from_fn(g, 2, |t: f64, m| (t + m as f64).sin().exp());
        let poly = build_hermite(&s, BuildMode::PaperHTerms).unwrap();
        let text = write_poly_file(&poly);
        let back = parse_poly_file(&text).unwrap();
        assert_eq!(back, poly);
        assert_eq!(write_poly_file(&back), text);
    }

    #[test]
    fn sample_file_round_trip() {
        let g = make_grid(0, 2).unwrap();
        let s = HermiteSamples::from_fn(g, 1, |t: f64, m| (t * (m + 1) as f64).cos() / 3.0);
        let text = write_sample_file(&s, Some(BuildMode::StrictCentered));
        let back = parse_sample_file(&text).unwrap();
        assert_eq!(back.samples, s);
        assert_eq!(back.mode, Some(BuildMode::StrictCentered));
    }

    #[test]
    fn poly_file_frequency_check() {
        let g = make_grid(0, 1).unwrap();
        let s = HermiteSamples::new(g, 1, vec![vec![0.0; 3]; 2]).unwrap();
        let text = write_poly_file(&build_hermite(&s, BuildMode::StrictCentered).unwrap());
        let bad = text.replacen("[2, ", "[5, ", 1);
        assert!(matches!(
            parse_poly_file(&bad),
            Err(FileError::Invalid(Error::MalformedPolynomial(_)))
        ));
    }
}
