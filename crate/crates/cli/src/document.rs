//! On-disk document format for triangles and gamma-matrices.
//!
//! Every entry is a decimal string (`"123"` or `"-3/2"`): the values
//! outgrow 64-bit integers quickly and JSON numbers are lossy. The JSON
//! layout is deterministic (struct field order, sorted maps), so
//! serialize-parse-serialize is byte-identical.

use std::collections::BTreeMap;

use riordan_gamma::{GammaMatrix, Rat, Triangle};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleDocument {
    pub schema_version: u32,
    /// What the rows are, e.g. `"triangle:ordinary"` or `"gamma:eulerian"`.
    pub kind: String,
    /// Generation parameters as strings (`r`, `rows`, `method`, ...).
    pub params: BTreeMap<String, String>,
    /// Row-major entries, exact decimal integer/rational strings.
    pub rows: Vec<Vec<String>>,
    /// Free-form provenance.
    pub meta: BTreeMap<String, String>,
}

impl TriangleDocument {
    pub fn new(kind: impl Into<String>, params: BTreeMap<String, String>, rows: Vec<Vec<String>>) -> Self {
        let mut meta = BTreeMap::new();
        meta.insert("generator".to_string(), format!("riordan-gamma {}", env!("CARGO_PKG_VERSION")));
        TriangleDocument { schema_version: SCHEMA_VERSION, kind: kind.into(), params, rows, meta }
    }

    pub fn from_triangle(kind: impl Into<String>, params: BTreeMap<String, String>, t: &Triangle) -> Self {
        Self::new(kind, params, render_rows(t.rows()))
    }

    pub fn from_gamma(kind: impl Into<String>, params: BTreeMap<String, String>, g: &GammaMatrix) -> Self {
        Self::new(kind, params, render_rows(g.rows()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let doc: TriangleDocument =
            serde_json::from_str(text).map_err(|e| format!("bad document JSON: {e}"))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                doc.schema_version
            ));
        }
        Ok(doc)
    }

    /// Parse entries back to exact rationals.
    pub fn parsed_rows(&self) -> Result<Vec<Vec<Rat>>, String> {
        self.rows
            .iter()
            .enumerate()
            .map(|(n, row)| {
                row.iter()
                    .map(|e| e.parse::<Rat>().map_err(|err| format!("row {n}: {err}")))
                    .collect()
            })
            .collect()
    }

    /// Interpret the rows as a lower triangle (row `n` has `n+1` entries).
    pub fn to_triangle(&self) -> Result<Triangle, String> {
        let rows = self.parsed_rows()?;
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(format!("row {n} has {} entries, expected {}", row.len(), n + 1));
            }
        }
        Ok(Triangle::from_rows(rows))
    }
}

pub fn render_rows(rows: &[Vec<Rat>]) -> Vec<Vec<String>> {
    rows.iter().map(|row| row.iter().map(Rat::to_string).collect()).collect()
}

pub fn rows_to_plain(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn rows_to_csv(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn parse_delimited(text: &str, sep: char) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split(sep)
                .map(|e| e.trim().to_string())
                .filter(|e| !e.is_empty())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> TriangleDocument {
        let mut params = BTreeMap::new();
        params.insert("r".to_string(), "1".to_string());
        params.insert("rows".to_string(), "3".to_string());
        TriangleDocument::new(
            "triangle:ordinary",
            params,
            vec![
                vec!["1".into()],
                vec!["1".into(), "1".into()],
                vec!["1".into(), "3/2".into(), "1".into()],
            ],
        )
    }

    #[test]
    fn json_round_trip_is_byte_exact() {
        let doc = sample();
        let json = doc.to_json();
        let back = TriangleDocument::from_json(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn entries_parse_to_exact_rationals() {
        let t = sample().to_triangle().unwrap();
        assert_eq!(t.entry(2, 1), &Rat::ratio(3, 2));
    }

    #[test]
    fn ragged_rows_are_rejected() {
        let mut doc = sample();
        doc.rows[1].push("9".into());
        assert!(doc.to_triangle().is_err());
    }

    #[test]
    fn schema_version_is_checked() {
        let mut doc = sample();
        doc.schema_version = 99;
        assert!(TriangleDocument::from_json(&doc.to_json()).is_err());
    }

    #[test]
    fn delimited_formats_agree() {
        let doc = sample();
        let plain = rows_to_plain(&doc.rows);
        let csv = rows_to_csv(&doc.rows);
        assert_eq!(parse_delimited(&plain, ' '), doc.rows);
        assert_eq!(parse_delimited(&csv, ','), doc.rows);
    }
}
