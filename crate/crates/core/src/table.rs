//! Pairwise tables over all comparable pairs, rendered as aligned text, CSV
//! or JSON. Row order is fixed by the element enumeration, so output does
//! not depend on how the memo tables were filled.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::ext::{comparable_pairs, ext1_dim, ExtMemo};
use crate::group::WeylGroup;
use crate::poly::IntPolynomial;
use crate::rpoly::{r_polynomial, RMemo};

use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableOp {
    Ext1,
    RPoly,
    Hom,
    Bruhat,
    /// `ext1` and `rpoly` side by side
    All,
}

impl FromStr for TableOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "ext1" => TableOp::Ext1,
            "rpoly" => TableOp::RPoly,
            "hom" => TableOp::Hom,
            "bruhat" => TableOp::Bruhat,
            "all" => TableOp::All,
            _ => return Err(format!("unknown table operation `{s}`")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "text" => Format::Text,
            "json" | "json-like" | "structured" => Format::Json,
            "csv" => Format::Csv,
            _ => return Err(format!("unknown format `{s}`")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub v: String,
    pub w: String,
    pub len_v: usize,
    pub len_w: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ext1: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rpoly: Option<IntPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hom: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bruhat: Option<bool>,
}

impl TableRow {
    fn values(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(d) = self.ext1 {
            out.push(d.to_string());
        }
        if let Some(r) = &self.rpoly {
            out.push(coefficient_list(r));
        }
        if let Some(h) = self.hom {
            out.push(h.to_string());
        }
        if let Some(b) = self.bruhat {
            out.push(b.to_string());
        }
        out
    }
}

/// `[-1, 2, -2, 1]` for `q^3 - 2q^2 + 2q - 1`.
pub fn coefficient_list(r: &IntPolynomial) -> String {
    let items: Vec<String> = r.coeffs().iter().map(i64::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn value_columns(op: TableOp) -> &'static [&'static str] {
    match op {
        TableOp::Ext1 => &["ext1"],
        TableOp::RPoly => &["rpoly"],
        TableOp::Hom => &["hom"],
        TableOp::Bruhat => &["bruhat"],
        TableOp::All => &["ext1", "rpoly"],
    }
}

/// One row per pair `v <= w`, parallel over rows on the current rayon pool.
pub fn build_rows(g: &WeylGroup, op: TableOp) -> Vec<TableRow> {
    let ext_memo = ExtMemo::new();
    let r_memo = RMemo::new();
    comparable_pairs(g, &g.enumerate())
        .into_par_iter()
        .map(|(v, w)| {
            let wants_ext = matches!(op, TableOp::Ext1 | TableOp::All);
            let wants_r = matches!(op, TableOp::RPoly | TableOp::All);
            TableRow {
                v: g.format_element(&v),
                w: g.format_element(&w),
                len_v: g.length(&v),
                len_w: g.length(&w),
                ext1: wants_ext.then(|| ext1_dim(g, &v, &w, &ext_memo)),
                rpoly: wants_r.then(|| r_polynomial(g, &v, &w, &r_memo)),
                hom: (op == TableOp::Hom).then(|| g.hom_dim(&v, &w)),
                bruhat: (op == TableOp::Bruhat).then(|| g.bruhat_leq(&v, &w)),
            }
        })
        .collect()
}

pub fn render_table(g: &WeylGroup, op: TableOp, format: Format) -> String {
    render_rows(&build_rows(g, op), op, format)
}

pub fn render_rows(rows: &[TableRow], op: TableOp, format: Format) -> String {
    let mut header = vec!["v", "w", "len_v", "len_w"];
    header.extend(value_columns(op));
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(&header).expect("in-memory write");
            for row in rows {
                let mut record = vec![
                    row.v.clone(),
                    row.w.clone(),
                    row.len_v.to_string(),
                    row.len_w.to_string(),
                ];
                record.extend(row.values());
                writer.write_record(&record).expect("in-memory write");
            }
            String::from_utf8(writer.into_inner().expect("flush")).expect("utf8")
        }
        Format::Text => {
            let cells: Vec<Vec<String>> = std::iter::once(header.iter().map(|s| s.to_string()).collect())
                .chain(rows.iter().map(|row| {
                    let mut c = vec![
                        row.v.clone(),
                        row.w.clone(),
                        row.len_v.to_string(),
                        row.len_w.to_string(),
                    ];
                    c.extend(row.values());
                    c
                }))
                .collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|k| cells.iter().map(|r| r[k].len()).max().unwrap_or(0))
                .collect();
            let mut out = String::new();
            for row in &cells {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            }
            out
        }
    }
}

impl fmt::Display for TableOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableOp::Ext1 => "ext1",
            TableOp::RPoly => "rpoly",
            TableOp::Hom => "hom",
            TableOp::Bruhat => "bruhat",
            TableOp::All => "all",
        })
    }
}
