//! Matrix document format: a small JSON schema with row-major [re, im]
//! pairs and a string-valued metadata map. Floats are rendered with 17
//! significant digits so that serialize → parse is bit-exact.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use braidmat::ComplexDense;
use num_complex::Complex64;
use serde::Deserialize;

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct MatrixDocument {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<[f64; 2]>,
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
}

impl MatrixDocument {
    pub fn from_matrix(m: &ComplexDense, meta: BTreeMap<String, String>) -> Self {
        MatrixDocument {
            rows: m.rows(),
            cols: m.cols(),
            data: m.data().iter().map(|z| [z.re, z.im]).collect(),
            meta,
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexDense, String> {
        ComplexDense::from_vec(
            self.rows,
            self.cols,
            self.data.iter().map(|[re, im]| Complex64::new(*re, *im)).collect(),
        )
        .map_err(|e| e.to_string())
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("bad matrix document: {e}"))
    }

    /// Hand-rolled writer: 17 significant digits guarantee f64 round-trip.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"rows\": {},", self.rows);
        let _ = writeln!(out, "  \"cols\": {},", self.cols);
        out.push_str("  \"data\": [");
        for (i, [re, im]) in self.data.iter().enumerate() {
            if i % self.cols == 0 {
                out.push_str("\n    ");
            }
            let _ = write!(out, "[{},{}]", fmt_f64(*re), fmt_f64(*im));
            if i + 1 != self.data.len() {
                out.push(',');
            }
        }
        out.push_str("\n  ],\n  \"meta\": {");
        for (i, (k, v)) in self.meta.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "\n    {}: {}", json_string(k), json_string(v));
        }
        if !self.meta.is_empty() {
            out.push_str("\n  ");
        }
        out.push_str("}\n}\n");
        out
    }
}

fn fmt_f64(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        // integers (including -0) stay readable
        format!("{:.1}", x)
    } else {
        format!("{:.16e}", x)
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}
