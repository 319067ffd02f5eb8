//! Output formats: an aligned text table, CSV, and a JSON document.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{DnDecompositionMatrix, DnLabel};

/// Conventions that fix the output uniquely.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Convention {
    /// `"+leading"` or `"-leading"`: the sign of the leading coefficient of
    /// the square root `g_β` used throughout.
    pub sqrt_sign: String,
    /// Pair representatives: larger size first, then lexicographically larger.
    pub pair_order: String,
}

/// The serialized form of a [`DnDecompositionMatrix`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub n: usize,
    pub e: usize,
    pub rows: Vec<DnLabel>,
    pub cols: Vec<DnLabel>,
    pub entries: Vec<Vec<u64>>,
    pub convention: Convention,
}

impl MatrixDocument {
    pub fn new(mat: &DnDecompositionMatrix) -> Self {
        Self {
            n: mat.n,
            e: mat.e,
            rows: mat.rows.clone(),
            cols: mat.cols.clone(),
            entries: mat.entries.clone(),
            convention: Convention {
                sqrt_sign: if mat.signs.minus {
                    "-leading"
                } else {
                    "+leading"
                }
                .to_string(),
                pair_order: "size-then-lex".to_string(),
            },
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json(mat: &DnDecompositionMatrix) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&MatrixDocument::new(mat))
        .map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// CSV with a header row `label,<column labels>`.
pub fn to_csv(mat: &DnDecompositionMatrix) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    let header: Vec<String> = std::iter::once("label".to_string())
        .chain(mat.cols.iter().map(|c| c.to_string()))
        .collect();
    w.write_record(&header).map_err(io)?;
    for (label, row) in mat.rows.iter().zip(&mat.entries) {
        let record: Vec<String> = std::iter::once(label.to_string())
            .chain(row.iter().map(|x| x.to_string()))
            .collect();
        w.write_record(&record).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// Aligned table: a header of column labels, then one line per row label.
pub fn to_text(mat: &DnDecompositionMatrix) -> String {
    let row_labels: Vec<String> = mat.rows.iter().map(|l| l.to_string()).collect();
    let col_labels: Vec<String> = mat.cols.iter().map(|l| l.to_string()).collect();
    let lw = row_labels.iter().map(String::len).max().unwrap_or(0);
    let mut out = format!("{:lw$}", "");
    for c in &col_labels {
        out.push_str("  ");
        out.push_str(c);
    }
    out.push('\n');
    for (label, row) in row_labels.iter().zip(&mat.entries) {
        out.push_str(&format!("{label:lw$}"));
        for (x, c) in row.iter().zip(&col_labels) {
            out.push_str(&format!("  {x:>w$}", w = c.len()));
        }
        out.push('\n');
    }
    out
}
