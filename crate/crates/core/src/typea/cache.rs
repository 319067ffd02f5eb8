//! On-disk cache of type-A decomposition matrices, one text file per
//! `(m, e)`:
//!
//! ```text
//! 3 3 convention=dual-specht
//! [3] 1 0
//! [2,1] 1 1
//! [1,1,1] 0 1
//! ```
//!
//! Columns are implied (the `e`-restricted partitions of `m`, in the same
//! order as the rows). A file that fails to parse or to match the expected
//! shape is recomputed and overwritten rather than trusted.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::combinatorics::{partitions, Partition};
use crate::error::{Error, Result};

use super::{compute_type_a, TypeADecompositionMatrix};

const CONVENTION: &str = "convention=dual-specht";

/// `typea-m{m}-e{e}.txt`.
pub fn cache_file_name(m: usize, e: usize) -> String {
    format!("typea-m{m}-e{e}.txt")
}

/// Serializes `mat` to `path`, writing to a temporary file first so that a
/// concurrent reader never sees a partial file.
pub fn write_cache_file(mat: &TypeADecompositionMatrix, path: &Path) -> Result<()> {
    let mut text = format!("{} {} {CONVENTION}\n", mat.m, mat.e);
    for (beta, row) in mat.rows.iter().zip(&mat.entries) {
        text.push_str(&beta.to_string());
        for d in row {
            text.push_str(&format!(" {d}"));
        }
        text.push('\n');
    }
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| Error::Io(e.to_string()))?;
    Ok(())
}

/// Parses a cache file and checks it against the expected `(m, e)` shape
/// and the unitriangularity invariants.
pub fn read_cache_file(path: &Path, m: usize, e: usize) -> Result<TypeADecompositionMatrix> {
    let text = fs::read_to_string(path)?;
    let bad = |why: &str| Error::Parse(format!("{}: {why}", path.display()));
    let mut lines = text.lines();
    let header: Vec<&str> = lines
        .next()
        .ok_or_else(|| bad("empty file"))?
        .split_whitespace()
        .collect();
    if header != [m.to_string().as_str(), e.to_string().as_str(), CONVENTION] {
        return Err(bad("header does not match"));
    }
    let rows = partitions(m);
    let cols: Vec<Partition> = rows
        .iter()
        .filter(|p| p.is_e_restricted(e))
        .cloned()
        .collect();
    let mut entries = Vec::with_capacity(rows.len());
    for expected in &rows {
        let line = lines.next().ok_or_else(|| bad("too few rows"))?;
        let mut fields = line.split_whitespace();
        let label: Partition = fields.next().ok_or_else(|| bad("blank row"))?.parse()?;
        if &label != expected {
            return Err(bad(&format!("expected row {expected}, found {label}")));
        }
        let row: Vec<u64> = fields
            .map(|f| f.parse().map_err(|_| bad(&format!("bad entry {f:?}"))))
            .collect::<Result<_>>()?;
        if row.len() != cols.len() {
            return Err(bad(&format!(
                "row {label} has {} entries, expected {}",
                row.len(),
                cols.len()
            )));
        }
        entries.push(row);
    }
    if lines.any(|l| !l.trim().is_empty()) {
        return Err(bad("trailing rows"));
    }
    let mat = TypeADecompositionMatrix {
        m,
        e,
        rows,
        cols,
        entries,
    };
    mat.check_unitriangular()
        .map_err(|err| bad(&err.to_string()))?;
    Ok(mat)
}

fn cache_path(dir: &Path, m: usize, e: usize) -> PathBuf {
    dir.join(cache_file_name(m, e))
}

/// Reads the matrix from `dir` if a valid cache file exists; otherwise
/// computes it and writes the file.
pub fn load_or_compute(m: usize, e: usize, dir: &Path) -> Result<TypeADecompositionMatrix> {
    let path = cache_path(dir, m, e);
    if path.exists() {
        if let Ok(mat) = read_cache_file(&path, m, e) {
            return Ok(mat);
        }
    }
    let mat = compute_type_a(m, e)?;
    write_cache_file(&mat, &path)?;
    Ok(mat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_format() {
        let dir = tempfile::tempdir().unwrap();
        let mat = load_or_compute(3, 3, dir.path()).unwrap();
        let path = dir.path().join(cache_file_name(3, 3));
        assert_eq!(
            fs::read_to_string(&path).unwrap(),
            "3 3 convention=dual-specht\n[3] 1 0\n[2,1] 1 1\n[1,1,1] 0 1\n"
        );
        assert_eq!(read_cache_file(&path, 3, 3).unwrap(), mat);
        assert_eq!(load_or_compute(3, 3, dir.path()).unwrap(), mat);
    }

    #[test]
    fn corrupt_file_is_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(cache_file_name(3, 2));
        fs::write(&path, "3 2 convention=dual-specht\n[3] 7 7\n").unwrap();
        assert!(read_cache_file(&path, 3, 2).is_err());
        let mat = load_or_compute(3, 2, dir.path()).unwrap();
        assert_eq!(mat, compute_type_a(3, 2).unwrap());
        assert_eq!(read_cache_file(&path, 3, 2).unwrap(), mat);
    }

    #[test]
    fn wrong_header_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.txt");
        fs::write(&path, "3 5 convention=dual-specht\n").unwrap();
        assert!(read_cache_file(&path, 3, 3).is_err());
    }
}
