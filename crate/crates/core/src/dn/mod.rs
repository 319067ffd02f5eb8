//! The decomposition matrix of `H_q(D_n)` at a primitive `e`-th root of
//! unity in characteristic 0, in the separated case `∏_{i<n}(1+q^i) ≠ 0`.
//!
//! The matrix is block diagonal, one block per `a > n − a` (pairs of sizes
//! `(a, n−a)`, entries products of type-A numbers) plus, for `n = 2m`, a
//! block with the equal-size pairs and the split labels `(β|β)±`.

mod entries;
mod format;
mod label;

use std::path::PathBuf;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::typea::{
    decomposition_matrix_type_a_cached, simple_dimensions, TypeADecompositionMatrix,
};

pub use entries::{
    g_ratio, mixed_row_entry, pair_pair_entry, pair_split_entry, separation_check,
    separation_failure, split_entries_from, split_entry_minus, split_entry_plus, split_pair_entry,
    split_row_pair_entry, tensor_block_entry, SignConvention,
};
pub use format::{to_csv, to_json, to_text, MatrixDocument};
pub use label::{all_labels, pair_labels, split_labels, DnLabel};

use entries::{binomial, d, require_separated};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DnDecompositionMatrix {
    pub n: usize,
    pub e: usize,
    /// Specht-side labels: every label of `n`.
    pub rows: Vec<DnLabel>,
    /// Simple-side labels: the `e`-restricted labels of `n`.
    pub cols: Vec<DnLabel>,
    pub entries: Vec<Vec<u64>>,
    pub signs: SignConvention,
}

impl DnDecompositionMatrix {
    pub fn row_index(&self, l: &DnLabel) -> Option<usize> {
        self.rows.iter().position(|r| r == l)
    }

    pub fn col_index(&self, l: &DnLabel) -> Option<usize> {
        self.cols.iter().position(|c| c == l)
    }

    pub fn get(&self, row: &DnLabel, col: &DnLabel) -> Option<u64> {
        Some(self.entries[self.row_index(row)?][self.col_index(col)?])
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(r, row)| row.iter().enumerate().all(|(c, &x)| x == u64::from(r == c)))
    }
}

/// Options for [`full_matrix_with`].
#[derive(Clone, Debug, Default)]
pub struct DnOptions {
    /// Directory for the on-disk type-A cache (none: memory only).
    pub cache_dir: Option<PathBuf>,
    pub signs: SignConvention,
    pub exec: Exec,
}

/// One diagonal block of the matrix.
#[derive(Clone, Copy, Debug)]
enum Block {
    /// Pairs of sizes `(a, n−a)` with `a > n − a`.
    Tensor(usize),
    /// Equal-size pairs and split labels for `n = 2m`.
    Middle(usize),
}

struct BlockResult {
    rows: Vec<DnLabel>,
    cols: Vec<DnLabel>,
    entries: Vec<Vec<u64>>,
}

fn type_a(m: usize, e: usize, opts: &DnOptions) -> Result<Arc<TypeADecompositionMatrix>> {
    decomposition_matrix_type_a_cached(m, e, opts.cache_dir.as_deref())
}

fn pair_parts(l: &DnLabel) -> (&Partition, &Partition) {
    match l {
        DnLabel::Pair(x, y) => (x, y),
        _ => unreachable!("pair label expected"),
    }
}

fn compute_block(block: Block, n: usize, e: usize, opts: &DnOptions) -> Result<BlockResult> {
    match block {
        Block::Tensor(a) => {
            let rows = pair_labels(n, a);
            let cols: Vec<DnLabel> = rows
                .iter()
                .filter(|l| l.is_e_restricted(e))
                .cloned()
                .collect();
            let (d1, d2) = (type_a(a, e, opts)?, type_a(n - a, e, opts)?);
            let entries = rows
                .iter()
                .map(|r| {
                    let (l1, l2) = pair_parts(r);
                    cols.iter()
                        .map(|c| {
                            let (m1, m2) = pair_parts(c);
                            Ok(d(&d1, l1, m1)? * d(&d2, l2, m2)?)
                        })
                        .collect::<Result<Vec<u64>>>()
                })
                .collect::<Result<_>>()?;
            Ok(BlockResult {
                rows,
                cols,
                entries,
            })
        }
        Block::Middle(m) => {
            let mut rows = pair_labels(n, m);
            rows.extend(split_labels(m));
            let cols: Vec<DnLabel> = rows
                .iter()
                .filter(|l| l.is_e_restricted(e))
                .cloned()
                .collect();
            let mat = type_a(m, e, opts)?;
            let mut entries = Vec::with_capacity(rows.len());
            for r in &rows {
                let mut row = Vec::with_capacity(cols.len());
                for c in &cols {
                    let x = match (r, c) {
                        (DnLabel::Pair(l1, l2), DnLabel::Pair(m1, m2)) => {
                            pair_pair_entry(&mat, (l1, l2), (m1, m2))?
                        }
                        (DnLabel::Pair(l1, l2), _) => {
                            pair_split_entry(&mat, (l1, l2), c.split_partition().expect("split"))?
                        }
                        (_, DnLabel::Pair(m1, m2)) => {
                            split_pair_entry(&mat, r.split_partition().expect("split"), (m1, m2))?
                        }
                        _ => {
                            let beta = r.split_partition().expect("split");
                            let alpha = c.split_partition().expect("split");
                            let (plus, minus) = split_entries_from(
                                beta,
                                alpha,
                                d(&mat, beta, alpha)?,
                                e,
                                &opts.signs,
                            )?;
                            // [S⁻:D⁻] = [S⁺:D⁺] and [S⁻:D⁺] = [S⁺:D⁻]
                            let same_sign = matches!(
                                (r, c),
                                (DnLabel::SplitPlus(_), DnLabel::SplitPlus(_))
                                    | (DnLabel::SplitMinus(_), DnLabel::SplitMinus(_))
                            );
                            if same_sign {
                                plus
                            } else {
                                minus
                            }
                        }
                    };
                    row.push(x);
                }
                entries.push(row);
            }
            Ok(BlockResult {
                rows,
                cols,
                entries,
            })
        }
    }
}

/// The decomposition matrix of `H_q(D_n)` at `q = ζ_e` with the default
/// options (positive square roots, memory-only cache, default execution).
pub fn full_matrix(n: usize, e: usize) -> Result<DnDecompositionMatrix> {
    full_matrix_with(n, e, &DnOptions::default())
}

/// Assembles all blocks (concurrently under [`Exec::Parallel`]) and checks
/// the result with [`check_matrix`].
pub fn full_matrix_with(n: usize, e: usize, opts: &DnOptions) -> Result<DnDecompositionMatrix> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("n = {n} must be at least 2")));
    }
    if e < 2 {
        return Err(Error::InvalidInput(format!("e = {e} must be at least 2")));
    }
    require_separated(n, e)?;
    let mut blocks: Vec<Block> = (n / 2 + 1..=n).rev().map(Block::Tensor).collect();
    if n.is_multiple_of(2) {
        blocks.push(Block::Middle(n / 2));
    }
    let results = opts
        .exec
        .try_map(&blocks, |&b| compute_block(b, n, e, opts))?;
    let total_cols: usize = results.iter().map(|b| b.cols.len()).sum();
    let mut mat = DnDecompositionMatrix {
        n,
        e,
        rows: Vec::new(),
        cols: Vec::new(),
        entries: Vec::new(),
        signs: opts.signs.clone(),
    };
    for b in results {
        let offset = mat.cols.len();
        for row in b.entries {
            let mut full = vec![0; total_cols];
            full[offset..offset + row.len()].copy_from_slice(&row);
            mat.entries.push(full);
        }
        mat.rows.extend(b.rows);
        mat.cols.extend(b.cols);
    }
    check_matrix(&mat, opts)?;
    Ok(mat)
}

/// Dimensions of the modules of `H_q(D_n)` labelled by `rows` and `cols`:
/// `C(n,a) dim X_{λ⁽¹⁾} dim X_{λ⁽²⁾}` for pairs and half of
/// `C(n,m) (dim X_β)²` for split labels, with `X` the Specht modules (rows)
/// or simple modules (columns) of type A.
fn module_dims(
    mat: &DnDecompositionMatrix,
    opts: &DnOptions,
) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    let n = mat.n;
    let mut simple = std::collections::HashMap::new();
    for m in 0..=n {
        for (alpha, dim) in simple_dimensions(&*type_a(m, mat.e, opts)?)? {
            simple.insert(alpha, dim);
        }
    }
    let specht = |p: &Partition| BigInt::from(p.count_standard_tableaux());
    let dim = |l: &DnLabel, f: &dyn Fn(&Partition) -> BigInt| match l {
        DnLabel::Pair(x, y) => binomial(n, x.size()) * f(x) * f(y),
        DnLabel::SplitPlus(b) | DnLabel::SplitMinus(b) => binomial(n, b.size()) * f(b) * f(b) / 2,
    };
    let rows = mat.rows.iter().map(|l| dim(l, &specht)).collect();
    let cols = mat
        .cols
        .iter()
        .map(|l| dim(l, &|p: &Partition| simple[p].clone()))
        .collect();
    Ok((rows, cols))
}

/// Checks the structural invariants of an assembled matrix: each column
/// label indexes a row holding 1 in that column (and 0 in the opposite split
/// column), plus and minus split rows agree up to swapping signs, the plus
/// and minus entries of a split row sum to `d_{β,α}²`, and every row's
/// composition factors add up to its dimension.
pub fn check_matrix(mat: &DnDecompositionMatrix, opts: &DnOptions) -> Result<()> {
    let fail = |msg: String| {
        Err(Error::IdentityFailed(format!(
            "D_{} at e = {}: {msg}",
            mat.n, mat.e
        )))
    };
    for (c, col) in mat.cols.iter().enumerate() {
        let Some(r) = mat.row_index(col) else {
            return fail(format!("column {col} has no row"));
        };
        if mat.entries[r][c] != 1 {
            return fail(format!("[S_{col} : D_{col}] = {}", mat.entries[r][c]));
        }
        if col.is_split() {
            let other = mat
                .col_index(&col.swap_sign())
                .expect("split columns come in pairs");
            if mat.entries[r][other] != 0 {
                return fail(format!(
                    "[S_{col} : D_{}] = {}",
                    col.swap_sign(),
                    mat.entries[r][other]
                ));
            }
        }
    }
    for (r, row) in mat.rows.iter().enumerate() {
        if let DnLabel::SplitPlus(beta) = row {
            let r2 = mat
                .row_index(&row.swap_sign())
                .expect("split rows come in pairs");
            let swapped: Vec<u64> = mat
                .cols
                .iter()
                .map(|c| mat.entries[r2][mat.col_index(&c.swap_sign()).expect("closed")])
                .collect();
            if swapped != mat.entries[r] {
                return fail(format!(
                    "rows {row} and {} are not sign-swapped copies",
                    row.swap_sign()
                ));
            }
            let ta = type_a(beta.size(), mat.e, opts)?;
            for (c, col) in mat.cols.iter().enumerate() {
                if let DnLabel::SplitPlus(alpha) = col {
                    let other = mat
                        .col_index(&col.swap_sign())
                        .expect("split columns come in pairs");
                    let dv = d(&ta, beta, alpha)?;
                    if mat.entries[r][c] + mat.entries[r][other] != dv * dv {
                        return fail(format!(
                            "split entries of {row} at {alpha} do not sum to d² = {}",
                            dv * dv
                        ));
                    }
                }
            }
        }
    }
    let (row_dims, col_dims) = module_dims(mat, opts)?;
    for (r, row) in mat.rows.iter().enumerate() {
        let total: BigInt = mat.entries[r]
            .iter()
            .zip(&col_dims)
            .map(|(&x, dim)| BigInt::from(x) * dim)
            .sum();
        if total != row_dims[r] {
            return fail(format!(
                "composition factors of {row} have total dimension {total}, expected {}",
                row_dims[r]
            ));
        }
    }
    Ok(())
}
