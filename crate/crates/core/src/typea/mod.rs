//! Decomposition numbers `d_{β,α} = [S_β : D_α]` of `H_q(𝔖_m)` over a
//! characteristic-0 field at a primitive `e`-th root of unity.
//!
//! Labels follow the dual-Specht convention: rows are all partitions of `m`,
//! columns the `e`-restricted ones, and `d_{β,α} ≠ 0` forces `α ⊴ β`. The
//! LLT algorithm ([`llt`]) works in James's Specht/`e`-regular convention;
//! the two are related by conjugating both labels,
//! `d_{β,α} = G(α′)[β′](1)`.

mod cache;
pub mod llt;
mod oracle;

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::combinatorics::{dominance_leq, partitions, Partition};
use crate::error::{Error, Result};

pub use cache::{cache_file_name, load_or_compute, read_cache_file, write_cache_file};
pub use oracle::{gram_rank_dim_simple, ORACLE_MAX_RANK};

/// The matrix `[S_β : D_α]` with rows in lexicographically descending
/// order of `β ⊢ m` and columns in lexicographically descending order of the
/// `e`-restricted `α ⊢ m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeADecompositionMatrix {
    pub m: usize,
    pub e: usize,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<u64>>,
}

impl TypeADecompositionMatrix {
    /// `d_{β,α}`, or `None` if `β` is not a partition of `m` or `α` is not
    /// an `e`-restricted one.
    pub fn get(&self, beta: &Partition, alpha: &Partition) -> Option<u64> {
        let r = self.row_index(beta)?;
        let c = self.col_index(alpha)?;
        Some(self.entries[r][c])
    }

    pub fn row_index(&self, beta: &Partition) -> Option<usize> {
        self.rows.binary_search_by(|p| beta.cmp(p)).ok()
    }

    pub fn col_index(&self, alpha: &Partition) -> Option<usize> {
        self.cols.binary_search_by(|p| alpha.cmp(p)).ok()
    }

    /// Checks `d_{α,α} = 1` and that `d_{β,α} ≠ 0` only for `α ⊴ β`.
    pub fn check_unitriangular(&self) -> Result<()> {
        for (r, beta) in self.rows.iter().enumerate() {
            for (c, alpha) in self.cols.iter().enumerate() {
                let d = self.entries[r][c];
                if beta == alpha && d != 1 {
                    return Err(Error::IdentityFailed(format!(
                        "d_{{{beta},{beta}}} = {d} at e = {}",
                        self.e
                    )));
                }
                if d != 0 && !dominance_leq(alpha, beta)? {
                    return Err(Error::IdentityFailed(format!(
                        "d_{{{beta},{alpha}}} = {d} at e = {} although {alpha} does not dominate-precede {beta}",
                        self.e
                    )));
                }
            }
        }
        Ok(())
    }

    /// True if this is the identity on all partitions (the semisimple case).
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(r, row)| row.iter().enumerate().all(|(c, &d)| d == u64::from(r == c)))
    }
}

impl fmt::Display for TypeADecompositionMatrix {
    /// An aligned table with a header of column labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row_labels: Vec<String> = self.rows.iter().map(|p| p.to_string()).collect();
        let col_labels: Vec<String> = self.cols.iter().map(|p| p.to_string()).collect();
        let lw = row_labels.iter().map(String::len).max().unwrap_or(0);
        let cw: Vec<usize> = col_labels.iter().map(|l| l.len().max(1)).collect();
        write!(f, "{:lw$}", "")?;
        for (l, w) in col_labels.iter().zip(&cw) {
            write!(f, "  {l:>w$}")?;
        }
        writeln!(f)?;
        for (label, row) in row_labels.iter().zip(&self.entries) {
            write!(f, "{label:lw$}")?;
            for (d, w) in row.iter().zip(&cw) {
                write!(f, "  {d:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Runs the LLT algorithm and transports the result to the dual-Specht
/// convention. Deterministic and single-threaded.
pub fn compute_type_a(m: usize, e: usize) -> Result<TypeADecompositionMatrix> {
    let basis = llt::canonical_basis(m, e)?;
    let rows = partitions(m);
    let cols: Vec<Partition> = rows
        .iter()
        .filter(|p| p.is_e_restricted(e))
        .cloned()
        .collect();
    let mut entries = vec![vec![0u64; cols.len()]; rows.len()];
    for (c, alpha) in cols.iter().enumerate() {
        let g = basis.get(&alpha.conjugate()).ok_or_else(|| {
            Error::IdentityFailed(format!(
                "the conjugate of the {e}-restricted {alpha} is not {e}-regular"
            ))
        })?;
        for (beta_conj, coeff) in g {
            let value = coeff.eval_at_one();
            let d = u64::try_from(&value).map_err(|_| {
                Error::IdentityFailed(format!(
                    "G({})[{beta_conj}] evaluates to {value} at v = 1",
                    alpha.conjugate()
                ))
            })?;
            let r = rows
                .binary_search_by(|p| beta_conj.conjugate().cmp(p))
                .expect("rows hold every partition");
            entries[r][c] = d;
        }
    }
    let matrix = TypeADecompositionMatrix {
        m,
        e,
        rows,
        cols,
        entries,
    };
    matrix.check_unitriangular()?;
    Ok(matrix)
}

type MatrixCache = Mutex<HashMap<(usize, usize), Arc<TypeADecompositionMatrix>>>;

fn memory_cache() -> &'static MatrixCache {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The decomposition matrix of `H_q(𝔖_m)` at `e`, memoized per process and,
/// if `cache_dir` is given, on disk. The computation runs outside the lock,
/// so distinct `(m, e)` pairs can be computed concurrently; a race on the
/// same pair computes the same value twice and keeps the first.
pub fn decomposition_matrix_type_a_cached(
    m: usize,
    e: usize,
    cache_dir: Option<&Path>,
) -> Result<Arc<TypeADecompositionMatrix>> {
    if e < 2 {
        return Err(Error::InvalidInput(format!("e = {e} must be at least 2")));
    }
    if let Some(mat) = memory_cache()
        .lock()
        .expect("type-A cache poisoned")
        .get(&(m, e))
    {
        return Ok(Arc::clone(mat));
    }
    let mat = match cache_dir {
        Some(dir) => load_or_compute(m, e, dir)?,
        None => compute_type_a(m, e)?,
    };
    let mut cache = memory_cache().lock().expect("type-A cache poisoned");
    Ok(Arc::clone(
        cache.entry((m, e)).or_insert_with(|| Arc::new(mat)),
    ))
}

/// The decomposition matrix of `H_q(𝔖_m)` at `e` (memoized, no disk cache).
pub fn decomposition_matrix_type_a(m: usize, e: usize) -> Result<Arc<TypeADecompositionMatrix>> {
    decomposition_matrix_type_a_cached(m, e, None)
}

/// Solves `Σ_α d_{β,α} dim D_α = dim S_β` for the simple dimensions, using
/// the rows `β = α` (unitriangular in lexicographic order), and checks the
/// remaining rows. Returns `(α, dim D_α)` in column order.
pub fn simple_dimensions(mat: &TypeADecompositionMatrix) -> Result<Vec<(Partition, BigInt)>> {
    let mut dims: Vec<BigInt> = vec![BigInt::from(0); mat.cols.len()];
    // columns are lex descending and d_{α,α'} ≠ 0 needs α' ⊴ α, so α' comes later
    for c in (0..mat.cols.len()).rev() {
        let alpha = &mat.cols[c];
        let r = mat
            .row_index(alpha)
            .expect("every column label is a row label");
        let lower: BigInt = mat.entries[r][c + 1..]
            .iter()
            .zip(&dims[c + 1..])
            .map(|(&d, dim)| BigInt::from(d) * dim)
            .sum();
        dims[c] = BigInt::from(alpha.count_standard_tableaux()) - lower;
    }
    for (beta, row) in mat.rows.iter().zip(&mat.entries) {
        let total: BigInt = row
            .iter()
            .zip(&dims)
            .map(|(&d, dim)| BigInt::from(d) * dim)
            .sum();
        if total != BigInt::from(beta.count_standard_tableaux()) {
            return Err(Error::IdentityFailed(format!(
                "row {beta} at e = {}: Σ d·dim D = {total}, but dim S = {}",
                mat.e,
                beta.count_standard_tableaux()
            )));
        }
    }
    Ok(mat.cols.iter().cloned().zip(dims).collect())
}

/// True iff the solved simple dimensions are positive integers, every row of
/// the dimension system holds, and for `m ≤ oracle_bound` each solved
/// dimension equals the rank computed by [`gram_rank_dim_simple`].
pub fn verify_dimension_consistency_bounded(
    m: usize,
    e: usize,
    oracle_bound: usize,
) -> Result<bool> {
    let mat = decomposition_matrix_type_a(m, e)?;
    let dims = match simple_dimensions(&mat) {
        Ok(d) => d,
        Err(Error::IdentityFailed(_)) => return Ok(false),
        Err(err) => return Err(err),
    };
    for (alpha, dim) in &dims {
        if *dim <= BigInt::from(0) {
            return Ok(false);
        }
        if m <= oracle_bound.min(ORACLE_MAX_RANK)
            && BigInt::from(gram_rank_dim_simple(alpha, e)?) != *dim
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`verify_dimension_consistency_bounded`] with the rank oracle for `m ≤ 4`.
pub fn verify_dimension_consistency(m: usize, e: usize) -> Result<bool> {
    verify_dimension_consistency_bounded(m, e, 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn matrix(m: usize, e: usize, expected: &[&[u64]]) {
        let mat = decomposition_matrix_type_a(m, e).unwrap();
        let rows: Vec<Vec<u64>> = expected.iter().map(|r| r.to_vec()).collect();
        assert_eq!(mat.entries, rows, "m={m} e={e}\n{mat}");
    }

    #[test]
    fn m2_e2_local_algebra() {
        let mat = decomposition_matrix_type_a(2, 2).unwrap();
        assert_eq!(mat.cols, vec![p("[1,1]")]);
        assert_eq!(mat.get(&p("[2]"), &p("[1,1]")), Some(1));
        assert_eq!(mat.get(&p("[1,1]"), &p("[1,1]")), Some(1));
        assert_eq!(mat.get(&p("[2]"), &p("[2]")), None);
    }

    #[test]
    fn small_matrices() {
        // rows lex descending, columns the e-restricted partitions lex descending
        matrix(3, 2, &[&[0, 1], &[1, 0], &[0, 1]]);
        matrix(3, 3, &[&[1, 0], &[1, 1], &[0, 1]]);
        matrix(4, 2, &[&[0, 1], &[1, 1], &[1, 0], &[1, 1], &[0, 1]]);
    }

    #[test]
    fn example_anchor() {
        let d3 = decomposition_matrix_type_a(3, 3).unwrap();
        assert_eq!(d3.get(&p("[2,1]"), &p("[1,1,1]")), Some(1));
        let d5 = decomposition_matrix_type_a(3, 5).unwrap();
        assert_eq!(d5.get(&p("[2,1]"), &p("[1,1,1]")), Some(0));
    }

    #[test]
    fn semisimple_is_identity() {
        assert!(decomposition_matrix_type_a(0, 2).unwrap().is_identity());
        for m in 1..=8 {
            assert!(
                decomposition_matrix_type_a(m, m + 1).unwrap().is_identity(),
                "m={m}"
            );
        }
    }

    #[test]
    fn unitriangular_for_all_small_cases() {
        for e in [2, 3, 4, 5, 7] {
            for m in 0..=6 {
                decomposition_matrix_type_a(m, e)
                    .unwrap()
                    .check_unitriangular()
                    .unwrap();
            }
        }
    }

    #[test]
    fn dimensions_m2_e2() {
        let mat = decomposition_matrix_type_a(2, 2).unwrap();
        assert_eq!(
            simple_dimensions(&mat).unwrap(),
            vec![(p("[1,1]"), BigInt::from(1))]
        );
    }

    #[test]
    fn dimension_consistency() {
        for e in [2, 3, 5] {
            for m in 1..=5 {
                assert!(verify_dimension_consistency(m, e).unwrap(), "m={m} e={e}");
            }
        }
    }

    #[test]
    fn display_is_aligned() {
        let text = decomposition_matrix_type_a(2, 2).unwrap().to_string();
        assert_eq!(text, "       [1,1]\n[2]        1\n[1,1]      1\n");
    }
}
