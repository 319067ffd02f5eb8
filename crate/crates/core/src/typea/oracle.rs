//! Independent check of simple-module dimensions by brute force in the
//! word basis of `H_q(𝔖_m)` specialized at `q = ζ_e`.
//!
//! For `e`-restricted `α`, let `c = y_α T_{w_α} x_{α′} T_{w_{α′}} y_α`. Its
//! right ideal `cH` is the image of `S^{α′} = x_{α′}T_{w_{α′}}y_α H` under
//! left multiplication by `y_α T_{w_α}`, a nonzero homomorphism into the dual
//! Specht module `S_{α′}` whose image is the simple head `D_α`. So
//! `dim D_α = rank_{ℚ(ζ_e)}(h ↦ c·h)`.

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exact::{cyclotomic_eval, CyclotomicNumber};
use crate::hecke::{x_element, y_element, HeckeElement, Kind, WeylGroup};

use num_rational::BigRational;
use num_traits::One;

/// Largest `|α|` accepted by [`gram_rank_dim_simple`] (`|𝔖_5| = 120`).
pub const ORACLE_MAX_RANK: usize = 5;

/// Rank of a matrix over `ℚ(ζ_e)` by Gaussian elimination.
fn rank(mut rows: Vec<Vec<CyclotomicNumber>>) -> usize {
    let mut rank = 0;
    let width = rows.first().map_or(0, Vec::len);
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col]
            .inv()
            .expect("nonzero elements of a field are invertible");
        let pivot_row: Vec<CyclotomicNumber> = rows[rank].iter().map(|x| x.mul(&inv)).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = x.sub(&p.mul(&factor));
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// `dim D_α` for `e`-restricted `α`, as the rank over `ℚ(ζ_e)` of left
/// multiplication by `y_α T_{w_α} x_{α′} T_{w_{α′}} y_α` on `H_q(𝔖_{|α|})`.
/// A rank of zero means the labels are inconsistent (`RankDeficient`).
pub fn gram_rank_dim_simple(alpha: &Partition, e: usize) -> Result<usize> {
    let m = alpha.size();
    if e < 2 {
        return Err(Error::InvalidInput(format!("e = {e} must be at least 2")));
    }
    if m > ORACLE_MAX_RANK {
        return Err(Error::InvalidInput(format!(
            "rank oracle needs |α| ≤ {ORACLE_MAX_RANK}, got {alpha}"
        )));
    }
    if !alpha.is_e_restricted(e) {
        return Err(Error::InvalidInput(format!(
            "{alpha} is not {e}-restricted"
        )));
    }
    if m == 0 {
        return Ok(1);
    }
    let group = WeylGroup::get(Kind::A, m);
    let conj = alpha.conjugate();
    let word = |p: &Partition| HeckeElement::word(&group, &p.w_lambda().reduced_word);
    let y = y_element(&group, alpha.parts(), 0)?;
    let c = HeckeElement::product(
        &group,
        [
            &y,
            &word(alpha),
            &x_element(&group, conj.parts(), 0)?,
            &word(&conj),
            &y,
        ],
    )?;
    let tv = BigRational::one();
    let columns: Vec<Vec<CyclotomicNumber>> = (0..group.order() as u32)
        .map(|w| {
            let image = c.mul(&HeckeElement::basis(&group, w))?;
            Ok((0..group.order() as u32)
                .map(|u| cyclotomic_eval(&image.coeff(u), e, &tv))
                .collect())
        })
        .collect::<Result<_>>()?;
    match rank(columns) {
        0 => Err(Error::RankDeficient(format!(
            "c·H vanishes for {alpha} at e = {e}"
        ))),
        r => Ok(r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn local_algebra_m2_e2() {
        assert_eq!(gram_rank_dim_simple(&p("[1,1]"), 2).unwrap(), 1);
    }

    #[test]
    fn semisimple_gives_specht_dimension() {
        for m in 1..=4 {
            for alpha in crate::combinatorics::partitions(m) {
                let dim = gram_rank_dim_simple(&alpha, m + 1).unwrap();
                assert_eq!(
                    num_bigint::BigUint::from(dim),
                    alpha.count_standard_tableaux(),
                    "{alpha}"
                );
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(gram_rank_dim_simple(&p("[2]"), 2).is_err());
        assert!(gram_rank_dim_simple(&p("[1,1,1,1,1,1]"), 7).is_err());
    }
}
