//! Individual entries of the decomposition matrix of `H_q(D_n)`, computed
//! from type-A decomposition numbers and the values at `q = ζ_e` of the
//! square roots `g_β` of the Schur-element ratios `f_{(β,β)}`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exact::{cyclotomic_eval, cyclotomic_to_rational, LaurentPoly};
use crate::schur::g_poly_signed;
use crate::typea::{decomposition_matrix_type_a, TypeADecompositionMatrix};

/// The smallest `i ∈ [1, n−1]` with `1 + ζ_e^i = 0`, if any. The algebra is
/// in the separated case iff there is none.
pub fn separation_failure(n: usize, e: usize) -> Option<usize> {
    (1..n).find(|&i| {
        let p = &LaurentPoly::one() + &LaurentPoly::v_pow(i as i32);
        cyclotomic_eval(&p, e, &BigRational::one()).is_zero()
    })
}

/// True iff `∏_{i=1}^{n−1} (1 + ζ_e^i) ≠ 0`.
pub fn separation_check(n: usize, e: usize) -> bool {
    separation_failure(n, e).is_none()
}

pub(crate) fn require_separated(n: usize, e: usize) -> Result<()> {
    match separation_failure(n, e) {
        Some(i) => Err(Error::SeparationFailed { n, e, i }),
        None => Ok(()),
    }
}

/// Which square root of `f_{(β,β)}` is taken as `g_β`: the one with
/// positive leading coefficient, negated globally (`minus`) and/or for the
/// partitions in `flipped`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignConvention {
    pub minus: bool,
    pub flipped: BTreeSet<Partition>,
}

impl SignConvention {
    pub fn plus() -> Self {
        Self::default()
    }

    pub fn minus() -> Self {
        Self {
            minus: true,
            flipped: BTreeSet::new(),
        }
    }

    pub fn negates(&self, beta: &Partition) -> bool {
        self.minus ^ self.flipped.contains(beta)
    }
}

/// `d_{β,α}` from a type-A matrix; `α` must be `e`-restricted.
pub(crate) fn d(
    mat: &TypeADecompositionMatrix,
    beta: &Partition,
    alpha: &Partition,
) -> Result<u64> {
    mat.get(beta, alpha).ok_or_else(|| {
        Error::InvalidInput(format!(
            "no entry d_{{{beta},{alpha}}} for m = {}, e = {} ({alpha} must be {}-restricted)",
            mat.m, mat.e, mat.e
        ))
    })
}

/// `r = g_β(ζ_e) / g_α(ζ_e)`, which must be rational.
pub fn g_ratio(
    beta: &Partition,
    alpha: &Partition,
    e: usize,
    signs: &SignConvention,
) -> Result<BigRational> {
    let one = BigRational::one();
    let gb = cyclotomic_eval(&g_poly_signed(beta, signs.negates(beta))?, e, &one);
    let ga = cyclotomic_eval(&g_poly_signed(alpha, signs.negates(alpha))?, e, &one);
    let r = gb
        .div(&ga)
        .map_err(|_| Error::NotRational(format!("g_{alpha}(ζ_{e}) = 0")))?;
    cyclotomic_to_rational(&r).map_err(|_| {
        Error::NotRational(format!(
            "g_{beta}(ζ_{e}) / g_{alpha}(ζ_{e}) = {r} is not rational"
        ))
    })
}

/// `([S⁺_β : D⁺_α], [S⁺_β : D⁻_α])` given `d = d_{β,α}`:
/// the plus entry is `d (r + d) / 2` with `r = g_β(ζ_e)/g_α(ζ_e)`, the minus
/// entry `d² −` the plus entry. When `d = 0` both vanish and `r` is not
/// evaluated.
pub fn split_entries_from(
    beta: &Partition,
    alpha: &Partition,
    dval: u64,
    e: usize,
    signs: &SignConvention,
) -> Result<(u64, u64)> {
    if dval == 0 {
        return Ok((0, 0));
    }
    let r = g_ratio(beta, alpha, e, signs)?;
    let dq = BigRational::from_integer(BigInt::from(dval));
    let plus = &dq * (&r + &dq) / BigRational::from_integer(BigInt::from(2));
    let square = BigInt::from(dval) * BigInt::from(dval);
    if !plus.is_integer() || plus.is_negative() || plus.to_integer() > square {
        return Err(Error::NotIntegral(format!(
            "[S+_{beta} : D+_{alpha}] at e = {e}: d = {dval}, r = {r} give {plus}, not an integer in [0, d²]"
        )));
    }
    let plus = plus.to_integer();
    let minus = &square - &plus;
    Ok((
        plus.to_u64().expect("bounded by d²"),
        minus.to_u64().expect("bounded by d²"),
    ))
}

/// `[S⁺_β : D⁺_α]` for `H_q(D_{2m})`, `m = |β| = |α|`.
pub fn split_entry_plus(beta: &Partition, alpha: &Partition, e: usize) -> Result<u64> {
    split_entries(beta, alpha, e).map(|(p, _)| p)
}

/// `[S⁺_β : D⁻_α] = d_{β,α}² − [S⁺_β : D⁺_α]`.
pub fn split_entry_minus(beta: &Partition, alpha: &Partition, e: usize) -> Result<u64> {
    split_entries(beta, alpha, e).map(|(_, m)| m)
}

fn split_entries(beta: &Partition, alpha: &Partition, e: usize) -> Result<(u64, u64)> {
    same_size(beta, alpha)?;
    require_separated(2 * beta.size(), e)?;
    let mat = decomposition_matrix_type_a(beta.size(), e)?;
    split_entries_from(
        beta,
        alpha,
        d(&mat, beta, alpha)?,
        e,
        &SignConvention::plus(),
    )
}

fn same_size(x: &Partition, y: &Partition) -> Result<()> {
    if x.size() != y.size() {
        return Err(Error::SizeMismatch(format!(
            "{x} and {y} have different sizes"
        )));
    }
    Ok(())
}

/// Pair row `{λ⁽¹⁾, λ⁽²⁾}` against pair column `{μ⁽¹⁾, μ⁽²⁾}`, all of size
/// `m`: `d_{λ⁽¹⁾μ⁽¹⁾} d_{λ⁽²⁾μ⁽²⁾} + d_{λ⁽¹⁾μ⁽²⁾} d_{λ⁽²⁾μ⁽¹⁾}`.
pub fn pair_pair_entry(
    mat: &TypeADecompositionMatrix,
    l: (&Partition, &Partition),
    mu: (&Partition, &Partition),
) -> Result<u64> {
    Ok(d(mat, l.0, mu.0)? * d(mat, l.1, mu.1)? + d(mat, l.0, mu.1)? * d(mat, l.1, mu.0)?)
}

/// Pair row `{λ⁽¹⁾, λ⁽²⁾}` (equal sizes) against either split column of `α`:
/// `d_{λ⁽¹⁾α} d_{λ⁽²⁾α}`, the same for `(α|α)+` and `(α|α)−`.
///
/// Restricted to `D_n`, the irreducible `S_{(λ⁽¹⁾,λ⁽²⁾)}` of type `B` keeps
/// its composition factor `D_{(α,α)}` with multiplicity `d_{λ⁽¹⁾α}d_{λ⁽²⁾α}`,
/// and `D_{(α,α)}` restricts to `D⁺_α ⊕ D⁻_α`; so each half occurs with the
/// full product, not half of it (the dimension count confirms this).
pub fn pair_split_entry(
    mat: &TypeADecompositionMatrix,
    l: (&Partition, &Partition),
    alpha: &Partition,
) -> Result<u64> {
    Ok(d(mat, l.0, alpha)? * d(mat, l.1, alpha)?)
}

/// Split row `(β|β)±` against pair column `{μ⁽¹⁾, μ⁽²⁾}`:
/// `d_{βμ⁽¹⁾} d_{βμ⁽²⁾}`, the same for both signs.
pub fn split_pair_entry(
    mat: &TypeADecompositionMatrix,
    beta: &Partition,
    mu: (&Partition, &Partition),
) -> Result<u64> {
    Ok(d(mat, beta, mu.0)? * d(mat, beta, mu.1)?)
}

/// [`pair_split_entry`] for `H_q(D_{2m})`, with type-A numbers computed on
/// demand.
pub fn mixed_row_entry(l1: &Partition, l2: &Partition, alpha: &Partition, e: usize) -> Result<u64> {
    same_size(l1, l2)?;
    same_size(l1, alpha)?;
    require_separated(2 * l1.size(), e)?;
    pair_split_entry(
        &*decomposition_matrix_type_a(l1.size(), e)?,
        (l1, l2),
        alpha,
    )
}

/// [`split_pair_entry`] for `H_q(D_{2m})`, with type-A numbers computed on
/// demand.
pub fn split_row_pair_entry(
    beta: &Partition,
    mu1: &Partition,
    mu2: &Partition,
    e: usize,
) -> Result<u64> {
    same_size(beta, mu1)?;
    same_size(beta, mu2)?;
    require_separated(2 * beta.size(), e)?;
    split_pair_entry(
        &*decomposition_matrix_type_a(beta.size(), e)?,
        beta,
        (mu1, mu2),
    )
}

/// Pair row `(λ⁽¹⁾, λ⁽²⁾)` against pair column `(μ⁽¹⁾, μ⁽²⁾)` with
/// `|λ⁽¹⁾| > |λ⁽²⁾|`: `d_{λ⁽¹⁾μ⁽¹⁾} d_{λ⁽²⁾μ⁽²⁾}` if the sizes match, else 0.
pub fn tensor_block_entry(
    l: (&Partition, &Partition),
    mu: (&Partition, &Partition),
    e: usize,
) -> Result<u64> {
    if l.0.size() != mu.0.size() || l.1.size() != mu.1.size() {
        return Ok(0);
    }
    let d1 = decomposition_matrix_type_a(l.0.size(), e)?;
    let d2 = decomposition_matrix_type_a(l.1.size(), e)?;
    Ok(d(&d1, l.0, mu.0)? * d(&d2, l.1, mu.1)?)
}

/// The binomial coefficient `C(n, k)`.
pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn separation_examples() {
        assert!(separation_check(6, 3));
        assert!(!separation_check(6, 2));
        assert!(!separation_check(4, 6));
        assert_eq!(separation_failure(4, 6), Some(3));
        assert!(separation_check(3, 6));
        for n in 2..=10 {
            for e in 2..=13 {
                assert_eq!(
                    separation_check(n, e),
                    e % 2 == 1 || e / 2 > n - 1,
                    "n={n} e={e}"
                );
            }
        }
    }

    #[test]
    fn example_split_entries() {
        assert_eq!(split_entry_plus(&p("[2,1]"), &p("[1,1,1]"), 3).unwrap(), 1);
        assert_eq!(split_entry_minus(&p("[2,1]"), &p("[1,1,1]"), 3).unwrap(), 0);
        assert_eq!(split_entry_plus(&p("[2,1]"), &p("[1,1,1]"), 5).unwrap(), 0);
        assert_eq!(split_entry_minus(&p("[2,1]"), &p("[1,1,1]"), 5).unwrap(), 0);
    }

    #[test]
    fn diagonal_split_entries() {
        for e in [3, 5, 7] {
            for m in 1..=4 {
                for alpha in crate::combinatorics::partitions(m)
                    .into_iter()
                    .filter(|a| a.is_e_restricted(e))
                {
                    assert_eq!(split_entry_plus(&alpha, &alpha, e).unwrap(), 1);
                    assert_eq!(split_entry_minus(&alpha, &alpha, e).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn split_preconditions() {
        assert!(matches!(
            split_entry_plus(&p("[2]"), &p("[1,1]"), 2),
            Err(Error::SeparationFailed { .. })
        ));
        assert!(split_entry_plus(&p("[2]"), &p("[1]"), 3).is_err());
        // (3) is not 3-restricted
        assert!(split_entry_plus(&p("[3]"), &p("[3]"), 3).is_err());
    }

    #[test]
    fn pair_and_mixed_examples() {
        let mat = decomposition_matrix_type_a(2, 3).unwrap();
        assert_eq!(
            pair_pair_entry(&mat, (&p("[2]"), &p("[1,1]")), (&p("[2]"), &p("[1,1]"))).unwrap(),
            1
        );
        for alpha in ["[2]", "[1,1]"] {
            assert_eq!(
                mixed_row_entry(&p("[2]"), &p("[1,1]"), &p(alpha), 3).unwrap(),
                0
            );
        }
        assert_eq!(
            split_row_pair_entry(&p("[2,1]"), &p("[2,1]"), &p("[1,1,1]"), 3).unwrap(),
            1
        );
        assert_eq!(
            split_row_pair_entry(&p("[3]"), &p("[2,1]"), &p("[1,1,1]"), 5).unwrap(),
            0
        );
    }

    #[test]
    fn tensor_examples() {
        // d_{(3),(2,1)} = 1 at e = 3
        assert_eq!(
            tensor_block_entry((&p("[3]"), &p("[1]")), (&p("[2,1]"), &p("[1]")), 3).unwrap(),
            1
        );
        assert_eq!(
            tensor_block_entry((&p("[3]"), &p("[1]")), (&p("[2]"), &p("[1,1]")), 3).unwrap(),
            0
        );
    }

    #[test]
    fn global_sign_flip_leaves_ratio() {
        let r1 = g_ratio(&p("[2,1]"), &p("[1,1,1]"), 3, &SignConvention::plus()).unwrap();
        let r2 = g_ratio(&p("[2,1]"), &p("[1,1,1]"), 3, &SignConvention::minus()).unwrap();
        assert_eq!(r1, r2);
        let flip = SignConvention {
            minus: false,
            flipped: [p("[2,1]")].into(),
        };
        assert_eq!(g_ratio(&p("[2,1]"), &p("[1,1,1]"), 3, &flip).unwrap(), -r1);
    }
}
