//! The LLT algorithm: canonical basis of the level-1 Fock space of
//! `U_v(ŝl_e)`, whose coefficients at `v = 1` are the decomposition numbers
//! of `H_q(𝔖_m)` at a primitive `e`-th root of unity in characteristic 0.
//!
//! Labels here are James's: `G(μ) = Σ_λ d_{λμ}(v) λ` for `e`-regular `μ`,
//! with `d_{μμ} = 1` and `d_{λμ} ∈ vℤ[v]` otherwise.

use std::collections::BTreeMap;

use crate::combinatorics::{partitions, Partition};
use crate::error::{Error, Result};
use crate::exact::LaurentPoly;

/// A vector of the Fock space in the basis of partitions.
pub type FockVector = BTreeMap<Partition, LaurentPoly>;

fn add_to(vec: &mut FockVector, key: Partition, c: &LaurentPoly) {
    if c.is_zero() {
        return;
    }
    let slot = vec.entry(key.clone()).or_default();
    *slot += c;
    if slot.is_zero() {
        vec.remove(&key);
    }
}

fn residue(row: usize, col: usize, e: usize) -> usize {
    (col as i64 - row as i64).rem_euclid(e as i64) as usize
}

/// Addable and removable nodes `(row, col, is_addable)`, top row first.
fn boundary_nodes(mu: &Partition) -> Vec<(usize, usize, bool)> {
    let mut out = Vec::new();
    for r in 0..=mu.len() {
        let part = mu.part(r);
        if r == 0 || mu.part(r - 1) > part {
            out.push((r, part, true));
        }
        if part > mu.part(r + 1) {
            out.push((r, part - 1, false));
        }
    }
    out
}

/// `f_i μ = Σ_b v^{N_b} (μ + b)` over addable `i`-nodes `b`, where `N_b` is
/// the number of addable minus removable `i`-nodes strictly above `b`.
pub fn apply_f(vec: &FockVector, i: usize, e: usize) -> FockVector {
    let mut out = FockVector::new();
    for (mu, c) in vec {
        let nodes = boundary_nodes(mu);
        for &(r, col, addable) in &nodes {
            if !addable || residue(r, col, e) != i {
                continue;
            }
            let n: i32 = nodes
                .iter()
                .filter(|&&(r2, c2, _)| r2 < r && residue(r2, c2, e) == i)
                .map(|&(_, _, add)| if add { 1 } else { -1 })
                .sum();
            let mut parts = mu.parts().to_vec();
            if r == parts.len() {
                parts.push(1);
            } else {
                parts[r] += 1;
            }
            let nu = Partition::new(parts).expect("adding an addable node keeps a partition");
            add_to(&mut out, nu, &c.shift(n, 0));
        }
    }
    out
}

/// The balanced quantum integer `[k] = v^{k−1} + v^{k−3} + ⋯ + v^{1−k}`.
fn balanced_qint(k: usize) -> LaurentPoly {
    LaurentPoly::from_v_terms((0..k).map(|j| (k as i32 - 1 - 2 * j as i32, 1)))
}

/// The divided power `f_i^{(k)} = f_i^k / [k]!`.
pub fn apply_f_divided(vec: &FockVector, i: usize, k: usize, e: usize) -> Result<FockVector> {
    let mut out = vec.clone();
    for _ in 0..k {
        out = apply_f(&out, i, e);
    }
    let fact: LaurentPoly = (1..=k).map(balanced_qint).product();
    out.into_iter()
        .map(|(mu, c)| Ok((mu, c.exact_div(&fact)?)))
        .collect()
}

/// `A(λ)`: the divided powers along the ladders of `λ` applied to the empty
/// partition. Node `(r, c)` (0-indexed) lies on ladder `L = r + (e−1)c`; the
/// nodes of a ladder all have residue `c − r ≡ −L mod e`, and an `e`-regular
/// partition has every node as high as possible on its ladder.
pub fn ladder_vector(lambda: &Partition, e: usize) -> Result<FockVector> {
    let mut ladders: BTreeMap<usize, usize> = BTreeMap::new();
    for (r, c) in lambda.cells() {
        *ladders.entry(r + (e - 1) * c).or_default() += 1;
    }
    let mut vec = FockVector::from([(Partition::empty(), LaurentPoly::one())]);
    for (ladder, k) in ladders {
        vec = apply_f_divided(&vec, (e - ladder % e) % e, k, e)?;
    }
    if !vec.get(lambda).is_some_and(|c| c.is_one()) {
        return Err(Error::IdentityFailed(format!(
            "A({lambda}) does not have leading coefficient 1 at e = {e}"
        )));
    }
    Ok(vec)
}

/// The bar-invariant Laurent polynomial agreeing with `c` in all terms of
/// degree ≤ 0.
fn bar_invariant_head(c: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for ((k, _), a) in c.terms() {
        if k == 0 {
            out += &LaurentPoly::monomial(a.clone(), 0, 0);
        } else if k < 0 {
            out += &LaurentPoly::monomial(a.clone(), k, 0);
            out += &LaurentPoly::monomial(a.clone(), -k, 0);
        }
    }
    out
}

/// Canonical basis vectors `G(μ)` for every `e`-regular `μ ⊢ m`.
pub fn canonical_basis(m: usize, e: usize) -> Result<BTreeMap<Partition, FockVector>> {
    if e < 2 {
        return Err(Error::InvalidInput(format!("e = {e} must be at least 2")));
    }
    let mut basis: BTreeMap<Partition, FockVector> = BTreeMap::new();
    // lexicographically ascending, so every G(ν) with ν < μ is known when needed
    for mu in partitions(m)
        .into_iter()
        .rev()
        .filter(|p| p.is_e_regular(e))
    {
        let mut g = ladder_vector(&mu, e)?;
        loop {
            let target = g
                .iter()
                .rev()
                .find(|(nu, c)| **nu != mu && c.v_degree_range().is_some_and(|(lo, _)| lo <= 0))
                .map(|(nu, c)| (nu.clone(), c.clone()));
            let Some((nu, c)) = target else { break };
            let lower = basis.get(&nu).ok_or_else(|| {
                Error::IdentityFailed(format!(
                    "LLT reduction of G({mu}) needs G({nu}), which is not e-regular"
                ))
            })?;
            let alpha = bar_invariant_head(&c);
            for (kappa, d) in lower {
                add_to(&mut g, kappa.clone(), &-(d * &alpha));
            }
        }
        basis.insert(mu, g);
    }
    Ok(basis)
}
