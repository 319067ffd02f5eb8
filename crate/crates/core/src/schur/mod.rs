//! Schur elements of `H_v(𝔖_m)` and `H_{v,ṽ}(B_n)` and the Laurent
//! polynomials `f_λ` and `g_β` derived from them.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::combinatorics::{Bipartition, Partition};
use crate::error::Result;
use crate::exact::{quantum_integer, LaurentPoly};

/// `s_λ(v) = v^{−ℓ(w_{λ',0})} ∏_{(i,j) ∈ [λ]} [h_{ij}]_v`, where `w_{λ',0}`
/// is the longest element of the Young subgroup `𝔖_{λ'}`.
pub fn schur_type_a(lambda: &Partition) -> LaurentPoly {
    let hooks: LaurentPoly = lambda
        .hook_lengths()
        .into_iter()
        .map(|h| quantum_integer(h as i32))
        .product();
    hooks.shift(-(lambda.conjugate().young_longest_length() as i32), 0)
}

/// The Schur element of the bipartition `λ = (λ⁽¹⁾, λ⁽²⁾)` for
/// `H_{v,ṽ}(B_n)` with parameters `(q, Q₁, Q₂) = (v, −1, ṽ)`:
///
/// ```text
/// s_λ = v^{−N} ṽ^{−(n−a)} ∏_{x∈λ⁽¹⁾} [h₁₁(x)]_v (1 + ṽ v^{h₁₂(x)})
///                        ∏_{y∈λ⁽²⁾} [h₂₂(y)]_v (v^{h₂₁(y)} + ṽ),
/// N = Σ_j C(λ⁽¹⁾′_j + λ⁽²⁾′_j, 2),
/// ```
///
/// where `h_st(i,j) = λ^s_i − j + (λ^t)′_j − i + 1` is the mixed hook. The
/// normalization is fixed by requiring `f_λ` (see [`f_poly`]) to equal the
/// eigenvalue computed by the Hecke-algebra oracle; at `v = ṽ = 1` it gives
/// `|W(B_n)| / dim S_λ`, as a Schur element of the group algebra must.
pub fn schur_bipartition(lambda: &Bipartition) -> LaurentPoly {
    let (l1, l2) = (&lambda.first, &lambda.second);
    let mut s = LaurentPoly::one();
    for (i, j) in l1.cells() {
        let h11 = quantum_integer(l1.hook(i, j) as i32);
        let h12 = l1.mixed_hook(l2, i, j) as i32;
        s = &s * &(&h11 * &(&LaurentPoly::one() + &LaurentPoly::monomial(1, h12, 1)));
    }
    for (i, j) in l2.cells() {
        let h22 = quantum_integer(l2.hook(i, j) as i32);
        let h21 = l2.mixed_hook(l1, i, j) as i32;
        s = &s * &(&h22 * &(&LaurentPoly::v_pow(h21) + &LaurentPoly::tv()));
    }
    let (c1, c2) = (l1.conjugate(), l2.conjugate());
    let n_exp: usize = (0..c1.len().max(c2.len()))
        .map(|j| {
            let c = c1.part(j) + c2.part(j);
            c * c.saturating_sub(1) / 2
        })
        .sum();
    s.shift(-(n_exp as i32), -(lambda.second.size() as i32))
}

fn f_cache() -> &'static Mutex<HashMap<Bipartition, LaurentPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<Bipartition, LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn g_cache() -> &'static Mutex<HashMap<Partition, LaurentPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `f_λ(v,ṽ) = v^{n(n−1)/2} ṽ^{n−a} s_λ(v,ṽ) / (s_{λ⁽¹⁾}(v) s_{λ⁽²⁾}(v))`,
/// by exact division. Failure of the division is a violated theorem and is
/// reported as `NotDivisible`.
pub fn f_poly(lambda: &Bipartition) -> Result<LaurentPoly> {
    if let Some(f) = f_cache().lock().expect("f cache poisoned").get(lambda) {
        return Ok(f.clone());
    }
    let n = lambda.size() as i32;
    let num = schur_bipartition(lambda).shift(n * (n - 1) / 2, lambda.second.size() as i32);
    let den = &schur_type_a(&lambda.first) * &schur_type_a(&lambda.second);
    let f = num.exact_div(&den)?;
    f_cache()
        .lock()
        .expect("f cache poisoned")
        .insert(lambda.clone(), f.clone());
    Ok(f)
}

/// `f_λ(v) = f_λ(v, 1)`.
pub fn f_poly_one_param(lambda: &Bipartition) -> Result<LaurentPoly> {
    Ok(f_poly(lambda)?.specialize_tv_one())
}

/// `g_β(v)`: the square root of `f_{(β,β)}(v)` with positive leading
/// coefficient. A non-square is a violated theorem (`NotASquare`).
pub fn g_poly(beta: &Partition) -> Result<LaurentPoly> {
    g_poly_signed(beta, false)
}

/// `g_β` with the sign convention flipped when `negate` is set.
pub fn g_poly_signed(beta: &Partition, negate: bool) -> Result<LaurentPoly> {
    let cached = g_cache()
        .lock()
        .expect("g cache poisoned")
        .get(beta)
        .cloned();
    let g = match cached {
        Some(g) => g,
        None => {
            let g = f_poly_one_param(&Bipartition::new(beta.clone(), beta.clone()))?.sqrt()?;
            g_cache()
                .lock()
                .expect("g cache poisoned")
                .insert(beta.clone(), g.clone());
            g
        }
    };
    Ok(if negate { -g } else { g })
}
