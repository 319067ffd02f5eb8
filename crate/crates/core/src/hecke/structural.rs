//! The structured elements used to build Specht modules and the central
//! element whose eigenvalue is `f_λ(v, ṽ)`.
//!
//! Every constructor takes the ambient group, so the same type-A elements can
//! be built inside `H_v(𝔖_n)` or inside `H_{v,ṽ}(B_n)`. An `offset` places an
//! element on the letters `{offset+1, …}` by shifting every generator index.

use std::sync::Arc;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exact::LaurentPoly;

use super::element::HeckeElement;
use super::group::WeylGroup;

fn check_fits(group: &WeylGroup, size: usize, offset: usize) -> Result<()> {
    if offset + size > group.rank() {
        return Err(Error::SizeMismatch(format!(
            "{size} letters at offset {offset} do not fit in rank {}",
            group.rank()
        )));
    }
    Ok(())
}

/// Sum over the Young subgroup `𝔖_λ` placed at `offset`, with coefficient
/// `1` (`signed = false`) or `(−v)^{−ℓ(w)}` (`signed = true`).
fn young_sum(
    group: &Arc<WeylGroup>,
    composition: &[usize],
    offset: usize,
    signed: bool,
) -> Result<HeckeElement> {
    let size: usize = composition.iter().sum();
    check_fits(group, size, offset)?;
    // block id per letter (1-indexed); letters outside the composition are fixed
    let n = group.rank();
    let mut block = vec![usize::MAX; n + 1];
    let mut start = offset + 1;
    for (b, &len) in composition.iter().enumerate() {
        block[start..start + len].fill(b);
        start += len;
    }
    let mut out = HeckeElement::zero(group);
    for (w, perm) in group.elements().iter().enumerate() {
        let ok = perm.images().iter().enumerate().all(|(j, &x)| {
            let letter = j + 1;
            if x <= 0 {
                return false;
            }
            let image = x as usize;
            if block[letter] == usize::MAX {
                image == letter
            } else {
                block[image] == block[letter]
            }
        });
        if ok {
            let len = group.length(w as u32) as i32;
            let c = if signed {
                LaurentPoly::monomial(if len % 2 == 0 { 1 } else { -1 }, -len, 0)
            } else {
                LaurentPoly::one()
            };
            out = out.add(&HeckeElement::basis(group, w as u32).scale(&c))?;
        }
    }
    Ok(out)
}

/// `x_λ = Σ_{w ∈ 𝔖_λ} T_w`.
pub fn x_element(
    group: &Arc<WeylGroup>,
    composition: &[usize],
    offset: usize,
) -> Result<HeckeElement> {
    young_sum(group, composition, offset, false)
}

/// `y_λ = Σ_{w ∈ 𝔖_λ} (−v)^{−ℓ(w)} T_w`.
pub fn y_element(
    group: &Arc<WeylGroup>,
    composition: &[usize],
    offset: usize,
) -> Result<HeckeElement> {
    young_sum(group, composition, offset, true)
}

/// `T_{s_{i_1}+offset} ⋯ T_{s_{i_k}+offset}`.
pub fn shifted_word(group: &Arc<WeylGroup>, word: &[usize], offset: usize) -> HeckeElement {
    let shifted: Vec<usize> = word.iter().map(|&s| s + offset).collect();
    HeckeElement::word(group, &shifted)
}

/// `T_{w_λ}` at `offset`.
pub fn t_w_lambda(
    group: &Arc<WeylGroup>,
    lambda: &Partition,
    offset: usize,
) -> Result<HeckeElement> {
    check_fits(group, lambda.size(), offset)?;
    Ok(shifted_word(group, &lambda.w_lambda().reduced_word, offset))
}

/// `z_λ = x_λ T_{w_λ} y_{λ'}` at `offset`.
pub fn z_partition(
    group: &Arc<WeylGroup>,
    lambda: &Partition,
    offset: usize,
) -> Result<HeckeElement> {
    let x = x_element(group, lambda.parts(), offset)?;
    let t = t_w_lambda(group, lambda, offset)?;
    let y = y_element(group, lambda.conjugate().parts(), offset)?;
    x.mul(&t)?.mul(&y)
}

/// `z'_λ = y_{λ'} T_{w_{λ'}} x_λ` at `offset`; its right ideal is the dual
/// Specht module `S_λ`.
pub fn z_prime_partition(
    group: &Arc<WeylGroup>,
    lambda: &Partition,
    offset: usize,
) -> Result<HeckeElement> {
    let conj = lambda.conjugate();
    let y = y_element(group, conj.parts(), offset)?;
    let t = t_w_lambda(group, &conj, offset)?;
    let x = x_element(group, lambda.parts(), offset)?;
    y.mul(&t)?.mul(&x)
}

/// `h_{a,b} = T_{w_{a,b}}` with `w_{a,b} = (s_a⋯s_1)(s_{a+1}⋯s_2)⋯(s_{a+b−1}⋯s_b)`,
/// and `h_{a,b} = 1` if `a` or `b` is zero.
pub fn h_ab(group: &Arc<WeylGroup>, a: usize, b: usize) -> Result<HeckeElement> {
    check_fits(group, a + b, 0)?;
    Ok(HeckeElement::word(group, &w_ab_word(a, b)))
}

/// The reduced word of `w_{a,b}`.
pub fn w_ab_word(a: usize, b: usize) -> Vec<usize> {
    if a == 0 || b == 0 {
        return Vec::new();
    }
    (0..b).flat_map(|k| (1 + k..=a + k).rev()).collect()
}

/// `L_i = T_{i−1} ⋯ T_1 T_0 T_1 ⋯ T_{i−1}` for `i ≥ 1`.
pub fn jucys_murphy(group: &Arc<WeylGroup>, i: usize) -> Result<HeckeElement> {
    if i == 0 || i > group.rank() || !group.has_generator(0) {
        return Err(Error::InvalidInput(format!(
            "L_{i} needs type B of rank ≥ {i}"
        )));
    }
    let word: Vec<usize> = (1..i).rev().chain(std::iter::once(0)).chain(1..i).collect();
    Ok(HeckeElement::word(group, &word))
}

/// `u⁺_k = ∏_{i=1}^k (v^{i−1} + L_i)`, `u⁺_0 = 1`.
pub fn u_plus(group: &Arc<WeylGroup>, k: usize) -> Result<HeckeElement> {
    let mut acc = HeckeElement::one(group);
    for i in 1..=k {
        let factor = HeckeElement::scalar(group, LaurentPoly::v_pow(i as i32 - 1))
            .add(&jucys_murphy(group, i)?)?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// `u⁻_k = ∏_{i=1}^k (ṽ v^{i−1} − L_i)`, `u⁻_0 = 1`.
pub fn u_minus(group: &Arc<WeylGroup>, k: usize) -> Result<HeckeElement> {
    let mut acc = HeckeElement::one(group);
    for i in 1..=k {
        let factor = HeckeElement::scalar(group, LaurentPoly::monomial(1, i as i32 - 1, 1))
            .sub(&jucys_murphy(group, i)?)?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::group::Kind;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn x_y_examples() {
        let g = WeylGroup::get(Kind::A, 2);
        let one = HeckeElement::one(&g);
        let t = HeckeElement::generator(&g, 1);
        assert_eq!(x_element(&g, &[1, 1], 0).unwrap(), one);
        assert_eq!(x_element(&g, &[2], 0).unwrap(), one.add(&t).unwrap());
        let y = one.sub(&t.scale(&LaurentPoly::v_pow(-1))).unwrap();
        assert_eq!(y_element(&g, &[2], 0).unwrap(), y);
    }

    #[test]
    fn z_examples() {
        let g1 = WeylGroup::get(Kind::A, 1);
        assert_eq!(
            z_partition(&g1, &p("[1]"), 0).unwrap(),
            HeckeElement::one(&g1)
        );
        let g = WeylGroup::get(Kind::A, 2);
        let one = HeckeElement::one(&g);
        let t = HeckeElement::generator(&g, 1);
        assert_eq!(z_partition(&g, &p("[2]"), 0).unwrap(), one.add(&t).unwrap());
        let expected = one.sub(&t.scale(&LaurentPoly::v_pow(-1))).unwrap();
        assert_eq!(z_partition(&g, &p("[1,1]"), 0).unwrap(), expected);
    }

    #[test]
    fn x_has_poincare_polynomial_size() {
        let g = WeylGroup::get(Kind::A, 4);
        assert_eq!(x_element(&g, &[2, 2], 0).unwrap().num_terms(), 4);
        assert_eq!(x_element(&g, &[3], 1).unwrap().num_terms(), 6);
        assert!(x_element(&g, &[3], 2).is_err());
    }

    #[test]
    fn h_ab_examples() {
        let g = WeylGroup::get(Kind::B, 3);
        assert_eq!(h_ab(&g, 0, 2).unwrap(), HeckeElement::one(&g));
        assert_eq!(h_ab(&g, 1, 1).unwrap(), HeckeElement::generator(&g, 1));
        assert_eq!(h_ab(&g, 2, 1).unwrap(), HeckeElement::word(&g, &[2, 1]));
        assert_eq!(w_ab_word(2, 2), vec![2, 1, 3, 2]);
        // w_{a,b} is reduced: T_{w_{a,b}} is a single basis element of length ab
        let h = h_ab(&g, 1, 2).unwrap();
        assert_eq!(h.num_terms(), 1);
    }

    #[test]
    fn u_examples() {
        let g = WeylGroup::get(Kind::B, 2);
        let one = HeckeElement::one(&g);
        let t0 = HeckeElement::generator(&g, 0);
        assert_eq!(u_plus(&g, 0).unwrap(), one);
        assert_eq!(u_plus(&g, 1).unwrap(), one.add(&t0).unwrap());
        assert_eq!(
            u_minus(&g, 1).unwrap(),
            one.scale(&LaurentPoly::tv()).sub(&t0).unwrap()
        );
    }

    #[test]
    fn jucys_murphy_elements_commute() {
        let g = WeylGroup::get(Kind::B, 3);
        let ls: Vec<_> = (1..=3).map(|i| jucys_murphy(&g, i).unwrap()).collect();
        for a in &ls {
            for b in &ls {
                assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
            }
        }
        assert!(jucys_murphy(&WeylGroup::get(Kind::A, 3), 1).is_err());
    }

    #[test]
    fn z_prime_of_two_rows() {
        // z'_{(2)} = y_{(1,1)} T_1 ... = x_{(2)}
        let g = WeylGroup::get(Kind::A, 2);
        assert_eq!(
            z_prime_partition(&g, &p("[2]"), 0).unwrap(),
            x_element(&g, &[2], 0).unwrap()
        );
    }
}
