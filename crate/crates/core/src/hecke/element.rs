//! Elements of the Hecke algebras `H_v(𝔖_n)` and `H_{v,ṽ}(B_n)` in the
//! standard basis `{T_w}`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::LaurentPoly;

use super::group::{Kind, SignedPermutation, WeylGroup};

/// A sparse linear combination `Σ c_w T_w` with Laurent-polynomial
/// coefficients. The quadratic relations are `(T_i + 1)(T_i − v) = 0` for
/// `i ≥ 1` and `(T_0 + 1)(T_0 − ṽ) = 0`.
#[derive(Clone)]
pub struct HeckeElement {
    group: Arc<WeylGroup>,
    terms: BTreeMap<u32, LaurentPoly>,
}

/// `q_s`: `ṽ` for `s_0`, `v` otherwise, as exponents of `(v, ṽ)`.
fn parameter_shift(s: usize) -> (i32, i32) {
    if s == 0 {
        (0, 1)
    } else {
        (1, 0)
    }
}

impl HeckeElement {
    pub fn zero(group: &Arc<WeylGroup>) -> Self {
        Self {
            group: group.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(group: &Arc<WeylGroup>) -> Self {
        Self::scalar(group, LaurentPoly::one())
    }

    pub fn scalar(group: &Arc<WeylGroup>, c: LaurentPoly) -> Self {
        let mut e = Self::zero(group);
        e.add_term(0, &c);
        e
    }

    /// `T_w` for a group element index.
    pub fn basis(group: &Arc<WeylGroup>, w: u32) -> Self {
        let mut e = Self::zero(group);
        e.terms.insert(w, LaurentPoly::one());
        e
    }

    /// `T_w` for a signed permutation, if it belongs to the group.
    pub fn basis_perm(group: &Arc<WeylGroup>, w: &SignedPermutation) -> Option<Self> {
        group.index_of(w).map(|i| Self::basis(group, i))
    }

    /// `T_{s_{i_1}} ⋯ T_{s_{i_k}}`; equals `T_w` when the word is reduced.
    pub fn word(group: &Arc<WeylGroup>, word: &[usize]) -> Self {
        word.iter()
            .fold(Self::one(group), |acc, &s| acc.mul_generator(s))
    }

    /// The generator `T_s`.
    pub fn generator(group: &Arc<WeylGroup>, s: usize) -> Self {
        Self::word(group, &[s])
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn kind(&self) -> Kind {
        self.group.kind()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> + '_ {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn coeff(&self, w: u32) -> LaurentPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    /// The trace form `τ(T_w) = δ_{w,1}`: the coefficient of `T_1`.
    pub fn trace(&self) -> LaurentPoly {
        self.coeff(0)
    }

    fn add_term(&mut self, w: u32, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    fn add_term_scaled(&mut self, w: u32, c: &LaurentPoly, scale: &LaurentPoly) {
        let slot = self.terms.entry(w).or_default();
        slot.add_scaled(c, scale);
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    fn check_same_algebra(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group)
            || (self.kind() == other.kind() && self.rank() == other.rank())
        {
            Ok(())
        } else {
            Err(Error::TagMismatch(format!(
                "{:?}{} vs {:?}{}",
                self.kind(),
                self.rank(),
                other.kind(),
                other.rank()
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_algebra(other)?;
        let mut out = self.clone();
        for (&w, c) in &other.terms {
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    /// Multiplies every coefficient by the scalar `c`.
    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(&self.group);
        if c.is_zero() {
            return out;
        }
        for (&w, a) in &self.terms {
            out.terms.insert(w, a * c);
        }
        out
    }

    /// Right multiplication by `T_s`:
    /// `T_w T_s = T_{ws}` if `ℓ(ws) > ℓ(w)`, else `(q_s − 1) T_w + q_s T_{ws}`.
    pub fn mul_generator(&self, s: usize) -> Self {
        assert!(
            self.group.has_generator(s),
            "T_{s} is not a generator of {:?}",
            self.group
        );
        let (i, j) = parameter_shift(s);
        let g = &self.group;
        let mut out = Self::zero(g);
        for (&w, c) in &self.terms {
            let ws = g.mul_generator(w, s);
            if g.length(ws) > g.length(w) {
                out.add_term(ws, c);
            } else {
                let qc = c.shift(i, j);
                out.add_term(w, &(&qc - c));
                out.add_term(ws, &qc);
            }
        }
        out
    }

    /// The product `self · other`.
    ///
    /// `other` is expanded along the prefix tree of reduced words: a
    /// depth-first walk keeps `self · T_u` for the current node `u` only, so
    /// every tree edge costs one generator step on an element the size of
    /// `self`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_algebra(other)?;
        let g = &self.group;
        let mut out = Self::zero(g);
        if self.is_zero() || other.is_zero() {
            return Ok(out);
        }
        let mut needed = vec![false; g.order()];
        for &w in other.terms.keys() {
            let mut u = w;
            while !needed[u as usize] {
                needed[u as usize] = true;
                if u == 0 {
                    break;
                }
                u = g.parent(u).0;
            }
        }
        let mut stack = vec![(0u32, self.clone())];
        while let Some((u, cur)) = stack.pop() {
            if let Some(c) = other.terms.get(&u) {
                for (&w, a) in &cur.terms {
                    out.add_term_scaled(w, a, c);
                }
            }
            for (child, s) in g.children(u) {
                if needed[child as usize] {
                    stack.push((child, cur.mul_generator(s)));
                }
            }
        }
        Ok(out)
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<'a, I: IntoIterator<Item = &'a HeckeElement>>(
        group: &Arc<WeylGroup>,
        factors: I,
    ) -> Result<Self> {
        factors
            .into_iter()
            .try_fold(Self::one(group), |acc, f| acc.mul(f))
    }

    /// The anti-automorphism `T_w ↦ T_{w⁻¹}` fixing every generator.
    pub fn star(&self) -> Self {
        let g = &self.group;
        let mut out = Self::zero(g);
        for (&w, c) in &self.terms {
            let mut word = g.reduced_word(w);
            word.reverse();
            let inv = word.iter().fold(0u32, |u, &s| g.mul_generator(u, s));
            out.add_term(inv, c);
        }
        out
    }

    /// Substitutes `ṽ ↦ 1` in every coefficient.
    pub fn specialize_tv_one(&self) -> Self {
        let mut out = Self::zero(&self.group);
        for (&w, c) in &self.terms {
            out.add_term(w, &c.specialize_tv_one());
        }
        out
    }
}

impl PartialEq for HeckeElement {
    fn eq(&self, other: &Self) -> bool {
        self.kind() == other.kind() && self.rank() == other.rank() && self.terms == other.terms
    }
}

impl Eq for HeckeElement {}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*T{}", self.group.element(w))?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v() -> LaurentPoly {
        LaurentPoly::v()
    }

    #[test]
    fn quadratic_relations() {
        let b2 = WeylGroup::get(Kind::B, 2);
        let t1 = HeckeElement::generator(&b2, 1);
        let t0 = HeckeElement::generator(&b2, 0);
        let one = HeckeElement::one(&b2);
        let lhs = t1.mul(&t1).unwrap();
        let rhs = t1
            .scale(&(&v() - &LaurentPoly::one()))
            .add(&one.scale(&v()))
            .unwrap();
        assert_eq!(lhs, rhs);
        let tv = LaurentPoly::tv();
        let lhs = t0.mul(&t0).unwrap();
        let rhs = t0
            .scale(&(&tv - &LaurentPoly::one()))
            .add(&one.scale(&tv))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn braid_and_quadratic_relations_exhaustive() {
        for (kind, n) in [(Kind::A, 4), (Kind::B, 4)] {
            let g = WeylGroup::get(kind, n);
            let gens: Vec<usize> = (0..n).filter(|&s| g.has_generator(s)).collect();
            for &s in &gens {
                let t = HeckeElement::generator(&g, s);
                let q = if s == 0 { LaurentPoly::tv() } else { v() };
                // (T + 1)(T − q) = 0
                let a = t.add(&HeckeElement::one(&g)).unwrap();
                let b = t.sub(&HeckeElement::scalar(&g, q)).unwrap();
                assert!(a.mul(&b).unwrap().is_zero());
                for &r in &gens {
                    if r <= s {
                        continue;
                    }
                    let m = match (s, r) {
                        (0, 1) => 4,
                        _ if r == s + 1 => 3,
                        _ => 2,
                    };
                    let alt = |x: usize, y: usize| -> Vec<usize> {
                        (0..m).map(|k| if k % 2 == 0 { x } else { y }).collect()
                    };
                    assert_eq!(
                        HeckeElement::word(&g, &alt(s, r)),
                        HeckeElement::word(&g, &alt(r, s))
                    );
                }
            }
        }
    }

    #[test]
    fn basis_words_are_basis_elements() {
        let g = WeylGroup::get(Kind::B, 3);
        for w in 0..g.order() as u32 {
            assert_eq!(
                HeckeElement::word(&g, &g.reduced_word(w)),
                HeckeElement::basis(&g, w)
            );
        }
    }

    #[test]
    fn basis_product_closure() {
        let g = WeylGroup::get(Kind::B, 3);
        for x in (0..g.order() as u32).step_by(5) {
            for y in (0..g.order() as u32).step_by(7) {
                let p = HeckeElement::basis(&g, x)
                    .mul(&HeckeElement::basis(&g, y))
                    .unwrap();
                assert!(p.num_terms() <= g.order());
                assert!(!p.is_zero());
            }
        }
    }

    #[test]
    fn tag_mismatch() {
        let a = HeckeElement::one(&WeylGroup::get(Kind::A, 3));
        let b = HeckeElement::one(&WeylGroup::get(Kind::B, 3));
        assert!(matches!(a.mul(&b), Err(Error::TagMismatch(_))));
        assert!(matches!(a.add(&b), Err(Error::TagMismatch(_))));
    }

    #[test]
    fn trace_examples() {
        let g = WeylGroup::get(Kind::A, 2);
        assert!(HeckeElement::one(&g).trace().is_one());
        assert!(HeckeElement::generator(&g, 1).trace().is_zero());
    }

    #[test]
    fn star_reverses_products() {
        let g = WeylGroup::get(Kind::B, 3);
        let x = HeckeElement::word(&g, &[0, 1, 2]);
        let y = HeckeElement::word(&g, &[2, 1, 0]);
        assert_eq!(x.star(), y);
        let xy = x.mul(&HeckeElement::generator(&g, 1)).unwrap();
        assert_eq!(xy.star(), HeckeElement::generator(&g, 1).mul(&y).unwrap());
    }

    fn arb_element(kind: Kind, n: usize) -> impl Strategy<Value = HeckeElement> {
        let g = WeylGroup::get(kind, n);
        let order = g.order() as u32;
        prop::collection::vec((0..order, -2i64..=2, -1i32..=1, -1i32..=1), 1..5).prop_map(
            move |ts| {
                let mut e = HeckeElement::zero(&g);
                for (w, c, i, j) in ts {
                    e.add_term(w, &LaurentPoly::monomial(c, i, j));
                }
                e
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn associativity(x in arb_element(Kind::B, 3), y in arb_element(Kind::B, 3), z in arb_element(Kind::B, 3)) {
            let left = x.mul(&y).unwrap().mul(&z).unwrap();
            let right = x.mul(&y.mul(&z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn trace_is_symmetric(x in arb_element(Kind::B, 3), y in arb_element(Kind::B, 3)) {
            prop_assert_eq!(x.mul(&y).unwrap().trace(), y.mul(&x).unwrap().trace());
        }

        #[test]
        fn trace_is_symmetric_type_a(x in arb_element(Kind::A, 3), y in arb_element(Kind::A, 3)) {
            prop_assert_eq!(x.mul(&y).unwrap().trace(), y.mul(&x).unwrap().trace());
        }

        #[test]
        fn distributivity(x in arb_element(Kind::A, 3), y in arb_element(Kind::A, 3), z in arb_element(Kind::A, 3)) {
            let left = x.mul(&y.add(&z).unwrap()).unwrap();
            let right = x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
