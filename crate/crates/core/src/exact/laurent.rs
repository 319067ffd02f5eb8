//! Sparse Laurent polynomials in `v` and `ṽ` with arbitrary-precision
//! integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent pair `(power of v, power of ṽ)`.
pub type Exponent = (i32, i32);

/// An element of `ℤ[v, v⁻¹, ṽ, ṽ⁻¹]`.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials. One-variable polynomials are those with every `ṽ` exponent 0.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial<T: Into<BigInt>>(c: T, v_exp: i32, tv_exp: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((v_exp, tv_exp), c);
        }
        Self { terms }
    }

    /// The indeterminate `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// The second indeterminate `ṽ`.
    pub fn tv() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn v_pow(k: i32) -> Self {
        Self::monomial(1, k, 0)
    }

    /// Builds a one-variable polynomial from `(exponent, coefficient)` pairs.
    pub fn from_v_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, T)>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term((k, 0), c.into());
        }
        p
    }

    /// Builds a polynomial from dense coefficients `c_0 + c_1 v + ...`.
    pub fn from_coeffs<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        Self::from_v_terms(
            coeffs
                .iter()
                .cloned()
                .enumerate()
                .map(|(k, c)| (k as i32, c)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// True when no term involves `ṽ`.
    pub fn is_one_variable(&self) -> bool {
        self.terms.keys().all(|&(_, j)| j == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponent, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, v_exp: i32, tv_exp: i32) -> BigInt {
        self.terms
            .get(&(v_exp, tv_exp))
            .cloned()
            .unwrap_or_default()
    }

    /// If the polynomial is `c·v^i·ṽ^j`, returns `(c, i, j)`.
    pub fn as_monomial(&self) -> Option<(BigInt, i32, i32)> {
        if self.terms.len() == 1 {
            let (&(i, j), c) = self.terms.iter().next().unwrap();
            Some((c.clone(), i, j))
        } else {
            None
        }
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, e: Exponent, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &LaurentPoly, c: &LaurentPoly) {
        for (&(i, j), a) in &other.terms {
            for (&(k, l), b) in &c.terms {
                self.add_term((i + k, j + l), a * b);
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, a)| (e, a * c)).collect(),
        }
    }

    /// Multiplies by `v^i ṽ^j`.
    pub fn shift(&self, i: i32, j: i32) -> LaurentPoly {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + i, b + j), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `ṽ ↦ 1`.
    pub fn specialize_tv_one(&self) -> LaurentPoly {
        let mut out = Self::zero();
        for (&(i, _), c) in &self.terms {
            out.add_term_ref((i, 0), c);
        }
        out
    }

    /// Substitutes `v ↦ v⁻¹` and `ṽ ↦ ṽ⁻¹`.
    pub fn bar(&self) -> LaurentPoly {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((-i, -j), c.clone()))
                .collect(),
        }
    }

    /// Value at `v = ṽ = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Minimum and maximum exponent of `v` over all terms.
    pub fn v_degree_range(&self) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|&(i, _)| i);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), i| (lo.min(i), hi.max(i))))
    }

    /// Minimum and maximum exponent of `ṽ` over all terms.
    pub fn tv_degree_range(&self) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|&(_, j)| j);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), j| (lo.min(j), hi.max(j))))
    }

    /// Leading term under the graded order (total degree, then lexicographic).
    fn leading(&self) -> Option<(Exponent, &BigInt)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| graded_cmp(**a, **b))
            .map(|(&e, c)| (e, c))
    }

    /// Exact quotient `self / den`; see [`laurent_exact_div`].
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        laurent_exact_div(self, den)
    }

    /// Square root with positive leading coefficient; see [`laurent_sqrt`].
    pub fn sqrt(&self) -> Result<LaurentPoly> {
        laurent_sqrt(self)
    }
}

fn graded_cmp(a: Exponent, b: Exponent) -> std::cmp::Ordering {
    (a.0 + a.1, a.0, a.1).cmp(&(b.0 + b.1, b.0, b.1))
}

/// `[k]_v = (v^k − 1)/(v − 1)`, extended to all integers `k`.
pub fn quantum_integer(k: i32) -> LaurentPoly {
    if k >= 0 {
        LaurentPoly::from_v_terms((0..k).map(|i| (i, 1)))
    } else {
        // (v^k − 1)/(v − 1) = −v^k [−k]_v
        LaurentPoly::from_v_terms((k..0).map(|i| (i, -1)))
    }
}

/// Exact division in `ℤ[v, v⁻¹, ṽ, ṽ⁻¹]` by long division with the graded
/// term order. Quotient terms are confined to the exponent box forced by
/// degree additivity, which makes the loop finite and turns any remainder
/// into `NotDivisible`.
pub fn laurent_exact_div(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly> {
    if den.is_zero() {
        return Err(Error::NotDivisible("division by zero".into()));
    }
    if num.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let (nv_lo, nv_hi) = num.v_degree_range().unwrap();
    let (dv_lo, dv_hi) = den.v_degree_range().unwrap();
    let (nt_lo, nt_hi) = num.tv_degree_range().unwrap();
    let (dt_lo, dt_hi) = den.tv_degree_range().unwrap();
    let v_box = (nv_lo - dv_lo, nv_hi - dv_hi);
    let t_box = (nt_lo - dt_lo, nt_hi - dt_hi);
    let fail = || Error::NotDivisible(format!("({num}) / ({den})"));
    if v_box.0 > v_box.1 || t_box.0 > t_box.1 {
        return Err(fail());
    }

    let (lead_e, lead_c) = den.leading().unwrap();
    let lead_c = lead_c.clone();
    let mut rem = num.clone();
    let mut quot = LaurentPoly::zero();
    while let Some((re, rc)) = rem.leading() {
        let (q, r) = rc.div_rem(&lead_c);
        if !r.is_zero() {
            return Err(fail());
        }
        let qe = (re.0 - lead_e.0, re.1 - lead_e.1);
        if qe.0 < v_box.0 || qe.0 > v_box.1 || qe.1 < t_box.0 || qe.1 > t_box.1 {
            return Err(fail());
        }
        let term = LaurentPoly::monomial(q.clone(), qe.0, qe.1);
        rem -= &(&term * den);
        quot.add_term(qe, q);
    }
    Ok(quot)
}

/// Square root of a one-variable Laurent polynomial, normalized to a
/// positive leading coefficient.
pub fn laurent_sqrt(f: &LaurentPoly) -> Result<LaurentPoly> {
    let not_square = || Error::NotASquare(format!("{f}"));
    if !f.is_one_variable() {
        return Err(Error::NotASquare(format!("{f} involves ṽ")));
    }
    if f.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let (lo, hi) = f.v_degree_range().unwrap();
    if lo.rem_euclid(2) != 0 || (hi - lo) % 2 != 0 {
        return Err(not_square());
    }
    let deg = (hi - lo) as usize;
    let h: Vec<BigInt> = (0..=deg).map(|k| f.coeff(lo + k as i32, 0)).collect();
    let top = &h[deg];
    if top.is_negative() {
        return Err(not_square());
    }
    let a = top.sqrt();
    if &(&a * &a) != top {
        return Err(not_square());
    }
    let half = deg / 2;
    let mut g = vec![BigInt::zero(); half + 1];
    g[half] = a.clone();
    let two_a = &a * 2;
    for t in 1..=half {
        // coefficient of x^{deg - t} in g² is 2·g[half]·g[half - t] + Σ of known products
        let target = deg - t;
        let mut s = BigInt::zero();
        for i in (half - t + 1)..=half {
            let j = target as isize - i as isize;
            if j > (half - t) as isize && j <= half as isize {
                s += &g[i] * &g[j as usize];
            }
        }
        let (q, r) = (&h[target] - s).div_rem(&two_a);
        if !r.is_zero() {
            return Err(not_square());
        }
        g[half - t] = q;
    }
    let root = LaurentPoly::from_v_terms(
        g.into_iter()
            .enumerate()
            .map(|(k, c)| (k as i32 + lo / 2, c)),
    );
    if &(&root * &root) != f {
        return Err(not_square());
    }
    Ok(root)
}

impl fmt::Display for LaurentPoly {
    /// Terms in ascending order of `(power of v, power of ṽ)`, with `u`
    /// standing for `ṽ`: `v^-1 + 1 + v`, `2*v^3*u^-1 - u`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&(i, j), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !abs.is_one() || (i == 0 && j == 0) {
                factors.push(abs.to_string());
            }
            for (sym, k) in [("v", i), ("u", j)] {
                match k {
                    0 => {}
                    1 => factors.push(sym.to_string()),
                    _ => factors.push(format!("{sym}^{k}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term_ref(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_scaled(self, rhs);
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}
