//! Exact arithmetic in the cyclotomic field `ℚ(ζ_e)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// The `e`-th cyclotomic polynomial `Φ_e`, as a one-variable polynomial in `v`.
///
/// Computed as `(x^e − 1) / ∏_{d | e, d < e} Φ_d` by exact division.
pub fn cyclotomic_polynomial(e: usize) -> LaurentPoly {
    assert!(e >= 1, "cyclotomic polynomial needs e >= 1");
    dense_cyclotomic(e).0.clone()
}

struct Dense(LaurentPoly, Vec<BigInt>);

fn dense_cyclotomic(e: usize) -> Arc<Dense> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Dense>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&e) {
        return hit.clone();
    }
    let mut num = &LaurentPoly::v_pow(e as i32) - &LaurentPoly::one();
    for d in 1..e {
        if e.is_multiple_of(d) {
            num = num
                .exact_div(&dense_cyclotomic(d).0)
                .expect("cyclotomic factors divide x^e - 1");
        }
    }
    let (_, deg) = num.v_degree_range().unwrap();
    let coeffs = (0..=deg).map(|k| num.coeff(k, 0)).collect();
    let entry = Arc::new(Dense(num, coeffs));
    cache.lock().unwrap().insert(e, entry.clone());
    entry
}

/// Degree of `Φ_e`, i.e. Euler's totient of `e`.
pub fn totient(e: usize) -> usize {
    dense_cyclotomic(e).1.len() - 1
}

/// An element of `ℚ(ζ_e)` stored as the coefficient vector of its reduced
/// representative `Σ c_k ζ^k`, `k < φ(e)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    e: usize,
    coeffs: Vec<BigRational>,
}

/// Reduces a dense coefficient vector modulo the monic polynomial `modulus`.
fn reduce(mut a: Vec<BigRational>, modulus: &[BigInt]) -> Vec<BigRational> {
    let d = modulus.len() - 1;
    while a.len() > d {
        let top = a.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = a.len() - d;
        for (k, m) in modulus[..d].iter().enumerate() {
            if !m.is_zero() {
                a[shift + k] -= &top * BigRational::from_integer(m.clone());
            }
        }
    }
    a.resize(d, BigRational::zero());
    a
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_sub_mul(a: &[BigRational], b: &[BigRational], c: &[BigRational]) -> Vec<BigRational> {
    // a - b*c
    let mut out = a.to_vec();
    let len = (b.len() + c.len()).saturating_sub(1).max(a.len());
    out.resize(len, BigRational::zero());
    for (i, x) in b.iter().enumerate() {
        for (j, y) in c.iter().enumerate() {
            out[i + j] -= x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let coef = r.last().unwrap() / &lead;
        for (k, bk) in b.iter().enumerate() {
            r[shift + k] -= &coef * bk;
        }
        q[shift] = coef;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

impl CyclotomicNumber {
    pub fn zero(e: usize) -> Self {
        Self {
            e,
            coeffs: vec![BigRational::zero(); totient(e)],
        }
    }

    pub fn one(e: usize) -> Self {
        Self::from_rational(e, BigRational::one())
    }

    pub fn from_rational(e: usize, r: BigRational) -> Self {
        let mut x = Self::zero(e);
        x.coeffs[0] = r;
        x
    }

    /// `ζ_e^k` for any integer `k`.
    pub fn zeta_pow(e: usize, k: i64) -> Self {
        let k = k.rem_euclid(e as i64) as usize;
        let mut a = vec![BigRational::zero(); k + 1];
        a[k] = BigRational::one();
        Self {
            e,
            coeffs: reduce(a, &dense_cyclotomic(e).1),
        }
    }

    pub fn order(&self) -> usize {
        self.e
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.e, other.e,
            "mixing elements of different cyclotomic fields"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        Self {
            e: self.e,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        Self {
            e: self.e,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            e: self.e,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let d = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); (2 * d).saturating_sub(1).max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Self {
            e: self.e,
            coeffs: reduce(prod, &dense_cyclotomic(self.e).1),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            e: self.e,
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `ℚ[x]`.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let modulus: Vec<BigRational> = dense_cyclotomic(self.e)
            .1
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect();
        let mut a = self.coeffs.clone();
        trim(&mut a);
        // invariant: s_i * self ≡ r_i (mod Φ_e)
        let (mut r0, mut r1) = (modulus, a);
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) =
            (vec![], vec![BigRational::one()]);
        while r1.len() != 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub_mul(&s0, &q, &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            if r1.is_empty() {
                // gcd has positive degree, impossible for an irreducible modulus
                return None;
            }
        }
        let c = r1[0].clone();
        let inv: Vec<BigRational> = s1.iter().map(|x| x / &c).collect();
        Some(Self {
            e: self.e,
            coeffs: reduce(inv, &dense_cyclotomic(self.e).1),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv().ok_or_else(|| {
            Error::InvalidInput(format!("division by zero in Q(zeta_{})", self.e))
        })?;
        Ok(self.mul(&inv))
    }

    /// The rational value if this element lies in `ℚ`.
    pub fn to_rational(&self) -> Result<BigRational> {
        cyclotomic_to_rational(self)
    }
}

/// Substitutes `v ↦ ζ_e`, `ṽ ↦ tv_value` into `p`.
pub fn cyclotomic_eval(p: &LaurentPoly, e: usize, tv_value: &BigRational) -> CyclotomicNumber {
    assert!(e >= 1);
    let mut dense = vec![BigRational::zero(); e];
    for ((i, j), c) in p.terms() {
        let k = (i as i64).rem_euclid(e as i64) as usize;
        let mut term = BigRational::from_integer(c.clone());
        if j != 0 {
            assert!(
                !tv_value.is_zero() || j > 0,
                "negative power of a zero ṽ value"
            );
            let base = if j > 0 {
                tv_value.clone()
            } else {
                tv_value.recip()
            };
            for _ in 0..j.unsigned_abs() {
                term *= &base;
            }
        }
        dense[k] += term;
    }
    CyclotomicNumber {
        e,
        coeffs: reduce(dense, &dense_cyclotomic(e).1),
    }
}

/// Extracts the rational value of `x`, failing with `NotRational` when `x ∉ ℚ`.
pub fn cyclotomic_to_rational(x: &CyclotomicNumber) -> Result<BigRational> {
    if x.coeffs[1..].iter().all(Zero::is_zero) {
        Ok(x.coeffs[0].clone())
    } else {
        Err(Error::NotRational(format!("{x} in Q(zeta_{})", x.e)))
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})*z"),
                _ => format!("({c})*z^{k}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicNumber[e={}]({self})", self.e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn one() -> BigRational {
        BigRational::one()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), LaurentPoly::from_coeffs(&[-1, 1]));
        assert_eq!(
            cyclotomic_polynomial(3),
            LaurentPoly::from_coeffs(&[1, 1, 1])
        );
        assert_eq!(
            cyclotomic_polynomial(6),
            LaurentPoly::from_coeffs(&[1, -1, 1])
        );
        assert_eq!(
            cyclotomic_polynomial(12),
            LaurentPoly::from_coeffs(&[1, 0, -1, 0, 1])
        );
        assert_eq!(totient(13), 12);
    }

    #[test]
    fn product_over_divisors_and_root() {
        for e in 1..=30usize {
            let prod: LaurentPoly = (1..=e)
                .filter(|d| e % d == 0)
                .map(cyclotomic_polynomial)
                .product();
            assert_eq!(
                prod,
                &LaurentPoly::v_pow(e as i32) - &LaurentPoly::one(),
                "e = {e}"
            );
            assert!(
                cyclotomic_eval(&cyclotomic_polynomial(e), e, &one()).is_zero(),
                "e = {e}"
            );
        }
    }

    #[test]
    fn eval_examples() {
        let p = LaurentPoly::from_coeffs(&[1, 1, 1]);
        assert!(cyclotomic_eval(&p, 3, &one()).is_zero());
        for e in 1..10 {
            let x = cyclotomic_eval(&LaurentPoly::v_pow(e as i32), e, &one());
            assert_eq!(x, CyclotomicNumber::one(e));
        }
        assert!(cyclotomic_eval(&LaurentPoly::from_coeffs(&[1, 1]), 2, &one()).is_zero());
        // v^-1 = v^(e-1)
        let a = cyclotomic_eval(&LaurentPoly::v_pow(-1), 5, &one());
        assert_eq!(a, CyclotomicNumber::zeta_pow(5, 4));
    }

    #[test]
    fn to_rational_examples() {
        let five = cyclotomic_eval(&LaurentPoly::constant(5), 7, &one());
        assert_eq!(
            five.to_rational().unwrap(),
            BigRational::from_integer(5.into())
        );

        let v = LaurentPoly::v();
        let vp1 = &v + &LaurentPoly::one();
        let num = v.pow(2) * vp1.pow(2) * (&v.pow(3) + &LaurentPoly::one());
        let den =
            vp1.clone() * (&v.pow(2) + &LaurentPoly::one()) * (&v.pow(3) + &LaurentPoly::one());
        let r = cyclotomic_eval(&num, 3, &one())
            .div(&cyclotomic_eval(&den, 3, &one()))
            .unwrap();
        assert_eq!(r.to_rational().unwrap(), one());

        let z = cyclotomic_eval(&v, 3, &one());
        assert!(matches!(z.to_rational(), Err(Error::NotRational(_))));
    }

    #[test]
    fn inverse_roundtrip() {
        for e in [3usize, 5, 7, 9, 12] {
            let x = cyclotomic_eval(&LaurentPoly::from_coeffs(&[2, -1, 0, 3]), e, &one());
            let y = x.inv().unwrap();
            assert_eq!(x.mul(&y), CyclotomicNumber::one(e));
        }
        assert!(CyclotomicNumber::zero(5).inv().is_none());
    }

    #[test]
    fn tv_substitution() {
        let p = &LaurentPoly::tv() + &LaurentPoly::monomial(1, 1, -1);
        let half = BigRational::new(1.into(), 2.into());
        let x = cyclotomic_eval(&p, 4, &half);
        // 1/2 + 2·ζ_4
        assert_eq!(x.coeffs()[0], half);
        assert_eq!(x.coeffs()[1], BigRational::from_integer(2.into()));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-8i32..9, -2i32..3, -4i64..5), 0..7).prop_map(|ts| {
            ts.into_iter()
                .map(|(i, j, c)| LaurentPoly::monomial(c, i, j))
                .sum()
        })
    }

    proptest! {
        #[test]
        fn eval_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(), e in 1usize..14, t in 1i64..4) {
            let tv = BigRational::from_integer(t.into());
            let ep = cyclotomic_eval(&p, e, &tv);
            let eq = cyclotomic_eval(&q, e, &tv);
            prop_assert_eq!(cyclotomic_eval(&(&p * &q), e, &tv), ep.mul(&eq));
            prop_assert_eq!(cyclotomic_eval(&(&p + &q), e, &tv), ep.add(&eq));
        }
    }
}
