//! The eigenvalue oracle evaluated at an integer point modulo a prime.
//!
//! Exact Laurent arithmetic makes the word-basis products too slow beyond
//! rank 4 or 5. Specializing `v` and `ṽ` to integers modulo a large prime keeps
//! every coefficient one machine word, which makes rank 6 (46080 basis
//! elements) take seconds. Agreement of `f_λ(v₀, ṽ₀) mod p` with a closed form
//! is strong evidence of equality; disagreement is proof of inequality.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::combinatorics::Bipartition;
use crate::error::{Error, Result};
use crate::exact::LaurentPoly;

use super::element::HeckeElement;
use super::group::{Kind, WeylGroup};
use super::oracle::z_bipartition;
use super::structural::{h_ab, u_minus, u_plus};

/// A specialization `v ↦ v₀`, `ṽ ↦ ṽ₀` in `𝔽_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModularPoint {
    pub v: u64,
    pub tv: u64,
    pub p: u64,
}

impl Default for ModularPoint {
    /// `v = 2`, `ṽ = 3` modulo the Mersenne prime `2^61 − 1`.
    fn default() -> Self {
        Self {
            v: 2,
            tv: 3,
            p: (1 << 61) - 1,
        }
    }
}

impl ModularPoint {
    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.p as u128) as u64
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Inverse by Fermat; `p` must be prime and `a ≠ 0`.
    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    fn signed_pow(&self, base: u64, e: i32) -> u64 {
        let r = self.pow(base, e.unsigned_abs() as u64);
        if e >= 0 {
            r
        } else {
            self.inv(r)
        }
    }

    fn reduce(&self, c: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = ((c % &p) + &p) % &p;
        r.to_u64().expect("reduced residue fits in u64")
    }

    /// The image of a Laurent polynomial.
    pub fn eval(&self, poly: &LaurentPoly) -> u64 {
        poly.terms().fold(0, |acc, ((i, j), c)| {
            let m = self.mul(self.signed_pow(self.v, i), self.signed_pow(self.tv, j));
            self.add(acc, self.mul(m, self.reduce(c)))
        })
    }

    /// `T_s · y` for a dense coefficient vector.
    fn left_mul_generator(&self, g: &WeylGroup, s: usize, y: &[u64]) -> Vec<u64> {
        let q = if s == 0 { self.tv } else { self.v } % self.p;
        let q_minus_one = (q + self.p - 1) % self.p;
        let mut out = vec![0u64; y.len()];
        for (w, &c) in y.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sw = g.left_mul_generator(w as u32, s) as usize;
            if g.length(sw as u32) > g.length(w as u32) {
                out[sw] = self.add(out[sw], c);
            } else {
                out[w] = self.add(out[w], self.mul(c, q_minus_one));
                out[sw] = self.add(out[sw], self.mul(c, q));
            }
        }
        out
    }

    /// `x · y` with `x` exact and sparse and `y` a dense image vector.
    fn left_mul(&self, x: &HeckeElement, y: &[u64]) -> Vec<u64> {
        let g = x.group();
        let mut acc = vec![0u64; y.len()];
        for (u, c) in x.terms() {
            let mut t = y.to_vec();
            for &s in g.reduced_word(u).iter().rev() {
                t = self.left_mul_generator(g, s, &t);
            }
            let cv = self.eval(c);
            for (a, b) in acc.iter_mut().zip(t) {
                *a = self.add(*a, self.mul(cv, b));
            }
        }
        acc
    }

    fn dense(&self, x: &HeckeElement) -> Vec<u64> {
        let mut d = vec![0u64; x.group().order()];
        for (w, c) in x.terms() {
            d[w as usize] = self.eval(c);
        }
        d
    }
}

/// `f_λ(v₀, ṽ₀) mod p`, computed as the scalar `c` with `X = c·Y` exactly as
/// in [`super::oracle_f`], but with all coefficients in `𝔽_p`.
pub fn oracle_f_mod(lambda: &Bipartition, point: ModularPoint) -> Result<u64> {
    let (n, a) = (lambda.size(), lambda.a());
    if n == 0 {
        return Err(Error::InvalidInput("empty bipartition".into()));
    }
    let g = WeylGroup::get(Kind::B, n);
    let prefix = u_minus(&g, n - a)?
        .mul(&h_ab(&g, n - a, a)?)?
        .mul(&u_plus(&g, a)?)?;
    let prefix_h = prefix.mul(&h_ab(&g, a, n - a)?)?;
    let z = z_bipartition(&g, lambda)?;
    let y = point.left_mul(&prefix, &point.dense(&z));
    let x = point.left_mul(&prefix_h, &y);
    let w = y
        .iter()
        .position(|&c| c != 0)
        .ok_or_else(|| Error::ZeroVector(format!("Specht generator of {lambda} vanishes mod p")))?;
    let c = point.mul(x[w], point.inv(y[w]));
    if x.iter().zip(&y).any(|(&xa, &ya)| xa != point.mul(c, ya)) {
        return Err(Error::InconsistentEigenvalue(format!(
            "{lambda}: X is not a multiple of Y mod p"
        )));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::all_bipartitions;
    use crate::hecke::oracle_f;

    #[test]
    fn modular_oracle_matches_exact_oracle() {
        let pt = ModularPoint::default();
        for n in 1..=3 {
            for l in all_bipartitions(n) {
                assert_eq!(
                    oracle_f_mod(&l, pt).unwrap(),
                    pt.eval(&oracle_f(&l).unwrap()),
                    "{l}"
                );
            }
        }
    }

    #[test]
    fn eval_handles_negative_exponents_and_coefficients() {
        let pt = ModularPoint {
            v: 2,
            tv: 3,
            p: 101,
        };
        let poly = LaurentPoly::monomial(-1, -1, 0);
        // −1/2 mod 101 = 50
        assert_eq!(pt.eval(&poly), 50);
        assert_eq!(pt.eval(&LaurentPoly::monomial(1, 0, 2)), 9);
    }
}
