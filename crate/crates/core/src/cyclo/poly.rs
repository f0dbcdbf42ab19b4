//! Dense univariate polynomials over ℚ, cyclotomic polynomials and the CRT
//! idempotent that splits ℚ[x]/(xʳ − 1) off its primitive factor.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{divisors, Rational};
use super::Cyclotomic;
use crate::error::{Error, Result};

/// Polynomial with rational coefficients, lowest degree first. Never has a
/// trailing zero; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c·xᵏ`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `xⁿ − 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[0] = -Rational::one();
        coeffs[n] += Rational::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((RatPoly::new(quot), RatPoly::new(rem)))
    }

    pub fn rem(&self, divisor: &RatPoly) -> Result<RatPoly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!("{self} is not divisible by {divisor}")));
        }
        Ok(q)
    }

    /// Extended Euclid: returns `(g, u, v)` with `u·a + v·b = g`, `g` monic
    /// (or zero when both inputs are zero).
    pub fn ext_gcd(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut u0, mut u1) = (RatPoly::one(), RatPoly::zero());
        let (mut v0, mut v1) = (RatPoly::zero(), RatPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let u2 = &u0 - &(&q * &u1);
            u0 = std::mem::replace(&mut u1, u2);
            let v2 = &v0 - &(&q * &v1);
            v0 = std::mem::replace(&mut v1, v2);
        }
        match r0.leading().cloned() {
            Some(lead) => {
                let inv = lead.recip();
                (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
            }
            None => (r0, u0, v0),
        }
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in a cyclotomic field.
    pub fn eval(&self, x: &Cyclotomic) -> Cyclotomic {
        let n = x.conductor();
        self.coeffs.iter().rev().fold(Cyclotomic::zero(n), |acc, c| {
            &(&acc * x) + &Cyclotomic::from_rational(c.clone(), n)
        })
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

type PhiCache = RwLock<HashMap<u32, Arc<[i64]>>>;

fn phi_cache() -> &'static PhiCache {
    static CACHE: OnceLock<PhiCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Integer coefficients of Φₙ, lowest degree first. Cached.
pub(crate) fn phi_coeffs(n: u32) -> Arc<[i64]> {
    if let Some(c) = phi_cache().read().expect("phi cache poisoned").get(&n) {
        return c.clone();
    }
    let poly = compute_cyclotomic(n);
    let coeffs: Arc<[i64]> = poly
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.denom().is_one());
            c.numer().to_i64().expect("cyclotomic coefficient fits in i64")
        })
        .collect();
    phi_cache()
        .write()
        .expect("phi cache poisoned")
        .insert(n, coeffs.clone());
    coeffs
}

fn compute_cyclotomic(n: u32) -> RatPoly {
    let mut acc = RatPoly::x_pow_minus_one(n as usize);
    for d in divisors(n as u64) {
        if d as u32 == n {
            continue;
        }
        let phi_d = RatPoly::new(
            phi_coeffs(d as u32)
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        );
        acc = acc.exact_div(&phi_d).expect("Φ_d divides xⁿ − 1");
    }
    acc
}

/// The n-th cyclotomic polynomial Φₙ(x): xⁿ − 1 divided exactly by Φ_d for
/// every proper divisor d of n.
pub fn cyclotomic_polynomial(n: u32) -> RatPoly {
    assert!(n >= 1, "cyclotomic_polynomial: n must be positive");
    RatPoly::new(
        phi_coeffs(n)
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect(),
    )
}

/// The idempotent `e ∈ ℚ[x]/(xʳ − 1)` with `e ≡ 1 mod Φᵣ` and
/// `e ≡ 0 mod (xʳ − 1)/Φᵣ`, reduced to degree < r.
pub fn crt_idempotent(r: u32) -> RatPoly {
    assert!(r >= 1, "crt_idempotent: r must be positive");
    let modulus = RatPoly::x_pow_minus_one(r as usize);
    let phi = cyclotomic_polynomial(r);
    let cofactor = modulus.exact_div(&phi).expect("Φᵣ divides xʳ − 1");
    let (g, _u, v) = RatPoly::ext_gcd(&phi, &cofactor);
    debug_assert!(g.is_one_poly());
    (&v * &cofactor).rem(&modulus).expect("nonzero modulus")
}

impl RatPoly {
    fn is_one_poly(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rational::rat;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), RatPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), RatPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), RatPoly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), RatPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), RatPoly::from_ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_105_has_a_coefficient_two() {
        let phi = cyclotomic_polynomial(105);
        assert_eq!(phi.degree(), Some(48));
        assert!(phi.coeffs().iter().any(|c| *c == rat(-2, 1)));
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=60u32 {
            let prod = divisors(n as u64)
                .into_iter()
                .fold(RatPoly::one(), |acc, d| &acc * &cyclotomic_polynomial(d as u32));
            assert_eq!(prod, RatPoly::x_pow_minus_one(n as usize), "n = {n}");
        }
    }

    #[test]
    fn idempotent_examples() {
        assert_eq!(crt_idempotent(1), RatPoly::one());
        assert_eq!(crt_idempotent(2), RatPoly::new(vec![rat(1, 2), rat(-1, 2)]));
        assert_eq!(crt_idempotent(4), RatPoly::new(vec![rat(1, 2), rat(0, 1), rat(-1, 2)]));
    }

    #[test]
    fn idempotent_squares_to_itself() {
        for r in 1..=24u32 {
            let e = crt_idempotent(r);
            let m = RatPoly::x_pow_minus_one(r as usize);
            assert_eq!((&e * &e).rem(&m).unwrap(), e, "r = {r}");
        }
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = RatPoly::from_ints(&[-1, 0, 0, 1]);
        let b = RatPoly::from_ints(&[-1, 0, 1]);
        let (g, u, v) = RatPoly::ext_gcd(&a, &b);
        assert_eq!(g, RatPoly::from_ints(&[-1, 1]));
        assert_eq!(&(&u * &a) + &(&v * &b), g);
    }

    #[test]
    fn display() {
        assert_eq!(RatPoly::from_ints(&[1, -1, 1]).to_string(), "x^2 - x + 1");
        assert_eq!(RatPoly::new(vec![rat(1, 2), rat(-1, 2)]).to_string(), "-1/2x + 1/2");
        assert_eq!(RatPoly::zero().to_string(), "0");
    }
}
