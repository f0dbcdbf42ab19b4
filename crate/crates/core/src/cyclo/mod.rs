//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! An element is a coefficient vector in the power basis `1, ζ, …, ζ^{φ(N)−1}`
//! of `ℚ[x]/Φ_N(x)`, where `ζ = ζ_N = exp(2πi/N)`. Elements of different
//! conductors are combined by lifting both to the lcm via `ζ_N = ζ_L^{L/N}`.
//! No minimal-conductor normalisation is attempted; equality compares lifts.

mod poly;
pub mod rational;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use poly::{crt_idempotent, cyclotomic_polynomial, RatPoly};
pub use rational::Rational;

use crate::error::{Error, Result};
use crate::limits::max_conductor;
use poly::phi_coeffs;
use rational::{format_rational, parse_rational, totient};

/// An element of ℚ(ζ_N) with explicit conductor `N`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

pub(crate) fn check_conductor(n: u64) -> Result<u32> {
    let cap = max_conductor();
    if n == 0 {
        return Err(Error::Parse("conductor must be positive".into()));
    }
    if n > cap as u64 {
        return Err(Error::ConductorTooLarge { conductor: n, cap });
    }
    Ok(n as u32)
}

fn mul_small(c: &Rational, k: i64) -> Rational {
    match k {
        0 => Rational::zero(),
        1 => c.clone(),
        -1 => -c,
        _ => c * Rational::from_integer(BigInt::from(k)),
    }
}

/// Reduces an arbitrary-length vector in ℚ[x] modulo `xᴺ − 1` and then `Φ_N`.
fn reduce(n: u32, mut v: Vec<Rational>) -> Vec<Rational> {
    let nu = n as usize;
    if v.len() > nu {
        for j in nu..v.len() {
            let c = std::mem::take(&mut v[j]);
            if !c.is_zero() {
                v[j % nu] += c;
            }
        }
        v.truncate(nu);
    }
    let phi = phi_coeffs(n);
    let deg = phi.len() - 1;
    for t in (deg..v.len()).rev() {
        let c = std::mem::take(&mut v[t]);
        if c.is_zero() {
            continue;
        }
        for (j, &p) in phi[..deg].iter().enumerate() {
            if p != 0 {
                v[t - deg + j] -= mul_small(&c, p);
            }
        }
    }
    v.resize(deg, Rational::zero());
    v
}

impl Cyclotomic {
    /// Builds an element from power-basis coefficients; the vector may be
    /// shorter than φ(N) (zero-padded) or longer (reduced mod Φ_N).
    pub fn new(conductor: u32, coeffs: Vec<Rational>) -> Result<Self> {
        let n = check_conductor(conductor as u64)?;
        Ok(Cyclotomic {
            conductor: n,
            coeffs: reduce(n, coeffs),
        })
    }

    pub fn zero(n: u32) -> Self {
        assert!(n >= 1, "conductor must be positive");
        Cyclotomic {
            conductor: n,
            coeffs: vec![Rational::zero(); totient(n as u64) as usize],
        }
    }

    pub fn from_rational(q: Rational, n: u32) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = q;
        z
    }

    pub fn from_integer(k: i64, n: u32) -> Self {
        Self::from_rational(Rational::from_integer(k.into()), n)
    }

    pub fn one(n: u32) -> Self {
        Self::from_integer(1, n)
    }

    /// `ζ_n^k` for any integer `k`.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let e = k.rem_euclid(n as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        Cyclotomic {
            conductor: n,
            coeffs: reduce(n, v),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the element in ℚ(ζ_m); `m` must be a multiple of the
    /// conductor.
    pub fn lift(&self, m: u32) -> Result<Self> {
        if m == 0 || !m.is_multiple_of(self.conductor) {
            return Err(Error::InvalidLift {
                from: self.conductor,
                to: m,
            });
        }
        let m = check_conductor(m as u64)?;
        Ok(self.lift_unchecked(m))
    }

    fn lift_unchecked(&self, m: u32) -> Self {
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut v = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            v[j * step] = c.clone();
        }
        Cyclotomic {
            conductor: m,
            coeffs: reduce(m, v),
        }
    }

    fn common(&self, other: &Self) -> (std::borrow::Cow<'_, Self>, Self, u32) {
        let l = self.conductor.lcm(&other.conductor);
        let a = if l == self.conductor {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.lift_unchecked(l))
        };
        (a, other.lift_unchecked(l), l)
    }

    fn combined_conductor(&self, other: &Self) -> Result<u32> {
        check_conductor(self.conductor.lcm(&other.conductor) as u64)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.combined_conductor(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.combined_conductor(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.combined_conductor(other)?;
        Ok(self * other)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.combined_conductor(other)?;
        Ok(self * &other.inverse()?)
    }

    /// Multiplicative inverse via `u·a + v·Φ_N = 1`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = RatPoly::new(self.coeffs.clone());
        let phi = cyclotomic_polynomial(self.conductor);
        let (g, u, _v) = RatPoly::ext_gcd(&a, &phi);
        if g.degree() != Some(0) {
            return Err(Error::Internal("non-unit in a cyclotomic field".into()));
        }
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: reduce(self.conductor, u.coeffs().to_vec()),
        })
    }

    /// The Galois automorphism `ζ ↦ ζᵏ`; `k = −1` is complex conjugation.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.conductor as i64;
        if k.gcd(&n) != 1 {
            return Err(Error::NotCoprime { k, n: self.conductor });
        }
        let k = k.rem_euclid(n) as usize;
        let nu = self.conductor as usize;
        let mut v = vec![Rational::zero(); nu];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[(j * k) % nu] += c;
            }
        }
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: reduce(self.conductor, v),
        })
    }

    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit")
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        Ok(base.pow(k.unsigned_abs() as u32))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Total order on coefficient vectors at the common conductor. Only
    /// meaningful as a deterministic tie-breaker.
    pub fn cmp_coeffs(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.common(other);
        a.coeffs.cmp(&b.coeffs)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b, l) = self.common(rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyclotomic { conductor: l, coeffs }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b, l) = self.common(rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        Cyclotomic { conductor: l, coeffs }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b, l) = self.common(rhs);
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        let mut v = vec![Rational::zero(); len];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        Cyclotomic {
            conductor: l,
            coeffs: reduce(l, v),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, &Rational)> = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let zeta = match k {
                0 => String::new(),
                1 => format!("ζ{}", self.conductor),
                _ => format!("ζ{}^{}", self.conductor, k),
            };
            if k == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{zeta}")?;
            } else {
                write!(f, "{abs}{zeta}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CyclotomicRepr::deserialize(d)?;
        let expected = if repr.conductor == 0 {
            0
        } else {
            totient(repr.conductor as u64) as usize
        };
        if repr.coeffs.len() != expected {
            return Err(D::Error::custom(format!(
                "conductor {} needs {} coefficients, got {}",
                repr.conductor,
                expected,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Cyclotomic::new(repr.conductor, coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::rational::{int, rat};
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(n, k)
    }

    #[test]
    fn one_is_the_multiplicative_identity() {
        let a = &z(5, 1) + &Cyclotomic::from_rational(rat(3, 7), 5);
        assert_eq!(&Cyclotomic::one(5) * &a, a);
        assert_eq!(&Cyclotomic::one(1) * &a, a);
    }

    #[test]
    fn inverse_of_one_plus_omega() {
        let a = &Cyclotomic::one(3) + &z(3, 1);
        let expected = &Cyclotomic::one(3) + &z(3, 2);
        assert_eq!(a.inverse().unwrap(), expected);
        assert_eq!(Cyclotomic::one(3).checked_div(&a).unwrap(), expected);
        // and 1 + ζ₃² = −ζ₃
        assert_eq!(expected, -z(3, 1));
    }

    #[test]
    fn lifts_respect_equality() {
        assert_eq!(z(3, 1), z(6, 2));
        assert_eq!(z(3, 1).lift(6).unwrap().coeffs(), &[int(-1), int(1)]);
        assert_eq!(z(4, 1), z(12, 3));
        assert_ne!(z(4, 1), z(12, 9));
        assert!(z(3, 1).lift(4).is_err());
    }

    #[test]
    fn zeta_powers_wrap() {
        assert_eq!(z(6, 6), Cyclotomic::one(6));
        assert_eq!(z(6, -1), z(6, 5));
        assert_eq!(z(2, 1), Cyclotomic::from_integer(-1, 2));
        assert_eq!(z(1, 7), Cyclotomic::one(1));
    }

    #[test]
    fn galois_examples() {
        assert_eq!(z(3, 1).galois(2).unwrap(), &Cyclotomic::from_integer(-1, 3) - &z(3, 1));
        assert_eq!(z(4, 1).galois(-1).unwrap(), -z(4, 1));
        let a = &Cyclotomic::one(5) + &z(5, 1).scale(&int(2));
        let b = &Cyclotomic::one(5) + &z(5, 2).scale(&int(2));
        assert_eq!(a.galois(2).unwrap(), b);
        assert!(matches!(a.galois(5), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn rationality() {
        let s = &z(5, 1) + &(&z(5, 2) + &(&z(5, 3) + &z(5, 4)));
        assert_eq!(s.to_rational(), Some(int(-1)));
        assert_eq!(z(4, 1).to_rational(), None);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Cyclotomic::zero(7).inverse().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn conductor_cap() {
        assert!(matches!(
            Cyclotomic::new(20_000, vec![]),
            Err(Error::ConductorTooLarge { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let a = &z(5, 2).scale(&rat(-3, 4)) + &Cyclotomic::one(5);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"conductor":5,"coeffs":["1/1","0/1","-3/4","0/1"]}"#);
        let b: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        assert!(serde_json::from_str::<Cyclotomic>(r#"{"conductor":5,"coeffs":["1"]}"#).is_err());
    }

    #[test]
    fn display() {
        let a = &Cyclotomic::one(5) - &z(5, 2).scale(&int(2));
        assert_eq!(a.to_string(), "1 - 2ζ5^2");
        assert_eq!(Cyclotomic::zero(3).to_string(), "0");
    }
}
