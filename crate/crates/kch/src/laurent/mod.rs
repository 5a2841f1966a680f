//! Exact arithmetic in the Laurent ring ℤ[λ±¹, μ±¹].
//!
//! Every polynomial is kept in canonical form: a sorted map from exponent
//! pairs `(i, j)` (meaning `λ^i μ^j`) to nonzero integer coefficients, so
//! value equality is structural equality.
//!
//! Text form: terms ascending by `(λ-exponent, μ-exponent)`, written as
//! `c*l^i*m^j` and joined with ` + ` / ` - `, e.g. `-1 - m^3 + l*m^-1 + l`.
//! The same grammar (plus parentheses and `^` on any factor) is accepted by
//! [`str::parse`].

mod dense;
mod parse;
mod unipoly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use dense::{Dense, GcdDomain as _};

pub use parse::ParseError;
pub use unipoly::UniPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("{0}: zero polynomial not allowed here")]
    Zero(&'static str),
    #[error("{0} is not a unit of the Laurent ring")]
    NotAUnit(String),
}

/// Exponent pair `(λ-exponent, μ-exponent)`.
pub type Exponent = (i64, i64);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

/// A unit `sign * λ^lambda * μ^mu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unit {
    pub sign: i8,
    pub lambda: i64,
    pub mu: i64,
}

impl Unit {
    pub fn to_poly(self) -> LaurentPoly {
        LaurentPoly::monomial(self.sign as i64, self.lambda, self.mu)
    }

    pub fn inverse(self) -> Unit {
        Unit { sign: self.sign, lambda: -self.lambda, mu: -self.mu }
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_terms([((0, 0), c.into())])
    }

    pub fn lambda() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn mu() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c * λ^i * μ^j`
    pub fn monomial(c: impl Into<BigInt>, i: i64, j: i64) -> Self {
        Self::from_terms([((i, j), c.into())])
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, BigInt)>>(terms: I) -> Self {
        let mut map: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| !Zero::is_zero(c));
        LaurentPoly { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Returns the unit if `self = ±λ^a μ^b`.
    pub fn as_unit(&self) -> Option<Unit> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(i, j), c) = self.terms.iter().next()?;
        if c.is_one() {
            Some(Unit { sign: 1, lambda: i, mu: j })
        } else if (-c).is_one() {
            Some(Unit { sign: -1, lambda: i, mu: j })
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    pub fn unit_inverse(&self) -> Result<LaurentPoly, LaurentError> {
        self.as_unit()
            .map(|u| u.inverse().to_poly())
            .ok_or_else(|| LaurentError::NotAUnit(self.to_string()))
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c * k)))
    }

    /// Multiplies by `λ^di μ^dj`.
    pub fn shift(&self, di: i64, dj: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((i + di, j + dj), c.clone())).collect(),
        }
    }

    fn min_exponents(&self) -> Option<Exponent> {
        let mi = self.terms.keys().map(|e| e.0).min()?;
        let mj = self.terms.keys().map(|e| e.1).min()?;
        Some((mi, mj))
    }

    /// The image under the ring map λ ↦ λ, μ ↦ −μ².
    pub fn substitute_mu_neg_musq(&self) -> LaurentPoly {
        Self::from_terms(self.terms.iter().map(|(&(i, j), c)| {
            let c = if j.rem_euclid(2) == 1 { -c } else { c.clone() };
            ((i, 2 * j), c)
        }))
    }

    /// Unit multiple with minimum exponents 0 and positive coefficient on the
    /// lexicographically largest monomial (λ-exponent compared first).
    pub fn unit_normalize(&self) -> Result<LaurentPoly, LaurentError> {
        let (mi, mj) = self.min_exponents().ok_or(LaurentError::Zero("unit_normalize"))?;
        let p = self.shift(-mi, -mj);
        let lead = p.terms.values().next_back().expect("nonzero");
        Ok(if lead.is_negative() { -p } else { p })
    }

    /// Whether `self` divides `p` in ℤ[λ±¹, μ±¹].
    pub fn divides(&self, p: &LaurentPoly) -> Result<bool, LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::Zero("divides"));
        }
        Ok(p.exact_div(self).is_some())
    }

    /// `Some(q)` with `self = q * d`, when `q` exists in the Laurent ring.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (sp, (si, sj)) = self.to_dense();
        let (dp, (di, dj)) = d.to_dense();
        let q = sp.exact_div(&dp)?;
        Some(LaurentPoly::from_dense(&q).shift(si - di, sj - dj))
    }

    /// Greatest common divisor, unit-normalized; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() && other.is_zero() {
            return LaurentPoly::zero();
        }
        let g = if self.is_zero() {
            other.clone()
        } else if other.is_zero() {
            self.clone()
        } else {
            let (a, _) = self.to_dense();
            let (b, _) = other.to_dense();
            LaurentPoly::from_dense(&a.gcd(&b))
        };
        g.unit_normalize().expect("nonzero gcd")
    }

    /// Value at `(λ, μ) = (l0, m0)` in 𝔽_p; both must be nonzero mod `p`.
    pub fn eval_mod(&self, p: u64, l0: u64, m0: u64) -> u64 {
        let li = inv_mod(l0, p);
        let mi = inv_mod(m0, p);
        let mut acc = 0u64;
        for (&(i, j), c) in &self.terms {
            let cm = c.mod_floor_u64(p);
            let lp = if i >= 0 { pow_mod(l0, i as u64, p) } else { pow_mod(li, (-i) as u64, p) };
            let mp = if j >= 0 { pow_mod(m0, j as u64, p) } else { pow_mod(mi, (-j) as u64, p) };
            acc = (acc + mulmod(mulmod(cm, lp, p), mp, p)) % p;
        }
        acc
    }

    /// Shifted copy as an element of ℤ[λ][μ] (outer variable μ) with the
    /// shift that was removed.
    fn to_dense(&self) -> (Dense<Dense<BigInt>>, Exponent) {
        let (mi, mj) = self.min_exponents().unwrap_or((0, 0));
        let mut outer: Vec<Vec<BigInt>> = Vec::new();
        for (&(i, j), c) in &self.terms {
            let (i, j) = ((i - mi) as usize, (j - mj) as usize);
            if outer.len() <= j {
                outer.resize(j + 1, Vec::new());
            }
            if outer[j].len() <= i {
                outer[j].resize(i + 1, BigInt::default());
            }
            outer[j][i] = c.clone();
        }
        (Dense::new(outer.into_iter().map(Dense::new).collect()), (mi, mj))
    }

    fn from_dense(p: &Dense<Dense<BigInt>>) -> LaurentPoly {
        Self::from_terms(p.c.iter().enumerate().flat_map(|(j, inner)| {
            inner.c.iter().enumerate().map(move |(i, c)| ((i as i64, j as i64), c.clone()))
        }))
    }
}

trait ModFloor {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        let m = BigInt::from(p);
        let r = ((self % &m) + &m) % &m;
        r.to_u64().expect("reduced residue fits")
    }
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Inverse modulo a prime `p` (Fermat); `a` must be nonzero mod `p`.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "zero has no inverse");
    pow_mod(a, p - 2, p)
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms.iter().chain(rhs.terms.iter()).map(|(e, c)| (*e, c.clone())),
        )
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (*e, c.clone()))
                .chain(rhs.terms.iter().map(|(e, c)| (*e, -c))),
        )
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().flat_map(|(&(i, j), c)| {
            rhs.terms.iter().map(move |(&(k, l), d)| ((i + k, j + l), c * d))
        }))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$f(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$f(rhs) }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { self.$f(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&(i, j), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() || (i == 0 && j == 0) {
                parts.push(a.to_string());
            }
            for (sym, e) in [("l", i), ("m", j)] {
                match e {
                    0 => {}
                    1 => parts.push(sym.to_string()),
                    _ => parts.push(format!("{sym}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(LaurentPoly::lambda() * LaurentPoly::mu(), p("l*m"));
        assert_eq!(p("1+m") * LaurentPoly::one(), p("1+m"));
        // (λ−μ³)(μ+1) expanded term by term
        let expected = LaurentPoly::from_terms([
            ((1, 1), 1.into()),
            ((1, 0), 1.into()),
            ((0, 4), (-1).into()),
            ((0, 3), (-1).into()),
        ]);
        assert_eq!(p("l - m^3") * p("m + 1"), expected);
    }

    #[test]
    fn rendering_is_sorted_and_terse() {
        assert_eq!(p("l*m^-1 - m^3 + l - 1").to_string(), "-1 - m^3 + l*m^-1 + l");
        assert_eq!(p("2*l^2*m - 3").to_string(), "-3 + 2*l^2*m");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
    }

    #[test]
    fn unit_normalization_examples() {
        assert_eq!(p("l^-1*m^2*(l - 1)").unit_normalize().unwrap(), p("l - 1"));
        assert_eq!(p("l - 1").unit_normalize().unwrap(), p("l - 1"));
        assert_eq!(p("-m^3 + l").unit_normalize().unwrap(), p("l - m^3"));
        assert_eq!(p("1 - l").unit_normalize().unwrap(), p("l - 1"));
        assert_eq!(LaurentPoly::zero().unit_normalize(), Err(LaurentError::Zero("unit_normalize")));
    }

    #[test]
    fn divisibility_examples() {
        assert!(p("m+1").divides(&p("(l-1)*(m+1)")).unwrap());
        assert!(!p("l-1").divides(&p("l-m^3")).unwrap());
        assert!(p("1-m^2").divides(&p("(1-l*m^8)*(1-m^2)")).unwrap());
        // divisible over Q only
        assert!(!p("2*l+2").divides(&p("l+1")).unwrap());
        // units divide everything
        assert!(p("-l^-3*m").divides(&p("7 + m")).unwrap());
        assert!(LaurentPoly::zero().divides(&p("1")).is_err());
    }

    #[test]
    fn substitution_examples() {
        assert_eq!(p("m+1").substitute_mu_neg_musq(), p("1-m^2"));
        assert_eq!(p("l-m^3").substitute_mu_neg_musq(), p("l+m^6"));
        assert_eq!(
            p("(l-1)*(m+1)*(1-l*m^3)").substitute_mu_neg_musq(),
            p("(l-1)*(1-m^2)*(1+l*m^6)")
        );
        assert_eq!(p("m^-1").substitute_mu_neg_musq(), p("-m^-2"));
    }

    #[test]
    fn gcd_is_normalized() {
        let g = p("(l-1)*(m+1)*m^-3*(l+m)").gcd(&p("-(m+1)*(l-1)*(1+l*m^2)*l^4"));
        assert_eq!(g, p("(l-1)*(m+1)").unit_normalize().unwrap());
        assert_eq!(p("3*l").gcd(&p("6")), p("3"));
    }

    #[test]
    fn modular_evaluation() {
        // λ⁻¹ + 2μ at (λ, μ) = (2, 3) mod 5: 3 + 6 = 9 = 4
        assert_eq!(p("l^-1 + 2*m").eval_mod(5, 2, 3), 4);
        assert_eq!(p("-1").eval_mod(7, 1, 1), 6);
    }
}
