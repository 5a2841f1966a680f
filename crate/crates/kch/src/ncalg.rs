//! Noncommutative graded polynomials over ℤ[λ±¹, μ±¹].
//!
//! Coefficients are central: λ and μ commute with every generator, while
//! generators do not commute with each other. Terms are kept in canonical
//! order (words by length, then lexicographically by generator).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::LaurentPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NcError {
    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("derivation has no image for generator {0}")]
    UnknownGenerator(Generator),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenKind {
    A,
    B,
    C,
    D,
    E,
}

impl GenKind {
    pub fn degree(self) -> u32 {
        match self {
            GenKind::A => 0,
            GenKind::B | GenKind::C => 1,
            GenKind::D | GenKind::E => 2,
        }
    }

    fn letter(self) -> char {
        match self {
            GenKind::A => 'a',
            GenKind::B => 'b',
            GenKind::C => 'c',
            GenKind::D => 'd',
            GenKind::E => 'e',
        }
    }
}

/// A free generator with 1-based indices; `e` generators use only `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: GenKind,
    pub i: u16,
    pub j: u16,
}

impl Generator {
    pub fn a(i: usize, j: usize) -> Self {
        Self::new(GenKind::A, i, j)
    }
    pub fn b(alpha: usize, i: usize) -> Self {
        Self::new(GenKind::B, alpha, i)
    }
    pub fn c(i: usize, alpha: usize) -> Self {
        Self::new(GenKind::C, i, alpha)
    }
    pub fn d(alpha: usize, beta: usize) -> Self {
        Self::new(GenKind::D, alpha, beta)
    }
    pub fn e(alpha: usize) -> Self {
        Self::new(GenKind::E, alpha, 0)
    }

    fn new(kind: GenKind, i: usize, j: usize) -> Self {
        Generator { kind, i: i as u16, j: j as u16 }
    }

    pub fn degree(&self) -> u32 {
        self.kind.degree()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.kind.letter();
        match self.kind {
            GenKind::E => write!(f, "{l}{}", self.i),
            _ if self.i < 10 && self.j < 10 => write!(f, "{l}{}{}", self.i, self.j),
            _ => write!(f, "{l}_{}_{}", self.i, self.j),
        }
    }
}

/// A word in the generators; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(Generator::degree).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Degree of an [`NCPoly`] under the word grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomogeneousDegree {
    /// The zero polynomial, homogeneous of every degree.
    Zero,
    Homogeneous(u32),
    Inhomogeneous,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, LaurentPoly>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::from_terms([(Word::empty(), c)])
    }

    pub fn generator(g: Generator) -> Self {
        Self::from_terms([(Word(vec![g]), LaurentPoly::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, LaurentPoly)>>(terms: I) -> Self {
        let mut map: BTreeMap<Word, LaurentPoly> = BTreeMap::new();
        for (w, c) in terms {
            let slot = map.entry(w).or_default();
            *slot = &*slot + &c;
        }
        map.retain(|_, c| !c.is_zero());
        NCPoly { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> LaurentPoly {
        self.terms.get(&Word::empty()).cloned().unwrap_or_default()
    }

    pub fn coeff(&self, w: &Word) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn scale(&self, k: &LaurentPoly) -> NCPoly {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c * k)))
    }

    /// All generators occurring in some word.
    pub fn generators(&self) -> std::collections::BTreeSet<Generator> {
        self.terms.keys().flat_map(|w| w.0.iter().copied()).collect()
    }

    pub fn contains_generator(&self, g: Generator) -> bool {
        self.terms.keys().any(|w| w.0.contains(&g))
    }

    pub fn homogeneous_degree(&self) -> HomogeneousDegree {
        let mut degs = self.terms.keys().map(Word::degree);
        match degs.next() {
            None => HomogeneousDegree::Zero,
            Some(d) if degs.all(|e| e == d) => HomogeneousDegree::Homogeneous(d),
            Some(_) => HomogeneousDegree::Inhomogeneous,
        }
    }

    /// Replaces every occurrence of `g` by `replacement`.
    pub fn substitute(&self, g: Generator, replacement: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            if !w.0.contains(&g) {
                out = out + NCPoly::from_terms([(w.clone(), c.clone())]);
                continue;
            }
            let mut acc = NCPoly::constant(c.clone());
            for &h in &w.0 {
                let f = if h == g { replacement.clone() } else { NCPoly::generator(h) };
                acc = &acc * &f;
            }
            out = out + acc;
        }
        out
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        NCPoly::from_terms(
            self.terms.iter().chain(rhs.terms.iter()).map(|(w, c)| (w.clone(), c.clone())),
        )
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        self + &(-rhs)
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().flat_map(|(w, c)| {
            rhs.terms.iter().map(move |(v, d)| (w.concat(v), c * d))
        }))
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for NCPoly {
            type Output = NCPoly;
            fn $f(self, rhs: NCPoly) -> NCPoly { (&self).$f(&rhs) }
        }
        impl $tr<&NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $f(self, rhs: &NCPoly) -> NCPoly { (&self).$f(rhs) }
        }
        impl $tr<NCPoly> for &NCPoly {
            type Output = NCPoly;
            fn $f(self, rhs: NCPoly) -> NCPoly { self.$f(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<LaurentPoly> for NCPoly {
    fn from(c: LaurentPoly) -> Self {
        NCPoly::constant(c)
    }
}

impl From<Generator> for NCPoly {
    fn from(g: Generator) -> Self {
        NCPoly::generator(g)
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let single = self.terms.len() == 1;
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let (neg, body) = match c.as_unit().filter(|u| u.lambda == 0 && u.mu == 0) {
                Some(u) if !w.is_empty() => (u.sign < 0, w.to_string()),
                _ if c.num_terms() == 1 => {
                    let (_, a) = c.terms().next().expect("one term");
                    let neg = a.sign() == num_bigint::Sign::Minus;
                    let abs = if neg { -c } else { c.clone() };
                    if w.is_empty() {
                        (neg, abs.to_string())
                    } else {
                        (neg, format!("{abs}*{w}"))
                    }
                }
                _ if w.is_empty() && single => (false, c.to_string()),
                _ if w.is_empty() => (false, format!("({c})")),
                _ => (false, format!("({c})*{w}")),
            };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            f.write_str(&body)?;
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({self})")
    }
}

/// Square matrix of noncommutative polynomials, stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NCMatrix {
    n: usize,
    entries: Vec<NCPoly>,
}

impl NCMatrix {
    pub fn zero(n: usize) -> Self {
        NCMatrix { n, entries: vec![NCPoly::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = NCPoly::one();
        }
        m
    }

    /// Builds from a function of 1-based `(row, column)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> NCPoly) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        NCMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut NCPoly {
        &mut self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &NCPoly)> {
        let n = self.n;
        self.entries.iter().enumerate().map(move |(k, p)| ((k / n + 1, k % n + 1), p))
    }

    pub fn mat_mul(&self, other: &NCMatrix) -> Result<NCMatrix, NcError> {
        if self.n != other.n {
            return Err(NcError::DimensionMismatch(self.n, other.n));
        }
        let n = self.n;
        Ok(NCMatrix::from_fn(n, |i, j| {
            (1..=n).fold(NCPoly::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        }))
    }

    pub fn add(&self, other: &NCMatrix) -> Result<NCMatrix, NcError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &NCMatrix) -> Result<NCMatrix, NcError> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &NCMatrix, f: impl Fn(&NCPoly, &NCPoly) -> NCPoly) -> Result<NCMatrix, NcError> {
        if self.n != other.n {
            return Err(NcError::DimensionMismatch(self.n, other.n));
        }
        Ok(NCMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }
}

impl fmt::Display for NCMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Sign convention used when extending a derivation to products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LeibnizSign {
    /// ∂(xy) = ∂(x)y + (−1)^{deg x} x∂(y)
    Graded,
    /// ∂(xy) = ∂(x)y + x∂(y)
    Unsigned,
}

/// A derivation given by its values on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    images: BTreeMap<Generator, NCPoly>,
    sign: LeibnizSign,
}

impl Derivation {
    pub fn new(sign: LeibnizSign) -> Self {
        Derivation { images: BTreeMap::new(), sign }
    }

    pub fn set(&mut self, g: Generator, image: NCPoly) {
        self.images.insert(g, image);
    }

    pub fn image(&self, g: Generator) -> Option<&NCPoly> {
        self.images.get(&g)
    }

    pub fn images(&self) -> impl Iterator<Item = (&Generator, &NCPoly)> {
        self.images.iter()
    }

    pub fn sign(&self) -> LeibnizSign {
        self.sign
    }

    pub fn with_sign(&self, sign: LeibnizSign) -> Derivation {
        Derivation { images: self.images.clone(), sign }
    }

    /// Linear extension to `p` by the Leibniz rule.
    pub fn apply(&self, p: &NCPoly) -> Result<NCPoly, NcError> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let mut prefix_degree = 0;
            for (t, &g) in w.0.iter().enumerate() {
                let image = self.images.get(&g).ok_or(NcError::UnknownGenerator(g))?;
                if !image.is_zero() {
                    let left = NCPoly::from_terms([(Word(w.0[..t].to_vec()), c.clone())]);
                    let right = NCPoly::from_terms([(Word(w.0[t + 1..].to_vec()), LaurentPoly::one())]);
                    let term = &(&left * image) * &right;
                    out = if self.sign == LeibnizSign::Graded && prefix_degree % 2 == 1 {
                        out - term
                    } else {
                        out + term
                    };
                }
                prefix_degree += g.degree();
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn a(i: usize, j: usize) -> NCPoly {
        Generator::a(i, j).into()
    }

    #[test]
    fn product_is_noncommutative_with_central_coefficients() {
        let p = &a(1, 2) * &a(2, 1);
        assert_eq!(p.to_string(), "a12*a21");
        assert_ne!(p, &a(2, 1) * &a(1, 2));
        let mu = NCPoly::constant(LaurentPoly::mu());
        assert_eq!(&mu * &a(1, 2), &a(1, 2) * &mu);
        assert_eq!(&mu * &a(1, 2), a(1, 2).scale(&LaurentPoly::mu()));
    }

    #[test]
    fn distribution_by_hand() {
        let lhs = &(NCPoly::constant(lp("1+m")) - a(1, 2)) * &a(1, 3);
        let expected = NCPoly::from_terms([
            (Word(vec![Generator::a(1, 3)]), lp("1+m")),
            (Word(vec![Generator::a(1, 2), Generator::a(1, 3)]), lp("-1")),
        ]);
        assert_eq!(lhs, expected);
        assert_eq!(lhs.to_string(), "(1 + m)*a13 - a12*a13");
    }

    #[test]
    fn degrees() {
        assert_eq!((&a(1, 2) * &a(2, 1)).homogeneous_degree(), HomogeneousDegree::Homogeneous(0));
        let b: NCPoly = Generator::b(1, 1).into();
        let c: NCPoly = Generator::c(1, 1).into();
        assert_eq!((&b + &c.scale(&LaurentPoly::mu())).homogeneous_degree(), HomogeneousDegree::Homogeneous(1));
        assert_eq!((&b + &a(1, 2)).homogeneous_degree(), HomogeneousDegree::Inhomogeneous);
        assert_eq!(NCPoly::zero().homogeneous_degree(), HomogeneousDegree::Zero);
    }

    #[test]
    fn leibniz_sign_on_odd_square() {
        let g = Generator::b(1, 1);
        let x: NCPoly = Generator::a(1, 2).into();
        let mut d = Derivation::new(LeibnizSign::Graded);
        d.set(g, x.clone());
        let gg = &NCPoly::from(g) * &NCPoly::from(g);
        let expected = &(&x * &NCPoly::from(g)) - &(&NCPoly::from(g) * &x);
        assert_eq!(d.apply(&gg).unwrap(), expected);
        // constants are cycles
        assert!(d.apply(&NCPoly::constant(lp("l*m"))).unwrap().is_zero());
        // generators without an image are rejected
        assert_eq!(
            d.apply(&a(1, 2)).unwrap_err(),
            NcError::UnknownGenerator(Generator::a(1, 2))
        );
    }

    #[test]
    fn matrix_identity_and_mismatch() {
        let m = NCMatrix::from_fn(2, |i, j| if i == j { NCPoly::one() } else { a(i, j) });
        assert_eq!(NCMatrix::identity(2).mat_mul(&m).unwrap(), m);
        assert_eq!(m.mat_mul(&NCMatrix::identity(3)).unwrap_err(), NcError::DimensionMismatch(2, 3));
    }

    #[test]
    fn substitution_replaces_every_occurrence() {
        let p = &(&a(1, 2) * &a(2, 1)) + &a(2, 1);
        let r = p.substitute(Generator::a(2, 1), &NCPoly::constant(LaurentPoly::lambda()));
        assert_eq!(r, &a(1, 2).scale(&LaurentPoly::lambda()) + &NCPoly::constant(LaurentPoly::lambda()));
    }
}
