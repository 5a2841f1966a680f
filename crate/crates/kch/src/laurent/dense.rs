//! Dense univariate polynomials over a gcd domain, used recursively to get
//! exact division and gcd in ℤ[λ] and ℤ[λ][μ].

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub(crate) trait GcdDomain: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(q)` with `self = q * d` when such `q` exists.
    fn exact_div(&self, d: &Self) -> Option<Self>;
    /// Greatest common divisor with positive leading sign.
    fn gcd(&self, other: &Self) -> Self;
    fn leading_sign(&self) -> i8;
}

impl GcdDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if Zero::is_zero(d) {
            return None;
        }
        let (q, r) = self.div_rem(d);
        Zero::is_zero(&r).then_some(q)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn leading_sign(&self) -> i8 {
        if self.is_negative() {
            -1
        } else if Zero::is_zero(self) {
            0
        } else {
            1
        }
    }
}

/// Coefficients in ascending degree; never has a trailing zero.
#[derive(Clone, PartialEq, Debug)]
pub(crate) struct Dense<R> {
    pub(crate) c: Vec<R>,
}

impl<R: GcdDomain> Dense<R> {
    pub(crate) fn new(mut c: Vec<R>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Dense { c }
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn lc(&self) -> &R {
        self.c.last().expect("leading coefficient of zero polynomial")
    }

    fn scale(&self, k: &R) -> Self {
        Dense::new(self.c.iter().map(|x| x.mul(k)).collect())
    }

    fn shifted(&self, by: usize) -> Self {
        let mut c = vec![R::zero(); by];
        c.extend(self.c.iter().cloned());
        Dense::new(c)
    }

    pub(crate) fn content(&self) -> R {
        self.c.iter().fold(R::zero(), |acc, x| acc.gcd(x))
    }

    fn primitive_part(&self) -> Self {
        if self.c.is_empty() {
            return self.clone();
        }
        let cont = self.content();
        let pp = Dense::new(
            self.c
                .iter()
                .map(|x| x.exact_div(&cont).expect("content divides every coefficient"))
                .collect(),
        );
        pp.sign_normalized()
    }

    fn sign_normalized(self) -> Self {
        if self.leading_sign() < 0 {
            GcdDomain::neg(&self)
        } else {
            self
        }
    }

    /// `lc(d)^(deg a - deg d + 1) * a mod d`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-division by zero");
        let lc = d.lc().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let t = r.lc().clone();
            r = r.scale(&lc).sub(&d.scale(&t).shifted(dr - dd));
        }
        r
    }
}

impl<R: GcdDomain> GcdDomain for Dense<R> {
    fn zero() -> Self {
        Dense { c: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let z = R::zero();
        Dense::new(
            (0..n)
                .map(|i| self.c.get(i).unwrap_or(&z).add(other.c.get(i).unwrap_or(&z)))
                .collect(),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.c.is_empty() || other.c.is_empty() {
            return Self::zero();
        }
        let mut c = vec![R::zero(); self.c.len() + other.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            for (j, y) in other.c.iter().enumerate() {
                c[i + j] = c[i + j].add(&x.mul(y));
            }
        }
        Dense::new(c)
    }
    fn neg(&self) -> Self {
        Dense { c: self.c.iter().map(|x| x.neg()).collect() }
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let mut r = self.clone();
        let mut q = vec![R::zero(); self.c.len().saturating_sub(dd)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let t = r.lc().exact_div(d.lc())?;
            r = r.sub(&d.scale(&t).shifted(dr - dd));
            q[dr - dd] = t;
        }
        Some(Dense::new(q))
    }
    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone().sign_normalized();
        }
        if other.is_zero() {
            return self.clone().sign_normalized();
        }
        let cont = self.content().gcd(&other.content());
        let (mut f, mut g) = (self.primitive_part(), other.primitive_part());
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = f.pseudo_rem(&g);
            f = g;
            g = r.primitive_part();
        }
        f.scale(&cont).sign_normalized()
    }
    fn leading_sign(&self) -> i8 {
        self.c.last().map_or(0, |x| x.leading_sign())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Dense<BigInt> {
        Dense::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn integer_polynomial_gcd() {
        // (x+1)(x-2) and (x+1)(3x+5)
        let a = z(&[-2, -1, 1]);
        let b = z(&[5, 8, 3]);
        assert_eq!(a.gcd(&b), z(&[1, 1]));
        // content is kept: gcd(2x+2, 4x+4) = 2x+2
        assert_eq!(z(&[2, 2]).gcd(&z(&[4, 4])), z(&[2, 2]));
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = z(&[-2, -1, 1]);
        assert_eq!(a.exact_div(&z(&[1, 1])), Some(z(&[-2, 1])));
        assert_eq!(a.exact_div(&z(&[1, 2])), None);
        // divisible over Q but not over Z
        assert_eq!(z(&[1, 1]).exact_div(&z(&[2, 2])), None);
    }

    #[test]
    fn bivariate_gcd_recovers_common_factor() {
        // outer variable y over Z[x]: (x*y + 1) * (y - x) and (x*y + 1) * (y + 2)
        let xy1 = Dense::new(vec![z(&[1]), z(&[0, 1])]);
        let f = xy1.mul(&Dense::new(vec![z(&[0, -1]), z(&[1])]));
        let g = xy1.mul(&Dense::new(vec![z(&[2]), z(&[1])]));
        assert_eq!(f.gcd(&g), xy1);
    }
}
