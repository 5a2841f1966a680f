use std::fmt;

use super::{LaurentError, LaurentPoly};

/// Polynomial in one variable `x` over ℤ[λ±¹, μ±¹], dense in ascending degree.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<LaurentPoly>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(LaurentPoly::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Sylvester matrix of `self` (degree m) and `other` (degree n): n shifted
    /// rows of `self`'s coefficients followed by m rows of `other`'s, highest
    /// degree first.
    pub fn sylvester_matrix(&self, other: &UniPoly) -> Vec<Vec<LaurentPoly>> {
        let m = self.degree().unwrap_or(0);
        let n = other.degree().unwrap_or(0);
        let size = m + n;
        let mut rows = Vec::with_capacity(size);
        for (poly, deg, count) in [(self, m, n), (other, n, m)] {
            for shift in 0..count {
                let mut row = vec![LaurentPoly::zero(); size];
                for k in 0..=deg {
                    row[shift + (deg - k)] = poly.coeff(k);
                }
                rows.push(row);
            }
        }
        rows
    }

    /// Resultant with respect to `x`: the Sylvester determinant, computed by
    /// fraction-free (Bareiss) elimination.
    pub fn resultant(&self, other: &UniPoly) -> Result<LaurentPoly, LaurentError> {
        if self.is_zero() && other.is_zero() {
            return Err(LaurentError::Zero("resultant"));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        Ok(bareiss_det(self.sylvester_matrix(other)))
    }

    /// Evaluates coefficients and `x` in 𝔽_p.
    pub fn eval_mod(&self, p: u64, l0: u64, m0: u64, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, c| (super::mulmod(acc, x, p) + c.eval_mod(p, l0, m0)) % p)
    }
}

/// Determinant over the Laurent ring by Bareiss elimination; every division
/// is exact.
pub(crate) fn bareiss_det(mut a: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = a.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut sign_flip = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss step divides exactly");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn up(cs: &[&str]) -> UniPoly {
        UniPoly::new(cs.iter().map(|s| lp(s)).collect())
    }

    #[test]
    fn trefoil_resultant_matches_published_factorization() {
        let p = up(&["-m^2 - m", "-l", "l"]);
        let q = up(&["-m - 1", "-m", "l"]);
        let r = p.resultant(&q).unwrap().unit_normalize().unwrap();
        assert_eq!(r, lp("(l-1)*(m+1)*(l-m^3)").unit_normalize().unwrap());
    }

    #[test]
    fn linear_resultant() {
        let r = up(&["-3", "1"]).resultant(&up(&["-l", "1"])).unwrap();
        assert_eq!(r, lp("3 - l"));
    }

    #[test]
    fn resultant_of_polynomial_with_itself_vanishes() {
        let p = up(&["1 + m", "l^-1", "3*l*m"]);
        assert!(p.resultant(&p).unwrap().is_zero());
    }

    #[test]
    fn degenerate_inputs() {
        assert!(UniPoly::zero().resultant(&UniPoly::zero()).is_err());
        assert!(UniPoly::zero().resultant(&up(&["1", "1"])).unwrap().is_zero());
        // constant a against degree-2 q gives a^2
        assert_eq!(up(&["l+1"]).resultant(&up(&["5", "0", "1"])).unwrap(), lp("(l+1)^2"));
    }
}
