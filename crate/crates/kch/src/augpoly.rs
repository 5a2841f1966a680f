//! Augmentation polynomials and the A-polynomial divisibility check.

use serde::{Serialize, Serializer};

use crate::hc0::Presentation;
use crate::laurent::{LaurentError, LaurentPoly, UniPoly};
use crate::ncalg::NCPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AugPolyMethod {
    /// No generators: gcd of the constant relations.
    Direct,
    /// One generator, two relations.
    Resultant,
    /// One generator, more relations: gcd over all pairs.
    GcdOfResultants,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AugPolyResult {
    #[serde(serialize_with = "as_text")]
    pub polynomial: LaurentPoly,
    pub method: AugPolyMethod,
    pub supported: bool,
    pub warnings: Vec<String>,
}

fn as_text<S: Serializer>(p: &LaurentPoly, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

impl AugPolyResult {
    fn unsupported(method: AugPolyMethod, reason: String) -> Self {
        AugPolyResult { polynomial: LaurentPoly::zero(), method, supported: false, warnings: vec![reason] }
    }
}

/// Collapses a relation in a single generator to a polynomial in `x`.
fn to_unipoly(r: &NCPoly) -> UniPoly {
    let mut coeffs: Vec<LaurentPoly> = Vec::new();
    for (w, c) in r.terms() {
        let k = w.len();
        if coeffs.len() <= k {
            coeffs.resize(k + 1, LaurentPoly::zero());
        }
        coeffs[k] = &coeffs[k] + c;
    }
    UniPoly::new(coeffs)
}

fn normalized(p: &LaurentPoly) -> LaurentPoly {
    p.unit_normalize().expect("nonzero")
}

/// Augmentation polynomial of a simplified presentation with at most one
/// generator, up to units.
pub fn augmentation_polynomial(pres: &Presentation) -> AugPolyResult {
    let relations: Vec<&NCPoly> = pres.relations.iter().filter(|r| !r.is_zero()).collect();
    match pres.generators.len() {
        0 => {
            let g = relations.iter().fold(LaurentPoly::zero(), |g, r| g.gcd(&r.constant_term()));
            if g.is_zero() {
                return AugPolyResult::unsupported(
                    AugPolyMethod::Direct,
                    "no relations: the augmentation variety is the whole torus".into(),
                );
            }
            let mut warnings = Vec::new();
            if relations.iter().any(|r| normalized(&r.constant_term()) != g) {
                warnings.push("relations are not all associates of their gcd; zero set may be smaller".into());
            }
            AugPolyResult { polynomial: g, method: AugPolyMethod::Direct, supported: true, warnings }
        }
        1 => {
            if relations.len() < 2 {
                return AugPolyResult::unsupported(
                    AugPolyMethod::None,
                    format!("one generator needs at least two relations, found {}", relations.len()),
                );
            }
            let polys: Vec<UniPoly> = relations.iter().map(|r| to_unipoly(r)).collect();
            let mut g = LaurentPoly::zero();
            for i in 0..polys.len() {
                for j in i + 1..polys.len() {
                    let r = polys[i].resultant(&polys[j]).expect("relations are nonzero");
                    g = g.gcd(&r);
                }
            }
            let method = if polys.len() == 2 { AugPolyMethod::Resultant } else { AugPolyMethod::GcdOfResultants };
            if g.is_zero() {
                return AugPolyResult::unsupported(
                    method,
                    "all resultants vanish: the augmentation variety is 2-dimensional".into(),
                );
            }
            AugPolyResult {
                polynomial: g,
                method,
                supported: true,
                warnings: vec!["up to extraneous resultant factors".into()],
            }
        }
        k => AugPolyResult::unsupported(AugPolyMethod::None, format!("{k} surviving generators; at most one supported")),
    }
}

/// Whether `(1 − μ²)·apoly` divides `augpoly(λ, −μ²)`.
pub fn check_apoly_divisibility(augpoly: &LaurentPoly, apoly: &LaurentPoly) -> Result<bool, LaurentError> {
    if apoly.is_zero() {
        return Err(LaurentError::Zero("A-polynomial"));
    }
    let one_minus_musq = LaurentPoly::one() - LaurentPoly::mu().pow(2);
    (one_minus_musq * apoly).divides(&augpoly.substitute_mu_neg_musq())
}
