//! Combinatorial knot contact homology.
//!
//! From a PD code this crate builds the framed knot DGA, checks ∂² = 0 and the
//! grading, extracts and simplifies the degree-0 homology (the cord
//! algebra), counts augmentations to 𝔽_p, and computes augmentation
//! polynomials by resultants.
//!
//! ```
//! use kch::{augpoly, diagram::PdCode, hc0};
//!
//! let trefoil: PdCode = "PD[X[4,1,5,2],X[6,3,1,4],X[2,5,3,6]]".parse().unwrap();
//! let pres = hc0::simplify(&hc0::extract_presentation(&trefoil.crossing_data()));
//! assert_eq!(pres.generators.len(), 1);
//! let poly = augpoly::augmentation_polynomial(&pres).polynomial;
//! let expected: kch::laurent::LaurentPoly = "(l-1)*(m+1)*(l-m^3)".parse().unwrap();
//! assert_eq!(poly, expected.unit_normalize().unwrap());
//! ```

pub mod augment;
pub mod augpoly;
pub mod cli;
pub mod dga;
pub mod diagram;
pub mod hc0;
pub mod knots;
pub mod laurent;
pub mod ncalg;
