//! Checks that (1 - m^2) A(l, m) divides the augmentation polynomial at
//! (l, -m^2).

use kch::augpoly::{augmentation_polynomial, check_apoly_divisibility};
use kch::hc0::{extract_presentation, simplify};
use kch::knots;
use kch::laurent::LaurentPoly;

fn main() {
    let pd = knots::get("3_1_rh").expect("bundled");
    let aug = augmentation_polynomial(&simplify(&extract_presentation(&pd.crossing_data()))).polynomial;
    let apoly: LaurentPoly = "1 + l*m^6".parse().expect("valid");
    println!("augmentation polynomial: {aug}");
    println!("at (l, -m^2): {}", aug.substitute_mu_neg_musq());
    println!("A-polynomial {apoly} divides: {}", check_apoly_divisibility(&aug, &apoly).expect("nonzero"));

    let wrong: LaurentPoly = "l + m^6".parse().expect("valid");
    println!("{wrong} divides: {}", check_apoly_divisibility(&aug, &wrong).expect("nonzero"));
}
