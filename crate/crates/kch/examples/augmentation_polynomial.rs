//! Augmentation polynomials of knots whose cord algebra reduces to at most
//! one generator.

use kch::augpoly::augmentation_polynomial;
use kch::hc0::{extract_presentation, simplify};
use kch::knots;

fn main() {
    for (name, pd) in knots::builtin() {
        let pres = simplify(&extract_presentation(&pd.crossing_data()));
        let r = augmentation_polynomial(&pres);
        if r.supported {
            println!("{name}: {} ({:?})", r.polynomial, r.method);
        } else {
            println!("{name}: unsupported, {}", r.warnings.join("; "));
        }
    }
}
