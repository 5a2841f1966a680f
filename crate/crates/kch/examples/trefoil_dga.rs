//! Builds the framed knot DGA of the left-handed trefoil and checks ∂² = 0.

use kch::dga::{build_dga, check_d_squared, check_grading};
use kch::knots;
use kch::ncalg::Generator;

fn main() {
    let pd = knots::get("3_1_lh").expect("bundled");
    let cd = pd.crossing_data();
    println!("{pd}");
    for (k, x) in cd.crossings.iter().enumerate() {
        println!("crossing {}: over {} left {} right {} sign {:+}", k + 1, x.over, x.left, x.right, x.sign);
    }

    let dga = build_dga(&cd);
    let m = dga.matrices();
    println!("\nPsi^L =\n{}\nPsi^R =\n{}\nA =\n{}", m.psi_l, m.psi_r, m.a);

    for g in [Generator::b(1, 1), Generator::c(2, 3), Generator::d(1, 2), Generator::e(1)] {
        println!("d({g}) = {}", dga.boundary(g));
    }

    let dd = check_d_squared(&dga);
    println!("\n{} generators", dga.generators().len());
    println!("d^2 = 0: {} ({:?} sign rule)", dd.report.pass, dd.convention);
    for c in &dd.conventions {
        println!("  under {:?}: {}", c.sign, c.pass);
    }
    println!("grading: {}", check_grading(&dga).pass);
}
