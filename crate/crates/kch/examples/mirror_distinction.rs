//! Augmentation signatures tell the two trefoils apart.

use kch::augment::{aug_signature, first_difference};
use kch::knots;

fn main() {
    let lh = knots::get("3_1_lh").expect("bundled");
    let rh = lh.mirror();
    let primes = [2, 3, 5, 7];
    let a = aug_signature(&lh, &primes).expect("tractable");
    let b = aug_signature(&rh, &primes).expect("tractable");
    for (ta, tb) in a.tables.iter().zip(&b.tables) {
        println!("p={}: totals {} vs {}", ta.p, ta.total(), tb.total());
    }
    match first_difference(&a, &b).expect("same primes") {
        Some(d) => println!("distinguished at p={} (lambda, mu) = ({}, {}): {} vs {}", d.p, d.lambda, d.mu, d.count_a, d.count_b),
        None => println!("not distinguished"),
    }
}
