//! Applies every available Reidemeister move to the figure-eight knot and
//! compares augmentation signatures.

use std::collections::BTreeMap;

use kch::augment::aug_signature;
use kch::knots;

fn main() {
    let pd = knots::get("4_1").expect("bundled");
    let primes = [2, 3];
    let base = aug_signature(&pd, &primes).expect("tractable");
    let mut tally: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for mv in pd.move_sites() {
        let moved = pd.apply_move(&mv).expect("site is applicable");
        let same = aug_signature(&moved, &primes).expect("tractable") == base;
        let e = tally.entry(mv.kind()).or_default();
        e.0 += 1;
        e.1 += usize::from(same);
    }
    for (kind, (total, same)) in tally {
        println!("{kind}: {same}/{total} moves keep the signature");
    }

    let mut grown = pd.clone();
    for _ in 0..2 {
        let mv = grown.move_sites().into_iter().find(|m| m.kind() == "R2+").expect("R2 site");
        grown = grown.apply_move(&mv).expect("applicable");
    }
    let r3: Vec<_> = grown.move_sites().into_iter().filter(|m| m.kind() == "R3").collect();
    println!("after two R2 moves: {} crossings, {} R3 sites", grown.num_crossings(), r3.len());
    for mv in r3 {
        let moved = grown.apply_move(&mv).expect("applicable");
        println!("  {mv:?}: same = {}", aug_signature(&moved, &primes).expect("tractable") == base);
    }
}
