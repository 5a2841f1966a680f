//! Counts augmentations to F_p cell by cell.

use kch::augment::count_augmentations;
use kch::hc0::{extract_presentation, simplify};
use kch::knots;

fn main() {
    let p: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    for name in ["unknot", "3_1_lh", "3_1_rh", "4_1"] {
        let pd = knots::get(name).expect("bundled");
        let pres = simplify(&extract_presentation(&pd.crossing_data()));
        let t = count_augmentations(&pres, p).expect("tractable");
        println!("{name} over F_{p}: total {}", t.total());
        for l in 1..p {
            let row: Vec<String> = (1..p).map(|m| t.count(l, m).to_string()).collect();
            println!("  lambda={l}: {}", row.join(" "));
        }
    }
}
