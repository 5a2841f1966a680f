//! Batch report over the bundled knot table, as `kch table` prints it.

use kch::cli::{run_table, RunConfig};
use kch::knots::BUILTIN;

fn main() {
    let cfg = RunConfig { primes: vec![2, 3, 5], ..RunConfig::default() };
    let report = run_table(BUILTIN, &cfg);
    for k in &report.knots {
        let gens = k.presentation.as_ref().map_or(0, |p| p.generators.len());
        let totals: Vec<u64> = k.augmentations.iter().flatten().map(|t| t.total).collect();
        println!("{:7} n={} d2={:?} generators={gens} totals={totals:?}", k.name, k.n.unwrap_or(0), k.d_squared);
    }
    println!("\ndistinguished:");
    for (k, row) in report.knots.iter().zip(&report.distinguished) {
        let cells: String = row.iter().map(|c| if *c == Some(true) { 'x' } else { '.' }).collect();
        println!("{:7} {cells}", k.name);
    }
}
