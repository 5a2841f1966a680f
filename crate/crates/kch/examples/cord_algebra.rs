//! Extracts the cord algebra presentation and reduces it by tame eliminations.

use kch::hc0::{extract_presentation, simplify};
use kch::knots;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "3_1_lh".into());
    let pd = knots::get(&name).unwrap_or_else(|| panic!("no bundled knot {name}"));
    let full = extract_presentation(&pd.crossing_data());
    println!("{name}: {} generators, {} relations", full.generators.len(), full.relations.len());

    let s = simplify(&full);
    for sub in &s.substitution_log {
        println!("  {} := {}", sub.generator, sub.replacement);
    }
    let gens: Vec<String> = s.generators.iter().map(ToString::to_string).collect();
    println!("surviving generators: [{}]", gens.join(", "));
    for r in &s.relations {
        println!("  {r} = 0");
    }
}
