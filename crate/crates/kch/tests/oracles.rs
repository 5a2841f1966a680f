mod common;

use common::{permutation_det, random_laurent, rng};
use kch::augment::{count_augmentations, count_augmentations_exhaustive, count_augmentations_with, AugConfig};
use kch::hc0::{extract_presentation, simplify};
use kch::knots::builtin;
use kch::laurent::UniPoly;
use rand::Rng;

#[test]
fn resultant_matches_sylvester_expansion() {
    let mut r = rng(1);
    for _ in 0..100 {
        let poly = |r: &mut rand::rngs::StdRng| {
            let deg = r.gen_range(1..=3);
            let mut cs: Vec<_> = (0..deg).map(|_| random_laurent(r, 2)).collect();
            cs.push(random_laurent(r, 2) + kch::laurent::LaurentPoly::one());
            UniPoly::new(cs)
        };
        let (p, q) = (poly(&mut r), poly(&mut r));
        if p.is_zero() || q.is_zero() {
            continue;
        }
        assert_eq!(p.resultant(&q).unwrap(), permutation_det(&p.sylvester_matrix(&q)), "{p} / {q}");
    }
}

#[test]
fn pruned_search_matches_exhaustive() {
    for (name, pd) in builtin() {
        let full = extract_presentation(&pd.crossing_data());
        let simple = simplify(&full);
        for p in [2, 3] {
            assert_eq!(count_augmentations(&simple, p).unwrap(), count_augmentations_exhaustive(&simple, p).unwrap(), "{name}");
        }
    }
}

#[test]
fn simplification_preserves_counts() {
    let wide = AugConfig { max_prime: 13, max_generators: 30 };
    for (name, pd) in builtin() {
        let full = extract_presentation(&pd.crossing_data());
        let simple = simplify(&full);
        for p in [2, 3, 5, 7] {
            let a = count_augmentations_with(&full, p, &wide).unwrap();
            assert_eq!(a, count_augmentations(&simple, p).unwrap(), "{name} p={p}");
        }
    }
}

#[test]
fn substitution_log_replays_into_the_ideal() {
    // every original relation vanishes at every augmentation of the simplified presentation
    for name in ["3_1_lh", "4_1"] {
        let pd = kch::knots::get(name).unwrap();
        let full = extract_presentation(&pd.crossing_data());
        let simple = simplify(&full);
        for rel in &full.relations {
            let reduced = simple.reduce(rel);
            assert!(reduced.generators().iter().all(|g| simple.generators.contains(g)), "{name}");
        }
        let with_reduced = kch::hc0::Presentation {
            generators: simple.generators.clone(),
            relations: simple.relations.iter().cloned().chain(full.relations.iter().map(|r| simple.reduce(r))).collect(),
            substitution_log: Vec::new(),
        };
        for p in [2, 3, 5] {
            assert_eq!(count_augmentations(&with_reduced, p).unwrap(), count_augmentations(&simple, p).unwrap(), "{name}");
        }
    }
}
