//! Degree-0 homology: the cord algebra presentation and its simplification.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::dga::build_matrices;
use crate::diagram::CrossingData;
use crate::ncalg::{Generator, NCPoly};

/// One elimination `generator := replacement`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub generator: Generator,
    pub replacement: NCPoly,
}

/// Generators and relations of the cord algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<Generator>,
    pub relations: Vec<NCPoly>,
    pub substitution_log: Vec<Substitution>,
}

/// Generators a_ij (i ≠ j) and the 2n² entries of Ψᴸ·A then A·Ψᴿ, row-major.
pub fn extract_presentation(cd: &CrossingData) -> Presentation {
    let n = cd.n();
    let m = build_matrices(cd);
    let left = m.psi_l.mat_mul(&m.a).expect("same size");
    let right = m.a.mat_mul(&m.psi_r).expect("same size");
    let generators = (1..=n)
        .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| Generator::a(i, j)))
        .collect();
    let relations = left.entries().chain(right.entries()).map(|(_, p)| p.clone()).collect();
    Presentation { generators, relations, substitution_log: Vec::new() }
}

/// Representative of `p` up to unit multiples: the coefficient of the
/// smallest word is unit-normalized.
pub fn normalize_up_to_unit(p: &NCPoly) -> NCPoly {
    let Some((_, c)) = p.terms().next() else {
        return NCPoly::zero();
    };
    let normal = c.unit_normalize().expect("nonzero coefficient");
    let unit = c.exact_div(&normal).expect("normalization is a unit multiple");
    p.scale(&unit.unit_inverse().expect("unit"))
}

/// A generator occurring in `rel` only as a lone linear term with unit
/// coefficient, together with `−u⁻¹·w` where `rel = u·g + w`.
fn eliminations(rel: &NCPoly) -> Vec<Substitution> {
    let mut out = Vec::new();
    for (w, u) in rel.terms() {
        let [g] = w.0[..] else { continue };
        if !u.is_unit() {
            continue;
        }
        let rest = rel - &NCPoly::from_terms([(w.clone(), u.clone())]);
        if rest.contains_generator(g) {
            continue;
        }
        let inv = u.unit_inverse().expect("unit");
        out.push(Substitution { generator: g, replacement: -rest.scale(&inv) });
    }
    out
}

fn dedupe(relations: Vec<NCPoly>) -> Vec<NCPoly> {
    let mut seen = BTreeSet::new();
    relations
        .into_iter()
        .filter(|r| !r.is_zero())
        .filter(|r| seen.insert(normalize_up_to_unit(r).to_string()))
        .collect()
}

fn is_linear(s: &Substitution) -> bool {
    s.replacement.terms().all(|(w, _)| w.len() <= 1)
}

fn total_terms(relations: &[NCPoly]) -> usize {
    relations.iter().map(NCPoly::num_terms).sum()
}

fn substituted(relations: &[NCPoly], s: &Substitution) -> Vec<NCPoly> {
    dedupe(relations.iter().map(|r| r.substitute(s.generator, &s.replacement)).collect())
}

/// Next elimination and the relations after it. Linear replacements come
/// first, by relation index and then largest generator. Otherwise nonlinear
/// ones, shortest replacement first, provided the total number of terms at
/// most doubles.
fn next_elimination(relations: &[NCPoly]) -> Option<(Substitution, Vec<NCPoly>)> {
    let linear = relations
        .iter()
        .find_map(|r| eliminations(r).into_iter().filter(is_linear).max_by_key(|s| s.generator));
    if let Some(s) = linear {
        let after = substituted(relations, &s);
        return Some((s, after));
    }
    let mut candidates: Vec<Substitution> = relations
        .iter()
        .flat_map(|r| {
            let mut es = eliminations(r);
            es.sort_by_key(|s| std::cmp::Reverse(s.generator));
            es
        })
        .collect();
    candidates.sort_by_key(|s| (s.replacement.terms().map(|(w, _)| w.len()).max(), s.replacement.num_terms()));
    let budget = 2 * total_terms(relations);
    candidates.into_iter().find_map(|s| {
        let after = substituted(relations, &s);
        (total_terms(&after) <= budget).then_some((s, after))
    })
}

/// Eliminates generators through unit-coefficient linear occurrences until
/// none remain. Zero relations and relations equal up to a unit are dropped
/// after every step.
pub fn simplify(p: &Presentation) -> Presentation {
    simplify_steps(p, usize::MAX)
}

/// [`simplify`] stopped after at most `max_steps` eliminations.
pub fn simplify_steps(p: &Presentation, max_steps: usize) -> Presentation {
    let mut out = p.clone();
    out.relations = dedupe(out.relations);
    for _ in 0..max_steps {
        let Some((sub, after)) = next_elimination(&out.relations) else { break };
        out.relations = after;
        out.generators.retain(|&g| g != sub.generator);
        out.substitution_log.push(sub);
    }
    out
}

impl Presentation {
    /// Expresses `p` in the surviving generators by replaying the log.
    pub fn reduce(&self, p: &NCPoly) -> NCPoly {
        self.substitution_log
            .iter()
            .fold(p.clone(), |acc, s| acc.substitute(s.generator, &s.replacement))
    }

    /// Image of an original generator in the surviving generators.
    pub fn image_of(&self, g: Generator) -> NCPoly {
        self.reduce(&NCPoly::generator(g))
    }

    pub fn to_json(&self) -> Hc0Json {
        Hc0Json {
            generators: self.generators.iter().map(ToString::to_string).collect(),
            relations: self.relations.iter().map(ToString::to_string).collect(),
            eliminated: self.substitution_log.len(),
            substitutions: self
                .substitution_log
                .iter()
                .map(|s| format!("{} := {}", s.generator, s.replacement))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hc0Json {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub eliminated: usize,
    pub substitutions: Vec<String>,
}

/// The surviving word of length one, if the presentation has one generator.
pub fn single_generator(p: &Presentation) -> Option<Generator> {
    match p.generators[..] {
        [g] => Some(g),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::PdCode;
    use crate::laurent::LaurentPoly;

    fn cd(s: &str) -> CrossingData {
        s.parse::<PdCode>().unwrap().crossing_data()
    }

    const LH: &str = "PD[X[4,1,5,2],X[6,3,1,4],X[2,5,3,6]]";

    #[test]
    fn trefoil_presentation() {
        let p = extract_presentation(&cd(LH));
        assert_eq!(p.generators.len(), 6);
        assert_eq!(p.relations.len(), 18);
        assert_eq!(p.relations[0].to_string(), "-a21 + l*a31");
    }

    #[test]
    fn kink_presentation_is_constant() {
        let p = extract_presentation(&cd("PD[X[1,1,2,2]]"));
        assert!(p.generators.is_empty());
        assert_eq!(p.relations.len(), 2);
        assert!(p.relations.iter().all(|r| r.generators().is_empty()));
    }

    #[test]
    fn trefoil_reduces_to_one_generator() {
        let s = simplify(&extract_presentation(&cd(LH)));
        assert_eq!(s.generators, vec![Generator::a(1, 2)]);
        let log: Vec<String> = s.substitution_log.iter().map(|x| x.generator.to_string()).collect();
        assert_eq!(log, ["a31", "a32", "a23", "a13", "a21"]);
        assert_eq!(s.substitution_log[0].replacement.to_string(), "l^-1*a21");
        let x = NCPoly::generator(Generator::a(1, 2));
        let l = NCPoly::constant(LaurentPoly::lambda());
        let m = NCPoly::constant(LaurentPoly::mu());
        let one = NCPoly::one();
        let xx = &x * &x;
        let p1 = &(&(&l * &xx) - &(&l * &x)) - &(&(&m * &m) + &m);
        let p2 = &(&(&l * &xx) - &(&m * &x)) - &(&m + &one);
        let got: BTreeSet<String> = s.relations.iter().map(|r| normalize_up_to_unit(r).to_string()).collect();
        let want: BTreeSet<String> = [p1, p2].iter().map(|r| normalize_up_to_unit(r).to_string()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn simplify_is_a_fixpoint() {
        let s = simplify(&extract_presentation(&cd(LH)));
        let again = simplify(&s);
        assert_eq!(again, s);
    }

    #[test]
    fn log_replay_maps_originals_into_survivors() {
        let s = simplify(&extract_presentation(&cd(LH)));
        for g in extract_presentation(&cd(LH)).generators {
            let img = s.image_of(g);
            assert!(img.generators().iter().all(|h| s.generators.contains(h)));
        }
    }
}
