//! Augmentation numbers: ring maps from the cord algebra to 𝔽_p with
//! prescribed images of λ and μ.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::PdCode;
use crate::hc0::{extract_presentation, simplify, Presentation};
use crate::laurent::{inv_mod, pow_mod, LaurentPoly};
use crate::ncalg::{Generator, NCPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AugError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} exceeds the bound {bound}")]
    PrimeTooLarge { p: u64, bound: u64 },
    #[error("intractable: {generators} generators exceed the search bound {bound}")]
    Intractable { generators: usize, bound: usize },
    #[error("relation mentions generator {0} outside the presentation")]
    UnknownGenerator(Generator),
    #[error("signatures use different primes: {0:?} vs {1:?}")]
    MismatchedPrimes(Vec<u64>, Vec<u64>),
}

/// Search bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AugConfig {
    pub max_prime: u64,
    pub max_generators: usize,
}

impl Default for AugConfig {
    fn default() -> Self {
        AugConfig { max_prime: 13, max_generators: 16 }
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Counts per cell `(λ₀, μ₀) ∈ (𝔽_p*)²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugTable {
    pub p: u64,
    pub counts: BTreeMap<(u64, u64), u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AugCell {
    pub lambda: u64,
    pub mu: u64,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AugTableJson {
    pub p: u64,
    pub table: Vec<AugCell>,
    pub total: u64,
}

impl AugTable {
    pub fn count(&self, lambda: u64, mu: u64) -> u64 {
        self.counts.get(&(lambda, mu)).copied().unwrap_or(0)
    }

    /// Sum over all cells.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Cells with at least one augmentation.
    pub fn support(&self) -> Vec<(u64, u64)> {
        self.counts.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect()
    }

    pub fn to_json(&self) -> AugTableJson {
        AugTableJson {
            p: self.p,
            table: self
                .counts
                .iter()
                .map(|(&(lambda, mu), &count)| AugCell { lambda, mu, count })
                .collect(),
            total: self.total(),
        }
    }
}

/// One commutative term `c · Π x_v^e` over 𝔽_p, variables in search order.
#[derive(Clone, Debug)]
struct Term {
    c: u64,
    vars: Vec<(usize, u32)>,
}

#[derive(Clone, Debug)]
struct Relation {
    terms: Vec<Term>,
    /// Largest search position among its variables; `None` for constants.
    last: Option<usize>,
}

/// Relations with words collapsed to commutative monomials, coefficients
/// still over the Laurent ring.
struct Commutative {
    relations: Vec<Vec<(Vec<u32>, LaurentPoly)>>,
    /// Search order: positions into the presentation's generator list.
    order: Vec<usize>,
}

/// Orders variables so relations close as early as possible: each step takes
/// the variable completing the most relations, then the one occurring in the
/// most open relations, then the lowest index.
fn greedy_order(nvars: usize, var_sets: &[Vec<usize>]) -> Vec<usize> {
    let mut placed = vec![false; nvars];
    let mut order = Vec::with_capacity(nvars);
    for _ in 0..nvars {
        let score = |k: usize| {
            let mut closes = 0;
            let mut touches = 0;
            for vs in var_sets.iter().filter(|vs| vs.contains(&k)) {
                if vs.iter().all(|&v| v == k || placed[v]) {
                    closes += 1;
                } else {
                    touches += 1;
                }
            }
            (closes, touches, std::cmp::Reverse(k))
        };
        let best = (0..nvars).filter(|&k| !placed[k]).max_by_key(|&k| score(k)).expect("unplaced variable");
        placed[best] = true;
        order.push(best);
    }
    order
}

fn commutativize(pres: &Presentation) -> Result<Commutative, AugError> {
    let index: BTreeMap<Generator, usize> =
        pres.generators.iter().enumerate().map(|(k, &g)| (g, k)).collect();
    let nvars = pres.generators.len();
    let mut relations = Vec::new();
    let mut var_sets: Vec<Vec<usize>> = Vec::new();
    for r in &pres.relations {
        let mut acc: BTreeMap<Vec<u32>, LaurentPoly> = BTreeMap::new();
        for (w, c) in r.terms() {
            let mut exps = vec![0u32; nvars];
            for g in &w.0 {
                let &k = index.get(g).ok_or(AugError::UnknownGenerator(*g))?;
                exps[k] += 1;
            }
            let slot = acc.entry(exps).or_default();
            *slot = &*slot + c;
        }
        acc.retain(|_, c| !c.is_zero());
        var_sets.push((0..nvars).filter(|&k| acc.keys().any(|e| e[k] > 0)).collect());
        relations.push(acc.into_iter().collect());
    }
    let order = greedy_order(nvars, &var_sets);
    Ok(Commutative { relations, order })
}

impl Commutative {
    fn at(&self, p: u64, l0: u64, m0: u64) -> Vec<Relation> {
        let mut pos_of = vec![0; self.order.len()];
        for (pos, &k) in self.order.iter().enumerate() {
            pos_of[k] = pos;
        }
        self.relations
            .iter()
            .map(|r| {
                let terms: Vec<Term> = r
                    .iter()
                    .map(|(e, c)| Term {
                        c: c.eval_mod(p, l0, m0),
                        vars: e
                            .iter()
                            .enumerate()
                            .filter(|(_, &x)| x > 0)
                            .map(|(k, &x)| (pos_of[k], x))
                            .collect(),
                    })
                    .filter(|t| t.c != 0)
                    .collect();
                let last = terms.iter().flat_map(|t| t.vars.iter().map(|v| v.0)).max();
                Relation { terms, last }
            })
            .filter(|r| !r.terms.is_empty())
            .collect()
    }
}

fn eval_term(t: &Term, vals: &[u64], p: u64) -> u64 {
    t.vars.iter().fold(t.c, |acc, &(v, e)| acc * pow_mod(vals[v], u64::from(e), p) % p)
}

fn eval(r: &Relation, vals: &[u64], p: u64) -> u64 {
    r.terms.iter().fold(0, |acc, t| (acc + eval_term(t, vals, p)) % p)
}

/// `(a, b)` with `r = a·x_v + b` once positions below `v` are assigned, if
/// `r` is linear in `x_v`.
fn linear_in(r: &Relation, v: usize, vals: &[u64], p: u64) -> Option<(u64, u64)> {
    let (mut a, mut b) = (0, 0);
    for t in &r.terms {
        let e = t.vars.iter().find(|x| x.0 == v).map_or(0, |x| x.1);
        let rest = Term { c: t.c, vars: t.vars.iter().copied().filter(|x| x.0 != v).collect() };
        let val = eval_term(&rest, vals, p);
        match e {
            0 => b = (b + val) % p,
            1 => a = (a + val) % p,
            _ => return None,
        }
    }
    Some((a, b))
}

struct Search<'a> {
    p: u64,
    nvars: usize,
    /// Relations grouped by the position of their last variable.
    by_last: Vec<Vec<&'a Relation>>,
}

impl Search<'_> {
    fn count(&self, depth: usize, vals: &mut Vec<u64>) -> u64 {
        if depth == self.nvars {
            return 1;
        }
        let checks = &self.by_last[depth];
        let forced = checks.iter().find_map(|r| match linear_in(r, depth, vals, self.p)? {
            (0, _) => None,
            (a, b) => Some((self.p - b) % self.p * inv_mod(a, self.p) % self.p),
        });
        let candidates: Box<dyn Iterator<Item = u64>> = match forced {
            Some(x) => Box::new(std::iter::once(x)),
            None => Box::new(0..self.p),
        };
        let mut total = 0;
        for x in candidates {
            vals[depth] = x;
            if checks.iter().all(|r| eval(r, vals, self.p) == 0) {
                total += self.count(depth + 1, vals);
            }
        }
        vals[depth] = 0;
        total
    }
}

fn count_cell(rels: &[Relation], nvars: usize, p: u64) -> u64 {
    if rels.iter().any(|r| r.last.is_none()) {
        return 0;
    }
    let mut by_last = vec![Vec::new(); nvars];
    for r in rels {
        by_last[r.last.expect("nonconstant")].push(r);
    }
    Search { p, nvars, by_last }.count(0, &mut vec![0; nvars])
}

fn check_bounds(pres: &Presentation, p: u64, cfg: &AugConfig) -> Result<(), AugError> {
    if !is_prime(p) {
        return Err(AugError::NotPrime(p));
    }
    if p > cfg.max_prime {
        return Err(AugError::PrimeTooLarge { p, bound: cfg.max_prime });
    }
    if pres.generators.len() > cfg.max_generators {
        return Err(AugError::Intractable { generators: pres.generators.len(), bound: cfg.max_generators });
    }
    Ok(())
}

fn cells(p: u64) -> Vec<(u64, u64)> {
    (1..p).flat_map(|l| (1..p).map(move |m| (l, m))).collect()
}

/// Augmentation counts for every cell, with the default bounds.
pub fn count_augmentations(pres: &Presentation, p: u64) -> Result<AugTable, AugError> {
    count_augmentations_with(pres, p, &AugConfig::default())
}

/// Backtracking over generators in greedy closing order; each
/// relation is tested once its last variable is assigned, and relations
/// linear in the next variable force its value. Cells run in parallel.
pub fn count_augmentations_with(pres: &Presentation, p: u64, cfg: &AugConfig) -> Result<AugTable, AugError> {
    check_bounds(pres, p, cfg)?;
    let comm = commutativize(pres)?;
    let nvars = pres.generators.len();
    let counts = cells(p)
        .into_par_iter()
        .map(|(l, m)| ((l, m), count_cell(&comm.at(p, l, m), nvars, p)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(AugTable { p, counts })
}

/// Reference count: every assignment is tried and every relation evaluated.
pub fn count_augmentations_exhaustive(pres: &Presentation, p: u64) -> Result<AugTable, AugError> {
    check_bounds(pres, p, &AugConfig::default())?;
    let comm = commutativize(pres)?;
    let nvars = pres.generators.len();
    let mut counts = BTreeMap::new();
    for (l, m) in cells(p) {
        let rels = comm.at(p, l, m);
        let mut vals = vec![0u64; nvars];
        let mut count = 0;
        loop {
            if rels.iter().all(|r| eval(r, &vals, p) == 0) {
                count += 1;
            }
            let Some(k) = vals.iter().position(|&v| v + 1 < p) else { break };
            vals[k] += 1;
            vals[..k].iter_mut().for_each(|v| *v = 0);
        }
        counts.insert((l, m), count);
    }
    Ok(AugTable { p, counts })
}

/// Augmentation tables over several primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub primes: Vec<u64>,
    pub tables: Vec<AugTable>,
}

impl Signature {
    pub fn to_json(&self) -> Vec<AugTableJson> {
        self.tables.iter().map(AugTable::to_json).collect()
    }
}

/// Signature of a simplified presentation.
pub fn presentation_signature(pres: &Presentation, primes: &[u64], cfg: &AugConfig) -> Result<Signature, AugError> {
    let tables = primes
        .iter()
        .map(|&p| count_augmentations_with(pres, p, cfg))
        .collect::<Result<_, _>>()?;
    Ok(Signature { primes: primes.to_vec(), tables })
}

/// Diagram → crossing data → presentation → simplify → counts per prime.
pub fn aug_signature(pd: &PdCode, primes: &[u64]) -> Result<Signature, AugError> {
    aug_signature_with(pd, primes, &AugConfig::default())
}

pub fn aug_signature_with(pd: &PdCode, primes: &[u64], cfg: &AugConfig) -> Result<Signature, AugError> {
    let pres = simplify(&extract_presentation(&pd.crossing_data()));
    presentation_signature(&pres, primes, cfg)
}

/// First cell where two signatures disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Difference {
    pub p: u64,
    pub lambda: u64,
    pub mu: u64,
    pub count_a: u64,
    pub count_b: u64,
}

pub fn first_difference(s1: &Signature, s2: &Signature) -> Result<Option<Difference>, AugError> {
    if s1.primes != s2.primes {
        return Err(AugError::MismatchedPrimes(s1.primes.clone(), s2.primes.clone()));
    }
    for (t1, t2) in s1.tables.iter().zip(&s2.tables) {
        for (&(lambda, mu), &count_a) in &t1.counts {
            let count_b = t2.count(lambda, mu);
            if count_a != count_b {
                return Ok(Some(Difference { p: t1.p, lambda, mu, count_a, count_b }));
            }
        }
    }
    Ok(None)
}

/// True iff any cell differs.
pub fn distinguish(s1: &Signature, s2: &Signature) -> Result<bool, AugError> {
    Ok(first_difference(s1, s2)?.is_some())
}

/// Presentation with no generators and the given constant relations.
pub fn constant_presentation(relations: &[LaurentPoly]) -> Presentation {
    Presentation {
        generators: Vec::new(),
        relations: relations.iter().cloned().map(NCPoly::constant).collect(),
        substitution_log: Vec::new(),
    }
}
