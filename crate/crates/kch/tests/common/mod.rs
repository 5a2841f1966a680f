#![allow(dead_code)]

use kch::diagram::{Move, PdCode};
use kch::laurent::LaurentPoly;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Applies `steps` random moves (of the allowed kinds), staying within
/// `max_crossings`. Each step picks a kind uniformly, then a site.
pub fn perturb(pd: &PdCode, steps: usize, max_crossings: usize, kinds: &[&str], rng: &mut StdRng) -> (PdCode, Vec<Move>) {
    let mut cur = pd.clone();
    let mut applied = Vec::new();
    for _ in 0..steps {
        let sites: Vec<Move> = cur
            .move_sites()
            .into_iter()
            .filter(|m| kinds.contains(&m.kind()))
            .filter(|m| {
                let grow = match m.kind() {
                    "R1+" => 1,
                    "R2+" => 2,
                    _ => 0,
                };
                cur.num_crossings() + grow <= max_crossings
            })
            .collect();
        let mut present: Vec<&str> = sites.iter().map(Move::kind).collect();
        present.sort();
        present.dedup();
        let Some(kind) = present.choose(rng).copied() else { break };
        let of_kind: Vec<&Move> = sites.iter().filter(|m| m.kind() == kind).collect();
        let mv = (*of_kind.choose(rng).expect("nonempty")).clone();
        cur = cur.apply_move(&mv).unwrap_or_else(|e| panic!("{mv:?} on {cur}: {e}"));
        applied.push(mv);
    }
    (cur, applied)
}

/// Random crossing order and basepoint edge.
pub fn random_renumbering(pd: &PdCode, rng: &mut StdRng) -> PdCode {
    let mut perm: Vec<usize> = (0..pd.num_crossings()).collect();
    perm.shuffle(rng);
    let base = rng.gen_range(1..=pd.num_edges());
    pd.renumber(&perm, base).unwrap()
}

/// |det| of the coloring matrix with one row and column removed.
pub fn knot_determinant(pd: &PdCode) -> i128 {
    let cd = pd.crossing_data();
    let n = cd.n();
    if n == 1 {
        return 1;
    }
    let mut m = vec![vec![0i128; n]; n];
    for (a, x) in cd.crossings.iter().enumerate() {
        m[a][x.over - 1] += 2;
        m[a][x.left - 1] -= 1;
        m[a][x.right - 1] -= 1;
    }
    let mut minor: Vec<Vec<i128>> = m[1..].iter().map(|r| r[1..].to_vec()).collect();
    bareiss(&mut minor).abs()
}

fn bareiss(a: &mut [Vec<i128>]) -> i128 {
    let n = a.len();
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Determinant by the Leibniz permutation expansion.
pub fn permutation_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    fn rec(m: &[Vec<LaurentPoly>], row: usize, used: &mut Vec<bool>, sign: bool, acc: LaurentPoly, out: &mut LaurentPoly) {
        if acc.is_zero() {
            return;
        }
        if row == m.len() {
            *out = if sign { &*out - &acc } else { &*out + &acc };
            return;
        }
        for c in 0..m.len() {
            if used[c] {
                continue;
            }
            // later rows take the unused columns left of c, each an inversion
            let inv = (0..c).filter(|&x| !used[x]).count();
            used[c] = true;
            rec(m, row + 1, used, sign ^ (inv % 2 == 1), &acc * &m[row][c], out);
            used[c] = false;
        }
    }
    let mut out = LaurentPoly::zero();
    rec(m, 0, &mut vec![false; m.len()], false, LaurentPoly::one(), &mut out);
    out
}

/// Random Laurent polynomial with small exponents and coefficients.
pub fn random_laurent(rng: &mut StdRng, terms: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for _ in 0..terms {
        let c: i64 = rng.gen_range(-3..=3);
        p = p + LaurentPoly::monomial(c, rng.gen_range(-2..=2), rng.gen_range(-2..=2));
    }
    p
}
