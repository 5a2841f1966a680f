//! The framed knot DGA of a knot diagram.

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::CrossingData;
use crate::laurent::LaurentPoly;
use crate::ncalg::{Derivation, GenKind, Generator, HomogeneousDegree, LeibnizSign, NCMatrix, NCPoly};

/// Ψ matrices and the degree-0 generator matrix A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiMatrices {
    pub psi_l: NCMatrix,
    pub psi_r: NCMatrix,
    /// Ψᴸ without the entries coming from right under-arcs.
    pub psi_l2: NCMatrix,
    /// Ψᴿ restricted to the entries coming from right under-arcs.
    pub psi_r1: NCMatrix,
    pub a: NCMatrix,
}

/// `A_ii = 1 + μ`, `A_ij = a_ij`.
pub fn a_entry(i: usize, j: usize) -> NCPoly {
    if i == j {
        NCPoly::constant(LaurentPoly::one() + LaurentPoly::mu())
    } else {
        Generator::a(i, j).into()
    }
}

/// Builds Ψᴸ, Ψᴿ, Ψᴸ₂, Ψᴿ₁ and A. Contributions from coinciding over/left/right
/// arcs at one crossing are summed.
pub fn build_matrices(cd: &CrossingData) -> PsiMatrices {
    let n = cd.n();
    let mu = LaurentPoly::mu();
    let mut psi_l = NCMatrix::zero(n);
    let mut psi_r = NCMatrix::zero(n);
    let mut psi_l2 = NCMatrix::zero(n);
    let mut psi_r1 = NCMatrix::zero(n);
    for alpha in 1..=n {
        let x = cd.get(alpha);
        let (o, l, r) = (x.over, x.left, x.right);
        let (r_left, r_right) = if alpha == 1 {
            let s = i64::from(x.sign);
            (LaurentPoly::monomial(1, -s, 0), LaurentPoly::monomial(1, s, 1))
        } else {
            (LaurentPoly::one(), mu.clone())
        };
        let l_part = NCPoly::constant(mu.clone());
        let o_left = -a_entry(l, o);
        let o_right = -a_entry(o, l);

        add_to(&mut psi_l, alpha, r, NCPoly::constant(r_left));
        add_to(&mut psi_l, alpha, l, l_part.clone());
        add_to(&mut psi_l, alpha, o, o_left.clone());
        add_to(&mut psi_l2, alpha, l, l_part);
        add_to(&mut psi_l2, alpha, o, o_left);

        add_to(&mut psi_r, r, alpha, NCPoly::constant(r_right.clone()));
        add_to(&mut psi_r, l, alpha, NCPoly::one());
        add_to(&mut psi_r, o, alpha, o_right);
        add_to(&mut psi_r1, r, alpha, NCPoly::constant(r_right));
    }
    PsiMatrices { psi_l, psi_r, psi_l2, psi_r1, a: NCMatrix::from_fn(n, a_entry) }
}

fn add_to(m: &mut NCMatrix, i: usize, j: usize, p: NCPoly) {
    let e = m.get_mut(i, j);
    *e = &*e + &p;
}

/// The DGA: generators, their differentials and the matrices they came from.
#[derive(Clone, Debug)]
pub struct FramedKnotDGA {
    n: usize,
    generators: Vec<Generator>,
    differential: Derivation,
    matrices: PsiMatrices,
    b: NCMatrix,
    c: NCMatrix,
    d: NCMatrix,
}

pub fn build_dga(cd: &CrossingData) -> FramedKnotDGA {
    let n = cd.n();
    let matrices = build_matrices(cd);
    let b = NCMatrix::from_fn(n, |a, i| Generator::b(a, i).into());
    let c = NCMatrix::from_fn(n, |i, a| Generator::c(i, a).into());
    let d = NCMatrix::from_fn(n, |a, b| Generator::d(a, b).into());
    let mul = |x: &NCMatrix, y: &NCMatrix| x.mat_mul(y).expect("square matrices of one size");
    let d_b = mul(&matrices.psi_l, &matrices.a);
    let d_c = mul(&matrices.a, &matrices.psi_r);
    let d_d = mul(&b, &matrices.psi_r).sub(&mul(&matrices.psi_l, &c)).expect("same size");
    let d_e = mul(&b, &matrices.psi_r1).sub(&mul(&matrices.psi_l2, &c)).expect("same size");

    let mut generators = Vec::with_capacity(n * (n - 1) + 3 * n * n + n);
    let mut differential = Derivation::new(LeibnizSign::Graded);
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            generators.push(Generator::a(i, j));
            differential.set(Generator::a(i, j), NCPoly::zero());
        }
    }
    for (kind, image) in [(GenKind::B, &d_b), (GenKind::C, &d_c), (GenKind::D, &d_d)] {
        for i in 1..=n {
            for j in 1..=n {
                let g = Generator { kind, i: i as u16, j: j as u16 };
                generators.push(g);
                differential.set(g, image.get(i, j).clone());
            }
        }
    }
    for alpha in 1..=n {
        generators.push(Generator::e(alpha));
        differential.set(Generator::e(alpha), d_e.get(alpha, alpha).clone());
    }
    FramedKnotDGA { n, generators, differential, matrices, b, c, d }
}

impl FramedKnotDGA {
    pub fn n(&self) -> usize {
        self.n
    }

    /// All generators: a, b, c, d, e in that order.
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn differential(&self) -> &Derivation {
        &self.differential
    }

    pub fn matrices(&self) -> &PsiMatrices {
        &self.matrices
    }

    pub fn b(&self) -> &NCMatrix {
        &self.b
    }

    pub fn c(&self) -> &NCMatrix {
        &self.c
    }

    pub fn d(&self) -> &NCMatrix {
        &self.d
    }

    /// ∂g; zero for generators outside the algebra.
    pub fn boundary(&self, g: Generator) -> NCPoly {
        self.differential.image(g).cloned().unwrap_or_default()
    }

    /// Copy with ∂g replaced, e.g. to exercise the self-checks.
    pub fn with_image(&self, g: Generator, image: NCPoly) -> FramedKnotDGA {
        let mut out = self.clone();
        out.differential.set(g, image);
        out
    }

    /// Copy whose differential extends to products with the given sign rule.
    pub fn with_sign(&self, sign: LeibnizSign) -> FramedKnotDGA {
        let mut out = self.clone();
        out.differential = self.differential.with_sign(sign);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckFailure {
    pub generator: String,
    pub residue: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub pass: bool,
    pub checked: usize,
    pub failures: Vec<CheckFailure>,
}

impl CheckReport {
    fn from_failures(checked: usize, failures: Vec<CheckFailure>) -> Self {
        CheckReport { pass: failures.is_empty(), checked, failures }
    }
}

/// ∂² on every generator under one sign rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConventionResult {
    pub sign: LeibnizSign,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DSquaredReport {
    /// Result under the DGA's own sign rule.
    #[serde(flatten)]
    pub report: CheckReport,
    pub convention: LeibnizSign,
    /// Results under both sign rules.
    pub conventions: Vec<ConventionResult>,
}

fn d_squared_failures(dga: &FramedKnotDGA) -> Vec<CheckFailure> {
    let residues: Vec<Option<CheckFailure>> = dga
        .generators
        .par_iter()
        .map(|&g| {
            let dd = dga
                .differential
                .apply(&dga.boundary(g))
                .expect("differential is defined on every generator");
            (!dd.is_zero()).then(|| CheckFailure { generator: g.to_string(), residue: dd.to_string() })
        })
        .collect();
    residues.into_iter().flatten().collect()
}

/// Applies ∂ twice to every generator.
pub fn check_d_squared(dga: &FramedKnotDGA) -> DSquaredReport {
    let failures = d_squared_failures(dga);
    let report = CheckReport::from_failures(dga.generators.len(), failures);
    let conventions = [LeibnizSign::Graded, LeibnizSign::Unsigned]
        .into_iter()
        .map(|sign| {
            let pass = if sign == dga.differential.sign() {
                report.pass
            } else {
                d_squared_failures(&dga.with_sign(sign)).is_empty()
            };
            ConventionResult { sign, pass }
        })
        .collect();
    DSquaredReport { report, convention: dga.differential.sign(), conventions }
}

/// Checks that ∂ lowers degree by one on every generator.
pub fn check_grading(dga: &FramedKnotDGA) -> CheckReport {
    let failures = dga
        .generators
        .iter()
        .filter_map(|&g| {
            let dg = dga.boundary(g);
            let ok = match dg.homogeneous_degree() {
                HomogeneousDegree::Zero => true,
                HomogeneousDegree::Homogeneous(k) => g.degree() >= 1 && k == g.degree() - 1,
                HomogeneousDegree::Inhomogeneous => false,
            };
            (!ok).then(|| CheckFailure { generator: g.to_string(), residue: dg.to_string() })
        })
        .collect();
    CheckReport::from_failures(dga.generators.len(), failures)
}
