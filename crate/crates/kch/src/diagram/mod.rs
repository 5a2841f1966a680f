//! Oriented knot diagrams given as planar-diagram (PD) codes.
//!
//! `X[a,b,c,d]` lists the four edge labels of a crossing counterclockwise,
//! starting from the incoming under-edge `a`; the under-strand runs `a → c`.
//! Edges are labelled `1..=2n` consecutively along the orientation. The
//! crossing is positive when the over-strand runs `d → b`.

mod moves;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use moves::{Dart, Kink, Move};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("PD syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("empty diagram")]
    Empty,
    #[error("edge label {label} out of range 1..={max}")]
    LabelOutOfRange { label: u32, max: u32 },
    #[error("edge label {label} occurs {count} times (expected 2)")]
    LabelMultiplicity { label: u32, count: usize },
    #[error("diagram has {0} components; only knots are supported")]
    MultipleComponents(usize),
    #[error("crossing {crossing} does not follow the orientation: {msg}")]
    NotConsecutive { crossing: usize, msg: String },
    #[error("invalid renumbering: {0}")]
    InvalidRenumbering(String),
    #[error("move not applicable: {0}")]
    Inapplicable(String),
}

/// A validated PD code of a knot diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PdJson", into = "PdJson")]
pub struct PdCode {
    crossings: Vec<[u32; 4]>,
}

#[derive(Serialize, Deserialize)]
struct PdJson {
    crossings: Vec<[u32; 4]>,
}

impl TryFrom<PdJson> for PdCode {
    type Error = DiagramError;
    fn try_from(j: PdJson) -> Result<Self, DiagramError> {
        PdCode::new(j.crossings)
    }
}

impl From<PdCode> for PdJson {
    fn from(p: PdCode) -> Self {
        PdJson { crossings: p.crossings }
    }
}

impl PdCode {
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self, DiagramError> {
        let pd = PdCode { crossings };
        pd.validate()?;
        Ok(pd)
    }

    pub fn from_json(s: &str) -> Result<Self, DiagramError> {
        serde_json::from_str(s).map_err(|e| DiagramError::Syntax { pos: e.column(), msg: e.to_string() })
    }

    /// Parses either the `PD[X[..],..]` form or the JSON mirror.
    pub fn parse_any(s: &str) -> Result<Self, DiagramError> {
        if s.trim_start().starts_with('{') {
            Self::from_json(s)
        } else {
            s.parse()
        }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn num_edges(&self) -> u32 {
        2 * self.crossings.len() as u32
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let n = self.crossings.len();
        if n == 0 {
            return Err(DiagramError::Empty);
        }
        let max = 2 * n as u32;
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for x in &self.crossings {
            for &label in x {
                if label == 0 || label > max {
                    return Err(DiagramError::LabelOutOfRange { label, max });
                }
                *counts.entry(label).or_default() += 1;
            }
        }
        for label in 1..=max {
            let count = counts.get(&label).copied().unwrap_or(0);
            if count != 2 {
                return Err(DiagramError::LabelMultiplicity { label, count });
            }
        }
        let components = self.count_components();
        if components > 1 {
            return Err(DiagramError::MultipleComponents(components));
        }
        for (k, x) in self.crossings.iter().enumerate() {
            if x[2] != self.succ(x[0]) {
                return Err(DiagramError::NotConsecutive {
                    crossing: k + 1,
                    msg: format!("under-strand {} -> {}", x[0], x[2]),
                });
            }
            if x[1] != self.succ(x[3]) && x[3] != self.succ(x[1]) {
                return Err(DiagramError::NotConsecutive {
                    crossing: k + 1,
                    msg: format!("over-strand {} / {}", x[1], x[3]),
                });
            }
        }
        Ok(())
    }

    /// Strand components, joining the two ends of each strand through each
    /// crossing and the two ends of each edge.
    fn count_components(&self) -> usize {
        let max = self.num_edges() as usize;
        let mut parent: Vec<usize> = (0..=max).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for x in &self.crossings {
            for (s, t) in [(x[0], x[2]), (x[1], x[3])] {
                let (rs, rt) = (find(&mut parent, s as usize), find(&mut parent, t as usize));
                parent[rs] = rt;
            }
        }
        (1..=max).filter(|&e| find(&mut parent, e) == e).count()
    }

    fn succ(&self, e: u32) -> u32 {
        e % self.num_edges() + 1
    }

    /// Position (1 or 3) of the incoming over-edge of crossing `k` (0-based).
    pub(crate) fn over_in(&self, k: usize) -> usize {
        let x = self.crossings[k];
        if self.crossings.len() == 1 {
            // labels 1, 2 are mutual successors; the over-edge equal to the
            // incoming under-edge is where that edge starts
            return if x[1] == x[0] { 3 } else { 1 };
        }
        if x[1] == self.succ(x[3]) {
            3
        } else {
            1
        }
    }

    /// Crossing sign: +1 iff the over-strand runs `d → b`.
    pub fn sign(&self, k: usize) -> i8 {
        if self.over_in(k) == 3 {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossings.len()).map(|k| self.sign(k) as i64).sum()
    }

    /// Mirror image: over and under exchanged at every crossing.
    pub fn mirror(&self) -> PdCode {
        let crossings = (0..self.crossings.len())
            .map(|k| {
                let [a, b, c, d] = self.crossings[k];
                if self.over_in(k) == 3 {
                    [d, a, b, c]
                } else {
                    [b, c, d, a]
                }
            })
            .collect();
        PdCode { crossings }
    }

    /// Reorders crossings (`new[k] = old[perm[k]]`, 0-based) and shifts edge
    /// labels cyclically so that `basepoint_edge` becomes edge 1.
    pub fn renumber(&self, perm: &[usize], basepoint_edge: u32) -> Result<PdCode, DiagramError> {
        let n = self.crossings.len();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(DiagramError::InvalidRenumbering(format!(
                "permutation has length {}, expected {n}",
                perm.len()
            )));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(DiagramError::InvalidRenumbering(format!("{perm:?} is not a permutation")));
            }
        }
        let m = self.num_edges();
        if basepoint_edge == 0 || basepoint_edge > m {
            return Err(DiagramError::InvalidRenumbering(format!("no edge {basepoint_edge}")));
        }
        let shift = |e: u32| (e + m - basepoint_edge) % m + 1;
        let crossings = perm.iter().map(|&p| self.crossings[p].map(shift)).collect();
        PdCode::new(crossings)
    }

    /// Derived arcs and per-crossing `(o, l, r, ε)`.
    pub fn crossing_data(&self) -> CrossingData {
        let arc_of = self.edge_arcs();
        let crossings = (0..self.crossings.len())
            .map(|k| {
                let [a, b, c, _] = self.crossings[k];
                let eps = self.sign(k);
                let (incoming, outgoing) = (arc_of[a as usize], arc_of[c as usize]);
                let (l, r) = if eps > 0 { (outgoing, incoming) } else { (incoming, outgoing) };
                CrossingInfo { over: arc_of[b as usize], left: l, right: r, sign: eps }
            })
            .collect();
        CrossingData { crossings }
    }

    /// `arc_of[e]` for each edge label (index 0 unused). Arcs are numbered
    /// 1..=n by their smallest edge label.
    fn edge_arcs(&self) -> Vec<usize> {
        let m = self.num_edges();
        let mut ends = vec![false; m as usize + 1];
        for x in &self.crossings {
            ends[x[0] as usize] = true;
        }
        // start right after an under-crossing
        let start = (1..=m).find(|&e| ends[e as usize]).map(|e| self.succ(e)).expect("n >= 1");
        let mut provisional = vec![0usize; m as usize + 1];
        let mut arc = 0;
        let mut e = start;
        for _ in 0..m {
            provisional[e as usize] = arc;
            if ends[e as usize] {
                arc += 1;
            }
            e = self.succ(e);
        }
        let mut min_label = vec![u32::MAX; arc];
        for e in 1..=m {
            let a = provisional[e as usize];
            min_label[a] = min_label[a].min(e);
        }
        let mut order: Vec<usize> = (0..arc).collect();
        order.sort_by_key(|&a| min_label[a]);
        let mut rank = vec![0; arc];
        for (r, &a) in order.iter().enumerate() {
            rank[a] = r + 1;
        }
        let mut out = vec![0; m as usize + 1];
        for e in 1..=m {
            out[e as usize] = rank[provisional[e as usize]];
        }
        out
    }

    /// Applies one Reidemeister move; see [`Move`].
    pub fn apply_move(&self, mv: &Move) -> Result<PdCode, DiagramError> {
        moves::apply(self, mv)
    }

    /// Every move applicable to this diagram, in a deterministic order.
    /// R1 additions are listed for every edge and kink type.
    pub fn move_sites(&self) -> Vec<Move> {
        moves::sites(self)
    }

    /// Number of faces of the diagram on the sphere; a connected planar
    /// 4-valent diagram with n crossings has n + 2.
    pub fn num_faces(&self) -> usize {
        moves::Net::from_pd(self).faces().len()
    }

    pub fn is_planar(&self) -> bool {
        self.num_faces() == self.crossings.len() + 2
    }

    /// Representative of the diagram up to crossing order and choice of
    /// starting edge: the smallest sorted crossing list over all
    /// basepoints.
    pub fn canonical_form(&self) -> Vec<[u32; 4]> {
        let id: Vec<usize> = (0..self.crossings.len()).collect();
        (1..=self.num_edges())
            .map(|b| {
                let mut xs = self.renumber(&id, b).expect("valid renumbering").crossings;
                xs.sort_unstable();
                xs
            })
            .min()
            .expect("at least one edge")
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("PD[")?;
        for (k, x) in self.crossings.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "X[{},{},{},{}]", x[0], x[1], x[2], x[3])?;
        }
        f.write_str("]")
    }
}

impl FromStr for PdCode {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, DiagramError> {
        let toks: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut i = 0;
        let err = |i: usize, msg: &str| DiagramError::Syntax {
            pos: toks.get(i).map_or(s.len(), |t| t.0),
            msg: msg.to_string(),
        };
        let expect = |i: &mut usize, c: char| -> Result<(), DiagramError> {
            if toks.get(*i).map(|t| t.1) == Some(c) {
                *i += 1;
                Ok(())
            } else {
                Err(err(*i, &format!("expected '{c}'")))
            }
        };
        expect(&mut i, 'P')?;
        expect(&mut i, 'D')?;
        expect(&mut i, '[')?;
        let mut crossings = Vec::new();
        loop {
            expect(&mut i, 'X')?;
            expect(&mut i, '[')?;
            let mut x = [0u32; 4];
            for (slot, v) in x.iter_mut().enumerate() {
                if slot > 0 {
                    expect(&mut i, ',')?;
                }
                let start = i;
                let mut digits = String::new();
                while let Some(&(_, c)) = toks.get(i).filter(|t| t.1.is_ascii_digit()) {
                    digits.push(c);
                    i += 1;
                }
                *v = digits.parse().map_err(|_| err(start, "expected edge label"))?;
            }
            expect(&mut i, ']')?;
            crossings.push(x);
            match toks.get(i).map(|t| t.1) {
                Some(',') => i += 1,
                Some(']') => {
                    i += 1;
                    break;
                }
                _ => return Err(err(i, "expected ',' or ']'")),
            }
        }
        if i != toks.len() {
            return Err(err(i, "trailing input"));
        }
        PdCode::new(crossings)
    }
}

/// Arcs at one crossing (1-based arc indices) and its sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingInfo {
    pub over: usize,
    pub left: usize,
    pub right: usize,
    pub sign: i8,
}

impl CrossingInfo {
    /// Over-arc and both under-arcs are not pairwise distinct.
    pub fn is_degenerate(&self) -> bool {
        self.over == self.left || self.over == self.right || self.left == self.right
    }
}

/// Per-crossing arc data; crossing `α` is `crossings[α - 1]`, and there are
/// as many arcs as crossings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingData {
    pub crossings: Vec<CrossingInfo>,
}

impl CrossingData {
    pub fn n(&self) -> usize {
        self.crossings.len()
    }

    /// Crossing `alpha`, 1-based.
    pub fn get(&self, alpha: usize) -> &CrossingInfo {
        &self.crossings[alpha - 1]
    }

    pub fn is_degenerate(&self) -> bool {
        self.crossings.iter().any(CrossingInfo::is_degenerate)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const LH_TREFOIL: &str = "PD[X[4,1,5,2],X[6,3,1,4],X[2,5,3,6]]";

    fn info(over: usize, left: usize, right: usize, sign: i8) -> CrossingInfo {
        CrossingInfo { over, left, right, sign }
    }

    #[test]
    fn lh_trefoil_crossing_data() {
        let pd: PdCode = LH_TREFOIL.parse().unwrap();
        let cd = pd.crossing_data();
        assert_eq!(cd.crossings, vec![info(1, 2, 3, -1), info(2, 3, 1, -1), info(3, 1, 2, -1)]);
        assert_eq!(pd.writhe(), -3);
        assert!(pd.is_planar());
    }

    #[test]
    fn mirror_flips_signs() {
        let pd: PdCode = LH_TREFOIL.parse().unwrap();
        let m = pd.mirror();
        assert_eq!(m.mirror(), pd);
        for (x, y) in pd.crossing_data().crossings.iter().zip(&m.crossing_data().crossings) {
            assert_eq!(y.sign, -x.sign);
        }
        assert_eq!(m.writhe(), 3);
        assert!(m.is_planar());
    }

    #[test]
    fn kinks() {
        let pos: PdCode = "PD[X[1,1,2,2]]".parse().unwrap();
        assert_eq!(pos.sign(0), 1);
        let cd = pos.crossing_data();
        assert_eq!(cd.crossings, vec![info(1, 1, 1, 1)]);
        assert!(cd.is_degenerate());
        let neg = pos.mirror();
        assert_eq!(neg.crossings(), &[[2, 1, 1, 2]]);
        assert_eq!(neg.sign(0), -1);
        assert_eq!(neg.mirror(), pos);
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!("PD[X[1,2,3]]".parse::<PdCode>(), Err(DiagramError::Syntax { .. })));
        assert!(matches!("PD[]".parse::<PdCode>(), Err(DiagramError::Syntax { .. })));
        assert!(matches!("garbage".parse::<PdCode>(), Err(DiagramError::Syntax { .. })));
        assert!(matches!("PD[X[1,1,2,2]] x".parse::<PdCode>(), Err(DiagramError::Syntax { .. })));
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(
            "PD[X[1,1,2,3]]".parse::<PdCode>(),
            Err(DiagramError::LabelOutOfRange { label: 3, .. })
        ));
        assert!(matches!(
            "PD[X[1,1,1,2]]".parse::<PdCode>(),
            Err(DiagramError::LabelMultiplicity { .. })
        ));
        // Hopf link
        assert_eq!(
            "PD[X[4,1,3,2],X[2,3,1,4]]".parse::<PdCode>(),
            Err(DiagramError::MultipleComponents(2))
        );
        assert!(matches!(
            "PD[X[1,4,3,5],X[2,6,4,1],X[5,2,6,3]]".parse::<PdCode>(),
            Err(DiagramError::NotConsecutive { .. })
        ));
    }

    #[test]
    fn json_mirror() {
        let pd: PdCode = LH_TREFOIL.parse().unwrap();
        let j = serde_json::to_string(&pd).unwrap();
        assert_eq!(j, r#"{"crossings":[[4,1,5,2],[6,3,1,4],[2,5,3,6]]}"#);
        assert_eq!(PdCode::parse_any(&j).unwrap(), pd);
        assert!(PdCode::from_json(r#"{"crossings":[[1,2,3]]}"#).is_err());
    }

    #[test]
    fn renumbering() {
        let pd: PdCode = LH_TREFOIL.parse().unwrap();
        assert_eq!(pd.renumber(&[0, 1, 2], 1).unwrap(), pd);
        let r = pd.renumber(&[1, 2, 0], 1).unwrap();
        let (cd, rd) = (pd.crossing_data(), r.crossing_data());
        assert_eq!(rd.crossings, vec![cd.crossings[1], cd.crossings[2], cd.crossings[0]]);
        assert!(pd.renumber(&[0, 0, 1], 1).is_err());
        assert!(pd.renumber(&[0, 1], 1).is_err());
        assert!(pd.renumber(&[0, 1, 2], 7).is_err());
        assert_eq!(r.canonical_form(), pd.canonical_form());
        assert_ne!(pd.mirror().canonical_form(), pd.canonical_form());
    }
}
