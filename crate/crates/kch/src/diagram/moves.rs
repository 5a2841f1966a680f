//! Reidemeister moves on PD codes.
//!
//! Moves work on a [`Net`]: crossings with arbitrary edge ids and an explicit
//! incoming over-position. Results are relabelled consecutively along the
//! orientation, starting from edge 1 when that edge survives.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{DiagramError, PdCode};

/// Position `pos` (0..4, counterclockwise from the incoming under-edge) at
/// crossing `crossing` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub crossing: usize,
    pub pos: usize,
}

impl Dart {
    fn new(crossing: usize, pos: usize) -> Self {
        Dart { crossing, pos: pos % 4 }
    }

    fn rot(self, k: usize) -> Self {
        Dart::new(self.crossing, self.pos + k)
    }
}

/// Kink added by an R1 move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Kink {
    pub positive: bool,
    /// The strand passes over first, then under.
    pub over_first: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    /// Adds a kink in the middle of `edge`.
    R1Add { edge: u32, kink: Kink },
    /// Removes the kink at `crossing` (0-based).
    R1Remove { crossing: usize },
    /// Pushes the edge at `over` across the edge at `under`. Both darts must
    /// bound the same face (the face to the left of the edge traversed away
    /// from the dart's crossing).
    R2Add { over: Dart, under: Dart },
    /// Removes the bigon between two crossings.
    R2Remove { crossings: (usize, usize) },
    /// Slides a strand across the triangular face to the left of `face`.
    R3 { face: Dart },
}

impl Move {
    pub fn kind(&self) -> &'static str {
        match self {
            Move::R1Add { .. } => "R1+",
            Move::R1Remove { .. } => "R1-",
            Move::R2Add { .. } => "R2+",
            Move::R2Remove { .. } => "R2-",
            Move::R3 { .. } => "R3",
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Net {
    xs: Vec<[u32; 4]>,
    over_in: Vec<usize>,
}

impl Net {
    pub(crate) fn from_pd(pd: &PdCode) -> Net {
        Net {
            xs: pd.crossings.clone(),
            over_in: (0..pd.crossings.len()).map(|k| pd.over_in(k)).collect(),
        }
    }

    fn edge(&self, d: Dart) -> u32 {
        self.xs[d.crossing][d.pos]
    }

    fn is_incoming(&self, d: Dart) -> bool {
        d.pos == 0 || d.pos == self.over_in[d.crossing]
    }

    fn darts_by_edge(&self) -> BTreeMap<u32, Vec<Dart>> {
        let mut m: BTreeMap<u32, Vec<Dart>> = BTreeMap::new();
        for (x, labels) in self.xs.iter().enumerate() {
            for (p, &e) in labels.iter().enumerate() {
                m.entry(e).or_default().push(Dart::new(x, p));
            }
        }
        m
    }

    fn partner_map(&self) -> BTreeMap<Dart, Dart> {
        let mut out = BTreeMap::new();
        for ds in self.darts_by_edge().values() {
            out.insert(ds[0], ds[1]);
            out.insert(ds[1], ds[0]);
        }
        out
    }

    fn fresh_id(&self) -> u32 {
        self.xs.iter().flatten().copied().max().unwrap_or(0) + 1
    }

    /// Face boundaries: each face is the cyclic list of darts whose edge it
    /// lies to the left of, traversed away from the dart's crossing.
    pub(crate) fn faces(&self) -> Vec<Vec<Dart>> {
        let partner = self.partner_map();
        let mut seen = BTreeMap::new();
        let mut faces = Vec::new();
        for x in 0..self.xs.len() {
            for p in 0..4 {
                let start = Dart::new(x, p);
                if seen.contains_key(&start) {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = start;
                while seen.insert(d, faces.len()).is_none() {
                    face.push(d);
                    d = partner[&d].rot(3);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Relabels edges `1..=2n` along the orientation starting at `base`.
    fn into_pd(self, base: u32) -> Result<PdCode, DiagramError> {
        let by_edge = self.darts_by_edge();
        let head = |e: u32| -> Dart {
            let ds = &by_edge[&e];
            if self.is_incoming(ds[0]) {
                ds[0]
            } else {
                ds[1]
            }
        };
        let mut label: BTreeMap<u32, u32> = BTreeMap::new();
        let mut e = base;
        let mut next = 1;
        while !label.contains_key(&e) {
            label.insert(e, next);
            next += 1;
            e = self.edge(head(e).rot(2));
        }
        if label.len() != by_edge.len() {
            return Err(DiagramError::MultipleComponents(2));
        }
        PdCode::new(self.xs.iter().map(|x| x.map(|e| label[&e])).collect())
    }

    fn base_edge(&self) -> u32 {
        let all = self.darts_by_edge();
        if all.contains_key(&1) {
            1
        } else {
            *all.keys().next().expect("nonempty")
        }
    }

    fn finish(self) -> Result<PdCode, DiagramError> {
        let base = self.base_edge();
        self.into_pd(base)
    }

    /// Deletes the given crossings, reconnecting the strands that ran
    /// through them. Each merged edge keeps the id of its first piece.
    fn splice_out(&self, removed: &[usize]) -> Result<Net, DiagramError> {
        let partner = self.partner_map();
        let gone = |x: usize| removed.contains(&x);
        let mut xs = self.xs.clone();
        let mut fixed = BTreeMap::new();
        for x in (0..self.xs.len()).filter(|&x| !gone(x)) {
            for p in 0..4 {
                let d = Dart::new(x, p);
                if self.is_incoming(d) {
                    continue;
                }
                // walk forward from an outgoing dart to the next surviving crossing
                let mut t = partner[&d];
                let mut steps = 0;
                while gone(t.crossing) {
                    t = partner[&t.rot(2)];
                    steps += 1;
                    if steps > 4 * self.xs.len() {
                        return Err(DiagramError::Inapplicable("splice leaves a closed loop".into()));
                    }
                }
                fixed.insert(t, self.edge(d));
            }
        }
        for (t, e) in fixed {
            xs[t.crossing][t.pos] = e;
        }
        let keep: Vec<usize> = (0..self.xs.len()).filter(|&x| !gone(x)).collect();
        if keep.is_empty() {
            return Err(DiagramError::Inapplicable("move would leave no crossings".into()));
        }
        Ok(Net {
            xs: keep.iter().map(|&x| xs[x]).collect(),
            over_in: keep.iter().map(|&x| self.over_in[x]).collect(),
        })
    }
}

pub(super) fn apply(pd: &PdCode, mv: &Move) -> Result<PdCode, DiagramError> {
    let net = Net::from_pd(pd);
    let n = net.xs.len();
    let check_crossing = |x: usize| {
        if x < n {
            Ok(())
        } else {
            Err(DiagramError::Inapplicable(format!("no crossing {x}")))
        }
    };
    match *mv {
        Move::R1Add { edge, kink } => r1_add(net, edge, kink),
        Move::R1Remove { crossing } => {
            check_crossing(crossing)?;
            if !is_kink(&net, crossing) {
                return Err(DiagramError::Inapplicable(format!("crossing {crossing} is not a kink")));
            }
            net.splice_out(&[crossing])?.finish()
        }
        Move::R2Add { over, under } => r2_add(net, over, under),
        Move::R2Remove { crossings: (x, y) } => {
            check_crossing(x)?;
            check_crossing(y)?;
            if x == y || !has_removable_bigon(&net, x, y) {
                return Err(DiagramError::Inapplicable(format!("no R2 bigon between {x} and {y}")));
            }
            net.splice_out(&[x, y])?.finish()
        }
        Move::R3 { face } => r3(net, face),
    }
}

fn is_kink(net: &Net, x: usize) -> bool {
    let e = net.xs[x];
    (0..4).any(|p| e[p] == e[(p + 1) % 4])
}

fn r1_add(mut net: Net, edge: u32, kink: Kink) -> Result<PdCode, DiagramError> {
    let darts = net.darts_by_edge();
    let Some(ds) = darts.get(&edge) else {
        return Err(DiagramError::Inapplicable(format!("no edge {edge}")));
    };
    let head = if net.is_incoming(ds[0]) { ds[0] } else { ds[1] };
    let (p, l, q) = (edge, net.fresh_id(), net.fresh_id() + 1);
    net.xs[head.crossing][head.pos] = q;
    let (x, over_in) = match (kink.over_first, kink.positive) {
        (false, false) => ([p, l, l, q], 1),
        (false, true) => ([p, q, l, l], 3),
        (true, false) => ([l, p, q, l], 1),
        (true, true) => ([l, l, q, p], 3),
    };
    net.xs.push(x);
    net.over_in.push(over_in);
    net.finish()
}

fn has_removable_bigon(net: &Net, x: usize, y: usize) -> bool {
    let partner = net.partner_map();
    net.faces().iter().any(|f| {
        if f.len() != 2 {
            return false;
        }
        let (d0, d1) = (f[0], f[1]);
        let pair = [d0.crossing, d1.crossing];
        if !(pair == [x, y] || pair == [y, x]) {
            return false;
        }
        // the edge of d0 is over (odd position) at both ends, or under at both
        d0.pos % 2 == partner[&d0].pos % 2
    })
}

fn r2_add(mut net: Net, over: Dart, under: Dart) -> Result<PdCode, DiagramError> {
    let n = net.xs.len();
    if over.crossing >= n || under.crossing >= n || over.pos > 3 || under.pos > 3 {
        return Err(DiagramError::Inapplicable("dart out of range".into()));
    }
    let faces = net.faces();
    let same_face = faces.iter().any(|f| f.contains(&over) && f.contains(&under));
    if !same_face {
        return Err(DiagramError::Inapplicable("darts do not bound a common face".into()));
    }
    let (e, f) = (net.edge(over), net.edge(under));
    if e == f {
        return Err(DiagramError::Inapplicable("an edge cannot pass over itself".into()));
    }
    let partner = net.partner_map();
    // traversal direction along the face agrees with the orientation
    let e_fwd = !net.is_incoming(over);
    let f_fwd = !net.is_incoming(under);
    let base = net.fresh_id();
    let mut fresh = base..;
    let mut next = || fresh.next().expect("unbounded");
    let (e_left, e_mid, e_right) = if e_fwd { (e, next(), next()) } else { (next(), next(), e) };
    let (f_left, f_mid, f_right) = if f_fwd { (next(), next(), f) } else { (f, next(), next()) };
    let (e_far, f_far) = (partner[&over], partner[&under]);
    net.xs[over.crossing][over.pos] = e_left;
    net.xs[e_far.crossing][e_far.pos] = e_right;
    net.xs[under.crossing][under.pos] = f_right;
    net.xs[f_far.crossing][f_far.pos] = f_left;
    let b_in = |cond: bool| if cond { 1 } else { 3 };
    let (l, l_in, r, r_in) = if f_fwd {
        ([f_mid, e_mid, f_left, e_left], b_in(!e_fwd), [f_right, e_mid, f_mid, e_right], b_in(e_fwd))
    } else {
        ([f_left, e_left, f_mid, e_mid], b_in(e_fwd), [f_mid, e_right, f_right, e_mid], b_in(!e_fwd))
    };
    net.xs.push(l);
    net.over_in.push(l_in);
    net.xs.push(r);
    net.over_in.push(r_in);
    net.finish()
}

/// The three crossings and six boundary darts around a triangular face, in
/// counterclockwise order. Strand `s` joins boundary points `s` and `s + 3`;
/// crossings are `[S0×S1, S0×S2, S1×S2]`.
struct Triangle {
    crossings: [usize; 3],
    boundary: [Dart; 6],
    /// `over[k]`: which of the two strands is over at crossing `k`
    over_first: [bool; 3],
}

fn triangle(net: &Net, face: Dart) -> Result<Triangle, DiagramError> {
    let faces = net.faces();
    let f = faces
        .iter()
        .find(|f| f.contains(&face))
        .ok_or_else(|| DiagramError::Inapplicable("dart out of range".into()))?;
    if f.len() != 3 {
        return Err(DiagramError::Inapplicable(format!("face has {} sides, not 3", f.len())));
    }
    let k = f.iter().position(|d| *d == face).expect("member");
    let o = [f[k], f[(k + 1) % 3], f[(k + 2) % 3]];
    let xs = [o[0].crossing, o[1].crossing, o[2].crossing];
    if xs[0] == xs[1] || xs[1] == xs[2] || xs[0] == xs[2] {
        return Err(DiagramError::Inapplicable("triangle crossings are not distinct".into()));
    }
    // arrival position at each crossing is one step counterclockwise of the
    // departure position
    let j: [Dart; 3] = [o[0].rot(1), o[1].rot(1), o[2].rot(1)];
    let boundary = [j[0].rot(1), j[0].rot(2), j[1].rot(1), j[1].rot(2), j[2].rot(1), j[2].rot(2)];
    let odd = |d: Dart| d.pos % 2 == 1;
    // S0 runs along the side from X1 to X2, S2 along X2 to X3, S1 along X3 to X1
    let s0_over_x1 = odd(o[0]);
    let s0_over_x2 = odd(j[1]);
    let s1_over_x3 = odd(o[2]);
    let overs = [
        s0_over_x1 as u8 + s0_over_x2 as u8,
        !s0_over_x1 as u8 + s1_over_x3 as u8,
        !s0_over_x2 as u8 + !s1_over_x3 as u8,
    ];
    if overs.iter().all(|&c| c == 1) {
        return Err(DiagramError::Inapplicable("alternating triangle".into()));
    }
    Ok(Triangle { crossings: xs, boundary, over_first: [s0_over_x1, s0_over_x2, s1_over_x3] })
}

fn r3(mut net: Net, face: Dart) -> Result<PdCode, DiagramError> {
    let t = triangle(&net, face)?;
    // strand s runs from boundary point s to s + 3
    let forward: [bool; 3] = [0, 1, 2].map(|s| net.is_incoming(t.boundary[s]));
    let ext: Vec<u32> = t.boundary.iter().map(|&d| net.edge(d)).collect();
    let mid = [net.fresh_id(), net.fresh_id() + 1, net.fresh_id() + 2];
    // half-edge: (strand, points toward the low boundary point, edge id)
    type Half = (usize, bool, u32);
    let seg_low = |s: usize| ext[s];
    let seg_high = |s: usize| ext[s + 3];
    // after the move: S0 meets S2 then S1, S1 meets S2 then S0, S2 meets S1 then S0
    let y01: [Half; 4] = [(0, true, mid[0]), (1, true, mid[1]), (0, false, seg_high(0)), (1, false, seg_high(1))];
    let y02: [Half; 4] = [(0, true, seg_low(0)), (2, true, mid[2]), (0, false, mid[0]), (2, false, seg_high(2))];
    let y12: [Half; 4] = [(1, true, seg_low(1)), (2, true, seg_low(2)), (1, false, mid[1]), (2, false, mid[2])];
    let pairs = [(0, 1), (0, 2), (1, 2)];
    for (k, halves) in [y01, y02, y12].into_iter().enumerate() {
        let (s, t_) = pairs[k];
        let (over, under) = if t.over_first[k] { (s, t_) } else { (t_, s) };
        let incoming = |strand: usize| {
            halves
                .iter()
                .position(|h| h.0 == strand && h.1 == forward[strand])
                .expect("strand passes the crossing")
        };
        let start = incoming(under);
        let rotated: [u32; 4] = [0, 1, 2, 3].map(|i| halves[(start + i) % 4].2);
        let over_in = (incoming(over) + 4 - start) % 4;
        let x = t.crossings[k];
        net.xs[x] = rotated;
        net.over_in[x] = over_in;
    }
    net.finish()
}

pub(super) fn sites(pd: &PdCode) -> Vec<Move> {
    let net = Net::from_pd(pd);
    let n = net.xs.len();
    let mut out = Vec::new();
    for edge in 1..=pd.num_edges() {
        for (positive, over_first) in [(true, false), (true, true), (false, false), (false, true)] {
            out.push(Move::R1Add { edge, kink: Kink { positive, over_first } });
        }
    }
    if n > 1 {
        out.extend((0..n).filter(|&x| is_kink(&net, x)).map(|crossing| Move::R1Remove { crossing }));
    }
    let faces = net.faces();
    for f in &faces {
        for &a in f {
            for &b in f {
                if net.edge(a) != net.edge(b) {
                    out.push(Move::R2Add { over: a, under: b });
                }
            }
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if has_removable_bigon(&net, x, y) && n > 2 {
                out.push(Move::R2Remove { crossings: (x, y) });
            }
        }
    }
    for f in &faces {
        if triangle(&net, f[0]).is_ok() {
            out.push(Move::R3 { face: f[0] });
        }
    }
    out
}
