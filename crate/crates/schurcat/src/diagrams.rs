//! String diagrams for the 2-morphisms of `U(gl_n)` and `S(n,d)`.
//!
//! A diagram is a word of horizontal slices read bottom to top. Boundaries are
//! signed sequences written left to right; the rightmost region carries the
//! weight `λ` and every strand shifts the label by `±(i)_Λ` going leftward.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::scalars::Q;
use crate::weights::{cartan, root, GlWeight, Sign};
use crate::Error;

/// One letter `E_{±i}` of a signed sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub color: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn up(color: usize) -> Self {
        Letter { color, sign: Sign::Plus }
    }

    pub fn down(color: usize) -> Self {
        Letter { color, sign: Sign::Minus }
    }

    pub fn flipped(self) -> Self {
        Letter { color: self.color, sign: self.sign.flip() }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == Sign::Plus { '+' } else { '-' };
        write!(f, "{s}{}", self.color)
    }
}

/// `i̲_Λ`, the signed sum of the `(i_j)_Λ`.
pub fn seq_weight(n: usize, seq: &[Letter]) -> Vec<i64> {
    let mut v = vec![0; n];
    for l in seq {
        let r = root(n, l.color);
        for (a, b) in v.iter_mut().zip(r) {
            *a += l.sign.as_i64() * b;
        }
    }
    v
}

/// Region labels of a boundary: entry `k` is the region left of letter `k`
/// (0-based), and the last entry is `λ` itself.
pub fn boundary_regions(lambda: &GlWeight, seq: &[Letter]) -> Vec<GlWeight> {
    let mut out = vec![lambda.clone(); seq.len() + 1];
    let mut cur = lambda.0.clone();
    for k in (0..seq.len()).rev() {
        let l = seq[k];
        cur[l.color - 1] += l.sign.as_i64();
        cur[l.color] -= l.sign.as_i64();
        out[k] = GlWeight(cur.clone());
    }
    out
}

/// A 1-morphism `E_i̲ 1_λ {t}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OneMorphism {
    pub seq: Vec<Letter>,
    pub source: GlWeight,
    pub shift: i64,
}

impl OneMorphism {
    pub fn new(seq: Vec<Letter>, source: GlWeight, shift: i64) -> Self {
        OneMorphism { seq, source, shift }
    }

    pub fn target(&self) -> GlWeight {
        boundary_regions(&self.source, &self.seq)[0].clone()
    }

    /// Canonically zero in `S(n,d)`: some region leaves `Λ(n,d)`.
    pub fn is_zero(&self, d: i64) -> bool {
        let n = self.source.n();
        boundary_regions(&self.source, &self.seq).iter().any(|w| !w.in_lambda(n, d))
    }

    /// `E_j̲ 1_{λ'}{t'} ∘ E_i̲ 1_λ {t} = E_{j̲i̲} 1_λ {t+t'}`.
    pub fn compose(&self, right: &OneMorphism) -> Result<OneMorphism, Error> {
        if self.source != right.target() {
            return Err(Error::Mismatch(format!("{} vs {}", self.source, right.target())));
        }
        let mut seq = self.seq.clone();
        seq.extend_from_slice(&right.seq);
        Ok(OneMorphism { seq, source: right.source.clone(), shift: self.shift + right.shift })
    }
}

/// Elementary pieces of a slice.
///
/// Crossings name their strands by the colours at the bottom boundary, left
/// to right: `CrossUU(i,j)` maps `(+i,+j)` to `(+j,+i)` and `CrossDD(i,j)` maps
/// `(-i,-j)` to `(-j,-i)`. Sideways crossings name the upward colour first:
/// `CrossLR(u,v)` maps `(+u,-v)` to `(-v,+u)` and `CrossRL(u,v)` maps `(-v,+u)`
/// to `(+u,-v)`. `CupEF` creates `(-i,+i)`, `CupFE` creates `(+i,-i)`, and the
/// caps close the same pairs. `Bubble` is a closed dotted circle sitting in a
/// region; a negative dot count stands for a fake bubble.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Atom {
    IdUp(usize),
    IdDown(usize),
    DotUp(usize, u32),
    DotDown(usize, u32),
    CrossUU(usize, usize),
    CrossDD(usize, usize),
    CrossLR(usize, usize),
    CrossRL(usize, usize),
    CupEF(usize),
    CupFE(usize),
    CapEF(usize),
    CapFE(usize),
    Bubble { clockwise: bool, color: usize, dots: i64 },
}

impl Atom {
    pub fn bottom(&self) -> Vec<Letter> {
        use Atom::*;
        let (u, d) = (Letter::up, Letter::down);
        match *self {
            IdUp(i) | DotUp(i, _) => vec![u(i)],
            IdDown(i) | DotDown(i, _) => vec![d(i)],
            CrossUU(i, j) => vec![u(i), u(j)],
            CrossDD(i, j) => vec![d(i), d(j)],
            CrossLR(a, b) => vec![u(a), d(b)],
            CrossRL(a, b) => vec![d(b), u(a)],
            CapEF(i) => vec![d(i), u(i)],
            CapFE(i) => vec![u(i), d(i)],
            CupEF(_) | CupFE(_) | Bubble { .. } => vec![],
        }
    }

    pub fn top(&self) -> Vec<Letter> {
        use Atom::*;
        let (u, d) = (Letter::up, Letter::down);
        match *self {
            IdUp(i) | DotUp(i, _) => vec![u(i)],
            IdDown(i) | DotDown(i, _) => vec![d(i)],
            CrossUU(i, j) => vec![u(j), u(i)],
            CrossDD(i, j) => vec![d(j), d(i)],
            CrossLR(a, b) => vec![d(b), u(a)],
            CrossRL(a, b) => vec![u(a), d(b)],
            CupEF(i) => vec![d(i), u(i)],
            CupFE(i) => vec![u(i), d(i)],
            CapEF(_) | CapFE(_) | Bubble { .. } => vec![],
        }
    }

    pub fn colors(&self) -> Vec<usize> {
        use Atom::*;
        match *self {
            IdUp(i) | IdDown(i) | DotUp(i, _) | DotDown(i, _) => vec![i],
            CupEF(i) | CupFE(i) | CapEF(i) | CapFE(i) => vec![i],
            Bubble { color, .. } => vec![color],
            CrossUU(i, j) | CrossDD(i, j) | CrossLR(i, j) | CrossRL(i, j) => vec![i, j],
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Atom::IdUp(_) | Atom::IdDown(_))
    }

    /// Degree, given the label of the region immediately to the right.
    pub fn degree(&self, right: &GlWeight) -> i64 {
        use Atom::*;
        match *self {
            IdUp(_) | IdDown(_) => 0,
            DotUp(_, r) | DotDown(_, r) => 2 * r as i64,
            CrossUU(i, j) | CrossDD(i, j) => -cartan(i, j),
            CrossLR(..) | CrossRL(..) => 0,
            CupEF(i) | CapEF(i) => 1 + right.bar_at(i),
            CupFE(i) | CapFE(i) => 1 - right.bar_at(i),
            Bubble { clockwise, color, dots } => {
                let b = right.bar_at(color);
                if clockwise {
                    2 * (1 - b) + 2 * dots
                } else {
                    2 * (1 + b) + 2 * dots
                }
            }
        }
    }

    /// The atom seen after turning the page upside down.
    pub fn rotate180(&self) -> Atom {
        use Atom::*;
        match *self {
            IdUp(i) => IdDown(i),
            IdDown(i) => IdUp(i),
            DotUp(i, r) => DotDown(i, r),
            DotDown(i, r) => DotUp(i, r),
            CrossUU(i, j) => CrossDD(i, j),
            CrossDD(i, j) => CrossUU(i, j),
            CrossLR(a, b) => CrossRL(b, a),
            CrossRL(a, b) => CrossLR(b, a),
            CupEF(i) => CapEF(i),
            CapEF(i) => CupEF(i),
            CupFE(i) => CapFE(i),
            CapFE(i) => CupFE(i),
            b @ Bubble { .. } => b,
        }
    }

    /// Defining composite for downward and sideways crossings, as slices on the
    /// atom's own boundary (bottom first).
    pub fn expansion(&self) -> Option<Vec<Vec<Atom>>> {
        use Atom::*;
        match *self {
            CrossLR(u, v) => Some(vec![
                vec![CupEF(v), IdUp(u), IdDown(v)],
                vec![IdDown(v), CrossUU(v, u), IdDown(v)],
                vec![IdDown(v), IdUp(u), CapFE(v)],
            ]),
            CrossRL(u, v) => Some(vec![
                vec![IdDown(v), IdUp(u), CupFE(v)],
                vec![IdDown(v), CrossUU(u, v), IdDown(v)],
                vec![CapEF(v), IdUp(u), IdDown(v)],
            ]),
            CrossDD(a, b) => Some(vec![
                vec![CupEF(b), IdDown(a), IdDown(b)],
                vec![IdDown(b), CupEF(a), IdUp(b), IdDown(a), IdDown(b)],
                vec![IdDown(b), IdDown(a), CrossUU(a, b), IdDown(a), IdDown(b)],
                vec![IdDown(b), IdDown(a), IdUp(b), CapFE(a), IdDown(b)],
                vec![IdDown(b), IdDown(a), CapFE(b)],
            ]),
            _ => None,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Atom::*;
        match *self {
            IdUp(i) => write!(f, "U({i})"),
            IdDown(i) => write!(f, "D({i})"),
            DotUp(i, r) => write!(f, "dotU({i},{r})"),
            DotDown(i, r) => write!(f, "dotD({i},{r})"),
            CrossUU(i, j) => write!(f, "xUU({i},{j})"),
            CrossDD(i, j) => write!(f, "xDD({i},{j})"),
            CrossLR(i, j) => write!(f, "xLR({i},{j})"),
            CrossRL(i, j) => write!(f, "xRL({i},{j})"),
            CupEF(i) => write!(f, "cupEF({i})"),
            CupFE(i) => write!(f, "cupFE({i})"),
            CapEF(i) => write!(f, "capEF({i})"),
            CapFE(i) => write!(f, "capFE({i})"),
            Bubble { clockwise, color, dots } => {
                write!(f, "bub({},{color},{dots})", if clockwise { "cw" } else { "ccw" })
            }
        }
    }
}

impl FromStr for Atom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("bad atom `{s}`"));
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let args: Vec<&str> = rest.strip_suffix(')').ok_or_else(bad)?.split(',').map(str::trim).collect();
        let num = |k: usize| -> Result<usize, Error> {
            let v: usize = args.get(k).ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if v == 0 {
                return Err(bad());
            }
            Ok(v)
        };
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad()) };
        use Atom::*;
        let atom = match name.trim() {
            "U" => arity(1).and(num(0).map(IdUp))?,
            "D" => arity(1).and(num(0).map(IdDown))?,
            "dotU" | "dotD" => {
                arity(2)?;
                let r: u32 = args[1].parse().map_err(|_| bad())?;
                if name.trim() == "dotU" {
                    DotUp(num(0)?, r)
                } else {
                    DotDown(num(0)?, r)
                }
            }
            "xUU" => arity(2).and(Ok(CrossUU(num(0)?, num(1)?)))?,
            "xDD" => arity(2).and(Ok(CrossDD(num(0)?, num(1)?)))?,
            "xLR" => arity(2).and(Ok(CrossLR(num(0)?, num(1)?)))?,
            "xRL" => arity(2).and(Ok(CrossRL(num(0)?, num(1)?)))?,
            "cupEF" => arity(1).and(num(0).map(CupEF))?,
            "cupFE" => arity(1).and(num(0).map(CupFE))?,
            "capEF" => arity(1).and(num(0).map(CapEF))?,
            "capFE" => arity(1).and(num(0).map(CapFE))?,
            "bub" => {
                arity(3)?;
                let clockwise = match args[0] {
                    "cw" => true,
                    "ccw" => false,
                    _ => return Err(bad()),
                };
                let dots: i64 = args[2].parse().map_err(|_| bad())?;
                Bubble { clockwise, color: num(1)?, dots }
            }
            _ => return Err(bad()),
        };
        Ok(atom)
    }
}

/// One horizontal layer of atoms, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenSlice {
    pub atoms: Vec<Atom>,
}

impl GenSlice {
    pub fn new(atoms: Vec<Atom>) -> Self {
        GenSlice { atoms }
    }

    pub fn bottom(&self) -> Vec<Letter> {
        self.atoms.iter().flat_map(Atom::bottom).collect()
    }

    pub fn top(&self) -> Vec<Letter> {
        self.atoms.iter().flat_map(Atom::top).collect()
    }

    /// Identity slice on a boundary.
    pub fn identity(seq: &[Letter]) -> Self {
        GenSlice {
            atoms: seq
                .iter()
                .map(|l| if l.sign == Sign::Plus { Atom::IdUp(l.color) } else { Atom::IdDown(l.color) })
                .collect(),
        }
    }

    /// `id ⊗ atom ⊗ id` with the given letters on either side.
    pub fn padded(left: &[Letter], atom: Atom, right: &[Letter]) -> Self {
        let mut atoms = Self::identity(left).atoms;
        atoms.push(atom);
        atoms.extend(Self::identity(right).atoms);
        GenSlice { atoms }
    }

    /// Each atom with the label of the region to its right (taken on the top
    /// side for atoms to the right and the bottom side for atoms to the left,
    /// which is the same label).
    pub fn atoms_with_regions(&self, lambda: &GlWeight) -> Vec<(Atom, GlWeight)> {
        let mut out = Vec::with_capacity(self.atoms.len());
        let mut cur = lambda.clone();
        for a in self.atoms.iter().rev() {
            out.push((*a, cur.clone()));
            let w = seq_weight(lambda.n(), &a.bottom());
            for (c, x) in cur.0.iter_mut().zip(w) {
                *c += x;
            }
        }
        out.reverse();
        out
    }
}

/// A 2-morphism: a word of slices (bottom first) with the rightmost label,
/// the source boundary and the grading shift of the source 1-morphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagramWord {
    pub lambda: GlWeight,
    pub source: Vec<Letter>,
    pub shift: i64,
    pub slices: Vec<GenSlice>,
}

impl DiagramWord {
    /// The identity 2-morphism on `E_seq 1_λ`.
    pub fn identity(lambda: GlWeight, source: Vec<Letter>) -> Self {
        DiagramWord { lambda, source, shift: 0, slices: Vec::new() }
    }

    pub fn from_slices(lambda: GlWeight, slices: Vec<GenSlice>) -> Result<Self, Error> {
        let source = slices.first().map(GenSlice::bottom).unwrap_or_default();
        let mut w = DiagramWord::identity(lambda, source);
        for s in slices {
            w.push(s)?;
        }
        Ok(w)
    }

    /// A single atom padded by identities.
    pub fn single(lambda: GlWeight, left: &[Letter], atom: Atom, right: &[Letter]) -> Self {
        let s = GenSlice::padded(left, atom, right);
        let source = s.bottom();
        DiagramWord { lambda, source, shift: 0, slices: vec![s] }
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    pub fn push(&mut self, s: GenSlice) -> Result<(), Error> {
        let cur = self.target();
        if s.bottom() != cur {
            return Err(Error::Mismatch(format!(
                "slice {} expects {} but boundary is {}",
                self.slices.len(),
                show_seq(&s.bottom()),
                show_seq(&cur)
            )));
        }
        self.slices.push(s);
        Ok(())
    }

    pub fn then(mut self, s: GenSlice) -> Result<Self, Error> {
        self.push(s)?;
        Ok(self)
    }

    pub fn target(&self) -> Vec<Letter> {
        self.slices.last().map(GenSlice::top).unwrap_or_else(|| self.source.clone())
    }

    pub fn source_morphism(&self) -> OneMorphism {
        OneMorphism::new(self.source.clone(), self.lambda.clone(), self.shift)
    }

    /// Target 1-morphism; a degree `k` map `E{t} → E{t'}` has `t' = t - k`.
    pub fn target_morphism(&self) -> OneMorphism {
        OneMorphism::new(self.target(), self.lambda.clone(), self.shift - self.degree())
    }

    /// Leftmost region, the target weight of both boundary 1-morphisms.
    pub fn mu(&self) -> GlWeight {
        boundary_regions(&self.lambda, &self.source)[0].clone()
    }

    /// Boundary after each slice: entry 0 is the source.
    pub fn levels(&self) -> Vec<Vec<Letter>> {
        let mut out = vec![self.source.clone()];
        out.extend(self.slices.iter().map(GenSlice::top));
        out
    }

    /// Checks that adjacent slices have matching boundaries.
    pub fn validate(&self) -> Result<(), Error> {
        let mut cur = self.source.clone();
        for (k, s) in self.slices.iter().enumerate() {
            if s.bottom() != cur {
                return Err(Error::Mismatch(format!("slice {k} does not match its lower boundary")));
            }
            cur = s.top();
        }
        let n = self.n();
        for s in &self.slices {
            for a in &s.atoms {
                if a.colors().iter().any(|&c| c == 0 || c >= n) {
                    return Err(Error::Domain(format!("colour out of range in {a}")));
                }
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> i64 {
        self.slices
            .iter()
            .flat_map(|s| s.atoms_with_regions(&self.lambda))
            .map(|(a, r)| a.degree(&r))
            .sum()
    }

    /// Every planar region label: the regions of each boundary level, plus the
    /// interiors of bubble atoms.
    pub fn regions(&self) -> Vec<GlWeight> {
        let mut out = Vec::new();
        for lv in self.levels() {
            out.extend(boundary_regions(&self.lambda, &lv));
        }
        for s in &self.slices {
            for (a, r) in s.atoms_with_regions(&self.lambda) {
                if let Atom::Bubble { clockwise, color, dots } = a {
                    if dots >= 0 {
                        out.push(bubble_interior(&r, clockwise, color));
                    }
                }
            }
        }
        out
    }

    /// Zero in `S(n,d)`: a region outside `Λ(n,d)` (fake bubble interiors do
    /// not count), or a real bubble of negative degree.
    pub fn is_zero_by_label(&self, d: i64) -> bool {
        let n = self.n();
        for lv in self.levels() {
            if boundary_regions(&self.lambda, &lv).iter().any(|w| !w.in_lambda(n, d)) {
                return true;
            }
        }
        for s in &self.slices {
            for (a, r) in s.atoms_with_regions(&self.lambda) {
                if let Atom::Bubble { clockwise, color, dots } = a {
                    if dots >= 0 && (a.degree(&r) < 0 || !bubble_interior(&r, clockwise, color).in_lambda(n, d)) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// `self ∘ lower`: `lower` is drawn below.
    pub fn compose_v(&self, lower: &DiagramWord) -> Result<DiagramWord, Error> {
        if self.lambda != lower.lambda || self.source != lower.target() {
            return Err(Error::Mismatch(format!(
                "vertical composition: {} over {} at {} / {}",
                show_seq(&self.source),
                show_seq(&lower.target()),
                self.lambda,
                lower.lambda
            )));
        }
        let mut out = lower.clone();
        out.slices.extend(self.slices.iter().cloned());
        Ok(out)
    }

    /// `self` placed to the left of `right`.
    pub fn compose_h(&self, right: &DiagramWord) -> Result<DiagramWord, Error> {
        if self.lambda != right.mu() {
            return Err(Error::Mismatch(format!(
                "horizontal composition: left region {} but right target {}",
                self.lambda,
                right.mu()
            )));
        }
        let h = self.slices.len().max(right.slices.len());
        let l_levels = self.levels();
        let r_levels = right.levels();
        let mut slices = Vec::with_capacity(h);
        for k in 0..h {
            let mut atoms = match self.slices.get(k) {
                Some(s) => s.atoms.clone(),
                None => GenSlice::identity(l_levels.last().unwrap()).atoms,
            };
            match right.slices.get(k) {
                Some(s) => atoms.extend(s.atoms.iter().copied()),
                None => atoms.extend(GenSlice::identity(r_levels.last().unwrap()).atoms),
            }
            slices.push(GenSlice::new(atoms));
        }
        let mut source = self.source.clone();
        source.extend_from_slice(&right.source);
        Ok(DiagramWord { lambda: right.lambda.clone(), source, shift: self.shift + right.shift, slices })
    }

    /// The diagram turned upside down (the categorical anti-involution).
    pub fn rotate180(&self) -> DiagramWord {
        let slices: Vec<GenSlice> = self
            .slices
            .iter()
            .rev()
            .map(|s| GenSlice::new(s.atoms.iter().rev().map(Atom::rotate180).collect()))
            .collect();
        let source: Vec<Letter> = self.target().iter().rev().map(|l| l.flipped()).collect();
        DiagramWord { lambda: self.mu(), source, shift: self.shift, slices }
    }

    /// The same word together with the sign relating this convention to the
    /// `sl_n` one: `(-1)^{λ_{i+1}+1}` per `CapEF` and `(-1)^{λ_{i+1}}` per `CupFE`.
    pub fn sl_sign_translate(&self) -> (DiagramWord, i64) {
        let mut sign = 1;
        for s in &self.slices {
            for (a, r) in s.atoms_with_regions(&self.lambda) {
                match a {
                    Atom::CapEF(i) if (r.at(i + 1) + 1).rem_euclid(2) == 1 => sign = -sign,
                    Atom::CupFE(i) if r.at(i + 1).rem_euclid(2) == 1 => sign = -sign,
                    _ => {}
                }
            }
        }
        (self.clone(), sign)
    }

    /// One non-identity atom per slice (interchange law).
    pub fn serialized(&self) -> DiagramWord {
        let mut out = DiagramWord::identity(self.lambda.clone(), self.source.clone());
        out.shift = self.shift;
        for s in &self.slices {
            let mut cur = s.bottom();
            let mut pos = 0;
            for a in &s.atoms {
                let len = a.bottom().len();
                if !a.is_identity() {
                    let slice = GenSlice::padded(&cur[..pos], *a, &cur[pos + len..]);
                    cur = slice.top();
                    out.slices.push(slice);
                }
                pos += a.top().len();
            }
        }
        out
    }

    /// Replace every downward and sideways crossing by its defining composite.
    pub fn expanded(&self) -> DiagramWord {
        let ser = self.serialized();
        let mut out = DiagramWord::identity(self.lambda.clone(), self.source.clone());
        out.shift = self.shift;
        for s in &ser.slices {
            let mut pos = 0;
            let mut hit = None;
            for a in &s.atoms {
                if !a.is_identity() {
                    hit = Some((pos, *a));
                    break;
                }
                pos += a.bottom().len();
            }
            match hit.and_then(|(p, a)| a.expansion().map(|e| (p, a, e))) {
                Some((p, a, exp)) => {
                    let bottom = s.bottom();
                    let left = &bottom[..p];
                    let right = &bottom[p + a.bottom().len()..];
                    for layer in exp {
                        let mut atoms = GenSlice::identity(left).atoms;
                        atoms.extend(layer);
                        atoms.extend(GenSlice::identity(right).atoms);
                        out.slices.push(GenSlice::new(atoms));
                    }
                }
                None => out.slices.push(s.clone()),
            }
        }
        out
    }

    /// Header line used by the text format.
    pub fn header(&self, d: i64) -> String {
        format!("n={}, d={}, lambda={}, shift={}", self.n(), d, self.lambda, self.shift)
    }

    /// Text format: header, then one slice per line from the bottom.
    pub fn to_text(&self, d: i64) -> String {
        let mut out = self.header(d);
        if self.slices.is_empty() && !self.source.is_empty() {
            let letters: Vec<String> = self.source.iter().map(ToString::to_string).collect();
            out.push_str(&format!(", source=({})", letters.join(",")));
        }
        out.push('\n');
        for s in &self.slices {
            if s.atoms.is_empty() {
                out.push('-');
            } else {
                let toks: Vec<String> = s.atoms.iter().map(ToString::to_string).collect();
                out.push_str(&toks.join(" "));
            }
            out.push('\n');
        }
        out
    }
}

/// Interior label of a bubble drawn in a region labelled `outer`.
pub fn bubble_interior(outer: &GlWeight, clockwise: bool, color: usize) -> GlWeight {
    let mut w = outer.clone();
    let s = if clockwise { -1 } else { 1 };
    w.0[color - 1] += s;
    w.0[color] -= s;
    w
}

pub fn show_seq(seq: &[Letter]) -> String {
    let parts: Vec<String> = seq.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// A diagram file: header data and the word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramFile {
    pub n: usize,
    pub d: i64,
    pub word: DiagramWord,
}

/// Parse the text format.
pub fn parse_diagram(text: &str) -> Result<DiagramFile, Error> {
    let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty diagram file".into()))?;
    let mut n = None;
    let mut d = None;
    let mut lambda = None;
    let mut shift = 0i64;
    let mut source = None;
    let mut rest = header;
    while !rest.is_empty() {
        let (key, tail) = rest.split_once('=').ok_or_else(|| Error::Parse(format!("bad header `{header}`")))?;
        let tail = tail.trim_start();
        let (val, next) = if tail.starts_with('(') {
            let end = tail.find(')').ok_or_else(|| Error::Parse("unclosed weight".into()))?;
            (&tail[..=end], &tail[end + 1..])
        } else {
            match tail.find(',') {
                Some(k) => (&tail[..k], &tail[k..]),
                None => (tail, ""),
            }
        };
        let perr = |_| Error::Parse(format!("bad value for {}", key.trim()));
        match key.trim() {
            "n" => n = Some(val.trim().parse::<usize>().map_err(perr)?),
            "d" => d = Some(val.trim().parse::<i64>().map_err(perr)?),
            "shift" => shift = val.trim().parse::<i64>().map_err(perr)?,
            "lambda" => lambda = Some(parse_weight(val)?),
            "source" => source = Some(parse_letters(val)?),
            k => return Err(Error::Parse(format!("unknown header key `{k}`"))),
        }
        rest = next.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
    }
    let n = n.ok_or_else(|| Error::Parse("missing n".into()))?;
    let d = d.ok_or_else(|| Error::Parse("missing d".into()))?;
    let lambda = lambda.ok_or_else(|| Error::Parse("missing lambda".into()))?;
    if lambda.n() != n {
        return Err(Error::Parse(format!("lambda has {} entries, n={n}", lambda.n())));
    }
    let mut slices = Vec::new();
    for line in lines {
        if line == "-" {
            slices.push(GenSlice::new(Vec::new()));
            continue;
        }
        let atoms = split_atoms(line).into_iter().map(|t| t.parse()).collect::<Result<Vec<Atom>, _>>()?;
        slices.push(GenSlice::new(atoms));
    }
    let mut word = match source {
        Some(src) if slices.is_empty() => DiagramWord::identity(lambda, src),
        Some(src) => {
            let w = DiagramWord::from_slices(lambda, slices)?;
            if w.source != src {
                return Err(Error::Parse("source does not match the first slice".into()));
            }
            w
        }
        None => DiagramWord::from_slices(lambda, slices)?,
    };
    word.shift = shift;
    word.validate()?;
    Ok(DiagramFile { n, d, word })
}

/// Parse `(+1,-2,...)` into letters.
fn parse_letters(s: &str) -> Result<Vec<Letter>, Error> {
    let bad = || Error::Parse(format!("bad letter list `{s}`"));
    let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
    inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (sign, c) = match t.split_at(1) {
                ("+", c) => (Sign::Plus, c),
                ("-", c) => (Sign::Minus, c),
                _ => return Err(bad()),
            };
            let color: usize = c.parse().map_err(|_| bad())?;
            if color == 0 {
                return Err(bad());
            }
            Ok(Letter { color, sign })
        })
        .collect()
}

/// Parse `(a,b,...)` into a weight.
pub fn parse_weight(s: &str) -> Result<GlWeight, Error> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("bad weight `{s}`")))?;
    let v = inner
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad weight `{s}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GlWeight(v))
}

fn split_atoms(line: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = None;
    for (k, c) in line.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c.is_whitespace() && depth == 0 {
            if let Some(s) = start.take() {
                out.push(&line[s..k]);
            }
        } else if start.is_none() {
            start = Some(k);
        }
    }
    if let Some(s) = start {
        out.push(&line[s..]);
    }
    out
}

/// A rational linear combination of diagrams with a common boundary.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Combo {
    pub terms: Vec<(Q, DiagramWord)>,
}

impl Combo {
    pub fn new() -> Self {
        Combo { terms: Vec::new() }
    }

    pub fn of(w: DiagramWord) -> Self {
        Combo { terms: vec![(Q::one(), w)] }
    }

    pub fn add(mut self, c: Q, w: DiagramWord) -> Self {
        if !c.is_zero() {
            self.terms.push((c, w));
        }
        self
    }

    pub fn add_int(self, c: i64, w: DiagramWord) -> Self {
        self.add(Q::from_integer(c.into()), w)
    }

    pub fn extend(mut self, other: Combo, c: &Q) -> Self {
        for (k, w) in other.terms {
            let p = k * c;
            if !p.is_zero() {
                self.terms.push((p, w));
            }
        }
        self
    }
}

/// The divided-power idempotent `e_{±i,m,λ}`: the longest crossing on `m`
/// strands of colour `i` with `m-p` dots on the strand ending at top position
/// `p` (1-based), times `(-1)^{m(m-1)/2}` for the downward version, shifted by
/// `m(1-m)/2`.
pub fn divided_power_idempotent(i: usize, sign: Sign, m: usize, lambda: &GlWeight) -> Combo {
    let letter = Letter { color: i, sign };
    let seq = vec![letter; m];
    let cross = if sign == Sign::Plus { Atom::CrossUU(i, i) } else { Atom::CrossDD(i, i) };
    let mut w = DiagramWord::identity(lambda.clone(), seq.clone());
    for k in 1..m {
        for j in (1..=k).rev() {
            let s = GenSlice::padded(&seq[..j - 1], cross, &seq[j + 1..]);
            w.slices.push(s);
        }
    }
    let mut atoms = Vec::with_capacity(m);
    for p in 1..=m {
        let r = (m - p) as u32;
        atoms.push(match (sign, r) {
            (Sign::Plus, 0) => Atom::IdUp(i),
            (Sign::Minus, 0) => Atom::IdDown(i),
            (Sign::Plus, r) => Atom::DotUp(i, r),
            (Sign::Minus, r) => Atom::DotDown(i, r),
        });
    }
    if m > 1 {
        w.slices.push(GenSlice::new(atoms));
    }
    let half = (m * (m - 1) / 2) as i64;
    w.shift = -half;
    let c = if sign == Sign::Minus && half % 2 == 1 { -Q::one() } else { Q::one() };
    Combo { terms: vec![(c, w)] }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(v: &[i64]) -> GlWeight {
        GlWeight::new(v)
    }

    #[test]
    fn degrees_from_table() {
        let w = DiagramWord::single(lam(&[1, 1]), &[], Atom::DotUp(1, 1), &[]);
        assert_eq!(w.degree(), 2);
        let cup = DiagramWord::single(lam(&[1, 1]), &[], Atom::CupEF(1), &[]);
        assert_eq!(cup.degree(), 1);
        assert_eq!(DiagramWord::identity(lam(&[1, 1]), vec![Letter::up(1)]).degree(), 0);
    }

    #[test]
    fn bubble_labels() {
        // CupEF opens a counterclockwise circle; its interior is λ + α_i
        let w = DiagramWord::single(lam(&[1, 0]), &[], Atom::CupEF(1), &[]);
        assert_eq!(boundary_regions(&lam(&[1, 0]), &w.target())[1], lam(&[2, -1]));
        assert!(w.is_zero_by_label(1));
        let w = DiagramWord::single(lam(&[1, 0]), &[], Atom::CupFE(1), &[]);
        assert_eq!(boundary_regions(&lam(&[1, 0]), &w.target())[1], lam(&[0, 1]));
        assert!(!w.is_zero_by_label(1));
        let b = Atom::Bubble { clockwise: true, color: 1, dots: 0 };
        assert!(!DiagramWord::single(lam(&[1, 0]), &[], b, &[]).is_zero_by_label(1));
        let b = Atom::Bubble { clockwise: false, color: 1, dots: 0 };
        assert!(DiagramWord::single(lam(&[1, 0]), &[], b, &[]).is_zero_by_label(1));
        // E_{-1}E_{+1} at (1,0) passes through (2,-1)
        let seq = vec![Letter::down(1), Letter::up(1)];
        assert_eq!(boundary_regions(&lam(&[1, 0]), &seq)[1], lam(&[2, -1]));
    }

    #[test]
    fn rotation_is_involutive() {
        let w = DiagramWord::single(lam(&[1, 1]), &[Letter::up(1)], Atom::CupEF(1), &[])
            .then(GenSlice::new(vec![Atom::CrossLR(1, 1), Atom::IdUp(1)]))
            .unwrap();
        assert_eq!(w.rotate180().rotate180(), w);
        assert_eq!(w.rotate180().degree(), w.degree());
    }

    #[test]
    fn sign_translation_example() {
        // a CupFE at λ with λ_2 = 1
        let w = DiagramWord::single(lam(&[1, 1]), &[], Atom::CupFE(1), &[]);
        assert_eq!(w.sl_sign_translate().1, -1);
        let w = DiagramWord::single(lam(&[1, 1]), &[Letter::down(1), Letter::up(1)], Atom::CapEF(1), &[]);
        assert_eq!(w.sl_sign_translate().1, 1);
    }

    #[test]
    fn text_roundtrip() {
        let w = DiagramWord::single(lam(&[0, 2]), &[], Atom::CupFE(1), &[])
            .then(GenSlice::new(vec![Atom::DotUp(1, 2), Atom::IdDown(1)]))
            .unwrap();
        let t = w.to_text(2);
        let f = parse_diagram(&t).unwrap();
        assert_eq!(f.word, w);
        assert_eq!((f.n, f.d), (2, 2));
    }

    #[test]
    fn divided_power_shapes() {
        let e = divided_power_idempotent(1, Sign::Plus, 2, &lam(&[0, 2]));
        let (c, w) = &e.terms[0];
        assert_eq!(*c, Q::one());
        assert_eq!(w.slices.len(), 2);
        assert_eq!(w.slices[1].atoms[0], Atom::DotUp(1, 1));
        let e = divided_power_idempotent(1, Sign::Minus, 2, &lam(&[2, 0]));
        assert_eq!(e.terms[0].0, -Q::one());
        assert_eq!(e.terms[0].1.shift, -1);
    }

    #[test]
    fn expansions_keep_boundaries_and_degree() {
        let lam3 = lam(&[1, 1, 1]);
        for a in [Atom::CrossLR(1, 2), Atom::CrossRL(2, 1), Atom::CrossDD(1, 2), Atom::CrossLR(1, 1)] {
            let w = DiagramWord::single(lam3.clone(), &[], a, &[]);
            let e = w.expanded();
            e.validate().unwrap();
            assert_eq!(e.target(), w.target());
            assert_eq!(e.degree(), w.degree());
        }
    }
}
