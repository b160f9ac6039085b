//! Diagrammatic Soergel categories `SC₁(n)` and `SC′₁(d)` and the functors
//! `Σ_{n,d}` into diagram words of `S(n,d)` at the weight `(1^d)`.
//!
//! A Soergel line of colour `i` becomes the pair `E_{-i} E_{+i}`; every region
//! of a Soergel diagram is labelled `(1^d)`.

pub mod ek;
pub mod relations;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::One;

use crate::diagrams::{Atom, Combo, DiagramWord, GenSlice, Letter};
use crate::polysym::{divided_diff, MPoly, Var};
use crate::scalars::Q;
use crate::weights::GlWeight;
use crate::Error;

/// A generator of the Soergel calculus. Boundaries read left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SAtom {
    /// Identity line.
    Line(usize),
    /// `[i] → []`.
    EndDot(usize),
    /// `[] → [i]`.
    StartDot(usize),
    /// `[i,i] → [i]`.
    Merge(usize),
    /// `[i] → [i,i]`.
    Split(usize),
    /// `[i,j] → [j,i]`, `|i-j| > 1`.
    FourVertex(usize, usize),
    /// `[i+1,i,i+1] → [i,i+1,i]`.
    SixVertexUp(usize),
    /// `[i,i+1,i] → [i+1,i,i+1]`.
    SixVertexDown(usize),
    /// A box of colour `i` in a region, `SC′` only.
    Box(usize),
}

impl SAtom {
    pub fn bottom(&self) -> Vec<usize> {
        use SAtom::*;
        match *self {
            Line(i) | EndDot(i) | Split(i) => vec![i],
            StartDot(_) | Box(_) => vec![],
            Merge(i) => vec![i, i],
            FourVertex(i, j) => vec![i, j],
            SixVertexUp(i) => vec![i + 1, i, i + 1],
            SixVertexDown(i) => vec![i, i + 1, i],
        }
    }

    pub fn top(&self) -> Vec<usize> {
        use SAtom::*;
        match *self {
            Line(i) | StartDot(i) | Merge(i) => vec![i],
            EndDot(_) | Box(_) => vec![],
            Split(i) => vec![i, i],
            FourVertex(i, j) => vec![j, i],
            SixVertexUp(i) => vec![i, i + 1, i],
            SixVertexDown(i) => vec![i + 1, i, i + 1],
        }
    }

    /// Dots `+1`, trivalent vertices `-1`, boxes `+2`.
    pub fn degree(&self) -> i64 {
        use SAtom::*;
        match self {
            EndDot(_) | StartDot(_) => 1,
            Merge(_) | Split(_) => -1,
            Box(_) => 2,
            Line(_) | FourVertex(..) | SixVertexUp(_) | SixVertexDown(_) => 0,
        }
    }

    pub fn colors(&self) -> Vec<usize> {
        use SAtom::*;
        match *self {
            Line(i) | EndDot(i) | StartDot(i) | Merge(i) | Split(i) | Box(i) => vec![i],
            FourVertex(i, j) => vec![i, j],
            SixVertexUp(i) | SixVertexDown(i) => vec![i, i + 1],
        }
    }

    pub fn is_line(&self) -> bool {
        matches!(self, SAtom::Line(_))
    }
}

impl fmt::Display for SAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SAtom::*;
        match self {
            Line(i) => write!(f, "line({i})"),
            EndDot(i) => write!(f, "enddot({i})"),
            StartDot(i) => write!(f, "startdot({i})"),
            Merge(i) => write!(f, "merge({i})"),
            Split(i) => write!(f, "split({i})"),
            FourVertex(i, j) => write!(f, "four({i},{j})"),
            SixVertexUp(i) => write!(f, "sixup({i})"),
            SixVertexDown(i) => write!(f, "sixdown({i})"),
            Box(i) => write!(f, "box({i})"),
        }
    }
}

impl FromStr for SAtom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("bad Soergel atom `{s}`"));
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest
            .strip_suffix(')')
            .ok_or_else(bad)?
            .split(',')
            .map(|a| a.trim().parse::<usize>().ok().filter(|&v| v > 0))
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(bad)?;
        use SAtom::*;
        let one = |f: fn(usize) -> SAtom| if args.len() == 1 { Ok(f(args[0])) } else { Err(bad()) };
        match name.trim() {
            "line" => one(Line),
            "enddot" => one(EndDot),
            "startdot" => one(StartDot),
            "merge" => one(Merge),
            "split" => one(Split),
            "sixup" => one(SixVertexUp),
            "sixdown" => one(SixVertexDown),
            "box" => one(Box),
            "four" if args.len() == 2 => Ok(FourVertex(args[0], args[1])),
            _ => Err(bad()),
        }
    }
}

/// A morphism of `SC₁` (or `SC′₁` when `primed`): slices from the bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SoergelWord {
    pub primed: bool,
    pub source: Vec<usize>,
    pub slices: Vec<Vec<SAtom>>,
}

fn lines(seq: &[usize]) -> Vec<SAtom> {
    seq.iter().map(|&c| SAtom::Line(c)).collect()
}

fn slice_bottom(s: &[SAtom]) -> Vec<usize> {
    s.iter().flat_map(SAtom::bottom).collect()
}

fn slice_top(s: &[SAtom]) -> Vec<usize> {
    s.iter().flat_map(SAtom::top).collect()
}

impl SoergelWord {
    pub fn identity(source: &[usize]) -> Self {
        SoergelWord { primed: false, source: source.to_vec(), slices: Vec::new() }
    }

    /// A single generator.
    pub fn atom(a: SAtom) -> Self {
        SoergelWord { primed: matches!(a, SAtom::Box(_)), source: a.bottom(), slices: vec![vec![a]] }
    }

    pub fn from_slices(source: &[usize], slices: Vec<Vec<SAtom>>) -> Result<Self, Error> {
        let primed = slices.iter().flatten().any(|a| matches!(a, SAtom::Box(_)));
        let w = SoergelWord { primed, source: source.to_vec(), slices };
        w.validate()?;
        Ok(w)
    }

    pub fn target(&self) -> Vec<usize> {
        self.slices.last().map(|s| slice_top(s)).unwrap_or_else(|| self.source.clone())
    }

    pub fn degree(&self) -> i64 {
        self.slices.iter().flatten().map(SAtom::degree).sum()
    }

    pub fn validate(&self) -> Result<(), Error> {
        let mut cur = self.source.clone();
        for (k, s) in self.slices.iter().enumerate() {
            if slice_bottom(s) != cur {
                return Err(Error::Mismatch(format!("Soergel slice {k} expects {:?} but boundary is {cur:?}", slice_bottom(s))));
            }
            for a in s {
                match *a {
                    SAtom::Box(_) if !self.primed => return Err(Error::Domain("box outside SC′".into())),
                    SAtom::FourVertex(i, j) if i.abs_diff(j) < 2 => {
                        return Err(Error::Domain(format!("four-valent vertex on colours {i},{j} that are not distant")))
                    }
                    _ => {}
                }
            }
            cur = slice_top(s);
        }
        Ok(())
    }

    /// `self ∘ lower`.
    pub fn compose_v(&self, lower: &SoergelWord) -> Result<SoergelWord, Error> {
        if lower.target() != self.source {
            return Err(Error::Mismatch(format!("Soergel composition {:?} over {:?}", self.source, lower.target())));
        }
        let mut slices = lower.slices.clone();
        slices.extend(self.slices.iter().cloned());
        Ok(SoergelWord { primed: self.primed || lower.primed, source: lower.source.clone(), slices })
    }

    /// `self` to the left of `right`; the shorter word is padded with lines.
    pub fn tensor(&self, right: &SoergelWord) -> SoergelWord {
        let h = self.slices.len().max(right.slices.len());
        let (lt, rt) = (self.target(), right.target());
        let slices = (0..h)
            .map(|k| {
                let mut s = self.slices.get(k).cloned().unwrap_or_else(|| lines(&lt));
                s.extend(right.slices.get(k).cloned().unwrap_or_else(|| lines(&rt)));
                s
            })
            .collect();
        let mut source = self.source.clone();
        source.extend_from_slice(&right.source);
        SoergelWord { primed: self.primed || right.primed, source, slices }
    }

    /// Largest colour used, 0 if none.
    pub fn max_color(&self) -> usize {
        self.source.iter().copied().chain(self.slices.iter().flatten().flat_map(SAtom::colors)).max().unwrap_or(0)
    }

    /// Text format: header with `source=`, then one slice per line from the
    /// bottom (`-` for an empty slice).
    pub fn to_text(&self, n: usize, d: usize) -> String {
        let src: Vec<String> = self.source.iter().map(ToString::to_string).collect();
        let mut out = format!("n={n}, d={d}, source={}\n", src.join(","));
        for s in &self.slices {
            if s.is_empty() {
                out.push('-');
            } else {
                let toks: Vec<String> = s.iter().map(ToString::to_string).collect();
                out.push_str(&toks.join(" "));
            }
            out.push('\n');
        }
        out
    }
}

/// A parsed Soergel word file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoergelFile {
    pub n: usize,
    pub d: usize,
    pub word: SoergelWord,
}

/// Parse the text format of [`SoergelWord::to_text`]. Lines starting with `#`
/// are comments.
pub fn parse_soergel(text: &str) -> Result<SoergelFile, Error> {
    let mut lines_it = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines_it.next().ok_or_else(|| Error::Parse("empty Soergel file".into()))?;
    let (mut n, mut d, mut source) = (None, None, Vec::new());
    for field in header.split(", ") {
        let (k, v) = field.split_once('=').ok_or_else(|| Error::Parse(format!("bad header field `{field}`")))?;
        let num = |v: &str| v.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad number `{v}`")));
        match k.trim() {
            "n" => n = Some(num(v)?),
            "d" => d = Some(num(v)?),
            "source" => {
                source = v.split(',').filter(|t| !t.trim().is_empty()).map(num).collect::<Result<_, _>>()?;
            }
            other => return Err(Error::Parse(format!("unknown header key `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing n".into()))?;
    let d = d.ok_or_else(|| Error::Parse("missing d".into()))?;
    let slices = lines_it
        .map(|l| if l == "-" { Ok(Vec::new()) } else { l.split_whitespace().map(str::parse).collect() })
        .collect::<Result<Vec<Vec<SAtom>>, Error>>()?;
    let word = SoergelWord::from_slices(&source, slices)?;
    Ok(SoergelFile { n, d, word })
}

/// `(P_i f, ∂_i f)` with `f = P_i f + x_i ∂_i f` for `f` in the box
/// variables `Var(0..)` (box `k` is `Var(k-1)`); `P_i f` is symmetric in
/// boxes `i, i+1`.
pub fn box_normalize(f: &MPoly, i: usize) -> (MPoly, MPoly) {
    let (x, y) = (Var(i as u32 - 1), Var(i as u32));
    let df = divided_diff(f, x, y);
    let p = f.sub(&df.mul(&MPoly::var(x)));
    (p, df)
}

/// The weight `(1^d, 0^{n-d})`.
pub fn unit_weight(n: usize, d: usize) -> GlWeight {
    GlWeight::new(&(0..n).map(|k| i64::from(k < d)).collect::<Vec<_>>())
}

/// The boundary `E_{-i} E_{+i}` for each colour.
pub fn letters(seq: &[usize]) -> Vec<Letter> {
    seq.iter().flat_map(|&c| [Letter::down(c), Letter::up(c)]).collect()
}

fn piece(lambda: &GlWeight, bottom: Vec<Letter>, slices: Vec<Vec<Atom>>) -> DiagramWord {
    let mut w = DiagramWord::identity(lambda.clone(), bottom);
    for s in slices {
        w.push(GenSlice::new(s)).expect("fixed picture has matching boundaries");
    }
    w
}

/// `Σ` of one generator as a combination of words at `(1^d)`.
pub fn sigma_atom(a: SAtom, n: usize, d: usize) -> Result<Combo, Error> {
    use Atom::*;
    let lambda = unit_weight(n, d);
    let top = if d < n { d - 1 } else { n - 1 };
    let check = |c: usize| {
        if c == 0 || c > top {
            Err(Error::Domain(format!("colour {c} outside 1..={top} for Σ_{{{n},{d}}}")))
        } else {
            Ok(())
        }
    };
    if let SAtom::Box(i) = a {
        if d >= n {
            return Err(Error::Domain("boxes exist only for d < n".into()));
        }
        if i == 0 || i > d {
            return Err(Error::Domain(format!("box colour {i} outside 1..={d}")));
        }
        let mut c = Combo::new();
        for j in i..d {
            c = c.add(Q::one(), piece(&lambda, Vec::new(), vec![vec![Bubble { clockwise: false, color: j, dots: 0 }]]));
        }
        let fake = piece(&lambda, Vec::new(), vec![vec![Bubble { clockwise: false, color: d, dots: -1 }]]);
        return Ok(c.add_int(-1, fake));
    }
    for c in a.colors() {
        check(c)?;
    }
    let bottom = letters(&a.bottom());
    let w = match a {
        SAtom::Line(_) => DiagramWord::identity(lambda, bottom),
        SAtom::StartDot(i) => piece(&lambda, bottom, vec![vec![CupEF(i)]]),
        SAtom::EndDot(i) => piece(&lambda, bottom, vec![vec![CapEF(i)]]),
        SAtom::Merge(i) => piece(&lambda, bottom, vec![vec![IdDown(i), CapFE(i), IdUp(i)]]),
        SAtom::Split(i) => piece(&lambda, bottom, vec![vec![IdDown(i), CupFE(i), IdUp(i)]]),
        SAtom::FourVertex(i, j) => {
            if i.abs_diff(j) < 2 {
                return Err(Error::Domain(format!("colours {i},{j} are not distant")));
            }
            piece(
                &lambda,
                bottom,
                vec![
                    vec![IdDown(i), CrossLR(i, j), IdUp(j)],
                    vec![CrossDD(i, j), CrossUU(i, j)],
                    vec![IdDown(j), CrossRL(j, i), IdUp(i)],
                ],
            )
        }
        SAtom::SixVertexUp(b) => {
            let r = b + 1;
            piece(
                &lambda,
                bottom,
                vec![
                    vec![IdDown(r), CrossLR(r, b), IdUp(b), IdDown(r), IdUp(r)],
                    vec![IdDown(r), IdDown(b), IdUp(r), CrossLR(b, r), IdUp(r)],
                    vec![IdDown(r), IdDown(b), CapFE(r), IdUp(b), IdUp(r)],
                    vec![IdDown(r), IdDown(b), CupEF(b), IdUp(b), IdUp(r)],
                    vec![IdDown(r), CrossDD(b, b), CrossUU(b, b), IdUp(r)],
                    vec![IdDown(r), IdDown(b), CrossRL(b, b), IdUp(b), IdUp(r)],
                    vec![CrossDD(r, b), IdUp(b), IdDown(b), CrossUU(b, r)],
                    vec![IdDown(b), CrossRL(b, r), CrossRL(r, b), IdUp(b)],
                ],
            )
        }
        SAtom::SixVertexDown(b) => {
            let r = b + 1;
            piece(
                &lambda,
                bottom,
                vec![
                    vec![IdDown(b), CrossLR(b, r), CrossLR(r, b), IdUp(b)],
                    vec![CrossDD(b, r), IdUp(b), IdDown(b), CrossUU(r, b)],
                    vec![IdDown(r), IdDown(b), CrossLR(b, b), IdUp(b), IdUp(r)],
                    vec![IdDown(r), CrossDD(b, b), CrossUU(b, b), IdUp(r)],
                    vec![IdDown(r), IdDown(b), CapEF(b), IdUp(b), IdUp(r)],
                    vec![IdDown(r), IdDown(b), CupFE(r), IdUp(b), IdUp(r)],
                    vec![IdDown(r), CrossRL(r, b), CrossRL(b, r), IdUp(r)],
                ],
            )
        }
        SAtom::Box(_) => unreachable!(),
    };
    Ok(Combo::of(w))
}

fn combo_tensor(left: &Combo, right: &Combo) -> Result<Combo, Error> {
    let mut out = Combo::new();
    for (a, u) in &left.terms {
        for (b, v) in &right.terms {
            out = out.add(a * b, u.compose_h(v)?);
        }
    }
    Ok(out)
}

fn combo_compose(upper: &Combo, lower: &Combo) -> Result<Combo, Error> {
    let mut out = Combo::new();
    for (a, u) in &lower.terms {
        for (b, v) in &upper.terms {
            out = out.add(a * b, v.compose_v(u)?);
        }
    }
    Ok(out)
}

/// `Σ_{n,d}` of a word: `Σ_{n,n}` for `d = n`, and the boxed extension for
/// `d < n`. Box-free words give a single term.
pub fn sigma(word: &SoergelWord, n: usize, d: usize) -> Result<Combo, Error> {
    if d > n || d == 0 {
        return Err(Error::Domain(format!("Σ needs 1 ≤ d ≤ n, got n={n} d={d}")));
    }
    word.validate()?;
    let lambda = unit_weight(n, d);
    let mut acc = Combo::of(DiagramWord::identity(lambda.clone(), letters(&word.source)));
    for s in &word.slices {
        let mut layer = Combo::of(DiagramWord::identity(lambda.clone(), Vec::new()));
        for a in s {
            layer = combo_tensor(&layer, &sigma_atom(*a, n, d)?)?;
        }
        acc = combo_compose(&layer, &acc)?;
    }
    Ok(acc)
}

/// `Σ` of a box-free word as one diagram word.
pub fn sigma_word(word: &SoergelWord, n: usize, d: usize) -> Result<DiagramWord, Error> {
    let c = sigma(word, n, d)?;
    match c.terms.as_slice() {
        [(k, w)] if k.is_one() => Ok(w.clone()),
        _ => Err(Error::Domain("word with boxes maps to a combination".into())),
    }
}
