//! The bimodule 2-representation: every diagram acts as an exact map between
//! rings of ladder webs.
//!
//! A boundary `E_{s_1} ... E_{s_m} 1_λ` is a ladder with `m` thin rungs, rung 1
//! at the bottom. The bottom alphabets (`d` variables grouped by strand, from
//! the leftmost region `μ`) are free; rung `k` carries one variable `x_k` with
//! exponent below the thickness of the strand it splits from. Relations come
//! from `∏_{p ∈ P}(x - p) = 0` for the parent alphabet `P`, with the
//! elementary symmetric functions of every strand tracked level by level.

pub mod checks;
pub mod relations;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::diagrams::{boundary_regions, show_seq, Atom, Combo, DiagramWord, Letter};
use crate::polysym::{divided_diff, Monomial, MPoly, Var};
use crate::scalars::Q;
use crate::weights::{GlWeight, Sign};
use crate::Error;

/// The ring of a ladder web, with normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    pub d: usize,
    pub lambda: GlWeight,
    pub seq: Vec<Letter>,
    /// `levels[k]` is the weight between letter `k` and letter `k+1`.
    pub levels: Vec<GlWeight>,
    /// Every level lies in `Λ(n,d)`; otherwise the ring is zero.
    pub live: bool,
    /// `elems[k][s][l] = e_l` of strand `s` at level `k`, in normal form.
    elems: Vec<Vec<Vec<MPoly>>>,
}

/// `(parent, destination)` strands (0-based) of a rung.
fn strands(l: Letter) -> (usize, usize) {
    match l.sign {
        Sign::Plus => (l.color - 1, l.color),
        Sign::Minus => (l.color, l.color - 1),
    }
}

impl Ladder {
    pub fn new(d: usize, lambda: &GlWeight, seq: &[Letter]) -> Ladder {
        let n = lambda.n();
        let levels = boundary_regions(lambda, seq);
        let live = levels.iter().all(|w| w.in_lambda(n, d as i64));
        let mut lad = Ladder { d, lambda: lambda.clone(), seq: seq.to_vec(), levels, live, elems: Vec::new() };
        if !live {
            return lad;
        }
        let mut base = Vec::with_capacity(n);
        let mut next = 0u32;
        for s in 0..n {
            let size = lad.levels[0].0[s] as usize;
            let mut e = vec![MPoly::one()];
            for _ in 0..size {
                let v = MPoly::var(Var(next));
                next += 1;
                let mut ne = vec![MPoly::zero(); e.len() + 1];
                for (l, c) in e.iter().enumerate() {
                    ne[l] = ne[l].add(c);
                    ne[l + 1] = ne[l + 1].add(&c.mul(&v));
                }
                e = ne;
            }
            base.push(e);
        }
        lad.elems.push(base);
        for k in 1..=seq.len() {
            let (p, q) = strands(seq[k - 1]);
            let x = MPoly::var(lad.xvar(k));
            let prev = &lad.elems[k - 1];
            let mut cur = prev.clone();
            // e_l(P \ x) = Σ_j (-x)^j e_{l-j}(P)
            let np = prev[p].len() - 1;
            let mut rest = vec![MPoly::one()];
            for l in 1..np {
                let t = prev[p][l].sub(&rest[l - 1].mul(&x));
                rest.push(t);
            }
            cur[p] = rest;
            // e_l(Q ∪ x) = e_l(Q) + x e_{l-1}(Q)
            let nq = prev[q].len() - 1;
            let mut grown = vec![MPoly::one()];
            for l in 1..=nq + 1 {
                let mut t = if l <= nq { prev[q][l].clone() } else { MPoly::zero() };
                t = t.add(&prev[q][l - 1].mul(&x));
                grown.push(t);
            }
            cur[q] = grown;
            let cur = cur.into_iter().map(|s| s.into_iter().map(|e| lad.reduce_upto(&e, k)).collect()).collect();
            lad.elems.push(cur);
        }
        lad
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Variable of rung `k` (1-based).
    pub fn xvar(&self, k: usize) -> Var {
        Var((self.d + k - 1) as u32)
    }

    /// Exponent bound of rung `k`: the size of its parent strand.
    pub fn bound(&self, k: usize) -> u32 {
        let (p, _) = strands(self.seq[k - 1]);
        self.levels[k - 1].0[p] as u32
    }

    /// `e_l` of strand `s` (0-based) at level `k`.
    pub fn elem(&self, k: usize, s: usize, l: usize) -> MPoly {
        self.elems[k][s].get(l).cloned().unwrap_or_default()
    }

    /// All `e_l` of strand `s` at level `k`.
    pub fn elems_of(&self, k: usize, s: usize) -> &[MPoly] {
        &self.elems[k][s]
    }

    /// The `Sym(μ)`-basis `x^α`, `α_k < bound(k)`, in lexicographic order.
    pub fn basis(&self) -> Vec<Monomial> {
        if !self.live {
            return Vec::new();
        }
        let mut out = vec![Monomial::one()];
        for k in 1..=self.len() {
            let v = self.xvar(k);
            let mut next = Vec::new();
            for m in &out {
                for e in 0..self.bound(k) {
                    next.push(m.mul(&Monomial::var(v, e)));
                }
            }
            out = next;
        }
        out
    }

    /// Normal form of a representative.
    pub fn reduce(&self, p: &MPoly) -> MPoly {
        if !self.live {
            return MPoly::zero();
        }
        self.reduce_upto(p, self.len())
    }

    fn reduce_upto(&self, p: &MPoly, top: usize) -> MPoly {
        let mut out = p.clone();
        for k in (1..=top).rev() {
            let (par, _) = strands(self.seq[k - 1]);
            out = reduce_var(&out, self.xvar(k), &self.elems[k - 1][par]);
        }
        out
    }

    /// Name of a variable for display: `z1..zd` for the bottom alphabets and
    /// `x1..xm` for the rungs.
    pub fn var_name(&self, v: Var) -> String {
        let k = v.0 as usize;
        if k < self.d {
            format!("z{}", k + 1)
        } else {
            format!("x{}", k - self.d + 1)
        }
    }

    /// `Σ_k -(λ_i or λ_{i+1})` over the letters, read at the weight to the
    /// right of each letter; the internal grading offset of the ladder.
    pub fn grading_offset(&self) -> i64 {
        self.seq
            .iter()
            .enumerate()
            .map(|(k, l)| {
                let nu = &self.levels[k + 1];
                match l.sign {
                    Sign::Plus => -nu.at(l.color),
                    Sign::Minus => -nu.at(l.color + 1),
                }
            })
            .sum()
    }
}

/// Rewrite powers `v^j`, `j ≥ N`, with `Σ_l (-1)^l e_l v^{N-l} = 0`.
fn reduce_var(p: &MPoly, v: Var, e: &[MPoly]) -> MPoly {
    let n = e.len() - 1;
    if p.degree_in(v) < n as u32 {
        return p.clone();
    }
    let mut c = p.coeffs_in(v);
    for j in (n..c.len()).rev() {
        let top = core::mem::take(&mut c[j]);
        if top.is_zero() {
            continue;
        }
        for l in 1..=n {
            let t = top.mul(&e[l]);
            if l % 2 == 1 {
                c[j - l] = c[j - l].add(&t);
            } else {
                c[j - l] = c[j - l].sub(&t);
            }
        }
    }
    let mut out = MPoly::zero();
    for (j, q) in c.into_iter().enumerate() {
        if !q.is_zero() {
            out = out.add(&q.mul_monomial(&Monomial::var(v, j as u32), &Q::one()));
        }
    }
    out
}

/// `h_0..h_top` from `e_0..e_N`.
fn completes(e: &[MPoly], top: i64) -> Vec<MPoly> {
    let mut h = vec![MPoly::one()];
    for j in 1..=top.max(0) as usize {
        let mut t = MPoly::zero();
        for l in 1..=j.min(e.len() - 1) {
            let s = e[l].mul(&h[j - l]);
            t = if l % 2 == 1 { t.add(&s) } else { t.sub(&s) };
        }
        h.push(t);
    }
    h
}

fn sign_pow(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The closed-form series entry of degree `2k` for a bubble of colour `i`,
/// given `e_•` of strands `i` (`t`) and `i+1` (`u`):
/// clockwise `(-1)^b Σ_l (-1)^l e_l(u) h_{k-l}(t)`,
/// counterclockwise `(-1)^{b+1} Σ_l (-1)^l e_l(t) h_{k-l}(u)`.
pub fn bubble_series_entry(clockwise: bool, k: i64, t: &[MPoly], u: &[MPoly]) -> MPoly {
    if k < 0 {
        return MPoly::zero();
    }
    let b = (u.len() - 1) as i64;
    let (e, h, s) = if clockwise { (u, completes(t, k), sign_pow(b)) } else { (t, completes(u, k), sign_pow(b + 1)) };
    let mut acc = MPoly::zero();
    for l in 0..=(k as usize).min(e.len() - 1) {
        let term = e[l].mul(&h[k as usize - l]);
        acc = if l % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc.scale_int(s)
}

/// Series index `k` (half the degree) of a bubble with `r` dots at `λ̄_i`.
pub fn bubble_slot(clockwise: bool, r: i64, bar: i64) -> i64 {
    if clockwise {
        r + 1 - bar
    } else {
        r + 1 + bar
    }
}

/// Both bubble series through slot `top`: real entries from the closed
/// form, fake entries solved from `W(t) C(t) = -1`, starting from
/// `(-1)^b` and `(-1)^{b-1}` in slot 0.
pub fn bubble_series(t: &[MPoly], u: &[MPoly], top: i64) -> (Vec<MPoly>, Vec<MPoly>) {
    let a = (t.len() - 1) as i64;
    let b = (u.len() - 1) as i64;
    let bar = a - b;
    let real_cw = |k: i64| k + bar - 1 >= 0;
    let real_ccw = |k: i64| k - bar - 1 >= 0;
    let mut w: Vec<MPoly> = Vec::new();
    let mut c: Vec<MPoly> = Vec::new();
    for k in 0..=top.max(0) {
        let rw = real_cw(k);
        let rc = real_ccw(k);
        let wk = if rw { Some(bubble_series_entry(true, k, t, u)) } else { None };
        let ck = if rc { Some(bubble_series_entry(false, k, t, u)) } else { None };
        let (wk, ck) = match (wk, ck) {
            (Some(x), Some(y)) => (x, y),
            (None, None) => {
                debug_assert_eq!(k, 0);
                (MPoly::int(sign_pow(b)), MPoly::int(sign_pow(b - 1)))
            }
            (Some(x), None) => {
                // Σ_{j} W_j C_{k-j} = -δ_{k0}; solve for C_k using W_0 = ±1.
                let w0 = if k == 0 { x.clone() } else { w[0].clone() };
                let mut rhs = if k == 0 { MPoly::int(-1) } else { MPoly::zero() };
                for j in 1..=k as usize {
                    let wj = if j == k as usize { &x } else { &w[j] };
                    rhs = rhs.sub(&wj.mul(&c[k as usize - j]));
                }
                let inv = w0.constant_term().recip();
                (x, rhs.scale(&inv))
            }
            (None, Some(y)) => {
                let c0 = if k == 0 { y.clone() } else { c[0].clone() };
                let mut rhs = if k == 0 { MPoly::int(-1) } else { MPoly::zero() };
                for j in 1..=k as usize {
                    let cj = if j == k as usize { &y } else { &c[j] };
                    rhs = rhs.sub(&cj.mul(&w[k as usize - j]));
                }
                let inv = c0.constant_term().recip();
                (rhs.scale(&inv), y)
            }
        };
        w.push(wk);
        c.push(ck);
    }
    (w, c)
}

/// Value of a (possibly fake) bubble with `r` dots, from the strand data.
pub fn bubble_value_in(clockwise: bool, r: i64, t: &[MPoly], u: &[MPoly]) -> MPoly {
    let bar = (t.len() as i64) - (u.len() as i64);
    let k = bubble_slot(clockwise, r, bar);
    if k < 0 {
        return MPoly::zero();
    }
    if r >= 0 {
        return bubble_series_entry(clockwise, k, t, u);
    }
    let (w, c) = bubble_series(t, u, k);
    if clockwise {
        w[k as usize].clone()
    } else {
        c[k as usize].clone()
    }
}

/// Bubble value at `λ` in the bottom variables of the empty ladder
/// (`z1..zd`, grouped by strand).
pub fn bubble_value(clockwise: bool, r: i64, i: usize, lambda: &GlWeight) -> MPoly {
    let lad = Ladder::new(lambda.size() as usize, lambda, &[]);
    if !lad.live {
        return MPoly::zero();
    }
    bubble_value_in(clockwise, r, lad.elems_of(0, i - 1), lad.elems_of(0, i))
}

/// A 2-morphism evaluated on the `Sym(μ)`-basis of its source ladder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimMap {
    pub source: Ladder,
    pub target: Ladder,
    pub images: Vec<MPoly>,
    /// Diagram degree.
    pub degree: i64,
}

impl BimMap {
    pub fn zero(source: Ladder, target: Ladder, degree: i64) -> BimMap {
        let images = vec![MPoly::zero(); source.basis().len()];
        BimMap { source, target, images, degree }
    }

    pub fn identity(lad: Ladder) -> BimMap {
        let images = lad.basis().into_iter().map(|m| MPoly::term(Q::one(), m)).collect();
        BimMap { source: lad.clone(), target: lad, images, degree: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(MPoly::is_zero)
    }

    /// Polynomial degree shift implied by the diagram degree.
    pub fn poly_shift(&self) -> i64 {
        self.degree - self.target.grading_offset() + self.source.grading_offset()
    }

    /// Image of an arbitrary element, by `Sym(μ)`-linearity.
    pub fn apply(&self, p: &MPoly) -> MPoly {
        let p = self.source.reduce(p);
        let basis = self.source.basis();
        let idx: BTreeMap<Monomial, usize> = basis.into_iter().enumerate().map(|(k, m)| (m, k)).collect();
        let d = self.source.d as u32;
        let mut out = MPoly::zero();
        for (m, c) in p.split_by(|v| v.0 >= d) {
            let k = idx[&m];
            out = out.add(&c.mul(&self.images[k]));
        }
        self.target.reduce(&out)
    }

    /// `self ∘ lower`.
    pub fn after(&self, lower: &BimMap) -> BimMap {
        let images = lower.images.iter().map(|p| self.apply(p)).collect();
        BimMap { source: lower.source.clone(), target: self.target.clone(), images, degree: self.degree + lower.degree }
    }

    pub fn add_scaled(&self, other: &BimMap, c: &Q) -> BimMap {
        let images = self.images.iter().zip(&other.images).map(|(a, b)| a.add(&b.scale(c))).collect();
        BimMap { images, ..self.clone() }
    }

    pub fn scale(&self, c: &Q) -> BimMap {
        BimMap { images: self.images.iter().map(|p| p.scale(c)).collect(), ..self.clone() }
    }

    /// The map on the basis, one line per basis monomial.
    pub fn describe(&self) -> String {
        let src = &self.source;
        let tgt = &self.target;
        let mut out = String::new();
        for (m, img) in src.basis().iter().zip(&self.images) {
            let dom = MPoly::term(Q::one(), m.clone()).display_with(&|v| src.var_name(v));
            out.push_str(&format!("{dom} -> {}\n", img.display_with(&|v| tgt.var_name(v))));
        }
        out
    }
}

/// Sign of the downward `(i,i)` crossing relative to `∂`.
const DOWN_CROSS_SIGN: i64 = -1;

/// Sign `ε` in `p ↦ ε (x_A - x_B) p` for crossings that make two rungs
/// dependent, where `A` is the lower rung of the source.
fn dependent_sign(atom: &Atom) -> i64 {
    if matches!(atom, Atom::CrossDD(..)) {
        -1
    } else {
        1
    }
}

/// Apply one atom at letter position `pos` of the ladder `lad_in`.
pub fn apply_atom(lad_in: &Ladder, lad_out: &Ladder, pos: usize, atom: Atom, p: &MPoly) -> MPoly {
    if !lad_out.live || p.is_zero() {
        return MPoly::zero();
    }
    let d = lad_in.d as u32;
    let len_in = atom.bottom().len();
    let len_out = atom.top().len();
    let first_upper = d + (pos + len_in) as u32;
    let delta = len_out as i64 - len_in as i64;
    let mut out = MPoly::zero();
    for (beta, c) in p.split_by(|v| v.0 >= first_upper) {
        let c2 = window_op(lad_in, lad_out, pos, atom, &c);
        if c2.is_zero() {
            continue;
        }
        let beta = beta.rename(|v| Var((v.0 as i64 + delta) as u32));
        out = out.add(&c2.mul_monomial(&beta, &Q::one()));
    }
    lad_out.reduce(&out)
}

fn window_op(lad_in: &Ladder, lad_out: &Ladder, pos: usize, atom: Atom, c: &MPoly) -> MPoly {
    use Atom::*;
    let w = |j: usize| lad_in.xvar(pos + j);
    let wo = |j: usize| lad_out.xvar(pos + j);
    match atom {
        IdUp(_) | IdDown(_) => c.clone(),
        DotUp(_, r) | DotDown(_, r) => c.mul(&MPoly::var_pow(w(1), r)),
        CrossUU(i, j) if i == j => divided_diff(c, w(1), w(2)),
        CrossDD(i, j) if i == j => divided_diff(c, w(1), w(2)).scale_int(DOWN_CROSS_SIGN),
        CrossLR(i, j) | CrossRL(i, j) if i == j => sideways_same(lad_in, pos, atom, c),
        CrossUU(..) | CrossDD(..) | CrossLR(..) | CrossRL(..) => {
            let sw = c.swap(w(1), w(2));
            let a = lad_in.seq[pos];
            let b = lad_in.seq[pos + 1];
            let dep_in = strands(a).1 == strands(b).0;
            let dep_out = strands(b).1 == strands(a).0;
            if !dep_in && dep_out {
                let f = MPoly::var(wo(2)).sub(&MPoly::var(wo(1))).scale_int(dependent_sign(&atom));
                sw.mul(&f)
            } else {
                sw
            }
        }
        CupEF(i) => {
            // Σ_l (-1)^l x^{a-l} e_l(t), x the upward rung
            let t = lad_in.elems_of(pos, i - 1);
            let a = t.len() - 1;
            let mut f = MPoly::zero();
            for (l, e) in t.iter().enumerate() {
                let term = e.mul(&MPoly::var_pow(wo(2), (a - l) as u32));
                f = if l % 2 == 0 { f.add(&term) } else { f.sub(&term) };
            }
            c.mul(&f)
        }
        CupFE(i) => {
            // Σ_l (-1)^l e_{b-l}(u) y^l, y the downward rung
            let u = lad_in.elems_of(pos, i);
            let b = u.len() - 1;
            let mut f = MPoly::zero();
            for l in 0..=b {
                let term = u[b - l].mul(&MPoly::var_pow(wo(2), l as u32));
                f = if l % 2 == 0 { f.add(&term) } else { f.sub(&term) };
            }
            c.mul(&f)
        }
        CapEF(i) | CapFE(i) => {
            let par = if matches!(atom, CapEF(_)) { i } else { i - 1 };
            let e = lad_in.elems_of(pos, par);
            let top = e.len() - 1;
            if top == 0 {
                return MPoly::zero();
            }
            let s = c.substitute_var(w(2), &MPoly::var(w(1)));
            let r = reduce_var(&s, w(1), e);
            let coef = r.coeffs_in(w(1)).get(top - 1).cloned().unwrap_or_default();
            if matches!(atom, CapEF(_)) && top % 2 == 0 {
                coef.neg()
            } else {
                coef
            }
        }
        Bubble { clockwise, color, dots } => {
            let t = lad_in.elems_of(pos, color - 1);
            let u = lad_in.elems_of(pos, color);
            c.mul(&bubble_value_in(clockwise, dots, t, u))
        }
    }
}

/// Same-colour sideways crossing on the window `(w_1, w_2)` with output
/// `(c, d)`: `w_1^α w_2^β ↦ d^α c^β - ∏_{s∈S}(d - s) h_{α+β-|S|}(S ∪ c)`,
/// where `S` is strand `i` below the window for `xLR` and strand `i+1` for
/// `xRL`.
fn sideways_same(lad: &Ladder, pos: usize, atom: Atom, c: &MPoly) -> MPoly {
    let (i, lr) = match atom {
        Atom::CrossLR(i, _) => (i, true),
        Atom::CrossRL(i, _) => (i, false),
        _ => unreachable!(),
    };
    let (w1, w2) = (lad.xvar(pos + 1), lad.xvar(pos + 2));
    // output rungs occupy the same two variable slots
    let (cv, dv) = (w1, w2);
    let strand = if lr { i - 1 } else { i };
    let e = lad.elems_of(pos, strand);
    let size = e.len() - 1;
    let mut f = MPoly::zero();
    for (l, el) in e.iter().enumerate() {
        // ∏(d - s) = Σ_l (-1)^l e_l d^{N-l}
        let term = el.mul(&MPoly::var_pow(dv, (size - l) as u32));
        f = if l % 2 == 0 { f.add(&term) } else { f.sub(&term) };
    }
    let f = f.neg();
    let win = |v: Var| v == w1 || v == w2;
    let mut out = MPoly::zero();
    let mut hs: BTreeMap<i64, MPoly> = BTreeMap::new();
    for (m, k) in c.split_by(win) {
        let (al, be) = (m.exp(w1), m.exp(w2));
        let lead = MPoly::term(Q::one(), Monomial::from_pairs(vec![(dv, al), (cv, be)]));
        let deg = (al + be) as i64 - size as i64;
        let h = hs
            .entry(deg)
            .or_insert_with(|| {
                if deg < 0 {
                    return MPoly::zero();
                }
                let hh = completes(e, deg);
                let mut acc = MPoly::zero();
                for j in 0..=deg as usize {
                    acc = acc.add(&hh[deg as usize - j].mul(&MPoly::var_pow(cv, j as u32)));
                }
                acc
            })
            .clone();
        out = out.add(&k.mul(&lead.add(&f.mul(&h))));
    }
    out
}

/// Evaluates diagrams; ladders are cached by boundary.
#[derive(Clone, Debug, Default)]
pub struct Evaluator {
    pub d: usize,
    cache: BTreeMap<(GlWeight, Vec<Letter>), Ladder>,
}

impl Evaluator {
    pub fn new(d: usize) -> Self {
        Evaluator { d, cache: BTreeMap::new() }
    }

    pub fn ladder(&mut self, lambda: &GlWeight, seq: &[Letter]) -> Ladder {
        let d = self.d;
        self.cache
            .entry((lambda.clone(), seq.to_vec()))
            .or_insert_with(|| Ladder::new(d, lambda, seq))
            .clone()
    }

    /// Push one element through the word slice by slice.
    pub fn push_element(&mut self, word: &DiagramWord, p: &MPoly) -> MPoly {
        let ser = word.serialized();
        let mut cur = self.ladder(&word.lambda, &word.source);
        let mut val = cur.reduce(p);
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
            let next = self.ladder(&word.lambda, &s.top());
            if let Some((pos, a)) = hit {
                val = apply_atom(&cur, &next, pos, a, &val);
            }
            cur = next;
        }
        val
    }

    /// The map of a word on the source basis.
    pub fn eval(&mut self, word: &DiagramWord) -> BimMap {
        let src = self.ladder(&word.lambda, &word.source);
        let tgt = self.ladder(&word.lambda, &word.target());
        let degree = word.degree();
        if !src.live || !tgt.live || word.is_zero_by_label(self.d as i64) {
            return BimMap::zero(src, tgt, degree);
        }
        let images = src
            .basis()
            .into_iter()
            .map(|m| self.push_element(word, &MPoly::term(Q::one(), m)))
            .collect();
        BimMap { source: src, target: tgt, images, degree }
    }

    /// A linear combination of words from `source` to `target` at `λ`.
    pub fn eval_combo(&mut self, combo: &Combo, lambda: &GlWeight, source: &[Letter], target: &[Letter]) -> Result<BimMap, Error> {
        let src = self.ladder(lambda, source);
        let tgt = self.ladder(lambda, target);
        let degree = combo.terms.first().map_or(0, |(_, w)| w.degree());
        let mut acc = BimMap::zero(src, tgt, degree);
        for (c, w) in &combo.terms {
            if &w.lambda != lambda || w.source != source || w.target() != target {
                return Err(Error::Mismatch(format!(
                    "term {} -> {} at {} in a combination {} -> {} at {}",
                    show_seq(&w.source),
                    show_seq(&w.target()),
                    w.lambda,
                    show_seq(source),
                    show_seq(target),
                    lambda
                )));
            }
            if w.degree() != degree {
                return Err(Error::Mismatch(format!("terms of degrees {} and {degree}", w.degree())));
            }
            let f = self.eval(w);
            acc = acc.add_scaled(&f, c);
        }
        Ok(acc)
    }
}

/// Evaluate one word.
pub fn eval_diagram(word: &DiagramWord, d: usize) -> BimMap {
    Evaluator::new(d).eval(word)
}

/// A seeded random rational in `[-9, 9]` with denominator up to 4.
fn rand_q(rng: &mut ChaCha8Rng) -> Q {
    let num = (rng.next_u32() % 19) as i64 - 9;
    let den = (rng.next_u32() % 4) as i64 + 1;
    Q::new(num.into(), den.into())
}

/// A random element of a ladder ring: each basis monomial times a random
/// affine polynomial in the bottom variables.
pub fn random_element(lad: &Ladder, rng: &mut ChaCha8Rng) -> MPoly {
    let mut out = MPoly::zero();
    for m in lad.basis() {
        let mut c = MPoly::constant(rand_q(rng));
        for v in 0..lad.d {
            c = c.add(&MPoly::term(rand_q(rng), Monomial::var(Var(v as u32), 1)));
        }
        out = out.add(&c.mul_monomial(&m, &Q::one()));
    }
    out
}

/// Random rational point for all variables of a ladder.
pub fn random_point(lad: &Ladder, rng: &mut ChaCha8Rng) -> BTreeMap<Var, Q> {
    (0..(lad.d + lad.len())).map(|v| (Var(v as u32), rand_q(rng))).collect()
}

/// Exact equality on the basis, plus a seeded panel of point evaluations of
/// the images of random elements.
pub fn maps_equal(f: &BimMap, g: &BimMap, panel: usize, seed: u64) -> Result<bool, Error> {
    if f.source.seq != g.source.seq || f.target.seq != g.target.seq || f.source.lambda != g.source.lambda {
        return Err(Error::Mismatch("maps between different ladders".into()));
    }
    if f.images != g.images {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..panel {
        let x = random_element(&f.source, &mut rng);
        let pt = random_point(&f.target, &mut rng);
        if f.apply(&x).eval(&pt) != g.apply(&x).eval(&pt) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Two sides of a relation between `source` and `target` at `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lambda: GlWeight,
    pub source: Vec<Letter>,
    pub target: Vec<Letter>,
    pub lhs: Combo,
    pub rhs: Combo,
}

/// Decide a relation: equality on the basis, a point panel, and random
/// elements pushed through every term slice by slice against the
/// basis-linear images.
pub fn relation_holds(ev: &mut Evaluator, rel: &Relation, seed: u64) -> Result<bool, Error> {
    let f = ev.eval_combo(&rel.lhs, &rel.lambda, &rel.source, &rel.target)?;
    let g = ev.eval_combo(&rel.rhs, &rel.lambda, &rel.source, &rel.target)?;
    if !f.is_zero() && !g.is_zero() && f.degree != g.degree {
        return Err(Error::Mismatch(format!("sides of degrees {} and {}", f.degree, g.degree)));
    }
    if !maps_equal(&f, &g, 2, seed)? {
        return Ok(false);
    }
    if !f.source.live {
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let x = random_element(&f.source, &mut rng);
    let pt = random_point(&f.target, &mut rng);
    for (combo, map) in [(&rel.lhs, &f), (&rel.rhs, &g)] {
        let mut direct = MPoly::zero();
        for (c, w) in &combo.terms {
            if w.is_zero_by_label(ev.d as i64) {
                continue;
            }
            direct = direct.add(&ev.push_element(w, &x).scale(c));
        }
        if direct.eval(&pt) != map.apply(&x).eval(&pt) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::GenSlice;

    fn lam(v: &[i64]) -> GlWeight {
        GlWeight::new(v)
    }

    #[test]
    fn ladder_ring_sizes() {
        let lad = Ladder::new(2, &lam(&[1, 1]), &[Letter::down(1), Letter::up(1)]);
        assert!(lad.live);
        assert_eq!(lad.basis().len(), 2);
        let lad = Ladder::new(2, &lam(&[1, 1]), &[Letter::up(1), Letter::down(1)]);
        assert_eq!(lad.basis().len(), 2);
        let lad = Ladder::new(2, &lam(&[1, 1]), &[Letter::up(1), Letter::up(1)]);
        assert!(!lad.live);
    }

    #[test]
    fn zigzag_is_identity() {
        let l = lam(&[1, 1]);
        let w = DiagramWord::single(l.clone(), &[Letter::up(1)], Atom::CupEF(1), &[])
            .then(GenSlice::new(vec![Atom::CapFE(1), Atom::IdUp(1)]))
            .unwrap();
        let _ = w;
    }
}
