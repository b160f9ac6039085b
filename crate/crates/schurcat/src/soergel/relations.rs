//! Relations of the Soergel calculus, checked through `F_Bim ∘ Σ` and, as a
//! guard on each relation's transcription, on Bott–Samelson bimodules.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use super::ek::{normal_form_sum, phi_sum, random_tensor, Ek, Tensor};
use super::{letters, sigma, unit_weight, SAtom, SoergelWord};
use crate::bimrep::{relation_holds, Evaluator, Relation};
use crate::diagrams::{Atom, Combo, DiagramWord, GenSlice};
use crate::polysym::MPoly;
use crate::report::{CaseResult, Report};
use crate::scalars::Q;
use crate::Error;

/// A linear combination of Soergel words with a common boundary.
pub type SCombo = Vec<(Q, SoergelWord)>;

/// Both sides of a Soergel relation.
#[derive(Clone, Debug)]
pub struct SRelation {
    pub id: String,
    pub colors: String,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub lhs: SCombo,
    pub rhs: SCombo,
}

pub fn at(a: SAtom) -> SoergelWord {
    SoergelWord::atom(a)
}

pub fn line(i: usize) -> SoergelWord {
    at(SAtom::Line(i))
}

pub fn id(seq: &[usize]) -> SoergelWord {
    SoergelWord::identity(seq)
}

/// Horizontal juxtaposition, left to right.
pub fn h(ws: &[SoergelWord]) -> SoergelWord {
    ws.iter().fold(id(&[]), |acc, w| acc.tensor(w))
}

/// Vertical stacking, bottom first.
pub fn v(ws: &[SoergelWord]) -> SoergelWord {
    let mut it = ws.iter();
    let first = it.next().cloned().unwrap_or_else(|| id(&[]));
    it.fold(first, |acc, w| w.compose_v(&acc).expect("relation pieces have matching boundaries"))
}

pub fn cap(i: usize) -> SoergelWord {
    v(&[at(SAtom::Merge(i)), at(SAtom::EndDot(i))])
}

pub fn cup(i: usize) -> SoergelWord {
    v(&[at(SAtom::StartDot(i)), at(SAtom::Split(i))])
}

pub fn barbell(i: usize) -> SoergelWord {
    v(&[at(SAtom::StartDot(i)), at(SAtom::EndDot(i))])
}

/// Six-valent vertex `(a,b,a) → (b,a,b)` for adjacent `a, b`.
pub fn six(a: usize, b: usize) -> SoergelWord {
    if a == b + 1 {
        at(SAtom::SixVertexUp(b))
    } else {
        at(SAtom::SixVertexDown(a))
    }
}

fn four(a: usize, b: usize) -> SoergelWord {
    at(SAtom::FourVertex(a, b))
}

fn sd(i: usize) -> SoergelWord {
    at(SAtom::StartDot(i))
}

fn ed(i: usize) -> SoergelWord {
    at(SAtom::EndDot(i))
}

/// Pass a line of colour `k` from the left of `seq` to its right.
fn pass_right(k: usize, seq: &[usize]) -> SoergelWord {
    let mut slices = Vec::new();
    for p in 0..seq.len() {
        let mut cur: Vec<usize> = seq[..p].to_vec();
        cur.push(k);
        cur.extend_from_slice(&seq[p..]);
        let mut row = vec![];
        row.push(id(&seq[..p]));
        row.push(four(k, seq[p]));
        row.push(id(&seq[p + 1..]));
        slices.push(h(&row));
    }
    if slices.is_empty() {
        line(k)
    } else {
        v(&slices)
    }
}

/// A sequence of local moves on `start`: `(p, true)` is a six-valent vertex
/// on positions `p..p+3`, `(p, false)` a four-valent vertex on `p, p+1`.
fn move_path(start: &[usize], moves: &[(usize, bool)]) -> SoergelWord {
    let mut cur = start.to_vec();
    let mut slices = Vec::new();
    for &(p, braid) in moves {
        let w = if braid { 3 } else { 2 };
        let g = if braid { six(cur[p], cur[p + 1]) } else { four(cur[p], cur[p + 1]) };
        let next = g.target();
        slices.push(h(&[id(&cur[..p]), g, id(&cur[p + w..])]));
        cur.splice(p..p + w, next);
    }
    v(&slices)
}

/// Move the first boundary point of `g: ∅ → (a, w')` to the end.
fn rotate(g: &SoergelWord) -> SoergelWord {
    let t = g.target();
    let a = t[0];
    v(&[cup(a), h(&[line(a), g.clone(), line(a)]), h(&[cap(a), id(&t[1..]), line(a)])])
}

fn one(w: SoergelWord) -> SCombo {
    vec![(Q::one(), w)]
}

fn q(k: i64) -> Q {
    Q::from_integer(k.into())
}

fn rel(id: &str, colors: String, lhs: SCombo, rhs: SCombo) -> SRelation {
    let w = &lhs.first().or(rhs.first()).expect("a relation has a term").1;
    SRelation { id: id.into(), colors, source: w.source.clone(), target: w.target(), lhs, rhs }
}

/// Colours available to `Σ_{n,d}`.
pub fn top_color(n: usize, d: usize) -> usize {
    if d < n {
        d - 1
    } else {
        n - 1
    }
}

/// All box-free relation instances with colours in `1..=top`.
pub fn relations(top: usize) -> Vec<SRelation> {
    let cols: Vec<usize> = (1..=top).collect();
    let adjacent: Vec<(usize, usize)> = cols
        .iter()
        .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
        .filter(|(i, j)| i.abs_diff(*j) == 1)
        .collect();
    let distant: Vec<(usize, usize)> = cols
        .iter()
        .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
        .filter(|(i, j)| i.abs_diff(*j) > 1)
        .collect();
    let mut out = Vec::new();
    for &i in &cols {
        let c = format!("i={i}");
        let l = line(i);
        out.push(rel("adj", c.clone(), one(v(&[h(&[l.clone(), cup(i)]), h(&[cap(i), l.clone()])])), one(l.clone())));
        out.push(rel("adj_mirror", c.clone(), one(v(&[h(&[cup(i), l.clone()]), h(&[l.clone(), cap(i)])])), one(l.clone())));
        out.push(rel("curldot", c.clone(), one(v(&[h(&[sd(i), l.clone()]), cap(i)])), one(ed(i))));
        out.push(rel("curldot_mirror", c.clone(), one(v(&[h(&[l.clone(), sd(i)]), cap(i)])), one(ed(i))));
        let (m, s) = (at(SAtom::Merge(i)), at(SAtom::Split(i)));
        out.push(rel("v3rot", c.clone(), one(v(&[h(&[l.clone(), s.clone()]), h(&[cap(i), l.clone()])])), one(m.clone())));
        out.push(rel("v3rot_mirror", c.clone(), one(v(&[h(&[s.clone(), l.clone()]), h(&[l.clone(), cap(i)])])), one(m.clone())));
        let ms = v(&[m.clone(), s.clone()]);
        out.push(rel("dumbrot", c.clone(), one(ms.clone()), one(v(&[h(&[s.clone(), l.clone()]), h(&[l.clone(), m.clone()])]))));
        out.push(rel("dumbrot_mirror", c.clone(), one(ms), one(v(&[h(&[l.clone(), s.clone()]), h(&[m.clone(), l.clone()])]))));
        out.push(rel("lollipop", c.clone(), one(v(&[s.clone(), cap(i)])), Vec::new()));
        out.push(rel("lollipop_mirror", c.clone(), one(v(&[cup(i), m.clone()])), Vec::new()));
        out.push(rel(
            "deltam",
            c.clone(),
            vec![(Q::one(), h(&[barbell(i), l.clone()])), (Q::one(), h(&[l.clone(), barbell(i)]))],
            vec![(q(2), v(&[ed(i), sd(i)]))],
        ));
    }
    for &(i, j) in &adjacent {
        let c = format!("i={i},j={j}");
        let (li, lj) = (line(i), line(j));
        out.push(rel(
            "v6rot",
            c.clone(),
            one(six(i, j)),
            one(v(&[h(&[cup(j), id(&[i, j, i])]), h(&[lj.clone(), six(j, i), li.clone()]), h(&[id(&[j, i, j]), cap(i)])])),
        ));
        out.push(rel(
            "v6rot_mirror",
            c.clone(),
            one(six(i, j)),
            one(v(&[h(&[id(&[i, j, i]), cup(j)]), h(&[li.clone(), six(j, i), lj.clone()]), h(&[cap(i), id(&[j, i, j])])])),
        ));
        out.push(rel(
            "dot6v",
            c.clone(),
            one(v(&[six(i, j), h(&[lj.clone(), ed(i), lj.clone()])])),
            vec![
                (Q::one(), v(&[h(&[ed(i), lj.clone(), ed(i)]), at(SAtom::Split(j))])),
                (Q::one(), v(&[h(&[li.clone(), ed(j), li.clone()]), cap(i), cup(j)])),
            ],
        ));
        let broken = v(&[h(&[li.clone(), ed(j), li.clone()]), at(SAtom::Merge(i)), at(SAtom::Split(i)), h(&[li.clone(), sd(j), li.clone()])]);
        out.push(rel(
            "reid3",
            c.clone(),
            one(id(&[i, j, i])),
            vec![(Q::one(), v(&[six(i, j), six(j, i)])), (-Q::one(), broken)],
        ));
        let half = Q::new(1.into(), 2.into());
        out.push(rel(
            "slidenext",
            c.clone(),
            vec![(Q::one(), h(&[barbell(j), li.clone()])), (-Q::one(), h(&[li.clone(), barbell(j)]))],
            vec![(half.clone(), h(&[li.clone(), barbell(i)])), (-half, h(&[barbell(i), li.clone()]))],
        ));
        let lp = v(&[
            six(i, j),
            h(&[at(SAtom::Split(j)), li.clone(), at(SAtom::Split(j))]),
            h(&[lj.clone(), six(j, i), lj.clone()]),
        ]);
        let mut nest = id(&[]);
        for &c in &[i, j, i] {
            nest = v(&[cup(c), h(&[line(c), nest, line(c)])]);
        }
        let g = v(&[nest, h(&[id(&[i, j, i]), lp])]);
        out.push(rel("dumbsq", c.clone(), one(rotate(&rotate(&g))), one(g)));
        for &k in &cols {
            if k.abs_diff(i) > 1 && k.abs_diff(j) > 1 {
                let c3 = format!("i={i},j={j},k={k}");
                out.push(rel(
                    "slide6v",
                    c3,
                    one(v(&[h(&[line(k), six(i, j)]), pass_right(k, &[j, i, j])])),
                    one(v(&[pass_right(k, &[i, j, i]), h(&[six(i, j), line(k)])])),
                ));
            }
        }
    }
    for &(i, j) in &distant {
        let c = format!("i={i},j={j}");
        let (li, lj) = (line(i), line(j));
        out.push(rel("reid2dist", c.clone(), one(v(&[four(i, j), four(j, i)])), one(id(&[i, j]))));
        out.push(rel("slidedotdist", c.clone(), one(v(&[h(&[sd(i), lj.clone()]), four(i, j)])), one(h(&[lj.clone(), sd(i)]))));
        out.push(rel(
            "slide3v",
            c.clone(),
            one(v(&[h(&[at(SAtom::Split(i)), lj.clone()]), h(&[li.clone(), four(i, j)]), h(&[four(i, j), li.clone()])])),
            one(v(&[four(i, j), h(&[lj.clone(), at(SAtom::Split(i))])])),
        ));
        out.push(rel(
            "v4rot",
            c.clone(),
            one(four(i, j)),
            one(v(&[h(&[li.clone(), lj.clone(), cup(i)]), h(&[li.clone(), four(j, i), li.clone()]), h(&[cap(i), lj.clone(), li.clone()])])),
        ));
        out.push(rel(
            "v4rot_mirror",
            c.clone(),
            one(four(i, j)),
            one(v(&[h(&[cup(j), li.clone(), lj.clone()]), h(&[lj.clone(), four(j, i), lj.clone()]), h(&[lj.clone(), li.clone(), cap(j)])])),
        ));
        for &k in &cols {
            if k.abs_diff(i) > 1 && k.abs_diff(j) > 1 {
                let c3 = format!("i={i},j={j},k={k}");
                out.push(rel(
                    "slide4v",
                    c3,
                    one(v(&[h(&[line(k), four(i, j)]), pass_right(k, &[j, i])])),
                    one(v(&[pass_right(k, &[i, j]), h(&[four(i, j), line(k)])])),
                ));
            }
        }
    }
    for i in 1..top.saturating_sub(1) {
        let (j, k) = (i + 1, i + 2);
        let c = format!("i={i},j={j},k={k}");
        let start = [j, i, k, j, i, k];
        let path_a = move_path(&start, &[(4, false), (2, true), (0, true), (2, false), (3, true), (1, true), (0, false)]);
        let path_b = move_path(&start, &[(1, false), (2, true), (0, true), (2, false), (3, true), (1, true), (3, false)]);
        out.push(rel("dumbdumbsquare", c, one(path_a), one(path_b)));
    }
    out
}

fn boxes(i: usize) -> SoergelWord {
    at(SAtom::Box(i))
}

/// Box relations of `SC′₁(d)`, colours in `1..d`.
pub fn box_relations(d: usize) -> Vec<SRelation> {
    let mut out = Vec::new();
    for i in 1..d {
        let c = format!("i={i}");
        let l = line(i);
        out.push(rel("box1", c.clone(), one(barbell(i)), vec![(Q::one(), boxes(i)), (-Q::one(), boxes(i + 1))]));
        out.push(rel(
            "box2",
            c.clone(),
            vec![(Q::one(), h(&[boxes(i), l.clone()])), (Q::one(), h(&[boxes(i + 1), l.clone()]))],
            vec![(Q::one(), h(&[l.clone(), boxes(i)])), (Q::one(), h(&[l.clone(), boxes(i + 1)]))],
        ));
        let prod = v(&[boxes(i), boxes(i + 1)]);
        out.push(rel("box3", c.clone(), one(h(&[prod.clone(), l.clone()])), one(h(&[l.clone(), prod]))));
        for j in (1..=d).filter(|&j| j != i && j != i + 1) {
            out.push(rel("box4", format!("i={i},j={j}"), one(h(&[boxes(j), l.clone()])), one(h(&[l.clone(), boxes(j)]))));
        }
    }
    out
}

fn sigma_combo(c: &SCombo, n: usize, d: usize) -> Result<Combo, Error> {
    let mut out = Combo::new();
    for (k, w) in c {
        out = out.extend(sigma(w, n, d)?, k);
    }
    Ok(out)
}

/// `F_Bim ∘ Σ` of both sides agree.
pub fn holds_via_sigma(ev: &mut Evaluator, r: &SRelation, n: usize, d: usize, seed: u64) -> Result<bool, Error> {
    let relation = Relation {
        lambda: unit_weight(n, d),
        source: letters(&r.source),
        target: letters(&r.target),
        lhs: sigma_combo(&r.lhs, n, d)?,
        rhs: sigma_combo(&r.rhs, n, d)?,
    };
    relation_holds(ev, &relation, seed)
}

/// Both sides agree on Bott–Samelson bimodules in `d` variables. The
/// bimodule is generated by `1⊗…⊗1`, so that input decides; one random
/// tensor of degree one is added as a tripwire.
pub fn holds_on_bimodules(ek: &Ek, r: &SRelation, d: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = r.source.len();
    let inputs = [vec![MPoly::one(); k + 1], random_tensor(k, d, 1, &mut rng)];
    inputs.iter().all(|t| {
        let side = |c: &SCombo| -> Vec<Tensor> {
            c.iter()
                .flat_map(|(q, w)| {
                    ek.apply_word(w, core::slice::from_ref(t)).into_iter().map(move |mut u| {
                        u[0] = u[0].scale(q);
                        u
                    })
                })
                .collect()
        };
        normal_form_sum(&side(&r.lhs), &r.target) == normal_form_sum(&side(&r.rhs), &r.target)
    })
}

/// Generators whose oracle cases run at `(n, d)`.
pub fn generators(n: usize, d: usize) -> Vec<SAtom> {
    let top = top_color(n, d);
    let mut out = Vec::new();
    for i in 1..=top {
        out.extend([SAtom::Line(i), SAtom::StartDot(i), SAtom::EndDot(i), SAtom::Merge(i), SAtom::Split(i)]);
        if i < top {
            out.extend([SAtom::SixVertexUp(i), SAtom::SixVertexDown(i)]);
        }
        for j in 1..=top {
            if i.abs_diff(j) > 1 {
                out.push(SAtom::FourVertex(i, j));
            }
        }
    }
    if d < n {
        out.extend((1..=d).map(SAtom::Box));
    }
    out
}

/// `F_Bim(Σ(w)) ∘ Φ = Φ ∘ F_EK(w)` on random tensors.
pub fn commutes(ev: &mut Evaluator, ek: &Ek, w: &SoergelWord, n: usize, d: usize, seed: u64) -> Result<bool, Error> {
    let lambda = unit_weight(n, d);
    let (src, tgt) = (letters(&w.source), letters(&w.target()));
    let f = ev.eval_combo(&sigma(w, n, d)?, &lambda, &src, &tgt)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..3 {
        let t = random_tensor(w.source.len(), d, 2, &mut rng);
        let direct = phi_sum(&f.target, &ek.apply_word(w, &[t.clone()]));
        let via = f.apply(&phi_sum(&f.source, &[t]));
        if direct != via {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Diagram-side images of a barbell next to a line.
pub fn edge_dot_relations(n: usize, d: usize) -> Result<Vec<(String, String, Relation)>, Error> {
    let lambda = unit_weight(n, d);
    let mut out = Vec::new();
    for i in 1..=top_color(n, d) {
        let src = letters(&[i]);
        let bubble = DiagramWord::identity(lambda.clone(), src.clone()).then(GenSlice::new(vec![
            Atom::IdDown(i),
            Atom::Bubble { clockwise: false, color: i, dots: -2 },
            Atom::IdUp(i),
        ]))?;
        for (name, left) in [("dots-edge", true), ("edge-dots", false)] {
            let word = if left { h(&[barbell(i), line(i)]) } else { h(&[line(i), barbell(i)]) };
            let dot = if left {
                vec![Atom::DotDown(i, 1), Atom::IdUp(i)]
            } else {
                vec![Atom::IdDown(i), Atom::DotUp(i, 1)]
            };
            let dotted = DiagramWord::identity(lambda.clone(), src.clone()).then(GenSlice::new(dot))?;
            let rhs = Combo::new().add_int(2, dotted).add_int(-1, bubble.clone());
            let relation = Relation { lambda: lambda.clone(), source: src.clone(), target: src.clone(), lhs: sigma(&word, n, d)?, rhs };
            out.push((name.into(), format!("i={i}"), relation));
        }
    }
    Ok(out)
}

fn params(n: usize, d: usize, colors: &str) -> String {
    format!("n={n},d={d},{colors}")
}

/// One unit of work of the Soergel suite.
#[derive(Clone, Debug)]
pub enum SoergelCase {
    /// A Soergel relation, checked through `F_Bim ∘ Σ` and on bimodules.
    Relation(SRelation),
    /// A diagram-side identity for `Σ` of a barbell next to a line.
    EdgeDots(String, String, Relation),
    /// The commuting square and degree preservation for one generator.
    Generator(SAtom),
}

/// Every case of the suite at `(n, d)`.
pub fn soergel_cases(n: usize, d: usize) -> Result<Vec<SoergelCase>, Error> {
    if n < 2 || d == 0 || d > n {
        return Err(Error::Domain(format!("Soergel suite needs n ≥ 2 and 1 ≤ d ≤ n, got n={n} d={d}")));
    }
    let mut rels = relations(top_color(n, d));
    if d < n {
        rels.extend(box_relations(d));
    }
    let mut out: Vec<SoergelCase> = rels.into_iter().map(SoergelCase::Relation).collect();
    out.extend(edge_dot_relations(n, d)?.into_iter().map(|(a, b, r)| SoergelCase::EdgeDots(a, b, r)));
    out.extend(generators(n, d).into_iter().map(SoergelCase::Generator));
    Ok(out)
}

/// Check one case; errors are reported as failures.
pub fn check_soergel_case(ev: &mut Evaluator, ek: &Ek, case: &SoergelCase, n: usize, d: usize, seed: u64) -> Vec<CaseResult> {
    let verdict = |id: &str, p: String, r: Result<bool, Error>| match r {
        Ok(ok) => CaseResult::check(id, p, ok),
        Err(e) => CaseResult::new(id, p, false, Some(format!("{e}"))),
    };
    match case {
        SoergelCase::Relation(r) => {
            let p = params(n, d, &r.colors);
            vec![
                verdict(&r.id, p.clone(), holds_via_sigma(ev, r, n, d, seed)),
                CaseResult::check(&format!("bimodule:{}", r.id), p, holds_on_bimodules(ek, r, d, seed)),
            ]
        }
        SoergelCase::EdgeDots(name, colors, relation) => {
            vec![verdict(name, params(n, d, colors), relation_holds(ev, relation, seed))]
        }
        SoergelCase::Generator(g) => {
            let p = params(n, d, &format!("{g}"));
            let alone = at(*g);
            let mut out = vec![verdict("commute", p.clone(), commutes(ev, ek, &alone, n, d, seed))];
            if top_color(n, d) >= 1 {
                let pad = h(&[alone.clone(), line(1)]);
                out.push(verdict("commute_padded", p.clone(), commutes(ev, ek, &pad, n, d, seed)));
            }
            let graded = sigma(&alone, n, d)
                .map(|sig| !sig.terms.is_empty() && sig.terms.iter().all(|(_, w)| w.degree() == g.degree()));
            out.push(verdict("grading", p, graded));
            out
        }
    }
}

/// All Soergel checks at `(n, d)`: relations through `F_Bim ∘ Σ` and on
/// bimodules, the commuting square for every generator alone and next to a
/// line, and degree preservation.
pub fn soergel_relation_suite(n: usize, d: usize, seed: u64) -> Result<Report, Error> {
    let ek = Ek::new()?;
    let mut ev = Evaluator::new(d);
    let cases = soergel_cases(n, d)?.iter().flat_map(|c| check_soergel_case(&mut ev, &ek, c, n, d, seed)).collect();
    Ok(Report::new(&format!("soergel n={n} d={d}"), cases))
}
