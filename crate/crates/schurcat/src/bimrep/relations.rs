//! Defining and derived relations of the diagrammatic category, instantiated
//! at every weight and colour tuple and checked through the bimodule
//! evaluation.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{relation_holds, Evaluator, Relation};
use crate::diagrams::{Atom, Combo, DiagramWord, GenSlice, Letter};
use crate::report::{CaseResult, Report};
use crate::weights::{enumerate_lambda, root, GlWeight};
use crate::Error;
use Atom::*;

/// Relation families, in the order they are reported.
pub const FAMILIES: &[&str] = &[
    "biadjoint",
    "cyclic_dot",
    "cyclic_cross",
    "sideways",
    "positivity",
    "bubble_deg0",
    "bubble_closed",
    "curls",
    "EF",
    "FE",
    "infinite_grass",
    "nil",
    "downup",
    "r2",
    "dot_slide",
    "r3_easy",
    "r3_hard",
    "bubble_slide",
    "bubble_slide_adjacent",
    "other_r3",
    "r3_extra",
    "twisted_bubble",
];

/// Largest number of extra dots used where a relation carries a free dot count.
const MAX_DOTS: i64 = 2;

/// One instance of a relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCase {
    pub relation_id: String,
    pub parameters: String,
    pub relation: Relation,
}

fn up(i: usize) -> Letter {
    Letter::up(i)
}

fn down(i: usize) -> Letter {
    Letter::down(i)
}

fn du(i: usize, r: i64) -> Atom {
    if r == 0 {
        IdUp(i)
    } else {
        DotUp(i, r as u32)
    }
}

fn dd(i: usize, r: i64) -> Atom {
    if r == 0 {
        IdDown(i)
    } else {
        DotDown(i, r as u32)
    }
}

fn cw(i: usize, dots: i64) -> Atom {
    Bubble { clockwise: true, color: i, dots }
}

fn ccw(i: usize, dots: i64) -> Atom {
    Bubble { clockwise: false, color: i, dots }
}

fn word(l: &GlWeight, slices: &[&[Atom]]) -> Result<DiagramWord, Error> {
    DiagramWord::from_slices(l.clone(), slices.iter().map(|s| GenSlice::new(s.to_vec())).collect())
}

fn shifted(l: &GlWeight, i: usize, sign: i64) -> GlWeight {
    let a = root(l.n(), i);
    GlWeight(l.0.iter().zip(a).map(|(x, y)| x + sign * y).collect())
}

/// The closed real bubble drawn with a cup, dotted strand and cap.
pub fn literal_bubble(l: &GlWeight, clockwise: bool, i: usize, r: u32) -> Result<DiagramWord, Error> {
    if clockwise {
        word(l, &[&[CupFE(i)], &[DotUp(i, r), IdDown(i)], &[CapFE(i)]])
    } else {
        word(l, &[&[CupEF(i)], &[IdDown(i), DotUp(i, r)], &[CapEF(i)]])
    }
}

/// A bubble as a word: literal when real, the closed-form atom when fake.
fn bubble_word(l: &GlWeight, clockwise: bool, i: usize, dots: i64) -> Result<DiagramWord, Error> {
    if dots >= 0 {
        literal_bubble(l, clockwise, i, dots as u32)
    } else {
        word(l, &[&[Bubble { clockwise, color: i, dots }]])
    }
}

fn sum_of(terms: Vec<(i64, DiagramWord)>) -> Combo {
    terms.into_iter().fold(Combo::new(), |c, (k, w)| c.add_int(k, w))
}

/// All compositions of `total` into `parts` non-negative parts.
fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    if total < 0 {
        return Vec::new();
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

struct Builder {
    family: &'static str,
    cases: Vec<RelationCase>,
}

impl Builder {
    fn push(&mut self, tag: &str, l: &GlWeight, params: String, lhs: Combo, rhs: Combo) -> Result<(), Error> {
        let any = lhs.terms.first().or(rhs.terms.first()).map(|(_, w)| w.clone());
        let Some(w) = any else {
            return Err(Error::Domain(format!("empty relation {tag}")));
        };
        let relation = Relation { lambda: l.clone(), source: w.source.clone(), target: w.target(), lhs, rhs };
        let relation_id = if tag.is_empty() { self.family.into() } else { format!("{}.{tag}", self.family) };
        self.cases.push(RelationCase { relation_id, parameters: format!("lambda={l};{params}"), relation });
        Ok(())
    }

    fn eq(&mut self, tag: &str, l: &GlWeight, params: String, lhs: DiagramWord, rhs: Combo) -> Result<(), Error> {
        self.push(tag, l, params, Combo::of(lhs), rhs)
    }
}

/// All instances of one family at every weight of `Λ(n,d)`.
pub fn family_instances(n: usize, d: i64, family: &str) -> Result<Vec<RelationCase>, Error> {
    let Some(&family) = FAMILIES.iter().find(|f| **f == family) else {
        return Err(Error::Domain(format!("unknown relation family {family}")));
    };
    let mut b = Builder { family, cases: Vec::new() };
    let colors: Vec<usize> = (1..n).collect();
    for l in enumerate_lambda(n, d) {
        match family {
            "twisted_bubble" => {
                if n == 3 && l.0 == [0, 1, 0] {
                    let red = literal_bubble(&l, true, 2, 1)?;
                    let blue = word(&l, &[&[cw(1, -1)]])?;
                    b.eq("", &l, "red=2;blue=1".into(), red, Combo::of(blue))?;
                }
            }
            _ => {
                for &i in &colors {
                    single_color(&mut b, &l, i)?;
                    for &j in &colors {
                        two_colors(&mut b, &l, i, j)?;
                        for &k in &colors {
                            three_colors(&mut b, &l, i, j, k)?;
                        }
                    }
                }
            }
        }
    }
    Ok(b.cases)
}

/// Instances of the selected families (all when `family` is `None`).
pub fn instances(n: usize, d: i64, family: Option<&str>) -> Result<Vec<RelationCase>, Error> {
    match family {
        Some(f) => family_instances(n, d, f),
        None => {
            let mut out = Vec::new();
            for f in FAMILIES {
                out.extend(family_instances(n, d, f)?);
            }
            Ok(out)
        }
    }
}

fn single_color(b: &mut Builder, l: &GlWeight, i: usize) -> Result<(), Error> {
    let bar = l.bar_at(i);
    let p = |extra: String| -> String {
        if extra.is_empty() {
            format!("i={i}")
        } else {
            format!("i={i};{extra}")
        }
    };
    match b.family {
        "biadjoint" => {
            let idu = DiagramWord::identity(l.clone(), vec![up(i)]);
            let idd = DiagramWord::identity(l.clone(), vec![down(i)]);
            let a = word(l, &[&[IdUp(i), CupEF(i)], &[CapFE(i), IdUp(i)]])?;
            let c = word(l, &[&[CupFE(i), IdUp(i)], &[IdUp(i), CapEF(i)]])?;
            let bb = word(l, &[&[IdDown(i), CupFE(i)], &[CapEF(i), IdDown(i)]])?;
            let dd_ = word(l, &[&[CupEF(i), IdDown(i)], &[IdDown(i), CapFE(i)]])?;
            b.eq("up_right", l, p(String::new()), a, Combo::of(idu.clone()))?;
            b.eq("up_left", l, p(String::new()), c, Combo::of(idu))?;
            b.eq("down_right", l, p(String::new()), bb, Combo::of(idd.clone()))?;
            b.eq("down_left", l, p(String::new()), dd_, Combo::of(idd))?;
        }
        "cyclic_dot" => {
            for r in 1..=MAX_DOTS {
                let dot = word(l, &[&[dd(i, r)]])?;
                let right = word(l, &[&[IdDown(i), CupFE(i)], &[IdDown(i), du(i, r), IdDown(i)], &[CapEF(i), IdDown(i)]])?;
                let left = word(l, &[&[CupEF(i), IdDown(i)], &[IdDown(i), du(i, r), IdDown(i)], &[IdDown(i), CapFE(i)]])?;
                b.eq("right", l, p(format!("r={r}")), right, Combo::of(dot.clone()))?;
                b.eq("left", l, p(format!("r={r}")), left, Combo::of(dot))?;
            }
        }
        "positivity" => {
            for r in 0..(bar - 1) {
                let w = literal_bubble(l, true, i, r as u32)?;
                b.push("cw", l, p(format!("r={r}")), Combo::of(w), Combo::new())?;
            }
            for r in 0..(-bar - 1) {
                let w = literal_bubble(l, false, i, r as u32)?;
                b.push("ccw", l, p(format!("r={r}")), Combo::of(w), Combo::new())?;
            }
        }
        "bubble_deg0" => {
            let one = DiagramWord::identity(l.clone(), Vec::new());
            let s = if l.at(i + 1) % 2 == 0 { 1 } else { -1 };
            b.eq("cw", l, p(String::new()), bubble_word(l, true, i, bar - 1)?, sum_of(vec![(s, one.clone())]))?;
            b.eq("ccw", l, p(String::new()), bubble_word(l, false, i, -bar - 1)?, sum_of(vec![(-s, one)]))?;
        }
        "bubble_closed" => {
            for r in 0..=4u32 {
                for clockwise in [true, false] {
                    let lit = literal_bubble(l, clockwise, i, r)?;
                    let sym = word(l, &[&[Bubble { clockwise, color: i, dots: r as i64 }]])?;
                    let tag = if clockwise { "cw" } else { "ccw" };
                    b.eq(tag, l, p(format!("r={r}")), lit, Combo::of(sym))?;
                }
            }
        }
        "curls" => {
            let right = word(l, &[&[IdUp(i), CupFE(i)], &[CrossUU(i, i), IdDown(i)], &[IdUp(i), CapFE(i)]])?;
            let mut rhs = Vec::new();
            for f in 0..=(-bar) {
                rhs.push((-1, word(l, &[&[du(i, -bar - f), cw(i, bar - 1 + f)]])?));
            }
            b.push("right", l, p(String::new()), Combo::of(right), sum_of(rhs))?;
            let left_region = shifted(l, i, 1);
            let lb = left_region.bar_at(i);
            let left = word(l, &[&[CupEF(i), IdUp(i)], &[IdDown(i), CrossUU(i, i)], &[CapEF(i), IdUp(i)]])?;
            let mut rhs = Vec::new();
            for g in 0..=lb {
                rhs.push((1, word(l, &[&[ccw(i, -lb - 1 + g), du(i, lb - g)]])?));
            }
            b.push("left", l, p(String::new()), Combo::of(left), sum_of(rhs))?;
        }
        "EF" => {
            let id = DiagramWord::identity(l.clone(), vec![up(i), down(i)]);
            let pair = word(l, &[&[CrossLR(i, i)], &[CrossRL(i, i)]])?;
            let mut rhs = vec![(1, pair.clone())];
            for f in 0..bar {
                for g in 0..=f {
                    rhs.push((
                        -1,
                        word(
                            l,
                            &[
                                &[du(i, f - g), IdDown(i)],
                                &[CapFE(i)],
                                &[ccw(i, -bar - 1 + g)],
                                &[CupFE(i)],
                                &[du(i, bar - 1 - f), IdDown(i)],
                            ],
                        )?,
                    ));
                }
            }
            b.push("", l, p(String::new()), Combo::of(id.clone()), sum_of(rhs.clone()))?;
            rhs[0].1 = pair.expanded();
            b.push("expanded", l, p(String::new()), Combo::of(id), sum_of(rhs))?;
        }
        "FE" => {
            let id = DiagramWord::identity(l.clone(), vec![down(i), up(i)]);
            let pair = word(l, &[&[CrossRL(i, i)], &[CrossLR(i, i)]])?;
            let mut rhs = vec![(1, pair.clone())];
            for f in 0..(-bar) {
                for g in 0..=f {
                    rhs.push((
                        -1,
                        word(
                            l,
                            &[
                                &[dd(i, f - g), IdUp(i)],
                                &[CapEF(i)],
                                &[cw(i, bar - 1 + g)],
                                &[CupEF(i)],
                                &[dd(i, -bar - 1 - f), IdUp(i)],
                            ],
                        )?,
                    ));
                }
            }
            b.push("", l, p(String::new()), Combo::of(id.clone()), sum_of(rhs.clone()))?;
            rhs[0].1 = pair.expanded();
            b.push("expanded", l, p(String::new()), Combo::of(id), sum_of(rhs))?;
        }
        "infinite_grass" => {
            let one = DiagramWord::identity(l.clone(), Vec::new());
            for k in 0..=3i64 {
                let mut lhs = Vec::new();
                for j in 0..=k {
                    let w = bubble_word(l, true, i, bar - 1 + j)?;
                    let c = bubble_word(l, false, i, -bar - 1 + k - j)?;
                    let mut prod = w;
                    for s in c.slices {
                        prod.push(s)?;
                    }
                    lhs.push((1, prod));
                }
                let rhs = if k == 0 { sum_of(vec![(-1, one.clone())]) } else { Combo::new() };
                b.push("", l, p(format!("k={k}")), sum_of(lhs), rhs)?;
            }
        }
        "nil" => {
            let xx = word(l, &[&[CrossUU(i, i)], &[CrossUU(i, i)]])?;
            b.push("square", l, p(String::new()), Combo::of(xx), Combo::new())?;
            let id = DiagramWord::identity(l.clone(), vec![up(i), up(i)]);
            let dot_first = word(l, &[&[DotUp(i, 1), IdUp(i)], &[CrossUU(i, i)]])?;
            let dot_after = word(l, &[&[CrossUU(i, i)], &[IdUp(i), DotUp(i, 1)]])?;
            b.eq("dot_left", l, p(String::new()), id.clone(), sum_of(vec![(1, dot_first), (-1, dot_after)]))?;
            let dot_after = word(l, &[&[CrossUU(i, i)], &[DotUp(i, 1), IdUp(i)]])?;
            let dot_first = word(l, &[&[IdUp(i), DotUp(i, 1)], &[CrossUU(i, i)]])?;
            b.eq("dot_right", l, p(String::new()), id, sum_of(vec![(1, dot_after), (-1, dot_first)]))?;
        }
        _ => {}
    }
    Ok(())
}

fn two_colors(b: &mut Builder, l: &GlWeight, i: usize, j: usize) -> Result<(), Error> {
    let p = |extra: String| -> String {
        if extra.is_empty() {
            format!("i={i};j={j}")
        } else {
            format!("i={i};j={j};{extra}")
        }
    };
    let adj = i.abs_diff(j) == 1;
    match b.family {
        "cyclic_cross" => {
            let prim = word(l, &[&[CrossDD(j, i)]])?;
            let twist = word(
                l,
                &[
                    &[IdDown(j), IdDown(i), CupFE(j)],
                    &[IdDown(j), IdDown(i), IdUp(j), CupFE(i), IdDown(j)],
                    &[IdDown(j), IdDown(i), CrossUU(j, i), IdDown(i), IdDown(j)],
                    &[IdDown(j), CapEF(i), IdUp(j), IdDown(i), IdDown(j)],
                    &[CapEF(j), IdDown(i), IdDown(j)],
                ],
            )?;
            b.eq("left_twist", l, p(String::new()), prim.clone(), Combo::of(prim.expanded()))?;
            b.eq("right_twist", l, p(String::new()), prim, Combo::of(twist))?;
        }
        "sideways" => {
            let lr = word(l, &[&[CrossLR(j, i)]])?;
            let lr_alt = word(
                l,
                &[&[IdUp(j), IdDown(i), CupEF(j)], &[IdUp(j), CrossDD(i, j), IdUp(j)], &[CapFE(j), IdDown(i), IdUp(j)]],
            )?;
            b.eq("lr_upward", l, p(String::new()), lr.clone(), Combo::of(lr.expanded()))?;
            b.eq("lr_downward", l, p(String::new()), lr, Combo::of(lr_alt))?;
            let rl = word(l, &[&[CrossRL(i, j)]])?;
            let rl_alt = word(
                l,
                &[&[CupFE(i), IdDown(j), IdUp(i)], &[IdUp(i), CrossDD(i, j), IdUp(i)], &[IdUp(i), IdDown(j), CapEF(i)]],
            )?;
            b.eq("rl_upward", l, p(String::new()), rl.clone(), Combo::of(rl.expanded()))?;
            b.eq("rl_downward", l, p(String::new()), rl, Combo::of(rl_alt))?;
        }
        "downup" if i != j => {
            let a = word(l, &[&[CrossLR(i, j)], &[CrossRL(i, j)]])?;
            b.eq("EF", l, p(String::new()), a, Combo::of(DiagramWord::identity(l.clone(), vec![up(i), down(j)])))?;
            let c = word(l, &[&[CrossRL(j, i)], &[CrossLR(j, i)]])?;
            b.eq("FE", l, p(String::new()), c, Combo::of(DiagramWord::identity(l.clone(), vec![down(i), up(j)])))?;
        }
        "r2" if i != j => {
            let xx = word(l, &[&[CrossUU(i, j)], &[CrossUU(j, i)]])?;
            let rhs = if adj {
                let s = i as i64 - j as i64;
                sum_of(vec![(s, word(l, &[&[DotUp(i, 1), IdUp(j)]])?), (-s, word(l, &[&[IdUp(i), DotUp(j, 1)]])?)])
            } else {
                Combo::of(DiagramWord::identity(l.clone(), vec![up(i), up(j)]))
            };
            b.push("", l, p(String::new()), Combo::of(xx), rhs)?;
        }
        "dot_slide" if i != j => {
            let a = word(l, &[&[CrossUU(i, j)], &[IdUp(j), DotUp(i, 1)]])?;
            let c = word(l, &[&[DotUp(i, 1), IdUp(j)], &[CrossUU(i, j)]])?;
            b.eq("first", l, p(String::new()), a, Combo::of(c))?;
            let a = word(l, &[&[CrossUU(i, j)], &[DotUp(j, 1), IdUp(i)]])?;
            let c = word(l, &[&[IdUp(i), DotUp(j, 1)], &[CrossUU(i, j)]])?;
            b.eq("second", l, p(String::new()), a, Combo::of(c))?;
        }
        "bubble_slide" if i == j || !adj => bubble_slide(b, l, j, i)?,
        "bubble_slide_adjacent" if adj => bubble_slide_adjacent(b, l, j, i)?,
        _ => {}
    }
    Ok(())
}

/// An upward strand of colour `s` passing a counterclockwise bubble of
/// colour `c` with `s = c` or `s` distant from `c`.
fn bubble_slide(b: &mut Builder, l: &GlWeight, s: usize, c: usize) -> Result<(), Error> {
    let bar = l.bar_at(c);
    let left = shifted(l, s, 1);
    let lbar = left.bar_at(c);
    for m in 0..=MAX_DOTS {
        let lhs = word(l, &[&[IdUp(s), ccw(c, -bar - 1 + m)]])?;
        let rhs = if s == c {
            let mut terms = Vec::new();
            for f in 0..=m {
                terms.push((f - m - 1, word(l, &[&[ccw(c, -lbar - 1 + f), du(s, m - f)]])?));
            }
            sum_of(terms)
        } else {
            Combo::of(word(l, &[&[ccw(c, -lbar - 1 + m), IdUp(s)]])?)
        };
        b.push("", l, format!("strand={s};bubble={c};m={m}"), Combo::of(lhs), rhs)?;
    }
    Ok(())
}

/// Bubble slides past an upward strand of adjacent colour `s`; the signs
/// flip when `s = c - 1`.
fn bubble_slide_adjacent(b: &mut Builder, l: &GlWeight, s: usize, c: usize) -> Result<(), Error> {
    let sg = if s == c + 1 { 1 } else { -1 };
    let bar = l.bar_at(c);
    let left = shifted(l, s, 1);
    let lbar = left.bar_at(c);
    let right = shifted(l, s, -1);
    let rbar = right.bar_at(c);
    let params = |m: i64| format!("strand={s};bubble={c};m={m}");
    for m in 0..=MAX_DOTS {
        let lhs = word(l, &[&[IdUp(s), ccw(c, -bar - 1 + m)]])?;
        let rhs = sum_of(vec![
            (sg, word(l, &[&[ccw(c, -lbar - 2 + m), DotUp(s, 1)]])?),
            (-sg, word(l, &[&[ccw(c, -lbar - 1 + m), IdUp(s)]])?),
        ]);
        b.push("ccw_right", l, params(m), Combo::of(lhs), rhs)?;

        // Here the weight left of the strand is `l`, the rightmost is `right`.
        let lhs = word(&right, &[&[ccw(c, -bar - 1 + m), IdUp(s)]])?;
        let mut terms = Vec::new();
        for f in 0..=m {
            terms.push((-sg, word(&right, &[&[du(s, f), ccw(c, -rbar - 1 + (m - f))]])?));
        }
        b.push("ccw_left", &right, params(m), Combo::of(lhs), sum_of(terms))?;

        let lhs = word(l, &[&[IdUp(s), cw(c, bar - 1 + m)]])?;
        let mut terms = Vec::new();
        for f in 0..=m {
            terms.push((-sg, word(l, &[&[cw(c, lbar - 1 + (m - f)), du(s, f)]])?));
        }
        b.push("cw_right", l, params(m), Combo::of(lhs), sum_of(terms))?;

        let lhs = word(&right, &[&[cw(c, bar - 1 + m), IdUp(s)]])?;
        let rhs = sum_of(vec![
            (sg, word(&right, &[&[DotUp(s, 1), cw(c, rbar - 2 + m)]])?),
            (-sg, word(&right, &[&[IdUp(s), cw(c, rbar - 1 + m)]])?),
        ]);
        b.push("cw_left", &right, params(m), Combo::of(lhs), rhs)?;
    }
    Ok(())
}

fn three_colors(b: &mut Builder, l: &GlWeight, i: usize, j: usize, k: usize) -> Result<(), Error> {
    let params = format!("i={i};j={j};k={k}");
    let adj = i.abs_diff(j) == 1;
    match b.family {
        "r3_easy" if !(i == k && adj) => {
            let lhs = word(l, &[&[CrossUU(i, j), IdUp(k)], &[IdUp(j), CrossUU(i, k)], &[CrossUU(j, k), IdUp(i)]])?;
            let rhs = word(l, &[&[IdUp(i), CrossUU(j, k)], &[CrossUU(i, k), IdUp(j)], &[IdUp(k), CrossUU(i, j)]])?;
            b.eq("", l, params, lhs, Combo::of(rhs))?;
        }
        "r3_hard" if i == k && adj => {
            let a = word(l, &[&[CrossUU(i, j), IdUp(i)], &[IdUp(j), CrossUU(i, i)], &[CrossUU(j, i), IdUp(i)]])?;
            let c = word(l, &[&[IdUp(i), CrossUU(j, i)], &[CrossUU(i, i), IdUp(j)], &[IdUp(i), CrossUU(i, j)]])?;
            let id = DiagramWord::identity(l.clone(), vec![up(i), up(j), up(i)]);
            let s = i as i64 - j as i64;
            b.push("", l, params, sum_of(vec![(1, a), (-1, c)]), sum_of(vec![(s, id)]))?;
        }
        "other_r3" if !(i == j && j == k) => {
            let (lhs, rhs) = other_r3_sides(l, i, j, k)?;
            b.eq("", l, params, lhs, Combo::of(rhs))?;
        }
        "r3_extra" if i == j && j == k => {
            let (lhs, rhs) = other_r3_sides(l, i, i, i)?;
            let bar = l.bar_at(i);
            let mut terms = Vec::new();
            for f in compositions(bar, 4) {
                let w = word(
                    l,
                    &[
                        &[IdUp(i), dd(i, f[2]), du(i, f[1])],
                        &[CapFE(i), IdUp(i)],
                        &[ccw(i, -bar - 3 + f[3]), IdUp(i)],
                        &[CupFE(i), IdUp(i)],
                        &[IdUp(i), dd(i, f[0]), IdUp(i)],
                    ],
                )?;
                terms.push((1, w));
            }
            for g in compositions(-bar - 2, 4) {
                let w = word(
                    l,
                    &[
                        &[du(i, g[1]), dd(i, g[2]), IdUp(i)],
                        &[IdUp(i), CapEF(i)],
                        &[IdUp(i), cw(i, bar - 1 + g[3])],
                        &[IdUp(i), CupEF(i)],
                        &[IdUp(i), dd(i, g[0]), IdUp(i)],
                    ],
                )?;
                terms.push((1, w));
            }
            b.push("", l, params, sum_of(vec![(1, lhs), (-1, rhs)]), sum_of(terms))?;
        }
        _ => {}
    }
    Ok(())
}

/// Both sides of the third Reidemeister move with a downward middle strand
/// on `[+i, -j, +k]`.
fn other_r3_sides(l: &GlWeight, i: usize, j: usize, k: usize) -> Result<(DiagramWord, DiagramWord), Error> {
    let lhs = word(l, &[&[CrossLR(i, j), IdUp(k)], &[IdDown(j), CrossUU(i, k)], &[CrossRL(k, j), IdUp(i)]])?;
    let rhs = word(l, &[&[IdUp(i), CrossRL(k, j)], &[CrossUU(i, k), IdDown(j)], &[IdUp(k), CrossLR(i, j)]])?;
    Ok((lhs, rhs))
}

/// Check one instance, reporting errors as failures.
pub fn check_case(ev: &mut Evaluator, case: &RelationCase, seed: u64) -> CaseResult {
    match relation_holds(ev, &case.relation, seed) {
        Ok(true) => CaseResult::check(&case.relation_id, case.parameters.clone(), true),
        Ok(false) => CaseResult::new(
            &case.relation_id,
            case.parameters.clone(),
            false,
            Some("the two sides evaluate to different maps".into()),
        ),
        Err(e) => CaseResult::new(&case.relation_id, case.parameters.clone(), false, Some(format!("{e}"))),
    }
}

/// Run the relation suite sequentially.
pub fn relation_suite(n: usize, d: i64, family: Option<&str>, seed: u64) -> Result<Report, Error> {
    let cases = instances(n, d, family)?;
    let mut ev = Evaluator::new(d as usize);
    let results = cases.iter().map(|c| check_case(&mut ev, c, seed)).collect();
    Ok(Report::new(&format!("relations n={n} d={d}"), results))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(2, 4).len(), 10);
        assert!(compositions(-1, 4).is_empty());
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn unknown_family_is_rejected() {
        assert!(family_instances(2, 1, "nope").is_err());
    }
}
