//! Degree coherence, thick bubbles and divided powers under the bimodule
//! evaluation.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use super::relations::{check_case, family_instances};
use super::{bubble_value, maps_equal, BimMap, Evaluator, Ladder};
use crate::diagrams::{divided_power_idempotent, Atom, DiagramWord, Letter};
use crate::linalg::{det, Matrix};
use crate::polysym::{Alphabet, MPoly, Monomial, Var};
use crate::report::{CaseResult, Report};
use crate::scalars::Q;
use crate::supersym::{conjugate, in_gamma, size, lr_expand, partitions, poly_rank, super_schur, SuperPair};
use crate::weights::{enumerate_lambda, GlWeight, Sign};
use crate::Error;

/// Every generator atom on colours `1..n`, with bubbles of dot count in
/// `-3..=3`.
pub fn generator_atoms(n: usize) -> Vec<Atom> {
    use Atom::*;
    let mut out = Vec::new();
    for i in 1..n {
        out.extend([DotUp(i, 1), DotDown(i, 1), DotUp(i, 2), CupEF(i), CupFE(i), CapEF(i), CapFE(i)]);
        for dots in -3..=3 {
            for clockwise in [true, false] {
                out.push(Bubble { clockwise, color: i, dots });
            }
        }
        for j in 1..n {
            out.extend([CrossUU(i, j), CrossDD(i, j), CrossLR(i, j), CrossRL(i, j)]);
        }
    }
    out
}

/// Whether every basis image is homogeneous of the degree predicted by the
/// degree table (variables in degree 2).
pub fn is_degree_coherent(f: &BimMap) -> bool {
    let shift = f.poly_shift();
    if shift % 2 != 0 {
        return f.is_zero();
    }
    f.source.basis().iter().zip(&f.images).all(|(b, img)| {
        let want = 2 * b.degree() as i64 + shift;
        img.is_zero() || (want >= 0 && img.is_homogeneous_of((want / 2) as u32))
    })
}

/// Degree coherence of every generator at every weight, alone and next to a
/// through strand on either side.
pub fn degree_coherence(n: usize, d: i64) -> Report {
    let mut ev = Evaluator::new(d as usize);
    let mut cases = Vec::new();
    let pads: Vec<Vec<Letter>> =
        core::iter::once(Vec::new()).chain((1..n).flat_map(|k| [vec![Letter::up(k)], vec![Letter::down(k)]])).collect();
    for l in enumerate_lambda(n, d) {
        for atom in generator_atoms(n) {
            for left in &pads {
                for right in pads.iter().filter(|_| left.is_empty()) {
                    let w = DiagramWord::single(l.clone(), left, atom, right);
                    let f = ev.eval(&w);
                    let params = format!("lambda={l};atom={atom};left={};right={}", left.len(), right.len());
                    cases.push(CaseResult::check("degree_coherence", params, is_degree_coherent(&f)));
                }
            }
        }
    }
    Report::new(&format!("degree coherence n={n} d={d}"), cases)
}

/// The bubble families of the relation suite.
pub const BUBBLE_FAMILIES: &[&str] = &["bubble_closed", "bubble_deg0", "positivity", "infinite_grass"];

/// Closed-form bubbles against literal bubbles, degree-zero values,
/// positivity and the infinite Grassmannian relation through degree 6.
pub fn bubble_checks(n: usize, d: i64, seed: u64) -> Result<Report, Error> {
    let mut ev = Evaluator::new(d as usize);
    let mut cases = Vec::new();
    for f in BUBBLE_FAMILIES {
        for c in family_instances(n, d, f)? {
            cases.push(check_case(&mut ev, &c, seed));
        }
    }
    Ok(Report::new(&format!("bubbles n={n} d={d}"), cases))
}

/// The strand alphabets `(x̲, ȳ)` of colours `i`, `i+1` at `λ` in the empty
/// ladder's variables.
pub fn strand_pair(i: usize, lambda: &GlWeight) -> SuperPair {
    let start: i64 = lambda.0[..i - 1].iter().sum();
    let a = lambda.at(i);
    let b = lambda.at(i + 1);
    let x = Alphabet::new((start..start + a).map(|v| Var(v as u32)).collect());
    let y = Alphabet::new((start + a..start + a + b).map(|v| Var(v as u32)).collect());
    SuperPair::new(x, y)
}

/// A thick bubble of thickness `m` labelled by `partition` (padded with zeros
/// to length `m`), as the Giambelli determinant of single bubbles: entry
/// `(r, c)` has `±(λ̄_i ∓ 1) + β_r + c - r` dots (upper signs clockwise).
pub fn thick_bubble(clockwise: bool, m: usize, partition: &[u32], i: usize, lambda: &GlWeight) -> Result<MPoly, Error> {
    if m == 0 || partition.len() > m {
        return Err(Error::Domain(format!("partition {partition:?} does not fit thickness {m}")));
    }
    let bar = lambda.bar_at(i);
    let base = if clockwise { bar - 1 } else { -bar - 1 };
    let part = |r: usize| partition.get(r).copied().unwrap_or(0) as i64;
    let rows = (0..m)
        .map(|r| (0..m).map(|c| bubble_value(clockwise, base + part(r) + c as i64 - r as i64, i, lambda)).collect())
        .collect();
    Ok(det(&Matrix::from_rows(rows)))
}

fn sign_pow(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Thick bubbles at every `(a,b)` with `1 ≤ a+b ≤ max_size` for thickness
/// `m ≤ 2` and `|β| ≤ 3`: the super-Schur correspondence, vanishing outside
/// `Γ(a,b)`, the clockwise/counterclockwise sign identity and
/// Littlewood-Richardson multiplicativity.
pub fn thick_bubble_suite(max_size: i64) -> Result<Report, Error> {
    let mut cases = Vec::new();
    for d in 1..=max_size {
        for l in enumerate_lambda(2, d) {
            let (a, b) = (l.at(1), l.at(2));
            let pair = strand_pair(1, &l);
            let mut labels: Vec<(usize, Vec<u32>)> = Vec::new();
            for m in 1..=2usize {
                for k in 0..=3 {
                    for p in partitions(k).into_iter().filter(|p| p.len() <= m) {
                        labels.push((m, p));
                    }
                }
            }
            for (m, p) in &labels {
                let params = format!("lambda={l};m={m};beta={p:?}");
                let v = thick_bubble(true, *m, p, 1, &l)?;
                let want = super_schur(p, &pair).scale_int(sign_pow(*m as i64 * b));
                cases.push(CaseResult::check("thick.superschur", params.clone(), v == want));
                if !in_gamma(p, a as usize, b as usize) {
                    cases.push(CaseResult::check("thick.vanishing", params.clone(), v.is_zero()));
                }
                let pc = conjugate(p);
                if pc.len() <= *m {
                    let ccw = thick_bubble(false, *m, &pc, 1, &l)?;
                    let s = sign_pow(size(p) as i64 + *m as i64);
                    cases.push(CaseResult::check("thick.cw_ccw", params, v == ccw.scale_int(s)));
                }
            }
            for (m1, p1) in &labels {
                for (m2, p2) in &labels {
                    if size(p1) + size(p2) > 3 {
                        continue;
                    }
                    let m = m1 + m2;
                    let prod = thick_bubble(true, *m1, p1, 1, &l)?.mul(&thick_bubble(true, *m2, p2, 1, &l)?);
                    let mut sum = MPoly::zero();
                    for (g, c) in lr_expand(p1, p2, &pair)? {
                        if g.len() > m {
                            return Err(Error::Inconsistent(format!("LR term {g:?} longer than {m}")));
                        }
                        sum = sum.add(&thick_bubble(true, m, &g, 1, &l)?.scale_int(c));
                    }
                    let params = format!("lambda={l};m1={m1};alpha={p1:?};m2={m2};beta={p2:?}");
                    cases.push(CaseResult::check("thick.lr", params, prod == sum));
                }
            }
        }
    }
    Ok(Report::new("thick bubbles", cases))
}

/// Hilbert function through polynomial degree `top` of a ladder module and
/// of the image of an endomorphism of it, over the polynomial ring in the
/// bottom variables (variables in degree 2).
pub fn image_dimensions(f: &BimMap, top: u32) -> (Vec<usize>, Vec<usize>) {
    let lad: &Ladder = &f.source;
    let basis = lad.basis();
    let zs: Vec<Var> = (0..lad.d as u32).map(Var).collect();
    let mut module = Vec::new();
    let mut image = Vec::new();
    for k in 0..=top / 2 {
        let mut count = 0;
        let mut imgs = Vec::new();
        for (b, img) in basis.iter().zip(&f.images) {
            if b.degree() > k {
                continue;
            }
            for z in monomials(&zs, k - b.degree()) {
                count += 1;
                imgs.push(lad.reduce(&img.mul_monomial(&z, &Q::one())));
            }
        }
        module.push(count);
        image.push(poly_rank(&imgs));
    }
    (module, image)
}

fn monomials(vars: &[Var], deg: u32) -> Vec<Monomial> {
    match vars.split_first() {
        None => {
            if deg == 0 {
                vec![Monomial::one()]
            } else {
                Vec::new()
            }
        }
        Some((&v, rest)) => {
            let mut out = Vec::new();
            for e in 0..=deg {
                for m in monomials(rest, deg - e) {
                    out.push(m.mul(&Monomial::var(v, e)));
                }
            }
            out
        }
    }
}

/// Checks on `e_{±i,m,λ}`: idempotence, vanishing exactly past the
/// threshold, and for `m = 2` the graded rank `dim M_k = dim I_k + dim I_{k+2}`
/// through polynomial degree 6, where `I` is the image (so `M ≅ I ⊗ [2]!` up
/// to an overall shift).
pub fn divided_power_check(i: usize, sign: Sign, m: usize, lambda: &GlWeight, d: i64, seed: u64) -> Result<Report, Error> {
    if m == 0 || m > 3 {
        return Err(Error::Domain(format!("divided power {m} outside 1..=3")));
    }
    let mut ev = Evaluator::new(d as usize);
    let e = divided_power_idempotent(i, sign, m, lambda);
    let seq = vec![Letter { color: i, sign }; m];
    let f = ev.eval_combo(&e, lambda, &seq, &seq)?;
    let sg = if sign == Sign::Plus { "+" } else { "-" };
    let params = format!("lambda={lambda};i={i};sign={sg};m={m}");
    let mut cases = Vec::new();
    let ff = f.after(&f);
    let ff = BimMap { degree: f.degree, ..ff };
    cases.push(CaseResult::check("divided_power.idempotent", params.clone(), maps_equal(&ff, &f, 2, seed)?));
    let threshold = if sign == Sign::Plus { lambda.at(i + 1) } else { lambda.at(i) };
    let vanishes = m as i64 > threshold;
    cases.push(CaseResult::new(
        "divided_power.vanishing",
        params.clone(),
        f.is_zero() == vanishes,
        (f.is_zero() != vanishes).then(|| format!("zero={} expected {}", f.is_zero(), vanishes)),
    ));
    if m == 2 && !vanishes {
        let (module, image) = image_dimensions(&f, 8);
        let ok = (0..module.len() - 1).all(|k| module[k] == image[k] + image[k + 1]);
        let witness = (!ok).then(|| format!("module {module:?} image {image:?}"));
        cases.push(CaseResult::new("divided_power.rank", params, ok, witness));
    }
    Ok(Report::new("divided powers", cases))
}

/// Divided-power checks for all colours, signs, `m ≤ max_m` and weights.
pub fn divided_power_suite(n: usize, d: i64, max_m: usize, seed: u64) -> Result<Report, Error> {
    let mut parts = Vec::new();
    for l in enumerate_lambda(n, d) {
        for i in 1..n {
            for sign in [Sign::Plus, Sign::Minus] {
                for m in 1..=max_m {
                    parts.push(divided_power_check(i, sign, m, &l, d, seed)?);
                }
            }
        }
    }
    Ok(Report::merge(&format!("divided powers n={n} d={d}"), parts))
}
