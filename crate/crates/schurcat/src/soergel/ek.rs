//! Bott–Samelson bimodules and the Soergel generators acting on them, used as
//! an independent oracle for `F_Bim ∘ Σ`.
//!
//! An element of `B_{c_1} ⊗ … ⊗ B_{c_k}` is a sum of pure tensors
//! `f_0 ⊗ f_1 ⊗ … ⊗ f_k` with `f_s ∈ Q[x_1..x_d]`, `x_t = Var(t-1)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::RngCore;

use super::SAtom;
use crate::bimrep::Ladder;
use crate::linalg::{rank, solve, Matrix};
use crate::polysym::{divided_diff, MPoly, Monomial, Var};
use crate::scalars::Q;
use crate::Error;

pub type Tensor = Vec<MPoly>;

/// Exponent pattern of the left basis `1 ⊗ x_{c_1}^{e_1} ⊗ … ⊗ x_{c_k}^{e_k}`.
pub type Pattern = Vec<bool>;

fn x(t: usize) -> Var {
    Var(t as u32 - 1)
}

/// `f = a + x_c b` with `a` invariant under `s_c`.
fn split_slot(f: &MPoly, c: usize) -> (MPoly, MPoly) {
    let b = divided_diff(f, x(c), x(c + 1));
    let a = f.sub(&b.mul(&MPoly::var(x(c))));
    (a, b)
}

/// Coordinates of a pure tensor in the left basis.
pub fn normal_form(t: &[MPoly], colors: &[usize]) -> BTreeMap<Pattern, MPoly> {
    let mut out = BTreeMap::new();
    if t.iter().any(MPoly::is_zero) {
        return out;
    }
    let k = colors.len();
    if k == 0 {
        out.insert(Vec::new(), t[0].clone());
        return out;
    }
    let (a, b) = split_slot(&t[k], colors[k - 1]);
    for (part, bit) in [(a, false), (b, true)] {
        if part.is_zero() {
            continue;
        }
        let mut head = t[..k].to_vec();
        head[k - 1] = head[k - 1].mul(&part);
        for (mut e, c) in normal_form(&head, &colors[..k - 1]) {
            e.push(bit);
            out.insert(e, c);
        }
    }
    out
}

/// Coordinates of a sum of pure tensors.
pub fn normal_form_sum(ts: &[Tensor], colors: &[usize]) -> BTreeMap<Pattern, MPoly> {
    let mut out: BTreeMap<Pattern, MPoly> = BTreeMap::new();
    for t in ts {
        for (e, c) in normal_form(t, colors) {
            let s = out.entry(e).or_default();
            *s = s.add(&c);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn basis_tensor(e: &[bool], colors: &[usize], left: MPoly) -> Tensor {
    let mut t = vec![left];
    t.extend(e.iter().zip(colors).map(|(&b, &c)| if b { MPoly::var(x(c)) } else { MPoly::one() }));
    t
}

fn patterns(k: usize) -> Vec<Pattern> {
    (0..1u32 << k).map(|m| (0..k).map(|j| m >> (k - 1 - j) & 1 == 1).collect()).collect()
}

fn weight(e: &[bool]) -> usize {
    e.iter().filter(|&&b| b).count()
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
        Some((&v, rest)) => (0..=deg)
            .flat_map(|e| monomials(rest, deg - e).into_iter().map(move |m| m.mul(&Monomial::var(v, e))))
            .collect(),
    }
}

/// The degree-zero bimodule map `B_a B_b B_a → B_b B_a B_b` sending
/// `1⊗1⊗1⊗1` to itself, for colours `{1,2}`, as images of the left basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixTable {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub images: BTreeMap<Pattern, BTreeMap<Pattern, MPoly>>,
}

/// Determine the map by right linearity under `x_1, x_2, x_3`; the system
/// must have a unique solution.
pub fn solve_six(source: [usize; 3], target: [usize; 3]) -> Result<SixTable, Error> {
    let vars = [x(1), x(2), x(3)];
    let pats = patterns(3);
    let mut index: BTreeMap<(Pattern, Pattern, Monomial), usize> = BTreeMap::new();
    for e in &pats {
        for f in &pats {
            if weight(f) <= weight(e) {
                for m in monomials(&vars, (weight(e) - weight(f)) as u32) {
                    let k = index.len();
                    index.insert((e.clone(), f.clone(), m), k);
                }
            }
        }
    }
    let unknowns = index.len();
    type Form = BTreeMap<usize, Q>;
    let mut rows: Vec<Form> = Vec::new();
    let mut rhs: Vec<Q> = Vec::new();
    let right_mult = |e: &Pattern, colors: &[usize], v: Var| {
        let mut t = basis_tensor(e, colors, MPoly::one());
        t[3] = t[3].mul(&MPoly::var(v));
        normal_form(&t, colors)
    };
    for e in &pats {
        for &v in &vars {
            let mut eq: BTreeMap<(Pattern, Monomial), Form> = BTreeMap::new();
            let mut put = |f: &Pattern, p: &MPoly, u: usize, sign: i64| {
                for (m, c) in p.terms() {
                    let slot = eq.entry((f.clone(), m.clone())).or_default().entry(u).or_insert_with(Q::zero);
                    *slot += c * Q::from_integer(sign.into());
                }
            };
            // F(b_e x_v)
            for (e2, r) in right_mult(e, &source, v) {
                for ((ea, fa, m), &u) in index.range((e2.clone(), Vec::new(), Monomial::one())..) {
                    if *ea != e2 {
                        break;
                    }
                    put(fa, &r.mul_monomial(m, &Q::one()), u, 1);
                }
            }
            // F(b_e) x_v
            for ((ea, fa, m), &u) in index.range((e.clone(), Vec::new(), Monomial::one())..) {
                if ea != e {
                    break;
                }
                for (g, s) in right_mult(fa, &target, v) {
                    put(&g, &s.mul_monomial(m, &Q::one()), u, -1);
                }
            }
            for (_, form) in eq {
                rows.push(form);
                rhs.push(Q::zero());
            }
        }
    }
    let zero: Pattern = vec![false; 3];
    rows.push(BTreeMap::from([(index[&(zero.clone(), zero, Monomial::one())], Q::one())]));
    rhs.push(Q::one());
    let mut a = Matrix::zeros(rows.len(), unknowns);
    for (r, form) in rows.iter().enumerate() {
        for (&u, c) in form {
            a.set(r, u, c.clone());
        }
    }
    if rank(&a) != unknowns {
        return Err(Error::Inconsistent(format!("six-valent map {source:?} → {target:?} is not unique")));
    }
    let sol = solve(&a, &rhs).ok_or_else(|| Error::Inconsistent(format!("no six-valent map {source:?} → {target:?}")))?;
    let mut images: BTreeMap<Pattern, BTreeMap<Pattern, MPoly>> = BTreeMap::new();
    for ((e, f, m), u) in index {
        if !sol[u].is_zero() {
            let p = images.entry(e).or_default().entry(f).or_default();
            p.add_term(m, sol[u].clone());
        }
    }
    Ok(SixTable { source: source.to_vec(), target: target.to_vec(), images })
}

/// Generator maps on Bott–Samelson bimodules.
#[derive(Clone, Debug)]
pub struct Ek {
    up: SixTable,
    down: SixTable,
}

impl Ek {
    pub fn new() -> Result<Ek, Error> {
        Ok(Ek { up: solve_six([2, 1, 2], [1, 2, 1])?, down: solve_six([1, 2, 1], [2, 1, 2])? })
    }

    pub fn six_up(&self) -> &SixTable {
        &self.up
    }

    pub fn six_down(&self) -> &SixTable {
        &self.down
    }

    /// Image of the local slots `g_0..g_m` around a generator with `m`
    /// bottom lines.
    pub fn apply_local(&self, a: SAtom, g: &[MPoly]) -> Vec<Tensor> {
        let alpha = |i: usize| MPoly::var(x(i)).sub(&MPoly::var(x(i + 1)));
        let half = Q::new(1.into(), 2.into());
        match a {
            SAtom::Line(_) => vec![g.to_vec()],
            SAtom::StartDot(i) => vec![
                vec![g[0].mul(&alpha(i)).scale(&half), MPoly::one()],
                vec![g[0].scale(&half), alpha(i)],
            ],
            SAtom::EndDot(_) => vec![vec![g[0].mul(&g[1])]],
            SAtom::Merge(i) => vec![vec![g[0].mul(&divided_diff(&g[1], x(i), x(i + 1))), g[2].clone()]],
            SAtom::Split(_) => vec![vec![g[0].clone(), MPoly::one(), g[1].clone()]],
            SAtom::Box(i) => vec![vec![g[0].mul(&MPoly::var(x(i)))]],
            SAtom::FourVertex(a, _) => {
                let (xa, xb) = (x(a), x(a + 1));
                let mut out = Vec::new();
                for (m, c) in g[1].terms() {
                    let (p, q) = m.split(|v| v == xa || v == xb);
                    out.push(vec![g[0].mul_monomial(&q, c), MPoly::one(), g[2].mul_monomial(&p, &Q::one())]);
                }
                out
            }
            SAtom::SixVertexUp(i) => self.apply_six(&self.up, i, g),
            SAtom::SixVertexDown(i) => self.apply_six(&self.down, i, g),
        }
    }

    fn apply_six(&self, table: &SixTable, i: usize, g: &[MPoly]) -> Vec<Tensor> {
        let shift = |v: Var| Var(v.0 + i as u32 - 1);
        let colors: Vec<usize> = table.source.iter().map(|c| c + i - 1).collect();
        let tcolors: Vec<usize> = table.target.iter().map(|c| c + i - 1).collect();
        let mut out = Vec::new();
        for (e, r) in normal_form(g, &colors) {
            if let Some(img) = table.images.get(&e) {
                for (f, c) in img {
                    out.push(basis_tensor(f, &tcolors, r.mul(&c.rename(shift))));
                }
            }
        }
        out
    }

    /// Apply a word slice by slice to a sum of pure tensors, returned in the
    /// left basis.
    pub fn apply_word(&self, word: &super::SoergelWord, input: &[Tensor]) -> Vec<Tensor> {
        let mut cur = input.to_vec();
        for s in &word.slices {
            let offsets: Vec<usize> = s
                .iter()
                .scan(0, |p, a| {
                    let o = *p;
                    *p += a.bottom().len();
                    Some(o)
                })
                .collect();
            for (a, &p) in s.iter().zip(&offsets).rev() {
                if a.is_line() {
                    continue;
                }
                let m = a.bottom().len();
                cur = cur
                    .iter()
                    .flat_map(|t| {
                        self.apply_local(*a, &t[p..=p + m]).into_iter().map(move |loc| {
                            let mut nt = t[..p].to_vec();
                            nt.extend(loc);
                            nt.extend_from_slice(&t[p + m + 1..]);
                            nt
                        })
                    })
                    .filter(|t| t.iter().all(|f| !f.is_zero()))
                    .collect();
            }
            let colors: Vec<usize> = s.iter().flat_map(SAtom::top).collect();
            cur = normal_form_sum(&cur, &colors).into_iter().map(|(e, c)| basis_tensor(&e, &colors, c)).collect();
        }
        cur
    }
}

/// The bimodule map `B_{c_1} … B_{c_k} → ` ladder ring of `E_{-c_1}E_{+c_1}…`
/// at `(1^d, 0, …)`: slot `s` sends `x_t` to minus the strand-`t` variable at
/// the level after `s` lines.
pub fn phi(lad: &Ladder, t: &[MPoly]) -> MPoly {
    let mut out = MPoly::one();
    for (s, f) in t.iter().enumerate() {
        let sub: BTreeMap<Var, MPoly> = (1..=lad.d).map(|k| (x(k), lad.elem(2 * s, k - 1, 1).neg())).collect();
        out = lad.reduce(&out.mul(&f.substitute(&sub)));
    }
    out
}

pub fn phi_sum(lad: &Ladder, ts: &[Tensor]) -> MPoly {
    ts.iter().fold(MPoly::zero(), |acc, t| acc.add(&phi(lad, t)))
}

/// A random pure tensor with `k+1` slots of degree at most `deg` in
/// `x_1..x_d`.
pub fn random_tensor(k: usize, d: usize, deg: u32, rng: &mut ChaCha8Rng) -> Tensor {
    let vars: Vec<Var> = (1..=d).map(x).collect();
    (0..=k)
        .map(|_| {
            let mut f = MPoly::zero();
            for e in 0..=deg {
                for m in monomials(&vars, e) {
                    let c = (rng.next_u32() % 7) as i64 - 3;
                    f.add_term(m, Q::from_integer(c.into()));
                }
            }
            if f.is_zero() {
                MPoly::one()
            } else {
                f
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_reassembles() {
        let colors = [1, 2, 1];
        let t: Tensor = vec![MPoly::var(x(2)), MPoly::var(x(1)).pow(2), MPoly::var(x(3)), MPoly::var(x(1)).mul(&MPoly::var(x(2)))];
        let nf = normal_form(&t, &colors);
        let back: Vec<Tensor> = nf.iter().map(|(e, c)| basis_tensor(e, &colors, c.clone())).collect();
        assert_eq!(normal_form_sum(&back, &colors), nf);
    }

    #[test]
    fn six_tables_are_inverse_up_to_dots() {
        let ek = Ek::new().unwrap();
        let one: Tensor = vec![MPoly::one(); 4];
        let up = ek.apply_local(SAtom::SixVertexUp(1), &one);
        assert_eq!(normal_form_sum(&up, &[1, 2, 1]), normal_form(&one, &[1, 2, 1]));
    }
}
