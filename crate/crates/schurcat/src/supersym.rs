//! Supersymmetric polynomials `π_α(x̲, ȳ)`, hook sets `Γ(a,b)` and
//! Littlewood-Richardson expansions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg::{det, rank, solve, Matrix};
use crate::polysym::{complete, elem, schur, Alphabet, MPoly, Monomial, Var};
use crate::report::{CaseResult, Report};
use crate::scalars::Q;
use crate::Error;

/// A pair of disjoint alphabets `(x̲, ȳ)` of sizes `a` and `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperPair {
    pub x: Alphabet,
    pub y: Alphabet,
}

impl SuperPair {
    pub fn new(x: Alphabet, y: Alphabet) -> Self {
        SuperPair { x, y }
    }

    /// Fresh variables `x_1..x_a` (ids `0..a`) and `y_1..y_b` (ids `a..a+b`).
    pub fn standard(a: usize, b: usize) -> Self {
        let x = Alphabet::new((0..a as u32).map(Var).collect());
        let y = Alphabet::new((a as u32..(a + b) as u32).map(Var).collect());
        SuperPair { x, y }
    }

    pub fn a(&self) -> usize {
        self.x.len()
    }

    pub fn b(&self) -> usize {
        self.y.len()
    }

    /// The pair with the roles of the alphabets exchanged.
    pub fn swapped(&self) -> Self {
        SuperPair { x: self.y.clone(), y: self.x.clone() }
    }
}

/// A partition stored without trailing zeros.
pub type Partition = Vec<u32>;

/// Drop trailing zeros.
pub fn normalize(p: &[u32]) -> Partition {
    let mut v = p.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn is_partition(p: &[u32]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1])
}

pub fn size(p: &[u32]) -> u32 {
    p.iter().sum()
}

/// The conjugate partition `α'`.
pub fn conjugate(p: &[u32]) -> Partition {
    let first = p.first().copied().unwrap_or(0);
    (1..=first).map(|k| p.iter().filter(|&&x| x >= k).count() as u32).collect()
}

/// Membership in `Γ(a,b)`: `α_j <= b` for all `j > a`.
pub fn in_gamma(p: &[u32], a: usize, b: usize) -> bool {
    p.iter().skip(a).all(|&x| x as usize <= b)
}

/// All partitions of `k`, in reverse lexicographic order.
pub fn partitions(k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    parts_rec(k, k, &mut cur, &mut out);
    out
}

fn parts_rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for first in (1..=rest.min(max)).rev() {
        cur.push(first);
        parts_rec(rest - first, first, cur, out);
        cur.pop();
    }
}

/// `e_j(x̲, ȳ) = Σ_s (-1)^s h_{j-s}(x̲) e_s(ȳ)`.
pub fn super_elem(j: i64, p: &SuperPair) -> MPoly {
    if j < 0 {
        return MPoly::zero();
    }
    let mut acc = MPoly::zero();
    for s in 0..=j.min(p.b() as i64) {
        let t = complete(j - s, &p.x).mul(&elem(s, &p.y));
        acc = if s % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
    }
    acc
}

/// `π_α(x̲, ȳ) = det(e_{α_i + j - i}(x̲, ȳ))`.
pub fn super_schur(alpha: &[u32], p: &SuperPair) -> MPoly {
    let al = normalize(alpha);
    let l = al.len();
    if l == 0 {
        return MPoly::one();
    }
    let cache: BTreeMap<i64, MPoly> = (-(l as i64)..=(al[0] as i64 + l as i64))
        .map(|k| (k, super_elem(k, p)))
        .collect();
    let rows = (0..l)
        .map(|i| (0..l).map(|j| cache[&(al[i] as i64 + j as i64 - i as i64)].clone()).collect())
        .collect();
    det(&Matrix::from_rows(rows))
}

/// Coordinates of polynomials against a common monomial list.
fn coordinates(polys: &[MPoly]) -> (Vec<Monomial>, Vec<Vec<Q>>) {
    let mut monos: Vec<Monomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    monos.sort();
    monos.dedup();
    let rows = polys.iter().map(|p| monos.iter().map(|m| p.coeff(m)).collect()).collect();
    (monos, rows)
}

/// Rank of a family of polynomials.
pub fn poly_rank(polys: &[MPoly]) -> usize {
    let (monos, rows) = coordinates(polys);
    if monos.is_empty() || rows.is_empty() {
        return 0;
    }
    rank(&Matrix::from_rows(rows))
}

/// Expansion of `π_α π_β` in the basis `{π_γ : γ ∈ Γ(a,b), |γ| = |α|+|β|}`
/// by an exact linear solve.
pub fn lr_expand(alpha: &[u32], beta: &[u32], p: &SuperPair) -> Result<BTreeMap<Partition, i64>, Error> {
    let k = size(alpha) + size(beta);
    let basis: Vec<Partition> = partitions(k).into_iter().filter(|g| in_gamma(g, p.a(), p.b())).collect();
    let target = super_schur(alpha, p).mul(&super_schur(beta, p));
    let mut polys: Vec<MPoly> = basis.iter().map(|g| super_schur(g, p)).collect();
    if poly_rank(&polys) != basis.len() {
        return Err(Error::Inconsistent("super-Schur family is not independent".into()));
    }
    polys.push(target);
    let (monos, rows) = coordinates(&polys);
    let target_row = rows.last().cloned().unwrap_or_default();
    let mut a = Matrix::zeros(monos.len(), basis.len());
    for (j, row) in rows[..basis.len()].iter().enumerate() {
        for (i, c) in row.iter().enumerate() {
            a.set(i, j, c.clone());
        }
    }
    let sol = if basis.is_empty() {
        if target_row.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None }
    } else {
        solve(&a, &target_row)
    };
    let sol = sol.ok_or_else(|| {
        Error::Inconsistent(alloc::format!("product not in the span; enlarge (a,b)=({},{})", p.a(), p.b()))
    })?;
    let mut out = BTreeMap::new();
    for (g, c) in basis.into_iter().zip(sol) {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::Inconsistent("non-integral LR coefficient".into()));
        }
        let v: i64 = c.to_integer().try_into().map_err(|_| Error::Domain("coefficient overflow".into()))?;
        out.insert(g, v);
    }
    Ok(out)
}

/// Littlewood-Richardson coefficients `c^γ_{αβ}` by counting LR tableaux of
/// shape `γ/α` and content `β` (reverse reading word is a lattice word).
pub fn lr_tableau(alpha: &[u32], beta: &[u32]) -> BTreeMap<Partition, i64> {
    let k = size(alpha) + size(beta);
    let a = normalize(alpha);
    let b = normalize(beta);
    let mut out = BTreeMap::new();
    for g in partitions(k) {
        if g.len() < a.len() || a.iter().zip(&g).any(|(x, y)| x > y) {
            continue;
        }
        let c = count_lr(&a, &b, &g);
        if c > 0 {
            out.insert(g, c);
        }
    }
    out
}

fn count_lr(alpha: &[u32], beta: &[u32], gamma: &[u32]) -> i64 {
    // Cells of γ/α in reading order: rows top to bottom, each row right to left.
    let mut cells = Vec::new();
    for (r, &len) in gamma.iter().enumerate() {
        let start = alpha.get(r).copied().unwrap_or(0);
        for c in (start..len).rev() {
            cells.push((r, c as usize));
        }
    }
    let mut fill: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    let mut counts = vec![0u32; beta.len() + 1];
    lr_rec(&cells, 0, alpha, beta, &mut fill, &mut counts)
}

fn lr_rec(
    cells: &[(usize, usize)],
    k: usize,
    alpha: &[u32],
    beta: &[u32],
    fill: &mut BTreeMap<(usize, usize), u32>,
    counts: &mut Vec<u32>,
) -> i64 {
    if k == cells.len() {
        return i64::from(counts[1..].iter().zip(beta).all(|(c, b)| c == b));
    }
    let (r, c) = cells[k];
    let mut total = 0;
    for v in 1..=beta.len() as u32 {
        let vi = v as usize;
        if counts[vi] >= beta[vi - 1] {
            continue;
        }
        // Lattice condition on the reverse reading word.
        if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue;
        }
        // Rows weakly increase left to right (the cell to the right is already filled).
        if let Some(&right) = fill.get(&(r, c + 1)) {
            if v > right {
                continue;
            }
        }
        // Columns strictly increase downward.
        if r > 0 && (c as u32) >= alpha.get(r - 1).copied().unwrap_or(0) {
            if let Some(&above) = fill.get(&(r - 1, c)) {
                if v <= above {
                    continue;
                }
            }
        }
        fill.insert((r, c), v);
        counts[vi] += 1;
        total += lr_rec(cells, k + 1, alpha, beta, fill, counts);
        counts[vi] -= 1;
        fill.remove(&(r, c));
    }
    total
}

/// `π_α(x̲, ȳ) = (-1)^{|α|} π_{α'}(ȳ, x̲)`.
pub fn conjugate_duality_check(alpha: &[u32], p: &SuperPair) -> bool {
    let lhs = super_schur(alpha, p);
    let rhs = super_schur(&conjugate(alpha), &p.swapped());
    let rhs = if size(alpha) % 2 == 0 { rhs } else { rhs.neg() };
    lhs == rhs
}

/// Substitute `x_1 = t = y_1` and test that `t` disappears.
pub fn is_supersymmetric(f: &MPoly, p: &SuperPair, t: Var) -> bool {
    match (p.x.vars.first(), p.y.vars.first()) {
        (Some(&x1), Some(&y1)) => {
            let g = f.rename(|v| if v == x1 || v == y1 { t } else { v });
            g.degree_in(t) == 0
        }
        _ => true,
    }
}

/// The supersymmetric Schur lemma on small cases: vanishing off `Γ(a,b)`,
/// basis property, LR coefficients against the tableau count, the duality
/// `α ↔ α'`, and the one-alphabet specialisations. LR products go up to
/// total size `max_lr` in `Γ(2,2)`, which holds every partition of size at
/// most 5.
pub fn lemma_suite(max_size: u32, max_ab: usize, max_lr: u32) -> Report {
    let mut cases = Vec::new();
    let pairs: Vec<(usize, usize)> = (0..=max_ab).flat_map(|a| (0..=max_ab).map(move |b| (a, b))).collect();
    for &(a, b) in &pairs {
        let p = SuperPair::standard(a, b);
        for k in 0..=max_size {
            let mut basis = Vec::new();
            for al in partitions(k) {
                let params = format!("a={a},b={b},alpha={al:?}");
                let pi = super_schur(&al, &p);
                let inside = in_gamma(&al, a, b);
                cases.push(CaseResult::check("vanishing", params.clone(), pi.is_zero() != inside));
                cases.push(CaseResult::check("duality", params, conjugate_duality_check(&al, &p)));
                if inside {
                    basis.push(pi);
                }
            }
            cases.push(CaseResult::check("basis", format!("a={a},b={b},degree={k}"), poly_rank(&basis) == basis.len()));
        }
    }
    for a in 0..=max_ab {
        let px = SuperPair::standard(a, 0);
        let py = SuperPair::standard(0, a);
        for k in 0..=max_size {
            for al in partitions(k) {
                let params = format!("size={a},alpha={al:?}");
                cases.push(CaseResult::check("specialise_x", params.clone(), super_schur(&al, &px) == schur(&al, &px.x)));
                let sy = schur(&conjugate(&al), &py.y);
                let sy = if k % 2 == 0 { sy } else { sy.neg() };
                cases.push(CaseResult::check("specialise_y", params, super_schur(&al, &py) == sy));
            }
        }
    }
    let big = SuperPair::standard(2, 2);
    for k in 0..=max_lr {
        for i in 0..=k {
            for al in partitions(i) {
                for be in partitions(k - i) {
                    let params = format!("alpha={al:?},beta={be:?}");
                    let ok = lr_expand(&al, &be, &big).map_or(false, |c| c == lr_tableau(&al, &be));
                    cases.push(CaseResult::check("littlewood_richardson", params, ok));
                }
            }
        }
    }
    Report::new("supersym", cases)
}
