//! The matrix model of `S_q(n,d)` acting on `V^{⊗d}`, the Hecke algebra action,
//! and the maps `σ`, `τ`, `π` and `ι`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg::{rank, Matrix};
use crate::report::CaseResult;
use crate::scalars::{qint, LaurentQ, Q};
use crate::weights::{enumerate_dominant, enumerate_lambda, shift, GlWeight, Sign};
use crate::Error;

/// The basis `v_{s_1} ⊗ ... ⊗ v_{s_d}` of `V^{⊗d}`, grouped by weight.
#[derive(Clone, Debug)]
pub struct TensorBasis {
    pub n: usize,
    pub d: usize,
    blocks: BTreeMap<GlWeight, Vec<Vec<usize>>>,
}

impl TensorBasis {
    pub fn new(n: usize, d: usize) -> Self {
        let mut blocks: BTreeMap<GlWeight, Vec<Vec<usize>>> = BTreeMap::new();
        let total = n.pow(d as u32);
        for code in 0..total {
            let mut seq = vec![0; d];
            let mut c = code;
            for k in (0..d).rev() {
                seq[k] = c % n + 1;
                c /= n;
            }
            blocks.entry(content(n, &seq)).or_default().push(seq);
        }
        TensorBasis { n, d, blocks }
    }

    /// Basis sequences of weight `λ` (empty if `λ ∉ Λ(n,d)`).
    pub fn block(&self, lambda: &GlWeight) -> &[Vec<usize>] {
        self.blocks.get(lambda).map_or(&[], Vec::as_slice)
    }

    pub fn weights(&self) -> impl Iterator<Item = &GlWeight> {
        self.blocks.keys()
    }

    fn position(&self, lambda: &GlWeight, seq: &[usize]) -> usize {
        self.block(lambda).iter().position(|s| s == seq).expect("sequence in its weight block")
    }
}

/// The content vector of a sequence.
pub fn content(n: usize, seq: &[usize]) -> GlWeight {
    let mut v = vec![0i64; n];
    for &s in seq {
        v[s - 1] += 1;
    }
    GlWeight(v)
}

/// An operator on `V^{⊗d}` stored as weight blocks `(target, source)`.
/// The zero operator has no blocks.
#[derive(Clone, PartialEq)]
pub struct BlockMatrix {
    pub n: usize,
    pub d: usize,
    blocks: BTreeMap<(GlWeight, GlWeight), Matrix<LaurentQ>>,
}

impl BlockMatrix {
    pub fn zero(n: usize, d: usize) -> Self {
        BlockMatrix { n, d, blocks: BTreeMap::new() }
    }

    pub fn identity(basis: &TensorBasis) -> Self {
        let mut out = Self::zero(basis.n, basis.d);
        for lam in basis.weights() {
            out.insert(lam.clone(), lam.clone(), Matrix::identity(basis.block(lam).len()));
        }
        out
    }

    /// The weight idempotent `1_λ`.
    pub fn projector(basis: &TensorBasis, lambda: &GlWeight) -> Self {
        let mut out = Self::zero(basis.n, basis.d);
        let k = basis.block(lambda).len();
        if k > 0 {
            out.insert(lambda.clone(), lambda.clone(), Matrix::identity(k));
        }
        out
    }

    fn insert(&mut self, target: GlWeight, source: GlWeight, m: Matrix<LaurentQ>) {
        if !m.is_zero() {
            self.blocks.insert((target, source), m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block(&self, target: &GlWeight, source: &GlWeight) -> Option<&Matrix<LaurentQ>> {
        self.blocks.get(&(target.clone(), source.clone()))
    }

    pub fn blocks(&self) -> impl Iterator<Item = (&(GlWeight, GlWeight), &Matrix<LaurentQ>)> {
        self.blocks.iter()
    }

    pub fn mul(&self, other: &BlockMatrix) -> BlockMatrix {
        let mut acc: BTreeMap<(GlWeight, GlWeight), Matrix<LaurentQ>> = BTreeMap::new();
        for ((t, m), a) in &self.blocks {
            for ((m2, s), b) in &other.blocks {
                if m != m2 {
                    continue;
                }
                let p = a.mul(b);
                let key = (t.clone(), s.clone());
                let v = match acc.remove(&key) {
                    Some(prev) => prev.add(&p),
                    None => p,
                };
                acc.insert(key, v);
            }
        }
        let mut out = Self::zero(self.n, self.d);
        for ((t, s), m) in acc {
            out.insert(t, s, m);
        }
        out
    }

    pub fn add(&self, other: &BlockMatrix) -> BlockMatrix {
        let mut out = self.clone();
        for (k, b) in &other.blocks {
            let v = match out.blocks.remove(k) {
                Some(prev) => prev.add(b),
                None => b.clone(),
            };
            out.insert(k.0.clone(), k.1.clone(), v);
        }
        out
    }

    pub fn scale(&self, c: &LaurentQ) -> BlockMatrix {
        let mut out = Self::zero(self.n, self.d);
        for ((t, s), m) in &self.blocks {
            out.insert(t.clone(), s.clone(), m.scale(c));
        }
        out
    }

    pub fn sub(&self, other: &BlockMatrix) -> BlockMatrix {
        self.add(&other.scale(&-LaurentQ::one()))
    }

    /// True when every nonzero block sends weight `λ` to `λ + shift`.
    pub fn is_homogeneous(&self, shift: &[i64]) -> bool {
        self.blocks.keys().all(|(t, s)| t.0.iter().zip(&s.0).zip(shift).all(|((a, b), c)| a - b == *c))
    }

    /// Specialize `q` to a rational value.
    pub fn specialize(&self, q: &Q) -> BTreeMap<(GlWeight, GlWeight), Matrix<Q>> {
        self.blocks.iter().map(|(k, m)| (k.clone(), m.map(|c| c.eval(q)))).collect()
    }
}

impl fmt::Debug for BlockMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((t, s), m) in &self.blocks {
            writeln!(f, "{t:?} <- {s:?}: {m:?}")?;
        }
        Ok(())
    }
}

/// `K_i K_{i+1}^{-1}` eigenvalue exponent on `v_s`.
fn k_exp(i: usize, s: usize) -> i64 {
    i64::from(s == i) - i64::from(s == i + 1)
}

/// Matrix of `E_{±i}` on `V^{⊗d}` with `Δ(E_i) = E_i ⊗ K_iK_{i+1}^{-1} + 1 ⊗ E_i`
/// and `Δ(E_{-i}) = E_{-i} ⊗ 1 + K_i^{-1}K_{i+1} ⊗ E_{-i}`.
pub fn generator_matrix(i: usize, sign: Sign, basis: &TensorBasis) -> BlockMatrix {
    assert!(i >= 1 && i < basis.n, "color out of range");
    let (from, to) = match sign {
        Sign::Plus => (i + 1, i),
        Sign::Minus => (i, i + 1),
    };
    let mut out = BlockMatrix::zero(basis.n, basis.d);
    for lam in basis.weights() {
        let mu = shift(lam, i, sign);
        let tgt = basis.block(&mu);
        if tgt.is_empty() {
            continue;
        }
        let src = basis.block(lam);
        let mut m = Matrix::zeros(tgt.len(), src.len());
        for (c, s) in src.iter().enumerate() {
            for k in 0..s.len() {
                if s[k] != from {
                    continue;
                }
                let e: i64 = match sign {
                    Sign::Plus => s[k + 1..].iter().map(|&x| k_exp(i, x)).sum(),
                    Sign::Minus => -s[..k].iter().map(|&x| k_exp(i, x)).sum::<i64>(),
                };
                let mut t = s.clone();
                t[k] = to;
                let r = basis.position(&mu, &t);
                let v = m.get(r, c) + &LaurentQ::q_pow(e);
                m.set(r, c, v);
            }
        }
        out.insert(mu, lam.clone(), m);
    }
    out
}

/// A word `c · E_{s_1} ⋯ E_{s_m} 1_λ`; the rightmost letter acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraWord {
    pub letters: Vec<(usize, Sign)>,
    pub source: GlWeight,
    pub coeff: LaurentQ,
}

impl AlgebraWord {
    pub fn new(letters: &[(usize, Sign)], source: GlWeight) -> Self {
        AlgebraWord { letters: letters.to_vec(), source, coeff: LaurentQ::one() }
    }

    pub fn idempotent(source: GlWeight) -> Self {
        Self::new(&[], source)
    }

    /// Weights after each letter, starting with the source.
    pub fn path(&self) -> Vec<GlWeight> {
        let mut out = vec![self.source.clone()];
        for &(i, s) in self.letters.iter().rev() {
            let next = shift(out.last().expect("nonempty"), i, s);
            out.push(next);
        }
        out
    }

    pub fn target(&self) -> GlWeight {
        self.path().pop().expect("nonempty")
    }

    pub fn is_zero_by_label(&self, n: usize, d: i64) -> bool {
        self.coeff.is_zero() || self.path().iter().any(|w| !w.in_lambda(n, d))
    }

    /// Concatenation `self · other` (other acts first).
    pub fn compose(&self, other: &AlgebraWord) -> AlgebraWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().copied());
        AlgebraWord { letters, source: other.source.clone(), coeff: &self.coeff * &other.coeff }
    }
}

/// The matrix of a word; the zero operator if it is zero by label.
pub fn word_matrix(w: &AlgebraWord, basis: &TensorBasis) -> BlockMatrix {
    let (n, d) = (basis.n, basis.d as i64);
    if w.is_zero_by_label(n, d) {
        return BlockMatrix::zero(basis.n, basis.d);
    }
    let mut acc = BlockMatrix::projector(basis, &w.source);
    for &(i, s) in w.letters.iter().rev() {
        acc = generator_matrix(i, s, basis).mul(&acc);
    }
    acc.scale(&w.coeff)
}

fn params(n: usize, d: usize, extra: &str) -> String {
    alloc::format!("n={n},d={d}{extra}")
}

/// Verify the four relation families of the idempotented presentation.
pub fn check_schur_presentation(n: usize, d: usize) -> Vec<CaseResult> {
    let basis = TensorBasis::new(n, d);
    let lams = enumerate_lambda(n, d as i64);
    let mut out = Vec::new();
    let proj: BTreeMap<GlWeight, BlockMatrix> =
        lams.iter().map(|l| (l.clone(), BlockMatrix::projector(&basis, l))).collect();
    for a in &lams {
        for b in &lams {
            let lhs = proj[a].mul(&proj[b]);
            let rhs = if a == b { proj[a].clone() } else { BlockMatrix::zero(n, d) };
            out.push(CaseResult::check("idempotents", params(n, d, &alloc::format!(",{a},{b}")), lhs == rhs));
        }
    }
    let total = proj.values().fold(BlockMatrix::zero(n, d), |acc, p| acc.add(p));
    out.push(CaseResult::check("unit", params(n, d, ""), total == BlockMatrix::identity(&basis)));
    let gens: BTreeMap<(usize, Sign), BlockMatrix> = (1..n)
        .flat_map(|i| [Sign::Plus, Sign::Minus].map(|s| (i, s)))
        .map(|k| (k, generator_matrix(k.0, k.1, &basis)))
        .collect();
    for (&(i, s), g) in &gens {
        for lam in &lams {
            let lhs = g.mul(&proj[lam]);
            let target = shift(lam, i, s);
            let rhs = match proj.get(&target) {
                Some(p) => p.mul(g),
                None => BlockMatrix::zero(n, d),
            };
            let id = alloc::format!(",i={i}{},{lam}", sign_char(s));
            out.push(CaseResult::check("weight-shift", params(n, d, &id), lhs == rhs));
        }
    }
    for i in 1..n {
        for j in 1..n {
            let ei = &gens[&(i, Sign::Plus)];
            let fj = &gens[&(j, Sign::Minus)];
            let lhs = ei.mul(fj).sub(&fj.mul(ei));
            let mut rhs = BlockMatrix::zero(n, d);
            if i == j {
                for lam in &lams {
                    rhs = rhs.add(&proj[lam].scale(&qint(lam.bar_at(i))));
                }
            }
            out.push(CaseResult::check("commutator", params(n, d, &alloc::format!(",i={i},j={j}")), lhs == rhs));
        }
    }
    out
}

fn sign_char(s: Sign) -> char {
    match s {
        Sign::Plus => '+',
        Sign::Minus => '-',
    }
}

/// The `q`-permutation action of `T_i` on factors `i, i+1` of `V^{⊗d}`:
/// `q^2` on `v_a ⊗ v_a`; for `a < b`, `v_a ⊗ v_b ↦ q v_b ⊗ v_a` and
/// `v_b ⊗ v_a ↦ q v_a ⊗ v_b + (q^2 - 1) v_b ⊗ v_a`.
pub fn hecke_generator(i: usize, basis: &TensorBasis) -> BlockMatrix {
    assert!(i >= 1 && i < basis.d, "Hecke generator out of range");
    let q = LaurentQ::q_pow(1);
    let q2m1 = &LaurentQ::q_pow(2) - &LaurentQ::one();
    let mut out = BlockMatrix::zero(basis.n, basis.d);
    for lam in basis.weights() {
        let src = basis.block(lam);
        let mut m = Matrix::zeros(src.len(), src.len());
        for (c, s) in src.iter().enumerate() {
            let (a, b) = (s[i - 1], s[i]);
            let mut sw = s.clone();
            sw.swap(i - 1, i);
            let r = basis.position(lam, &sw);
            if a == b {
                m.set(c, c, LaurentQ::q_pow(2));
            } else if a < b {
                m.set(r, c, q.clone());
            } else {
                m.set(r, c, q.clone());
                m.set(c, c, q2m1.clone());
            }
        }
        out.insert(lam.clone(), lam.clone(), m);
    }
    out
}

/// Quadratic, far-commutation and braid relations of `H_q(d)` on `V^{⊗d}`.
pub fn check_hecke(n: usize, d: usize) -> Vec<CaseResult> {
    let basis = TensorBasis::new(n, d);
    let id = BlockMatrix::identity(&basis);
    let t: Vec<BlockMatrix> = (1..d).map(|i| hecke_generator(i, &basis)).collect();
    let q2 = LaurentQ::q_pow(2);
    let mut out = Vec::new();
    for i in 0..t.len() {
        let lhs = t[i].mul(&t[i]);
        let rhs = t[i].scale(&(&q2 - &LaurentQ::one())).add(&id.scale(&q2));
        out.push(CaseResult::check("hecke-quadratic", params(n, d, &alloc::format!(",i={}", i + 1)), lhs == rhs));
        for j in 0..t.len() {
            let p = params(n, d, &alloc::format!(",i={},j={}", i + 1, j + 1));
            if i.abs_diff(j) > 1 {
                out.push(CaseResult::check("hecke-commute", p, t[i].mul(&t[j]) == t[j].mul(&t[i])));
            } else if j == i + 1 {
                let l = t[i].mul(&t[j]).mul(&t[i]);
                let r = t[j].mul(&t[i]).mul(&t[j]);
                out.push(CaseResult::check("hecke-braid", p, l == r));
            }
        }
    }
    out
}

/// Hecke matrices commute with the quantum group generators (Schur-Weyl duality).
pub fn check_hecke_commutation(n: usize, d: usize) -> Vec<CaseResult> {
    let basis = TensorBasis::new(n, d);
    let mut out = Vec::new();
    for k in 1..d {
        let t = hecke_generator(k, &basis);
        for i in 1..n {
            for s in [Sign::Plus, Sign::Minus] {
                let g = generator_matrix(i, s, &basis);
                let p = params(n, d, &alloc::format!(",T{k},E{}{i}", sign_char(s)));
                out.push(CaseResult::check("hecke-commutes-with-E", p, t.mul(&g) == g.mul(&t)));
            }
        }
    }
    out
}

/// `σ_{n,d}(b_i) = 1_d E_{-i} E_i 1_d = 1_d E_i E_{-i} 1_d`, with `b_i = q^{-1}(T_i + 1)`.
///
/// On the `(1^d)` block the quantum group and the Hecke algebra act through the
/// two commuting regular representations, so the check compares them on the
/// cyclic vector `v_0 = v_1 ⊗ ... ⊗ v_d`, verifies the Hecke relations for the
/// images `B_i`, and compares full blocks when `d <= 2` (where both agree).
pub fn sigma_check(n: usize, d: usize) -> Result<Vec<CaseResult>, Error> {
    if d > n {
        return Err(Error::Domain(alloc::format!("sigma needs d <= n, got n={n}, d={d}")));
    }
    let basis = TensorBasis::new(n, d);
    let mut ones = vec![0i64; n];
    ones[..d].iter_mut().for_each(|x| *x = 1);
    let one_d = GlWeight(ones);
    let p = BlockMatrix::projector(&basis, &one_d);
    let id = BlockMatrix::identity(&basis);
    let v0: Vec<usize> = (1..=d).collect();
    let col = basis.position(&one_d, &v0);
    let column = |m: &BlockMatrix| -> Vec<LaurentQ> {
        match m.block(&one_d, &one_d) {
            Some(b) => (0..b.rows).map(|r| b.get(r, col).clone()).collect(),
            None => vec![LaurentQ::zero(); basis.block(&one_d).len()],
        }
    };
    let two = qint(2);
    let mut out = Vec::new();
    let bs: Vec<BlockMatrix> = (1..d)
        .map(|i| word_matrix(&AlgebraWord::new(&[(i, Sign::Minus), (i, Sign::Plus)], one_d.clone()), &basis))
        .collect();
    for i in 1..d {
        let pp = params(n, d, &alloc::format!(",i={i}"));
        let hb = p.mul(&hecke_generator(i, &basis).add(&id).scale(&LaurentQ::q_pow(-1))).mul(&p);
        let fe = &bs[i - 1];
        let ef = word_matrix(&AlgebraWord::new(&[(i, Sign::Plus), (i, Sign::Minus)], one_d.clone()), &basis);
        out.push(CaseResult::check("sigma-EF-equals-FE", pp.clone(), *fe == ef));
        out.push(CaseResult::check("sigma-cyclic-vector", pp.clone(), column(fe) == column(&hb)));
        if d <= 2 {
            out.push(CaseResult::check("sigma-block", pp.clone(), *fe == hb));
        }
        out.push(CaseResult::check("sigma-quadratic", pp.clone(), fe.mul(fe) == fe.scale(&two)));
        for j in 1..d {
            let b = &bs[j - 1];
            let pj = params(n, d, &alloc::format!(",i={i},j={j}"));
            if i.abs_diff(j) > 1 {
                out.push(CaseResult::check("sigma-commute", pj, fe.mul(b) == b.mul(fe)));
            } else if j == i + 1 {
                let l = fe.mul(b).mul(fe).add(b);
                let r = b.mul(fe).mul(b).add(fe);
                out.push(CaseResult::check("sigma-braid", pj, l == r));
            }
        }
    }
    Ok(out)
}

/// The anti-involution `τ` on words: reverse, flip each letter, and multiply by
/// `q^{-1-λ̄_i}` for `E_i 1_λ` and `q^{1+λ̄_i}` for `E_{-i} 1_{λ+α_i}`.
pub fn tau(w: &AlgebraWord) -> AlgebraWord {
    let path = w.path();
    let m = w.letters.len();
    let mut coeff = w.coeff.clone();
    let mut letters = Vec::with_capacity(m);
    // Letter at written position p acts on path[m-1-p].
    for (p, &(i, s)) in w.letters.iter().enumerate() {
        let src = &path[m - 1 - p];
        let e = match s {
            Sign::Plus => -1 - src.bar_at(i),
            Sign::Minus => 1 + shift(src, i, Sign::Minus).bar_at(i),
        };
        coeff = coeff.shift(e);
        letters.push((i, s.flip()));
    }
    letters.reverse();
    AlgebraWord { letters, source: w.target(), coeff }
}

/// `τ` is an anti-homomorphism and an involution, checked on matrices.
pub fn tau_check(n: usize, d: usize) -> Vec<CaseResult> {
    let basis = TensorBasis::new(n, d);
    let lams = enumerate_lambda(n, d as i64);
    let letters: Vec<(usize, Sign)> =
        (1..n).flat_map(|i| [(i, Sign::Plus), (i, Sign::Minus)]).collect();
    let mut words: Vec<Vec<(usize, Sign)>> = vec![vec![]];
    for &a in &letters {
        words.push(vec![a]);
        for &b in &letters {
            words.push(vec![a, b]);
        }
    }
    let mut out = Vec::new();
    for lam in &lams {
        for ls in &words {
            let w = AlgebraWord::new(ls, lam.clone());
            let pid = params(n, d, &alloc::format!(",{lam},{}", word_label(ls)));
            let tw = tau(&w);
            out.push(CaseResult::check("tau-involution", pid.clone(), tau(&tw) == w));
            if ls.len() == 2 {
                let y = AlgebraWord::new(&ls[1..], lam.clone());
                let x = AlgebraWord::new(&ls[..1], y.target());
                let lhs = word_matrix(&tw, &basis);
                let rhs = word_matrix(&tau(&y), &basis).mul(&word_matrix(&tau(&x), &basis));
                out.push(CaseResult::check("tau-anti-hom", pid, lhs == rhs));
            }
        }
        // τ respects the commutator relation.
        for i in 1..n {
            for j in 1..n {
                let a = AlgebraWord::new(&[(i, Sign::Plus), (j, Sign::Minus)], lam.clone());
                let b = AlgebraWord::new(&[(j, Sign::Minus), (i, Sign::Plus)], lam.clone());
                let lhs = word_matrix(&tau(&a), &basis).sub(&word_matrix(&tau(&b), &basis));
                let rhs = if i == j {
                    word_matrix(&AlgebraWord::idempotent(lam.clone()), &basis).scale(&qint(lam.bar_at(i)))
                } else {
                    BlockMatrix::zero(n, d)
                };
                let pid = params(n, d, &alloc::format!(",{lam},i={i},j={j}"));
                out.push(CaseResult::check("tau-commutator", pid, lhs == rhs));
            }
        }
    }
    out
}

fn word_label(ls: &[(usize, Sign)]) -> String {
    if ls.is_empty() {
        return "1".into();
    }
    ls.iter().map(|&(i, s)| alloc::format!("E{}{i}", sign_char(s))).collect::<Vec<_>>().join("")
}

/// `π_{d',d}`: `1_λ ↦ 1_{λ-(k^n)}`, letters unchanged.
pub fn pi_project(w: &AlgebraWord, d_prime: usize, d: usize) -> Result<AlgebraWord, Error> {
    let n = w.source.n();
    if d_prime < d || (d_prime - d) % n != 0 {
        return Err(Error::Domain(alloc::format!("d'-d = {}-{} not a multiple of n={n}", d_prime, d)));
    }
    let k = ((d_prime - d) / n) as i64;
    let source = GlWeight(w.source.0.iter().map(|x| x - k).collect());
    Ok(AlgebraWord { letters: w.letters.clone(), source, coeff: w.coeff.clone() })
}

/// `ι_{n,m}`: pad weights with zeros.
pub fn iota_embed(w: &AlgebraWord, n: usize, m: usize) -> Result<AlgebraWord, Error> {
    if m < n || w.source.n() != n {
        return Err(Error::Domain(alloc::format!("iota needs m >= n = weight length, got n={n}, m={m}")));
    }
    let mut v = w.source.0.clone();
    v.resize(m, 0);
    Ok(AlgebraWord { letters: w.letters.clone(), source: GlWeight(v), coeff: w.coeff.clone() })
}

/// `π_{d',d}` sends words that vanish in `S(n,d')` to words vanishing in `S(n,d)`,
/// and commutator relations to commutator relations.
pub fn pi_check(n: usize, d: usize, k: usize) -> Vec<CaseResult> {
    let dp = d + n * k;
    let big = TensorBasis::new(n, dp);
    let small = TensorBasis::new(n, d);
    let letters: Vec<(usize, Sign)> = (1..n).flat_map(|i| [(i, Sign::Plus), (i, Sign::Minus)]).collect();
    let mut out = Vec::new();
    for lam in enumerate_lambda(n, dp as i64) {
        for &a in &letters {
            for &b in &letters {
                let w = AlgebraWord::new(&[a, b], lam.clone());
                let pw = pi_project(&w, dp, d).expect("divisible");
                let big_zero = word_matrix(&w, &big).is_zero();
                let small_zero = word_matrix(&pw, &small).is_zero();
                let pid = alloc::format!("n={n},d'={dp},d={d},{lam},{}", word_label(&[a, b]));
                out.push(CaseResult::check("pi-preserves-zero", pid, !big_zero || small_zero));
            }
        }
    }
    out
}

/// Number of semistandard tableaux of shape `λ` with entries in `1..=n`.
pub fn count_ssyt(shape: &[i64], n: usize) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    fill_ssyt(&cells, 0, n, &mut filling)
}

fn fill_ssyt(cells: &[(usize, usize)], k: usize, n: usize, f: &mut BTreeMap<(usize, usize), usize>) -> u64 {
    if k == cells.len() {
        return 1;
    }
    let (r, c) = cells[k];
    let lo_row = if c > 0 { f[&(r, c - 1)] } else { 1 };
    let lo_col = if r > 0 { f[&(r - 1, c)] + 1 } else { 1 };
    let mut total = 0;
    for v in lo_row.max(lo_col)..=n {
        f.insert((r, c), v);
        total += fill_ssyt(cells, k + 1, n, f);
    }
    f.remove(&(r, c));
    total
}

/// The two routes to `dim S_q(n,d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurDimension {
    pub binomial: BigInt,
    pub tableaux: BigInt,
}

/// `binom(n²+d-1, d)` and `Σ_{λ∈Λ⁺(n,d)} (#SSYT(λ, n))²`.
pub fn schur_dimension(n: usize, d: usize) -> Result<BigInt, Error> {
    let r = schur_dimension_routes(n, d);
    if r.binomial != r.tableaux {
        return Err(Error::Inconsistent(alloc::format!(
            "dimension routes disagree at n={n}, d={d}: {} vs {}",
            r.binomial, r.tableaux
        )));
    }
    Ok(r.binomial)
}

pub fn schur_dimension_routes(n: usize, d: usize) -> SchurDimension {
    let top = n * n + d - 1;
    let mut binomial = BigInt::one();
    for j in 0..d {
        binomial = binomial * BigInt::from(top - j) / BigInt::from(j + 1);
    }
    let tableaux = enumerate_dominant(n, d as i64)
        .iter()
        .map(|l| {
            let c = BigInt::from(count_ssyt(&l.0, n));
            &c * &c
        })
        .fold(BigInt::zero(), |a, b| a + b);
    SchurDimension { binomial, tableaux }
}

/// Dimension of `Ṡ(n,d)1_λ / [μ>λ]` with `q` specialized, by spanning with
/// words until the rank stabilizes.
pub fn weyl_quotient_dim(n: usize, d: usize, lambda: &GlWeight, q: &Q) -> usize {
    let basis = TensorBasis::new(n, d);
    let letters: Vec<(usize, Sign)> = (1..n).flat_map(|i| [(i, Sign::Plus), (i, Sign::Minus)]).collect();
    let coords: Vec<(GlWeight, usize, usize)> = basis
        .weights()
        .flat_map(|t| {
            let rows = basis.block(t).len();
            let cols = basis.block(lambda).len();
            (0..rows).flat_map(move |r| (0..cols).map(move |c| (r, c))).map(move |(r, c)| (t.clone(), r, c))
        })
        .collect();
    let flatten = |m: &BlockMatrix| -> Vec<Q> {
        let spec = m.specialize(q);
        coords
            .iter()
            .map(|(t, r, c)| spec.get(&(t.clone(), lambda.clone())).map_or_else(Q::zero, |b| b.get(*r, *c).clone()))
            .collect()
    };
    let mut all: Vec<Vec<Q>> = Vec::new();
    let mut ideal: Vec<Vec<Q>> = Vec::new();
    let mut frontier: Vec<Vec<(usize, Sign)>> = vec![vec![]];
    let mut last = (usize::MAX, usize::MAX);
    for _len in 0..=(2 * d + 2) {
        for ls in &frontier {
            let w = AlgebraWord::new(ls, lambda.clone());
            if w.is_zero_by_label(n, d as i64) {
                continue;
            }
            let v = flatten(&word_matrix(&w, &basis));
            if w.path().iter().any(|mu| mu > lambda) {
                ideal.push(v.clone());
            }
            all.push(v);
        }
        let r = (rank_of(&all), rank_of(&ideal));
        if r == last {
            break;
        }
        last = r;
        frontier = frontier
            .iter()
            .flat_map(|ls| letters.iter().map(move |&a| {
                let mut nl = vec![a];
                nl.extend_from_slice(ls);
                nl
            }))
            .filter(|ls| !AlgebraWord::new(ls, lambda.clone()).is_zero_by_label(n, d as i64))
            .collect();
    }
    last.0 - last.1
}

fn rank_of(rows: &[Vec<Q>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rank(&Matrix::from_rows(rows.to_vec()))
}
