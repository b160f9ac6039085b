//! Sparse multivariate polynomials over `Q`, symmetric functions and
//! divided difference operators.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::linalg::{det, Matrix, Ring};
use crate::report::CaseResult;
use crate::scalars::{qr, Q};

/// An interned variable identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub u32);

/// Maps variable names to identifiers and back.
#[derive(Clone, Debug, Default)]
pub struct VarTable {
    names: Vec<String>,
}

impl VarTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The identifier for `name`, allocating one on first use.
    pub fn intern(&mut self, name: &str) -> Var {
        if let Some(k) = self.names.iter().position(|n| n == name) {
            return Var(k as u32);
        }
        self.names.push(name.to_string());
        Var((self.names.len() - 1) as u32)
    }

    pub fn name(&self, v: Var) -> String {
        self.names.get(v.0 as usize).cloned().unwrap_or_else(|| alloc::format!("v{}", v.0))
    }

    /// An alphabet of fresh variables `prefix1, ..., prefixk`.
    pub fn alphabet(&mut self, prefix: &str, k: usize) -> Alphabet {
        Alphabet::new((1..=k).map(|j| self.intern(&alloc::format!("{prefix}{j}"))).collect())
    }
}

/// An ordered list of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Alphabet {
    pub vars: Vec<Var>,
    /// Free-form role tag (strand color, thickness, ...).
    pub role: String,
}

impl Alphabet {
    pub fn new(vars: Vec<Var>) -> Self {
        Alphabet { vars, role: String::new() }
    }

    pub fn with_role(mut self, role: &str) -> Self {
        self.role = role.to_string();
        self
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    /// Concatenation of two alphabets.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut vars = self.vars.clone();
        vars.extend(other.vars.iter().copied());
        Alphabet::new(vars)
    }
}

/// A monomial: sorted `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_pairs(mut pairs: Vec<(Var, u32)>) -> Self {
        pairs.retain(|p| p.1 > 0);
        pairs.sort();
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0.iter().find(|p| p.0 == v).map_or(0, |p| p.1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Remove `v` and return its exponent together with the rest.
    pub fn take(&self, v: Var) -> (u32, Monomial) {
        let mut rest = self.0.clone();
        match rest.iter().position(|p| p.0 == v) {
            Some(k) => {
                let e = rest.remove(k).1;
                (e, Monomial(rest))
            }
            None => (0, Monomial(rest)),
        }
    }

    /// Split into the part in `vars` and the rest.
    pub fn split(&self, keep: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().partition(|p| keep(p.0));
        (Monomial(a), Monomial(b))
    }

    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)).collect())
    }
}

/// A polynomial with rational coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Q>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(qr(c))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Q::one(), Monomial::var(v, 1))
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        Self::term(Q::one(), Monomial::var(v, e))
    }

    pub fn term(c: Q, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Q)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Q {
        self.coeff(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &MPoly, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        out.add_scaled(other, &Q::one());
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one());
        out
    }

    pub fn neg(&self) -> MPoly {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn scale_int(&self, c: i64) -> MPoly {
        self.scale(&qr(c))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect() }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut out = MPoly::zero();
        for (m, c) in &small.terms {
            for (k, v) in &big.terms {
                out.add_term(m.mul(k), c * v);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut out = MPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True when every term has total degree `k`.
    pub fn is_homogeneous_of(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == k)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// All variables that occur.
    pub fn vars(&self) -> Vec<Var> {
        let mut out: Vec<Var> = self.terms.keys().flat_map(|m| m.0.iter().map(|p| p.0)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Write `self = Σ_k c_k v^k`; returns the coefficients indexed by `k`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MPoly> {
        let mut out = vec![MPoly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.take(v);
            out[e as usize].add_term(rest, c.clone());
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    /// Group terms by the monomial in the variables selected by `keep`.
    pub fn split_by(&self, keep: impl Fn(Var) -> bool) -> BTreeMap<Monomial, MPoly> {
        let mut out: BTreeMap<Monomial, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (a, b) = m.split(&keep);
            out.entry(a).or_default().add_term(b, c.clone());
        }
        out
    }

    /// Rename variables (the renaming need not be injective).
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.rename(&f), c.clone());
        }
        out
    }

    /// Swap two variables.
    pub fn swap(&self, x: Var, y: Var) -> MPoly {
        self.rename(|v| if v == x { y } else if v == y { x } else { v })
    }

    /// Simultaneous substitution of variables by polynomials.
    pub fn substitute(&self, sub: &BTreeMap<Var, MPoly>) -> MPoly {
        let mut out = MPoly::zero();
        let mut cache: BTreeMap<(Var, u32), MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut acc = MPoly::constant(c.clone());
            let mut plain = Vec::new();
            for &(v, e) in &m.0 {
                match sub.get(&v) {
                    Some(p) => {
                        let pw = cache.entry((v, e)).or_insert_with(|| p.pow(e)).clone();
                        acc = acc.mul(&pw);
                    }
                    None => plain.push((v, e)),
                }
            }
            out.add_scaled(&acc.mul_monomial(&Monomial(plain), &Q::one()), &Q::one());
        }
        out
    }

    pub fn substitute_var(&self, v: Var, p: &MPoly) -> MPoly {
        let mut sub = BTreeMap::new();
        sub.insert(v, p.clone());
        self.substitute(&sub)
    }

    /// Evaluate at a point; unassigned variables count as zero.
    pub fn eval(&self, point: &BTreeMap<Var, Q>) -> Q {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                let x = point.get(&v).cloned().unwrap_or_else(Q::zero);
                t *= num_traits::pow(x, e as usize);
            }
            acc += t;
        }
        acc
    }

    /// Exact quotient by `x - y`; `None` if the division leaves a remainder.
    pub fn div_by_difference(&self, x: Var, y: Var) -> Option<MPoly> {
        // Synthetic division along x: if a = Σ a_k x^k then b_{k-1} = a_k + y b_k.
        let a = self.coeffs_in(x);
        if a.is_empty() {
            return Some(MPoly::zero());
        }
        let top = a.len() - 1;
        let mut quot = MPoly::zero();
        let mut carry = MPoly::zero();
        for k in (1..=top).rev() {
            let b = a[k].add(&carry.mul(&MPoly::var(y)));
            quot = quot.add(&b.mul(&MPoly::var_pow(x, (k - 1) as u32)));
            carry = b;
        }
        let rem = a[0].add(&carry.mul(&MPoly::var(y)));
        rem.is_zero().then_some(quot)
    }

    /// Sum of `c` over all terms (value at the all-ones point).
    pub fn coefficient_sum(&self) -> Q {
        self.terms.values().fold(Q::zero(), |a, c| a + c)
    }

    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Canonical text: graded-lex descending monomials with the given names.
    pub fn display_with(&self, name: &dyn Fn(Var) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Monomial, &Q)> = self.terms.iter().collect();
        terms.sort_by(|a, b| grlex(b.0, a.0));
        let mut s = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = m
                .0
                .iter()
                .map(|&(v, e)| if e == 1 { name(v) } else { alloc::format!("{}^{}", name(v), e) })
                .collect();
            if mono.is_empty() {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(&mono.join("*"));
            } else {
                s.push_str(&alloc::format!("{}*{}", mag, mono.join("*")));
            }
        }
        s
    }
}

/// Graded lexicographic comparison (degree first, then variable order).
fn grlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (p, q) in a.0.iter().zip(&b.0) {
            if p.0 != q.0 {
                return q.0.cmp(&p.0);
            }
            if p.1 != q.1 {
                return p.1.cmp(&q.1);
            }
        }
        a.0.len().cmp(&b.0.len())
    })
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&|v| alloc::format!("v{}", v.0)))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for MPoly {
    fn rzero() -> Self {
        MPoly::zero()
    }
    fn rone() -> Self {
        MPoly::one()
    }
    fn ris_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn radd(&self, other: &Self) -> Self {
        MPoly::add(self, other)
    }
    fn rmul(&self, other: &Self) -> Self {
        MPoly::mul(self, other)
    }
    fn rneg(&self) -> Self {
        MPoly::neg(self)
    }
}

/// Elementary symmetric polynomial `e_k(A)`; zero for `k < 0` or `k > |A|`.
pub fn elem(k: i64, a: &Alphabet) -> MPoly {
    if k < 0 || k as usize > a.len() {
        return MPoly::zero();
    }
    // Build e_0..e_k incrementally over the alphabet.
    let k = k as usize;
    let mut e = vec![MPoly::zero(); k + 1];
    e[0] = MPoly::one();
    for &v in &a.vars {
        for j in (1..=k).rev() {
            let t = e[j - 1].mul(&MPoly::var(v));
            e[j] = e[j].add(&t);
        }
    }
    e.pop().unwrap_or_default()
}

/// Complete homogeneous symmetric polynomial `h_k(A)`; zero for `k < 0`.
pub fn complete(k: i64, a: &Alphabet) -> MPoly {
    if k < 0 {
        return MPoly::zero();
    }
    let k = k as usize;
    let mut h = vec![MPoly::zero(); k + 1];
    h[0] = MPoly::one();
    for &v in &a.vars {
        // h_j(A ∪ v) = Σ_i v^i h_{j-i}(A)
        for j in 1..=k {
            let t = h[j - 1].mul(&MPoly::var(v));
            h[j] = h[j].add(&t);
        }
    }
    h.pop().unwrap_or_default()
}

/// Schur polynomial `s_α(A)` by the Jacobi-Trudi determinant `det(h_{α_i+j-i})`.
pub fn schur(alpha: &[u32], a: &Alphabet) -> MPoly {
    let l = alpha.iter().rposition(|&x| x > 0).map_or(0, |p| p + 1);
    if l == 0 {
        return MPoly::one();
    }
    let rows = (0..l)
        .map(|i| (0..l).map(|j| complete(alpha[i] as i64 + j as i64 - i as i64, a)).collect())
        .collect();
    det(&Matrix::from_rows(rows))
}

/// The divided difference `∂_{xy} p = (p - p|_{x↔y}) / (x - y)`.
pub fn divided_diff(p: &MPoly, x: Var, y: Var) -> MPoly {
    if x == y {
        return MPoly::zero();
    }
    p.sub(&p.swap(x, y))
        .div_by_difference(x, y)
        .expect("antisymmetric polynomial is divisible by x - y")
}

/// Which side of the pair the alphabet sits on in an iterated divided difference.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainOrder {
    /// `∂_{A y} = ∂_{a_1 y} ∂_{a_2 y} ... ∂_{a_k y}`.
    Left,
    /// `∂_{y A} = ∂_{y a_1} ∂_{y a_2} ... ∂_{y a_k}`.
    Right,
}

/// Iterated divided differences; the rightmost operator acts first.
pub fn divided_diff_chain(p: &MPoly, a: &Alphabet, y: Var, order: ChainOrder) -> MPoly {
    let mut out = p.clone();
    for &x in a.vars.iter().rev() {
        out = match order {
            ChainOrder::Left => divided_diff(&out, x, y),
            ChainOrder::Right => divided_diff(&out, y, x),
        };
    }
    out
}

/// Check the four symmetric-function identities used by the bimodule calculus
/// for alphabets of size up to `max_size` and degrees up to `max_deg`.
pub fn identity_oracles(max_size: usize, max_deg: i64) -> Vec<CaseResult> {
    let mut vt = VarTable::new();
    let y = vt.intern("y");
    let x = vt.intern("x");
    let mut out = Vec::new();
    for k in 0..=max_size {
        let xs = vt.alphabet("a", k);
        // use1: ∂_{y A}(y^N) = h_{N-k}(y, A)
        for n in 0..=max_deg {
            let lhs = divided_diff_chain(&MPoly::var_pow(y, n as u32), &xs, y, ChainOrder::Right);
            let rhs = complete(n - k as i64, &Alphabet::new(vec![y]).union(&xs));
            out.push(CaseResult::check("use1", alloc::format!("k={k},N={n}"), lhs == rhs));
        }
        // use2: Σ_j (-1)^j e_j(A) h_{m-j}(A) = δ_{m,0}
        for m in 0..=max_deg {
            let mut acc = MPoly::zero();
            for j in 0..=m {
                let t = elem(j, &xs).mul(&complete(m - j, &xs));
                acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            let want = if m == 0 { MPoly::one() } else { MPoly::zero() };
            out.push(CaseResult::check("use2", alloc::format!("k={k},m={m}"), acc == want));
        }
        // use3 and use4 with t = (x, u), |u| = k
        let t = Alphabet::new(vec![x]).union(&xs);
        for l in 1..=(k as i64 + 1) {
            let mut rhs = MPoly::zero();
            for j in 0..=l {
                let term = MPoly::var_pow(x, j as u32).mul(&elem(l - j, &t));
                rhs = if j % 2 == 0 { rhs.add(&term) } else { rhs.sub(&term) };
            }
            out.push(CaseResult::check("use3", alloc::format!("a={k},l={l}"), elem(l, &xs) == rhs));
            let rhs4 = elem(l, &xs).add(&MPoly::var(x).mul(&elem(l - 1, &xs)));
            out.push(CaseResult::check("use4", alloc::format!("a={k},l={l}"), elem(l, &t) == rhs4));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (Var, Var) {
        (Var(0), Var(1))
    }

    #[test]
    fn divided_difference_examples() {
        let (x, y) = xy();
        let xx = MPoly::var(x);
        let yy = MPoly::var(y);
        assert_eq!(divided_diff(&xx.pow(2), x, y), xx.add(&yy));
        assert!(divided_diff(&xx.mul(&yy), x, y).is_zero());
        assert_eq!(divided_diff(&xx.sub(&yy).mul(&xx), x, y), xx.add(&yy));
    }

    #[test]
    fn chain_examples() {
        let (x, y) = xy();
        let a = Alphabet::new(vec![x]);
        let yy = MPoly::var(y);
        assert_eq!(divided_diff_chain(&yy.pow(2), &a, y, ChainOrder::Right), yy.add(&MPoly::var(x)));
        assert!(divided_diff_chain(&MPoly::one(), &a, y, ChainOrder::Left).is_zero());
        let b = Alphabet::new(vec![Var(2), Var(3)]);
        let want = yy.add(&MPoly::var(Var(2))).add(&MPoly::var(Var(3)));
        assert_eq!(divided_diff_chain(&yy.pow(3), &b, y, ChainOrder::Right), want);
    }

    #[test]
    fn symmetric_function_examples() {
        let (x, y) = xy();
        let a = Alphabet::new(vec![x, y]);
        assert_eq!(elem(1, &a), MPoly::var(x).add(&MPoly::var(y)));
        assert_eq!(complete(2, &Alphabet::new(vec![x])), MPoly::var_pow(x, 2));
        assert_eq!(schur(&[1, 1], &a), MPoly::var(x).mul(&MPoly::var(y)));
        assert!(elem(3, &a).is_zero());
        assert_eq!(complete(0, &Alphabet::default()), MPoly::one());
        assert!(complete(2, &Alphabet::default()).is_zero());
    }

    #[test]
    fn identities_hold() {
        let cases = identity_oracles(3, 5);
        assert!(cases.iter().all(|c| c.passed), "{:?}", cases.iter().find(|c| !c.passed));
    }

    #[test]
    fn display_is_graded() {
        let (x, y) = xy();
        let p = MPoly::var(x).add(&MPoly::var_pow(y, 2).scale_int(-3)).add(&MPoly::int(2));
        assert_eq!(p.display_with(&|v| if v == x { "x".into() } else { "y".into() }), "-3*y^2 + x + 2");
    }
}
