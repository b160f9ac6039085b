//! Weight combinatorics for `gl_n` and `sl_n`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

/// A `gl_n` weight `(λ_1, ..., λ_n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GlWeight(pub Vec<i64>);

/// An `sl_n` weight with `n-1` entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SlWeight(pub Vec<i64>);

/// Either a `gl_n` weight or the symbol `*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StarOrWeight {
    Weight(GlWeight),
    Star,
}

/// Raising (`+`) or lowering (`-`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl GlWeight {
    pub fn new(entries: &[i64]) -> Self {
        GlWeight(entries.to_vec())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// 1-based entry `λ_i`.
    pub fn at(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// `λ̄_i = λ_i - λ_{i+1}`.
    pub fn bar_at(&self, i: usize) -> i64 {
        self.at(i) - self.at(i + 1)
    }

    pub fn in_lambda(&self, n: usize, d: i64) -> bool {
        self.n() == n && self.0.iter().all(|&x| x >= 0) && self.size() == d
    }

    /// `k_i = λ_1 + ... + λ_i`.
    pub fn partial_sum(&self, i: usize) -> i64 {
        self.0[..i].iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Debug for SlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

/// Componentwise differences `λ_i - λ_{i+1}`.
pub fn bar(lambda: &GlWeight) -> SlWeight {
    SlWeight(lambda.0.windows(2).map(|w| w[0] - w[1]).collect())
}

/// The unique `λ` with `bar(λ) = μ` and `Σ λ_i = d`, or `*`.
pub fn phi(mu: &SlWeight, n: usize, d: i64) -> StarOrWeight {
    if mu.0.len() + 1 != n {
        return StarOrWeight::Star;
    }
    // λ_j = λ_n + Σ_{k>=j} μ_k, so n λ_n = d - Σ_j Σ_{k>=j} μ_k.
    let mut tails = vec![0i64; n];
    for j in (0..n - 1).rev() {
        tails[j] = tails[j + 1] + mu.0[j];
    }
    let rest = d - tails.iter().sum::<i64>();
    let n_i = n as i64;
    if rest.rem_euclid(n_i) != 0 {
        return StarOrWeight::Star;
    }
    let last = rest / n_i;
    StarOrWeight::Weight(GlWeight(tails.iter().map(|t| last + t).collect()))
}

/// All of `Λ(n,d)`, in lexicographically decreasing order.
pub fn enumerate_lambda(n: usize, d: i64) -> Vec<GlWeight> {
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(GlWeight(Vec::new()));
        }
        return out;
    }
    let mut cur = Vec::with_capacity(n);
    compositions(n, d, &mut cur, &mut out);
    out
}

fn compositions(n: usize, d: i64, cur: &mut Vec<i64>, out: &mut Vec<GlWeight>) {
    if cur.len() + 1 == n {
        cur.push(d);
        out.push(GlWeight(cur.clone()));
        cur.pop();
        return;
    }
    for first in (0..=d).rev() {
        cur.push(first);
        compositions(n, d - first, cur, out);
        cur.pop();
    }
}

/// `Λ⁺(n,d)`: the weakly decreasing elements of `Λ(n,d)`.
pub fn enumerate_dominant(n: usize, d: i64) -> Vec<GlWeight> {
    enumerate_lambda(n, d).into_iter().filter(GlWeight::is_dominant).collect()
}

/// The root `α_i = ε_i - ε_{i+1}` as a `gl_n` vector.
pub fn root(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i - 1] = 1;
    v[i] = -1;
    v
}

/// `λ ± α_i`.
pub fn shift(lambda: &GlWeight, i: usize, sign: Sign) -> GlWeight {
    let mut v = lambda.0.clone();
    v[i - 1] += sign.as_i64();
    v[i] -= sign.as_i64();
    GlWeight(v)
}

/// The symmetric pairing `i·j`.
pub fn cartan(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&SlWeight(vec![0]), 2, 2), StarOrWeight::Weight(GlWeight::new(&[1, 1])));
        assert_eq!(phi(&SlWeight(vec![0]), 2, 1), StarOrWeight::Star);
        assert_eq!(phi(&SlWeight(vec![1]), 2, 3), StarOrWeight::Weight(GlWeight::new(&[2, 1])));
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_dominant(2, 2), vec![GlWeight::new(&[2, 0]), GlWeight::new(&[1, 1])]);
        assert_eq!(enumerate_lambda(1, 4), vec![GlWeight::new(&[4])]);
        assert_eq!(
            enumerate_lambda(3, 1),
            vec![GlWeight::new(&[1, 0, 0]), GlWeight::new(&[0, 1, 0]), GlWeight::new(&[0, 0, 1])]
        );
    }

    #[test]
    fn shift_and_cartan() {
        assert_eq!(shift(&GlWeight::new(&[1, 1]), 1, Sign::Plus), GlWeight::new(&[2, 0]));
        assert_eq!(cartan(1, 2), -1);
        assert_eq!(cartan(1, 3), 0);
        assert_eq!(bar(&GlWeight::new(&[2, 0, 1])), SlWeight(vec![2, -1]));
    }
}
