//! Exact Laurent polynomials in `q` with rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Rational coefficient type used throughout the crate.
pub type Q = num_rational::BigRational;

/// Integer to rational.
pub fn qr(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational `n/m`.
pub fn qfrac(n: i64, m: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(m))
}

/// A Laurent polynomial `sum c_k q^k`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentQ {
    terms: BTreeMap<i64, Q>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(qr(c))
    }

    /// `c * q^k`.
    pub fn monomial(c: Q, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(Q::one(), k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> Q {
        self.terms.get(&k).cloned().unwrap_or_else(Q::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    fn add_term(&mut self, k: i64, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiply by `q^s`.
    pub fn shift(&self, s: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (k + s, v.clone())).collect(),
        }
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (-k, v.clone())).collect(),
        }
    }

    /// Evaluate at a rational value of `q` (nonzero if negative powers occur).
    pub fn eval(&self, q: &Q) -> Q {
        let mut acc = Q::zero();
        for (k, c) in &self.terms {
            acc += c * pow_q(q, *k);
        }
        acc
    }

    /// Exact division by a nonzero divisor; fails when the quotient is not Laurent.
    pub fn div_exact(&self, divisor: &LaurentQ) -> Result<LaurentQ, Error> {
        let (dmin, dmax) = match (divisor.min_exp(), divisor.max_exp()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::Domain("division by zero Laurent polynomial".into())),
        };
        let lead = divisor.coeff(dmax);
        let mut rem = self.clone();
        let mut quo = LaurentQ::zero();
        while let Some(top) = rem.max_exp() {
            let bottom = rem.min_exp().unwrap_or(top);
            if top - bottom < dmax - dmin {
                return Err(Error::Domain("inexact Laurent division".into()));
            }
            let c = rem.coeff(top) / &lead;
            let k = top - dmax;
            quo.add_term(k, c.clone());
            for (e, v) in divisor.terms() {
                rem.add_term(e + k, -(v * &c));
            }
        }
        Ok(quo)
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }
}

fn pow_q(q: &Q, k: i64) -> Q {
    let base = if k < 0 { q.recip() } else { q.clone() };
    num_traits::pow(base, k.unsigned_abs() as usize)
}

impl Add for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentQ {
    type Output = LaurentQ;
    fn add(mut self, rhs: LaurentQ) -> LaurentQ {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentQ> for LaurentQ {
    fn add_assign(&mut self, rhs: &LaurentQ) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl Sub for &LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }
}

impl Sub for LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: LaurentQ) -> LaurentQ {
        &self - &rhs
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        self.scale(&-Q::one())
    }
}

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        -&self
    }
}

impl Mul for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = LaurentQ::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: LaurentQ) -> LaurentQ {
        &self * &rhs
    }
}

impl fmt::Display for LaurentQ {
    /// Sum of `c*q^k` terms in descending exponent order; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            write!(f, "{}*q^{}", mag, k)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl core::str::FromStr for LaurentQ {
    type Err = Error;

    /// Parses sums of `c*q^k` terms; `c*` and `^k` may be omitted, e.g. `q + q^-1`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(alloc::format!("bad Laurent polynomial `{s}`"));
        let mut out = LaurentQ::zero();
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(out);
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev.is_some() && prev != Some('^') {
                pieces.push((neg, core::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '-' && prev.is_none() {
                neg = true;
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        pieces.push((neg, cur));
        for (neg, body) in pieces {
            let (c, k) = match body.split_once('q') {
                Some((c, k)) => {
                    let c = match c.strip_suffix('*') {
                        Some(c) => c.parse::<Q>().map_err(|_| bad())?,
                        None if c.is_empty() => Q::one(),
                        None => return Err(bad()),
                    };
                    let k = match k.strip_prefix('^') {
                        Some(k) => k.parse::<i64>().map_err(|_| bad())?,
                        None if k.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    (c, k)
                }
                None => (body.parse::<Q>().map_err(|_| bad())?, 0),
            };
            out.add_term(k, if neg { -c } else { c });
        }
        Ok(out)
    }
}

/// Balanced quantum integer `[a] = (q^a - q^{-a})/(q - q^{-1})`.
pub fn qint(a: i64) -> LaurentQ {
    let mut out = LaurentQ::zero();
    let m = a.abs();
    let sign = if a < 0 { -Q::one() } else { Q::one() };
    let mut k = -(m - 1);
    while k <= m - 1 {
        out.add_term(k, sign.clone());
        k += 2;
    }
    out
}

/// `[m]! = [m][m-1]...[1]`.
pub fn qfact(m: u32) -> LaurentQ {
    (1..=i64::from(m)).fold(LaurentQ::one(), |acc, j| &acc * &qint(j))
}

/// Quantum binomial `[m]!/([k]![m-k]!)`.
pub fn qbinom(m: u32, k: u32) -> Result<LaurentQ, Error> {
    if k > m {
        return Err(Error::Domain(alloc::format!("qbinom({m},{k}) needs k <= m")));
    }
    qfact(m).div_exact(&(&qfact(k) * &qfact(m - k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_small() {
        assert_eq!(qint(2), LaurentQ::q_pow(1) + LaurentQ::q_pow(-1));
        assert!(qint(0).is_zero());
        assert_eq!(qint(-3), -(LaurentQ::q_pow(2) + LaurentQ::one() + LaurentQ::q_pow(-2)));
    }

    #[test]
    fn display_round_trip() {
        let p = qfact(3);
        assert_eq!(p.to_string(), "1*q^3 + 2*q^1 + 2*q^-1 + 1*q^-3");
        assert_eq!(p.to_string().parse::<LaurentQ>().unwrap(), p);
        let n = -qint(2).scale(&qfrac(1, 2));
        assert_eq!(n.to_string().parse::<LaurentQ>().unwrap(), n);
    }

    #[test]
    fn qbinom_domain() {
        assert!(qbinom(1, 2).is_err());
        assert_eq!(qbinom(2, 1).unwrap(), qint(2));
    }
}
