//! Dense matrices over exact rings, with Gaussian elimination over `Q`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::scalars::{LaurentQ, Q};

/// The ring operations the dense matrices need.
pub trait Ring: Clone + PartialEq {
    fn rzero() -> Self;
    fn rone() -> Self;
    fn ris_zero(&self) -> bool;
    fn radd(&self, other: &Self) -> Self;
    fn rmul(&self, other: &Self) -> Self;
    fn rneg(&self) -> Self;
}

impl Ring for Q {
    fn rzero() -> Self {
        Zero::zero()
    }
    fn rone() -> Self {
        One::one()
    }
    fn ris_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn radd(&self, other: &Self) -> Self {
        self + other
    }
    fn rmul(&self, other: &Self) -> Self {
        self * other
    }
    fn rneg(&self) -> Self {
        -self
    }
}

impl Ring for LaurentQ {
    fn rzero() -> Self {
        LaurentQ::zero()
    }
    fn rone() -> Self {
        LaurentQ::one()
    }
    fn ris_zero(&self) -> bool {
        LaurentQ::is_zero(self)
    }
    fn radd(&self, other: &Self) -> Self {
        self + other
    }
    fn rmul(&self, other: &Self) -> Self {
        self * other
    }
    fn rneg(&self) -> Self {
        -self
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::rzero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::rone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data: Vec<T> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * c, "ragged rows");
        Matrix { rows: r, cols: c, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::ris_zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.ris_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.ris_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).radd(&a.rmul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sum");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.radd(b)).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| c.rmul(a)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&T::rone().rneg()))
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<T: Ring + fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<&T> = (0..self.cols).map(|j| self.get(i, j)).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix<Q>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !Zero::is_zero(m.get(i, c))) else { continue };
        if p != r {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
        }
        let inv = m.get(r, c).recip();
        for j in 0..m.cols {
            let v = m.get(r, j) * &inv;
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i == r || Zero::is_zero(m.get(i, c)) {
                continue;
            }
            let f = m.get(i, c).clone();
            for j in 0..m.cols {
                let v = m.get(i, j) - &f * m.get(r, j);
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix<Q>) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

/// Solve `A x = b`; returns one solution (free variables zero) or `None`.
pub fn solve(a: &Matrix<Q>, b: &[Q]) -> Option<Vec<Q>> {
    assert_eq!(a.rows, b.len());
    let mut aug = Matrix::<Q>::zeros(a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols, b[i].clone());
    }
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![<Q as Zero>::zero(); a.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(r, a.cols).clone();
    }
    Some(x)
}

/// Determinant of a square matrix over any commutative ring by cofactor expansion
/// along the first row (fine for the small sizes used here).
pub fn det<T: Ring>(m: &Matrix<T>) -> T {
    assert_eq!(m.rows, m.cols, "determinant of non-square matrix");
    det_rec(m, &(0..m.rows).collect::<Vec<_>>(), 0)
}

fn det_rec<T: Ring>(m: &Matrix<T>, cols: &[usize], row: usize) -> T {
    if cols.is_empty() {
        return T::rone();
    }
    let mut acc = T::rzero();
    for (k, &c) in cols.iter().enumerate() {
        let a = m.get(row, c);
        if a.ris_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = a.rmul(&det_rec(m, &rest, row + 1));
        acc = if k % 2 == 0 { acc.radd(&term) } else { acc.radd(&term.rneg()) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qr;

    #[test]
    fn solve_and_rank() {
        let a = Matrix::from_rows(vec![vec![qr(1), qr(2)], vec![qr(2), qr(4)]]);
        assert_eq!(rank(&a), 1);
        assert!(solve(&a, &[qr(1), qr(3)]).is_none());
        let x = solve(&a, &[qr(1), qr(2)]).unwrap();
        assert_eq!(x, vec![qr(1), qr(0)]);
        assert_eq!(det(&Matrix::from_rows(vec![vec![qr(1), qr(2)], vec![qr(3), qr(4)]])), qr(-2));
    }
}
