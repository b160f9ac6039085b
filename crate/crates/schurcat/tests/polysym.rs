use std::collections::BTreeMap;

use proptest::prelude::*;
use schurcat::polysym::{complete, divided_diff, divided_diff_chain, elem, identity_oracles, schur, Alphabet, ChainOrder, MPoly, Monomial, Var};
use schurcat::scalars::qr;

fn x(k: u32) -> MPoly {
    MPoly::var(Var(k))
}

fn alpha(k: u32) -> Alphabet {
    Alphabet::new((0..k).map(Var).collect())
}

/// Sum over subsets of size `k`.
fn elem_oracle(k: usize, n: u32) -> MPoly {
    let mut out = MPoly::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            out = out.add(&(0..n).filter(|j| mask >> j & 1 == 1).fold(MPoly::one(), |acc, j| acc.mul(&x(j))));
        }
    }
    out
}

/// Sum of `x^T` over semistandard tableaux of shape `shape` with entries `< n`.
fn schur_oracle(shape: &[u32], n: u32) -> MPoly {
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut fill = BTreeMap::new();
    let mut out = MPoly::zero();
    fn go(cells: &[(usize, usize)], k: usize, n: u32, fill: &mut BTreeMap<(usize, usize), u32>, out: &mut MPoly) {
        if k == cells.len() {
            *out = out.add(&fill.values().fold(MPoly::one(), |acc, &v| acc.mul(&MPoly::var(Var(v)))));
            return;
        }
        let (r, c) = cells[k];
        let lo_left = if c > 0 { fill[&(r, c - 1)] } else { 0 };
        let lo_up = if r > 0 { fill[&(r - 1, c)] + 1 } else { 0 };
        for v in lo_left.max(lo_up)..n {
            fill.insert((r, c), v);
            go(cells, k + 1, n, fill, out);
            fill.remove(&(r, c));
        }
    }
    go(&cells, 0, n, &mut fill, &mut out);
    out
}

fn arb_poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0u32..3, 0u32..3, 0u32..3, -4i64..=4), 0..6).prop_map(|ts| {
        ts.into_iter().fold(MPoly::zero(), |acc, (a, b, c, k)| {
            acc.add(&MPoly::term(qr(k), Monomial::from_pairs(vec![(Var(0), a), (Var(1), b), (Var(2), c)])))
        })
    })
}

#[test]
fn symmetric_function_examples() {
    let xy = alpha(2);
    assert_eq!(elem(1, &xy), x(0).add(&x(1)));
    assert_eq!(complete(2, &alpha(1)), x(0).mul(&x(0)));
    assert_eq!(schur(&[1, 1], &xy), x(0).mul(&x(1)));
    assert!(elem(3, &xy).is_zero());
    assert!(complete(-1, &xy).is_zero());
}

#[test]
fn elementary_matches_subset_sum() {
    for n in 0..=4 {
        for k in 0..=n as usize + 1 {
            assert_eq!(elem(k as i64, &alpha(n)), elem_oracle(k, n), "e_{k} in {n}");
        }
    }
}

#[test]
fn schur_matches_tableau_sum() {
    let shapes: &[&[u32]] = &[&[1], &[2], &[1, 1], &[3], &[2, 1], &[1, 1, 1], &[4], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]];
    for n in 1..=3 {
        for s in shapes {
            let p = schur(s, &alpha(n));
            assert_eq!(p, schur_oracle(s, n), "{s:?} in {n}");
            assert!(p.has_nonneg_integer_coeffs());
        }
    }
}

#[test]
fn divided_difference_examples() {
    let (a, b) = (Var(0), Var(1));
    assert_eq!(divided_diff(&x(0).mul(&x(0)), a, b), x(0).add(&x(1)));
    assert!(divided_diff(&x(0).mul(&x(1)), a, b).is_zero());
    let p = x(0).sub(&x(1)).mul(&x(0));
    assert_eq!(divided_diff(&p, a, b), x(0).add(&x(1)));
}

#[test]
fn divided_difference_chains() {
    let y = Var(9);
    let one = Alphabet::new(vec![Var(0)]);
    let two = Alphabet::new(vec![Var(0), Var(1)]);
    let y2 = MPoly::var_pow(y, 2);
    assert_eq!(divided_diff_chain(&y2, &one, y, ChainOrder::Right), MPoly::var(y).add(&x(0)));
    assert!(divided_diff_chain(&MPoly::one(), &one, y, ChainOrder::Left).is_zero());
    let y3 = MPoly::var_pow(y, 3);
    assert_eq!(divided_diff_chain(&y3, &two, y, ChainOrder::Right), MPoly::var(y).add(&x(0)).add(&x(1)));
    for k in 0..=3u32 {
        let a = alpha(k);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for n in 0..6 {
            let p = MPoly::var_pow(y, n);
            let l = divided_diff_chain(&p, &a, y, ChainOrder::Left);
            let r = divided_diff_chain(&p, &a, y, ChainOrder::Right);
            assert_eq!(r, l.scale_int(sign));
        }
    }
}

#[test]
fn symmetric_function_identities_hold() {
    let cases = identity_oracles(5, 6);
    assert!(!cases.is_empty());
    assert!(cases.iter().all(|c| c.passed), "{:?}", cases.iter().find(|c| !c.passed));
}

proptest! {
    #[test]
    fn divided_difference_squares_to_zero(p in arb_poly()) {
        let d = divided_diff(&p, Var(0), Var(1));
        prop_assert!(divided_diff(&d, Var(0), Var(1)).is_zero());
        prop_assert_eq!(d.swap(Var(0), Var(1)), d);
    }

    #[test]
    fn divided_difference_leibniz(f in arb_poly(), g in arb_poly()) {
        let (a, b) = (Var(0), Var(1));
        let lhs = divided_diff(&f.mul(&g), a, b);
        let rhs = divided_diff(&f, a, b).mul(&g).add(&f.swap(a, b).mul(&divided_diff(&g, a, b)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divided_difference_reconstructs(p in arb_poly()) {
        // p - p|swap = (x - y) ∂p
        let (a, b) = (Var(0), Var(1));
        let lhs = p.sub(&p.swap(a, b));
        prop_assert_eq!(lhs, x(0).sub(&x(1)).mul(&divided_diff(&p, a, b)));
    }

    #[test]
    fn braid_relation_for_divided_differences(p in arb_poly()) {
        let d = |q: &MPoly, a: u32, b: u32| divided_diff(q, Var(a), Var(b));
        let lhs = d(&d(&d(&p, 0, 1), 1, 2), 0, 1);
        let rhs = d(&d(&d(&p, 1, 2), 0, 1), 1, 2);
        prop_assert_eq!(lhs, rhs);
    }
}
