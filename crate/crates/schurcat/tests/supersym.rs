use std::collections::BTreeMap;

use proptest::prelude::*;
use schurcat::polysym::{schur, Alphabet, MPoly, Var};
use schurcat::supersym::{
    conjugate, conjugate_duality_check, in_gamma, is_supersymmetric, lemma_suite, lr_expand, lr_tableau, partitions, super_elem,
    super_schur, SuperPair,
};

fn v(k: u32) -> MPoly {
    MPoly::var(Var(k))
}

/// `Π(1 - y_r Z) / Π(1 - x_s Z)` expanded to order `top`, as coefficients of `Z^j`.
fn generating_series(p: &SuperPair, top: usize) -> Vec<MPoly> {
    let mut series = vec![MPoly::zero(); top + 1];
    series[0] = MPoly::one();
    for &x in &p.x.vars {
        // multiply by 1/(1 - xZ) = Σ x^k Z^k
        let old = series.clone();
        for j in 0..=top {
            series[j] = (0..=j).fold(MPoly::zero(), |acc, k| acc.add(&old[j - k].mul(&MPoly::var_pow(x, k as u32))));
        }
    }
    for &y in &p.y.vars {
        let old = series.clone();
        for j in 1..=top {
            series[j] = old[j].sub(&old[j - 1].mul(&MPoly::var(y)));
        }
    }
    series
}

#[test]
fn super_elementary_examples() {
    let p = SuperPair::standard(1, 1);
    assert_eq!(super_elem(1, &p), v(0).sub(&v(1)));
    assert_eq!(super_elem(0, &SuperPair::standard(3, 2)), MPoly::one());
    assert!(super_elem(-1, &p).is_zero());
}

#[test]
fn super_elementary_generating_function() {
    for (a, b) in [(2, 2), (1, 3), (3, 0), (0, 2)] {
        let p = SuperPair::standard(a, b);
        let series = generating_series(&p, 4);
        for (j, s) in series.iter().enumerate() {
            assert_eq!(&super_elem(j as i64, &p), s, "a={a} b={b} j={j}");
        }
    }
}

#[test]
fn super_schur_examples() {
    assert_eq!(super_schur(&[1], &SuperPair::standard(1, 0)), v(0));
    assert!(super_schur(&[2], &SuperPair::standard(0, 1)).is_zero());
    let p = SuperPair::standard(1, 1);
    let e1 = v(0).sub(&v(1));
    let e2 = super_elem(2, &p);
    assert_eq!(super_schur(&[1, 1], &p), e1.mul(&e1).sub(&e2));
    assert_eq!(super_schur(&[], &p), MPoly::one());
}

#[test]
fn littlewood_richardson_examples() {
    let p = SuperPair::standard(2, 2);
    let pieri: BTreeMap<Vec<u32>, i64> = [(vec![2], 1), (vec![1, 1], 1)].into_iter().collect();
    assert_eq!(lr_expand(&[1], &[1], &p).unwrap(), pieri);
    assert_eq!(lr_tableau(&[1], &[1]), pieri);
    let e: BTreeMap<Vec<u32>, i64> = [(vec![3], 1), (vec![2, 1], 1)].into_iter().collect();
    assert_eq!(lr_expand(&[2], &[1], &p).unwrap(), e);
    let single: BTreeMap<Vec<u32>, i64> = [(vec![2, 1], 1)].into_iter().collect();
    assert_eq!(lr_expand(&[], &[2, 1], &p).unwrap(), single);
    // c^{(3,2,1)}_{(2,1),(2,1)} = 2
    assert_eq!(lr_tableau(&[2, 1], &[2, 1])[&vec![3, 2, 1]], 2);
}

#[test]
fn duality_examples() {
    assert!(conjugate_duality_check(&[1], &SuperPair::standard(1, 1)));
    assert!(conjugate_duality_check(&[2], &SuperPair::standard(1, 1)));
    assert!(conjugate_duality_check(&[1, 1], &SuperPair::standard(2, 2)));
    assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
}

#[test]
fn single_alphabet_specialisations() {
    for k in 0..=4 {
        for al in partitions(k) {
            for a in 1..=3usize {
                let p = SuperPair::standard(a, 0);
                let xs = Alphabet::new((0..a as u32).map(Var).collect());
                assert_eq!(super_schur(&al, &p), schur(&al, &xs));
                let q = SuperPair::standard(0, a);
                let ys = Alphabet::new((0..a as u32).map(Var).collect());
                let want = schur(&conjugate(&al), &ys);
                let want = if k % 2 == 0 { want } else { want.neg() };
                assert_eq!(super_schur(&al, &q), want, "{al:?} {a}");
            }
        }
    }
}

#[test]
fn lemma_suite_passes() {
    let r = lemma_suite(4, 3, 5);
    assert!(r.passed > 0);
    assert!(r.all_passed(), "{:?}", r.failures().next());
}

proptest! {
    #[test]
    fn vanishing_exactly_off_the_hook(a in 0usize..3, b in 0usize..3, k in 0u32..5, pick in 0usize..16) {
        let parts = partitions(k);
        let al = &parts[pick % parts.len()];
        let pi = super_schur(al, &SuperPair::standard(a, b));
        prop_assert_eq!(pi.is_zero(), !in_gamma(al, a, b));
    }

    #[test]
    fn super_schur_is_supersymmetric(a in 1usize..3, b in 1usize..3, k in 0u32..5, pick in 0usize..16) {
        let parts = partitions(k);
        let al = &parts[pick % parts.len()];
        let p = SuperPair::standard(a, b);
        prop_assert!(is_supersymmetric(&super_schur(al, &p), &p, Var(99)));
        prop_assert!(is_supersymmetric(&super_elem(k as i64, &p), &p, Var(99)));
    }

    #[test]
    fn lr_solve_matches_tableaux(k1 in 0u32..3, k2 in 0u32..3, p1 in 0usize..8, p2 in 0usize..8) {
        let a = partitions(k1);
        let b = partitions(k2);
        let (al, be) = (&a[p1 % a.len()], &b[p2 % b.len()]);
        prop_assert_eq!(lr_expand(al, be, &SuperPair::standard(2, 2)).unwrap(), lr_tableau(al, be));
    }
}
