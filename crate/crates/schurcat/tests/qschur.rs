use proptest::prelude::*;
use schurcat::linalg::{rank, Matrix};
use schurcat::qschur::{
    check_hecke, check_hecke_commutation, check_schur_presentation, count_ssyt, generator_matrix, hecke_generator, iota_embed,
    pi_check, pi_project, schur_dimension, schur_dimension_routes, sigma_check, tau, tau_check, weyl_quotient_dim, word_matrix,
    AlgebraWord, BlockMatrix, TensorBasis,
};
use schurcat::scalars::{qr, LaurentQ, Q};
use schurcat::weights::{enumerate_lambda, GlWeight, Sign};

fn w(e: &[i64]) -> GlWeight {
    GlWeight::new(e)
}

fn all_pass(cases: &[schurcat::report::CaseResult]) {
    assert!(!cases.is_empty());
    assert!(cases.iter().all(|c| c.passed), "{:?}", cases.iter().find(|c| !c.passed));
}

/// Nonnegative integer `n × n` matrices with entry sum `d`.
fn count_matrices(cells: usize, d: usize) -> u64 {
    if cells == 1 {
        return 1;
    }
    (0..=d).map(|k| count_matrices(cells - 1, d - k)).sum()
}

/// Dimension of the span of all word matrices of length ≤ `len`, at `q = 2`.
fn spanned_dimension(n: usize, d: usize, len: usize) -> usize {
    let basis = TensorBasis::new(n, d);
    let letters: Vec<(usize, Sign)> = (1..n).flat_map(|i| [(i, Sign::Plus), (i, Sign::Minus)]).collect();
    let mut words: Vec<Vec<(usize, Sign)>> = vec![vec![]];
    let mut frontier = words.clone();
    for _ in 0..len {
        frontier = frontier.iter().flat_map(|wd| letters.iter().map(move |&l| [vec![l], wd.clone()].concat())).collect();
        words.extend(frontier.iter().cloned());
    }
    let keys: Vec<(GlWeight, GlWeight, usize, usize)> = basis
        .weights()
        .flat_map(|t| basis.weights().map(move |s| (t.clone(), s.clone())))
        .flat_map(|(t, s)| {
            let (r, c) = (basis.block(&t).len(), basis.block(&s).len());
            (0..r).flat_map(move |i| {
                let (t, s) = (t.clone(), s.clone());
                (0..c).map(move |j| (t.clone(), s.clone(), i, j))
            })
        })
        .collect();
    let q = qr(2);
    let mut rows = Vec::new();
    for l in enumerate_lambda(n, d as i64) {
        for wd in &words {
            let m = word_matrix(&AlgebraWord::new(wd, l.clone()), &basis).specialize(&q);
            rows.push(
                keys.iter()
                    .map(|(t, s, i, j)| m.get(&(t.clone(), s.clone())).map_or(Q::from_integer(0.into()), |b| b.get(*i, *j).clone()))
                    .collect::<Vec<Q>>(),
            );
        }
    }
    rank(&Matrix::from_rows(rows))
}

#[test]
fn natural_representation() {
    let b = TensorBasis::new(2, 1);
    let e = generator_matrix(1, Sign::Plus, &b);
    let blk = e.block(&w(&[1, 0]), &w(&[0, 1])).expect("v2 -> v1");
    assert_eq!(blk.get(0, 0), &LaurentQ::one());
    assert!(e.block(&w(&[2, -1]), &w(&[1, 0])).is_none());
    let k = word_matrix(&AlgebraWord::idempotent(w(&[1, 0])), &b);
    assert_eq!(k.block(&w(&[1, 0]), &w(&[1, 0])).unwrap().get(0, 0), &LaurentQ::one());
}

#[test]
fn commutator_on_the_middle_weight_vanishes() {
    let b = TensorBasis::new(2, 2);
    let l = w(&[1, 1]);
    let ef = word_matrix(&AlgebraWord::new(&[(1, Sign::Plus), (1, Sign::Minus)], l.clone()), &b);
    let fe = word_matrix(&AlgebraWord::new(&[(1, Sign::Minus), (1, Sign::Plus)], l), &b);
    assert!(ef.sub(&fe).is_zero());
}

#[test]
fn words_leaving_lambda_are_zero() {
    let b = TensorBasis::new(2, 2);
    let wd = AlgebraWord::new(&[(1, Sign::Plus)], w(&[2, 0]));
    assert!(wd.is_zero_by_label(2, 2));
    assert!(word_matrix(&wd, &b).is_zero());
    let fe = word_matrix(&AlgebraWord::new(&[(1, Sign::Minus), (1, Sign::Plus)], w(&[1, 1])), &b);
    let blk = fe.block(&w(&[1, 1]), &w(&[1, 1])).unwrap();
    let m = Matrix::from_rows((0..2).map(|i| (0..2).map(|j| blk.get(i, j).eval(&qr(3))).collect()).collect());
    assert!(rank(&m) <= 1);
}

#[test]
fn hecke_relations_directly() {
    let b = TensorBasis::new(2, 2);
    let t = hecke_generator(1, &b);
    let q2 = LaurentQ::q_pow(2);
    let id = BlockMatrix::identity(&b);
    let quad = t.mul(&t).sub(&t.scale(&(&q2 - &LaurentQ::one()))).sub(&id.scale(&q2));
    assert!(quad.is_zero());
    let b3 = TensorBasis::new(2, 3);
    let (t1, t2) = (hecke_generator(1, &b3), hecke_generator(2, &b3));
    assert!(t1.mul(&t2).mul(&t1).sub(&t2.mul(&t1).mul(&t2)).is_zero());
}

#[test]
fn presentation_hecke_sigma_tau() {
    for (n, d) in [(2, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
        all_pass(&check_schur_presentation(n, d));
    }
    for (n, d) in [(2, 2), (2, 3), (3, 3)] {
        all_pass(&check_hecke(n, d));
        all_pass(&check_hecke_commutation(n, d));
    }
    for (n, d) in [(2, 2), (3, 3), (3, 2)] {
        all_pass(&sigma_check(n, d).unwrap());
    }
    for (n, d) in [(2, 2), (3, 2)] {
        all_pass(&tau_check(n, d));
    }
}

#[test]
fn sigma_needs_enough_colours() {
    assert!(sigma_check(2, 3).is_err());
}

#[test]
fn tau_examples() {
    let l = w(&[1, 1]);
    assert_eq!(tau(&AlgebraWord::idempotent(l.clone())), AlgebraWord::idempotent(l.clone()));
    let e = AlgebraWord::new(&[(1, Sign::Plus)], w(&[0, 2]));
    let t = tau(&e);
    assert_eq!(t.letters, vec![(1, Sign::Minus)]);
    assert_eq!(t.source, w(&[1, 1]));
    // q^{-1-λ̄_1} with λ = (0,2)
    assert_eq!(t.coeff, LaurentQ::q_pow(1));
    let e = AlgebraWord::new(&[(1, Sign::Plus)], l);
    assert_eq!(tau(&tau(&e)), e);
}

#[test]
fn projection_and_embedding() {
    let p = pi_project(&AlgebraWord::idempotent(w(&[2, 2])), 4, 2).unwrap();
    assert_eq!(p.source, w(&[1, 1]));
    let same = AlgebraWord::new(&[(1, Sign::Plus)], w(&[0, 2]));
    assert_eq!(pi_project(&same, 2, 2).unwrap(), same);
    assert!(pi_project(&same, 3, 2).is_err());
    assert_eq!(iota_embed(&AlgebraWord::idempotent(w(&[1, 1])), 2, 3).unwrap().source, w(&[1, 1, 0]));
    all_pass(&pi_check(2, 1, 1));
}

#[test]
fn dimension_routes() {
    assert_eq!(schur_dimension(2, 2).unwrap(), 10.into());
    assert_eq!(schur_dimension(1, 5).unwrap(), 1.into());
    assert_eq!(schur_dimension(3, 2).unwrap(), 45.into());
    for n in 1..=3usize {
        for d in 1..=4usize {
            let r = schur_dimension_routes(n, d);
            assert_eq!(r.binomial, r.tableaux);
            assert_eq!(r.binomial, count_matrices(n * n, d).into());
        }
    }
    assert_eq!(count_ssyt(&[2, 1], 3), 8);
}

#[test]
fn word_matrices_span_the_algebra() {
    assert_eq!(spanned_dimension(2, 2, 4), 10);
    assert_eq!(spanned_dimension(2, 3, 6), 20);
    assert_eq!(spanned_dimension(3, 1, 2), 9);
}

#[test]
fn weyl_quotient_at_the_middle_weight() {
    for q in [qr(2), qr(3), qr(5)] {
        assert_eq!(weyl_quotient_dim(2, 2, &w(&[1, 1]), &q), 1);
    }
}

proptest! {
    #[test]
    fn words_are_weight_homogeneous(letters in prop::collection::vec((1usize..3, any::<bool>()), 0..5), pick in 0usize..10) {
        let (n, d) = (3, 2);
        let lams = enumerate_lambda(n, d);
        let src = lams[pick % lams.len()].clone();
        let ls: Vec<(usize, Sign)> = letters.iter().map(|&(i, p)| (i, if p { Sign::Plus } else { Sign::Minus })).collect();
        let wd = AlgebraWord::new(&ls, src.clone());
        let m = word_matrix(&wd, &TensorBasis::new(n, d as usize));
        let tgt = wd.target();
        let shift: Vec<i64> = tgt.0.iter().zip(&src.0).map(|(a, b)| a - b).collect();
        prop_assert!(m.is_homogeneous(&shift));
    }

    #[test]
    fn tau_is_an_involution(letters in prop::collection::vec((1usize..3, any::<bool>()), 0..5), pick in 0usize..10) {
        let lams = enumerate_lambda(3, 3);
        let src = lams[pick % lams.len()].clone();
        let ls: Vec<(usize, Sign)> = letters.iter().map(|&(i, p)| (i, if p { Sign::Plus } else { Sign::Minus })).collect();
        let wd = AlgebraWord::new(&ls, src);
        prop_assert_eq!(tau(&tau(&wd)), wd);
    }
}
