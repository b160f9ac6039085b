mod common;

use proptest::prelude::*;
use schurcat::diagrams::{
    boundary_regions, divided_power_idempotent, parse_diagram, Atom, DiagramWord, GenSlice, Letter, OneMorphism,
};
use schurcat::scalars::qr;
use schurcat::weights::{enumerate_lambda, GlWeight, Sign};

fn w(e: &[i64]) -> GlWeight {
    GlWeight::new(e)
}

fn single(l: &[i64], atom: Atom) -> DiagramWord {
    DiagramWord::single(w(l), &[], atom, &[])
}

#[test]
fn degree_examples() {
    assert_eq!(single(&[1, 1], Atom::DotUp(1, 1)).degree(), 2);
    assert_eq!(single(&[1, 1], Atom::CupEF(1)).degree(), 1);
    assert_eq!(DiagramWord::identity(w(&[1, 1]), vec![Letter::up(1)]).degree(), 0);
    assert_eq!(single(&[1, 1, 0], Atom::CrossUU(1, 2)).degree(), 1);
    assert_eq!(single(&[1, 1, 0], Atom::CrossUU(1, 1)).degree(), -2);
}

#[test]
fn bubble_labels() {
    // counterclockwise bubble at (1,0): interior (2,-1) lies outside Λ(2,1)
    let ccw = single(&[1, 0], Atom::Bubble { clockwise: false, color: 1, dots: 0 });
    assert!(ccw.regions().contains(&w(&[2, -1])));
    assert!(ccw.is_zero_by_label(1));
    let cw = single(&[1, 0], Atom::Bubble { clockwise: true, color: 1, dots: 0 });
    assert!(cw.regions().contains(&w(&[0, 1])));
    assert!(!cw.is_zero_by_label(1));
}

#[test]
fn double_split_leaves_lambda() {
    // two upward strands over (1,0) in S(2,1) pass through (2,-1)... at (0,1) the
    // middle region of E_{+1}E_{+1}1_{(0,1)} is (1,0) and the left one (2,-1).
    let wd = DiagramWord::identity(w(&[0, 1]), vec![Letter::up(1), Letter::up(1)]);
    assert!(wd.is_zero_by_label(1));
    assert!(!DiagramWord::identity(w(&[0, 1]), vec![Letter::up(1)]).is_zero_by_label(1));
}

#[test]
fn one_morphism_composition_adds_shifts() {
    let a = OneMorphism::new(vec![Letter::up(1)], w(&[0, 2]), 3);
    let b = OneMorphism::new(vec![Letter::up(1)], w(&[1, 1]), -1);
    let c = b.compose(&a).unwrap();
    assert_eq!(c.shift, 2);
    assert_eq!(c.target(), w(&[2, 0]));
    assert!(a.compose(&a).is_err());
}

#[test]
fn compositions() {
    let l = w(&[1, 1]);
    let dot = DiagramWord::single(l.clone(), &[], Atom::DotUp(1, 1), &[]);
    let id = DiagramWord::identity(l.clone(), vec![Letter::up(1)]);
    assert_eq!(id.compose_v(&dot).unwrap(), dot);
    let two = dot.compose_v(&dot).unwrap();
    assert_eq!(two.degree(), 4);
    let cup = DiagramWord::single(l.clone(), &[], Atom::CupEF(1), &[]);
    assert!(cup.compose_v(&dot).is_err());
    let left = DiagramWord::single(w(&[2, 0]), &[], Atom::DotUp(1, 1), &[]);
    let h = left.compose_h(&dot).unwrap();
    assert_eq!(h.source, vec![Letter::up(1), Letter::up(1)]);
    assert_eq!(h.degree(), 4);
}

#[test]
fn rotation_and_signs() {
    let l = w(&[1, 1]);
    let id = DiagramWord::identity(l.clone(), vec![Letter::up(1)]);
    assert_eq!(id.rotate180().source, vec![Letter::down(1)]);
    // λ_2 = 1 gives the exponent 2
    let cap = DiagramWord::single(w(&[0, 1]), &[], Atom::CapEF(1), &[]);
    assert_eq!(cap.sl_sign_translate(), (cap.clone(), 1));
    let cap = DiagramWord::single(w(&[1, 0]), &[], Atom::CapEF(1), &[]);
    assert_eq!(cap.sl_sign_translate().1, -1);
    let fe = DiagramWord::single(w(&[1, 1]), &[], Atom::CupFE(1), &[]);
    assert_eq!(fe.sl_sign_translate().1, -1);
    let fe = DiagramWord::single(w(&[2, 0]), &[], Atom::CupFE(1), &[]);
    assert_eq!(fe.sl_sign_translate().1, 1);
}

#[test]
fn divided_power_shapes() {
    let l = w(&[0, 2]);
    let one = divided_power_idempotent(1, Sign::Plus, 1, &l);
    assert_eq!(one.terms.len(), 1);
    assert!(one.terms[0].1.slices.is_empty());
    let up = divided_power_idempotent(1, Sign::Plus, 2, &l);
    let (c, wd) = &up.terms[0];
    assert_eq!(*c, qr(1));
    assert_eq!(wd.slices[0].atoms, vec![Atom::CrossUU(1, 1)]);
    assert_eq!(wd.slices[1].atoms, vec![Atom::DotUp(1, 1), Atom::IdUp(1)]);
    assert_eq!(wd.degree(), 0 + 2 - 2);
    let down = divided_power_idempotent(1, Sign::Minus, 2, &w(&[2, 0]));
    assert_eq!(down.terms[0].0, qr(-1));
    assert_eq!(down.terms[0].1.slices[0].atoms, vec![Atom::CrossDD(1, 1)]);
}

#[test]
fn text_format_examples() {
    let text = "n=2, d=2, lambda=(1,1), shift=0\ncupEF(1)\ndotD(1,1) U(1)\n";
    let f = parse_diagram(text).unwrap();
    assert_eq!(f.n, 2);
    assert_eq!(f.d, 2);
    assert_eq!(f.word.slices.len(), 2);
    assert_eq!(f.word.degree(), 1 + 2);
    assert!(parse_diagram("n=2, d=2, lambda=(1,1)\nU(1)\ncapEF(1)\n").is_err());
    assert!(parse_diagram("n=2, d=2, lambda=(1,1)\nfoo(1)\n").is_err());
    assert!(parse_diagram("").is_err());
}

#[test]
fn sideways_expansions_have_matching_boundaries() {
    for a in [Atom::CrossLR(1, 2), Atom::CrossRL(2, 1), Atom::CrossDD(1, 2), Atom::CrossLR(1, 1)] {
        let l = w(&[1, 1, 1]);
        let wd = DiagramWord::single(l.clone(), &[], a, &[]);
        let ex = wd.expanded();
        ex.validate().unwrap();
        assert_eq!(ex.target(), wd.target());
        assert_eq!(ex.degree(), wd.degree(), "{a}");
    }
}

fn weights() -> Vec<GlWeight> {
    enumerate_lambda(3, 3)
}

proptest! {
    #[test]
    fn rotation_preserves_degree(pick in 0usize..10, ch in common::choices()) {
        let l = &weights()[pick % 10];
        let wd = common::random_word(l, vec![Letter::up(1), Letter::down(2)], &ch, 4);
        let r = wd.rotate180();
        r.validate().unwrap();
        prop_assert_eq!(r.degree(), wd.degree());
        prop_assert_eq!(r.rotate180(), wd);
    }

    #[test]
    fn regions_agree_from_both_edges(pick in 0usize..10, ch in common::choices()) {
        let l = &weights()[pick % 10];
        let wd = common::random_word(l, vec![Letter::up(2)], &ch, 4);
        let mu = wd.mu();
        for lv in wd.levels() {
            let right = boundary_regions(l, &lv);
            let mut cur = mu.0.clone();
            let mut left = vec![GlWeight(cur.clone())];
            for x in &lv {
                cur[x.color - 1] -= x.sign.as_i64();
                cur[x.color] += x.sign.as_i64();
                left.push(GlWeight(cur.clone()));
            }
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn text_round_trips(pick in 0usize..10, ch in common::choices()) {
        let l = &weights()[pick % 10];
        let wd = common::random_word(l, vec![Letter::down(1)], &ch, 4);
        let back = parse_diagram(&wd.to_text(3)).unwrap();
        prop_assert_eq!(back.word, wd);
        prop_assert_eq!(back.d, 3);
    }

    #[test]
    fn vertical_composition_adds_degrees(pick in 0usize..10, a in common::choices(), b in common::choices()) {
        let l = &weights()[pick % 10];
        let lower = common::random_word(l, vec![Letter::up(1)], &a, 4);
        let upper = common::random_word(l, lower.target(), &b, 4);
        let both = upper.compose_v(&lower).unwrap();
        prop_assert_eq!(both.degree(), upper.degree() + lower.degree());
        prop_assert_eq!(both.target_morphism().shift, lower.shift - lower.degree() - upper.degree());
    }

    #[test]
    fn serialization_keeps_the_word(pick in 0usize..10, ch in common::choices()) {
        let l = &weights()[pick % 10];
        let wd = common::random_word(l, vec![Letter::up(1), Letter::up(2)], &ch, 4);
        let s = wd.serialized();
        prop_assert_eq!(s.degree(), wd.degree());
        prop_assert_eq!(s.target(), wd.target());
        prop_assert!(s.slices.iter().all(|x| x.atoms.iter().filter(|a| !a.is_identity()).count() <= 1));
        let _ = GenSlice::identity(&wd.target());
    }
}
