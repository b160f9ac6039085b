use proptest::prelude::*;
use schurcat::bimrep::Evaluator;
use schurcat::diagrams::{Atom, Letter};
use schurcat::polysym::{divided_diff, MPoly, Monomial, Var};
use schurcat::scalars::qr;
use schurcat::soergel::ek::Ek;
use schurcat::soergel::relations::{
    box_relations, check_soergel_case, commutes, generators, holds_on_bimodules, holds_via_sigma, relations, soergel_cases,
    soergel_relation_suite, SoergelCase,
};
use schurcat::soergel::{box_normalize, letters, parse_soergel, sigma, sigma_atom, unit_weight, SAtom, SoergelWord};
use schurcat::weights::GlWeight;

fn lines(seq: &[usize]) -> Vec<SAtom> {
    seq.iter().map(|&c| SAtom::Line(c)).collect()
}

/// One generator per choice, padded with lines; choices that do not fit are skipped.
fn random_soergel(source: &[usize], choices: &[(u8, u8, u8)], top: usize, primed: bool) -> SoergelWord {
    let mut cur = source.to_vec();
    let mut slices = Vec::new();
    for &(kind, pos, col) in choices {
        let c = 1 + col as usize % top;
        let p = pos as usize % (cur.len() + 1);
        let (atom, width) = match kind % 8 {
            0 => (SAtom::StartDot(c), 0),
            1 if p < cur.len() => (SAtom::EndDot(cur[p]), 1),
            2 if p < cur.len() && cur.len() < 5 => (SAtom::Split(cur[p]), 1),
            3 if p + 1 < cur.len() && cur[p] == cur[p + 1] => (SAtom::Merge(cur[p]), 2),
            4 if p + 1 < cur.len() && cur[p].abs_diff(cur[p + 1]) > 1 => (SAtom::FourVertex(cur[p], cur[p + 1]), 2),
            5 if p + 2 < cur.len() && cur[p] == cur[p + 2] && cur[p] == cur[p + 1] + 1 => (SAtom::SixVertexUp(cur[p + 1]), 3),
            6 if p + 2 < cur.len() && cur[p] == cur[p + 2] && cur[p] + 1 == cur[p + 1] => (SAtom::SixVertexDown(cur[p]), 3),
            7 if primed => (SAtom::Box(c), 0),
            _ => continue,
        };
        if atom.bottom().len() != width {
            continue;
        }
        let mut s = lines(&cur[..p]);
        s.push(atom);
        s.extend(lines(&cur[p + width..]));
        let mut next = cur[..p].to_vec();
        next.extend(atom.top());
        next.extend_from_slice(&cur[p + width..]);
        cur = next;
        slices.push(s);
    }
    SoergelWord::from_slices(source, slices).expect("generated slices fit")
}

fn has_atom(c: &schurcat::diagrams::Combo, a: Atom) -> bool {
    c.terms.iter().any(|(_, w)| w.slices.iter().any(|s| s.atoms.contains(&a)))
}

#[test]
fn sigma_examples() {
    let dot = sigma_atom(SAtom::StartDot(1), 2, 2).unwrap();
    assert_eq!(dot.terms.len(), 1);
    assert!(has_atom(&dot, Atom::CupEF(1)));
    assert_eq!(dot.terms[0].1.lambda, GlWeight::new(&[1, 1]));
    let end = sigma_atom(SAtom::EndDot(2), 3, 3).unwrap();
    assert!(has_atom(&end, Atom::CapEF(2)));
    let line = sigma(&SoergelWord::atom(SAtom::Line(1)), 3, 3).unwrap();
    let w = &line.terms[0].1;
    assert_eq!(w.source, vec![Letter::down(1), Letter::up(1)]);
    assert_eq!(w.target(), w.source);
    assert_eq!(w.degree(), 0);
    assert_eq!(unit_weight(4, 2), GlWeight::new(&[1, 1, 0, 0]));
    assert_eq!(letters(&[2, 1]), vec![Letter::down(2), Letter::up(2), Letter::down(1), Letter::up(1)]);
}

#[test]
fn boxes_only_below_n() {
    assert!(sigma_atom(SAtom::Box(1), 3, 3).is_err());
    let b = sigma_atom(SAtom::Box(1), 4, 2).unwrap();
    assert!(!b.terms.is_empty());
    assert!(b.terms.iter().all(|(_, w)| w.degree() == 2));
    assert!(sigma_atom(SAtom::Line(2), 4, 2).is_err());
    assert!(sigma_atom(SAtom::Line(3), 3, 3).is_err());
}

#[test]
fn box_difference_is_the_barbell() {
    let ek = Ek::new().unwrap();
    for d in 2..=3 {
        for r in box_relations(d) {
            assert!(holds_on_bimodules(&ek, &r, d, 1), "{} {}", r.id, r.colors);
            let mut ev = Evaluator::new(d);
            assert!(holds_via_sigma(&mut ev, &r, 4, d, 1).unwrap(), "{} {}", r.id, r.colors);
        }
    }
}

#[test]
fn box_normalize_examples() {
    let x = |k: u32| MPoly::var(Var(k));
    let (p, df) = box_normalize(&x(0), 1);
    assert!(p.is_zero());
    assert_eq!(df, MPoly::one());
    let sym = x(0).add(&x(1));
    assert_eq!(box_normalize(&sym, 1), (sym.clone(), MPoly::zero()));
    let prod = x(0).mul(&x(1));
    assert_eq!(box_normalize(&prod, 1), (prod.clone(), MPoly::zero()));
    let (p, df) = box_normalize(&x(1), 1);
    assert_eq!(p, x(0).add(&x(1)));
    assert_eq!(df, MPoly::int(-1));
}

#[test]
fn named_relations_at_small_rank() {
    let ek = Ek::new().unwrap();
    let mut ev = Evaluator::new(2);
    let rels = relations(1);
    for id in ["lollipop", "deltam", "adj", "curldot"] {
        let found: Vec<_> = rels.iter().filter(|r| r.id == id).collect();
        assert!(!found.is_empty(), "{id}");
        for r in found {
            assert!(holds_via_sigma(&mut ev, r, 2, 2, 3).unwrap(), "{id} {}", r.colors);
            assert!(holds_on_bimodules(&ek, r, 2, 3), "{id} {}", r.colors);
        }
    }
}

#[test]
fn lollipop_image_is_zero() {
    let l = rels_lhs_word("lollipop", 1);
    let mut ev = Evaluator::new(2);
    let lam = unit_weight(2, 2);
    let f = ev.eval_combo(&sigma(&l, 2, 2).unwrap(), &lam, &letters(&l.source), &letters(&l.target())).unwrap();
    assert!(f.is_zero());
}

fn rels_lhs_word(id: &str, top: usize) -> SoergelWord {
    relations(top).into_iter().find(|r| r.id == id).expect("relation exists").lhs[0].1.clone()
}

#[test]
fn commuting_square_for_every_generator() {
    let ek = Ek::new().unwrap();
    for (n, d) in [(3, 3), (4, 2), (4, 4)] {
        let mut ev = Evaluator::new(d);
        for g in generators(n, d) {
            let w = SoergelWord::atom(g);
            assert!(commutes(&mut ev, &ek, &w, n, d, 9).unwrap(), "{g} at n={n} d={d}");
            let sig = sigma(&w, n, d).unwrap();
            assert!(sig.terms.iter().all(|(_, x)| x.degree() == g.degree()), "{g}");
        }
    }
}

#[test]
fn suite_at_rank_three() {
    for (n, d) in [(2, 2), (3, 2), (3, 3)] {
        let r = soergel_relation_suite(n, d, 1).unwrap();
        assert!(r.passed > 0, "no cases at {n},{d}");
        assert!(r.all_passed(), "{:?}", r.failures().next());
    }
    assert!(soergel_relation_suite(2, 3, 1).is_err());
}

#[test]
fn edge_dot_identities() {
    let ek = Ek::new().unwrap();
    let mut ev = Evaluator::new(3);
    let cases = soergel_cases(3, 3).unwrap();
    let mut seen = 0;
    for c in cases.iter().filter(|c| matches!(c, SoergelCase::EdgeDots(..))) {
        seen += 1;
        let r = check_soergel_case(&mut ev, &ek, c, 3, 3, 1);
        assert!(r.iter().all(|x| x.passed));
    }
    assert_eq!(seen, 4);
}

#[test]
fn text_format_examples() {
    let text = "# a barbell\nn=3, d=3, source=\nstartdot(1)\nenddot(1)\n";
    let f = parse_soergel(text).unwrap();
    assert_eq!((f.n, f.d), (3, 3));
    assert_eq!(f.word.degree(), 2);
    assert!(f.word.target().is_empty());
    assert!(parse_soergel("n=3, d=3, source=1\nline(2)\n").is_err());
    assert!(parse_soergel("n=3, d=3, source=\nbox(1)\n").is_ok());
    assert!(parse_soergel("").is_err());
}

proptest! {
    #[test]
    fn box_normalize_splits_f(coeffs in prop::collection::vec((0u32..3, 0u32..3, 0u32..2, -3i64..=3), 0..6), i in 1usize..3) {
        let f = coeffs.into_iter().fold(MPoly::zero(), |acc, (a, b, c, k)| {
            acc.add(&MPoly::term(qr(k), Monomial::from_pairs(vec![(Var(0), a), (Var(1), b), (Var(2), c)])))
        });
        let (x, y) = (Var(i as u32 - 1), Var(i as u32));
        let (p, df) = box_normalize(&f, i);
        prop_assert_eq!(p.add(&df.mul(&MPoly::var(x))), f);
        prop_assert_eq!(p.swap(x, y), p.clone());
        prop_assert_eq!(df.swap(x, y), df.clone());
        prop_assert_eq!(divided_diff(&p, x, y), MPoly::zero());
        prop_assert_eq!(box_normalize(&p, i), (p.clone(), MPoly::zero()));
    }

    #[test]
    fn soergel_text_round_trips(src in prop::collection::vec(1usize..4, 0..3), ch in prop::collection::vec((0u8..8, 0u8..6, 0u8..3), 0..6), primed in any::<bool>()) {
        let w = random_soergel(&src, &ch, 3, primed);
        let f = parse_soergel(&w.to_text(4, 3)).unwrap();
        prop_assert_eq!(f.word, w);
    }

    #[test]
    fn sigma_preserves_degree(src in prop::collection::vec(1usize..4, 0..3), ch in prop::collection::vec((0u8..7, 0u8..6, 0u8..3), 0..4)) {
        let w = random_soergel(&src, &ch, 3, false);
        let s = sigma(&w, 4, 4).unwrap();
        prop_assert!(s.terms.iter().all(|(_, x)| x.degree() == w.degree()));
    }

    #[test]
    fn random_words_commute_with_the_oracle(ch in prop::collection::vec((0u8..7, 0u8..4, 0u8..2), 0..3), seed in 0u64..1000) {
        let w = random_soergel(&[1], &ch, 2, false);
        let ek = Ek::new().unwrap();
        let mut ev = Evaluator::new(3);
        prop_assert!(commutes(&mut ev, &ek, &w, 3, 3, seed).unwrap());
    }
}
