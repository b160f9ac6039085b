#![allow(dead_code)]

use schurcat::diagrams::{Atom, DiagramWord, GenSlice, Letter};
use schurcat::weights::{GlWeight, Sign};

/// Grow a word on `source` at `λ` by one generator per choice. Choices that do
/// not fit the current boundary are skipped; boundaries stay at most `max_len`.
pub fn random_word(lambda: &GlWeight, source: Vec<Letter>, choices: &[(u8, u8, u8)], max_len: usize) -> DiagramWord {
    let n = lambda.n();
    let mut w = DiagramWord::identity(lambda.clone(), source);
    for &(kind, pos, col) in choices {
        let cur = w.target();
        let color = 1 + col as usize % (n - 1);
        let p = pos as usize % (cur.len() + 1);
        let atom = match kind % 6 {
            0 if !cur.is_empty() => {
                let p = p % cur.len();
                let l = cur[p];
                let a = if l.sign == Sign::Plus { Atom::DotUp(l.color, 1) } else { Atom::DotDown(l.color, 1) };
                Some((p, a, 1))
            }
            1 if cur.len() + 2 <= max_len => Some((p, Atom::CupEF(color), 0)),
            2 if cur.len() + 2 <= max_len => Some((p, Atom::CupFE(color), 0)),
            3 | 4 if cur.len() >= 2 => {
                let p = p % (cur.len() - 1);
                let (a, b) = (cur[p], cur[p + 1]);
                let atom = match (a.sign, b.sign) {
                    _ if kind % 6 == 4 && a.color == b.color && a.sign != b.sign => {
                        if a.sign == Sign::Minus { Atom::CapEF(a.color) } else { Atom::CapFE(a.color) }
                    }
                    (Sign::Plus, Sign::Plus) => Atom::CrossUU(a.color, b.color),
                    (Sign::Minus, Sign::Minus) => Atom::CrossDD(a.color, b.color),
                    (Sign::Plus, Sign::Minus) => Atom::CrossLR(a.color, b.color),
                    (Sign::Minus, Sign::Plus) => Atom::CrossRL(b.color, a.color),
                };
                Some((p, atom, 2))
            }
            5 => Some((p, Atom::Bubble { clockwise: col % 2 == 0, color, dots: (pos % 3) as i64 }, 0)),
            _ => None,
        };
        if let Some((p, atom, width)) = atom {
            let slice = GenSlice::padded(&cur[..p], atom, &cur[p + width..]);
            w = w.then(slice).expect("generated slices fit");
        }
    }
    w
}

pub fn choices() -> impl proptest::strategy::Strategy<Value = Vec<(u8, u8, u8)>> {
    proptest::collection::vec((0u8..6, 0u8..8, 0u8..4), 0..6)
}
