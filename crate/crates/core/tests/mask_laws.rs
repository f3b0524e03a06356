//! Exhaustive mask-algebra laws over every mask with k ≤ 3 and σ ≤ 3.

use hangman_core::{meet, overlay, precedes, reveal_with_word, Mask, Symbol, Word};

fn all_masks(k: usize, sigma: u32) -> Vec<Mask> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Option<Symbol>>| {
                std::iter::once(None)
                    .chain((1..=sigma).map(|id| Some(Symbol::new(id).unwrap())))
                    .map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c);
                        p
                    })
            })
            .collect();
    }
    out.into_iter().map(|cells| Mask::new(cells).unwrap()).collect()
}

fn le(a: &Mask, b: &Mask) -> bool {
    precedes(a, b).unwrap()
}

#[test]
fn precedes_is_a_partial_order() {
    for k in 1..=3 {
        let masks = all_masks(k, 3);
        assert_eq!(masks.len(), 4usize.pow(k as u32));
        for a in &masks {
            assert!(le(a, a));
            for b in &masks {
                if le(a, b) && le(b, a) {
                    assert_eq!(a, b);
                }
                if !le(a, b) {
                    continue;
                }
                for c in &masks {
                    if le(b, c) {
                        assert!(le(a, c), "{a} ⪯ {b} ⪯ {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn meet_and_overlay_bounds() {
    for k in 1..=3 {
        let masks = all_masks(k, 3);
        for a in &masks {
            for b in &masks {
                let m = meet(a, b).unwrap();
                assert!(le(&m, a) && le(&m, b));
                assert!(le(a, &overlay(a, b).unwrap()));
            }
        }
    }
}

#[test]
fn reveal_is_sandwiched() {
    for k in 1..=3 {
        let masks = all_masks(k, 3);
        let words: Vec<Word> = masks.iter().filter_map(Mask::to_word).collect();
        assert_eq!(words.len(), 3usize.pow(k as u32));
        for m in &masks {
            for w in words.iter().filter(|w| le(m, &w.to_mask())) {
                for id in 1..=3 {
                    let s = Symbol::new(id).unwrap();
                    let r = reveal_with_word(m, w, s).unwrap();
                    assert!(le(m, &r) && le(&r, &w.to_mask()));
                    let changed = *m != r;
                    let hit = w
                        .symbols()
                        .iter()
                        .zip(m.cells())
                        .any(|(x, c)| c.is_none() && *x == s);
                    assert_eq!(changed, hit);
                }
            }
        }
    }
}
