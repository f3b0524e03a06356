use std::sync::Arc;

use proptest::prelude::*;

use hangman_core::{
    blanks, consistent_set, evaluate_w, greedy_answer, overlay, pattern_mask, replay, solve, AlphabetSet,
    GameState, GreedySetter, Lexicon, Mask, OptimalSetter, Positions, SetterStrategy, Symbol, Word,
};

/// Random lexicon: up to `n` distinct words of length `k` over `[1..sigma]`.
fn lexicon_strategy(max_n: usize, max_k: usize, max_sigma: u32) -> impl Strategy<Value = Lexicon> {
    (1..=max_k, 1..=max_sigma).prop_flat_map(move |(k, sigma)| {
        prop::collection::btree_set(prop::collection::vec(1..=sigma, k), 1..=max_n).prop_map(move |set| {
            let words = set
                .into_iter()
                .map(|ids| Word::new(ids.into_iter().map(|i| Symbol::new(i).unwrap()).collect()).unwrap())
                .collect();
            Lexicon::new(words, Some(sigma)).unwrap()
        })
    })
}

/// Plays random legal guesses (answers drawn from the class list) and returns the visited states.
fn walk(lexicon: Lexicon, picks: &[(u8, u8)]) -> Vec<GameState> {
    let mut state = GameState::new(Arc::new(lexicon));
    let mut seen = vec![state.clone()];
    for &(g, a) in picks {
        let remaining: Vec<Symbol> = state.remaining().iter().collect();
        if remaining.is_empty() || state.is_solved() {
            break;
        }
        let s = remaining[g as usize % remaining.len()];
        let classes = state.classes(s);
        let class = &classes[a as usize % classes.len()];
        state = state.apply_answer(s, class.reveal).unwrap();
        seen.push(state.clone());
    }
    seen
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn answer_classes_partition_consistent_set(
        lexicon in lexicon_strategy(8, 4, 5),
        picks in prop::collection::vec((any::<u8>(), any::<u8>()), 0..4),
    ) {
        for state in walk(lexicon, &picks) {
            for s in state.remaining().iter() {
                let mut union: Vec<usize> = Vec::new();
                for class in state.classes(s) {
                    let next = state.apply_answer(s, class.reveal).unwrap();
                    prop_assert_eq!(next.consistent(), class.words.as_slice());
                    union.extend(next.consistent());
                }
                let before = union.len();
                union.sort_unstable();
                union.dedup();
                prop_assert_eq!(before, union.len(), "classes overlap");
                prop_assert_eq!(union.as_slice(), state.consistent());
            }
        }
    }

    #[test]
    fn consistent_set_is_monotone(
        lexicon in lexicon_strategy(8, 3, 4),
        extra in any::<u64>(),
        guessed_bits in any::<u8>(),
    ) {
        let k = lexicon.k();
        let sigma = lexicon.sigma();
        let mut guessed = AlphabetSet::empty(sigma).unwrap();
        for id in 1..=sigma {
            if guessed_bits >> (id - 1) & 1 == 1 {
                guessed.insert(Symbol::new(id).unwrap()).unwrap();
            }
        }
        // M ⪯ M' with M' filling some blanks of M from a word.
        let word = &lexicon.words()[(extra as usize) % lexicon.len()];
        let coarse = Mask::blank(k).unwrap();
        let fill = Positions::from_bits(extra >> 8 & ((1 << k) - 1));
        let mut fine = coarse.clone();
        for i in fill.indices() {
            let cell = pattern_mask(word.symbols()[i], Positions::from_bits(1 << i), k).unwrap();
            fine = overlay(&fine, &cell).unwrap();
        }
        // Rule 3 makes the inclusion fail when a newly revealed symbol is itself
        // in the guessed set, so those symbols are dropped from it.
        for i in fill.indices() {
            guessed.remove(word.symbols()[i]);
        }
        let wide = consistent_set(&lexicon, &coarse, &guessed).unwrap();
        let narrow = consistent_set(&lexicon, &fine, &guessed).unwrap();
        prop_assert!(narrow.iter().all(|i| wide.contains(i)));
    }

    #[test]
    fn greedy_picks_a_largest_class(
        lexicon in lexicon_strategy(10, 4, 5),
        picks in prop::collection::vec((any::<u8>(), any::<u8>()), 0..3),
    ) {
        for state in walk(lexicon, &picks) {
            for s in state.remaining().iter() {
                let b = greedy_answer(&state, s);
                let classes = state.classes(s);
                let chosen = classes.iter().find(|c| c.reveal == b).expect("greedy answer is a class");
                prop_assert!(classes.iter().all(|c| c.words.len() <= chosen.words.len()));
                prop_assert!(b.is_subset(blanks(state.mask())));
            }
        }
    }

    #[test]
    fn strategies_are_legal_and_ordered(lexicon in lexicon_strategy(5, 3, 4)) {
        let lexicon = Arc::new(lexicon);
        let root = GameState::new(lexicon.clone());
        let greedy = evaluate_w(&root, &mut GreedySetter).unwrap();
        let mut optimal_setter = OptimalSetter::new();
        let optimal = evaluate_w(&root, &mut optimal_setter).unwrap();
        prop_assert!(optimal.value >= greedy.value);
        prop_assert_eq!(optimal.value, solve(&lexicon).value);
        prop_assert!(optimal.value <= lexicon.sigma());

        for line in [&greedy.principal_line, &optimal.principal_line] {
            let end = replay(lexicon.clone(), line).unwrap();
            prop_assert!(end.is_solved());
        }
        // Every optimal answer along random play keeps a word alive.
        for state in walk((*lexicon).clone(), &[(1, 0), (3, 1), (0, 2)]) {
            for s in state.remaining().iter() {
                let b = optimal_setter.answer(&state, s).unwrap();
                prop_assert!(state.apply_answer(s, b).is_ok());
            }
        }
    }

    #[test]
    fn solving_is_deterministic(lexicon in lexicon_strategy(6, 3, 5)) {
        prop_assert_eq!(solve(&lexicon), solve(&lexicon));
    }
}
