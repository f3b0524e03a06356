//! Benchmark fixtures shared by the criterion targets.

use hangman_core::{adversarial_family, proper_encode, random_cubic, CubicGraph, Lexicon};

/// Lexicons worth timing, with a short label each.
pub fn fixtures() -> Vec<(&'static str, Lexicon)> {
    vec![
        ("adversarial_m3", adversarial_family(3).expect("m=3 is valid")),
        ("adversarial_m5", adversarial_family(5).expect("m=5 is valid")),
        (
            "petersen",
            proper_encode(&CubicGraph::named("petersen").expect("named graph")),
        ),
        (
            "random_cubic_12",
            proper_encode(&random_cubic(12, 1).expect("12 is even")),
        ),
    ]
}
