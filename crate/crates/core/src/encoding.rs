//! Proper encodings of cubic graphs as length-4 lexicons.
//!
//! Every undirected edge `{u, v}` becomes the two arcs `u → v` and `v → u`.
//! The arcs are colored red/green/blue so that each vertex has one outgoing
//! and one incoming arc of every color; vertex `u` is then encoded as
//! `u, red(u), green(u), blue(u)`. The coloring comes from splitting the
//! 3-regular bipartite double cover into three perfect matchings.

use crate::error::Result;
use crate::graph::CubicGraph;
use crate::lexicon::Lexicon;
use crate::mask::Word;
use crate::matching::{perfect_matching, BipartiteGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Green,
    Blue,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Green, Color::Blue];

    /// Zero-based word position the arc target lands in.
    pub fn position(self) -> usize {
        match self {
            Color::Red => 1,
            Color::Green => 2,
            Color::Blue => 3,
        }
    }

    fn index(self) -> usize {
        self.position() - 1
    }
}

/// Arc coloring of the symmetric digraph of a cubic graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    out: Vec<[usize; 3]>,
}

impl EdgeColoring {
    /// Target of the arc of `color` leaving `u`.
    pub fn target(&self, u: usize, color: Color) -> usize {
        self.out[u][color.index()]
    }

    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        Color::ALL.into_iter().find(|&c| self.target(u, c) == v)
    }

    /// Every arc of `graph` colored once, and at each vertex the outgoing and
    /// incoming arcs each cover all three colors.
    pub fn is_valid(&self, graph: &CubicGraph) -> bool {
        let n = graph.n();
        if self.out.len() != n {
            return false;
        }
        let mut incoming = vec![[0u8; 3]; n];
        for u in 0..n {
            let mut targets = self.out[u];
            targets.sort_unstable();
            if targets != graph.neighbors(u) {
                return false;
            }
            for c in Color::ALL {
                incoming[self.target(u, c)][c.index()] += 1;
            }
        }
        incoming.iter().all(|counts| counts == &[1, 1, 1])
    }
}

/// Bipartite double cover: left node `u⁻`, right node `v⁺`, one edge per arc `u → v`.
pub fn double_cover(graph: &CubicGraph) -> BipartiteGraph {
    let arcs: Vec<(usize, usize)> = (0..graph.n())
        .flat_map(|u| graph.neighbors(u).into_iter().map(move |v| (u, v)))
        .collect();
    BipartiteGraph::new(graph.n(), graph.n(), &arcs).expect("arcs index valid vertices")
}

/// Splits the double cover into three perfect matchings, in extraction order
/// (red, blue, then the 1-regular remainder as green).
pub fn matching_decomposition(graph: &CubicGraph) -> [Vec<(usize, usize)>; 3] {
    let cover = double_cover(graph);
    let red = perfect_matching(&cover).expect("double cover of a cubic graph is 3-regular");
    let rest = cover.without(&red);
    let blue = perfect_matching(&rest).expect("removing a perfect matching leaves a 2-regular graph");
    let remainder = rest.without(&blue);
    debug_assert_eq!(remainder.regular_degree(), Some(1));
    [red, blue, remainder.edges()]
}

/// Colors arcs by peeling two perfect matchings off the double cover; the
/// 1-regular remainder is the third color.
pub fn three_color(graph: &CubicGraph) -> EdgeColoring {
    let [red, blue, green] = matching_decomposition(graph);
    let mut out = vec![[usize::MAX; 3]; graph.n()];
    for (matching, color) in [(&red, Color::Red), (&blue, Color::Blue), (&green, Color::Green)] {
        for &(u, v) in matching {
            out[u][color.index()] = v;
        }
    }
    EdgeColoring { out }
}

/// Word of vertex `u` under `coloring`.
pub fn vertex_word(graph: &CubicGraph, coloring: &EdgeColoring, u: usize) -> Word {
    let mut symbols = vec![graph.label(u)];
    symbols.extend(Color::ALL.map(|c| graph.label(coloring.target(u, c))));
    Word::new(symbols).expect("length 4")
}

/// Lexicon with one word per vertex (in vertex order) over `σ = n` symbols.
pub fn proper_encode(graph: &CubicGraph) -> Lexicon {
    let coloring = three_color(graph);
    let words = (0..graph.n()).map(|u| vertex_word(graph, &coloring, u)).collect();
    Lexicon::new(words, Some(graph.n() as u32)).expect("vertex words are distinct")
}

/// True when every symbol of `[1..σ]` occurs exactly once in each of the four positions.
pub fn properness_check(lexicon: &Lexicon) -> bool {
    if lexicon.k() != 4 || lexicon.len() != lexicon.sigma() as usize {
        return false;
    }
    (0..4).all(|p| {
        let mut seen = vec![false; lexicon.sigma() as usize];
        lexicon.words().iter().all(|w| {
            let i = (w.symbols()[p].id() - 1) as usize;
            !std::mem::replace(&mut seen[i], true)
        })
    })
}

/// Encodes `graph` with a given coloring; errors only if it's not a valid one.
pub fn encode_with(graph: &CubicGraph, coloring: &EdgeColoring) -> Result<Lexicon> {
    let words = (0..graph.n()).map(|u| vertex_word(graph, coloring, u)).collect();
    Lexicon::new(words, Some(graph.n() as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random_cubic;

    #[test]
    fn k4_proper_and_improper_lexicons() {
        let proper = Lexicon::from_letters(&["abcd", "badc", "cdba", "dcab"]).unwrap();
        assert!(properness_check(&proper));
        let plain = Lexicon::from_letters(&["abcd", "bacd", "cabd", "dabc"]).unwrap();
        assert!(!properness_check(&plain));
    }

    #[test]
    fn properness_rejects_wrong_shapes() {
        assert!(!properness_check(
            &Lexicon::from_letters(&["abc", "bca", "cab"]).unwrap()
        ));
        assert!(!properness_check(&Lexicon::from_letters(&["abcd"]).unwrap()));
    }

    #[test]
    fn k4_double_cover_and_coloring() {
        let k4 = CubicGraph::named("k4").unwrap();
        let cover = double_cover(&k4);
        assert_eq!(cover.regular_degree(), Some(3));
        assert_eq!(cover.edges().len(), 12);
        assert_eq!(perfect_matching(&cover).unwrap().len(), 4);
        let coloring = three_color(&k4);
        assert!(coloring.is_valid(&k4));
        assert!(properness_check(&proper_encode(&k4)));
    }

    #[test]
    fn named_and_random_encodings_are_proper() {
        for name in crate::graph::NAMED_GRAPHS {
            let g = CubicGraph::named(name).unwrap();
            assert!(three_color(&g).is_valid(&g), "{name}");
            assert!(properness_check(&proper_encode(&g)), "{name}");
        }
        for seed in 0..10 {
            let g = random_cubic(14, seed).unwrap();
            assert!(properness_check(&proper_encode(&g)));
        }
    }

    #[test]
    fn decomposition_remainder_is_one_regular() {
        let g = CubicGraph::named("cube").unwrap();
        let cover = double_cover(&g);
        let [red, blue, green] = matching_decomposition(&g);
        let after_red = cover.without(&red);
        assert_eq!(after_red.regular_degree(), Some(2));
        let after_blue = after_red.without(&blue);
        assert_eq!(after_blue.regular_degree(), Some(1));
        assert_eq!(perfect_matching(&after_blue).unwrap(), green);
    }

    #[test]
    fn words_hold_closed_neighborhoods() {
        let g = CubicGraph::named("petersen").unwrap();
        let l = proper_encode(&g);
        for u in 0..g.n() {
            let w = l.word(u).symbols();
            assert_eq!(w[0], g.label(u));
            let mut rest: Vec<_> = w[1..].to_vec();
            rest.sort();
            let mut nbrs: Vec<_> = g.neighbors(u).iter().map(|&v| g.label(v)).collect();
            nbrs.sort();
            assert_eq!(rest, nbrs);
        }
    }

    #[test]
    fn invalid_coloring_detected() {
        let g = CubicGraph::named("k4").unwrap();
        let mut c = three_color(&g);
        c.out[0].swap(0, 1);
        assert!(!c.is_valid(&g));
        assert!(!properness_check(&encode_with(&g, &c).unwrap()));
    }
}
