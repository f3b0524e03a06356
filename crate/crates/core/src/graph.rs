//! Labeled 3-regular graphs and a brute-force dominating-set oracle.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mask::{Symbol, SymbolStyle};
use crate::MAX_SIGMA;

/// Largest graph accepted by [`dominating_number`].
pub const DOMINATION_MAX_VERTICES: usize = 20;

/// Names of the built-in graphs.
pub const NAMED_GRAPHS: [&str; 4] = ["k4", "k33", "cube", "petersen"];

/// A simple undirected graph in which every vertex has exactly three neighbors.
///
/// Vertex `v` carries the label symbol `v + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicGraph {
    names: Vec<String>,
    adj: Vec<[usize; 3]>,
}

impl CubicGraph {
    pub fn from_edges(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        if n > MAX_SIGMA as usize {
            return Err(Error::InvalidGraph(format!(
                "{n} vertices exceed {MAX_SIGMA} labels"
            )));
        }
        let mut lists: Vec<Vec<usize>> = vec![Vec::with_capacity(3); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) references a missing vertex"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {}", names[u])));
            }
            if lists[u].contains(&v) {
                return Err(Error::InvalidGraph(format!(
                    "repeated edge {} {}",
                    names[u], names[v]
                )));
            }
            lists[u].push(v);
            lists[v].push(u);
        }
        if n < 4 {
            return Err(Error::InvalidGraph(format!(
                "a cubic graph needs at least 4 vertices, got {n}"
            )));
        }
        let adj = lists
            .into_iter()
            .enumerate()
            .map(|(v, mut nbrs)| {
                nbrs.sort_unstable();
                <[usize; 3]>::try_from(nbrs.as_slice()).map_err(|_| {
                    Error::InvalidGraph(format!(
                        "vertex {} has degree {}, expected 3",
                        names[v],
                        nbrs.len()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CubicGraph { names, adj })
    }

    /// Parses `u v` edge lines; `#` starts a comment. Vertex names get ids in
    /// first-appearance order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut ids: HashMap<String, usize> = HashMap::new();
        let mut names = Vec::new();
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let [u, v] = tokens.as_slice() else {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("expected `u v`, got {line:?}"),
                });
            };
            let mut id = |name: &str| {
                *ids.entry(name.to_string()).or_insert_with(|| {
                    names.push(name.to_string());
                    names.len() - 1
                })
            };
            let (u, v) = (id(u), id(v));
            edges.push((u, v));
        }
        CubicGraph::from_edges(names, &edges)
    }

    /// One of [`NAMED_GRAPHS`].
    pub fn named(name: &str) -> Option<Self> {
        let (n, edges): (usize, Vec<(usize, usize)>) = match name {
            "k4" => (4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            "k33" => (6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect()),
            "cube" => {
                let edges = (0..8usize)
                    .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
                    .filter(|(u, v)| u < v)
                    .collect();
                (8, edges)
            }
            "petersen" => {
                let mut edges = Vec::new();
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                }
                (10, edges)
            }
            _ => return None,
        };
        Some(CubicGraph::from_edges(default_names(n), &edges).expect("built-in graphs are cubic"))
    }

    /// A named graph, or a path to an edge-list file.
    pub fn load(name_or_path: &str) -> Result<Self> {
        if let Some(g) = CubicGraph::named(name_or_path) {
            return Ok(g);
        }
        let text = std::fs::read_to_string(name_or_path)
            .map_err(|e| Error::InvalidGraph(format!("{name_or_path}: {e}")))?;
        CubicGraph::parse(&text)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> [usize; 3] {
        self.adj[v]
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn label(&self, v: usize) -> Symbol {
        Symbol::new(v as u32 + 1).expect("vertex count bounded by MAX_SIGMA")
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// Undirected edges with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        self.adj.iter().map(|a| a.to_vec()).collect()
    }

    pub fn to_text(&self) -> String {
        self.edges()
            .into_iter()
            .map(|(u, v)| format!("{} {}\n", self.names[u], self.names[v]))
            .collect()
    }

    pub fn dominating_number(&self) -> Result<DominationCertificate> {
        dominating_number(&self.adjacency())
    }
}

/// Vertex names matching the label text form: letters up to 26 vertices, ids above.
fn default_names(n: usize) -> Vec<String> {
    let style = SymbolStyle::for_sigma(n as u32);
    (1..=n as u32)
        .map(|id| style.symbol(Symbol::new(id).expect("id in range")))
        .collect()
}

/// Random cubic graph from the pairing model, rejecting loops and repeated edges.
pub fn random_cubic(n: usize, seed: u64) -> Result<CubicGraph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "cubic graphs need an even n >= 4, got {n}"
        )));
    }
    if n > MAX_SIGMA as usize {
        return Err(Error::InvalidParameter(format!("n={n} exceeds {MAX_SIGMA}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
    loop {
        stubs.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = stubs.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        if let Ok(g) = CubicGraph::from_edges(default_names(n), &edges) {
            return Ok(g);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationCertificate {
    pub gamma: usize,
    pub witness: Vec<usize>,
}

pub fn is_dominating(adjacency: &[Vec<usize>], set: &[usize]) -> bool {
    let mut covered = vec![false; adjacency.len()];
    for &v in set {
        covered[v] = true;
        for &u in &adjacency[v] {
            covered[u] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

/// Minimum dominating set by exhaustive search over increasing sizes.
pub fn dominating_number(adjacency: &[Vec<usize>]) -> Result<DominationCertificate> {
    let n = adjacency.len();
    if n > DOMINATION_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "{n} vertices (limit {DOMINATION_MAX_VERTICES})"
        )));
    }
    let closed: Vec<u32> = adjacency
        .iter()
        .enumerate()
        .map(|(v, nbrs)| nbrs.iter().fold(1u32 << v, |acc, &u| acc | 1 << u))
        .collect();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut chosen = Vec::new();
    for size in 0..=n {
        if search(&closed, full, 0, 0, size, &mut chosen) {
            return Ok(DominationCertificate {
                gamma: size,
                witness: chosen,
            });
        }
    }
    unreachable!("the full vertex set dominates")
}

fn search(
    closed: &[u32],
    full: u32,
    start: usize,
    covered: u32,
    left: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if left == 0 {
        return covered == full;
    }
    for v in start..closed.len() {
        if closed.len() - v < left {
            break;
        }
        chosen.push(v);
        if search(closed, full, v + 1, covered | closed[v], left - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
