//! Bipartite graphs and maximum matching (Hopcroft–Karp).

use std::collections::VecDeque;

use crate::error::{Error, Result};

const NIL: usize = usize::MAX;

/// Bipartite (multi)graph with `left` and `right` sides indexed from zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); left];
        for &(u, v) in edges {
            if u >= left || v >= right {
                return Err(Error::InvalidParameter(format!("edge ({u}, {v}) out of range")));
            }
            adj[u].push(v);
        }
        Ok(BipartiteGraph { right, adj })
    }

    pub fn left(&self) -> usize {
        self.adj.len()
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
            .collect()
    }

    /// The common degree when every node on both sides has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = self.adj.first().map_or(0, Vec::len);
        let mut right_deg = vec![0usize; self.right];
        for vs in &self.adj {
            if vs.len() != r {
                return None;
            }
            for &v in vs {
                right_deg[v] += 1;
            }
        }
        right_deg.iter().all(|&d| d == r).then_some(r)
    }

    /// Removes one copy of each listed edge.
    pub fn without(&self, edges: &[(usize, usize)]) -> BipartiteGraph {
        let mut adj = self.adj.clone();
        for &(u, v) in edges {
            if let Some(i) = adj[u].iter().position(|&x| x == v) {
                adj[u].swap_remove(i);
            }
        }
        BipartiteGraph {
            right: self.right,
            adj,
        }
    }

    /// Maximum matching as `(left, right)` pairs sorted by left node.
    pub fn maximum_matching(&self) -> Vec<(usize, usize)> {
        HopcroftKarp::new(self).run()
    }
}

/// Perfect matching of an `r`-regular bipartite graph, `r ≥ 1`.
pub fn perfect_matching(graph: &BipartiteGraph) -> Result<Vec<(usize, usize)>> {
    match graph.regular_degree() {
        Some(r) if r >= 1 && graph.left() == graph.right() => {}
        _ => return Err(Error::NotRegularBipartite),
    }
    let matching = graph.maximum_matching();
    // Regular bipartite graphs always have one; a shortfall means a matching bug.
    assert_eq!(
        matching.len(),
        graph.left(),
        "regular bipartite graph without perfect matching"
    );
    Ok(matching)
}

struct HopcroftKarp<'a> {
    g: &'a BipartiteGraph,
    match_left: Vec<usize>,
    match_right: Vec<usize>,
    dist: Vec<usize>,
}

impl<'a> HopcroftKarp<'a> {
    fn new(g: &'a BipartiteGraph) -> Self {
        HopcroftKarp {
            g,
            match_left: vec![NIL; g.left()],
            match_right: vec![NIL; g.right()],
            dist: vec![NIL; g.left()],
        }
    }

    fn run(mut self) -> Vec<(usize, usize)> {
        while self.bfs() {
            for u in 0..self.g.left() {
                if self.match_left[u] == NIL {
                    self.dfs(u);
                }
            }
        }
        self.match_left
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != NIL)
            .map(|(u, &v)| (u, v))
            .collect()
    }

    /// Layers free left nodes; true if some augmenting path exists.
    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for u in 0..self.g.left() {
            if self.match_left[u] == NIL {
                self.dist[u] = 0;
                queue.push_back(u);
            } else {
                self.dist[u] = NIL;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in self.g.neighbors(u) {
                let w = self.match_right[v];
                if w == NIL {
                    found = true;
                } else if self.dist[w] == NIL {
                    self.dist[w] = self.dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        found
    }

    fn dfs(&mut self, u: usize) -> bool {
        for i in 0..self.g.neighbors(u).len() {
            let v = self.g.neighbors(u)[i];
            let w = self.match_right[v];
            if w == NIL || (self.dist[w] == self.dist[u] + 1 && self.dfs(w)) {
                self.match_left[u] = v;
                self.match_right[v] = u;
                return true;
            }
        }
        self.dist[u] = NIL;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_perfect(g: &BipartiteGraph, m: &[(usize, usize)]) -> bool {
        let mut l = vec![0; g.left()];
        let mut r = vec![0; g.right()];
        for &(u, v) in m {
            if !g.neighbors(u).contains(&v) {
                return false;
            }
            l[u] += 1;
            r[v] += 1;
        }
        l.iter().chain(&r).all(|&c| c == 1)
    }

    #[test]
    fn one_regular_returns_its_edges() {
        let g = BipartiteGraph::new(3, 3, &[(0, 2), (1, 0), (2, 1)]).unwrap();
        assert_eq!(perfect_matching(&g).unwrap(), vec![(0, 2), (1, 0), (2, 1)]);
    }

    #[test]
    fn complete_bipartite_regular() {
        let edges: Vec<_> = (0..5).flat_map(|u| (0..5).map(move |v| (u, v))).collect();
        let g = BipartiteGraph::new(5, 5, &edges).unwrap();
        assert!(is_perfect(&g, &perfect_matching(&g).unwrap()));
    }

    #[test]
    fn rejects_irregular() {
        let g = BipartiteGraph::new(2, 2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        assert_eq!(perfect_matching(&g), Err(Error::NotRegularBipartite));
        let empty = BipartiteGraph::new(2, 2, &[]).unwrap();
        assert_eq!(perfect_matching(&empty), Err(Error::NotRegularBipartite));
        assert!(BipartiteGraph::new(1, 1, &[(0, 1)]).is_err());
    }

    #[test]
    fn maximum_matching_on_path_needs_augmentation() {
        // 0-0, 0-1, 1-0: greedy 0-0 must be rerouted.
        let g = BipartiteGraph::new(2, 2, &[(0, 0), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.maximum_matching().len(), 2);
    }

    #[test]
    fn removing_a_matching_keeps_regularity() {
        let edges: Vec<_> = (0..4).flat_map(|u| (0..4).map(move |v| (u, v))).collect();
        let g = BipartiteGraph::new(4, 4, &edges).unwrap();
        let m = perfect_matching(&g).unwrap();
        assert_eq!(g.without(&m).regular_degree(), Some(3));
    }
}
