//! Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm).

use std::collections::VecDeque;

use crate::error::Result;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A maximum matching of a simple graph as sorted pairs `(u, v)` with `u < v`.
///
/// Deterministic: a greedy pass followed by augmenting-path searches, all
/// scanning vertices and neighbours in ascending order.
pub fn max_matching(g: &Graph) -> Result<Vec<(usize, usize)>> {
    g.require_simple("maximum matching")?;
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).map(|(w, _)| w).collect()).collect();
    let mate = Blossom::new(&adj).solve();
    Ok((0..g.n()).filter(|&v| mate[v] != NONE && v < mate[v]).map(|v| (v, mate[v])).collect())
}

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn solve(mut self) -> Vec<usize> {
        let n = self.adj.len();
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let next = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = next;
                }
            }
        }
        self.mate
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS over alternating paths from `root`; returns the free endpoint of an
    /// augmenting path (recoverable through `parent`/`mate`) if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_matching(g: &Graph, m: &[(usize, usize)]) -> bool {
        let mut seen = vec![false; g.n()];
        m.iter().all(|&(u, v)| {
            let ok = g.has_edge(u, v) && !seen[u] && !seen[v];
            seen[u] = true;
            seen[v] = true;
            ok
        })
    }

    #[test]
    fn small_graphs() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let m = max_matching(&k4).unwrap();
        assert_eq!(m.len(), 2);
        assert!(is_matching(&k4, &m));

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(max_matching(&c5).unwrap().len(), 2);

        assert!(max_matching(&Graph::new(0)).unwrap().is_empty());
    }

    #[test]
    fn needs_blossom_contraction() {
        // greedy takes (0,1) and (2,3); the augmenting path 4-1-0-2-3-5
        // runs through the triangle
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (1, 4), (3, 5)]).unwrap();
        let m = max_matching(&g).unwrap();
        assert_eq!(m.len(), 3);
        assert!(is_matching(&g, &m));
    }
}
