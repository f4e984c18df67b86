//! Undirected multigraphs with loops.
//!
//! Vertices are the dense ids `0..n`. Parallel edges are stored as a
//! multiplicity per unordered pair and loops as a count per vertex; a loop
//! contributes 2 to the degree of its vertex. Every ordering produced by this
//! module (edges, components, vertex sets) is ascending by id.

mod connectivity;
mod io;

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use connectivity::edge_connectivity;
pub use io::{parse_graph, serialize_graph};

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn range(start: usize, end: usize) -> Self {
        VertexSet((start..end).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Checks that every id is a vertex of a graph on `n` vertices.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::InvalidVertex { vertex: v, n }),
            _ => Ok(()),
        }
    }

    /// Returns the first common element, if any.
    pub fn intersection_witness(&self, other: &VertexSet) -> Option<usize> {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return Some(self.0[i]),
            }
        }
        None
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut ids = self.0.clone();
        ids.extend_from_slice(&other.0);
        VertexSet::new(ids)
    }

    /// Membership mask over `0..n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(ids: Vec<usize>) -> Self {
        VertexSet::new(ids)
    }
}

/// Undirected multigraph on the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeMap<usize, usize>>,
    loops: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeMap::new(); n],
            loops: vec![0; n],
        }
    }

    /// Simple graph from an edge list. Repeated pairs become parallel edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.add_edge_mult(u, v, 1)
    }

    /// Adds `mult` parallel copies of the edge `uv`. `u == v` is rejected;
    /// use [`Graph::add_loops`].
    pub fn add_edge_mult(&mut self, u: usize, v: usize, mult: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::InvalidInput(format!(
                "edge {u}-{v} is a loop; loops are added separately"
            )));
        }
        if mult == 0 {
            return Ok(());
        }
        *self.adj[u].entry(v).or_insert(0) += mult;
        *self.adj[v].entry(u).or_insert(0) += mult;
        Ok(())
    }

    pub fn add_loops(&mut self, v: usize, count: usize) -> Result<()> {
        self.check(v)?;
        self.loops[v] += count;
        Ok(())
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.adj.get(u).and_then(|m| m.get(&v)).copied().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.multiplicity(u, v) > 0
    }

    pub fn loops(&self, v: usize) -> usize {
        self.loops[v]
    }

    /// Non-loop neighbours of `v` with multiplicities, ascending by id.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj[v].iter().map(|(&w, &m)| (w, m))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].values().sum::<usize>() + 2 * self.loops[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Non-loop edges as `(u, v, multiplicity)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            for (&v, &m) in nbrs.range(u + 1..) {
                out.push((u, v, m));
            }
        }
        out
    }

    /// `(v, count)` for every vertex carrying loops.
    pub fn loop_entries(&self) -> Vec<(usize, usize)> {
        self.loops
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(v, &c)| (v, c))
            .collect()
    }

    /// Number of non-loop edges, counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.values().sum::<usize>()).sum::<usize>() / 2
    }

    pub fn loop_count(&self) -> usize {
        self.loops.iter().sum()
    }

    pub fn is_simple(&self) -> bool {
        self.loops.iter().all(|&c| c == 0) && self.adj.iter().all(|m| m.values().all(|&x| x == 1))
    }

    pub(crate) fn require_simple(&self, what: &str) -> Result<()> {
        if self.is_simple() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "{what} requires a simple graph (no loops or parallel edges)"
            )))
        }
    }

    /// `d(S)`: the sum of degrees over `s`.
    pub fn degree_sum(&self, s: &VertexSet) -> Result<usize> {
        s.validate(self.n())?;
        Ok(s.iter().map(|v| self.degree(v)).sum())
    }

    /// `|[S,T]|`: edges with one end in `s` and the other in `t`, with multiplicity.
    pub fn cut_size(&self, s: &VertexSet, t: &VertexSet) -> Result<usize> {
        s.validate(self.n())?;
        t.validate(self.n())?;
        if let Some(v) = s.intersection_witness(t) {
            return Err(Error::Overlapping(v));
        }
        let in_t = t.mask(self.n());
        Ok(s.iter()
            .flat_map(|v| self.neighbors(v))
            .filter(|&(w, _)| in_t[w])
            .map(|(_, m)| m)
            .sum())
    }

    /// Connected components of `G - removed`, each sorted, listed by smallest id.
    pub fn components(&self, removed: &VertexSet) -> Result<Vec<VertexSet>> {
        removed.validate(self.n())?;
        let mut seen = removed.mask(self.n());
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for (w, _) in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        Ok(out)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components(&VertexSet::empty()).map(|c| c.len() == 1).unwrap_or(false)
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in ascending order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Graph> {
        keep.validate(self.n())?;
        let mut index = vec![usize::MAX; self.n()];
        for (i, v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut sub = Graph::new(keep.len());
        for v in keep.iter() {
            sub.loops[index[v]] = self.loops[v];
            for (w, m) in self.neighbors(v) {
                if index[w] != usize::MAX {
                    sub.adj[index[v]].insert(index[w], m);
                }
            }
        }
        Ok(sub)
    }

    /// Dense row-major 0/1 adjacency matrix (entries are multiplicities,
    /// with `2 * loops` on the diagonal).
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n();
        let mut a = vec![0.0; n * n];
        for v in 0..n {
            a[v * n + v] = 2.0 * self.loops[v] as f64;
            for (w, m) in self.neighbors(v) {
                a[v * n + w] = m as f64;
            }
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn degree_sum_examples() {
        let k4 = complete(4);
        assert_eq!(k4.degree_sum(&VertexSet::full(4)).unwrap(), 12);
        assert_eq!(k4.degree_sum(&VertexSet::empty()).unwrap(), 0);

        let mut g = Graph::new(2);
        g.add_edge(0, 1).unwrap();
        g.add_loops(0, 1).unwrap();
        assert_eq!(g.degree_sum(&VertexSet::new(vec![0])).unwrap(), 3);
        assert!(matches!(
            g.degree_sum(&VertexSet::new(vec![5])),
            Err(Error::InvalidVertex { vertex: 5, n: 2 })
        ));
    }

    #[test]
    fn cut_size_examples() {
        let mut kb = Graph::new(5);
        for u in 0..2 {
            for v in 2..5 {
                kb.add_edge(u, v).unwrap();
            }
        }
        let s = VertexSet::range(0, 2);
        let t = VertexSet::range(2, 5);
        assert_eq!(kb.cut_size(&s, &t).unwrap(), 6);
        assert_eq!(kb.cut_size(&t, &s).unwrap(), 6);

        let mut two = Graph::new(6);
        for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
            two.add_edge(u, v).unwrap();
        }
        assert_eq!(two.cut_size(&VertexSet::range(0, 3), &VertexSet::range(3, 6)).unwrap(), 0);
        assert_eq!(
            two.cut_size(&VertexSet::new(vec![0, 1]), &VertexSet::new(vec![1])),
            Err(Error::Overlapping(1))
        );
    }

    #[test]
    fn cut_counts_multiplicity() {
        let mut g = Graph::new(3);
        g.add_edge_mult(0, 1, 3).unwrap();
        g.add_edge(1, 2).unwrap();
        g.add_loops(1, 4).unwrap();
        assert_eq!(g.cut_size(&VertexSet::new(vec![1]), &VertexSet::new(vec![0, 2])).unwrap(), 4);
        assert_eq!(g.degree(1), 12);
        assert_eq!(g.edge_count(), 4);
        assert!(!g.is_simple());
    }

    #[test]
    fn components_examples() {
        let k4 = complete(4);
        assert_eq!(k4.components(&VertexSet::empty()).unwrap().len(), 1);

        let mut g = Graph::new(5);
        for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4)] {
            g.add_edge(u, v).unwrap();
        }
        let comps = g.components(&VertexSet::empty()).unwrap();
        assert_eq!(comps, vec![VertexSet::range(0, 3), VertexSet::range(3, 5)]);

        let comps = g.components(&VertexSet::new(vec![1])).unwrap();
        assert_eq!(comps, vec![VertexSet::new(vec![0, 2]), VertexSet::range(3, 5)]);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let k4 = complete(4);
        let sub = k4.induced_subgraph(&VertexSet::new(vec![1, 3])).unwrap();
        assert_eq!(sub.n(), 2);
        assert!(sub.has_edge(0, 1));
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::new(2);
        assert!(g.add_edge(0, 2).is_err());
        assert!(g.add_edge(1, 1).is_err());
    }
}
