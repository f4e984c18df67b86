//! Reduction from `(g,f)`-parity factors to perfect matchings.
//!
//! First `(f(v) - g(v)) / 2` loops are attached at every vertex, which turns
//! the parity factor question into an f-factor question. The f-factor graph
//! is then expanded into a simple graph whose perfect matchings correspond
//! to f-factors: vertex `v` of degree `D` becomes `D` stub nodes (one per edge
//! end) plus `D - f(v)` core nodes joined completely to the stubs.

use std::collections::BTreeMap;

use super::DegreeConstraint;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `G'`: `G` with `(f(v) - g(v)) / 2` extra loops at every `v`, together with `f`.
pub fn attach_parity_loops(g: &Graph, c: &DegreeConstraint) -> Result<(Graph, Vec<usize>)> {
    c.check_graph(g)?;
    let mut out = g.clone();
    for v in 0..g.n() {
        out.add_loops(v, (c.f(v) - c.g(v)) / 2)?;
    }
    Ok((out, c.f_values().to_vec()))
}

/// What a stub-stub edge of the gadget stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrigin {
    Edge(usize, usize),
    Loop(usize),
}

#[derive(Debug, Clone)]
pub struct Gadget {
    /// The simple graph to be matched.
    pub graph: Graph,
    /// Original vertex owning each gadget node.
    pub owner: Vec<usize>,
    /// Stub-stub edges, keyed by `(min node, max node)`.
    pub origins: BTreeMap<(usize, usize), EdgeOrigin>,
}

impl Gadget {
    pub fn origin(&self, a: usize, b: usize) -> Option<EdgeOrigin> {
        self.origins.get(&(a.min(b), a.max(b))).copied()
    }
}

/// Builds the matching gadget for the f-factor problem on `g`.
pub fn gadget_reduce(g: &Graph, f: &[usize]) -> Result<Gadget> {
    let n = g.n();
    if f.len() != n {
        return Err(Error::InvalidInput(format!("f has {} entries, graph has {n} vertices", f.len())));
    }
    let deg = g.degrees();
    if let Some(v) = (0..n).find(|&v| f[v] > deg[v]) {
        return Err(Error::Infeasible(format!("f({v}) = {} exceeds degree {}", f[v], deg[v])));
    }

    let mut offset = Vec::with_capacity(n);
    let mut total = 0;
    for v in 0..n {
        offset.push(total);
        total += 2 * deg[v] - f[v];
    }
    let mut owner = vec![0; total];
    for v in 0..n {
        owner[offset[v]..offset[v] + 2 * deg[v] - f[v]].fill(v);
    }

    let mut gadget = Graph::new(total);
    let mut origins = BTreeMap::new();
    let mut next_stub = offset.clone();
    let mut take = |v: usize| {
        let s = next_stub[v];
        next_stub[v] += 1;
        s
    };
    for (u, v, m) in g.edges() {
        for _ in 0..m {
            let (a, b) = (take(u), take(v));
            gadget.add_edge(a, b)?;
            origins.insert((a.min(b), a.max(b)), EdgeOrigin::Edge(u, v));
        }
    }
    for (v, count) in g.loop_entries() {
        for _ in 0..count {
            let (a, b) = (take(v), take(v));
            gadget.add_edge(a, b)?;
            origins.insert((a, b), EdgeOrigin::Loop(v));
        }
    }
    for v in 0..n {
        let stubs = offset[v]..offset[v] + deg[v];
        let cores = offset[v] + deg[v]..offset[v] + 2 * deg[v] - f[v];
        for core in cores {
            for stub in stubs.clone() {
                gadget.add_edge(stub, core)?;
            }
        }
    }
    Ok(Gadget { graph: gadget, owner, origins })
}
