//! Graph builders: standard graphs, complements, sequential joins, the
//! extremal graphs `H(r, eta)`, splicing and the family `F(r, h, l)`.
//!
//! Composite builders number vertices block by block in argument order.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardGraph {
    /// `K_n`
    Complete(usize),
    /// `C_n`, `n >= 3`
    Cycle(usize),
    /// `K_{h,l}`; the `h` side gets ids `0..h`
    CompleteBipartite(usize, usize),
    /// `n` isolated vertices
    Empty(usize),
    /// `k K_2`
    Matching(usize),
}

impl StandardGraph {
    pub fn build(self) -> Result<Graph> {
        let positive = |x: usize, what: &str| {
            if x == 0 {
                Err(Error::InvalidInput(format!("{what} must be positive")))
            } else {
                Ok(())
            }
        };
        match self {
            StandardGraph::Complete(n) => {
                positive(n, "K_n size")?;
                let mut g = Graph::new(n);
                for u in 0..n {
                    for v in u + 1..n {
                        g.add_edge(u, v)?;
                    }
                }
                Ok(g)
            }
            StandardGraph::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidInput(format!("cycle needs at least 3 vertices, got {n}")));
                }
                let mut g = Graph::new(n);
                for i in 0..n {
                    g.add_edge(i, (i + 1) % n)?;
                }
                Ok(g)
            }
            StandardGraph::CompleteBipartite(h, l) => {
                positive(h, "K_{h,l} side")?;
                positive(l, "K_{h,l} side")?;
                let mut g = Graph::new(h + l);
                for u in 0..h {
                    for v in h..h + l {
                        g.add_edge(u, v)?;
                    }
                }
                Ok(g)
            }
            StandardGraph::Empty(n) => {
                positive(n, "vertex count")?;
                Ok(Graph::new(n))
            }
            StandardGraph::Matching(k) => {
                positive(k, "matching size")?;
                let mut g = Graph::new(2 * k);
                for i in 0..k {
                    g.add_edge(2 * i, 2 * i + 1)?;
                }
                Ok(g)
            }
        }
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    StandardGraph::Complete(n).build()
}

pub fn cycle(n: usize) -> Result<Graph> {
    StandardGraph::Cycle(n).build()
}

pub fn complete_bipartite(h: usize, l: usize) -> Result<Graph> {
    StandardGraph::CompleteBipartite(h, l).build()
}

pub fn matching(k: usize) -> Result<Graph> {
    StandardGraph::Matching(k).build()
}

pub fn complement(g: &Graph) -> Result<Graph> {
    g.require_simple("complement")?;
    let n = g.n();
    let mut out = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                out.add_edge(u, v)?;
            }
        }
    }
    Ok(out)
}

fn copy_into(dst: &mut Graph, src: &Graph, offset: usize) -> Result<()> {
    for (u, v, m) in src.edges() {
        dst.add_edge_mult(u + offset, v + offset, m)?;
    }
    for (v, c) in src.loop_entries() {
        dst.add_loops(v + offset, c)?;
    }
    Ok(())
}

/// Vertex blocks `[start, start + size)` for consecutive parts.
pub fn blocks(sizes: &[usize]) -> Vec<VertexSet> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&s| {
            let b = VertexSet::range(start, start + s);
            start += s;
            b
        })
        .collect()
}

pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
    let mut out = Graph::new(parts.iter().map(Graph::n).sum());
    let mut offset = 0;
    for p in parts {
        copy_into(&mut out, p, offset)?;
        offset += p.n();
    }
    Ok(out)
}

/// `m G`.
pub fn disjoint_copies(m: usize, g: &Graph) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidInput("number of copies must be positive".into()));
    }
    disjoint_union(&vec![g.clone(); m])
}

/// `G_1 v G_2 v ... v G_t`: the disjoint union plus all edges between
/// consecutive parts `G_i`, `G_{i+1}` (and no others).
pub fn sequential_join(parts: &[Graph]) -> Result<Graph> {
    if parts.len() < 2 {
        return Err(Error::InvalidInput(format!("join needs at least 2 graphs, got {}", parts.len())));
    }
    let mut out = disjoint_union(parts)?;
    let bl = blocks(&parts.iter().map(Graph::n).collect::<Vec<_>>());
    for pair in bl.windows(2) {
        for u in pair[0].iter() {
            for v in pair[1].iter() {
                out.add_edge(u, v)?;
            }
        }
    }
    Ok(out)
}

fn extremal_parts(r: usize, eta: usize) -> Result<Vec<Graph>> {
    if eta < 1 || r <= eta {
        return Err(Error::Domain(format!("H(r, eta) needs r > eta >= 1, got r={r}, eta={eta}")));
    }
    if r % 2 == 0 || eta % 2 == 0 {
        let k = eta / 2;
        if k == 0 {
            return Ok(vec![complete(r + 1)?]);
        }
        Ok(vec![complement(&matching(k)?)?, complete(r + 1 - 2 * k)?])
    } else if eta >= 3 {
        Ok(vec![complement(&cycle(eta)?)?, complement(&matching((r + 2 - eta) / 2)?)?])
    } else {
        Ok(vec![complete(1)?, complement(&matching((r - 1) / 2)?)?, complete(2)?])
    }
}

/// The extremal graph `H(r, eta)` whose spectral radius is `rho(r, eta)`:
///
/// * `co(floor(eta/2) K_2) v K_{r+1-2 floor(eta/2)}` if `r` or `eta` is even,
/// * `co(C_eta) v co(((r+2-eta)/2) K_2)` if both are odd and `eta >= 3`,
/// * `K_1 v co(((r-1)/2) K_2) v K_2` if `r` is odd and `eta = 1`.
pub fn extremal_h(r: usize, eta: usize) -> Result<Graph> {
    let parts = extremal_parts(r, eta)?;
    if parts.len() == 1 {
        return Ok(parts.into_iter().next().unwrap());
    }
    sequential_join(&parts)
}

/// The join blocks of [`extremal_h`], an equitable partition.
pub fn extremal_h_blocks(r: usize, eta: usize) -> Result<Vec<VertexSet>> {
    let parts = extremal_parts(r, eta)?;
    Ok(blocks(&parts.iter().map(Graph::n).collect::<Vec<_>>()))
}

/// Splices `b` into vertex `u` of `h`.
///
/// `b` must have maximum degree `a`; with `def = sum (a - d_B(x))`, `u` must
/// have degree `def` or `def + 1`. The result drops `u`, keeps the other
/// vertices of `h` in order and appends `b`. The neighbours of `u`, in
/// ascending order, fill the degree deficits of `b`: every deficient vertex
/// receives its first edge before any receives its second, ties by id. A
/// leftover edge goes to vertex 0 of `b`, which then has degree `a + 1`.
pub fn splice(h: &Graph, u: usize, b: &Graph, a: usize) -> Result<Graph> {
    h.require_simple("splicing")?;
    b.require_simple("splicing")?;
    if u >= h.n() {
        return Err(Error::InvalidVertex { vertex: u, n: h.n() });
    }
    if b.n() == 0 || b.max_degree() != a {
        return Err(Error::InvalidInput(format!(
            "spliced graph has maximum degree {}, expected {a}",
            b.max_degree()
        )));
    }
    let deficits: Vec<usize> = (0..b.n()).map(|x| a - b.degree(x)).collect();
    let total: usize = deficits.iter().sum();
    let du = h.degree(u);
    if du != total && du != total + 1 {
        return Err(Error::InvalidInput(format!(
            "vertex {u} has degree {du}, splicing needs {total} or {}",
            total + 1
        )));
    }

    let keep = |v: usize| if v < u { v } else { v - 1 };
    let offset = h.n() - 1;
    let mut out = Graph::new(offset + b.n());
    for (x, y, _) in h.edges() {
        if x != u && y != u {
            out.add_edge(keep(x), keep(y))?;
        }
    }
    for (x, y, _) in b.edges() {
        out.add_edge(offset + x, offset + y)?;
    }

    let max_def = deficits.iter().copied().max().unwrap_or(0);
    let mut slots = Vec::with_capacity(total + 1);
    for round in 0..max_def {
        slots.extend((0..b.n()).filter(|&x| deficits[x] > round));
    }
    slots.push(0);
    for ((w, _), x) in h.neighbors(u).zip(slots) {
        out.add_edge(keep(w), offset + x)?;
    }
    Ok(out)
}

/// A member of `F(r, h, l)`: `K_{h,l}` with `H(r, h)` spliced into every
/// vertex of the `l` side.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyInstance {
    #[serde(skip)]
    pub graph: Graph,
    /// The surviving `h` side of `K_{h,l}`, ids `0..h`.
    #[serde(rename = "U")]
    pub u: VertexSet,
    /// Vertex sets of the `l` spliced copies of `H(r, h)`.
    pub copies: Vec<VertexSet>,
    pub params: FamilyParams,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub r: usize,
    pub h: usize,
    pub l: usize,
}

impl FamilyInstance {
    /// `{"U": [...], "copies": [[...], ...], "params": {"r", "h", "l"}}`
    pub fn sidecar_json(&self) -> String {
        serde_json::to_string(self).expect("sidecar serialization cannot fail")
    }
}

pub fn family_f(r: usize, h: usize, l: usize) -> Result<FamilyInstance> {
    if !(l >= r && r > h && h >= 1) {
        return Err(Error::Domain(format!("F(r, h, l) needs l >= r > h >= 1, got r={r}, h={h}, l={l}")));
    }
    let part = extremal_h(r, h)?;
    let mut graph = complete_bipartite(h, l)?;
    for _ in 0..l {
        // the next unspliced vertex of the l side always sits at id h
        graph = splice(&graph, h, &part, r)?;
    }
    let size = part.n();
    let copies = (0..l).map(|i| VertexSet::range(h + i * size, h + (i + 1) * size)).collect();
    Ok(FamilyInstance { graph, u: VertexSet::range(0, h), copies, params: FamilyParams { r, h, l } })
}

/// Parameter triples `(r, h, b)` offered as sharpness examples for odd
/// `[1, b]`-factors in `r`-regular `h`-edge-connected graphs, `k >= 3`.
///
/// Each triple is checked for `b` odd, `r > h >= 2` and `r = h (mod 2)`.
/// The stronger ceiling condition is reported by [`remark_condition`].
pub fn remark_examples(k: usize) -> Result<Vec<(usize, usize, usize)>> {
    if k < 3 {
        return Err(Error::Domain(format!("remark examples need k >= 3, got {k}")));
    }
    let triples = vec![
        (4 * k, 2, 2 * k - 1),
        (2 * k + 2, 2 * k, 3),
        (6 * k - 1, 3, 2 * k - 1),
        (6 * k - 1, 2 * k - 1, 3),
    ];
    for &(r, h, b) in &triples {
        if b % 2 == 0 || r <= h || h < 2 || (r - h) % 2 != 0 {
            return Err(Error::Domain(format!("triple ({r}, {h}, {b}) fails the parity/order conditions")));
        }
    }
    Ok(triples)
}

/// `b` odd, `r > h >= 2`, `r = h (mod 2)` and `max(b, h) < ceil(2r / (r - bh)) = r`.
pub fn remark_condition(r: usize, h: usize, b: usize) -> bool {
    if b % 2 == 0 || r <= h || h < 2 || (r - h) % 2 != 0 || r <= b * h {
        return false;
    }
    let denom = r - b * h;
    let ceil = (2 * r).div_ceil(denom);
    ceil == r && b.max(h) < r
}
