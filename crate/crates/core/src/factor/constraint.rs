use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Per-vertex bounds `g(v) <= f(v)` with `g(v) = f(v) (mod 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeConstraint {
    g: Vec<usize>,
    f: Vec<usize>,
}

impl DegreeConstraint {
    pub fn new(g: Vec<usize>, f: Vec<usize>) -> Result<Self> {
        let c = DegreeConstraint { g, f };
        c.validate()?;
        Ok(c)
    }

    pub fn uniform(n: usize, g: usize, f: usize) -> Result<Self> {
        DegreeConstraint::new(vec![g; n], vec![f; n])
    }

    fn validate(&self) -> Result<()> {
        if self.g.len() != self.f.len() {
            return Err(Error::InvalidInput(format!(
                "g has {} entries but f has {}",
                self.g.len(),
                self.f.len()
            )));
        }
        for (v, (&g, &f)) in self.g.iter().zip(&self.f).enumerate() {
            if g > f {
                return Err(Error::InvalidInput(format!("g({v}) = {g} exceeds f({v}) = {f}")));
            }
            if (f - g) % 2 != 0 {
                return Err(Error::InvalidInput(format!("g({v}) = {g} and f({v}) = {f} differ in parity")));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    pub fn g(&self, v: usize) -> usize {
        self.g[v]
    }

    pub fn f(&self, v: usize) -> usize {
        self.f[v]
    }

    pub fn g_values(&self) -> &[usize] {
        &self.g
    }

    pub fn f_values(&self) -> &[usize] {
        &self.f
    }

    pub fn g_sum(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.g[v]).sum()
    }

    pub fn f_sum(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.f[v]).sum()
    }

    pub fn f_total(&self) -> usize {
        self.f.iter().sum()
    }

    pub fn sum_f_even(&self) -> bool {
        self.f_total() % 2 == 0
    }

    /// The constraint must have one entry per vertex of `g`.
    pub fn check_graph(&self, graph: &Graph) -> Result<()> {
        if self.len() != graph.n() {
            return Err(Error::InvalidInput(format!(
                "constraint covers {} vertices but the graph has {}",
                self.len(),
                graph.n()
            )));
        }
        Ok(())
    }

    /// `(d - f, d - g)`; a spanning subgraph `H` is a `(g,f)`-parity factor
    /// iff its complement in `G` is a parity factor for the returned pair.
    pub fn complement(&self, graph: &Graph) -> Result<DegreeConstraint> {
        self.check_graph(graph)?;
        let mut g2 = Vec::with_capacity(self.len());
        let mut f2 = Vec::with_capacity(self.len());
        for v in 0..self.len() {
            let d = graph.degree(v);
            if self.f[v] > d {
                return Err(Error::InvalidInput(format!("f({v}) = {} exceeds the degree {d}", self.f[v])));
            }
            g2.push(d - self.f[v]);
            f2.push(d - self.g[v]);
        }
        DegreeConstraint::new(g2, f2)
    }
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Reads a constraint for a graph on `n` vertices.
///
/// Either JSON `{"g": [...], "f": [...]}`, or lines `all <g> <f>` and
/// `v <id> <g> <f>` (per-vertex lines override `all`). `#` starts a comment.
pub fn parse_constraints(text: &str, n: usize) -> Result<DegreeConstraint> {
    if text.trim_start().starts_with('{') {
        let c: DegreeConstraint =
            serde_json::from_str(text).map_err(|e| perr(e.line(), e.to_string()))?;
        c.validate()?;
        if c.len() != n {
            return Err(Error::InvalidInput(format!(
                "constraint covers {} vertices but the graph has {n}",
                c.len()
            )));
        }
        return Ok(c);
    }

    let mut default: Option<(usize, usize)> = None;
    let mut per_vertex: Vec<Option<(usize, usize)>> = vec![None; n];
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
        let Some(&kind) = toks.first() else { continue };
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| perr(line, format!("expected non-negative integer, found `{t}`")))
        };
        match kind {
            "all" => {
                if toks.len() != 3 {
                    return Err(perr(line, "expected `all <g> <f>`"));
                }
                if default.is_some() {
                    return Err(perr(line, "duplicate `all` line"));
                }
                default = Some((parse(toks[1])?, parse(toks[2])?));
            }
            "v" => {
                if toks.len() != 4 {
                    return Err(perr(line, "expected `v <id> <g> <f>`"));
                }
                let v = parse(toks[1])?;
                if v >= n {
                    return Err(perr(line, format!("vertex id out of range 0..{n}")));
                }
                if per_vertex[v].is_some() {
                    return Err(perr(line, format!("vertex {v} constrained twice")));
                }
                per_vertex[v] = Some((parse(toks[2])?, parse(toks[3])?));
            }
            other => return Err(perr(line, format!("unknown line type `{other}`"))),
        }
    }
    let mut g = Vec::with_capacity(n);
    let mut f = Vec::with_capacity(n);
    for (v, entry) in per_vertex.into_iter().enumerate() {
        let (gv, fv) = entry
            .or(default)
            .ok_or_else(|| Error::InvalidInput(format!("no constraint given for vertex {v}")))?;
        g.push(gv);
        f.push(fv);
    }
    DegreeConstraint::new(g, f)
}
