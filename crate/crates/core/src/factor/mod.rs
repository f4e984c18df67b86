//! Deciding, constructing and certifying `(g,f)`-parity factors.
//!
//! Two independent routes are provided. [`decide_bruteforce`] evaluates the
//! Lovász criterion on every disjoint pair `(S, T)` and is exact for small
//! graphs; [`find_parity_factor`] attaches loops, builds the f-factor gadget
//! and runs blossom matching, and scales to large graphs.

mod constraint;
mod gadget;
mod lovasz;
mod matching;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use constraint::{parse_constraints, DegreeConstraint};
pub use gadget::{attach_parity_loops, gadget_reduce, EdgeOrigin, Gadget};
pub use lovasz::{decide_bruteforce, deficiency, q_count, DEFAULT_LIMIT, HARD_LIMIT};
pub use matching::max_matching;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Exists,
    NotExists,
    Unknown,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Exists => "exists",
            Verdict::NotExists => "not-exists",
            Verdict::Unknown => "unknown",
        })
    }
}

/// A disjoint pair `(S, T)` with negative deficiency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    #[serde(rename = "S")]
    pub s: VertexSet,
    #[serde(rename = "T")]
    pub t: VertexSet,
    pub deficiency: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorCertificate {
    pub verdict: Verdict,
    /// Edge multiset of the factor; loops appear as `(v, v)`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factor: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub violation: Option<Violation>,
}

impl FactorCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialization cannot fail")
    }
}

/// Checks that `factor` is a sub-multiset of `E(G)` and that every vertex
/// satisfies `g(v) <= d_F(v) <= f(v)` and `d_F(v) = f(v) (mod 2)`.
pub fn verify_factor(g: &Graph, c: &DegreeConstraint, factor: &[(usize, usize)]) -> Result<bool> {
    c.check_graph(g)?;
    let n = g.n();
    let mut used: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut deg = vec![0usize; n];
    for &(u, v) in factor {
        for x in [u, v] {
            if x >= n {
                return Err(Error::InvalidVertex { vertex: x, n });
            }
        }
        let key = (u.min(v), u.max(v));
        let count = used.entry(key).or_insert(0);
        *count += 1;
        let available = if u == v { g.loops(u) } else { g.multiplicity(u, v) };
        if *count > available {
            return Err(Error::InvalidInput(format!(
                "edge {}-{} used {} times but the graph has {available}",
                key.0, key.1, *count
            )));
        }
        deg[u] += 1;
        deg[v] += 1;
    }
    Ok((0..n).all(|v| c.g(v) <= deg[v] && deg[v] <= c.f(v) && (c.f(v) - deg[v]) % 2 == 0))
}

pub fn find_parity_factor(g: &Graph, c: &DegreeConstraint) -> Result<FactorCertificate> {
    find_parity_factor_with_limit(g, c, DEFAULT_LIMIT)
}

/// Loop attachment, gadget and blossom matching. When no factor exists and
/// `n <= limit`, the violating pair from [`decide_bruteforce`] is attached.
pub fn find_parity_factor_with_limit(
    g: &Graph,
    c: &DegreeConstraint,
    limit: usize,
) -> Result<FactorCertificate> {
    let (with_loops, f) = attach_parity_loops(g, c)?;
    let n = g.n();
    let not_exists = || -> Result<FactorCertificate> {
        let violation = if n <= limit.min(HARD_LIMIT) {
            decide_bruteforce(g, c, limit)?.violation
        } else {
            None
        };
        Ok(FactorCertificate { verdict: Verdict::NotExists, factor: None, violation })
    };

    if (0..n).any(|v| f[v] > with_loops.degree(v)) {
        return not_exists();
    }
    let gadget = gadget_reduce(&with_loops, &f)?;
    let matching = max_matching(&gadget.graph)?;
    if 2 * matching.len() != gadget.graph.n() {
        return not_exists();
    }

    let mut factor = Vec::new();
    let mut loops_used = vec![0usize; n];
    for &(a, b) in &matching {
        match gadget.origin(a, b) {
            Some(EdgeOrigin::Edge(u, v)) => factor.push((u, v)),
            Some(EdgeOrigin::Loop(v)) => loops_used[v] += 1,
            None => {}
        }
    }
    // attached loops absorb the slack first; anything beyond is an original loop
    for v in 0..n {
        let attached = (c.f(v) - c.g(v)) / 2;
        for _ in 0..loops_used[v].saturating_sub(attached) {
            factor.push((v, v));
        }
    }
    factor.sort_unstable();
    debug_assert!(verify_factor(g, c, &factor).unwrap_or(false));
    Ok(FactorCertificate { verdict: Verdict::Exists, factor: Some(factor), violation: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn verify_examples() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let ones = DegreeConstraint::uniform(4, 1, 1).unwrap();
        assert!(verify_factor(&k4, &ones, &[(0, 1), (2, 3)]).unwrap());
        let even = DegreeConstraint::uniform(4, 0, 2).unwrap();
        assert!(verify_factor(&k4, &even, &[]).unwrap());

        let k3 = cycle(3);
        let ones3 = DegreeConstraint::uniform(3, 1, 1).unwrap();
        assert!(!verify_factor(&k3, &ones3, &[(0, 1)]).unwrap());
        assert!(verify_factor(&k3, &ones3, &[(0, 1), (0, 1)]).is_err());
        assert!(verify_factor(&k3, &ones3, &[(1, 1)]).is_err());
    }

    #[test]
    fn find_examples() {
        let c4 = cycle(4);
        let cert = find_parity_factor(&c4, &DegreeConstraint::uniform(4, 1, 1).unwrap()).unwrap();
        assert_eq!(cert.verdict, Verdict::Exists);
        let factor = cert.factor.unwrap();
        assert_eq!(factor.len(), 2);

        let k3 = cycle(3);
        let cert = find_parity_factor(&k3, &DegreeConstraint::uniform(3, 1, 1).unwrap()).unwrap();
        assert_eq!(cert.verdict, Verdict::NotExists);
        assert_eq!(
            cert.violation,
            Some(Violation { s: VertexSet::empty(), t: VertexSet::empty(), deficiency: -1 })
        );
        assert_eq!(
            cert.to_json(),
            r#"{"verdict":"not-exists","violation":{"S":[],"T":[],"deficiency":-1}}"#
        );
    }

    #[test]
    fn original_loops_can_be_used() {
        let mut g = Graph::new(2);
        g.add_edge(0, 1).unwrap();
        g.add_loops(0, 1).unwrap();
        // vertex 0 needs degree exactly 3: the edge plus its loop
        let c = DegreeConstraint::new(vec![3, 1], vec![3, 1]).unwrap();
        let cert = find_parity_factor(&g, &c).unwrap();
        assert_eq!(cert.factor, Some(vec![(0, 0), (0, 1)]));
    }

    #[test]
    fn degree_bound_short_circuits() {
        let c = DegreeConstraint::uniform(3, 3, 3).unwrap();
        let cert = find_parity_factor(&cycle(3), &c).unwrap();
        assert_eq!(cert.verdict, Verdict::NotExists);
        assert!(cert.violation.is_some());
        let cert = find_parity_factor_with_limit(&cycle(3), &c, 2).unwrap();
        assert!(cert.violation.is_none());
    }
}
