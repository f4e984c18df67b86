//! Lovász's parity-factor criterion: `G` has a `(g,f)`-parity factor iff
//! `d(T) - g(T) + f(S) - |[S,T]| - q(S,T) >= 0` for all disjoint `S`, `T`.

use std::cmp::Ordering;

use super::{DegreeConstraint, FactorCertificate, Verdict, Violation};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default vertex limit for [`decide_bruteforce`] (3^15 pairs).
pub const DEFAULT_LIMIT: usize = 15;

/// The subset tables grow as 2^n; nothing above this is attempted.
pub const HARD_LIMIT: usize = 24;

/// Number of components `C` of `G - removed` with `f(V(C)) + |[T, V(C)]|` odd.
pub fn q_count(g: &Graph, f: &[usize], t: &VertexSet, removed: &VertexSet) -> Result<usize> {
    if f.len() != g.n() {
        return Err(Error::InvalidInput(format!("f has {} entries, graph has {} vertices", f.len(), g.n())));
    }
    t.validate(g.n())?;
    if let Some(v) = t.iter().find(|&v| !removed.contains(v)) {
        return Err(Error::InvalidInput(format!("vertex {v} of T is not removed")));
    }
    let comps = g.components(removed)?;
    let mut q = 0;
    for c in &comps {
        let fc: usize = c.iter().map(|v| f[v]).sum();
        let cut = g.cut_size(t, c)?;
        if (fc + cut) % 2 == 1 {
            q += 1;
        }
    }
    Ok(q)
}

/// `d(T) - g(T) + f(S) - |[S,T]| - q(S,T)`.
pub fn deficiency(g: &Graph, c: &DegreeConstraint, s: &VertexSet, t: &VertexSet) -> Result<i64> {
    c.check_graph(g)?;
    let st = g.cut_size(s, t)?;
    let d_t = g.degree_sum(t)?;
    let q = q_count(g, c.f_values(), t, &s.union(t))?;
    Ok(d_t as i64 - c.g_sum(t) as i64 + c.f_sum(s) as i64 - st as i64 - q as i64)
}

fn mask_to_set(mask: u32) -> VertexSet {
    VertexSet::new(bits(mask).collect())
}

fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Lexicographic order of the ascending element lists of two masks.
fn cmp_sorted(mut a: u32, mut b: u32) -> Ordering {
    loop {
        match (a, b) {
            (0, 0) => return Ordering::Equal,
            (0, _) => return Ordering::Less,
            (_, 0) => return Ordering::Greater,
            _ => {
                let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
                if x != y {
                    return x.cmp(&y);
                }
                a &= a - 1;
                b &= b - 1;
            }
        }
    }
}

/// Orders candidate violations: deficiency, then `|S| + |T|`, then sorted `S`, then sorted `T`.
fn key_cmp(a: (i64, u32, u32), b: (i64, u32, u32)) -> Ordering {
    a.0.cmp(&b.0)
        .then((a.1 | a.2).count_ones().cmp(&(b.1 | b.2).count_ones()))
        .then_with(|| cmp_sorted(a.1, b.1))
        .then_with(|| cmp_sorted(a.2, b.2))
}

/// Decides existence by evaluating the criterion on all `3^n` disjoint pairs.
///
/// On failure the violation is the minimum-deficiency pair, ties broken by
/// `(|S| + |T|, sorted S, sorted T)`.
pub fn decide_bruteforce(g: &Graph, c: &DegreeConstraint, limit: usize) -> Result<FactorCertificate> {
    c.check_graph(g)?;
    let n = g.n();
    let limit = limit.min(HARD_LIMIT);
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    let size = 1usize << n;
    let full: u32 = (size - 1) as u32;

    // adjacency split into binary digits of the multiplicity
    let levels = g.edges().iter().map(|&(_, _, m)| usize::BITS - m.leading_zeros()).max().unwrap_or(0) as usize;
    let mut adj_bits = vec![vec![0u32; n]; levels];
    let mut adj_any = vec![0u32; n];
    for (u, v, m) in g.edges() {
        adj_any[u] |= 1 << v;
        adj_any[v] |= 1 << u;
        for (k, row) in adj_bits.iter_mut().enumerate() {
            if m >> k & 1 == 1 {
                row[u] |= 1 << v;
                row[v] |= 1 << u;
            }
        }
    }
    let odd_adj: Vec<u32> = if levels > 0 { adj_bits[0].clone() } else { vec![0; n] };

    let deg: Vec<i64> = (0..n).map(|v| g.degree(v) as i64).collect();
    let mut dsum = vec![0i64; size];
    let mut gsum = vec![0i64; size];
    let mut fsum = vec![0i64; size];
    let mut internal = vec![0i64; size];
    for mask in 1..size {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        dsum[mask] = dsum[rest] + deg[v];
        gsum[mask] = gsum[rest] + c.g(v) as i64;
        fsum[mask] = fsum[rest] + c.f(v) as i64;
        let mut into_rest = 0i64;
        for (k, row) in adj_bits.iter().enumerate() {
            into_rest += ((row[v] & rest as u32).count_ones() as i64) << k;
        }
        internal[mask] = internal[rest] + into_rest;
    }

    let mut best: Option<(i64, u32, u32)> = None;
    let mut comps: Vec<(u32, u32)> = Vec::with_capacity(n);
    for union in 0..=full {
        // components of G - union: (f(C) parity, vertices of union with odd edge count into C)
        comps.clear();
        let mut left = full & !union;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u32;
                for v in bits(frontier) {
                    next |= adj_any[v];
                }
                frontier = next & left & !comp;
                comp |= frontier;
            }
            left &= !comp;
            let mut odd_into = 0u32;
            for x in bits(union) {
                if (odd_adj[x] & comp).count_ones() % 2 == 1 {
                    odd_into |= 1 << x;
                }
            }
            comps.push(((fsum[comp as usize] & 1) as u32, odd_into));
        }

        let e_union = internal[union as usize];
        let mut s = union;
        loop {
            let t = union ^ s;
            let q: i64 = comps
                .iter()
                .map(|&(fpar, odd_into)| ((fpar + (t & odd_into).count_ones()) & 1) as i64)
                .sum();
            let st = e_union - internal[s as usize] - internal[t as usize];
            let def = dsum[t as usize] - gsum[t as usize] + fsum[s as usize] - st - q;
            let cand = (def, s, t);
            if best.is_none_or(|b| key_cmp(cand, b) == Ordering::Less) {
                best = Some(cand);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & union;
        }
    }

    let (def, s, t) = best.expect("at least the empty pair is evaluated");
    if def >= 0 {
        Ok(FactorCertificate { verdict: Verdict::Exists, factor: None, violation: None })
    } else {
        Ok(FactorCertificate {
            verdict: Verdict::NotExists,
            factor: None,
            violation: Some(Violation { s: mask_to_set(s), t: mask_to_set(t), deficiency: def }),
        })
    }
}
