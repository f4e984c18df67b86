use super::Graph;
use crate::error::{Error, Result};

/// Edge connectivity via Stoer–Wagner on the multiplicity-weighted graph.
///
/// Loops are ignored since no cut contains them. Runs in `O(n^3)`.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "edge connectivity needs at least 2 vertices, got {n}"
        )));
    }
    let mut w = vec![vec![0usize; n]; n];
    for (u, v, m) in g.edges() {
        w[u][v] = m;
        w[v][u] = m;
    }
    // active[i]: supervertex i has not been merged away
    let mut active: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    let mut key = vec![0usize; n];
    let mut added = vec![false; n];

    while active.len() > 1 {
        for &v in &active {
            key[v] = 0;
            added[v] = false;
        }
        let mut prev = active[0];
        let mut last = active[0];
        for step in 0..active.len() {
            // lowest id wins ties so the phase order is deterministic
            let mut sel = usize::MAX;
            for &v in &active {
                if !added[v] && (sel == usize::MAX || key[v] > key[sel]) {
                    sel = v;
                }
            }
            added[sel] = true;
            if step == active.len() - 1 {
                best = best.min(key[sel]);
                prev = last;
                last = sel;
            } else {
                last = sel;
                for &v in &active {
                    if !added[v] {
                        key[v] += w[sel][v];
                    }
                }
            }
            if best == 0 {
                return Ok(0);
            }
        }
        // merge `last` into `prev`
        for &v in &active {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        w[prev][prev] = 0;
        active.retain(|&v| v != last);
    }
    Ok(best)
}
