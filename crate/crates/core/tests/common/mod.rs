//! Helpers shared by the integration suites.
#![allow(dead_code)]

use std::collections::BTreeMap;

use parfac_core::factor::DegreeConstraint;
use parfac_core::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn graph_from_masks(adj: &[u16]) -> Graph {
    let n = adj.len();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Colour refinement started from degrees; colours are ranks of sorted signatures.
fn refine(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    let mut colors: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| sorted.binary_search(s).unwrap()).collect();
        if sorted.len() == classes {
            return next;
        }
        classes = sorted.len();
        colors = next;
    }
}

/// Maximum upper-triangle code over all labellings that list colour classes in order.
fn canonical_code(adj: &[u16]) -> u64 {
    let n = adj.len();
    let colors = refine(adj);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colors[v]);
    let slot_color: Vec<usize> = order.iter().map(|&v| colors[v]).collect();

    fn go(pos: usize, adj: &[u16], colors: &[usize], slot_color: &[usize], perm: &mut Vec<usize>, used: u16, best: &mut u64) {
        let n = adj.len();
        if pos == n {
            let mut code = 0u64;
            for i in 0..n {
                for j in i + 1..n {
                    code = code << 1 | (adj[perm[i]] >> perm[j] & 1) as u64;
                }
            }
            *best = (*best).max(code);
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 0 && colors[v] == slot_color[pos] {
                perm.push(v);
                go(pos + 1, adj, colors, slot_color, perm, used | 1 << v, best);
                perm.pop();
            }
        }
    }
    let mut best = 0;
    go(0, adj, &colors, &slot_color, &mut Vec::with_capacity(n), 0, &mut best);
    best
}

/// One representative per isomorphism class of simple graphs on `1..=max_n`
/// vertices; `result[k]` holds the graphs on `k + 1` vertices.
pub fn graph_classes(max_n: usize) -> Vec<Vec<Graph>> {
    assert!((1..=10).contains(&max_n));
    let mut levels: Vec<Vec<Vec<u16>>> = vec![vec![vec![0u16]]];
    for n in 2..=max_n {
        let mut seen: BTreeMap<u64, Vec<u16>> = BTreeMap::new();
        for parent in &levels[n - 2] {
            for nbrs in 0u16..(1 << (n - 1)) {
                let mut adj = parent.clone();
                adj.push(nbrs);
                for (u, row) in adj.iter_mut().enumerate().take(n - 1) {
                    if nbrs >> u & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                seen.entry(canonical_code(&adj)).or_insert(adj);
            }
        }
        levels.push(seen.into_values().collect());
    }
    levels.iter().map(|lv| lv.iter().map(|a| graph_from_masks(a)).collect()).collect()
}

/// Existence by enumerating every sub-multiset of edges and loops.
pub fn raw_factor_exists(g: &Graph, c: &DegreeConstraint) -> bool {
    let mut items: Vec<(usize, usize, usize)> = g.edges();
    items.extend(g.loop_entries().into_iter().map(|(v, k)| (v, v, k)));
    let mut deg = vec![0usize; g.n()];

    fn go(i: usize, items: &[(usize, usize, usize)], deg: &mut [usize], c: &DegreeConstraint) -> bool {
        if i == items.len() {
            return (0..deg.len()).all(|v| deg[v] >= c.g(v) && deg[v] <= c.f(v) && (c.f(v) - deg[v]) % 2 == 0);
        }
        let (u, v, m) = items[i];
        for k in 0..=m {
            deg[u] += k;
            deg[v] += k;
            let ok = deg[u] <= c.f(u) && deg[v] <= c.f(v);
            if ok && go(i + 1, items, deg, c) {
                deg[u] -= k;
                deg[v] -= k;
                return true;
            }
            deg[u] -= k;
            deg[v] -= k;
            if !ok {
                break;
            }
        }
        false
    }
    go(0, &items, &mut deg, c)
}

/// Random tree on `n` vertices plus each remaining pair with probability `p`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_simple(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random multigraph with loops.
pub fn random_multigraph(rng: &mut ChaCha8Rng, n: usize, max_mult: usize, max_loops: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let m = rng.gen_range(0..=max_mult);
            if m > 0 && rng.gen_bool(0.5) {
                g.add_edge_mult(u, v, m).unwrap();
            }
        }
        let l = rng.gen_range(0..=max_loops);
        if l > 0 && rng.gen_bool(0.3) {
            g.add_loops(u, l).unwrap();
        }
    }
    g
}

/// Random `(g, f)` with `g <= f <= cap(v)`, `g = f (mod 2)` and even `sum f`.
pub fn random_constraint(rng: &mut ChaCha8Rng, caps: &[usize]) -> DegreeConstraint {
    let mut f: Vec<usize> = caps.iter().map(|&d| rng.gen_range(0..=d)).collect();
    let mut g: Vec<usize> = f.iter().map(|&fv| fv - 2 * rng.gen_range(0..=fv / 2)).collect();
    if f.iter().sum::<usize>() % 2 == 1 {
        let v = (0..f.len()).find(|&v| f[v] >= 1).unwrap();
        f[v] -= 1;
        if g[v] > 0 {
            g[v] -= 1;
        } else {
            g[v] += 1;
        }
    }
    DegreeConstraint::new(g, f).unwrap()
}

/// Like [`random_constraint`] but without the even-sum adjustment.
pub fn random_constraint_any(rng: &mut ChaCha8Rng, caps: &[usize]) -> DegreeConstraint {
    let f: Vec<usize> = caps.iter().map(|&d| rng.gen_range(0..=d)).collect();
    let g: Vec<usize> = f.iter().map(|&fv| fv - 2 * rng.gen_range(0..=fv / 2)).collect();
    DegreeConstraint::new(g, f).unwrap()
}

/// Two or three dense blocks joined by a few edges: small edge connectivity,
/// comparatively large minimum degree.
pub fn random_clustered(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let parts = if n >= 9 { rng.gen_range(2..=3) } else { 2 };
    let mut bounds = vec![0];
    for i in 1..parts {
        bounds.push(n * i / parts);
    }
    bounds.push(n);
    let mut g = Graph::new(n);
    for w in bounds.windows(2) {
        for u in w[0]..w[1] {
            for v in u + 1..w[1] {
                if rng.gen_bool(0.85) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
    }
    for w in bounds.windows(3) {
        for _ in 0..rng.gen_range(1..=2) {
            let u = rng.gen_range(w[0]..w[1]);
            let v = rng.gen_range(w[1]..w[2]);
            if !g.has_edge(u, v) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
