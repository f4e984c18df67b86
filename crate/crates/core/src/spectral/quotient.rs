use serde::Serialize;

use super::{symmetric_spectrum, SpectrumResult};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Quotient matrix `G/pi` with entry `(i, j) = |[W_i, W_j]| / |W_i|`
/// (diagonal `2 |E(G[W_i])| / |W_i|`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuotientData {
    pub partition: Vec<VertexSet>,
    pub matrix: Vec<Vec<f64>>,
    /// every vertex of `W_i` has the same number of neighbours in each `W_j`
    pub equitable: bool,
}

impl QuotientData {
    /// Eigenvalues, descending.
    ///
    /// `G/pi = D^-1 E` with `E` the symmetric block edge-count matrix and `D`
    /// the block sizes, so it is similar to `D^-1/2 E D^-1/2` and has a real
    /// spectrum; the symmetric form goes through the Jacobi solver.
    pub fn eigenvalues(&self) -> Result<SpectrumResult> {
        let m = self.matrix.len();
        let sizes: Vec<f64> = self.partition.iter().map(|w| w.len() as f64).collect();
        let mut sym = vec![0.0; m * m];
        for i in 0..m {
            for j in 0..m {
                // E_ij = |W_i| Q_ij
                let e = sizes[i] * self.matrix[i][j];
                sym[i * m + j] = e / (sizes[i] * sizes[j]).sqrt();
            }
        }
        // symmetrize away rounding so Jacobi sees an exactly symmetric input
        for i in 0..m {
            for j in i + 1..m {
                let avg = 0.5 * (sym[i * m + j] + sym[j * m + i]);
                sym[i * m + j] = avg;
                sym[j * m + i] = avg;
            }
        }
        symmetric_spectrum(&sym, m)
    }

    pub fn lambda1(&self) -> Result<f64> {
        Ok(self.eigenvalues()?.eigenvalues.first().copied().unwrap_or(0.0))
    }
}

pub fn quotient_matrix(g: &Graph, partition: &[VertexSet]) -> Result<QuotientData> {
    g.require_simple("quotient matrix")?;
    let n = g.n();
    let mut block = vec![usize::MAX; n];
    for (i, w) in partition.iter().enumerate() {
        w.validate(n)?;
        if w.is_empty() {
            return Err(Error::InvalidInput(format!("partition block {i} is empty")));
        }
        for v in w.iter() {
            if block[v] != usize::MAX {
                return Err(Error::InvalidInput(format!("vertex {v} appears in two partition blocks")));
            }
            block[v] = i;
        }
    }
    if let Some(v) = block.iter().position(|&b| b == usize::MAX) {
        return Err(Error::InvalidInput(format!("vertex {v} is not covered by the partition")));
    }

    let m = partition.len();
    let mut counts = vec![vec![0usize; m]; m];
    let mut equitable = true;
    for (i, w) in partition.iter().enumerate() {
        let mut first_row: Option<Vec<usize>> = None;
        for v in w.iter() {
            let mut row = vec![0usize; m];
            for (u, _) in g.neighbors(v) {
                row[block[u]] += 1;
            }
            for j in 0..m {
                counts[i][j] += row[j];
            }
            match &first_row {
                None => first_row = Some(row),
                Some(r) if *r != row => equitable = false,
                _ => {}
            }
        }
    }
    let matrix = (0..m)
        .map(|i| {
            let size = partition[i].len() as f64;
            counts[i].iter().map(|&c| c as f64 / size).collect()
        })
        .collect();
    Ok(QuotientData { partition: partition.to_vec(), matrix, equitable })
}
