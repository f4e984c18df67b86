//! Adjacency spectra, quotient matrices and interlacing.

mod jacobi;
mod quotient;
mod rho;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use quotient::{quotient_matrix, QuotientData};
pub use rho::{cubic_poly, largest_cubic_root, rho, rho_case, RhoCase, RhoThreshold};

/// Tolerance used for every eigenvalue comparison.
pub const EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumResult {
    /// `lambda_1 >= ... >= lambda_n`
    pub eigenvalues: Vec<f64>,
    /// Jacobi sweeps performed.
    pub iterations: usize,
    /// Off-diagonal Frobenius norm at termination.
    pub residual: f64,
}

impl SpectrumResult {
    /// `lambda_k`, 1-based.
    pub fn lambda(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.eigenvalues.get(i)).copied()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

/// Eigenvalues of a dense symmetric row-major matrix, descending.
pub fn symmetric_spectrum(matrix: &[f64], n: usize) -> Result<SpectrumResult> {
    if matrix.len() != n * n {
        return Err(Error::InvalidInput(format!("expected {} matrix entries, got {}", n * n, matrix.len())));
    }
    let (mut eigenvalues, iterations, residual) = jacobi::jacobi_eigenvalues(matrix.to_vec(), n)?;
    eigenvalues.sort_by(|a, b| b.total_cmp(a));
    Ok(SpectrumResult { eigenvalues, iterations, residual })
}

/// All adjacency eigenvalues of a simple graph, descending.
pub fn adjacency_spectrum(g: &Graph) -> Result<SpectrumResult> {
    g.require_simple("adjacency spectrum")?;
    symmetric_spectrum(&g.adjacency_matrix(), g.n())
}

/// Cauchy interlacing `outer[i] >= inner[i] >= outer[n-m+i]` for every `i`,
/// up to [`EPS`]. Both lists must be descending.
pub fn check_interlacing(outer: &[f64], inner: &[f64]) -> Result<bool> {
    let (n, m) = (outer.len(), inner.len());
    if m >= n {
        return Err(Error::InvalidInput(format!(
            "interlacing needs fewer inner ({m}) than outer ({n}) eigenvalues"
        )));
    }
    Ok(inner
        .iter()
        .enumerate()
        .all(|(i, &mu)| outer[i] >= mu - EPS && mu >= outer[n - m + i] - EPS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12)
    }

    #[test]
    fn complete_and_cycle() {
        let s = adjacency_spectrum(&complete(4)).unwrap();
        assert!(close(&s.eigenvalues, &[3.0, -1.0, -1.0, -1.0]));
        assert!(s.residual <= 4e-12);

        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let s = adjacency_spectrum(&c4).unwrap();
        assert!(close(&s.eigenvalues, &[2.0, 0.0, 0.0, -2.0]));
        assert_eq!(s.lambda(1), Some(2.0));
        assert_eq!(s.lambda(0), None);
        assert_eq!(s.lambda(5), None);
    }

    #[test]
    fn rejects_multigraph() {
        let mut g = Graph::new(2);
        g.add_edge_mult(0, 1, 2).unwrap();
        assert!(matches!(adjacency_spectrum(&g), Err(Error::Unsupported(_))));
    }

    #[test]
    fn interlacing_examples() {
        let k4 = adjacency_spectrum(&complete(4)).unwrap().eigenvalues;
        let k3 = adjacency_spectrum(&complete(3)).unwrap().eigenvalues;
        assert!(check_interlacing(&k4, &k3).unwrap());
        assert!(!check_interlacing(&[3.0, 1.0], &[5.0]).unwrap());
        assert!(check_interlacing(&[1.0], &[1.0]).is_err());

        let sub = complete(4).induced_subgraph(&VertexSet::new(vec![0, 2])).unwrap();
        let k2 = adjacency_spectrum(&sub).unwrap().eigenvalues;
        assert!(check_interlacing(&k4, &k2).unwrap());
    }
}
