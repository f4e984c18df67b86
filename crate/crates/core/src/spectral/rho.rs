//! The eigenvalue threshold `rho(r, eta)`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RhoCase {
    /// at least one of `r`, `eta` even
    #[serde(rename = "even-case")]
    Even,
    /// both odd, `eta >= 3`
    #[serde(rename = "odd-odd-case")]
    OddOdd,
    /// `r` odd, `eta = 1`
    #[serde(rename = "cubic-case")]
    Cubic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RhoThreshold {
    pub r: usize,
    pub eta: usize,
    pub value: f64,
    pub case: RhoCase,
}

pub fn rho_case(r: usize, eta: usize) -> RhoCase {
    if r % 2 == 0 || eta % 2 == 0 {
        RhoCase::Even
    } else if eta >= 3 {
        RhoCase::OddOdd
    } else {
        RhoCase::Cubic
    }
}

/// Threshold `rho(r, eta)` for `r > eta >= 1`; it equals the spectral radius
/// of the extremal graph `H(r, eta)`.
pub fn rho(r: usize, eta: usize) -> Result<RhoThreshold> {
    if eta < 1 || r <= eta {
        return Err(Error::Domain(format!("rho(r, eta) needs r > eta >= 1, got r={r}, eta={eta}")));
    }
    let rf = r as f64;
    let case = rho_case(r, eta);
    let value = match case {
        RhoCase::Even => {
            let k = (eta / 2) as f64;
            0.5 * (rf - 2.0 + ((rf + 2.0).powi(2) - 8.0 * k).sqrt())
        }
        RhoCase::OddOdd => 0.5 * (rf - 3.0 + ((rf + 3.0).powi(2) - 4.0 * eta as f64).sqrt()),
        RhoCase::Cubic => largest_cubic_root(r)?,
    };
    Ok(RhoThreshold { r, eta, value, case })
}

/// `x^3 - (r-2) x^2 - 2 r x + r - 1`.
pub fn cubic_poly(r: usize, x: f64) -> f64 {
    let rf = r as f64;
    ((x - (rf - 2.0)) * x - 2.0 * rf) * x + rf - 1.0
}

/// Largest real root of [`cubic_poly`] for odd `r >= 3`, by bisection on
/// `[r-1, r]` where the polynomial changes sign from negative to positive.
pub fn largest_cubic_root(r: usize) -> Result<f64> {
    if r < 3 || r % 2 == 0 {
        return Err(Error::Domain(format!("cubic threshold needs odd r >= 3, got {r}")));
    }
    let (mut lo, mut hi) = ((r - 1) as f64, r as f64);
    debug_assert!(cubic_poly(r, lo) < 0.0 && cubic_poly(r, hi) > 0.0);
    // bisect until the bracket cannot shrink any further
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let p = cubic_poly(r, mid);
        if p == 0.0 {
            return Ok(mid);
        }
        if p < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(if cubic_poly(r, lo).abs() <= cubic_poly(r, hi).abs() { lo } else { hi })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let t = rho(4, 2).unwrap();
        assert_eq!(t.case, RhoCase::Even);
        assert!((t.value - (1.0 + 7f64.sqrt())).abs() < 1e-14);

        let t = rho(5, 3).unwrap();
        assert_eq!(t.case, RhoCase::OddOdd);
        assert!((t.value - (1.0 + 13f64.sqrt())).abs() < 1e-14);

        // eta = 1 with r even: H is K_{r+1}
        assert_eq!(rho(6, 1).unwrap().value, 6.0);
    }

    #[test]
    fn cubic_case() {
        let t = rho(5, 1).unwrap();
        assert_eq!(t.case, RhoCase::Cubic);
        assert!(cubic_poly(5, t.value).abs() <= 1e-10);
        assert!((t.value - 4.880_899_120_4).abs() < 1e-9);

        // reference roots from an independent companion-matrix solve
        let mu3 = largest_cubic_root(3).unwrap();
        assert!((mu3 - 2.855_772_506_6).abs() < 1e-9);
        assert!((largest_cubic_root(11).unwrap() - 10.929_231_883_8).abs() < 1e-9);
        assert!(cubic_poly(3, 2.0) < 0.0 && cubic_poly(3, 3.0) > 0.0);
    }

    #[test]
    fn bracket_is_valid_for_odd_r() {
        for r in (3..200).step_by(2) {
            let rf = r as f64;
            assert_eq!(cubic_poly(r, rf), rf - 1.0);
            assert_eq!(cubic_poly(r, rf - 1.0), rf - rf * rf);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(rho(3, 3).is_err());
        assert!(rho(3, 0).is_err());
        assert!(largest_cubic_root(4).is_err());
        assert!(largest_cubic_root(1).is_err());
    }

    #[test]
    fn value_in_half_open_range() {
        for r in 2..40 {
            for eta in 1..r {
                let v = rho(r, eta).unwrap().value;
                assert!(v > r as f64 - 2.0 && v <= r as f64, "rho({r},{eta}) = {v}");
            }
        }
    }
}
