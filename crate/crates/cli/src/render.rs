//! Text rendering for the CLI.

use std::fmt::Write as _;

use parfac_core::factor::FactorCertificate;
use parfac_core::theorem::{TheoremReport, TightItem, TightnessReport};
use parfac_core::VertexSet;

/// `%.12g`-style formatting; magnitudes below `5e-12` print as `0`.
pub fn num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x.abs() < 5e-12 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let (mant, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim(format!("{x:.decimals$}"))
    } else {
        format!("{}e{}{:02}", trim(mant.to_string()), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn set(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn certificate(cert: &FactorCertificate) -> String {
    let mut out = format!("verdict: {}\n", cert.verdict);
    if let Some(f) = &cert.factor {
        let edges: Vec<String> = f.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        let _ = writeln!(out, "factor ({} edges): {}", f.len(), edges.join(" "));
    }
    if let Some(v) = &cert.violation {
        let _ = writeln!(out, "violation: S = {} T = {} deficiency = {}", set(&v.s), set(&v.t), v.deficiency);
    }
    out
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_else(|| "-".into())
}

pub fn theorem(rep: &TheoremReport, interval: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "theta = {} ({})  theta* = {}  feasible {}",
        rep.theta_exact,
        num(rep.theta),
        num(rep.theta_star),
        interval
    );
    let _ = writeln!(
        out,
        "h = {}  h_e = {}  h_o = {}  delta = {}  edge connectivity = {}",
        rep.h, rep.h_e, rep.h_o, rep.min_degree, rep.edge_connectivity
    );
    let _ = writeln!(
        out,
        "{:<7}{:<11}{:<5}{:<5}{:<16}{:<16}{}",
        "branch", "applicable", "sub", "k", "threshold", "lambda_k", "verdict"
    );
    for b in &rep.branches {
        let _ = writeln!(
            out,
            "{:<7}{:<11}{:<5}{:<5}{:<16}{:<16}{}",
            b.branch.to_string(),
            if b.applicable { "yes" } else { "no" },
            b.sub.to_string(),
            b.eigen_index.map(|k| k.to_string()).unwrap_or_else(|| "-".into()),
            opt(b.threshold),
            opt(b.measured),
            b.verdict
        );
    }
    let _ = writeln!(out, "overall: {}", rep.verdict);
    out
}

pub fn tightness(rep: &TightnessReport) -> String {
    let mut out = format!(
        "F({}, {}, {}): {} vertices, {} edges\n",
        rep.r, rep.h, rep.l, rep.vertices, rep.edges
    );
    for c in &rep.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let detail = match c.item {
            TightItem::MinDegree => format!("min degree {} (expected {})", num(c.measured), num(c.expected)),
            TightItem::EdgeConnectivity => {
                format!("edge connectivity {} (expected {})", num(c.measured), num(c.expected))
            }
            TightItem::Eigenvalues => format!(
                "lambda_{}..lambda_{} vs rho({}, {}) = {}: max deviation {}",
                rep.h + 1,
                rep.l,
                rep.r,
                rep.h,
                num(rep.rho),
                if rep.max_deviation < 1e-12 { "< 1e-12".to_string() } else { num(rep.max_deviation) }
            ),
            TightItem::Certificate => format!(
                "deficiency(U, {{}}) = {} with b = {} (expected b h - l = {})",
                rep.deficiency, rep.b, rep.expected_deficiency
            ),
        };
        let _ = writeln!(out, "{status} {}: {detail}", c.item);
    }
    if !rep.marginal_bound_holds {
        let _ = writeln!(
            out,
            "note: l = {} is below 2h(h+1) = {}, so no theta with ceil(1/theta) - 1 = h has l >= 2h/(1 - theta h)",
            rep.l, rep.marginal_bound
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(num(3.6457513110645907), "3.64575131106");
        assert_eq!(num(-2.0), "-2");
        assert_eq!(num(1e-15), "0");
        assert_eq!(num(-3e-13), "0");
        assert_eq!(num(0.25), "0.25");
        assert_eq!(num(1234567.0), "1234567");
        assert_eq!(num(1.5e-7), "1.5e-07");
        assert_eq!(num(2.5e13), "2.5e+13");
    }
}
