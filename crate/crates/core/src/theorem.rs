//! Spectral sufficient conditions for `(g,f)`-parity factors and the
//! tightness pipeline over `F(r, h, l)`.
//!
//! `theta` is an exact rational so that every ceiling and every comparison
//! against `1/theta` is exact; only the final eigenvalue comparison uses
//! floating point (with [`EPS`]).

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::constructions::{family_f, remark_condition, FamilyInstance};
use crate::error::{Error, Result};
use crate::factor::{deficiency, DegreeConstraint};
use crate::graph::{edge_connectivity, Graph, VertexSet};
use crate::spectral::{adjacency_spectrum, rho, SpectrumResult, EPS};

pub type Theta = Ratio<i64>;

/// Reads `a/b`, an integer, or a plain decimal such as `0.25`.
pub fn parse_theta(s: &str) -> Result<Theta> {
    let bad = || Error::InvalidInput(format!("cannot read theta from `{s}`"));
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        let b: i64 = b.trim().parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(bad());
        }
        return Ok(Theta::new(a, b));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if (int.is_empty() && frac.is_empty())
        || frac.len() > 15
        || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let scale = 10i64.pow(frac.len() as u32);
    let int: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
    let frac: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    let num = int.checked_mul(scale).and_then(|x| x.checked_add(frac)).ok_or_else(bad)?;
    Ok(Theta::new(num, scale))
}

fn to_f64(x: Theta) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn ratio(a: usize, b: usize) -> Theta {
    Theta::new(a as i64, b as i64)
}

fn ceil_int(x: Theta) -> i64 {
    x.ceil().to_integer()
}

/// Values of `theta` with `g(v) <= theta d(v) <= f(v)` for all `v`, inside `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaInterval {
    pub lo: Theta,
    pub hi: Theta,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl ThetaInterval {
    pub fn contains(&self, t: Theta) -> bool {
        let above = if self.lo_open { t > self.lo } else { t >= self.lo };
        let below = if self.hi_open { t < self.hi } else { t <= self.hi };
        above && below
    }

    /// The point of the interval nearest to `1/2`, which maximizes `min(theta, 1 - theta)`.
    pub fn closest_to_half(&self) -> Theta {
        let half = Theta::new(1, 2);
        if half < self.lo {
            self.lo
        } else if half > self.hi {
            self.hi
        } else {
            half
        }
    }
}

impl fmt::Display for ThetaInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_open { '(' } else { '[' },
            self.lo,
            self.hi,
            if self.hi_open { ')' } else { ']' }
        )
    }
}

pub fn theta_feasible_interval(g: &Graph, c: &DegreeConstraint) -> Result<ThetaInterval> {
    c.check_graph(g)?;
    let mut iv = ThetaInterval { lo: Theta::zero(), hi: Theta::one(), lo_open: true, hi_open: true };
    for v in 0..g.n() {
        let d = g.degree(v);
        if d == 0 {
            if c.g(v) > 0 {
                return Err(Error::Infeasible(format!("vertex {v} has degree 0 but g({v}) = {}", c.g(v))));
            }
            continue;
        }
        let lo = ratio(c.g(v), d);
        if lo > iv.lo {
            iv.lo = lo;
            iv.lo_open = false;
        }
        let hi = ratio(c.f(v), d);
        if hi < iv.hi {
            iv.hi = hi;
            iv.hi_open = false;
        }
    }
    if iv.lo > iv.hi || (iv.lo == iv.hi && (iv.lo_open || iv.hi_open)) {
        return Err(Error::Infeasible(format!(
            "no theta in (0, 1) satisfies g(v) <= theta d(v) <= f(v) (bounds {} and {})",
            iv.lo, iv.hi
        )));
    }
    Ok(iv)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    A,
    B,
    C,
    D,
    E,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Branch::A => "a",
            Branch::B => "b",
            Branch::C => "c",
            Branch::D => "d",
            Branch::E => "e",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SubBranch {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    Ii,
    #[serde(rename = "none")]
    None,
}

impl fmt::Display for SubBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubBranch::I => "i",
            SubBranch::Ii => "ii",
            SubBranch::None => "none",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Guarantee {
    NotGuaranteed,
    Boundary,
    Guaranteed,
}

impl fmt::Display for Guarantee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Guarantee::Guaranteed => "guaranteed",
            Guarantee::Boundary => "boundary",
            Guarantee::NotGuaranteed => "not-guaranteed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BranchRecord {
    pub branch: Branch,
    /// Parity side conditions on `d_G` and `f`.
    pub applicable: bool,
    pub sub: SubBranch,
    pub eigen_index: Option<usize>,
    pub threshold: Option<f64>,
    /// `lambda_k`; absent when `k` exceeds the number of vertices.
    pub measured: Option<f64>,
    pub verdict: Guarantee,
}

impl BranchRecord {
    fn inapplicable(branch: Branch) -> Self {
        BranchRecord {
            branch,
            applicable: false,
            sub: SubBranch::None,
            eigen_index: None,
            threshold: None,
            measured: None,
            verdict: Guarantee::NotGuaranteed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub sum_f_even: bool,
    pub theta: f64,
    /// `theta` as an exact fraction.
    pub theta_exact: String,
    pub theta_star: f64,
    pub h: usize,
    pub h_e: usize,
    pub h_o: usize,
    pub min_degree: usize,
    pub edge_connectivity: usize,
    pub branches: Vec<BranchRecord>,
    pub verdict: Guarantee,
}

impl TheoremReport {
    pub fn branch(&self, b: Branch) -> &BranchRecord {
        self.branches.iter().find(|r| r.branch == b).expect("all five branches are recorded")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// A validated instance with its spectrum, edge connectivity and feasible
/// `theta` interval computed once, for repeated evaluation.
#[derive(Debug, Clone)]
pub struct TheoremInstance {
    degrees: Vec<usize>,
    f: Vec<usize>,
    spectrum: SpectrumResult,
    kappa: usize,
    delta: usize,
    interval: ThetaInterval,
}

impl TheoremInstance {
    /// Requires a simple connected graph on at least 2 vertices, a constraint
    /// with even `sum f` and a non-empty feasible interval.
    pub fn new(g: &Graph, c: &DegreeConstraint) -> Result<Self> {
        c.check_graph(g)?;
        g.require_simple("theorem evaluation")?;
        if g.n() < 2 {
            return Err(Error::Precondition(format!("graph needs at least 2 vertices, got {}", g.n())));
        }
        if !g.is_connected() {
            return Err(Error::Precondition("graph is not connected".into()));
        }
        if !c.sum_f_even() {
            return Err(Error::Precondition(format!("sum of f is odd ({})", c.f_total())));
        }
        let interval = theta_feasible_interval(g, c)?;
        Ok(TheoremInstance {
            degrees: g.degrees(),
            f: c.f_values().to_vec(),
            spectrum: adjacency_spectrum(g)?,
            kappa: edge_connectivity(g)?,
            delta: g.min_degree(),
            interval,
        })
    }

    pub fn interval(&self) -> ThetaInterval {
        self.interval
    }

    pub fn spectrum(&self) -> &SpectrumResult {
        &self.spectrum
    }

    pub fn edge_connectivity(&self) -> usize {
        self.kappa
    }

    fn resolve_h(&self, h: Option<usize>) -> Result<usize> {
        match h {
            None => Ok(self.kappa),
            Some(h) if h >= 1 && h <= self.kappa => Ok(h),
            Some(h) => Err(Error::Precondition(format!(
                "graph is not {h}-edge-connected with h >= 1 (edge connectivity {})",
                self.kappa
            ))),
        }
    }

    /// Sub-conditions `i`: `h' x >= 1`, and `ii`: `h' x < 1 <= delta x` with
    /// `lambda_k < rho(delta, ceil(1/x) - 1)`, `k = ceil(2 / (1 - x h'))`.
    fn two_part(&self, branch: Branch, hp: usize, x: Theta) -> Result<BranchRecord> {
        let mut rec = BranchRecord::inapplicable(branch);
        rec.applicable = true;
        let hx = x * Theta::from(hp as i64);
        if hx >= Theta::one() {
            rec.sub = SubBranch::I;
            rec.verdict = Guarantee::Guaranteed;
            return Ok(rec);
        }
        if x * Theta::from(self.delta as i64) < Theta::one() {
            return Ok(rec);
        }
        let k = ceil_int(Theta::from(2) / (Theta::one() - hx)) as usize;
        let eta = (ceil_int(x.recip()) - 1) as usize;
        let threshold = rho(self.delta, eta)?.value;
        rec.sub = SubBranch::Ii;
        rec.eigen_index = Some(k);
        rec.threshold = Some(threshold);
        rec.measured = self.spectrum.lambda(k);
        rec.verdict = match rec.measured {
            Some(lam) if lam < threshold - EPS => Guarantee::Guaranteed,
            Some(lam) if (lam - threshold).abs() <= EPS => Guarantee::Boundary,
            _ => Guarantee::NotGuaranteed,
        };
        Ok(rec)
    }

    /// Evaluates all five branches at `theta`; `h` defaults to the edge connectivity.
    pub fn evaluate(&self, theta: Theta, h: Option<usize>) -> Result<TheoremReport> {
        if !(theta > Theta::zero() && theta < Theta::one()) {
            return Err(Error::Precondition(format!("theta = {theta} is not in (0, 1)")));
        }
        if !self.interval.contains(theta) {
            return Err(Error::Precondition(format!(
                "theta = {theta} violates g(v) <= theta d(v) <= f(v); feasible interval {}",
                self.interval
            )));
        }
        let h = self.resolve_h(h)?;
        let (h_e, h_o) = if h % 2 == 0 { (h, h + 1) } else { (h + 1, h) };
        let one_minus = Theta::one() - theta;
        let theta_star = theta.min(one_minus);

        let all_d_even = self.degrees.iter().all(|d| d % 2 == 0);
        let all_f_even = self.f.iter().all(|f| f % 2 == 0);
        let d_matches_f = self.degrees.iter().zip(&self.f).all(|(d, f)| (d + f) % 2 == 0);

        let mut branches = vec![self.two_part(Branch::A, h, theta_star)?];
        branches.push(if all_d_even && all_f_even {
            BranchRecord { applicable: true, verdict: Guarantee::Guaranteed, ..BranchRecord::inapplicable(Branch::B) }
        } else {
            BranchRecord::inapplicable(Branch::B)
        });
        branches.push(if all_d_even {
            self.two_part(Branch::C, h_e, theta_star)?
        } else {
            BranchRecord::inapplicable(Branch::C)
        });
        branches.push(if all_f_even {
            self.two_part(Branch::D, h_o, one_minus)?
        } else {
            BranchRecord::inapplicable(Branch::D)
        });
        branches.push(if d_matches_f {
            self.two_part(Branch::E, h_o, theta)?
        } else {
            BranchRecord::inapplicable(Branch::E)
        });
        let verdict = branches.iter().map(|b| b.verdict).max().unwrap_or(Guarantee::NotGuaranteed);

        Ok(TheoremReport {
            sum_f_even: true,
            theta: to_f64(theta),
            theta_exact: theta.to_string(),
            theta_star: to_f64(theta_star),
            h,
            h_e,
            h_o,
            min_degree: self.delta,
            edge_connectivity: self.kappa,
            branches,
            verdict,
        })
    }

    /// The probe order used by [`best_theta`]: the feasible point nearest
    /// `1/2`, the closed endpoints, then every breakpoint of the ceilings
    /// and a midpoint of every gap between breakpoints, ascending.
    pub fn theta_candidates(&self, h: Option<usize>) -> Result<Vec<Theta>> {
        let h = self.resolve_h(h)?;
        let iv = self.interval;
        let n = self.degrees.len();
        let mut xs: BTreeSet<Theta> = BTreeSet::new();
        for m in 2..=n + 1 {
            xs.insert(ratio(1, m));
        }
        for hp in [h, h + 1] {
            for k in 3..=n + 1 {
                xs.insert(ratio(k - 2, k * hp));
            }
        }
        let mut points: BTreeSet<Theta> = BTreeSet::new();
        for x in xs {
            for t in [x, Theta::one() - x] {
                if iv.contains(t) {
                    points.insert(t);
                }
            }
        }
        let mut fences: Vec<Theta> = points.iter().copied().collect();
        fences.push(iv.lo);
        fences.push(iv.hi);
        fences.sort();
        fences.dedup();
        for w in fences.windows(2) {
            let mid = (w[0] + w[1]) / Theta::from(2);
            if iv.contains(mid) {
                points.insert(mid);
            }
        }

        let first = iv.closest_to_half();
        let mut order = vec![first];
        if !iv.lo_open && iv.lo != first {
            order.push(iv.lo);
        }
        if !iv.hi_open && iv.hi != first && iv.hi != iv.lo {
            order.push(iv.hi);
        }
        let head = order.clone();
        order.extend(points.into_iter().filter(|t| !head.contains(t)));
        Ok(order)
    }

    /// First probed `theta` whose report is guaranteed, else the report at
    /// the point nearest `1/2`.
    pub fn best_theta(&self, h: Option<usize>) -> Result<TheoremReport> {
        let candidates = self.theta_candidates(h)?;
        let mut fallback = None;
        for t in candidates {
            let report = self.evaluate(t, h)?;
            if report.verdict == Guarantee::Guaranteed {
                return Ok(report);
            }
            fallback.get_or_insert(report);
        }
        Ok(fallback.expect("the candidate list is never empty"))
    }
}

pub fn evaluate_conditions(g: &Graph, c: &DegreeConstraint, theta: Theta, h: Option<usize>) -> Result<TheoremReport> {
    TheoremInstance::new(g, c)?.evaluate(theta, h)
}

pub fn best_theta(g: &Graph, c: &DegreeConstraint, h: Option<usize>) -> Result<TheoremReport> {
    TheoremInstance::new(g, c)?.best_theta(h)
}

/// Largest odd `b` with `b h < l`, or `None` if `l <= h`.
pub fn largest_odd_below(l: usize, h: usize) -> Option<usize> {
    if h == 0 || l <= h {
        return None;
    }
    let b = (l - 1) / h;
    Some(if b % 2 == 0 { b - 1 } else { b })
}

/// `g = f` with `f = b` on `U` and, on every copy, `f = 1` except that the
/// lowest vertex of a copy gets `f = 2` when the copy has an even number of
/// vertices; every copy then has odd `f`-sum.
pub fn certificate_constraint(fam: &FamilyInstance, b: usize) -> Result<DegreeConstraint> {
    let mut f = vec![1usize; fam.graph.n()];
    for v in fam.u.iter() {
        f[v] = b;
    }
    for copy in &fam.copies {
        if copy.len() % 2 == 0 {
            f[copy.as_slice()[0]] = 2;
        }
    }
    DegreeConstraint::new(f.clone(), f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TightItem {
    MinDegree,
    EdgeConnectivity,
    Eigenvalues,
    Certificate,
}

impl fmt::Display for TightItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TightItem::MinDegree => "min-degree",
            TightItem::EdgeConnectivity => "edge-connectivity",
            TightItem::Eigenvalues => "eigenvalues",
            TightItem::Certificate => "certificate",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TightCheck {
    pub item: TightItem,
    pub passed: bool,
    pub expected: f64,
    pub measured: f64,
}

/// Tolerance for the eigenvalue check of [`verify_tightness`].
pub const TIGHT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightnessReport {
    pub r: usize,
    pub h: usize,
    pub l: usize,
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub edge_connectivity: usize,
    pub rho: f64,
    /// `lambda_{h+1}, ..., lambda_l`.
    pub eigenvalues: Vec<f64>,
    pub max_deviation: f64,
    pub b: usize,
    pub deficiency: i64,
    pub expected_deficiency: i64,
    /// `2h(h+1)`: the least `l` for which `l >= 2h / (1 - theta h)` holds
    /// at some `theta` with `ceil(1/theta) - 1 = h`.
    pub marginal_bound: usize,
    pub marginal_bound_holds: bool,
    pub checks: Vec<TightCheck>,
}

impl TightnessReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// Builds `F(r, h, l)` and checks `delta = r`, `kappa' = h`,
/// `lambda_{h+1..l} = rho(r, h)` and the `(U, {})` deficiency `b h - l < 0`
/// for `b` the largest odd integer below `l / h`.
pub fn verify_tightness(r: usize, h: usize, l: usize) -> Result<TightnessReport> {
    let fam = family_f(r, h, l)?;
    let g = &fam.graph;
    let min_degree = g.min_degree();
    let kappa = edge_connectivity(g)?;
    let rho_val = rho(r, h)?.value;
    let spec = adjacency_spectrum(g)?;
    let eigenvalues: Vec<f64> = spec.eigenvalues[h..l].to_vec();
    let max_deviation = eigenvalues.iter().map(|x| (x - rho_val).abs()).fold(0.0, f64::max);
    let worst = eigenvalues
        .iter()
        .copied()
        .max_by(|a, b| (a - rho_val).abs().total_cmp(&(b - rho_val).abs()))
        .unwrap_or(rho_val);

    let b = largest_odd_below(l, h).expect("l > h");
    let c = certificate_constraint(&fam, b)?;
    let def = deficiency(g, &c, &fam.u, &VertexSet::empty())?;
    let expected = (b * h) as i64 - l as i64;

    let marginal_bound = 2 * h * (h + 1);
    let checks = vec![
        TightCheck { item: TightItem::MinDegree, passed: min_degree == r, expected: r as f64, measured: min_degree as f64 },
        TightCheck { item: TightItem::EdgeConnectivity, passed: kappa == h, expected: h as f64, measured: kappa as f64 },
        TightCheck { item: TightItem::Eigenvalues, passed: max_deviation <= TIGHT_TOL, expected: rho_val, measured: worst },
        TightCheck {
            item: TightItem::Certificate,
            passed: def == expected && def < 0,
            expected: expected as f64,
            measured: def as f64,
        },
    ];
    Ok(TightnessReport {
        r,
        h,
        l,
        vertices: g.n(),
        edges: g.edge_count(),
        min_degree,
        edge_connectivity: kappa,
        rho: rho_val,
        eigenvalues,
        max_deviation,
        b,
        deficiency: def,
        expected_deficiency: expected,
        marginal_bound,
        marginal_bound_holds: l >= marginal_bound,
        checks,
    })
}

/// Checks for a sharpness triple `(r, h, b)` on `F(r, h, r)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RemarkReport {
    pub r: usize,
    pub h: usize,
    pub b: usize,
    /// The ceiling condition of [`remark_condition`]; `r = h` is read mod 2.
    pub condition_holds: bool,
    pub vertices: usize,
    pub regular: bool,
    pub edge_connectivity: usize,
    pub lambda_r: f64,
    pub rho: f64,
    /// `(U, {})` deficiency with `f = b` on `U`.
    pub deficiency: i64,
    /// Largest odd integer below `r / h`.
    pub certificate_b: usize,
    /// `(U, {})` deficiency with `f = certificate_b` on `U`.
    pub certificate_deficiency: i64,
}

pub fn verify_remark(r: usize, h: usize, b: usize) -> Result<RemarkReport> {
    let fam = family_f(r, h, r)?;
    let g = &fam.graph;
    let spec = adjacency_spectrum(g)?;
    let cert_b = largest_odd_below(r, h).expect("r > h");
    let def_with = |b: usize| -> Result<i64> {
        deficiency(g, &certificate_constraint(&fam, b)?, &fam.u, &VertexSet::empty())
    };
    Ok(RemarkReport {
        r,
        h,
        b,
        condition_holds: remark_condition(r, h, b),
        vertices: g.n(),
        regular: g.degrees().iter().all(|&d| d == r),
        edge_connectivity: edge_connectivity(g)?,
        lambda_r: spec.lambda(r).expect("F(r, h, r) has more than r vertices"),
        rho: rho(r, h)?.value,
        deficiency: def_with(b)?,
        certificate_b: cert_b,
        certificate_deficiency: def_with(cert_b)?,
    })
}
