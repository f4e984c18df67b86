//! `parfac`: generate graphs, compute spectra, decide parity factors,
//! evaluate the spectral sufficient conditions and check tightness.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use parfac_core::constructions::{complete, complete_bipartite, cycle, extremal_h, family_f};
use parfac_core::factor::{
    decide_bruteforce, find_parity_factor_with_limit, parse_constraints, verify_factor, DegreeConstraint,
    FactorCertificate, DEFAULT_LIMIT,
};
use parfac_core::graph::{parse_graph, serialize_graph};
use parfac_core::spectral::adjacency_spectrum;
use parfac_core::theorem::{parse_theta, verify_tightness, TheoremInstance};
use parfac_core::Graph;

#[derive(Parser, Debug)]
#[command(name = "parfac", version, about = "Parity factors, spectral thresholds and extremal graphs")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph in the text format.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Adjacency eigenvalues, descending.
    Spectrum {
        file: PathBuf,
        /// Print only lambda_k (1-based).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Decide or construct a (g,f)-parity factor.
    Factor {
        #[command(subcommand)]
        action: FactorAction,
    },
    /// Evaluate the spectral sufficient conditions.
    Thm {
        #[command(subcommand)]
        action: ThmAction,
    },
    /// Check the tightness family F(r, h, l).
    Tight {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        l: usize,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Complete graph.
    Kn {
        #[arg(long)]
        n: usize,
    },
    /// Cycle.
    Cyc {
        #[arg(long)]
        n: usize,
    },
    /// Complete bipartite graph K_{h,l}.
    Kbip {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        l: usize,
    },
    /// Extremal graph H(r, eta).
    #[command(name = "H")]
    H {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        eta: usize,
    },
    /// Tightness family member F(r, h, l).
    #[command(name = "F")]
    F {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        l: usize,
        /// Also write {U, copies, params} JSON here.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Random G(n, p) graph drawn with --seed.
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
}

#[derive(Subcommand, Debug)]
enum FactorAction {
    /// Report existence, with a violating (S, T) when none exists.
    Check(FactorArgs),
    /// Construct a factor.
    Find(FactorArgs),
}

#[derive(clap::Args, Debug)]
struct FactorArgs {
    file: PathBuf,
    /// Constraint file (JSON or `all`/`v` lines).
    #[arg(long = "c")]
    constraints: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Matching)]
    method: Method,
    /// Vertex limit for the brute-force decider.
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    /// Brute-force criterion over all disjoint (S, T).
    Oracle,
    /// Gadget reduction and maximum matching.
    Matching,
    /// Both, failing on disagreement.
    Both,
}

#[derive(Subcommand, Debug)]
enum ThmAction {
    /// Evaluate branches (a) to (e) at one theta.
    Check {
        file: PathBuf,
        #[arg(long = "c")]
        constraints: PathBuf,
        /// `a/b` or decimal; defaults to the feasible point nearest 1/2.
        #[arg(long, conflicts_with = "best_theta")]
        theta: Option<String>,
        /// Assumed edge connectivity, at most the true value.
        #[arg(long)]
        h: Option<usize>,
        /// Search breakpoints for a guaranteeing theta.
        #[arg(long)]
        best_theta: bool,
    },
}

type Outcome = Result<String, String>;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    parse_graph(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_constraints(path: &Path, g: &Graph) -> Result<DegreeConstraint, String> {
    parse_constraints(&read(path)?, g.n()).map_err(|e| format!("{}: {e}", path.display()))
}

fn graph_json(g: &Graph) -> serde_json::Value {
    json!({
        "n": g.n(),
        "edges": g.edges().iter().map(|&(u, v, m)| [u, v, m]).collect::<Vec<_>>(),
        "loops": g.loop_entries().iter().map(|&(v, c)| [v, c]).collect::<Vec<_>>(),
    })
}

fn gen(kind: GenKind, json_out: bool, seed: u64) -> Outcome {
    let err = |e: parfac_core::Error| e.to_string();
    let (g, family) = match kind {
        GenKind::Kn { n } => (complete(n).map_err(err)?, None),
        GenKind::Cyc { n } => (cycle(n).map_err(err)?, None),
        GenKind::Kbip { h, l } => (complete_bipartite(h, l).map_err(err)?, None),
        GenKind::H { r, eta } => (extremal_h(r, eta).map_err(err)?, None),
        GenKind::F { r, h, l, sidecar } => {
            let fam = family_f(r, h, l).map_err(err)?;
            if let Some(path) = sidecar {
                fs::write(&path, fam.sidecar_json() + "\n")
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            let side = fam.sidecar_json();
            (fam.graph, Some(side))
        }
        GenKind::Gnp { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(format!("p = {p} is not a probability"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v).map_err(err)?;
                    }
                }
            }
            (g, None)
        }
    };
    if json_out {
        let mut value = graph_json(&g);
        if let Some(side) = family {
            value["family"] = serde_json::from_str(&side).expect("sidecar is valid JSON");
        }
        return Ok(value.to_string() + "\n");
    }
    let mut out = String::new();
    if let Some(side) = family {
        out.push_str(&format!("# family {side}\n"));
    }
    out.push_str(&serialize_graph(&g));
    Ok(out)
}

fn spectrum(file: &Path, k: Option<usize>, json_out: bool) -> Outcome {
    let g = load_graph(file)?;
    let spec = adjacency_spectrum(&g).map_err(|e| e.to_string())?;
    if let Some(k) = k {
        let lam = spec
            .lambda(k)
            .ok_or_else(|| format!("k = {k} is outside 1..={}", g.n()))?;
        return Ok(if json_out {
            json!({ "k": k, "lambda": lam }).to_string() + "\n"
        } else {
            render::num(lam) + "\n"
        });
    }
    if json_out {
        return Ok(serde_json::to_string(&spec).expect("spectrum serializes") + "\n");
    }
    Ok(spec.eigenvalues.iter().map(|&x| render::num(x) + "\n").collect())
}

fn factor(action: FactorAction, json_out: bool) -> Outcome {
    let (args, construct) = match action {
        FactorAction::Check(a) => (a, false),
        FactorAction::Find(a) => (a, true),
    };
    let g = load_graph(&args.file)?;
    let c = load_constraints(&args.constraints, &g)?;
    let err = |e: parfac_core::Error| e.to_string();

    let oracle = || decide_bruteforce(&g, &c, args.limit).map_err(err);
    let matching = || find_parity_factor_with_limit(&g, &c, args.limit).map_err(err);
    let mut cert: FactorCertificate = match args.method {
        Method::Oracle if construct => {
            return Err("the oracle only decides existence; use --method matching or both".into())
        }
        Method::Oracle => oracle()?,
        Method::Matching => matching()?,
        Method::Both => {
            let a = oracle()?;
            let b = matching()?;
            if a.verdict != b.verdict {
                return Err(format!("methods disagree: oracle {}, matching {}", a.verdict, b.verdict));
            }
            b
        }
    };
    if let Some(f) = &cert.factor {
        if !verify_factor(&g, &c, f).map_err(err)? {
            return Err("constructed factor failed verification".into());
        }
    }
    if !construct {
        cert.factor = None;
    }
    Ok(if json_out { cert.to_json() + "\n" } else { render::certificate(&cert) })
}

fn thm(action: ThmAction, json_out: bool) -> Outcome {
    let ThmAction::Check { file, constraints, theta, h, best_theta } = action;
    let g = load_graph(&file)?;
    let c = load_constraints(&constraints, &g)?;
    let err = |e: parfac_core::Error| e.to_string();
    let inst = TheoremInstance::new(&g, &c).map_err(err)?;
    let rep = if best_theta {
        inst.best_theta(h).map_err(err)?
    } else {
        let t = match theta {
            Some(s) => parse_theta(&s).map_err(err)?,
            None => inst.interval().closest_to_half(),
        };
        inst.evaluate(t, h).map_err(err)?
    };
    Ok(if json_out { rep.to_json() + "\n" } else { render::theorem(&rep, &inst.interval().to_string()) })
}

fn tight(r: usize, h: usize, l: usize, json_out: bool) -> Outcome {
    let rep = verify_tightness(r, h, l).map_err(|e| e.to_string())?;
    Ok(if json_out { rep.to_json() + "\n" } else { render::tightness(&rep) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen { kind } => gen(kind, cli.json, cli.seed),
        Command::Spectrum { file, k } => spectrum(&file, k, cli.json),
        Command::Factor { action } => factor(action, cli.json),
        Command::Thm { action } => thm(action, cli.json),
        Command::Tight { r, h, l } => tight(r, h, l, cli.json),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
