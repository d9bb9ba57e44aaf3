//! Command definitions and their execution.
//!
//! [`run`] never prints; it returns the text for stdout and the exit code so
//! that the binary and the tests share one path.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hypermatch_core::extremal::{f_bound, make_d, make_hd, make_hs, make_s};
use hypermatch_core::fractional::max_fractional;
use hypermatch_core::harness::{
    absorb, build_absorbing, stability_probe, verify_erdos, verify_rainbow, Status, TrialConfig,
    Verdict, Witness,
};
use hypermatch_core::matcher::{
    max_matching, perfect_matching, rainbow, reduce_h, reduce_hstar, AuxMatching, AuxVertex,
};
use hypermatch_core::shift::{peel_full_degree, saturate, stabilize};
use hypermatch_core::{Family, KGraph, Rational};
use num_bigint::BigInt;
use thiserror::Error;

use crate::format::{self, FormatError};
use crate::report::{edge, record, Record, Report, Value};
use crate::runner::Parallel;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Malformed(String),
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Format(_) | CliError::Malformed(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

impl From<hypermatch_core::Error> for CliError {
    fn from(e: hypermatch_core::Error) -> Self {
        use hypermatch_core::Error as E;
        match e {
            E::Parameters(_) | E::Precondition(_) | E::HasRainbow(_) | E::SetTooLarge { .. } => {
                CliError::Precondition(e.to_string())
            }
            _ => CliError::Malformed(e.to_string()),
        }
    }
}

pub const EXIT_COUNTEREXAMPLE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "hypermatch", version, about = "Matchings, rainbow matchings and extremal checks in uniform hypergraphs")]
pub struct Cli {
    /// Print reports as one JSON document.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print the elapsed time to stderr.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "D", alias = "d")]
    D,
    #[value(name = "HS", alias = "hs")]
    Hs,
    #[value(name = "HD", alias = "hd")]
    Hd,
    #[value(name = "complete")]
    Complete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReduceKind {
    #[value(name = "H", alias = "h")]
    H,
    #[value(name = "Hstar", alias = "hstar")]
    Hstar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Erdos,
    Rainbow,
    Stability,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit S, D, H_S, H_D or a complete graph.
    Gen {
        kind: GenKind,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print f(n,m,k).
    Fbound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u64,
    },
    /// Maximum matching size of a graph file.
    Nu { file: PathBuf },
    /// A perfect matching of a graph file, or NONE.
    Perfect { file: PathBuf },
    /// Maximum fractional matching with its dual cover.
    Frac { file: PathBuf },
    /// A rainbow matching of a family file, or NONE.
    Rainbow { file: PathBuf },
    /// Compress every member to a stable graph.
    Stabilize {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Grow a rainbow-free family to a stable saturated one.
    Saturate {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Remove full-degree vertices together with their members.
    Peel {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Build H(F) or H*(F) from a family file.
    Reduce {
        which: ReduceKind,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a seeded verification sweep.
    Verify {
        kind: VerifyKind,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 3)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse_rational)]
        epsilon: Option<Rational>,
        #[arg(long, value_parser = parse_rational)]
        c: Option<Rational>,
        #[arg(long, value_parser = parse_rational)]
        gamma: Option<Rational>,
        #[arg(long = "gamma-prime", value_parser = parse_rational)]
        gamma_prime: Option<Rational>,
        /// Where to write a counterexample or NEITHER witness.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Build the absorbing matching of a stable family and absorb a set.
    Absorb {
        file: PathBuf,
        #[arg(long)]
        t: u32,
        /// Vertices of S, e.g. `v1,10,11,12`.
        #[arg(long = "s-spec")]
        s_spec: Option<String>,
    },
}

/// Accepts `p/q`, integers and finite decimals.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("not a rational: `{s}`");
    let int = |t: &str| t.parse::<BigInt>().map_err(|_| bad());
    if let Some((p, q)) = s.split_once('/') {
        let q = int(q)?;
        if q == BigInt::from(0) {
            return Err(bad());
        }
        return Ok(Rational::new(int(p)?, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let scale = BigInt::from(10).pow(frac.len() as u32);
        let digits = int(&format!("{whole}{frac}"))?;
        return Ok(Rational::new(digits, scale));
    }
    Ok(Rational::from_integer(int(s)?))
}

pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

fn read_graph(path: &Path) -> Result<KGraph, CliError> {
    Ok(format::parse_graph(&format::read_text(path)?)?)
}

fn read_family(path: &Path) -> Result<Family, CliError> {
    Ok(format::parse_family(&format::read_text(path)?)?)
}

/// Writes to `out` when given, otherwise returns the text for stdout.
fn deliver(text: String, out: Option<&Path>) -> Result<String, CliError> {
    match out {
        Some(p) => {
            format::write_text(p, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn aux_record(m: &AuxMatching) -> Vec<Record> {
    m.edges
        .iter()
        .map(|e| record([("label", Value::Text(e.label.to_string())), ("base", edge(&e.base))]))
        .collect()
}

fn parse_s_spec(spec: &str) -> Result<BTreeSet<AuxVertex>, CliError> {
    let toks: Vec<&str> = spec.split([',', ' ']).filter(|t| !t.is_empty()).collect();
    let mut out = BTreeSet::new();
    for t in toks {
        let x = if let Ok(v) = t.parse() {
            AuxVertex::Base(v)
        } else {
            let (kind, idx) = t.split_at_checked(1).ok_or_else(|| CliError::Malformed(format!("bad vertex `{t}`")))?;
            let idx: u32 = idx.parse().map_err(|_| CliError::Malformed(format!("bad vertex `{t}`")))?;
            match kind {
                "v" => AuxVertex::Label(hypermatch_core::matcher::Label::V(idx)),
                "u" => AuxVertex::Label(hypermatch_core::matcher::Label::U(idx)),
                _ => return Err(CliError::Malformed(format!("bad vertex `{t}`"))),
            }
        };
        if !out.insert(x) {
            return Err(CliError::Malformed(format!("vertex `{t}` repeated in S")));
        }
    }
    Ok(out)
}

fn verdict_report(report: &mut Report, v: &Verdict) {
    report
        .push("status", v.status.to_string())
        .push("deterministic", v.stats.deterministic)
        .push("random", v.stats.random)
        .push("below_premise", v.stats.below_premise)
        .push("anomalies", v.stats.anomalies)
        .push("counterexamples", v.stats.counterexamples);
}

fn default_witness(kind: &str, ext: &str) -> PathBuf {
    PathBuf::from(format!("hypermatch-{kind}-witness.{ext}"))
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let start = Instant::now();
    let out = execute(cli);
    if cli.timings {
        eprintln!("elapsed_ms={}", start.elapsed().as_millis());
    }
    out
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    let json = cli.json;
    match &cli.command {
        Command::Gen { kind, n, m, k, out } => {
            let text = match kind {
                GenKind::S => format::emit_graph(&make_s(*n, *m, *k)?),
                GenKind::D => format::emit_graph(&make_d(*n, *m, *k)?),
                GenKind::Hs => format::emit_aux(&make_hs(*n, *m, *k)?),
                GenKind::Hd => format::emit_aux(&make_hd(*n, *m, *k)?),
                GenKind::Complete => {
                    if *k == 0 || k > n {
                        return Err(hypermatch_core::Error::Uniformity { n: *n, k: *k }.into());
                    }
                    format::emit_graph(&KGraph::complete(*n, *k))
                }
            };
            Ok(Output::ok(deliver(text, out.as_deref())?))
        }
        Command::Fbound { n, m, k } => {
            let f = f_bound(*n, *m, *k)?;
            Ok(Output::ok(if json {
                Report::new().push("f", f).to_json()
            } else {
                format!("{f}\n")
            }))
        }
        Command::Nu { file } => {
            let g = read_graph(file)?;
            let mm = max_matching(&g);
            Ok(Output::ok(if json {
                Report::new()
                    .push("nu", mm.len())
                    .records("edge", mm.edges.iter().map(|e| record([("vertices", edge(e))])).collect())
                    .to_json()
            } else {
                format!("{}\n", mm.len())
            }))
        }
        Command::Perfect { file } => {
            let g = read_graph(file)?;
            let pm = perfect_matching(&g);
            let mut r = Report::new();
            r.push("perfect", pm.is_some());
            if let Some(pm) = pm {
                r.records("edge", pm.edges.iter().map(|e| record([("vertices", edge(e))])).collect());
            }
            Ok(Output::ok(r.render(json)))
        }
        Command::Frac { file } => {
            let g = read_graph(file)?;
            let opt = max_fractional(&g);
            opt.audit(&g)?;
            let target = Rational::new(g.n().into(), g.k().into());
            let mut r = Report::new();
            r.push("value", &opt.value).push("perfect", opt.value == target);
            r.records(
                "edge",
                opt.matching
                    .weights()
                    .iter()
                    .map(|(e, w)| record([("vertices", edge(e)), ("weight", w.into())]))
                    .collect(),
            );
            r.records(
                "cover",
                opt.cover
                    .iter()
                    .zip(1u32..)
                    .filter(|(y, _)| **y != Rational::from_integer(0.into()))
                    .map(|(y, v)| record([("vertex", v.into()), ("weight", y.into())]))
                    .collect(),
            );
            Ok(Output::ok(r.render(json)))
        }
        Command::Rainbow { file } => {
            let f = read_family(file)?;
            let rm = rainbow(&f);
            if json {
                let mut r = Report::new();
                r.push("found", rm.is_some());
                if let Some(rm) = &rm {
                    r.records(
                        "edge",
                        rm.pairs.iter().map(|(i, e)| record([("member", (i + 1).into()), ("vertices", edge(e))])).collect(),
                    );
                }
                return Ok(Output::ok(r.to_json()));
            }
            Ok(Output::ok(match rm {
                None => "NONE\n".into(),
                Some(rm) => rm
                    .pairs
                    .iter()
                    .map(|(i, e)| {
                        let vs: Vec<String> = e.iter().map(ToString::to_string).collect();
                        format!("F{} {}\n", i + 1, vs.join(" "))
                    })
                    .collect(),
            }))
        }
        Command::Stabilize { file, out } => {
            let f = stabilize(&read_family(file)?);
            Ok(Output::ok(deliver(format::emit_family(&f), out.as_deref())?))
        }
        Command::Saturate { file, out } => {
            let f = saturate(&read_family(file)?)?;
            Ok(Output::ok(deliver(format::emit_family(&f), out.as_deref())?))
        }
        Command::Peel { file, out, log } => {
            let res = peel_full_degree(&read_family(file)?)?;
            if let Some(path) = log {
                let mut r = Report::new();
                r.records(
                    "step",
                    res.log
                        .iter()
                        .map(|s| {
                            record([
                                ("iteration", s.iteration.into()),
                                ("member", (s.member + 1).into()),
                                ("vertex", s.vertex.into()),
                                ("original_member", (s.original_member + 1).into()),
                                ("original_vertex", s.original_vertex.into()),
                                ("n", s.n.into()),
                            ])
                        })
                        .collect(),
                );
                let members: Vec<usize> = res.original_members.iter().map(|i| i + 1).collect();
                r.push("original_members", edge(&members)).push("original_vertices", edge(&res.original_vertices));
                r.push(
                    "size_bound_carried",
                    match res.size_bound_carried {
                        Some(b) => b.to_string(),
                        None => "n/a".into(),
                    },
                );
                format::write_text(path, &r.render(json))?;
            }
            Ok(Output::ok(deliver(format::emit_family(&res.family), out.as_deref())?))
        }
        Command::Reduce { which, file, out } => {
            let f = read_family(file)?;
            let h = match which {
                ReduceKind::H => reduce_h(&f)?,
                ReduceKind::Hstar => reduce_hstar(&f)?,
            };
            Ok(Output::ok(deliver(format::emit_aux(&h), out.as_deref())?))
        }
        Command::Verify { kind, n, m, k, trials, seed, epsilon, c, gamma, gamma_prime, witness } => {
            let mut cfg = TrialConfig::new(*n, *m, *k).with_trials(*trials, *seed);
            for (slot, v) in [
                (&mut cfg.epsilon, epsilon),
                (&mut cfg.c, c),
                (&mut cfg.gamma, gamma),
                (&mut cfg.gamma_prime, gamma_prime),
            ] {
                if let Some(v) = v {
                    *slot = v.clone();
                }
            }
            cfg.validate()?;
            let runner = Parallel::from_env().map_err(CliError::Malformed)?;
            let name = match kind {
                VerifyKind::Erdos => "erdos",
                VerifyKind::Rainbow => "rainbow",
                VerifyKind::Stability => "stability",
            };
            let mut r = Report::new();
            r.push("verify", name)
                .push("n", cfg.n)
                .push("m", cfg.m)
                .push("k", cfg.k)
                .push("trials", cfg.trials)
                .push("seed", cfg.seed)
                .push("epsilon", &cfg.epsilon)
                .push("c", &cfg.c)
                .push("gamma", &cfg.gamma)
                .push("gamma_prime", &cfg.gamma_prime);
            if *kind == VerifyKind::Stability {
                let p = stability_probe(cfg.n, cfg.m, &cfg.epsilon, cfg.trials, cfg.seed, &runner)?;
                r.push("f", p.f.clone())
                    .push("window_low", &p.window_low)
                    .push("vacuous", p.vacuous)
                    .push("sampled", p.sampled)
                    .push("outside_window", p.outside_window)
                    .push("has_matching", p.has_matching)
                    .push("s_close", p.s_close)
                    .push("d_close", p.d_close)
                    .push("both", p.both)
                    .push("neither", p.neither);
                if let (Some(first), Some(path)) = (p.neither_witnesses.first(), witness) {
                    format::write_text(path, &format::emit_graph(first))?;
                    r.push("witness", path.display().to_string());
                }
                return Ok(Output::ok(r.render(json)));
            }
            let v = match kind {
                VerifyKind::Erdos => verify_erdos(&cfg, &runner)?,
                _ => verify_rainbow(&cfg, &runner)?,
            };
            verdict_report(&mut r, &v);
            if let Some(w) = &v.witness {
                let (text, ext) = match w {
                    Witness::Graph { graph, .. } => (format::emit_graph(graph), "khg"),
                    Witness::Family { family } => (format::emit_family(family), "khf"),
                };
                let path = witness.clone().unwrap_or_else(|| default_witness(name, ext));
                format::write_text(&path, &text)?;
                r.push("witness", path.display().to_string());
            }
            let code = if v.status == Status::Counterexample { EXIT_COUNTEREXAMPLE } else { 0 };
            Ok(Output { stdout: r.render(json), code })
        }
        Command::Absorb { file, t, s_spec } => {
            let f = read_family(file)?;
            let m = build_absorbing(&f, *t)?;
            let mut r = Report::new();
            r.push("t", *t).records("absorbing", aux_record(&m));
            if let Some(spec) = s_spec {
                let s = parse_s_spec(spec)?;
                let pm = absorb(&f, &m, &s)?;
                r.records("matching", aux_record(&pm));
            }
            Ok(Output::ok(r.render(json)))
        }
    }
}
