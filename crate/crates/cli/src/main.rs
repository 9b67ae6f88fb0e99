//! `qgrass`: verification suites, enumerations and exports.
//!
//! Exit codes: 0 when every check passes, 1 on a counterexample or I/O
//! failure, 2 on a usage error.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qgrass_core::gkm;
use qgrass_core::graphs::EdgeLabeledGraph;
use qgrass_core::noncrossing::{enumerate_nc, z_of};
use qgrass_core::polytopes;
use qgrass_core::presentations::{betti_csv, betti_table};
use qgrass_core::verify::{self, VerifyConfig, DEFAULT_GRID};
use qgrass_core::{Composition, RSubset};

#[derive(Parser)]
#[command(name = "qgrass", version, about = "Quasisymmetric Grassmannian verification toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite over a grid of (r, n).
    Verify {
        suite: Suite,
        #[command(flatten)]
        common: Common,
        /// Print the full JSON report instead of the summary.
        #[arg(long)]
        json: bool,
    },
    /// Print one JSON record per line.
    Enumerate {
        object: Object,
        #[command(flatten)]
        common: Common,
    },
    /// Write a graph or table.
    Export {
        kind: Kind,
        target: Target,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// `default`, a list `1,3;2,4` or an inclusive box `2,4..3,6`.
    #[arg(long)]
    grid: Option<String>,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long)]
    degree_bound: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Bijections,
    Edges,
    Bruhat,
    Paving,
    Pluecker,
    Presentations,
    Gkm,
    Ribbon,
    Polytopes,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    Nc,
    Qgrass,
    QjEdges,
    Admissible,
    Components,
    Flowup,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Kind {
    Dot,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Target {
    Qj,
    Johnson,
    Faces,
    Betti,
    Flowup,
}

/// A usage error, mapped to exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let is_usage = e.downcast_ref::<Usage>().is_some()
                || matches!(e.downcast_ref::<qgrass_core::Error>(), Some(qgrass_core::Error::InvalidArgument(_) | qgrass_core::Error::BoundExceeded { .. }));
            ExitCode::from(if is_usage { 2 } else { 1 })
        }
    }
}

/// Parses `default`, `a,b;c,d` or `a,b..c,d`.
fn parse_grid(s: &str) -> anyhow::Result<Vec<(usize, usize)>> {
    let pair = |p: &str| -> anyhow::Result<(usize, usize)> {
        let (a, b) = p.trim().split_once(',').ok_or_else(|| usage(format!("bad grid point {p:?}")))?;
        Ok((
            a.trim().parse().map_err(|_| usage(format!("bad grid point {p:?}")))?,
            b.trim().parse().map_err(|_| usage(format!("bad grid point {p:?}")))?,
        ))
    };
    if s.trim() == "default" {
        return Ok(DEFAULT_GRID.to_vec());
    }
    let grid: Vec<(usize, usize)> = if let Some((lo, hi)) = s.split_once("..") {
        let ((r0, n0), (r1, n1)) = (pair(lo)?, pair(hi)?);
        (n0..=n1).flat_map(|n| (r0..=r1).filter(move |&r| r < n).map(move |r| (r, n))).collect()
    } else {
        s.split(';').map(pair).collect::<anyhow::Result<_>>()?
    };
    if grid.is_empty() {
        bail!(usage(format!("grid {s:?} is empty")));
    }
    Ok(grid)
}

impl Common {
    fn grid(&self) -> anyhow::Result<Vec<(usize, usize)>> {
        let grid = match (&self.grid, self.r, self.n) {
            (Some(_), Some(_), _) | (Some(_), _, Some(_)) => bail!(usage("use either --grid or --r/--n")),
            (Some(g), None, None) => parse_grid(g)?,
            (None, Some(r), Some(n)) => vec![(r, n)],
            (None, None, None) => DEFAULT_GRID.to_vec(),
            _ => bail!(usage("--r and --n go together")),
        };
        for &(r, n) in &grid {
            check_shape(r, n)?;
        }
        Ok(grid)
    }

    fn shape(&self) -> anyhow::Result<(usize, usize)> {
        match (self.r, self.n) {
            (Some(r), Some(n)) => {
                check_shape(r, n)?;
                Ok((r, n))
            }
            _ => bail!(usage("this command needs --r and --n")),
        }
    }

    fn emit(&self, text: &str) -> anyhow::Result<()> {
        match &self.out {
            Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
        }
    }
}

fn check_shape(r: usize, n: usize) -> anyhow::Result<()> {
    if r == 0 || r >= n {
        bail!(usage(format!("need 1 <= r < n, got r={r}, n={n}")));
    }
    if n > qgrass_core::max_n() {
        bail!(usage(format!("n={n} exceeds the bound {} (set QGRASS_MAX_N to raise it)", qgrass_core::max_n())));
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Verify { suite, common, json } => cmd_verify(suite, &common, json),
        Command::Enumerate { object, common } => cmd_enumerate(object, &common).map(|_| true),
        Command::Export { kind, target, common } => cmd_export(kind, target, &common).map(|_| true),
    }
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Bijections => "bijections",
        Suite::Edges => "edges",
        Suite::Bruhat => "bruhat",
        Suite::Paving => "paving",
        Suite::Pluecker => "pluecker",
        Suite::Presentations => "presentations",
        Suite::Gkm => "gkm",
        Suite::Ribbon => "ribbon",
        Suite::Polytopes => "polytopes",
        Suite::All => "all",
    }
}

fn cmd_verify(suite: Suite, common: &Common, as_json: bool) -> anyhow::Result<bool> {
    let grid = common.grid()?;
    let comb_max_n = if common.grid.is_some() || common.r.is_some() {
        grid.iter().map(|p| p.1).max().unwrap_or(2)
    } else {
        VerifyConfig::default().comb_max_n
    };
    let cfg = VerifyConfig {
        grid,
        seed: common.seed,
        samples: common.samples,
        degree_bound: common.degree_bound,
        comb_max_n,
        ..VerifyConfig::default()
    };
    let report = verify::run_suite(suite_name(suite), &cfg)?;
    let text = if as_json {
        serde_json::to_string_pretty(&report)? + "\n"
    } else {
        let mut s = verify::summary(&report);
        for d in report.discrepancies() {
            s.push_str(&format!("REPORTED DISCREPANCY: {}: {}\n", d.name, d.detail));
        }
        s.push_str(if report.passed() { "result: pass\n" } else { "result: FAIL\n" });
        s
    };
    common.emit(&text)?;
    Ok(report.passed())
}

fn lines(records: impl IntoIterator<Item = Value>) -> String {
    records.into_iter().map(|v| v.to_string() + "\n").collect()
}

fn fixed_point_labels(points: &[RSubset]) -> Vec<String> {
    points.iter().map(|b| b.label()).collect()
}

fn cmd_enumerate(object: Object, common: &Common) -> anyhow::Result<()> {
    let records: Vec<Value> = match object {
        Object::Nc => {
            let n = common.n.ok_or_else(|| usage("enumerate nc needs --n"))?;
            if n == 0 || n > qgrass_core::max_n() {
                bail!(usage(format!("n={n} out of range")));
            }
            enumerate_nc(n)?
                .iter()
                .map(|w| json!({ "oneline": w.perm().oneline(), "blocks": w.blocks() }))
                .collect()
        }
        Object::Qgrass => {
            let (r, n) = common.shape()?;
            RSubset::all(r, n)
                .iter()
                .map(|a| {
                    let z = z_of(a);
                    json!({
                        "subset": a.elems(),
                        "z": z.perm().oneline(),
                        "partition": qgrass_core::combinatorics::subset_to_partition(a).parts(),
                        "composition": qgrass_core::combinatorics::subset_to_comp(a).parts(),
                    })
                })
                .collect()
        }
        Object::QjEdges => {
            let (r, n) = common.shape()?;
            let g = EdgeLabeledGraph::quasi_johnson(r, n)?;
            g.edges()
                .iter()
                .map(|e| {
                    json!({
                        "u": g.vertices()[e.u].elems(),
                        "v": g.vertices()[e.v].elems(),
                        "label": [e.label.0, e.label.1],
                    })
                })
                .collect()
        }
        Object::Admissible | Object::Components => {
            let (r, n) = common.shape()?;
            let alphas = if matches!(object, Object::Components) {
                polytopes::components(r, n)
            } else {
                Composition::all_in_comp(r, n)
            };
            alphas
                .iter()
                .map(|alpha| {
                    let pts = polytopes::admissible_sets(alpha, r, n)?;
                    Ok(json!({ "alpha": alpha.parts(), "fixed_points": fixed_point_labels(&pts) }))
                })
                .collect::<anyhow::Result<_>>()?
        }
        Object::Flowup => {
            let (r, n) = common.shape()?;
            let g = EdgeLabeledGraph::quasi_johnson(r, n)?;
            gkm::all_flowups(&g)?.iter().map(|s| flowup_record(&g, s)).collect()
        }
    };
    common.emit(&lines(records))
}

fn flowup_record(g: &EdgeLabeledGraph, s: &gkm::FlowupSolution) -> Value {
    let values: Vec<Value> = g
        .vertices()
        .iter()
        .zip(&s.class.values)
        .filter(|(_, p)| !p.is_zero())
        .map(|(v, p)| json!({ "vertex": v.label(), "poly": p.to_string() }))
        .collect();
    json!({
        "base": s.base.label(),
        "degree": s.degree,
        "perturbation_dim": s.perturbation_dim.to_string(),
        "values": values,
    })
}

fn cmd_export(kind: Kind, target: Target, common: &Common) -> anyhow::Result<()> {
    let text = match (kind, target) {
        (Kind::Dot, Target::Qj) => {
            let (r, n) = common.shape()?;
            EdgeLabeledGraph::quasi_johnson(r, n)?.export_dot(&format!("QJ_{r}_{n}"))
        }
        (Kind::Dot, Target::Johnson) => {
            let (r, n) = common.shape()?;
            EdgeLabeledGraph::johnson(r, n)?.export_dot(&format!("J_{r}_{n}"))
        }
        (Kind::Dot, Target::Faces) => {
            let (r, n) = common.shape()?;
            polytopes::face_poset(r, n)?.to_dot()
        }
        (Kind::Json, Target::Qj) => {
            let (r, n) = common.shape()?;
            serde_json::to_string_pretty(&EdgeLabeledGraph::quasi_johnson(r, n)?.to_json())? + "\n"
        }
        (Kind::Json, Target::Flowup) => {
            let (r, n) = common.shape()?;
            let g = EdgeLabeledGraph::quasi_johnson(r, n)?;
            let sols: Vec<Value> = gkm::all_flowups(&g)?.iter().map(|s| flowup_record(&g, s)).collect();
            serde_json::to_string_pretty(&json!({ "r": r, "n": n, "flowups": sols }))? + "\n"
        }
        (Kind::Csv, Target::Betti) => {
            let mut rows = Vec::new();
            for (r, n) in common.grid()? {
                rows.extend(betti_table(r, n, common.degree_bound.unwrap_or(n + 2)));
            }
            betti_csv(&rows)
        }
        _ => bail!(usage("unsupported export; use dot qj|johnson|faces, json qj|flowup or csv betti")),
    };
    common.emit(&text)
}
