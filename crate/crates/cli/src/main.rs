//! `edgewalk` command-line driver.
//!
//! Exit codes: 0 ok, 1 usage or input error, 2 step budget exhausted,
//! 3 walk stuck (or the deterministic driver made no progress), 4 invalid
//! witness, 5 enumeration budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use edgewalk::analysis::{
    assignment_key, enumerate_proper_colorings, run_ensemble, scaling_csv, scaling_experiment, AnalysisError, KRule,
};
use edgewalk::graph::{generate, read_edge_list, write_edge_list};
use edgewalk::rng::seeded;
use edgewalk::vizing::{find_proper_coloring, verify_witness, WitnessDoc};
use edgewalk::{run_walk, ColoringDoc, EdgeColoring, Family, Graph, SamplerMode, VizingError, WalkConfig, WalkOutcome};

const EXIT_BUDGET: u8 = 2;
const EXIT_STUCK: u8 = 3;
const EXIT_INVALID_WITNESS: u8 = 4;
const EXIT_ENUMERATION_BUDGET: u8 = 5;

#[derive(Parser)]
#[command(name = "edgewalk", version, about = "Random and deterministic monotone edge recoloring")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a family spec and write it as an edge list.
    Gen {
        /// e.g. `kneser:5,2`, `complete:6`, `random:20,0.3,7`
        #[arg(long)]
        family: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run one mild random walk and write the final coloring.
    Walk(WalkArgs),
    /// Drive a coloring to a proper one with the deterministic procedure and
    /// write the recoloring witness.
    Vizing {
        #[command(flatten)]
        graph: GraphSource,
        /// Number of colors; defaults to Δ + 1.
        #[arg(short)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `random`, `mono:<color>` or a coloring JSON file.
        #[arg(long, default_value = "random")]
        init: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Replay a witness and check that it is monotone and ends proper.
    Verify { witness: PathBuf },
    /// List every proper k-edge-coloring of a small graph.
    Enumerate {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run an ensemble of walks from uniform random starts and report.
    Stats {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(short)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        runs: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        max_steps: u64,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Step counts of ensembles over a family at several orders.
    Scale {
        #[arg(long)]
        family: String,
        /// Comma-separated orders, e.g. `4,6,8`.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_enum, default_value_t = KChoice::DeltaPlusOne)]
        k_rule: KChoice,
        #[arg(long, default_value_t = 100)]
        runs: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        max_steps: u64,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Edge-list file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Family spec, e.g. `complete:4`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
struct WalkArgs {
    #[command(flatten)]
    graph: GraphSource,
    #[arg(short)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1_000_000)]
    max_steps: u64,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    /// `random`, `mono:<color>` or a coloring JSON file.
    #[arg(long, default_value = "random")]
    init: String,
    /// Write the step trace as CSV.
    #[arg(long)]
    trace: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Rejection,
}

impl From<Mode> for SamplerMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exact => SamplerMode::Exact,
            Mode::Rejection => SamplerMode::Rejection,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum KChoice {
    #[value(name = "delta+1")]
    DeltaPlusOne,
    Delta,
}

impl GraphSource {
    fn load(&self) -> Result<Arc<Graph>> {
        let g = match (&self.graph, &self.family) {
            (Some(path), None) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                read_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?
            }
            (None, Some(spec)) => generate(&spec.parse::<Family>()?)?,
            _ => bail!("give exactly one of --graph and --family"),
        };
        Ok(Arc::new(g))
    }
}

/// Writes `text` to `path`, or to stdout when absent. Summaries go to stdout
/// only when the data went to a file.
struct Sink {
    to_file: bool,
}

impl Sink {
    fn emit(output: &Option<PathBuf>, text: &str) -> Result<Sink> {
        match output {
            Some(path) => {
                fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
                Ok(Sink { to_file: true })
            }
            None => {
                print!("{text}");
                Ok(Sink { to_file: false })
            }
        }
    }

    fn note(&self, line: &str) {
        if self.to_file {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    }
}

fn start_coloring(g: &Arc<Graph>, k: usize, init: &str) -> Result<Option<EdgeColoring>> {
    if init == "random" {
        return Ok(None);
    }
    if let Some(color) = init.strip_prefix("mono:") {
        let color: usize = color.parse().map_err(|_| anyhow!("bad color in --init {init:?}"))?;
        if color >= k {
            bail!("--init color {color} is outside 0..{k}");
        }
        return Ok(Some(EdgeColoring::monochromatic(Arc::clone(g), k, color)?));
    }
    let path = Path::new(init);
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let doc = ColoringDoc::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    if doc.k != k {
        bail!("--init file uses k = {} but k = {k} was requested", doc.k);
    }
    Ok(Some(doc.into_coloring_on(Arc::clone(g))?))
}

/// Reads `k` from an `--init` file when none was given, else `Δ + 1`.
fn resolve_k(g: &Graph, k: Option<usize>, init: &str) -> Result<usize> {
    if let Some(k) = k {
        return Ok(k);
    }
    if init != "random" && !init.starts_with("mono:") {
        let text = fs::read_to_string(init).with_context(|| format!("reading {init}"))?;
        return Ok(ColoringDoc::from_json(&text)?.k);
    }
    Ok(g.max_degree() + 1)
}

fn cmd_gen(family: &str, output: &Option<PathBuf>) -> Result<u8> {
    let g = generate(&family.parse::<Family>()?)?;
    let sink = Sink::emit(output, &write_edge_list(&g))?;
    sink.note(&format!("n={} m={} max_degree={}", g.vertex_count(), g.edge_count(), g.max_degree()));
    Ok(0)
}

fn cmd_walk(a: &WalkArgs) -> Result<u8> {
    let g = a.graph.load()?;
    let k = resolve_k(&g, a.k, &a.init)?;
    let start = start_coloring(&g, k, &a.init)?;
    let cfg = WalkConfig {
        k,
        max_steps: a.max_steps,
        seed: a.seed,
        mode: a.mode.into(),
        record_trace: a.trace.is_some(),
    };
    let r = run_walk(g, &cfg, start)?;
    if let (Some(path), Some(csv)) = (&a.trace, r.trace_csv()) {
        fs::write(path, csv).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut doc = ColoringDoc::from(&r.final_coloring).to_json();
    doc.push('\n');
    let sink = Sink::emit(&a.output, &doc)?;
    let potential = r.final_coloring.potential();
    let summary = format!("steps={} potential={potential}", r.steps_taken);
    Ok(match r.outcome {
        WalkOutcome::Proper => {
            sink.note(&format!("proper {summary}"));
            0
        }
        WalkOutcome::BudgetExhausted => {
            eprintln!("step budget of {} exhausted before reaching a proper coloring ({summary})", a.max_steps);
            EXIT_BUDGET
        }
        WalkOutcome::Stuck => {
            eprintln!("stuck: no recoloring keeps the potential from rising ({summary})");
            EXIT_STUCK
        }
    })
}

fn cmd_vizing(graph: &GraphSource, k: Option<usize>, seed: u64, init: &str, output: &Option<PathBuf>) -> Result<u8> {
    let g = graph.load()?;
    let k = resolve_k(&g, k, init)?;
    if k <= g.max_degree() {
        bail!(
            "the deterministic procedure needs k >= Δ + 1 = {} colors (got k = {k})",
            g.max_degree() + 1
        );
    }
    let start = match start_coloring(&g, k, init)? {
        Some(c) => c,
        None => EdgeColoring::random(Arc::clone(&g), k, &mut seeded(seed))?,
    };
    let witness = match find_proper_coloring(&start) {
        Ok(w) => w,
        Err(e @ VizingError::TooFewColors { .. }) => bail!(e),
        Err(e) => {
            eprintln!("no proper coloring reached: {e}");
            return Ok(EXIT_STUCK);
        }
    };
    let mut json = witness.to_json();
    json.push('\n');
    let sink = Sink::emit(output, &json)?;
    sink.note(&format!("steps={} initial_potential={}", witness.steps.len(), start.potential()));
    Ok(0)
}

fn cmd_verify(path: &Path) -> Result<u8> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let doc = match WitnessDoc::from_json(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("invalid witness: {e}");
            return Ok(EXIT_INVALID_WITNESS);
        }
    };
    match verify_witness(&doc) {
        Ok(_) => {
            println!("valid: {} steps, final coloring proper", doc.steps.len());
            Ok(0)
        }
        Err(e) => {
            eprintln!("invalid witness: {e}");
            Ok(EXIT_INVALID_WITNESS)
        }
    }
}

fn cmd_enumerate(graph: &GraphSource, k: usize, format: Format, output: &Option<PathBuf>) -> Result<u8> {
    let g = graph.load()?;
    let all = match enumerate_proper_colorings(&g, k) {
        Ok(all) => all,
        Err(e @ AnalysisError::Budget { .. }) => {
            eprintln!("{e}");
            return Ok(EXIT_ENUMERATION_BUDGET);
        }
        Err(e) => bail!(e),
    };
    let text = match format {
        Format::Json => {
            let value = serde_json::json!({ "k": k, "count": all.len(), "colorings": all });
            format!("{value}\n")
        }
        Format::Csv => {
            let header: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
            let mut out = header.join(",") + "\n";
            for a in &all {
                out.push_str(&assignment_key(a));
                out.push('\n');
            }
            out
        }
    };
    let sink = Sink::emit(output, &text)?;
    sink.note(&format!("count={}", all.len()));
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Gen { family, output } => cmd_gen(family, output),
        Command::Walk(a) => cmd_walk(a),
        Command::Vizing {
            graph,
            k,
            seed,
            init,
            output,
        } => cmd_vizing(graph, *k, *seed, init, output),
        Command::Verify { witness } => cmd_verify(witness),
        Command::Enumerate {
            graph,
            k,
            format,
            output,
        } => cmd_enumerate(graph, *k, *format, output),
        Command::Stats {
            graph,
            k,
            runs,
            seed,
            max_steps,
            mode,
            output,
        } => (|| {
            let g = graph.load()?;
            let cfg = WalkConfig {
                k: k.unwrap_or(g.max_degree() + 1),
                max_steps: *max_steps,
                seed: *seed,
                mode: (*mode).into(),
                record_trace: false,
            };
            let report = run_ensemble(g, &cfg, *runs)?;
            let sink = Sink::emit(output, &(report.to_json() + "\n"))?;
            sink.note(&format!("runs={} proper={}", report.runs, report.outcomes["proper"]));
            Ok(0)
        })(),
        Command::Scale {
            family,
            sizes,
            k_rule,
            runs,
            seed,
            max_steps,
            mode,
            format,
            output,
        } => (|| {
            let family: Family = family.parse()?;
            let base = WalkConfig {
                k: 1,
                max_steps: *max_steps,
                seed: *seed,
                mode: (*mode).into(),
                record_trace: false,
            };
            let rule = match k_rule {
                KChoice::DeltaPlusOne => KRule::DeltaPlusOne,
                KChoice::Delta => KRule::Delta,
            };
            let rows = scaling_experiment(&family, sizes, rule, *runs, &base)?;
            let text = match format {
                Format::Csv => scaling_csv(&rows),
                Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
            };
            Sink::emit(output, &text)?;
            Ok(0)
        })(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
