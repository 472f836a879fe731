//! The `tourpat` command line and the acceptance runner behind `verify`.
//!
//! Exit status: 0 on success, 1 for bad input (or failed acceptance
//! criteria), 2 when a size cap, node budget or timeout cut a computation
//! short. Vertex ids in every output are 1-based.

pub mod acceptance;
mod commands;
pub mod input;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{Map, Value};
use tourpat_core::{Error, Limits};

pub use report::{Format, Report, RunConfig};

#[derive(Debug, Parser)]
#[command(
    name = "tourpat",
    version,
    about = "Forcing tournaments and matrix patterns by adding bidirectional edges"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    #[arg(long, global = true, value_enum, default_value = "human")]
    pub format: Format,
    /// Master seed; required by every randomized command.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads for parallel loops (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Wall-clock limit in seconds for branch-and-bound searches.
    #[arg(long, global = true)]
    pub timeout: Option<f64>,
    /// Node limit for branch-and-bound searches.
    #[arg(long, global = true)]
    pub max_nodes: Option<u64>,
    /// Override a size cap, e.g. `--cap q5=18`; repeatable.
    #[arg(long = "cap", global = true, value_name = "NAME=N")]
    pub caps: Vec<String>,
    /// Also write the witness text to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub emit_witness: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural invariants of a tournament and the bounds they imply.
    Classify {
        #[arg(long, alias = "g-file")]
        g: String,
        /// Whether the tournament is known to be a hero (enables the matching bound).
        #[arg(long)]
        hero: Option<bool>,
    },
    /// Containment tests.
    #[command(subcommand)]
    Contain(Contain),
    /// Exact extremal numbers by branch and bound.
    #[command(subcommand)]
    Extremal(Extremal),
    /// Named tournaments and generators, printed in the digraph text format.
    #[command(subcommand)]
    Construct(Construct),
    /// Matrix/tournament reductions.
    #[command(subcommand)]
    Reduce(Reduce),
    /// Random orientations, gap samples, expansion and Monte Carlo estimates.
    #[command(subcommand)]
    Sample(Sample),
    /// Embeddings of tournaments with two back edges and transitive blow-ups.
    #[command(subcommand)]
    Embed(Embed),
    /// Run the acceptance suite.
    Verify {
        /// `all` or a comma-separated list of criterion numbers.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum Contain {
    /// Copy of tournament H in semi-complete digraph G.
    Digraph {
        #[arg(long, alias = "g-file")]
        g: String,
        #[arg(long = "h", alias = "h-file")]
        h: String,
        /// Also count all copies (labeled maps).
        #[arg(long)]
        count: bool,
    },
    /// Occurrence of pattern M in 0/1 matrix A.
    Matrix {
        #[arg(long, alias = "a-file")]
        a: String,
        #[arg(long, alias = "m-file")]
        m: String,
    },
    /// Transitive subtournament on k vertices.
    Transitive {
        #[arg(long, alias = "g-file")]
        g: String,
        #[arg(long)]
        k: usize,
    },
    /// Sets A, B with every pair between them bidirectional.
    Biclique {
        #[arg(long, alias = "g-file")]
        g: String,
        #[arg(long = "size-a")]
        size_a: usize,
        #[arg(long = "size-b")]
        size_b: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Extremal {
    /// t(T_n, H).
    TTransitive {
        #[arg(long)]
        n: usize,
        #[arg(long = "h", alias = "h-file")]
        h: String,
    },
    /// t(n, H).
    TGeneral {
        #[arg(long)]
        n: usize,
        #[arg(long = "h", alias = "h-file")]
        h: String,
    },
    /// ex(n, M).
    Ex {
        #[arg(long)]
        n: usize,
        #[arg(long, alias = "m-file")]
        m: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    Transitive {
        #[arg(long)]
        n: usize,
    },
    Circulant {
        #[arg(long)]
        n: usize,
    },
    U5,
    Delta {
        #[arg(long)]
        k: usize,
    },
    Paley7,
    /// Every pair bidirectional.
    Complete {
        #[arg(long)]
        n: usize,
    },
    /// T_n plus the complete (r-1)-partite graph as bidirectional pairs.
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Balanced bipartite ordered graph without cycles of length <= girth.
    HighGirth {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        girth: usize,
    },
    /// Balanced bipartite ordered graph without K_{t,t}.
    KttFree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// The 3x3 and 5x5 example patterns.
    Figure1 {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
}

#[derive(Debug, Subcommand)]
pub enum Reduce {
    /// The tournament M* of a square pattern without zero lines.
    Mstar {
        #[arg(long, alias = "m-file")]
        m: String,
    },
    /// The p-fold blow-up M*_p.
    Blowup {
        #[arg(long, alias = "m-file")]
        m: String,
        #[arg(long)]
        p: usize,
    },
    /// Least even p satisfying the K_{k,k} counting inequality.
    MinimalP {
        #[arg(long)]
        k: usize,
    },
    /// T_2n with pair {i, n+j} bidirectional iff A(i,j) = 1.
    Interval {
        #[arg(long, alias = "a-file")]
        a: String,
    },
    /// Two equal intervals joined by at least m log^p m bidirectional pairs.
    DensePair {
        #[arg(long, alias = "g-file")]
        g: String,
        #[arg(long)]
        p: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum Sample {
    /// One uniform orientation of the bidirectional pairs.
    Orient {
        #[arg(long, alias = "f-file")]
        f: String,
    },
    /// Monte Carlo probability of an event under random orientation.
    Estimate {
        #[arg(long, alias = "f-file")]
        f: String,
        #[arg(long)]
        event: String,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
    },
    /// A t-gap subgraph of an ordered graph.
    Tgap {
        #[arg(long, alias = "g-file")]
        g: String,
        #[arg(long)]
        t: usize,
    },
    /// Edge expansion of an ordered graph (`--g`) or of the bidirectional
    /// graph of a semi-complete digraph (`--f`).
    Expansion {
        #[arg(long, alias = "g-file", conflicts_with = "f")]
        g: Option<String>,
        #[arg(long, alias = "f-file")]
        f: Option<String>,
    },
    /// Expander extraction on an ordered graph.
    Extract {
        #[arg(long, alias = "g-file")]
        g: String,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
    },
    /// Look for a prime sampled tournament outside a family.
    Sparse {
        #[arg(long, alias = "f-file")]
        f: String,
        #[arg(long = "h", alias = "h-file")]
        h: String,
        /// q5, circulant or transitive.
        #[arg(long, default_value = "q5")]
        family: String,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Embed {
    /// Configuration of the two back edges of an ordering.
    Config {
        #[arg(long = "h", alias = "h-file")]
        h: String,
        #[arg(long)]
        order: String,
    },
    /// Copy of H in a transitive host with bidirectional pairs.
    TwoBackEdge {
        #[arg(long = "h", alias = "h-file")]
        h: String,
        #[arg(long)]
        order: String,
        #[arg(long, alias = "g-file")]
        g: String,
        #[arg(long, default_value_t = 32)]
        retries: u32,
    },
    /// Copy of H from transitive classes of H mapped into parts of G.
    Blowup {
        #[arg(long, alias = "g-file")]
        g: String,
        #[arg(long = "h", alias = "h-file")]
        h: String,
        /// Classes of H, e.g. `1,2;3`.
        #[arg(long)]
        classes: String,
        /// Parts of G, one per class.
        #[arg(long)]
        parts: String,
    },
    /// Edge pair finders on ordered graphs.
    Find {
        /// disjoint, nested or crossing.
        kind: String,
        #[arg(long, alias = "g-file")]
        g: String,
        /// Tree size for the disjoint finder.
        #[arg(long = "h", default_value_t = 4)]
        h: usize,
    },
}

/// A failed run: message for standard error plus exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_cap() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

/// Result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn apply_caps(specs: &[String]) -> Result<Limits, Failure> {
    let mut map = match serde_json::to_value(Limits::default()) {
        Ok(Value::Object(m)) => m,
        _ => Map::new(),
    };
    for spec in specs {
        let (name, value) = spec
            .split_once('=')
            .ok_or_else(|| Failure::input(format!("cap `{spec}` is not NAME=N")))?;
        if !map.contains_key(name) {
            let known: Vec<&String> = map.keys().collect();
            return Err(Failure::input(format!(
                "unknown cap `{name}`; known: {known:?}"
            )));
        }
        let n: usize = value.parse().map_err(|_| {
            Failure::input(format!("cap value `{value}` is not a non-negative integer"))
        })?;
        map.insert(name.to_string(), Value::from(n));
    }
    serde_json::from_value(Value::Object(map)).map_err(|e| Failure::input(e.to_string()))
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(
        std::iter::once(OsString::from("tourpat")).chain(argv.iter().cloned()),
    ) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let argv: Vec<String> = argv
        .iter()
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match execute(&cli, argv) {
        Ok((stdout, code)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn execute(cli: &Cli, argv: Vec<String>) -> Result<(String, i32), Failure> {
    let g = &cli.global;
    if g.threads == Some(0) {
        return Err(Failure::input("--threads must be at least 1"));
    }
    if g.timeout.is_some_and(|t| !(t > 0.0 && t.is_finite())) {
        return Err(Failure::input(
            "--timeout must be a positive number of seconds",
        ));
    }
    let config = RunConfig {
        argv,
        format: g.format,
        seed: g.seed,
        threads: g.threads,
        timeout_secs: g.timeout,
        max_nodes: g.max_nodes,
        caps: apply_caps(&g.caps)?,
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = g.threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| Failure::input(e.to_string()))?;
    let (report, code) = pool.install(|| commands::dispatch(&cli.command, &config))?;
    if let (Some(path), Some(w)) = (&g.emit_witness, &report.witness) {
        std::fs::write(path, w)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok((report.render(&config), code))
}
