//! Command-line front end.
//!
//! Every report is a JSON envelope `{tool_version, subcommand, inputs_digest,
//! result}`. The digest is a SHA-256 over the arguments and the contents of
//! every input file, so identical inputs give byte-identical reports.
//! Exit status: 0 computed, 1 usage or input error, 2 work budget exceeded.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::automaton::{enumerate_periods, is_transitive};
use crate::duality::{verify_generalized_duality_with, DualityOptions};
use crate::error::{Error, Result};
use crate::forbidden::{is_free, Containment, ForbiddenSet, SearchMode};
use crate::format::{parse_digraph, parse_digraph_set, parse_factor_set, parse_graph};
use crate::graph::Digraph;
use crate::hom::{core_of, hom_exists_with_budget};
use crate::holes::{analyze, parse_hole_spec, DEFAULT_HOLE_KMAX};
use crate::periods::period_structure;
use crate::search::{admits_orientation_with_budget, DEFAULT_WORK_BUDGET};
use crate::spectrum::{cycle_spectrum, language_threshold};
use crate::words::{path_to_word, sync_bound, word_to_path, Word};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "orient-expr", version, about = "Forbidden orientations, factor languages and hole classes")]
struct Cli {
    /// Search node budget for orientation and homomorphism searches.
    #[arg(long, global = true, default_value_t = DEFAULT_WORK_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Worker threads for universe scans.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Translate a word to its oriented path, or a path file to its words.
    Translate { input: String },
    /// Questions about the language of words avoiding a factor set.
    Lang {
        #[command(subcommand)]
        op: LangOp,
    },
    /// Does a graph admit an F-free orientation?
    Orient {
        #[arg(short = 'g')]
        graph: PathBuf,
        #[arg(short = 'F')]
        forbidden: PathBuf,
        #[arg(long, default_value = "induced")]
        mode: Containment,
        #[arg(long)]
        acyclic: bool,
    },
    /// Cycle lengths admitting an F-free orientation.
    Spectrum {
        #[arg(short = 'F')]
        forbidden: PathBuf,
        /// Inclusive range `a..b`.
        #[arg(long)]
        range: String,
        #[arg(long)]
        acyclic: bool,
    },
    /// Find a homomorphism between two digraphs.
    Hom { from: PathBuf, to: PathBuf },
    /// The core of a digraph.
    Core { digraph: PathBuf },
    /// Bounded verification of homomorphism dualities.
    Duality {
        #[command(subcommand)]
        op: DualityOp,
    },
    /// Necessary conditions for hole-defined classes.
    Holes {
        #[command(subcommand)]
        op: HolesOp,
    },
}

#[derive(Args, Debug)]
struct LangArgs {
    #[arg(short = 'A')]
    factors: PathBuf,
    #[arg(long, default_value_t = 30)]
    kmax: usize,
    /// Only count periodic words using both letters.
    #[arg(long)]
    nonconstant: bool,
}

#[derive(Subcommand, Debug)]
enum LangOp {
    Periods(LangArgs),
    Structure(LangArgs),
    Transitive(LangArgs),
    Sync(LangArgs),
}

#[derive(Subcommand, Debug)]
enum DualityOp {
    Verify {
        #[arg(short = 'A')]
        a: PathBuf,
        #[arg(short = 'B')]
        b: PathBuf,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    VerifyGen {
        #[arg(short = 'F')]
        forbidden: PathBuf,
        #[arg(short = 'M')]
        templates: PathBuf,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum HolesOp {
    Analyze {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = DEFAULT_HOLE_KMAX)]
        kmax: usize,
    },
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Envelope<'a> {
    tool_version: &'a str,
    subcommand: &'a str,
    inputs_digest: String,
    result: Value,
}

struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        self.hasher.update((text.len() as u64).to_le_bytes());
        self.hasher.update(text.as_bytes());
        Ok(text)
    }
}

fn in_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, message } => Error::InvalidArgument(format!("{}:{line}: {message}", path.display())),
        other => Error::InvalidArgument(format!("{}: {other}", path.display())),
    })
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidArgument(format!("range {s:?} is not of the form a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let (a, b) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
    if a > b {
        return Err(Error::InvalidArgument(format!("range {s:?} is empty")));
    }
    Ok((a, b))
}

/// Runs the tool on `argv` (including the program name).
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    // `-spec` is accepted as a spelling of `--spec`
    let argv: Vec<String> = argv
        .into_iter()
        .map(Into::into)
        .map(|a| if a == "-spec" { "--spec".to_string() } else { a })
        .collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if status == 0 {
                Outcome { status, stdout: text, stderr: String::new() }
            } else {
                Outcome { status, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut inputs = Inputs { hasher: Sha256::new() };
    for a in argv.iter().skip(1) {
        inputs.hasher.update((a.len() as u64).to_le_bytes());
        inputs.hasher.update(a.as_bytes());
    }
    let format = cli.format;
    match dispatch(cli, &mut inputs) {
        Ok((subcommand, result)) => {
            let envelope = Envelope {
                tool_version: TOOL_VERSION,
                subcommand,
                inputs_digest: hex::encode(inputs.hasher.finalize()),
                result,
            };
            let stdout = match format {
                OutputFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&envelope).expect("reports serialize");
                    s.push('\n');
                    s
                }
                OutputFormat::Text => render_text(&envelope),
            };
            Outcome { status: 0, stdout, stderr: String::new() }
        }
        Err(e) => Outcome {
            status: if matches!(e, Error::WorkBudgetExceeded { .. }) { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn render_text(env: &Envelope<'_>) -> String {
    let mut out = format!("{} (orient-expr {})\n", env.subcommand, env.tool_version);
    match &env.result {
        Value::Object(map) => {
            for (k, v) in map {
                out.push_str(&format!("{k}: {v}\n"));
            }
        }
        other => out.push_str(&format!("{other}\n")),
    }
    out
}

fn dispatch(cli: Cli, inputs: &mut Inputs) -> Result<(&'static str, Value)> {
    let budget = cli.budget;
    let jobs = cli.jobs as usize;
    Ok(match cli.command {
        Command::Translate { input } => ("translate", translate(&input, inputs)?),
        Command::Lang { op } => {
            let (name, args) = match &op {
                LangOp::Periods(a) => ("lang periods", a),
                LangOp::Structure(a) => ("lang structure", a),
                LangOp::Transitive(a) => ("lang transitive", a),
                LangOp::Sync(a) => ("lang sync", a),
            };
            let text = inputs.read(&args.factors)?;
            let a = in_file(&args.factors, parse_factor_set(&text))?;
            let result = match op {
                LangOp::Periods(_) => json!({
                    "kmax": args.kmax,
                    "nonconstant": args.nonconstant,
                    "periods": enumerate_periods(&a, args.kmax, args.nonconstant),
                }),
                LangOp::Structure(_) => serde_json::to_value(period_structure(&a, args.nonconstant))
                    .expect("reports serialize"),
                LangOp::Transitive(_) => json!({ "transitive": is_transitive(&a) }),
                LangOp::Sync(_) => json!({ "sync_bound": sync_bound(&a) }),
            };
            (name, result)
        }
        Command::Orient {
            graph,
            forbidden,
            mode,
            acyclic,
        } => {
            let g = in_file(&graph, parse_graph(&inputs.read(&graph)?))?;
            let f = read_forbidden(&forbidden, inputs)?;
            let mode = SearchMode { containment: mode, acyclic };
            let verdict = admits_orientation_with_budget(&g, &f, mode, budget)?;
            let mut result = verdict.to_json(mode);
            let verified = match &verdict.witness {
                Some(w) => is_free(&w.to_oriented(), &f, mode)?,
                None => false,
            };
            result["witness_verified"] = json!(verified);
            ("orient", result)
        }
        Command::Spectrum {
            forbidden,
            range,
            acyclic,
        } => {
            let (a, b) = parse_range(&range)?;
            let f = read_forbidden(&forbidden, inputs)?;
            (
                "spectrum",
                json!({
                    "range": [a, b],
                    "acyclic": acyclic,
                    "language_from": language_threshold(&f),
                    "spectrum": cycle_spectrum(&f, a, b, acyclic)?,
                }),
            )
        }
        Command::Hom { from, to } => {
            let d1 = read_digraph(&from, inputs)?;
            let d2 = read_digraph(&to, inputs)?;
            let w = hom_exists_with_budget(&d1, &d2, budget)?;
            let verified = w.as_ref().is_some_and(|w| w.verify(&d1, &d2));
            (
                "hom",
                json!({
                    "exists": w.is_some(),
                    "mapping": w.map(|w| w.mapping),
                    "witness_verified": verified,
                }),
            )
        }
        Command::Core { digraph } => {
            let d = read_digraph(&digraph, inputs)?;
            let core = core_of(&d)?;
            ("core", json!({ "input_order": d.n(), "core": core }))
        }
        Command::Duality { op } => {
            let (name, f, m, n) = match op {
                DualityOp::Verify { a, b, n } => {
                    ("duality verify", vec![read_digraph(&a, inputs)?], vec![read_digraph(&b, inputs)?], n)
                }
                DualityOp::VerifyGen { forbidden, templates, n } => (
                    "duality verify-gen",
                    read_digraph_set(&forbidden, inputs)?,
                    read_digraph_set(&templates, inputs)?,
                    n,
                ),
            };
            let opts = DualityOptions {
                n_max: n,
                jobs,
                ..DualityOptions::default()
            };
            let report = verify_generalized_duality_with(&f, &m, opts)?;
            let verified = match &report.counterexample {
                Some(c) => Some(c.reverify(&f, &m)?),
                None => None,
            };
            let mut result = serde_json::to_value(&report).expect("reports serialize");
            result["counterexample_verified"] = json!(verified);
            (name, result)
        }
        Command::Holes {
            op: HolesOp::Analyze { spec, kmax },
        } => {
            let text = inputs.read(&spec)?;
            let parsed = in_file(&spec, parse_hole_spec(&text))?;
            let report = analyze(&parsed, kmax)?;
            ("holes analyze", serde_json::to_value(&report).expect("reports serialize"))
        }
    })
}

fn translate(input: &str, inputs: &mut Inputs) -> Result<Value> {
    if input.chars().all(|c| c == '<' || c == '>') {
        let w: Word = input.parse()?;
        let p = word_to_path(&w);
        return Ok(json!({ "word": w, "path": p }));
    }
    let path = Path::new(input);
    let d = read_digraph(path, inputs)?;
    let words = in_file(path, path_to_word(&d))?;
    Ok(json!({ "path": d, "words": words }))
}

fn read_digraph(path: &Path, inputs: &mut Inputs) -> Result<Digraph> {
    let text = inputs.read(path)?;
    in_file(path, parse_digraph(&text))
}

fn read_digraph_set(path: &Path, inputs: &mut Inputs) -> Result<Vec<Digraph>> {
    let text = inputs.read(path)?;
    in_file(path, parse_digraph_set(&text))
}

fn read_forbidden(path: &Path, inputs: &mut Inputs) -> Result<ForbiddenSet> {
    let members = read_digraph_set(path, inputs)?;
    in_file(path, ForbiddenSet::from_digraphs(members))
}
