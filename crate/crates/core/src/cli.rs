//! Command-line front end. [`run`] takes the argument vector and returns the
//! exit code and captured output, so the binary and fixture replay share one
//! code path.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::config::{parse_kappa, AlgebraConfig, FieldKind, QuantumChar};
use crate::error::{Error, Result};
use crate::io::{hom_json, hom_text, model_json, reports_jsonl, ModuleInfo};
use crate::partition::Multipartition;
use crate::verify::lemmas;
use crate::verify::{summarise, summary_table, SweepSpec, Theorem, VerificationReport, Verdict, Verifier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "klr-specht", version, about = "Graded Specht modules, their homomorphisms and removal theorems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct AlgebraArgs {
    /// Quantum characteristic: an integer at least 2, or `inf`.
    #[arg(long, default_value = "3")]
    pub e: QuantumChar,
    /// Multicharge, e.g. `0,1`. Defaults to zeros of the required level.
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<String>,
    /// `Q` or `F<p>`.
    #[arg(long, default_value = "Q")]
    pub field: FieldKind,
}

impl AlgebraArgs {
    fn config(&self, level: Option<usize>) -> Result<AlgebraConfig> {
        let kappa = match &self.kappa {
            Some(k) => parse_kappa(k)?,
            None => vec![0; level.unwrap_or(1).max(1)],
        };
        if let Some(l) = level {
            if l != kappa.len() {
                return Err(Error::InvalidInput(format!("level {l} does not match kappa of length {}", kappa.len())));
            }
        }
        AlgebraConfig::with_field(self.e, &kappa, self.field)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Standard basis, graded dimension and defect of a column Specht module.
    SpechtInfo {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        json: bool,
        /// Build the module and include its generator matrices (JSON).
        #[arg(long)]
        dump: bool,
        /// List the basis only up to this many tableaux.
        #[arg(long, default_value_t = 200)]
        max_basis: usize,
    },
    /// Homomorphisms between two column Specht modules.
    Hom {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        /// Only dominated homomorphisms.
        #[arg(long)]
        dominated: bool,
        #[arg(long)]
        json: bool,
    },
    /// Checks a theorem on one instance or over a sweep.
    Verify {
        /// One of validate, degdef, brudom, cr, rr, fcr, gcr, grr, homconj,
        /// domhom, witnesses, exprow, lemmas, convention.
        theorem: String,
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Sweep level; defaults to the length of kappa.
        #[arg(long)]
        l: Option<usize>,
        /// Sweep size bound.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Random words per module for the lemma suite.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// The worked row-removal example (exprow only).
        #[arg(long)]
        paper_example: bool,
        /// One JSON report per line instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Re-runs the invocations in a JSONL fixture file and compares output.
    Replay { file: PathBuf },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn from_error(e: &Error) -> Self {
        let code = match e {
            Error::Inconsistency(_) => EXIT_INCONSISTENT,
            _ => EXIT_USAGE,
        };
        Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// Parses and executes an argument vector (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(cli.command).unwrap_or_else(|e| Outcome::from_error(&e))
}

fn parse_mp(s: &str) -> Result<Multipartition> {
    s.parse()
}

fn execute(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::SpechtInfo { alg, lambda, json, dump, max_basis } => {
            let lambda = parse_mp(&lambda)?;
            let cfg = alg.config(Some(lambda.level()))?;
            let info = ModuleInfo::new(&lambda, &cfg, max_basis)?;
            let out = if json || dump {
                let mut v = serde_json::to_value(&info).expect("info serialises");
                if dump {
                    let model = Verifier::new().cache.column(&lambda, &cfg)?;
                    v["model"] = model_json(&model);
                }
                v.to_string() + "\n"
            } else {
                info.to_text()
            };
            Ok(Outcome::ok(out))
        }
        Command::Hom { alg, lambda, mu, dominated, json } => {
            let (lambda, mu) = (parse_mp(&lambda)?, parse_mp(&mu)?);
            let cfg = alg.config(Some(lambda.level()))?;
            let h = Verifier::new().hom(&lambda, &mu, &cfg, dominated)?;
            Ok(Outcome::ok(if json { hom_json(&h).to_string() + "\n" } else { hom_text(&h) }))
        }
        Command::Verify { theorem, alg, lambda, mu, m, c, r, l, n, samples, seed, paper_example, json } => {
            let theorem: Theorem = theorem.parse()?;
            let lambda = lambda.as_deref().map(parse_mp).transpose()?;
            let mu = mu.as_deref().map(parse_mp).transpose()?;
            let level = l.or(lambda.as_ref().map(|x| x.level()));
            let cfg = alg.config(level)?;
            let verifier = Verifier::new();
            let reports = if paper_example {
                if theorem != Theorem::Exprow {
                    return Err(Error::InvalidInput("--paper-example is only available for exprow".into()));
                }
                vec![verifier.verify_exprow_worked_example()]
            } else if let Some(lambda) = lambda {
                verify_instance(&verifier, theorem, &lambda, mu.as_ref(), (c, r, m), &cfg, samples, seed)?
            } else {
                let mut spec = SweepSpec::new(cfg, n);
                spec.samples = samples;
                spec.seed = seed;
                verifier.sweep(theorem, &spec)
            };
            Ok(render_reports(&reports, json))
        }
        Command::Replay { file } => replay(&file),
    }
}

#[allow(clippy::too_many_arguments)]
fn verify_instance(
    v: &Verifier,
    theorem: Theorem,
    lambda: &Multipartition,
    mu: Option<&Multipartition>,
    (c, r, m): (Option<usize>, Option<usize>, Option<usize>),
    cfg: &AlgebraConfig,
    samples: usize,
    seed: u64,
) -> Result<Vec<VerificationReport>> {
    let need_mu = || mu.ok_or_else(|| Error::InvalidInput(format!("{theorem} needs --mu")));
    let need = |x: Option<usize>, name: &str| x.ok_or_else(|| Error::InvalidInput(format!("{theorem} needs --{name}")));
    let ms: Vec<usize> = match m {
        Some(m) => vec![m],
        None => (1..=cfg.level()).collect(),
    };
    Ok(match theorem {
        Theorem::Validate => vec![lemmas::check_validate(v, lambda, cfg)],
        Theorem::Degdef => vec![lemmas::check_degdef(lambda, cfg)],
        Theorem::Brudom => {
            let mut out = vec![lemmas::check_brudom(lambda, cfg)];
            if let Some(mu) = mu {
                out.push(lemmas::check_domalt(lambda, mu, cfg));
            }
            out
        }
        Theorem::Lemmas => vec![lemmas::check_lemmas(v, lambda, cfg, samples, seed)],
        Theorem::Convention => vec![lemmas::check_convention(v, lambda, need_mu()?, cfg)],
        Theorem::Cr => {
            let mu = need_mu()?;
            ms.iter().map(|&m| v.verify_cr(lambda, mu, m, cfg)).collect()
        }
        Theorem::Rr => {
            let mu = need_mu()?;
            ms.iter().map(|&m| v.verify_rr(lambda, mu, m, cfg)).collect()
        }
        Theorem::Fcr => {
            let mu = need_mu()?;
            ms.iter().map(|&m| v.verify_fcr(lambda, mu, m, cfg)).collect()
        }
        Theorem::Gcr => vec![v.verify_gcr(lambda, need_mu()?, need(c, "c")?, need(m, "m")?, cfg)],
        Theorem::Grr => vec![v.verify_grr(lambda, need_mu()?, need(r, "r")?, need(m, "m")?, cfg)],
        Theorem::Exprow => vec![v.verify_exprow(lambda, need_mu()?, need(r, "r")?, need(m, "m")?, cfg, false)],
        Theorem::Homconj => vec![v.verify_duality(lambda, need_mu()?, cfg)],
        Theorem::Domhom => vec![v.verify_domhom_pair(lambda, need_mu()?, cfg)],
        Theorem::Witnesses => vec![v.verify_witness(lambda, cfg)],
    })
}

fn render_reports(reports: &[VerificationReport], json: bool) -> Outcome {
    let summary = summary_table(&summarise(reports));
    let (stdout, stderr) = if json {
        (reports_jsonl(reports), summary)
    } else {
        let mut out = String::new();
        for rep in reports.iter().filter(|r| reports.len() <= 20 || r.verdict != Verdict::Pass) {
            out.push_str(&format!("{rep}\n"));
        }
        out.push_str(&summary);
        (out, String::new())
    };
    let code = if reports.iter().any(|r| r.hard && r.verdict == Verdict::Error) {
        EXIT_INCONSISTENT
    } else if reports.iter().any(|r| r.is_failure()) {
        EXIT_VERIFY_FAILED
    } else {
        EXIT_OK
    };
    Outcome { code, stdout, stderr }
}

/// One line of a fixture file: an invocation (without the program name)
/// and its expected exit code and output. `stdout` is compared exactly;
/// `contains` lists required substrings.
#[derive(Clone, Debug, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub args: Vec<String>,
    #[serde(default)]
    pub exit: i32,
    #[serde(default)]
    pub stdout: Option<String>,
    #[serde(default)]
    pub contains: Vec<String>,
}

impl Fixture {
    /// Runs the invocation; `None` on a match, otherwise the mismatch.
    pub fn check(&self) -> Option<String> {
        let out = run(std::iter::once("klr-specht".to_string()).chain(self.args.iter().cloned()));
        if out.code != self.exit {
            return Some(format!("exit code {} (expected {}): {}", out.code, self.exit, out.stderr.trim()));
        }
        if let Some(s) = &self.stdout {
            if &out.stdout != s {
                return Some(format!("stdout differs:\n{}", out.stdout));
            }
        }
        self.contains
            .iter()
            .find(|s| !out.stdout.contains(s.as_str()))
            .map(|s| format!("missing {s:?} in:\n{}", out.stdout))
    }
}

pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::Parse(format!("fixture line: {e}"))))
        .collect()
}

fn replay(file: &PathBuf) -> Result<Outcome> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::InvalidInput(format!("{}: {e}", file.display())))?;
    let fixtures = parse_fixtures(&text)?;
    let mut out = String::new();
    let mut failed = 0;
    for f in &fixtures {
        match f.check() {
            None => out.push_str(&format!("ok   {}\n", f.name)),
            Some(why) => {
                failed += 1;
                out.push_str(&format!("FAIL {}: {why}\n", f.name));
            }
        }
    }
    out.push_str(&format!("{} fixtures, {} failed\n", fixtures.len(), failed));
    Ok(Outcome { code: if failed > 0 { EXIT_VERIFY_FAILED } else { EXIT_OK }, stdout: out, stderr: String::new() })
}
