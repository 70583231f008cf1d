mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use fuzzy_homlie::format::{self, algebra_to_doc};
use fuzzy_homlie::oracle::{
    pointwise_check, search_sum_counterexample, seeded_batch, table_from_flag, theorem_suite, Family,
    FindingKind, InstanceParams, SuiteConfig,
};
use fuzzy_homlie::{
    ClosureMode, FieldSpec, FuzzyFlag, HomLieAlgebra, Level, Morphism, DEFAULT_ENUMERATION_CAP,
};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use report::{InputRecord, RunReport};

#[derive(Debug, Parser)]
#[command(name = "fhl", version, about = "Verify Hom-Lie algebras and their fuzzy subalgebras and ideals")]
struct Cli {
    /// Largest number of vectors (or candidate maps) any enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP as u64)]
    cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Sub,
    Ideal,
}

impl From<Mode> for ClosureMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Sub => ClosureMode::Subalgebra,
            Mode::Ideal => ClosureMode::Ideal,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SearchMode {
    IdealSum,
    SubSum,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    ZeroAlpha,
    ZeroBracket,
    PaperExample,
    RejectionSampled,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::ZeroAlpha => Family::ZeroAlpha,
            FamilyArg::ZeroBracket => Family::ZeroBracket,
            FamilyArg::PaperExample => Family::PaperExample,
            FamilyArg::RejectionSampled => Family::RejectionSampled,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check skew-symmetry and the Hom-Jacobi identity.
    Validate { algebra: PathBuf },
    /// Is the subspace a Hom-Lie subalgebra?
    CheckSub { algebra: PathBuf, subspace: PathBuf },
    /// Is the subspace a Hom-Lie ideal?
    CheckIdeal { algebra: PathBuf, subspace: PathBuf },
    /// Is the flag a fuzzy Hom-Lie subalgebra or ideal?
    FuzzyCheck {
        algebra: PathBuf,
        flag: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Upper level set U(μ, t), or the strong one with --strict.
    Levels {
        flag: PathBuf,
        #[arg(long)]
        t: String,
        #[arg(long)]
        strict: bool,
    },
    /// Direct sum of algebras and, optionally, of flags on them.
    DirectSum {
        #[arg(required = true)]
        algebras: Vec<PathBuf>,
        #[arg(long, num_args = 1..)]
        flags: Vec<PathBuf>,
    },
    /// Image of a flag on the source under a morphism.
    Push { morphism: PathBuf, flag: PathBuf },
    /// Preimage of a flag on the target under a morphism.
    Pull { morphism: PathBuf, flag: PathBuf },
    /// Compare flag-based and pointwise answers over seeded instances.
    Suite {
        #[arg(long)]
        seeds: usize,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Look for a direct sum of fuzzy ideals (or subalgebras) that fails.
    Search {
        #[arg(long, value_enum)]
        mode: SearchMode,
        #[arg(long)]
        budget: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = FamilyArg::RejectionSampled)]
        family: FamilyArg,
        /// Maximum chain length of each generated flag; defaults to dim + 1.
        #[arg(long)]
        depth: Option<usize>,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Outcome {
    verdict: String,
    details: Value,
    success: bool,
}

impl Outcome {
    fn verdict(holds: bool, details: Value) -> Self {
        Outcome {
            verdict: holds.to_string(),
            details,
            success: holds,
        }
    }

    fn ok(details: Value) -> Self {
        Outcome {
            verdict: "ok".into(),
            details,
            success: true,
        }
    }
}

#[derive(Default)]
struct Inputs(Vec<InputRecord>);

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        let bytes = std::fs::read(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        self.0.push(InputRecord {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(&bytes)),
        });
        String::from_utf8(bytes).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }

    fn algebra(&mut self, path: &Path) -> Result<HomLieAlgebra, Failure> {
        let text = self.read(path)?;
        format::parse_algebra(&text).map_err(|e| located(path, e))
    }

    fn flag(&mut self, path: &Path, context: Option<&HomLieAlgebra>) -> Result<FuzzyFlag, Failure> {
        let text = self.read(path)?;
        format::parse_flag(&text, context.map(|a| (a.field(), a.dim()))).map_err(|e| located(path, e))
    }

    /// Loads a morphism file; its algebra paths are relative to the file.
    fn morphism(&mut self, path: &Path) -> Result<Morphism, Failure> {
        let text = self.read(path)?;
        let doc = format::parse_morphism_doc(&text).map_err(|e| located(path, e))?;
        let dir = path.parent().unwrap_or(Path::new(""));
        let source = self.algebra(&dir.join(&doc.source))?;
        let target = self.algebra(&dir.join(&doc.target))?;
        let f = format::morphism_from_doc(&doc, source, target).map_err(|e| located(path, e))?;
        f.certified().map_err(|e| located(path, e))
    }
}

fn located(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure(format!("{}: {e}", path.display()))
}

fn closure_status(mu: &FuzzyFlag, a: &HomLieAlgebra) -> Result<Value, Failure> {
    Ok(json!({
        "subalgebra": mu.is_fuzzy_subalgebra(a)?.holds,
        "ideal": mu.is_fuzzy_ideal(a)?.holds,
    }))
}

fn fits(field: FieldSpec, dim: usize, cap: u128) -> bool {
    field
        .order()
        .and_then(|p| (p as u128).checked_pow(dim as u32))
        .is_some_and(|n| n <= cap)
}

fn run(command: &Command, cap: u128, inputs: &mut Inputs) -> Result<Outcome, Failure> {
    match command {
        Command::Validate { algebra } => {
            let a = inputs.algebra(algebra)?;
            let r = a.check_axioms();
            Ok(Outcome::verdict(
                r.valid,
                json!({
                    "field": a.field().to_string(),
                    "dim": a.dim(),
                    "name": a.name(),
                    "failures": r.failures.iter().map(report::axiom_failure).collect::<Vec<_>>(),
                }),
            ))
        }
        Command::CheckSub { algebra, subspace } | Command::CheckIdeal { algebra, subspace } => {
            let mode = match command {
                Command::CheckSub { .. } => ClosureMode::Subalgebra,
                _ => ClosureMode::Ideal,
            };
            let a = inputs.algebra(algebra)?;
            let text = inputs.read(subspace)?;
            let s = format::parse_subspace(&text, a.field()).map_err(|e| located(subspace, e))?;
            let v = a.violation(&s, mode)?;
            Ok(Outcome::verdict(
                v.is_none(),
                json!({
                    "subspace": report::subspace(&s),
                    "violation": v.as_ref().map(report::violation),
                }),
            ))
        }
        Command::FuzzyCheck { algebra, flag, mode } => {
            let a = inputs.algebra(algebra)?;
            let mu = inputs.flag(flag, Some(&a))?;
            let mode = ClosureMode::from(*mode);
            let r = mu.check(&a, mode)?;
            let pointwise = if fits(a.field(), a.dim(), cap) {
                let p = pointwise_check(&table_from_flag(&mu, cap)?, &a, mode, cap)?;
                json!({
                    "holds": p.holds,
                    "failure": p.failure.as_ref().map(report::pointwise_failure),
                })
            } else {
                Value::Null
            };
            Ok(Outcome::verdict(
                r.holds,
                json!({
                    "mode": match mode {
                        ClosureMode::Subalgebra => "sub",
                        ClosureMode::Ideal => "ideal",
                    },
                    "flag": report::flag_report(&r),
                    "pointwise": pointwise,
                }),
            ))
        }
        Command::Levels { flag, t, strict } => {
            let mu = inputs.flag(flag, None)?;
            let level: Level = t.parse()?;
            let cut = if *strict {
                mu.strong_upper_level(&level)
            } else {
                mu.upper_level(&level)
            };
            Ok(Outcome::ok(json!({
                "t": level.to_string(),
                "strict": strict,
                "subspace": cut.map(report::subspace),
            })))
        }
        Command::DirectSum { algebras, flags } => {
            let parts = algebras
                .iter()
                .map(|p| inputs.algebra(p))
                .collect::<Result<Vec<_>, _>>()?;
            if !flags.is_empty() && flags.len() != parts.len() {
                return Err(Failure(format!(
                    "{} algebras but {} flags",
                    parts.len(),
                    flags.len()
                )));
            }
            let refs: Vec<&HomLieAlgebra> = parts.iter().collect();
            let sum = HomLieAlgebra::direct_sum(&refs)?;
            let mut details = json!({
                "algebra": serde_json::to_value(algebra_to_doc(&sum))?,
                "valid": sum.check_axioms().valid,
            });
            if !flags.is_empty() {
                let mus = flags
                    .iter()
                    .zip(&parts)
                    .map(|(p, a)| inputs.flag(p, Some(a)))
                    .collect::<Result<Vec<_>, _>>()?;
                let mu_refs: Vec<&FuzzyFlag> = mus.iter().collect();
                let flag = FuzzyFlag::direct_sum(&mu_refs)?;
                let components = mus
                    .iter()
                    .zip(&parts)
                    .map(|(m, a)| closure_status(m, a))
                    .collect::<Result<Vec<_>, _>>()?;
                details["components"] = json!(components);
                details["status"] = closure_status(&flag, &sum)?;
                details["flag"] = report::flag(&flag);
            }
            Ok(Outcome::ok(details))
        }
        Command::Push { morphism, flag } | Command::Pull { morphism, flag } => {
            let push = matches!(command, Command::Push { .. });
            let f = inputs.morphism(morphism)?;
            let (from, to) = if push {
                (f.source(), f.target())
            } else {
                (f.target(), f.source())
            };
            let mu = inputs.flag(flag, Some(from))?;
            let image = if push { mu.pushforward(&f)? } else { mu.pullback(&f)? };
            Ok(Outcome::ok(json!({
                "surjective": f.is_surjective(),
                "input_status": closure_status(&mu, from)?,
                "status": closure_status(&image, to)?,
                "flag": report::flag(&image),
            })))
        }
        Command::Suite { seeds, p, dim, seed } => {
            let batch = seeded_batch(*seeds, &[*p], *dim, *seed);
            for params in &batch {
                params.validate()?;
            }
            let config = SuiteConfig {
                cap,
                ..SuiteConfig::default()
            };
            let r = theorem_suite(&batch, &config)?;
            let agree = r.all_agree();
            Ok(Outcome {
                verdict: if agree { "agree" } else { "disagree" }.into(),
                details: json!({
                    "seeds": seeds,
                    "p": p,
                    "dim": dim,
                    "seed": seed,
                    "tallies": report::suite(&r),
                }),
                success: agree,
            })
        }
        Command::Search {
            mode,
            budget,
            seed,
            p,
            dim,
            family,
            depth,
        } => {
            let params = InstanceParams {
                p: *p,
                dim: *dim,
                flag_depth: depth.unwrap_or(dim + 1),
                seed: *seed,
                family: (*family).into(),
            };
            let closure = match mode {
                SearchMode::IdealSum => ClosureMode::Ideal,
                SearchMode::SubSum => ClosureMode::Subalgebra,
            };
            let finding = search_sum_counterexample(&params, *budget, closure, cap)?;
            let found = finding.kind == FindingKind::Counterexample;
            Ok(Outcome {
                verdict: if found { "counterexample" } else { "exhausted" }.into(),
                details: json!({
                    "mode": match mode {
                        SearchMode::IdealSum => "ideal-sum",
                        SearchMode::SubSum => "sub-sum",
                    },
                    "p": p,
                    "dim": dim,
                    "family": params.family.name(),
                    "flag_depth": params.flag_depth,
                    "seed": seed,
                    "budget": budget,
                    "finding": report::finding(&finding),
                }),
                success: !found,
            })
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::CheckSub { .. } => "check-sub",
        Command::CheckIdeal { .. } => "check-ideal",
        Command::FuzzyCheck { .. } => "fuzzy-check",
        Command::Levels { .. } => "levels",
        Command::DirectSum { .. } => "direct-sum",
        Command::Push { .. } => "push",
        Command::Pull { .. } => "pull",
        Command::Suite { .. } => "suite",
        Command::Search { .. } => "search",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut inputs = Inputs::default();
    match run(&cli.command, cli.cap as u128, &mut inputs) {
        Ok(outcome) => {
            let report = RunReport {
                command: command_name(&cli.command).into(),
                inputs: inputs.0,
                verdict: outcome.verdict,
                details: outcome.details,
                timing_ms: start.elapsed().as_millis() as u64,
            };
            let text = serde_json::to_string_pretty(&report).expect("reports serialize");
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}").and_then(|_| out.flush()) {
                Ok(()) => {}
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                Err(e) => {
                    eprintln!("error: writing report: {e}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(if outcome.success { 0 } else { 1 })
        }
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
