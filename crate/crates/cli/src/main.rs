//! `descent-verify`: batch verification of descent-algebra, Lie-module and
//! character claims, reported as deterministic JSON.

mod cache;
mod case;
mod error;
mod field;
mod report;
mod suites;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use descent_lie::scalar::is_prime_u32;
use descent_lie::{FieldKind, MAX_DEGREE};
use rayon::prelude::*;

use crate::case::Case;
use crate::error::CliError;
use crate::report::{ConfigEcho, Report};
use crate::suites::{FieldKindKey, Job, Settings};

#[derive(Parser)]
#[command(name = "descent-verify", version, about = "Verify descent-algebra and modular Lie-module claims")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and emit a JSON report.
    Run(RunArgs),
    /// Build, validate or clear the on-disk idempotent cache.
    Cache(CacheArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Descent,
    Idempotents,
    Sequence,
    Characters,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Descent => "descent",
            Suite::Idempotents => "idempotents",
            Suite::Sequence => "sequence",
            Suite::Characters => "characters",
        }
    }
}

/// `auto`, `Q`, `Z` or a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct FieldChoice(Option<FieldKind>);

impl FromStr for FieldChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("auto") {
            Ok(FieldChoice(None))
        } else {
            s.parse().map(|k| FieldChoice(Some(k)))
        }
    }
}

impl std::fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.0 {
            None => f.write_str("auto"),
            Some(kind) => write!(f, "{kind}"),
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// A case: n=N, n=N,p=P, k=K,p=P or p=P; repeatable.
    #[arg(long = "case", value_name = "CASE")]
    cases: Vec<Case>,
    /// Coefficient field: auto, Q, Z or a prime.
    #[arg(long, default_value = "auto")]
    field: FieldChoice,
    /// Largest degree n accepted.
    #[arg(long, default_value_t = MAX_DEGREE)]
    max_n: usize,
    /// Directory of cached idempotent systems.
    #[arg(long, env = "DESCENT_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[command(flatten)]
    common: CommonArgs,
    /// Write the report here and print only the summary to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; 0 uses one per core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Record per-claim elapsed milliseconds (makes reports nondeterministic).
    #[arg(long)]
    timings: bool,
    /// Print every claim, not only failures.
    #[arg(short, long)]
    verbose: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CacheAction {
    Build,
    Validate,
    Clear,
}

#[derive(Args)]
struct CacheArgs {
    #[arg(value_enum)]
    action: CacheAction,
    #[command(flatten)]
    common: CommonArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run(args),
        Command::Cache(args) => cache_command(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("descent-verify: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn check_max_n(max_n: usize) -> Result<(), CliError> {
    if max_n > MAX_DEGREE {
        return Err(CliError::Capacity { n: max_n, max: MAX_DEGREE });
    }
    Ok(())
}

fn check_degree(n: usize, max_n: usize) -> Result<(), CliError> {
    if n > max_n {
        return Err(CliError::Capacity { n, max: max_n });
    }
    Ok(())
}

fn check_prime(p: u64) -> Result<(), CliError> {
    if p > u32::MAX as u64 || !is_prime_u32(p as u32) {
        return Err(CliError::Usage(format!("p = {p} is not a prime")));
    }
    field::check_supported(p)
}

fn check_kind(kind: FieldKind) -> Result<(), CliError> {
    match kind {
        FieldKind::Prime(p) => field::check_supported(p as u64),
        _ => Ok(()),
    }
}

/// The ring for a case with an optional `p`, given `--field`.
fn resolve_field(case: &Case, choice: FieldChoice) -> Result<FieldKind, CliError> {
    let kind = match (case.p, choice.0) {
        (Some(p), None) => {
            check_prime(p)?;
            FieldKind::Prime(p as u32)
        }
        (None, None) => FieldKind::Integers,
        (None, Some(kind)) => kind,
        (Some(p), Some(FieldKind::Prime(q))) if p == q as u64 => FieldKind::Prime(q),
        (Some(p), Some(kind)) => {
            return Err(CliError::Usage(format!("case {case} asks for p = {p} but --field is {kind}")));
        }
    };
    check_kind(kind)?;
    Ok(kind)
}

fn descent_job(case: &Case, choice: FieldChoice, max_n: usize) -> Result<Job, CliError> {
    let n = case.n.ok_or_else(|| CliError::Usage(format!("descent needs n=N, got {case}")))?;
    check_degree(n, max_n)?;
    Ok(Job::Descent { n, field: resolve_field(case, choice)?.into() })
}

fn idempotent_job(case: &Case, choice: FieldChoice, max_n: usize) -> Result<Job, CliError> {
    let n = case.n.ok_or_else(|| CliError::Usage(format!("idempotents needs n=N, got {case}")))?;
    check_degree(n, max_n)?;
    let kind = resolve_field(case, choice)?;
    if kind == FieldKind::Integers {
        return Err(CliError::Usage(format!("idempotents need a field: give {case},p=P or --field")));
    }
    Ok(Job::Idempotents { n, field: kind.into() })
}

fn sequence_job(case: &Case, choice: FieldChoice, max_n: usize) -> Result<Job, CliError> {
    let (Some(k), Some(p)) = (case.k, case.p) else {
        return Err(CliError::Usage(format!("sequence needs k=K,p=P, got {case}")));
    };
    check_prime(p)?;
    if !matches!(choice.0, None | Some(FieldKind::Prime(_))) || resolve_field(case, choice).is_err() {
        return Err(CliError::Usage(format!("case {case} runs over F_{p}, not --field {choice}")));
    }
    if k as u64 % p == 0 {
        return Err(CliError::Usage(format!("sequence needs p not dividing k, got {case}")));
    }
    check_degree(k * p as usize, max_n)?;
    Ok(Job::Sequence { k, p })
}

fn characters_job(case: &Case, choice: FieldChoice, max_n: usize) -> Result<Job, CliError> {
    let (None, None, Some(p)) = (case.n, case.k, case.p) else {
        return Err(CliError::Usage(format!("characters needs p=P, got {case}")));
    };
    if !matches!(choice.0, None | Some(FieldKind::Rationals)) {
        return Err(CliError::Usage(format!("character computations run over Q, not --field {choice}")));
    }
    if p == 2 || !is_prime_u32(p as u32) {
        return Err(CliError::Usage(format!("characters needs an odd prime, got p = {p}")));
    }
    check_degree(2 * p as usize, max_n)?;
    Ok(Job::Characters { p })
}

const SEQUENCE_DEFAULTS: [(usize, u64); 5] = [(1, 2), (1, 3), (3, 2), (1, 5), (2, 3)];

fn default_jobs(suite: Suite, choice: FieldChoice, max_n: usize) -> Result<Vec<Job>, CliError> {
    let fits = |n: usize| n <= max_n;
    Ok(match suite {
        Suite::All => unreachable!("expanded by the caller"),
        Suite::Descent => {
            let kind = choice.0.unwrap_or(FieldKind::Integers);
            check_kind(kind)?;
            (1..=6).filter(|&n| fits(n)).map(|n| Job::Descent { n, field: kind.into() }).collect()
        }
        Suite::Idempotents => {
            let kinds = match choice.0 {
                None => vec![FieldKind::Prime(2), FieldKind::Prime(3), FieldKind::Prime(5)],
                Some(FieldKind::Integers) => return Err(CliError::Usage("idempotents need a field, not Z".into())),
                Some(kind) => {
                    check_kind(kind)?;
                    vec![kind]
                }
            };
            let mut jobs = Vec::new();
            for n in (2..=6).filter(|&n| fits(n)) {
                jobs.extend(kinds.iter().map(|&kind| Job::Idempotents { n, field: kind.into() }));
            }
            jobs
        }
        Suite::Sequence => SEQUENCE_DEFAULTS
            .iter()
            .filter(|&&(k, p)| fits(k * p as usize))
            .filter(|&&(_, p)| matches!(choice.0, None) || choice.0 == Some(FieldKind::Prime(p as u32)))
            .map(|&(k, p)| Job::Sequence { k, p })
            .collect(),
        Suite::Characters => {
            if fits(6) {
                vec![characters_job(&Case::p(3), choice, max_n)?]
            } else {
                Vec::new()
            }
        }
    })
}

/// Which suites a case belongs to under `all`, from its shape.
fn route(case: &Case, choice: FieldChoice, max_n: usize) -> Result<Job, CliError> {
    match (case.n, case.k) {
        (Some(_), _) if case.p.is_none() && choice.0.is_none_or(|k| k == FieldKind::Integers) => {
            descent_job(case, choice, max_n)
        }
        (Some(_), _) => idempotent_job(case, choice, max_n),
        (None, Some(_)) => sequence_job(case, choice, max_n),
        (None, None) => characters_job(case, choice, max_n),
    }
}

fn plan(suite: Suite, common: &CommonArgs) -> Result<Vec<Job>, CliError> {
    check_max_n(common.max_n)?;
    let (choice, max_n) = (common.field, common.max_n);
    let mut jobs = Vec::new();
    if common.cases.is_empty() {
        let suites = match suite {
            Suite::All => vec![Suite::Descent, Suite::Idempotents, Suite::Sequence, Suite::Characters],
            s => vec![s],
        };
        for s in suites {
            if suite == Suite::All && s == Suite::Characters && !matches!(choice.0, None | Some(FieldKind::Rationals)) {
                continue;
            }
            if suite == Suite::All && s == Suite::Idempotents && choice.0 == Some(FieldKind::Integers) {
                continue;
            }
            if suite == Suite::All && s == Suite::Sequence && !matches!(choice.0, None | Some(FieldKind::Prime(_))) {
                continue;
            }
            jobs.extend(default_jobs(s, choice, max_n)?);
        }
    } else {
        for case in &common.cases {
            jobs.push(match suite {
                Suite::All => route(case, choice, max_n)?,
                Suite::Descent => descent_job(case, choice, max_n)?,
                Suite::Idempotents => idempotent_job(case, choice, max_n)?,
                Suite::Sequence => sequence_job(case, choice, max_n)?,
                Suite::Characters => characters_job(case, choice, max_n)?,
            });
        }
    }
    jobs.sort();
    jobs.dedup();
    Ok(jobs)
}

fn run(args: RunArgs) -> Result<u8, CliError> {
    let jobs = plan(args.suite, &args.common)?;
    let settings = Settings { cache_dir: args.common.cache_dir.clone(), timings: args.timings };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(args.workers).build()?;
    let claims: Vec<_> = pool.install(|| jobs.par_iter().flat_map_iter(|job| job.run(&settings)).collect());
    let config = ConfigEcho {
        suite: args.suite.name().into(),
        cases: args.common.cases.iter().map(Case::to_string).collect(),
        jobs: jobs.iter().map(Job::prefix).collect(),
        field: args.common.field.to_string(),
        max_n: args.common.max_n,
        cache_dir: args.common.cache_dir.as_ref().map(|d| d.display().to_string()),
        timings: args.timings,
    };
    let report = Report::new(config, claims);
    let json = report.to_json()?;

    let mut lines = Vec::new();
    for claim in &report.claims {
        if args.verbose || !claim.pass {
            let status = if claim.pass { "PASS" } else { "FAIL" };
            lines.push(format!("{status} {}  computed={} expected={}", claim.id, claim.computed, claim.expected));
        }
    }
    let s = &report.summary;
    lines.push(format!("{} of {} claims pass ({} failed)", s.passed, s.claims, s.failed));
    let summary = lines.join("\n");

    match &args.out {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent).map_err(|e| CliError::io(parent, e))?;
            }
            fs::write(path, &json).map_err(|e| CliError::io(path, e))?;
            println!("{summary}");
        }
        None => {
            print!("{json}");
            eprintln!("{summary}");
        }
    }
    Ok(if s.pass { 0 } else { 1 })
}

fn cache_dir(common: &CommonArgs) -> Result<&Path, CliError> {
    common
        .cache_dir
        .as_deref()
        .ok_or_else(|| CliError::Usage("no cache directory: pass --cache-dir or set DESCENT_CACHE_DIR".into()))
}

fn existing_dir(common: &CommonArgs) -> Result<&Path, CliError> {
    let dir = cache_dir(common)?;
    if !dir.is_dir() {
        return Err(CliError::Usage(format!("cache directory {} does not exist", dir.display())));
    }
    Ok(dir)
}

/// The cache files named by the cases, or every entry when there are none.
fn targets(common: &CommonArgs, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    if common.cases.is_empty() {
        return cache::entries(dir);
    }
    common
        .cases
        .iter()
        .map(|case| match idempotent_job(case, common.field, common.max_n)? {
            Job::Idempotents { n, field } => Ok(dir.join(cache::file_name(n, field.into()))),
            _ => unreachable!(),
        })
        .collect()
}

fn cache_command(args: CacheArgs) -> Result<u8, CliError> {
    let common = &args.common;
    check_max_n(common.max_n)?;
    match args.action {
        CacheAction::Build => {
            let dir = cache_dir(common)?;
            let jobs = if common.cases.is_empty() {
                default_jobs(Suite::Idempotents, common.field, common.max_n)?
            } else {
                common.cases.iter().map(|c| idempotent_job(c, common.field, common.max_n)).collect::<Result<_, _>>()?
            };
            for job in jobs {
                if let Job::Idempotents { n, field } = job {
                    let path = cache::build(dir, n, FieldKindKey::into(field))?;
                    println!("built {}", path.display());
                }
            }
            Ok(0)
        }
        CacheAction::Validate => {
            let dir = existing_dir(common)?;
            let mut failed = 0;
            for path in targets(common, dir)? {
                let name = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into());
                let outcome =
                    if path.exists() { cache::validate(&path) } else { Err(CliError::Usage("missing".into())) };
                match outcome {
                    Ok(()) => println!("ok {name}"),
                    Err(e) => {
                        failed += 1;
                        println!("FAIL {name}: {e}");
                    }
                }
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
        CacheAction::Clear => {
            let dir = existing_dir(common)?;
            for path in targets(common, dir)? {
                if cache::remove(&path)? {
                    println!("removed {}", path.display());
                }
            }
            Ok(0)
        }
    }
}
