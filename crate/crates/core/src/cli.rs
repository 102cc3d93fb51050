//! Command-line front end: enumeration, bijections, series, identity
//! verification and a replay of the worked examples.
//!
//! Exit codes: `0` success, `1` a verification or self-check failure, `2`
//! an invalid invocation or input, `3` a resource guard or overflow trip.
//! Every failure writes a single JSON line to the error sink.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::affine_params::{make_config, AlgebraConfig, Family, Weight};
use crate::bijections::{
    algo_a, algo_a_inverse, algo_b_inverse, algo_b_with_steps, algo_c_inverse, algo_c_with_steps,
    algo_d, algo_d_prime, algo_e, algo_f, d2_chain_inverse, theta, theta_inv, DEFAULT_F_LIMIT,
};
use crate::colored_parts::ColoredPart;
use crate::error::Error;
use crate::partition_sets::{max_space_from_env, ClassicalKind, ResidueSet, SetSpec};
use crate::partitions::{
    format_ordinary, format_parts, parse_parts, transpose, TwoColoredPartition,
};
use crate::selfcheck::{run_examples, Status};
use crate::series::{
    ao2_split_identity, euler_identity, fock_identity, product_series, verify_counts,
    verify_restricted, IdentityReport,
};

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code for a failed verification or self-check.
pub const EXIT_VERIFY: i32 = 1;
/// Exit code for an invalid invocation or input.
pub const EXIT_INVALID: i32 = 2;
/// Exit code for a resource guard or overflow trip.
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "yw",
    version,
    about = "Andrews-Olsson type identities and insertion bijections on two-colored partitions"
)]
struct Cli {
    /// Maximum number of worker threads (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the members of a partition set of a given size.
    Enumerate(EnumerateArgs),
    /// Run a bijection or reduction on one partition.
    Bijection(BijectionArgs),
    /// Coefficients of the product formula.
    Series(SeriesArgs),
    /// Check a counting identity size by size.
    Verify(VerifyArgs),
    /// Replay every worked example.
    Selfcheck(SelfcheckArgs),
}

#[derive(Args, Debug, Clone)]
struct ConfigArgs {
    /// Affine type: A2even, A2odd, B1, D1 or D2.
    #[arg(long)]
    family: Option<String>,
    /// Rank (the subscript n+1 for D2).
    #[arg(long)]
    rank: Option<u32>,
    /// Level-1 weight: L0, L1, Ln-1 or Ln.
    #[arg(long)]
    weight: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SetKind {
    Z,
    Ao1,
    Ao2,
    Ao1Restricted,
    Ao2Restricted,
    ClassicalAo1,
    ClassicalAo2,
    ClassicalAo3,
    ClassicalAo4,
    ClassicalAo5,
    Strict,
    StrictAvoiding,
    Odd,
    Partitions,
    Overpartitions,
    Pt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    /// Which set to enumerate.
    #[arg(long = "set", value_enum)]
    set: SetKind,
    #[command(flatten)]
    config: ConfigArgs,
    /// Residue set, e.g. `1,3`.
    #[arg(long)]
    x: Option<String>,
    /// Modulus `N` of the classical sets, or of `strict-avoiding`.
    #[arg(long)]
    modulus: Option<u32>,
    /// Size of the partitions.
    #[arg(long)]
    size: u32,
    /// Print only the number of members.
    #[arg(long)]
    count_only: bool,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Backward,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Theta,
    A,
    B,
    C,
    D,
    E,
}

#[derive(Args, Debug)]
struct BijectionArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// Which map to run.
    #[arg(long, value_enum, default_value = "theta")]
    algorithm: Algorithm,
    /// Forward map or its inverse.
    #[arg(long, value_enum, default_value = "forward")]
    direction: Direction,
    /// Input partition, e.g. `33,31,28~,28~,21`.
    #[arg(long)]
    input: String,
    /// Extracted partition for the backward reductions, e.g. `2,2,1,1`.
    #[arg(long)]
    lambda: Option<String>,
    /// Emit every intermediate as a JSON line before the result.
    #[arg(long)]
    trace: bool,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// Largest degree.
    #[arg(long, default_value_t = 20)]
    max_degree: u32,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Identity {
    Ao,
    Fock,
    Euler,
    Restricted,
    Ao2Split,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Which identity to check.
    #[arg(long, value_enum)]
    identity: Identity,
    #[command(flatten)]
    config: ConfigArgs,
    /// Largest size checked (default 15, or 40 for `euler`).
    #[arg(long)]
    max_size: Option<u32>,
    /// Residue set for `restricted` (default: every residue).
    #[arg(long)]
    x: Option<String>,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct SelfcheckArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Guard(String),
    Verify(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Invalid(_) => EXIT_INVALID,
            Failure::Guard(_) => EXIT_GUARD,
            Failure::Verify(_) => EXIT_VERIFY,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Invalid(_) => "invalid-spec",
            Failure::Guard(_) => "resource-guard",
            Failure::Verify(_) => "verification-failed",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::Guard(m) | Failure::Verify(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceGuard(_) | Error::Overflow(_) => Failure::Guard(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Guard(format!("output error: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Invalid(msg.into())
}

fn flag<T>(value: Option<T>, name: &str) -> std::result::Result<T, Failure> {
    value.ok_or_else(|| invalid(format!("missing required flag --{name}")))
}

fn with_flag<T>(r: crate::Result<T>, name: &str) -> std::result::Result<T, Failure> {
    r.map_err(|e| match e {
        Error::ResourceGuard(_) | Error::Overflow(_) => Failure::from(e),
        other => invalid(format!("--{name}: {other}")),
    })
}

impl ConfigArgs {
    fn resolve(&self, err: &mut dyn Write) -> std::result::Result<AlgebraConfig, Failure> {
        let family: Family = with_flag(flag(self.family.as_deref(), "family")?.parse(), "family")?;
        let rank = flag(self.rank, "rank")?;
        let weight: Weight = with_flag(flag(self.weight.as_deref(), "weight")?.parse(), "weight")?;
        let cfg = with_flag(make_config(family, rank, weight), "rank")?;
        if let Some(w) = &cfg.warning {
            writeln!(err, "{}", json!({ "warning": w }))?;
        }
        Ok(cfg)
    }

    fn is_empty(&self) -> bool {
        self.family.is_none() && self.rank.is_none() && self.weight.is_none()
    }
}

fn parse_list(text: &str, name: &str) -> std::result::Result<Vec<u32>, Failure> {
    let cleaned: String = text
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')' && *c != '{' && *c != '}')
        .collect();
    if cleaned.is_empty() {
        return Ok(Vec::new());
    }
    cleaned
        .split(',')
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| invalid(format!("--{name}: '{t}' is not a nonnegative integer")))
        })
        .collect()
}

fn parse_partition(text: &str, name: &str) -> std::result::Result<TwoColoredPartition, Failure> {
    with_flag(text.parse(), name)
}

fn parse_ordinary(text: &str, name: &str) -> std::result::Result<Vec<u32>, Failure> {
    let parts = parse_list(text, name)?;
    if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(invalid(format!(
            "--{name}: parts must be positive and weakly decreasing"
        )));
    }
    Ok(parts)
}

fn residues(x: &Option<String>, modulus: u32) -> std::result::Result<ResidueSet, Failure> {
    match x {
        Some(text) => with_flag(ResidueSet::new(parse_list(text, "x")?, modulus), "x"),
        None if modulus > 1 => Ok(ResidueSet::full(modulus)),
        None => Err(invalid("missing required flag --x")),
    }
}

fn max_space() -> std::result::Result<u64, Failure> {
    max_space_from_env().map_err(|e| invalid(e.to_string()))
}

fn set_spec(a: &EnumerateArgs, err: &mut dyn Write) -> std::result::Result<SetSpec, Failure> {
    let classical = |kind: ClassicalKind| -> std::result::Result<SetSpec, Failure> {
        let n = flag(a.modulus, "modulus")?;
        if n == 0 {
            return Err(invalid("--modulus: must be positive"));
        }
        let xs = residues(&a.x, kind.residue_modulus(n))?;
        Ok(SetSpec::Classical(kind, n, xs))
    };
    let spec = match a.set {
        SetKind::Z => SetSpec::Z(a.config.resolve(err)?),
        SetKind::Ao1 => SetSpec::AO1(a.config.resolve(err)?),
        SetKind::Ao2 => SetSpec::AO2(a.config.resolve(err)?),
        SetKind::Ao1Restricted | SetKind::Ao2Restricted => {
            let cfg = a.config.resolve(err)?;
            let xs = with_flag(
                ResidueSet::new(parse_list(&flag(a.x.clone(), "x")?, "x")?, cfg.z3),
                "x",
            )?;
            if a.set == SetKind::Ao1Restricted {
                SetSpec::AO1Restricted(cfg, xs)
            } else {
                SetSpec::AO2Restricted(cfg, xs)
            }
        }
        SetKind::ClassicalAo1 => classical(ClassicalKind::AO1)?,
        SetKind::ClassicalAo2 => classical(ClassicalKind::AO2)?,
        SetKind::ClassicalAo3 => classical(ClassicalKind::AO3)?,
        SetKind::ClassicalAo4 => classical(ClassicalKind::AO4)?,
        SetKind::ClassicalAo5 => classical(ClassicalKind::AO5)?,
        SetKind::Strict => SetSpec::Strict,
        SetKind::StrictAvoiding => {
            let u = flag(a.modulus, "modulus")?;
            if u == 0 {
                return Err(invalid("--modulus: must be positive"));
            }
            SetSpec::StrictAvoiding(u)
        }
        SetKind::Odd => SetSpec::Odd,
        SetKind::Partitions => SetSpec::Partitions,
        SetKind::Overpartitions => SetSpec::Overpartitions,
        SetKind::Pt => SetSpec::Pt,
    };
    Ok(spec)
}

fn text_partition(p: &[ColoredPart]) -> String {
    if p.is_empty() {
        "()".into()
    } else {
        format_parts(p)
    }
}

fn enumerate_cmd(a: &EnumerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let spec = set_spec(a, err)?;
    let members = spec.enumerate(a.size, max_space()?)?;
    if a.count_only {
        match a.format {
            Format::Tsv => writeln!(
                out,
                "set\tsize\tcount\n{}\t{}\t{}",
                spec.name(),
                a.size,
                members.len()
            )?,
            _ => writeln!(out, "{}", members.len())?,
        }
        return Ok(());
    }
    match a.format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&members).expect("serializable")
        )?,
        Format::Tsv => {
            writeln!(out, "size\tparts")?;
            for p in &members {
                writeln!(out, "{}\t{}", a.size, text_partition(p.parts()))?;
            }
        }
        Format::Text => {
            for p in &members {
                writeln!(out, "{}", text_partition(p.parts()))?;
            }
        }
    }
    Ok(())
}

fn emit<T: Serialize>(out: &mut dyn Write, on: bool, step: &str, value: T) -> Outcome {
    if on {
        writeln!(out, "{}", json!({ "step": step, "value": value }))?;
    }
    Ok(())
}

fn pair_line(reduced: &[ColoredPart], lambda: &[u32]) -> String {
    format!("{} {}", text_partition(reduced), format_ordinary(lambda))
}

fn bijection_cmd(a: &BijectionArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let cfg = a.config.resolve(err)?;
    let tr = a.trace;
    let lambda = || -> std::result::Result<Vec<u32>, Failure> {
        parse_ordinary(&flag(a.lambda.clone(), "lambda")?, "lambda")
    };
    let line = match (a.algorithm, a.direction) {
        (Algorithm::Theta, Direction::Forward) => {
            let y = parse_partition(&a.input, "input")?;
            let t = theta(&cfg, &y)?;
            emit(out, tr, "input", &t.input)?;
            emit(out, tr, "coded", &t.coded)?;
            emit(out, tr, "reduced", &t.reduced)?;
            emit(out, tr, "canonical", &t.canonical)?;
            emit(out, tr, "lambda", &t.lambda)?;
            emit(out, tr, "diagram", &t.diagram)?;
            emit(out, tr, "lambda_tr", &t.lambda_tr)?;
            emit(out, tr, "shifted", &t.shifted)?;
            emit(out, tr, "output", &t.output)?;
            text_partition(t.output.parts())
        }
        (Algorithm::Theta, Direction::Backward) => {
            let x = parse_partition(&a.input, "input")?;
            emit(out, tr, "input", &x)?;
            if tr {
                let lifted = if cfg.family == Family::D2 {
                    let mu = d2_chain_inverse(&cfg, &x)?;
                    emit(out, tr, "ao4", &mu)?;
                    mu
                } else {
                    x.clone()
                };
                let d = algo_d_prime(&cfg, &lifted)?;
                emit(out, tr, "reduced", &d.reduced)?;
                emit(out, tr, "nu", &d.extracted)?;
                emit(out, tr, "lambda", transpose(&d.extracted))?;
            }
            let y = theta_inv(&cfg, &x)?;
            emit(out, tr, "output", &y)?;
            text_partition(y.parts())
        }
        (Algorithm::A, Direction::Forward) => {
            let r = algo_a(&cfg, &parse_partition(&a.input, "input")?)?;
            emit(out, tr, "result", &r)?;
            pair_line(r.reduced.parts(), &r.extracted)
        }
        (Algorithm::A, Direction::Backward) => {
            let y = algo_a_inverse(&cfg, &parse_partition(&a.input, "input")?, &lambda()?)?;
            text_partition(y.parts())
        }
        (Algorithm::B, Direction::Forward) => {
            let (r, steps) = algo_b_with_steps(&cfg, &parse_partition(&a.input, "input")?)?;
            for s in &steps {
                emit(out, tr, "round", s)?;
            }
            pair_line(r.reduced.parts(), &r.extracted)
        }
        (Algorithm::B, Direction::Backward) => {
            let y = algo_b_inverse(&cfg, &parse_partition(&a.input, "input")?, &lambda()?)?;
            text_partition(y.parts())
        }
        (Algorithm::C, Direction::Forward) => {
            let (r, steps) = algo_c_with_steps(&cfg, &parse_partition(&a.input, "input")?)?;
            for s in &steps {
                emit(out, tr, "round", s)?;
            }
            emit(out, tr, "strict", &r.strict)?;
            pair_line(r.reduced.parts(), &r.odd)
        }
        (Algorithm::C, Direction::Backward) => {
            let y = algo_c_inverse(&cfg, &parse_partition(&a.input, "input")?, &lambda()?)?;
            text_partition(y.parts())
        }
        (Algorithm::D, Direction::Forward) => {
            let r = algo_d(&cfg, &parse_partition(&a.input, "input")?)?;
            pair_line(r.reduced.parts(), &r.extracted)
        }
        (Algorithm::D, Direction::Backward) => {
            let reduced = parse_partition(&a.input, "input")?;
            let mut parts = reduced.into_parts();
            for o in lambda()? {
                if o % 2 == 0 {
                    return Err(invalid("--lambda: parts must be odd"));
                }
                let v = o
                    .checked_mul(cfg.v)
                    .ok_or_else(|| invalid("--lambda: part too large"))?;
                parts.push(ColoredPart::plain(v));
            }
            let y = TwoColoredPartition::from_unsorted(parts);
            let back = algo_d(&cfg, &y)?;
            emit(out, tr, "check", &back)?;
            text_partition(y.parts())
        }
        (Algorithm::E, Direction::Forward) => {
            let coded = with_flag(parse_parts(&a.input), "input")?;
            let r = algo_e(&cfg, &coded)?;
            emit(out, tr, "canonical", &r.canonical)?;
            emit(out, tr, "diagram", &r.diagram)?;
            pair_line(r.reduced.parts(), &r.lambda)
        }
        (Algorithm::E, Direction::Backward) => {
            let reduced = parse_partition(&a.input, "input")?;
            let y = algo_f(&cfg, &reduced, &lambda()?, DEFAULT_F_LIMIT)?;
            text_partition(&y)
        }
    };
    writeln!(out, "{line}")?;
    Ok(())
}

fn series_cmd(a: &SeriesArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let cfg = a.config.resolve(err)?;
    let s = product_series(&cfg, a.max_degree)?;
    match a.format {
        Format::Json => writeln!(
            out,
            "{}",
            json!({
                "family": cfg.family.name(),
                "rank": cfg.rank,
                "weight": cfg.weight.name(),
                "max_degree": a.max_degree,
                "coefficients": s.coeffs(),
            })
        )?,
        Format::Tsv => {
            writeln!(out, "degree\tcoefficient")?;
            for (d, c) in s.coeffs().iter().enumerate() {
                writeln!(out, "{d}\t{c}")?;
            }
        }
        Format::Text => {
            let cs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
            writeln!(out, "{}", cs.join(","))?;
        }
    }
    Ok(())
}

fn write_report(out: &mut dyn Write, report: &IdentityReport, format: Format) -> Outcome {
    match format {
        Format::Tsv => write!(out, "{}", report.to_tsv())?,
        _ => writeln!(out, "{}", report.to_json())?,
    }
    if report.pass {
        Ok(())
    } else {
        let bad: Vec<String> = report
            .results
            .iter()
            .filter(|r| !r.pass)
            .map(|r| r.m.to_string())
            .collect();
        Err(Failure::Verify(format!(
            "identity {} fails at m = {}",
            report.identity,
            bad.join(",")
        )))
    }
}

fn verify_cmd(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let space = max_space()?;
    let report = match a.identity {
        Identity::Euler => {
            if !a.config.is_empty() {
                return Err(invalid("--family/--rank/--weight do not apply to euler"));
            }
            euler_identity(a.max_size.unwrap_or(40))?
        }
        other => {
            let cfg = a.config.resolve(err)?;
            let m = a.max_size.unwrap_or(15);
            match other {
                Identity::Ao => verify_counts(&cfg, m, space)?,
                Identity::Fock => fock_identity(&cfg, m, space)?,
                Identity::Ao2Split => ao2_split_identity(&cfg, m, space)?,
                Identity::Restricted => {
                    if cfg.z3 < 2 {
                        return Err(invalid("restricted identity needs z3 >= 2"));
                    }
                    let xs = residues(&a.x, cfg.z3)?;
                    verify_restricted(&cfg, &xs, m, space)?
                }
                Identity::Euler => unreachable!("handled above"),
            }
        }
    };
    write_report(out, &report, a.format)
}

fn selfcheck_cmd(a: &SelfcheckArgs, out: &mut dyn Write) -> Outcome {
    let results = run_examples();
    match a.format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&results).expect("serializable")
        )?,
        Format::Tsv => {
            writeln!(out, "status\tname\tdetail")?;
            for r in &results {
                writeln!(out, "{}\t{}\t{}", r.status.label(), r.name, r.detail)?;
            }
        }
        Format::Text => {
            for r in &results {
                writeln!(out, "{} {}: {}", r.status.label(), r.name, r.detail)?;
            }
        }
    }
    let failed = results.iter().filter(|r| r.status == Status::Fail).count();
    if failed > 0 {
        return Err(Failure::Verify(format!("{failed} worked examples failed")));
    }
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Enumerate(a) => enumerate_cmd(a, out, err),
        Command::Bijection(a) => bijection_cmd(a, out, err),
        Command::Series(a) => series_cmd(a, out, err),
        Command::Verify(a) => verify_cmd(a, out, err),
        Command::Selfcheck(a) => selfcheck_cmd(a, out),
    }
}

fn report_failure(err: &mut dyn Write, f: &Failure) -> i32 {
    let line = json!({ "error": f.kind(), "code": f.code(), "message": f.message() });
    let _ = writeln!(err, "{line}");
    f.code()
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let text = e.to_string();
            let first = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ")
                .to_string();
            return report_failure(err, &invalid(first));
        }
    };
    let mut out_buf: Vec<u8> = Vec::new();
    let mut err_buf: Vec<u8> = Vec::new();
    let outcome = match cli.jobs {
        Some(0) => Err(invalid("--jobs: must be at least 1")),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, &mut out_buf, &mut err_buf)),
            Err(e) => Err(Failure::Guard(format!("thread pool: {e}"))),
        },
        None => dispatch(&cli, &mut out_buf, &mut err_buf),
    };
    let flushed = out
        .write_all(&out_buf)
        .and_then(|()| err.write_all(&err_buf));
    let outcome = outcome.and(flushed.map_err(Failure::from));
    match outcome {
        Ok(()) => EXIT_OK,
        Err(f) => report_failure(err, &f),
    }
}
