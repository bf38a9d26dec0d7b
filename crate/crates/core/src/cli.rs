//! Command-line front end.
//!
//! Exit codes are shared by every command: 0 success, 1 domain-invalid input
//! (an invalid pattern, an illegal construction), 2 usage or parse error,
//! 3 node budget exceeded. All counts in json and csv output are decimal
//! strings.

use std::io::{self, Write};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::closed_forms::{count, CountError, CountQuery, Method};
use crate::exact_math::EulerianTable;
use crate::notation::{parse, render_auto};
use crate::oracle::{
    count_patterns_oracle, enumerate_patterns, rook_oracle_with_budget, Balls, EnumerationSpec,
    OracleError, DEFAULT_NODE_BUDGET,
};
use crate::pattern::{construct, decompose, validate, JugglingPattern, PatternError, Permutation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

pub const BUDGET_ENV: &str = "SITESWAP_NODE_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "siteswap",
    version,
    about = "Validate, build, enumerate and count siteswap patterns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a pattern against the landing and average conditions
    Validate {
        pattern: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count patterns for a period, ball spec and ceiling
    Count(CountArgs),
    /// List patterns in lexicographic order
    Enumerate(EnumerateArgs),
    /// Split a pattern into P - Q + nB
    Decompose {
        pattern: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build a pattern from a permutation and a lift vector
    Construct {
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        perm: Vec<String>,
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        bvec: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print Eulerian, rook or pattern-count tables
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Closed,
    Oracle,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Closed => Method::ClosedForm,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("ball_spec").required(true).args(["balls", "all_balls"])))]
struct BallArgs {
    #[arg(long)]
    period: usize,
    #[arg(long)]
    balls: Option<u64>,
    /// Count every ball number at once (needs --ceiling)
    #[arg(long)]
    all_balls: bool,
    #[arg(long)]
    ceiling: Option<u64>,
    /// Node budget for exhaustive searches
    #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
}

impl BallArgs {
    fn balls(&self) -> Balls {
        match self.balls {
            Some(b) if !self.all_balls => Balls::Fixed(b),
            _ => Balls::All,
        }
    }
}

#[derive(Debug, Args)]
struct CountArgs {
    #[command(flatten)]
    spec: BallArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[command(flatten)]
    spec: BallArgs,
    /// Print at most this many patterns
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Eulerian,
    Rook,
    Counts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CeilingForm {
    /// Ceilings a*n - 1 for a = 1, 2, 3
    #[value(name = "an-1")]
    MultipleMinusOne,
    /// Every ceiling below the period
    Small,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    kind: TableKind,
    #[arg(long)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = CeilingForm::MultipleMinusOne)]
    ceiling_form: CeilingForm,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
}

/// A failed command: exit code plus message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl ToString) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_INVALID, format!("write failed: {e}"))
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::BudgetExceeded { .. } => EXIT_BUDGET,
            OracleError::RookRange { .. } => EXIT_INVALID,
            OracleError::ZeroPeriod
            | OracleError::UnboundedAllBalls
            | OracleError::CeilingOverflow { .. } => EXIT_USAGE,
        };
        Failure::new(code, e)
    }
}

impl From<CountError> for Failure {
    fn from(e: CountError) -> Self {
        match e {
            CountError::Oracle(inner) => inner.into(),
            CountError::NoClosedForm | CountError::OutOfRange { .. } => Failure::new(EXIT_USAGE, e),
            CountError::Mismatch { .. } => Failure::new(EXIT_INVALID, e),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Validate { pattern, format } => cmd_validate(&pattern, format, out),
        Command::Count(args) => cmd_count(&args, out),
        Command::Enumerate(args) => cmd_enumerate(&args, out),
        Command::Decompose { pattern, format } => cmd_decompose(&pattern, format, out),
        Command::Construct { perm, bvec, format } => cmd_construct(&perm, &bvec, format, out),
        Command::Table(args) => cmd_table(&args, out),
    };
    let _ = out.flush();
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn no_csv(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::new(
            EXIT_USAGE,
            format!("csv output is only available for table and enumerate, not {command}"),
        ));
    }
    Ok(())
}

fn parse_pattern(text: &str) -> Result<crate::pattern::ThrowSequence, Failure> {
    parse(text).map_err(|e| Failure::new(EXIT_USAGE, e))
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn cmd_validate(text: &str, format: Format, out: &mut dyn Write) -> Outcome {
    no_csv(format, "validate")?;
    let seq = parse_pattern(text)?;
    let report = validate(&seq);
    match format {
        Format::Json => print_json(
            out,
            &json!({
                "input": text,
                "heights": seq.heights(),
                "valid": report.valid,
                "balls": report.balls,
                "violations": report.violations,
            }),
        )?,
        _ => {
            if report.valid {
                writeln!(out, "{text}: valid")?;
                writeln!(out, "balls: {}", report.balls.unwrap_or(0))?;
            } else {
                writeln!(out, "{text}: invalid")?;
                for v in &report.violations {
                    writeln!(out, "  {v}")?;
                }
            }
        }
    }
    Ok(if report.valid { EXIT_OK } else { EXIT_INVALID })
}

#[derive(Serialize)]
struct CountQueryJson {
    period: usize,
    balls: serde_json::Value,
    ceiling: Option<u64>,
    method: Method,
}

#[derive(Serialize)]
struct CountJson {
    query: CountQueryJson,
    count: String,
    branch: crate::closed_forms::Branch,
    cross_checked: bool,
}

fn balls_json(balls: Balls) -> serde_json::Value {
    match balls {
        Balls::Fixed(b) => json!(b),
        Balls::All => json!("all"),
    }
}

fn cmd_count(args: &CountArgs, out: &mut dyn Write) -> Outcome {
    no_csv(args.format, "count")?;
    let spec = &args.spec;
    let query = CountQuery {
        period: spec.period,
        balls: spec.balls(),
        ceiling: spec.ceiling,
        method: args.method.into(),
        budget: spec.budget,
    };
    let result = count(&query)?;
    match args.format {
        Format::Json => print_json(
            out,
            &CountJson {
                query: CountQueryJson {
                    period: query.period,
                    balls: balls_json(query.balls),
                    ceiling: query.ceiling,
                    method: query.method,
                },
                count: result.count.to_string(),
                branch: result.branch,
                cross_checked: result.cross_checked,
            },
        )?,
        _ => {
            writeln!(out, "count: {}", result.count)?;
            writeln!(out, "branch: {}", result.branch)?;
            writeln!(out, "cross_checked: {}", result.cross_checked)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> Outcome {
    let spec = EnumerationSpec {
        period: args.spec.period,
        balls: args.spec.balls(),
        ceiling: args.spec.ceiling,
        budget: args.spec.budget,
    };
    let total = count_patterns_oracle(&spec)?;
    let limit = args.limit.unwrap_or(usize::MAX);
    let patterns = enumerate_patterns(&spec)?.take(limit);
    let mut shown = 0usize;
    match args.format {
        Format::Json => {
            let listed: Vec<String> = patterns.map(|p| render_auto(p.sequence())).collect();
            shown = listed.len();
            print_json(
                out,
                &json!({
                    "patterns": listed,
                    "truncated": total > shown.into(),
                    "total": total.to_string(),
                }),
            )?;
        }
        Format::Csv => {
            {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(["pattern", "balls"]).map_err(csv_failure)?;
                for p in patterns {
                    w.write_record([render_auto(p.sequence()), p.balls().to_string()])
                        .map_err(csv_failure)?;
                    shown += 1;
                }
                w.flush()?;
            }
            if total > shown.into() {
                writeln!(out, "# truncated: showing {shown} of {total}")?;
            }
        }
        Format::Text => {
            for p in patterns {
                writeln!(out, "{}", render_auto(p.sequence()))?;
                shown += 1;
            }
            if total > shown.into() {
                writeln!(out, "... truncated: showing {shown} of {total}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn csv_failure(e: csv::Error) -> Failure {
    Failure::new(EXIT_INVALID, format!("csv output failed: {e}"))
}

fn cmd_decompose(text: &str, format: Format, out: &mut dyn Write) -> Outcome {
    no_csv(format, "decompose")?;
    let seq = parse_pattern(text)?;
    let pattern = JugglingPattern::try_from(seq).map_err(|e| Failure::new(EXIT_INVALID, e))?;
    let d = decompose(&pattern);
    match format {
        Format::Json => print_json(
            out,
            &json!({
                "pattern": render_auto(pattern.sequence()),
                "perm": d.perm,
                "b_vec": d.b_vec,
                "descents": d.descents,
                "balls": pattern.balls(),
            }),
        )?,
        _ => {
            writeln!(out, "P={}", tuple(d.perm.as_slice()))?;
            writeln!(out, "B={}", tuple(&d.b_vec))?;
            writeln!(out, "k={}", d.descents)?;
        }
    }
    Ok(EXIT_OK)
}

fn tuple<T: ToString>(values: &[T]) -> String {
    let parts: Vec<String> = values.iter().map(T::to_string).collect();
    format!("({})", parts.join(","))
}

fn parse_numbers<T: std::str::FromStr>(flag: &str, raw: &[String]) -> Result<Vec<T>, Failure> {
    raw.iter()
        .map(|s| {
            s.trim().parse::<T>().map_err(|_| {
                Failure::new(
                    EXIT_USAGE,
                    format!("--{flag}: {s:?} is not a nonnegative integer"),
                )
            })
        })
        .collect()
}

fn cmd_construct(perm: &[String], bvec: &[String], format: Format, out: &mut dyn Write) -> Outcome {
    no_csv(format, "construct")?;
    let perm: Vec<usize> = parse_numbers("perm", perm)?;
    let bvec: Vec<u64> = parse_numbers("bvec", bvec)?;
    let invalid = |e: PatternError| Failure::new(EXIT_INVALID, e);
    let perm = Permutation::new(perm).map_err(invalid)?;
    let pattern = construct(&perm, &bvec).map_err(invalid)?;
    let rendered = render_auto(pattern.sequence());
    match format {
        Format::Json => print_json(
            out,
            &json!({
                "pattern": rendered,
                "heights": pattern.heights(),
                "balls": pattern.balls(),
            }),
        )?,
        _ => {
            writeln!(out, "{rendered}")?;
            writeln!(out, "balls: {}", pattern.balls())?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Outcome {
    if args.max_n == 0 {
        return Err(Failure::new(EXIT_USAGE, "--max-n must be at least 1"));
    }
    match args.kind {
        TableKind::Eulerian => eulerian_table(args, out),
        TableKind::Rook => rook_table(args, out),
        TableKind::Counts => counts_table(args, out),
    }
}

fn eulerian_table(args: &TableArgs, out: &mut dyn Write) -> Outcome {
    let cells = (args.max_n as u128).pow(2);
    if cells > args.budget as u128 {
        return Err(OracleError::BudgetExceeded {
            space: format!("{}^2", args.max_n),
            budget: args.budget,
        }
        .into());
    }
    let table = EulerianTable::new(args.max_n);
    match args.format {
        Format::Text => {
            for row in table.rows() {
                let line: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "k", "value"]).map_err(csv_failure)?;
            for (i, row) in table.rows().enumerate() {
                for (k, e) in row.iter().enumerate() {
                    w.write_record([(i + 1).to_string(), k.to_string(), e.to_string()])
                        .map_err(csv_failure)?;
                }
            }
            w.flush()?;
        }
        Format::Json => {
            let rows: Vec<_> = table
                .rows()
                .enumerate()
                .map(|(i, row)| {
                    json!({
                        "n": i + 1,
                        "values": row.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            print_json(out, &json!({ "kind": "eulerian", "rows": rows }))?;
        }
    }
    Ok(EXIT_OK)
}

fn rook_table(args: &TableArgs, out: &mut dyn Write) -> Outcome {
    let mut entries = Vec::new();
    for n in 1..=args.max_n {
        for s in 0..n.min(4) {
            entries.push((s, n, rook_oracle_with_budget(s, n, args.budget)?));
        }
    }
    match args.format {
        Format::Text => {
            writeln!(out, "n: rook(0,n) rook(1,n) rook(2,n) rook(3,n)")?;
            for n in 1..=args.max_n {
                let row: Vec<String> = entries
                    .iter()
                    .filter(|e| e.1 == n)
                    .map(|e| e.2.to_string())
                    .collect();
                writeln!(out, "{n}: {}", row.join(" "))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["s", "n", "value"]).map_err(csv_failure)?;
            for (s, n, v) in &entries {
                w.write_record([s.to_string(), n.to_string(), v.to_string()])
                    .map_err(csv_failure)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let list: Vec<_> = entries
                .iter()
                .map(|(s, n, v)| json!({ "s": s, "n": n, "value": v.to_string() }))
                .collect();
            print_json(out, &json!({ "kind": "rook", "entries": list }))?;
        }
    }
    Ok(EXIT_OK)
}

struct CountRow {
    n: usize,
    balls: Balls,
    ceiling: u64,
    count: String,
    branch: &'static str,
}

fn counts_table(args: &TableArgs, out: &mut dyn Write) -> Outcome {
    let mut queries = Vec::new();
    for n in 1..=args.max_n {
        match args.ceiling_form {
            CeilingForm::MultipleMinusOne => {
                for a in 1..=3u64 {
                    let c = a * n as u64 - 1;
                    for b in 0..=c {
                        queries.push(CountQuery::fixed(n, b).with_ceiling(c));
                    }
                }
            }
            CeilingForm::Small => {
                for c in 0..n as u64 {
                    for b in 0..=c {
                        queries.push(CountQuery::fixed(n, b).with_ceiling(c));
                    }
                    queries.push(CountQuery::all_balls(n, c));
                }
            }
        }
    }
    let mut rows = Vec::with_capacity(queries.len());
    for q in queries {
        let q = q.with_budget(args.budget);
        let r = count(&q)?;
        rows.push(CountRow {
            n: q.period,
            balls: q.balls,
            ceiling: q.ceiling.expect("table queries carry a ceiling"),
            count: r.count.to_string(),
            branch: r.branch.tag(),
        });
    }
    let balls_str = |b: Balls| match b {
        Balls::Fixed(b) => b.to_string(),
        Balls::All => "*".to_string(),
    };
    match args.format {
        Format::Text => {
            for r in &rows {
                writeln!(
                    out,
                    "J({},{},{}) = {} [{}]",
                    r.n,
                    balls_str(r.balls),
                    r.ceiling,
                    r.count,
                    r.branch
                )?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "balls", "ceiling", "count", "branch"])
                .map_err(csv_failure)?;
            for r in &rows {
                w.write_record([
                    r.n.to_string(),
                    balls_str(r.balls),
                    r.ceiling.to_string(),
                    r.count.clone(),
                    r.branch.to_string(),
                ])
                .map_err(csv_failure)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let list: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "balls": balls_json(r.balls),
                        "ceiling": r.ceiling,
                        "count": r.count,
                        "branch": r.branch,
                    })
                })
                .collect();
            print_json(out, &json!({ "kind": "counts", "rows": list }))?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["siteswap"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn validate_exit_codes() {
        let (code, out, _) = run_args(&["validate", "5551"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("balls: 4"));

        let (code, out, _) = run_args(&["validate", "12"]);
        assert_eq!(code, EXIT_INVALID);
        assert!(out.contains("landing collision (0,1)"));

        let (code, _, err) = run_args(&["validate", "5!"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("offset 1"));
    }

    #[test]
    fn csv_rejected_for_count() {
        let (code, _, err) =
            run_args(&["count", "--period", "4", "--balls", "5", "--format", "csv"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("csv"));
    }

    #[test]
    fn ball_spec_is_required_and_exclusive() {
        assert_eq!(run_args(&["count", "--period", "4"]).0, EXIT_USAGE);
        assert_eq!(
            run_args(&[
                "count",
                "--period",
                "4",
                "--balls",
                "2",
                "--all-balls",
                "--ceiling",
                "3"
            ])
            .0,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["count", "--period", "4", "--all-balls"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn help_is_success() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("enumerate"));
    }
}
