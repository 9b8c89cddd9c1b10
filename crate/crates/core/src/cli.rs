//! The `cantor` command line.
//!
//! Exit codes: 0 success, 1 a negative answer (not equivalent, invalid
//! witness, empty stratum, violated law), 2 a parse, schema or usage error,
//! 3 a failed witness write.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::cardinality::Cardinality;
use crate::correspondence::{generate_witness, CheckReport, Witness, WitnessError};
use crate::expr::SpaceExpr;
use crate::laws::{run_laws, Standard};
use crate::random::Bounds;
use crate::space::CanonicalSpace;
use crate::syntax::{
    format_canonical, format_ordinal, parse_ordinal, parse_ordinal_expr, parse_space, ParseError,
};

pub const SEED_ENV: &str = "CANTOR_SEED";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "cantor",
    version,
    about = "Ordinals, Cantor-Bendixson ranks and finite correspondences"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: OutputMode,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normalize an ordinal expression; `(+)` is the natural sum.
    Ord { expr: String },
    /// Canonical form, ranks and degree of a space expression.
    Eval { expr: String },
    /// Decide equivalence of two space expressions.
    Equiv {
        left: String,
        right: String,
        /// Write a witness correspondence here when equivalent.
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Validate a witness file.
    Check { witness: PathBuf },
    /// List points of one rank stratum.
    Points {
        expr: String,
        #[arg(long)]
        rank: String,
        #[arg(long, default_value_t = 10)]
        count: u64,
    },
    /// Run the seeded law suite.
    Laws {
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_depth: usize,
        #[arg(long, default_value_t = 5)]
        max_coeff: u64,
        #[arg(long, default_value_t = 3)]
        max_nesting: usize,
    },
}

/// What a command produced: its text rendering, its JSON document and the
/// exit code.
struct Outcome {
    text: String,
    json: Value,
    code: i32,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Outcome {
        Outcome { text, json, code: 0 }
    }
}

struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn parse(what: &str, err: ParseError) -> Failure {
        Failure {
            code: 2,
            kind: "parse",
            message: format!("cannot parse {what}: {err}"),
        }
    }
}

/// Runs the command line with `args` (program name first) and returns the
/// exit code. `seed_env` is the value of `CANTOR_SEED`, if set.
pub fn run<I, T>(args: I, seed_env: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let result = execute(cli.command, seed_env);
    let written = match (&result, cli.format) {
        (Ok(o), OutputMode::Text) => writeln!(out, "{}", o.text),
        (Ok(o), OutputMode::Json) => writeln!(out, "{}", o.json),
        (Err(f), OutputMode::Text) => writeln!(err, "error: {}", f.message),
        (Err(f), OutputMode::Json) => writeln!(
            out,
            "{}",
            json!({ "error": { "kind": f.kind, "message": f.message } })
        ),
    };
    if written.is_err() {
        return 2;
    }
    match result {
        Ok(o) => o.code,
        Err(f) => f.code,
    }
}

fn execute(command: Command, seed_env: Option<String>) -> Result<Outcome, Failure> {
    match command {
        Command::Ord { expr } => cmd_ord(&expr),
        Command::Eval { expr } => cmd_eval(&expr),
        Command::Equiv {
            left,
            right,
            witness_out,
        } => cmd_equiv(&left, &right, witness_out),
        Command::Check { witness } => cmd_check(&witness),
        Command::Points { expr, rank, count } => cmd_points(&expr, &rank, count),
        Command::Laws {
            trials,
            seed,
            max_depth,
            max_coeff,
            max_nesting,
        } => {
            let seed = match seed_env {
                Some(s) => s.trim().parse::<u64>().map_err(|_| Failure {
                    code: 2,
                    kind: "usage",
                    message: format!("{SEED_ENV} must be a non-negative integer, got {s:?}"),
                })?,
                None => seed,
            };
            let bounds = Bounds {
                max_nesting,
                max_coeff: max_coeff.max(1),
                max_depth: max_depth.max(1),
                ..Bounds::default()
            };
            Ok(cmd_laws(trials, seed, &bounds))
        }
    }
}

fn space_expr(text: &str) -> Result<SpaceExpr, Failure> {
    parse_space(text).map_err(|e| Failure::parse("space expression", e))
}

fn cmd_ord(expr: &str) -> Result<Outcome, Failure> {
    let o = parse_ordinal_expr(expr).map_err(|e| Failure::parse("ordinal", e))?;
    let text = format_ordinal(&o);
    Ok(Outcome::ok(text.clone(), json!({ "ordinal": text })))
}

fn underlying(s: &CanonicalSpace) -> String {
    match s.cb_star() {
        Some(a) if !a.is_zero() => format_ordinal(&s.top_point().expect("nonempty").successor()),
        _ => format!("{} points", s.degree()),
    }
}

fn cmd_eval(expr: &str) -> Result<Outcome, Failure> {
    let s = space_expr(expr)?.canonicalize();
    let cb_star = s.cb_star().map(format_ordinal);
    let text = format!(
        "canonical: {}\ncb_rank: {}\ncb_star: {}\ndegree: {}\nunderlying: {}",
        format_canonical(&s),
        format_ordinal(&s.cb_rank()),
        cb_star.clone().unwrap_or_else(|| "none".into()),
        s.degree(),
        underlying(&s)
    );
    let doc = json!({
        "canonical": format_canonical(&s),
        "cb_rank": format_ordinal(&s.cb_rank()),
        "cb_star": cb_star,
        "degree": s.degree(),
        "underlying": underlying(&s),
    });
    Ok(Outcome::ok(text, doc))
}

fn cardinality_json(c: Cardinality) -> Value {
    match c {
        Cardinality::Finite(n) => json!(n),
        Cardinality::CountablyInfinite => json!("infinite"),
    }
}

fn cmd_equiv(left: &str, right: &str, witness_out: Option<PathBuf>) -> Result<Outcome, Failure> {
    let x = space_expr(left)?.canonicalize();
    let y = space_expr(right)?.canonicalize();
    let mut lines = vec![
        format!("left: {}", format_canonical(&x)),
        format!("right: {}", format_canonical(&y)),
    ];
    let mut doc = json!({
        "equivalent": x.equivalent(&y),
        "left": format_canonical(&x),
        "right": format_canonical(&y),
        "difference": null,
        "witness": null,
    });
    if let Some(diff) = x.stratum_difference(&y) {
        lines.insert(0, "equivalent: no".into());
        lines.push(format!(
            "differing stratum at rank {}: left has {}, right has {}",
            format_ordinal(&diff.rank),
            diff.left,
            diff.right
        ));
        doc["difference"] = json!({
            "rank": format_ordinal(&diff.rank),
            "left": cardinality_json(diff.left),
            "right": cardinality_json(diff.right),
        });
        return Ok(Outcome {
            text: lines.join("\n"),
            json: doc,
            code: 1,
        });
    }
    lines.insert(0, "equivalent: yes".into());
    if let Some(path) = witness_out {
        let witness = generate_witness(&x, &y).expect("equivalent spaces have witnesses");
        witness.write(&path).map_err(|e| Failure {
            code: 3,
            kind: "io",
            message: format!("cannot write witness to {}: {e}", path.display()),
        })?;
        let (n, m) = witness.check().multiplicity;
        lines.push(format!("witness: {} ({n}-to-{m})", path.display()));
        doc["witness"] = json!(path.display().to_string());
    }
    Ok(Outcome::ok(lines.join("\n"), doc))
}

fn check_json(r: &CheckReport) -> Value {
    json!({
        "kind": r.kind,
        "valid": r.valid,
        "validity": r.validity,
        "multiplicity": { "n": r.multiplicity.0, "m": r.multiplicity.1 },
        "rank_preserving": r.rank_preserving,
        "lemma": {
            "source_rank": format_ordinal(&r.lemma1.source_rank),
            "target_rank": format_ordinal(&r.lemma1.target_rank),
            "source_degree": r.lemma1.source_degree,
            "target_degree": r.lemma1.target_degree,
            "ranks_equal": r.lemma1.ranks_equal(),
            "bounds_hold": r.lemma1.lower_bound_holds() && r.lemma1.upper_bound_holds(),
            "statement": r.lemma1.to_string(),
        },
        "passed": r.passed(),
    })
}

fn cmd_check(path: &std::path::Path) -> Result<Outcome, Failure> {
    let witness = Witness::read(path).map_err(|e| Failure {
        code: 2,
        kind: match e {
            WitnessError::Io(_) => "io",
            _ => "schema",
        },
        message: format!("{}: {e}", path.display()),
    })?;
    let report = witness.check();
    Ok(Outcome {
        text: report.to_string(),
        json: check_json(&report),
        code: if report.passed() { 0 } else { 1 },
    })
}

fn cmd_points(expr: &str, rank: &str, count: u64) -> Result<Outcome, Failure> {
    let e = space_expr(expr)?;
    let beta = parse_ordinal(rank).map_err(|err| Failure::parse("rank", err))?;
    let size = e.count_points_of_rank(&beta);
    if size.is_zero() {
        let top = e.canonicalize().cb_star().map_or_else(
            || "the space is empty".to_string(),
            |a| format!("cb_star is {}", format_ordinal(a)),
        );
        return Err(Failure {
            code: 1,
            kind: "empty_stratum",
            message: format!("no points of rank {} ({top})", format_ordinal(&beta)),
        });
    }
    let shown = size.finite().map_or(count, |n| n.min(count));
    let mut lines = Vec::new();
    let mut points = Vec::new();
    for i in 0..shown {
        let p = e
            .enumerate_points_of_rank(&beta, &BigUint::from(i))
            .map_err(|err| Failure {
                code: 2,
                kind: "index",
                message: err.to_string(),
            })?;
        lines.push(format!("{i}: {p}"));
        points.push(json!({ "index": i, "point": p.to_string() }));
    }
    let exhausted = size.finite().is_some_and(|n| n <= count);
    lines.push(match size {
        Cardinality::Finite(n) if exhausted => format!("stratum has {n} points, all listed"),
        Cardinality::Finite(n) => format!("stratum has {n} points"),
        Cardinality::CountablyInfinite => "stratum is countably infinite".into(),
    });
    let doc = json!({
        "space": expr,
        "rank": format_ordinal(&beta),
        "size": cardinality_json(size),
        "points": points,
        "exhausted": exhausted,
    });
    Ok(Outcome::ok(lines.join("\n"), doc))
}

fn cmd_laws(trials: u64, seed: u64, bounds: &Bounds) -> Outcome {
    let report = run_laws(&Standard, trials, seed, bounds);
    Outcome {
        text: report.to_string(),
        json: serde_json::to_value(&report).expect("plain data serializes"),
        code: if report.all_passed() { 0 } else { 1 },
    }
}
