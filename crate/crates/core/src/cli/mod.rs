//! Command-line front end: algebra files in, reports out.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical property
//! fails, 2 for input or usage errors.

mod format;
mod literal;

pub use format::{parse_algebra, parse_scalar, serialize_algebra};
pub use literal::{parse_subspace, parse_tuple, parse_vector};

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{
    check_fundamental_identity_with_cap, check_rmult_identities, skew_check, Counterexample,
    NAlgebra, Report, DEFAULT_CASE_CAP,
};
use crate::cartan::{
    check_maximality, check_prop31, check_thm31, fitting_family, is_cartan, normalizer,
    null_component, regular_search, verify_quotient_theorems, TheoremReport,
};
use crate::catalog::{self, Fixture};
use crate::error::{Error, Result};
use crate::exactlin::{format_vector, Subspace};
use crate::nilpotency::{default_max_k, series_full, series_s, SeriesResult};
use crate::structure::{ideal_i, ideal_j, quotient};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "leibniz",
    version,
    about = "Exact computations in Leibniz n-algebras"
)]
struct Cli {
    /// Emit a JSON report instead of the text table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exhaustively check the fundamental identity on basis vectors.
    Check {
        file: PathBuf,
        /// Refuse inputs needing more cases than this.
        #[arg(long, default_value_t = DEFAULT_CASE_CAP)]
        cap: u128,
    },
    /// Check the four antisymmetry conditions.
    Skew { file: PathBuf },
    /// Descending series; slot series with --s, otherwise the full series.
    Series {
        file: PathBuf,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Nilpotency truth table over all slots and the full series.
    Nilpotency { file: PathBuf },
    /// The repeated-argument ideal and the symmetrizer ideal.
    Ideal { file: PathBuf },
    /// Quotient by the repeated-argument ideal.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fitting decomposition relative to a nilpotent subalgebra.
    Fitting {
        file: PathBuf,
        #[arg(long)]
        subspace: String,
    },
    /// Slot normalizer of a subspace.
    Normalizer {
        file: PathBuf,
        #[arg(long)]
        subspace: String,
        #[arg(long, default_value_t = 1)]
        s: usize,
    },
    /// Decide whether a subspace is a Cartan subalgebra.
    Cartan {
        file: PathBuf,
        #[arg(long)]
        subspace: String,
    },
    /// Fitting null component of one right multiplication.
    Null {
        file: PathBuf,
        /// Comma-separated tuple, e.g. "e1, e2".
        #[arg(long)]
        tuple: String,
    },
    /// Seeded search for a regular tuple.
    Regular {
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
    /// Run the whole theorem suite.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        bound: i64,
        #[arg(long, default_value_t = DEFAULT_CASE_CAP)]
        cap: u128,
    },
    /// Write a catalog algebra: A3, D3, C3, W5, or lpq, diagonal, cartan,
    /// e27-base, e27, zero, lift with parameters.
    Catalog {
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Comma-separated coefficients for `diagonal`.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Arity-2 algebra file for `lift`.
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Outcome {
    text: String,
    json: Value,
    code: i32,
}

impl Outcome {
    fn new(text: String, json: Value, passed: bool) -> Self {
        Outcome {
            text,
            json,
            code: if passed { EXIT_OK } else { EXIT_FAILED },
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
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
    match execute(cli.command) {
        Ok(outcome) => {
            let written = if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).unwrap()
                )
            } else {
                write!(out, "{}", outcome.text)
            };
            if written.is_err() {
                return EXIT_USAGE;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn load(path: &Path) -> Result<NAlgebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
    parse_algebra(&text)
}

fn save(path: &Path, l: &NAlgebra) -> Result<()> {
    std::fs::write(path, serialize_algebra(l))
        .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))
}

fn subspace_json(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis().iter().map(|v| format_vector(v)).collect::<Vec<_>>(),
    })
}

fn counterexample_json(c: &Option<Counterexample>) -> Value {
    match c {
        None => Value::Null,
        Some(c) => json!({
            "input": c.input.iter().map(|v| format_vector(v)).collect::<Vec<_>>(),
            "lhs": format_vector(&c.lhs),
            "rhs": format_vector(&c.rhs),
        }),
    }
}

fn report_json(r: &Report) -> Value {
    json!({
        "passed": r.passed,
        "cases": r.checked_cases,
        "counterexample": counterexample_json(&r.first_counterexample),
    })
}

fn series_json(r: &SeriesResult) -> Value {
    json!({
        "kind": r.kind.to_string(),
        "terms": r.terms.iter().map(subspace_json).collect::<Vec<_>>(),
        "stabilized": r.stabilized,
        "nilpotency_index": r.nilpotency_index,
    })
}

fn theorem_json(r: &TheoremReport) -> Value {
    json!({
        "passed": r.passed(),
        "checks": r.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

fn header(l: &NAlgebra) -> String {
    format!(
        "algebra {} (arity {}, dim {})\n",
        l.name(),
        l.arity(),
        l.dim()
    )
}

fn meta(l: &NAlgebra) -> Value {
    json!({ "name": l.name(), "arity": l.arity(), "dim": l.dim() })
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Check { file, cap } => {
            let l = load(&file)?;
            let r = check_fundamental_identity_with_cap(&l, cap)?;
            let text = format!("{}identity: {r}\n", header(&l));
            let json =
                json!({ "command": "check", "algebra": meta(&l), "report": report_json(&r) });
            Ok(Outcome::new(text, json, r.passed))
        }
        Command::Skew { file } => {
            let l = load(&file)?;
            let skew = skew_check(&l);
            let mut text = header(&l);
            let mut conditions = Vec::new();
            for (i, (name, r)) in skew.reports().iter().enumerate() {
                writeln!(text, "{}) {:<36} {r}", i + 1, name).unwrap();
                conditions
                    .push(json!({ "condition": i + 1, "name": name, "report": report_json(r) }));
            }
            let json = json!({ "command": "skew", "algebra": meta(&l), "conditions": conditions });
            Ok(Outcome::new(text, json, skew.all_hold()))
        }
        Command::Series { file, s, max_k } => {
            let l = load(&file)?;
            let max_k = max_k.unwrap_or_else(|| default_max_k(&l));
            let r = match s {
                Some(s) => series_s(&l, s, max_k)?,
                None => series_full(&l, max_k),
            };
            let text = format!("{}{r}\n", header(&l));
            let json =
                json!({ "command": "series", "algebra": meta(&l), "series": series_json(&r) });
            Ok(Outcome::new(text, json, true))
        }
        Command::Nilpotency { file } => {
            let l = load(&file)?;
            let max_k = default_max_k(&l);
            let mut text = header(&l);
            writeln!(
                text,
                "{:<8} {:<10} {:<6} dims",
                "series", "nilpotent", "index"
            )
            .unwrap();
            let mut rows = Vec::new();
            let mut all = Vec::new();
            for s in 1..=l.arity() {
                all.push(series_s(&l, s, max_k)?);
            }
            all.push(series_full(&l, max_k));
            for r in &all {
                let index = r
                    .nilpotency_index
                    .map_or("-".to_string(), |i| i.to_string());
                writeln!(
                    text,
                    "{:<8} {:<10} {:<6} {:?}",
                    r.kind.to_string(),
                    r.reaches_zero(),
                    index,
                    r.dims()
                )
                .unwrap();
                rows.push(series_json(r));
            }
            let json = json!({ "command": "nilpotency", "algebra": meta(&l), "series": rows });
            Ok(Outcome::new(text, json, true))
        }
        Command::Ideal { file } => {
            let l = load(&file)?;
            let i = ideal_i(&l);
            let j = ideal_j(&l);
            let text = format!(
                "{}I = {i} (dim {})\nJ = {j} (dim {})\nI = J: {}\n",
                header(&l),
                i.dim(),
                j.dim(),
                i == j
            );
            let json = json!({
                "command": "ideal",
                "algebra": meta(&l),
                "I": subspace_json(&i),
                "J": subspace_json(&j),
                "equal": i == j,
                "is_whole_algebra": i.is_full(),
            });
            Ok(Outcome::new(text, json, i == j))
        }
        Command::Quotient { file, out } => {
            let l = load(&file)?;
            let p = quotient(&l, &ideal_i(&l))?;
            let q = &p.quotient;
            let skew = skew_check(q);
            let identity = check_fundamental_identity_with_cap(q, DEFAULT_CASE_CAP)?;
            let mut text = format!(
                "{}ideal dim {}, quotient dim {}\nantisymmetric: {}\nidentity: {identity}\n",
                header(&l),
                p.ideal.dim(),
                q.dim(),
                skew.all_hold()
            );
            match &out {
                Some(path) => {
                    save(path, q)?;
                    writeln!(text, "wrote {}", path.display()).unwrap();
                }
                None => text.push_str(&serialize_algebra(q)),
            }
            let json = json!({
                "command": "quotient",
                "algebra": meta(&l),
                "ideal": subspace_json(&p.ideal),
                "quotient": meta(q),
                "antisymmetric": skew.all_hold(),
                "identity": report_json(&identity),
                "text": serialize_algebra(q),
            });
            Ok(Outcome::new(text, json, skew.all_hold() && identity.passed))
        }
        Command::Fitting { file, subspace } => {
            let l = load(&file)?;
            let h = parse_subspace(&subspace, l.dim())?;
            let pair = fitting_family(&l, &h)?;
            let text = format!(
                "{}L0 = {} (dim {})\nL1 = {} (dim {})\n",
                header(&l),
                pair.null,
                pair.null.dim(),
                pair.one,
                pair.one.dim()
            );
            let json = json!({
                "command": "fitting",
                "algebra": meta(&l),
                "L0": subspace_json(&pair.null),
                "L1": subspace_json(&pair.one),
            });
            Ok(Outcome::new(text, json, true))
        }
        Command::Normalizer { file, subspace, s } => {
            let l = load(&file)?;
            let x = parse_subspace(&subspace, l.dim())?;
            let nrm = normalizer(&l, &x, s)?;
            let text = format!("{}N_{s} = {nrm} (dim {})\n", header(&l), nrm.dim());
            let json = json!({
                "command": "normalizer",
                "algebra": meta(&l),
                "slot": s,
                "normalizer": subspace_json(&nrm),
            });
            Ok(Outcome::new(text, json, true))
        }
        Command::Cartan { file, subspace } => {
            let l = load(&file)?;
            let h = parse_subspace(&subspace, l.dim())?;
            let v = is_cartan(&l, &h)?;
            let text = format!("{}cartan: {}\n{v}\n", header(&l), v.is_cartan());
            let json = json!({
                "command": "cartan",
                "algebra": meta(&l),
                "cartan": v.is_cartan(),
                "subalgebra": v.subalgebra,
                "nilpotent": v.nilpotent,
                "self_normalizing": v.self_normalizing,
                "normalizer": subspace_json(&v.normalizer),
            });
            Ok(Outcome::new(text, json, v.is_cartan()))
        }
        Command::Null { file, tuple } => {
            let l = load(&file)?;
            let x = parse_tuple(&tuple, l.dim(), l.arity())?;
            let null = null_component(&l, &x)?;
            let text = format!(
                "{}null component = {null} (dim {})\n",
                header(&l),
                null.dim()
            );
            let json =
                json!({ "command": "null", "algebra": meta(&l), "null": subspace_json(&null) });
            Ok(Outcome::new(text, json, true))
        }
        Command::Regular {
            file,
            trials,
            seed,
            bound,
        } => {
            let l = load(&file)?;
            let r = regular_search(&l, trials, seed, bound)?;
            let text = format!("{}{r}\n", header(&l));
            let json = json!({
                "command": "regular",
                "algebra": meta(&l),
                "rank_upper_bound": r.rank_upper_bound,
                "best_tuple": r.best_tuple.components().iter().map(|v| format_vector(v)).collect::<Vec<_>>(),
                "trials": r.trials,
                "seed": r.seed,
                "bound": bound,
            });
            Ok(Outcome::new(text, json, true))
        }
        Command::Verify {
            file,
            trials,
            seed,
            bound,
            cap,
        } => {
            let l = load(&file)?;
            let report = verify_suite(&l, trials, seed, bound, cap)?;
            let text = format!("{}{report}\n", header(&l));
            let json = json!({ "command": "verify", "algebra": meta(&l), "report": theorem_json(&report) });
            Ok(Outcome::new(text, json, report.passed()))
        }
        Command::Catalog {
            name,
            n,
            m,
            p,
            q,
            alpha,
            base,
            out,
        } => {
            let l = build_catalog(&name, n, m, p, q, alpha.as_deref(), base.as_deref())?;
            let mut text = String::new();
            match &out {
                Some(path) => {
                    save(path, &l)?;
                    writeln!(text, "wrote {} to {}", l.name(), path.display()).unwrap();
                }
                None => text.push_str(&serialize_algebra(&l)),
            }
            let json =
                json!({ "command": "catalog", "algebra": meta(&l), "text": serialize_algebra(&l) });
            Ok(Outcome::new(text, json, true))
        }
    }
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| Error::InvalidParameter(format!("`{family}` needs --{flag}")))
}

fn build_catalog(
    name: &str,
    n: Option<usize>,
    m: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
    alpha: Option<&str>,
    base: Option<&Path>,
) -> Result<NAlgebra> {
    if let Some(fixture) = Fixture::named(name) {
        return Ok(fixture.build()?.with_name(name.to_ascii_uppercase()));
    }
    let family = name.to_ascii_lowercase();
    let fixture = match family.as_str() {
        "lpq" => Fixture::Lpq {
            n: need(n, "n", name)?,
            m: need(m, "m", name)?,
            p: need(p, "p", name)?,
            q: need(q, "q", name)?,
        },
        "diagonal" => {
            let text =
                alpha.ok_or_else(|| Error::InvalidParameter("`diagonal` needs --alpha".into()))?;
            let alpha = text
                .split(',')
                .map(|t| {
                    parse_scalar(t.trim())
                        .ok_or_else(|| Error::InvalidParameter(format!("bad coefficient `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            Fixture::Diagonal {
                n: need(n, "n", name)?,
                alpha,
            }
        }
        "cartan" => Fixture::CartanExample {
            n: need(n, "n", name)?,
            m: need(m, "m", name)?,
        },
        "e27-base" => Fixture::E27Base {
            m: need(m, "m", name)?,
            n: need(n, "n", name)?,
        },
        "e27" => Fixture::E27Lift {
            m: need(m, "m", name)?,
            n: need(n, "n", name)?,
        },
        "zero" => Fixture::Zero {
            n: need(n, "n", name)?,
            m: need(m, "m", name)?,
        },
        "lift" => {
            let path = base.ok_or_else(|| Error::InvalidParameter("`lift` needs --base".into()))?;
            let b = load(path)?;
            let lifted = catalog::lift_leibniz(&b, need(n, "n", name)?)?;
            return Ok(lifted);
        }
        _ => {
            return Err(Error::InvalidParameter(format!(
                "unknown catalog entry `{name}`"
            )))
        }
    };
    let l = fixture.build()?;
    Ok(l.with_name(fixture.to_string().replace(' ', "_")))
}

/// Identity, ideals, right-multiplication identities, regular element and
/// the Cartan and quotient theorems, collected into one report.
pub fn verify_suite(
    l: &NAlgebra,
    trials: usize,
    seed: u64,
    bound: i64,
    cap: u128,
) -> Result<TheoremReport> {
    let mut report = TheoremReport::default();
    let identity = check_fundamental_identity_with_cap(l, cap)?;
    report.push(
        "fundamental identity",
        identity.passed,
        identity.to_string(),
    );
    if !identity.passed {
        return Ok(report);
    }

    let skew = skew_check(l);
    report.push(
        "antisymmetry conditions (info)",
        true,
        format!("{:?}", skew.flags()),
    );
    let i = ideal_i(l);
    let j = ideal_j(l);
    report.push(
        "I = J",
        i == j,
        format!("dim I {}, dim J {}", i.dim(), j.dim()),
    );

    let rmult = check_rmult_identities(l, 20, seed)?;
    for (name, r) in rmult.reports() {
        report.push(name, r.passed, r.to_string());
    }

    let r = regular_search(l, trials, seed, bound)?;
    report.push("regular search (info)", true, r.to_string());
    if r.rank_upper_bound == 0 {
        report.push(
            "nondegenerate right multiplication forces I = L",
            i.is_full(),
            format!("dim I {} of {}", i.dim(), l.dim()),
        );
    }
    report.extend(check_thm31(l, &r)?);

    let null = null_component(l, &r.best_tuple)?;
    let verdict = is_cartan(l, &null)?;
    report.push(
        "null component is Cartan (info)",
        true,
        format!("{}; {verdict}", verdict.is_cartan()),
    );
    report.extend(check_prop31(l, &null)?);
    let cartan = if verdict.is_cartan() {
        report.extend(check_maximality(l, &null)?);
        Some(&null)
    } else {
        None
    };
    report.extend(verify_quotient_theorems(l, cartan, Some(&r), bound)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["leibniz"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn catalog_to_stdout() {
        let (code, out, _) = run_capture(&["catalog", "c3"]);
        assert_eq!(code, 0);
        assert_eq!(parse_algebra(&out).unwrap(), catalog::c3());
    }

    #[test]
    fn parametric_catalog() {
        let l = build_catalog("diagonal", Some(3), None, None, None, Some("2,-2,5"), None).unwrap();
        assert_eq!(l.dim(), 3);
        assert!(build_catalog("lpq", Some(3), None, None, None, None, None).is_err());
        assert!(build_catalog("nothing", None, None, None, None, None, None).is_err());
        let (code, _, err) = run_capture(&["catalog", "zero", "--n", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("--m"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(run_capture(&["check", "/nonexistent/file.alg"]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn verify_suite_on_small_fixtures() {
        for l in [catalog::c3(), catalog::d3(), catalog::a3()] {
            let r = verify_suite(&l, 30, 7, 3, DEFAULT_CASE_CAP).unwrap();
            assert!(r.passed(), "{}: {r}", l.name());
        }
    }
}
