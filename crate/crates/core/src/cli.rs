//! The `pathlat` command line.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::acceptance;
use crate::chains::{self, mobius_power, zeta_power, Evaluator, Method, DEFAULT_CAP};
use crate::counting::{interval_count, interval_count_lenient};
use crate::error::{Error, Result};
use crate::filling::filling_report;
use crate::oeis;
use crate::oracle::{EnumFilter, Oracle, OracleConfig};
use crate::path::{classify, parse_path, path_stats, to_kseq, Path};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFTEST: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "pathlat", version, about = "Exact counting in the lattice of binary paths")]
struct Cli {
    /// Print one JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Bound on enumerated interval sizes.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Heights, valleys, peaks, class, filling and degree of a path.
    Stats { path: String },
    /// Cardinality of the interval [P, Q].
    Interval {
        lo: String,
        hi: String,
        /// Report 0 for incomparable pairs instead of failing.
        #[arg(long)]
        lenient: bool,
    },
    /// Number of minimal chains with small intervals from P to the top.
    F {
        path: String,
        /// recursive, closed or auto.
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: Method,
        /// Include the identities used by the closed evaluation.
        #[arg(long)]
        trace: bool,
    },
    /// Number of type-V multichains from a to s.
    Vcount { a: String, s: String },
    /// k-th power of the Moebius function on [P, Q].
    MobiusPower { lo: String, hi: String, k: usize },
    /// k-th power of the zeta function on [P, Q].
    ZetaPower { lo: String, hi: String, k: usize },
    /// Paths of a given length, in lexicographic order with d < u.
    Enumerate {
        n: usize,
        /// all, dyck, prefix, filling or degree=K.
        #[arg(long, default_value = "all", value_parser = parse_filter)]
        filter: EnumFilter,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Run a single criterion (1-9).
        #[arg(long)]
        criterion: Option<u8>,
    },
    /// Compare a locally computed sequence with its bundled OEIS fixture.
    Oeis {
        id: String,
        #[arg(long)]
        upto: Option<usize>,
    },
}

fn parse_method(s: &str) -> std::result::Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_filter(s: &str) -> std::result::Result<EnumFilter, String> {
    match s {
        "all" => Ok(EnumFilter::All),
        "dyck" => Ok(EnumFilter::DyckPath),
        "prefix" => Ok(EnumFilter::DyckPrefix),
        "filling" => Ok(EnumFilter::Filling),
        _ => match s.strip_prefix("degree=") {
            Some(k) => k.parse().map(EnumFilter::DegreeEquals).map_err(|e| format!("bad degree: {e}")),
            None => Err(format!("unknown filter {s:?}")),
        },
    }
}

/// The JSON document printed with `--json`. Numbers are decimal strings.
#[derive(Debug, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub inputs: Value,
    pub value: Value,
    pub method: Option<String>,
    pub elapsed_ms: f64,
}

struct Outcome {
    inputs: Value,
    value: Value,
    text: String,
    method: Option<String>,
    code: i32,
}

impl Outcome {
    fn number(inputs: Value, v: impl ToString) -> Outcome {
        let s = v.to_string();
        Outcome { inputs, value: Value::String(s.clone()), text: s, method: None, code: EXIT_OK }
    }
}

fn opt(v: Option<i32>) -> String {
    v.map_or_else(|| "-".into(), |h| h.to_string())
}

fn path_arg(text: &str) -> Result<Path> {
    parse_path(text)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::Domain(_) => EXIT_DOMAIN,
        Error::CapExceeded { .. } | Error::LimitExceeded { .. } => EXIT_CAP,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Stats { .. } => "stats",
        Command::Interval { .. } => "interval",
        Command::F { .. } => "f",
        Command::Vcount { .. } => "vcount",
        Command::MobiusPower { .. } => "mobius-power",
        Command::ZetaPower { .. } => "zeta-power",
        Command::Enumerate { .. } => "enumerate",
        Command::Selftest { .. } => "selftest",
        Command::Oeis { .. } => "oeis",
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Stats { path } => {
            let q = path_arg(path)?;
            let stats = path_stats(&q);
            let fill = filling_report(&q);
            let value = json!({
                "path": q,
                "length": q.len(),
                "heights": stats.heights,
                "valleys": stats.valleys,
                "peaks": stats.peaks,
                "lv": stats.lv,
                "hv": stats.hv,
                "class": classify(&q),
                "kseq": to_kseq(&q),
                "filling": fill.filling,
                "low_fill": fill.low_fill,
                "star_fill": fill.star_fill,
                "degree": fill.degree,
            });
            let text = format!(
                "path      {}\nheights   {:?}\nvalleys   {:?}\npeaks     {:?}\nlv, hv    {}, {}\nfilling   {}\ndegree    {}",
                q,
                stats.heights,
                stats.valleys,
                stats.peaks,
                opt(stats.lv),
                opt(stats.hv),
                fill.filling,
                fill.degree
            );
            Ok(Outcome { inputs: json!({ "path": path }), value, text, method: None, code: EXIT_OK })
        }
        Command::Interval { lo, hi, lenient } => {
            let (a, b) = (path_arg(lo)?, path_arg(hi)?);
            let v = if *lenient { interval_count_lenient(&a, &b)? } else { interval_count(&a, &b)? };
            let mut out = Outcome::number(json!({ "lo": lo, "hi": hi, "lenient": lenient }), v);
            out.method = Some("determinant".into());
            Ok(out)
        }
        Command::F { path, method, trace } => {
            let q = path_arg(path)?;
            let mut ev = Evaluator::new();
            let (v, events) = match method {
                Method::Recursive => (ev.f(&q, Method::Recursive), Vec::new()),
                _ if *trace => ev.f_traced(&q),
                m => (ev.f(&q, *m), Vec::new()),
            };
            let mut out = Outcome::number(json!({ "path": path }), &v);
            if *trace {
                out.value = json!({ "f": v.to_string(), "trace": events });
                let lines: Vec<String> = events.iter().map(|e| serde_json::to_string(e).expect("serializable")).collect();
                out.text = format!("{v}\n{}", lines.join("\n"));
            }
            out.method = Some(method.to_string());
            Ok(out)
        }
        Command::Vcount { a, s } => {
            let v = chains::v_count(&path_arg(a)?, &path_arg(s)?)?;
            Ok(Outcome::number(json!({ "a": a, "s": s }), v))
        }
        Command::MobiusPower { lo, hi, k } => {
            let v = mobius_power(&path_arg(lo)?, &path_arg(hi)?, *k, cli.cap)?;
            Ok(Outcome::number(json!({ "lo": lo, "hi": hi, "k": k, "cap": cli.cap }), v))
        }
        Command::ZetaPower { lo, hi, k } => {
            let v = zeta_power(&path_arg(lo)?, &path_arg(hi)?, *k, cli.cap)?;
            Ok(Outcome::number(json!({ "lo": lo, "hi": hi, "k": k, "cap": cli.cap }), v))
        }
        Command::Enumerate { n, filter } => {
            let paths = Oracle::new(OracleConfig::default()).enumerate_paths(*n, *filter)?;
            if paths.len() > cli.cap {
                return Err(Error::CapExceeded { cap: cli.cap });
            }
            let text = paths.iter().map(Path::to_string).collect::<Vec<_>>().join("\n");
            Ok(Outcome {
                inputs: json!({ "n": n, "filter": filter }),
                value: json!(paths),
                text,
                method: None,
                code: EXIT_OK,
            })
        }
        Command::Selftest { criterion } => {
            let reports = match criterion {
                Some(id) => vec![acceptance::run(*id)
                    .ok_or_else(|| Error::domain(format!("no criterion {id}; choose 1-9")))?],
                None => acceptance::run_all(),
            };
            let passed = reports.iter().all(|r| r.passed);
            let text = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
            Ok(Outcome {
                inputs: json!({ "criterion": criterion }),
                value: json!({ "passed": passed, "criteria": reports }),
                text,
                method: None,
                code: if passed { EXIT_OK } else { EXIT_SELFTEST },
            })
        }
        Command::Oeis { id, upto } => {
            let upto = match upto {
                Some(u) => *u,
                None => oeis::max_upto(id)?,
            };
            let r = oeis::check(id, upto)?;
            let text = if r.passed() {
                format!("PASS {} n = 0..={}", r.id, r.upto)
            } else {
                format!("FAIL {} mismatches at n = {:?}", r.id, r.mismatches)
            };
            let code = if r.passed() { EXIT_OK } else { EXIT_SELFTEST };
            Ok(Outcome { inputs: json!({ "id": id, "upto": upto }), value: json!(r), text, method: None, code })
        }
    }
}

/// Parses `argv`, runs one command and returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let start = Instant::now();
    let name = command_name(&cli.command);
    match execute(&cli) {
        Ok(o) => {
            if cli.json {
                let doc = CommandResult {
                    command: name.to_string(),
                    inputs: o.inputs,
                    value: o.value,
                    method: o.method,
                    elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
                };
                let _ = writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable"));
            } else {
                let _ = writeln!(out, "{}", o.text);
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "pathlat {name}: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("pathlat").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    #[test]
    fn filters_parse() {
        assert_eq!(parse_filter("degree=3").unwrap(), EnumFilter::DegreeEquals(3));
        assert!(parse_filter("degree=x").is_err());
        assert!(parse_filter("odd").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["f", "u3d2u3dudud4"]), (0, "514\n".into()));
        assert_eq!(call(&["f", "u3x"]).0, EXIT_PARSE);
        assert_eq!(call(&["interval", "ud", "du"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["interval", "ud", "du", "--lenient"]), (0, "0\n".into()));
        assert_eq!(call(&["zeta-power", "d8", "u8", "2", "--cap", "10"]).0, EXIT_CAP);
        assert_eq!(call(&["bogus"]).0, EXIT_PARSE);
    }
}
