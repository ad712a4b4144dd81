//! `ty`: Drinfeld polynomials, trapezium patterns, diagrams and relation checks for
//! twisted Yangians acting on symplectic and orthogonal modules.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use twisted_yangian::algebra::{Case, IndexScheme};
use twisted_yangian::combinatorics::{count_patterns, enumerate_patterns, lambda0, Diagram};
use twisted_yangian::report::{Check, RunReport};
use twisted_yangian::rep::HighestWeight;
use twisted_yangian::skew::{build_skew, check_irreducible, check_restriction};
use twisted_yangian::sklyanin::checks::{check_quaternary, check_symmetry, sample_pairs, samples};
use twisted_yangian::suites::{self, Method};
use twisted_yangian::{Error, Result};

#[derive(Parser)]
#[command(name = "ty", version, about = "Exact computations with twisted Yangians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    /// Leave `elapsed_ms` out of the report.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Drinfeld polynomials of the skew representation V(λ)^+_μ of Y(sp_{2n-2m}).
    Drinfeld {
        #[command(flatten)]
        w: Weights,
        /// diagram, closed-form, oracle or all.
        #[arg(long, default_value = "diagram")]
        method: String,
    },
    /// Run a verification suite.
    Verify(Verify),
    /// Trapezium patterns from λ down to μ.
    Patterns {
        #[command(flatten)]
        w: Weights,
        #[arg(long, value_enum, default_value_t = Mode::Count)]
        mode: Mode,
    },
    /// The infinite diagram Γ(λ) lifted by `shift` rows.
    Diagram {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
        #[arg(long)]
        partition: bool,
    },
}

#[derive(Args, Clone)]
struct Weights {
    /// Comma-separated, non-positive and weakly decreasing.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    mu: String,
    /// Read the weights as positive partitions ν, meaning (−ν_n, ..., −ν_1).
    #[arg(long)]
    partition: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Count,
    Enumerate,
    Lambda0,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Quaternary,
    Symmetry,
    Sylvester,
    Minors,
    Skew,
    Irreducible,
    Omega,
}

#[derive(Args)]
struct Verify {
    #[arg(long, value_enum)]
    suite: Suite,
    /// sp or o.
    #[arg(long, default_value = "sp")]
    case: String,
    /// Half-rank; defaults to the length of λ, or 1.
    #[arg(long)]
    n: Option<usize>,
    /// Matrix size N. Defaults to 2n, or 2n+1 for o.
    #[arg(long)]
    big_n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Module V(λ); the vector representation when omitted.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    mu: String,
    #[arg(long)]
    partition: bool,
    #[arg(long, default_value_t = 5)]
    samples: usize,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    seed: i64,
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[arg(long, default_value_t = 4)]
    max_k: usize,
}

fn parse_weight(s: &str, partition: bool) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let v = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad weight entry {x:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if partition {
        return Ok(v.iter().rev().map(|x| -x).collect());
    }
    Ok(v)
}

/// What a command produced, before timing is attached.
struct Outcome {
    params: Value,
    results: Value,
    checks: Vec<Check>,
    text: Option<String>,
}

fn drinfeld(w: &Weights, method: &str) -> Result<Outcome> {
    let (lambda, mu) = (parse_weight(&w.lambda, w.partition)?, parse_weight(&w.mu, w.partition)?);
    let method_v = Method::parse(method)?;
    let (results, checks) = suites::drinfeld(&lambda, &mu, method_v)?;
    Ok(Outcome { params: json!({ "lambda": lambda, "mu": mu, "method": method }), results, checks, text: None })
}

fn patterns(w: &Weights, mode: Mode) -> Result<Outcome> {
    let (lambda, mu) = (parse_weight(&w.lambda, w.partition)?, parse_weight(&w.mu, w.partition)?);
    let params = json!({ "lambda": lambda, "mu": mu });
    let results = match mode {
        Mode::Count => {
            let c = count_patterns(&lambda, &mu)?;
            json!({ "count": u64::try_from(c).map(Value::from).unwrap_or_else(|_| Value::from(c.to_string())) })
        }
        Mode::Enumerate => {
            let all = enumerate_patterns(&lambda, &mu)?;
            let list: Vec<Value> = all.iter().map(|p| json!({ "rows": p.rows, "primed": p.primed, "weight": p.weight() })).collect();
            json!({ "count": all.len(), "patterns": list })
        }
        Mode::Lambda0 => {
            let p = lambda0(&lambda, &mu)?;
            json!({ "rows": p.rows, "primed": p.primed, "weight": p.weight() })
        }
    };
    Ok(Outcome { params, results, checks: Vec::new(), text: None })
}

fn diagram(lambda: &str, shift: i64, partition: bool) -> Result<Outcome> {
    let l = parse_weight(lambda, partition)?;
    let d = Diagram::new(&l)?;
    let (lo, hi) = d.row_range();
    let rows: Vec<Value> = (lo - shift..=hi - shift)
        .map(|i| {
            let (a, b) = d.shifted_row(i, shift).expect("row in range");
            json!({ "row": i, "from": a.to_string(), "to": b.to_string() })
        })
        .collect();
    let render = d.render(shift);
    Ok(Outcome {
        params: json!({ "lambda": l, "shift": shift }),
        results: json!({ "rows": rows, "render": render }),
        checks: Vec::new(),
        text: Some(render),
    })
}

fn verify(v: &Verify) -> Result<Outcome> {
    let case = Case::parse(&v.case)?;
    let lambda = v.lambda.as_deref().map(|s| parse_weight(s, v.partition)).transpose()?;
    let mu = parse_weight(&v.mu, v.partition)?;
    let n = v.n.or(lambda.as_ref().map(|l| l.len())).unwrap_or(1);
    let big_n = v.big_n.unwrap_or(match case {
        Case::Symplectic => 2 * n,
        Case::Orthogonal => 2 * n + 1,
    });
    let scheme = IndexScheme::new(case, big_n)?;
    let mut params = json!({ "case": case.short(), "N": big_n, "seed": v.seed });
    if let Some(l) = &lambda {
        params["lambda"] = json!(l);
    }
    let mut results = json!({});
    let checks = match v.suite {
        Suite::Omega => {
            params = json!({ "max_n": v.max_n });
            suites::omega(v.max_n)
        }
        Suite::Quaternary | Suite::Symmetry => {
            params["samples"] = json!(v.samples);
            let fam = suites::evaluation(case, big_n, lambda.as_deref())?;
            results["dim"] = json!(fam.rep().dim());
            let keep = if v.suite == Suite::Quaternary { "quaternary" } else { "symmetry" };
            suites::relations(&fam, v.samples, v.seed).into_iter().filter(|c| c.name == keep).collect()
        }
        Suite::Sylvester => {
            params["m"] = json!(v.m);
            let fam = suites::evaluation(case, big_n, lambda.as_deref())?;
            results["dim"] = json!(fam.rep().dim());
            suites::sylvester(fam, v.m, v.seed)?
        }
        Suite::Minors => {
            params["max_k"] = json!(v.max_k);
            let fam = suites::evaluation(case, big_n, lambda.as_deref())?;
            let (shapes, check) = suites::minor_routes(&fam, v.max_k, v.seed);
            results = json!({ "dim": fam.rep().dim(), "shapes": shapes });
            vec![check]
        }
        Suite::Skew | Suite::Irreducible => {
            let l = lambda.clone().ok_or_else(|| Error::Parse("--lambda is required for this suite".into()))?;
            params["mu"] = json!(mu);
            let sm = build_skew(&HighestWeight::from_ints(&l), &HighestWeight::from_ints(&mu), &scheme)?;
            match (v.suite, case) {
                (Suite::Skew, Case::Symplectic) => {
                    let (summary, checks) = suites::skew_checks(&sm, v.seed)?;
                    results = summary;
                    checks
                }
                (Suite::Skew, Case::Orthogonal) => {
                    // no highest-weight data in the orthogonal case
                    results = json!({ "dim": sm.dim() });
                    vec![
                        Check::from_result("restriction", "u^-1 coefficient acts as F_ab", check_restriction(&sm)),
                        Check::from_result("quaternary", "quaternary relation", check_quaternary(sm.family(), &sample_pairs(v.samples, v.seed))),
                        Check::from_result("symmetry", "symmetry relation", check_symmetry(sm.family(), &samples(v.samples, v.seed))),
                    ]
                }
                (_, Case::Symplectic) => {
                    let (summary, check) = suites::irreducible(&sm)?;
                    results = summary;
                    vec![check]
                }
                (_, Case::Orthogonal) => {
                    // recorded, not interpreted
                    results = serde_json::to_value(check_irreducible(&sm)?).expect("serializes");
                    Vec::new()
                }
            }
        }
    };
    Ok(Outcome { params, results, checks, text: None })
}

fn input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_) | Error::InvalidWeight(_) | Error::EmptySkewSpace(_) | Error::OutOfRange(_) | Error::SizeLimit { .. } | Error::InvalidIndex(_)
    )
}

fn text_report(r: &RunReport, body: Option<&str>) -> String {
    let mut out = format!("{}  {}\n", r.command, r.params);
    match body {
        Some(b) => out.push_str(b),
        None if r.results != json!({}) => {
            out.push_str(&serde_json::to_string_pretty(&r.results).expect("serializes"));
            out.push('\n');
        }
        None => {}
    }
    for c in &r.checks {
        out.push_str(&format!("{} {}  [{}]", if c.pass { "PASS" } else { "FAIL" }, c.name, c.paper_ref));
        if let Some(w) = &c.witness {
            out.push_str(&format!("  {w}"));
        }
        out.push('\n');
    }
    if let Some(ms) = r.elapsed_ms {
        out.push_str(&format!("{ms} ms\n"));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, outcome) = match &cli.command {
        Command::Drinfeld { w, method } => ("drinfeld", drinfeld(w, method)),
        Command::Verify(v) => ("verify", verify(v)),
        Command::Patterns { w, mode } => ("patterns", patterns(w, *mode)),
        Command::Diagram { lambda, shift, partition } => ("diagram", diagram(lambda, *shift, *partition)),
    };
    let o = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if input_error(&e) { 2 } else { 1 });
        }
    };
    let suite_name = match &cli.command {
        Command::Verify(v) => format!("verify {}", v.suite.to_possible_value().expect("named").get_name()),
        _ => name.to_string(),
    };
    let report = RunReport {
        command: suite_name,
        params: o.params,
        results: o.results,
        checks: o.checks,
        elapsed_ms: (!cli.no_timing).then(|| start.elapsed().as_millis() as u64),
    };
    if cli.text {
        print!("{}", text_report(&report, o.text.as_deref()));
    } else {
        println!("{}", report.to_json());
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
