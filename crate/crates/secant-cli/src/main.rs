//! `secant`: compute secant-plane invariants exactly and run the
//! cross-method verification suites.
//!
//! Every value is emitted as an exact rational string ("p/q", or the bare
//! integer when the denominator is 1), as JSON or CSV on stdout.
//! Exit codes: 0 on success, 1 when a verification check fails, 2 for
//! usage or parameter errors.

use clap::{Parser, Subcommand, ValueEnum};
use secant_core::closed_forms as cf;
use secant_core::exact::{exact_str, factorial, Rational};
use secant_core::porteous;
use secant_core::suites::{self, Bounds};
use secant_core::Error;
use serde_json::{json, Value};
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "secant", version, about = "Exact secant-plane invariants of linear series on curves")]
struct Cli {
    /// Output format for stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for the grid suites (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Table of secant-plane counts N_d by generating function and by the
    /// alternating binomial sum, with agreement flags.
    Nd {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        m: i64,
        #[arg(long = "d-max")]
        d_max: i64,
    },
    /// The tautological coefficients P_alpha, P_beta, P_c with per-route
    /// values, plus the renormalization relation residual at s = 2d - 1.
    Coeffs {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        m: i64,
    },
    /// Counts of series with exceptional secant planes: either the r = 1
    /// family (--a, --d; both routes), or the general linear form with
    /// caller-supplied A and A' (--d --r --s --g --m --A --Aprime).
    Nprime {
        #[arg(long)]
        a: Option<i64>,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        r: Option<i64>,
        #[arg(long)]
        s: Option<i64>,
        #[arg(long)]
        g: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        /// Exact rational, e.g. 27 or 27/2.
        #[arg(long = "A", allow_hyphen_values = true)]
        a_count: Option<String>,
        /// Exact rational, e.g. 21 or 21/2.
        #[arg(long = "Aprime", allow_hyphen_values = true)]
        aprime_count: Option<String>,
    },
    /// Brute-force intersection oracle: the reduced determinant degree as a
    /// polynomial in m and γ = 2g - 2, and the count it evaluates to.
    Oracle {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        m: i64,
        /// Override the incidence cap (also settable via SECANT_ORACLE_CAP).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// r = s plane counts A and A' from the bivariate coefficient
    /// extraction, with the applied sign normalization in the record.
    MacdonaldRs {
        #[arg(long)]
        s: i64,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        m: i64,
    },
    /// Run a named verification suite (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long = "d-max")]
        d_max: Option<i64>,
        #[arg(long = "g-max")]
        g_max: Option<i64>,
        #[arg(long = "m-max")]
        m_max: Option<i64>,
        #[arg(long = "n-max")]
        n_max: Option<i64>,
        #[arg(long = "a-max")]
        a_max: Option<i64>,
        #[arg(long = "tree-d-max")]
        tree_d_max: Option<i64>,
        #[arg(long)]
        order: Option<i64>,
    },
}

/// One output row: ordered key/value pairs, shared shape per command.
type Row = Vec<(&'static str, Value)>;

struct Output {
    command: &'static str,
    params: Value,
    results: Vec<Row>,
    failures: Vec<Value>,
}

fn rational_value(r: &Rational) -> Value {
    Value::String(exact_str(r))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // A second build_global in one process is an error; ignore it.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let output = match run(cli.command) {
        Ok(output) => output,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    match cli.format {
        Format::Json => print_json(&output),
        Format::Csv => print_csv(&output),
    }
    if output.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: Command) -> Result<Output, Error> {
    match command {
        Command::Nd { g, m, d_max } => cmd_nd(g, m, d_max),
        Command::Coeffs { d, g, m } => cmd_coeffs(d, g, m),
        Command::Nprime {
            a,
            d,
            r,
            s,
            g,
            m,
            a_count,
            aprime_count,
        } => cmd_nprime(a, d, r, s, g, m, a_count, aprime_count),
        Command::Oracle { d, g, m, cap } => cmd_oracle(d, g, m, cap),
        Command::MacdonaldRs { s, g, m } => cmd_macdonald_rs(s, g, m),
        Command::Verify {
            suite,
            d_max,
            g_max,
            m_max,
            n_max,
            a_max,
            tree_d_max,
            order,
        } => cmd_verify(suite, d_max, g_max, m_max, n_max, a_max, tree_d_max, order),
    }
}

fn cmd_nd(g: i64, m: i64, d_max: i64) -> Result<Output, Error> {
    if d_max < 0 || g < 0 {
        return Err(Error::Precondition {
            op: "nd",
            message: format!("need d-max >= 0 and g >= 0, got d-max = {}, g = {}", d_max, g),
        });
    }
    let series = secant_core::series::secant_gf(g, m, d_max as usize);
    let mut results = Vec::new();
    let mut failures = Vec::new();
    for d in 0..=d_max {
        let gf = series.coeff(d as usize).clone();
        let closed = cf::nd_acgh(d, g, m);
        let agree = gf == closed;
        if !agree {
            failures.push(json!({
                "case": format!("d={} g={} m={}", d, g, m),
                "expected": exact_str(&closed),
                "actual": exact_str(&gf),
                "methods": "generating_function vs alternating_sum",
            }));
        }
        results.push(vec![
            ("d", json!(d)),
            ("nd_gf", rational_value(&gf)),
            ("nd_acgh", rational_value(&closed)),
            ("agree", json!(agree)),
        ]);
    }
    Ok(Output {
        command: "nd",
        params: json!({"g": g, "m": m, "d_max": d_max}),
        results,
        failures,
    })
}

fn cmd_coeffs(d: i64, g: i64, m: i64) -> Result<Output, Error> {
    if d < 0 || g < 0 {
        return Err(Error::Precondition {
            op: "coeffs",
            message: format!("need d >= 0 and g >= 0, got d = {}, g = {}", d, g),
        });
    }
    let mut results = Vec::new();
    let mut failures = Vec::new();
    let mut push = |name: &'static str,
                    explicit: Rational,
                    hyp: Option<Rational>,
                    gf: Rational,
                    failures: &mut Vec<Value>| {
        let hyp_agrees = hyp.as_ref().is_none_or(|h| h == &explicit);
        let agree = hyp_agrees && gf == explicit;
        if !agree {
            failures.push(json!({
                "case": format!("{} d={} g={} m={}", name, d, g, m),
                "expected": exact_str(&explicit),
                "actual": format!(
                    "hypergeometric {}, generating_function {}",
                    hyp.as_ref().map_or_else(|| "n/a".into(), exact_str),
                    exact_str(&gf)
                ),
                "methods": "explicit vs hypergeometric vs generating_function",
            }));
        }
        results.push(vec![
            ("coefficient", json!(name)),
            ("explicit", rational_value(&explicit)),
            (
                "hypergeometric",
                hyp.as_ref().map_or(Value::Null, rational_value),
            ),
            ("generating_function", rational_value(&gf)),
            ("agree", json!(agree)),
        ]);
    };
    let pa = cf::p_alpha(d, g, m)?;
    push(
        "p_alpha",
        pa,
        cf::p_alpha_hypergeometric(d, g, m),
        cf::p_alpha_gf(d, g, m),
        &mut failures,
    );
    let pb = cf::p_beta(d, g, m)?;
    push(
        "p_beta",
        pb,
        cf::p_beta_hypergeometric(d, g, m),
        cf::p_beta_gf(d, g, m),
        &mut failures,
    );
    let pc = cf::p_c(d, g, m)?;
    push(
        "p_c",
        pc,
        cf::p_c_hypergeometric(d, g, m),
        -cf::nd_gf(d, g, m),
        &mut failures,
    );
    let residual = cf::obveqn_residual(d, g, m)?;
    let holds = residual == secant_core::exact::rat(0);
    if !holds {
        failures.push(json!({
            "case": format!("obveqn d={} g={} m={} s={}", d, g, m, 2 * d - 1),
            "expected": "0",
            "actual": exact_str(&residual),
            "methods": "renormalization_relation",
        }));
    }
    results.push(vec![
        ("coefficient", json!(format!("obveqn(s={})", 2 * d - 1))),
        ("explicit", rational_value(&residual)),
        ("hypergeometric", Value::Null),
        ("generating_function", Value::Null),
        ("agree", json!(holds)),
    ]);
    Ok(Output {
        command: "coeffs",
        params: json!({"d": d, "g": g, "m": m}),
        results,
        failures,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_nprime(
    a: Option<i64>,
    d: i64,
    r: Option<i64>,
    s: Option<i64>,
    g: Option<i64>,
    m: Option<i64>,
    a_count: Option<String>,
    aprime_count: Option<String>,
) -> Result<Output, Error> {
    if let Some(a) = a {
        // r = 1 family: both routes.
        let p = cf::RhoOneParams::new(a, d)?;
        let induced = p.induced();
        let a_val = cf::nd_acgh(d, induced.g, induced.m);
        let ap_val = cf::nd_acgh(d + 1, induced.g, induced.m + 1);
        let general = cf::nprime_general(&induced, &a_val, &ap_val)?;
        let hyper = cf::nprime_r1(&p);
        let agree = general == hyper;
        let mut failures = Vec::new();
        if !agree {
            failures.push(json!({
                "case": format!("a={} d={}", a, d),
                "expected": exact_str(&general),
                "actual": exact_str(&hyper),
                "methods": "test_family_linear_form vs hypergeometric_r1",
            }));
        }
        let results = vec![vec![
            ("nprime_r1", rational_value(&hyper)),
            ("nprime_general", rational_value(&general)),
            ("g", json!(induced.g)),
            ("m", json!(induced.m)),
            ("s", json!(induced.s)),
            ("agree", json!(agree)),
        ]];
        return Ok(Output {
            command: "nprime",
            params: json!({"a": a, "d": d}),
            results,
            failures,
        });
    }
    // General form: evaluate the linear form at the supplied counts.
    let (Some(r), Some(s), Some(g), Some(m)) = (r, s, g, m) else {
        return Err(Error::Precondition {
            op: "nprime",
            message: "general form needs --r, --s, --g, --m, --A and --Aprime (or use --a with --d)"
                .into(),
        });
    };
    let (Some(a_raw), Some(ap_raw)) = (a_count, aprime_count) else {
        return Err(Error::Precondition {
            op: "nprime",
            message: "general r needs caller-supplied --A and --Aprime".into(),
        });
    };
    let parse = |label: &'static str, raw: &str| {
        Rational::from_str(raw).map_err(|e| Error::Precondition {
            op: "nprime",
            message: format!("{} is not an exact rational ({}): {}", label, raw, e),
        })
    };
    let a_val = parse("--A", &a_raw)?;
    let ap_val = parse("--Aprime", &ap_raw)?;
    let params = cf::SecantParams::new(d, r, s, g, m)?;
    let value = cf::nprime_linear_form(d, s, g, m, &a_val, &ap_val)?;
    let results = vec![vec![
        ("nprime_linear_form", rational_value(&value)),
        ("rho", json!(params.rho())),
        ("mu", json!(params.mu())),
        ("enumerative", json!(params.rho() == 1 && params.mu() == -1)),
    ]];
    Ok(Output {
        command: "nprime",
        params: json!({
            "d": d, "r": r, "s": s, "g": g, "m": m,
            "A": exact_str(&a_val), "Aprime": exact_str(&ap_val),
        }),
        results,
        failures: Vec::new(),
    })
}

fn cmd_oracle(d: usize, g: i64, m: i64, cap: Option<usize>) -> Result<Output, Error> {
    if g < 0 {
        return Err(Error::Precondition {
            op: "oracle",
            message: format!("genus must be >= 0, got {}", g),
        });
    }
    let cap = cap.unwrap_or_else(porteous::oracle_cap);
    let poly = porteous::porteous_degree_with_cap(d, cap)?;
    let degree_value = poly.eval(m, g);
    let value = &degree_value / factorial(d as u64);
    let closed = cf::nd_acgh(d as i64, g, m);
    let agree = value == closed;
    let mut failures = Vec::new();
    if !agree {
        failures.push(json!({
            "case": format!("d={} g={} m={}", d, g, m),
            "expected": exact_str(&closed),
            "actual": exact_str(&value),
            "methods": "porteous_oracle vs alternating_sum",
        }));
    }
    let results = vec![vec![
        ("polynomial", json!(poly.to_string())),
        ("degree_value", rational_value(&degree_value)),
        ("value", rational_value(&value)),
        ("nd_acgh", rational_value(&closed)),
        ("agree", json!(agree)),
    ]];
    Ok(Output {
        command: "oracle",
        params: json!({"d": d, "g": g, "m": m, "gamma": 2 * g - 2}),
        results,
        failures,
    })
}

fn cmd_macdonald_rs(s: i64, g: i64, m: i64) -> Result<Output, Error> {
    if s < 1 || g < 0 {
        return Err(Error::Precondition {
            op: "macdonald-rs",
            message: format!("need s >= 1 and g >= 0, got s = {}, g = {}", s, g),
        });
    }
    let a = cf::macdonald_rs_a(s, g, m);
    let aprime = cf::macdonald_rs_aprime(s, g, m);
    let results = vec![vec![
        ("a", rational_value(&a)),
        ("aprime", rational_value(&aprime)),
        ("sign", json!(cf::MACDONALD_RS_SIGN.to_string())),
    ]];
    Ok(Output {
        command: "macdonald-rs",
        params: json!({"s": s, "g": g, "m": m}),
        results,
        failures: Vec::new(),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: String,
    d_max: Option<i64>,
    g_max: Option<i64>,
    m_max: Option<i64>,
    n_max: Option<i64>,
    a_max: Option<i64>,
    tree_d_max: Option<i64>,
    order: Option<i64>,
) -> Result<Output, Error> {
    let mut bounds = Bounds::new();
    let pairs = [
        ("d_max", d_max),
        ("g_max", g_max),
        ("m_max", m_max),
        ("n_max", n_max),
        ("a_max", a_max),
        ("tree_d_max", tree_d_max),
        ("order", order),
    ];
    for (key, value) in pairs {
        if let Some(v) = value {
            bounds.insert(key.to_string(), v);
        }
    }
    let reports = if suite == "all" {
        suites::run_all(&bounds)?
    } else {
        vec![suites::run_suite(&suite, &bounds)?]
    };
    let mut results = Vec::new();
    let mut failures = Vec::new();
    for report in &reports {
        results.push(vec![
            ("suite", json!(report.suite_name)),
            ("cases_run", json!(report.cases_run)),
            ("failures", json!(report.failures.len())),
            ("elapsed_ms", json!(report.elapsed_ms)),
            ("passed", json!(report.passed())),
        ]);
        for f in &report.failures {
            failures.push(json!({
                "suite": report.suite_name,
                "case": f.case,
                "expected": f.expected,
                "actual": f.actual,
                "methods": f.methods,
            }));
        }
    }
    Ok(Output {
        command: "verify",
        params: json!({"suite": suite, "bounds": bounds}),
        results,
        failures,
    })
}

fn print_json(output: &Output) {
    let results: Vec<Value> = output
        .results
        .iter()
        .map(|row| Value::Object(row.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()))
        .collect();
    let doc = json!({
        "command": output.command,
        "params": output.params,
        "results": results,
        "failures": output.failures,
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
}

fn csv_escape(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => format!("\"{}\"", s.replace('"', "\"\"")),
        other => format!("\"{}\"", other.to_string().replace('"', "\"\"")),
    }
}

fn print_csv(output: &Output) {
    if let Some(first) = output.results.first() {
        let header: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
        println!("{}", header.join(","));
        for row in &output.results {
            let line: Vec<String> = row.iter().map(|(_, v)| csv_escape(v)).collect();
            println!("{}", line.join(","));
        }
    }
    if !output.failures.is_empty() {
        println!();
        println!("case,expected,actual,methods");
        for f in &output.failures {
            let get = |k: &str| csv_escape(f.get(k).unwrap_or(&Value::Null));
            println!(
                "{},{},{},{}",
                get("case"),
                get("expected"),
                get("actual"),
                get("methods")
            );
        }
    }
}
