//! Command-line front end. JSON is the machine interface; everything
//! human-readable is derived from it. Exit codes: 0 success, 1 campaign
//! violations, 2 input error, 3 cap or budget exceeded.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cubesense::constructions;
use cubesense::hypercube::InducedSubgraph;
use cubesense::measures::{self, Caps};
use cubesense::spectral::SignedMatrix;
use cubesense::verifier::{self, CampaignReport};
use cubesense::{BooleanFunction, Error};

#[derive(Parser)]
#[command(name = "cubesense", version, about = "Boolean function complexity toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute complexity measures of a Boolean function
    Measure(MeasureArgs),
    /// Build the signed hypercube matrix and spectral artifacts
    Huang(HuangArgs),
    /// Run a verification campaign
    Verify(VerifyArgs),
}

#[derive(Args)]
struct MeasureArgs {
    /// Boolean expression over x1..xn with & | ^ ! and parentheses
    #[arg(short = 'e', long = "expr", group = "input")]
    expr: Option<String>,

    /// Truth-table file (line 1: n, line 2: hex table, MSB first)
    #[arg(long = "tt", group = "input", value_name = "FILE")]
    tt: Option<String>,

    /// Named family: and, or, parity, and-of-ors, rubinstein, e3
    #[arg(long = "family", group = "input")]
    family: Option<String>,

    /// Number of variables (required for and/or/parity, optional for -e)
    #[arg(short = 'n')]
    n: Option<usize>,

    /// Family parameter k (and-of-ors, rubinstein)
    #[arg(long = "k")]
    k: Option<usize>,

    /// Family parameter depth (e3)
    #[arg(long = "depth")]
    depth: Option<usize>,

    /// Comma-separated subset of measures: s,bs,c,d,deg,approx_deg
    #[arg(long = "only", value_name = "CSV")]
    only: Option<String>,
}

#[derive(Args)]
struct HuangArgs {
    /// Matrix order parameter (dimension 2^n)
    #[arg(short = 'n')]
    n: usize,

    /// Verify the square equals n times the identity
    #[arg(long = "check-square")]
    check_square: bool,

    /// Print the full spectrum as JSON
    #[arg(long = "spectrum")]
    spectrum: bool,

    /// Comma-separated vertex indices; prints lambda1 of that principal submatrix
    #[arg(long = "submatrix", value_name = "CSV")]
    submatrix: Option<String>,

    /// Write the matrix in plain-text dense format to this file
    #[arg(long = "out", value_name = "FILE")]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Campaign name: chain, ratio, g, gl, huang, chung
    campaign: String,

    #[arg(short = 'n')]
    n: usize,

    /// Seed for sampled campaigns
    #[arg(long = "seed", default_value_t = 0)]
    seed: u64,

    /// Sample count for sampled campaigns
    #[arg(long = "samples", default_value_t = 1000)]
    samples: u64,

    /// Worker threads for the chain campaign
    #[arg(long = "jobs", default_value_t = 1)]
    jobs: usize,

    /// Degree threshold for the g campaign
    #[arg(long = "k")]
    k: Option<usize>,

    /// Write the JSON report to this file instead of standard output
    #[arg(long = "out", value_name = "FILE")]
    out: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Measure(args) => cmd_measure(args),
        Command::Huang(args) => cmd_huang(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } | Error::IterationBudget { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

/// Formats a float rounded to 12 significant digits, shortest form.
fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap();
    format!("{rounded}")
}

fn invalid(message: String) -> Error {
    Error::Invalid(message)
}

fn build_function(args: &MeasureArgs) -> Result<BooleanFunction, Error> {
    if let Some(expr) = &args.expr {
        let n = match args.n {
            Some(n) => n,
            None => infer_var_count(expr),
        };
        return cubesense::parser::parse_expression(expr, n);
    }
    if let Some(path) = &args.tt {
        let text = fs::read_to_string(path)
            .map_err(|e| invalid(format!("cannot read {path}: {e}")))?;
        return BooleanFunction::from_tt_string(&text);
    }
    if let Some(family) = &args.family {
        let need_n = || args.n.ok_or_else(|| invalid("this family needs -n".into()));
        let need_k = || args.k.ok_or_else(|| invalid("this family needs --k".into()));
        return match family.as_str() {
            "and" => Ok(constructions::and_f(need_n()?)),
            "or" => Ok(constructions::or_f(need_n()?)),
            "parity" => Ok(constructions::parity_f(need_n()?)),
            "and-of-ors" => constructions::and_of_ors(need_k()?),
            "rubinstein" => constructions::rubinstein(need_k()?),
            "e3" => constructions::e3_tree(
                args.depth
                    .ok_or_else(|| invalid("this family needs --depth".into()))?,
            ),
            other => Err(invalid(format!("unknown family: {other}"))),
        };
    }
    Err(invalid("one of -e, --tt, --family is required".into()))
}

/// Largest variable index appearing as `x<digits>` in the expression.
fn infer_var_count(expr: &str) -> usize {
    let bytes = expr.as_bytes();
    let mut best = 0usize;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' {
            let mut j = i + 1;
            let mut value = 0usize;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                value = value * 10 + (bytes[j] - b'0') as usize;
                j += 1;
            }
            if j > i + 1 {
                best = best.max(value);
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

fn cmd_measure(args: MeasureArgs) -> Result<ExitCode, Error> {
    let f = build_function(&args)?;
    let caps = Caps::default();
    let only: Option<Vec<&str>> = args
        .only
        .as_deref()
        .map(|csv| csv.split(',').map(str::trim).collect());
    if let Some(names) = &only {
        const KNOWN: [&str; 6] = ["s", "bs", "c", "d", "deg", "approx_deg"];
        for name in names {
            if !KNOWN.contains(name) {
                return Err(invalid(format!("unknown measure: {name}")));
            }
        }
    }
    let report = measures::report(&f, &caps, only.as_deref());
    if let Some(names) = &only {
        // an explicitly requested measure must be present
        let missing = names.iter().find(|&&name| match name {
            "s" => report.s.is_none(),
            "bs" => report.bs.is_none(),
            "c" => report.c.is_none(),
            "d" => report.d.is_none(),
            "deg" => report.deg.is_none(),
            _ => report.approx_deg.is_none(),
        });
        if let Some(&name) = missing {
            return Err(Error::CapExceeded {
                operation: match name {
                    "bs" => "block_sensitivity",
                    "c" => "certificate_complexity",
                    "d" => "decision_tree_depth",
                    _ => "approx_degree",
                },
                n: f.n(),
                cap: 0,
            });
        }
    }
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(ExitCode::SUCCESS)
}

fn cmd_huang(args: HuangArgs) -> Result<ExitCode, Error> {
    let a = SignedMatrix::huang(args.n)?;
    if let Some(path) = &args.out {
        fs::write(path, a.to_text()).map_err(|e| invalid(format!("cannot write {path}: {e}")))?;
        println!("matrix written to {path}");
    }
    if args.check_square {
        let ok = a.square_is_identity_times(args.n as i64);
        println!("A^2={}I: {}", args.n, if ok { "PASS" } else { "FAIL" });
        if !ok {
            return Ok(ExitCode::FAILURE);
        }
    }
    if args.spectrum {
        let spectrum = a.full_spectrum()?;
        let formatted: Vec<String> = spectrum.iter().map(|&x| sig12(x)).collect();
        println!(
            "{}",
            serde_json::json!({ "dim": a.dim(), "eigenvalues": formatted })
        );
    }
    if let Some(csv) = &args.submatrix {
        let vertices: Vec<usize> = csv
            .split(',')
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| invalid(format!("bad vertex index: {s}")))
            })
            .collect::<Result<_, _>>()?;
        let b = a.principal_submatrix(&vertices)?;
        println!("lambda1 = {}", sig12(b.lambda1()?));
        let sub = InducedSubgraph::from_vertices(args.n, &vertices)?;
        println!("max_degree = {}", sub.max_degree());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let report: CampaignReport = match args.campaign.as_str() {
        "chain" => verifier::verify_chain(args.n, args.seed, args.samples, args.jobs)?,
        "ratio" => verifier::extremal_ratio(args.n)?,
        "g" => {
            let k = args
                .k
                .unwrap_or_else(|| (args.n as f64).sqrt().ceil() as usize);
            verifier::verify_g(args.n, k)?
        }
        "gl" => verifier::verify_gl_equivalence(args.n)?,
        "huang" => verifier::verify_huang(args.n, args.seed, args.samples)?,
        "chung" => verifier::verify_chung(args.n)?,
        other => return Err(invalid(format!("unknown campaign: {other}"))),
    };
    let json = serde_json::to_string_pretty(&report).unwrap();
    match &args.out {
        Some(path) => {
            fs::write(path, &json).map_err(|e| invalid(format!("cannot write {path}: {e}")))?
        }
        None => println!("{json}"),
    }
    eprintln!("{}", report.summary());
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
