use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use chaundy::bezout::{self, BezoutSolution};
use chaundy::identities::{second_proof_coefficients, CheckReport, Tamper};
use chaundy::numeric::{as_positive_index, parse_rational, to_f64, Rational};
use chaundy::special_fn::{incomplete_beta_exact, incomplete_beta_numeric_with_budget};
use chaundy::sweep::{self, IdentityKind, OutputFormat, SweepConfig};
use chaundy::Error;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NONCONVERGENCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "chaundy",
    version,
    about = "Exact Bezout pairs and binomial-sum identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct P and Q with x^(m+1) P + (1-x)^(n+1) Q = 1.
    Solve(SolveArgs),
    /// Verify an identity over a parameter grid.
    Check(CheckArgs),
    /// Print a coefficient or constant table.
    Table(TableArgs),
    /// Evaluate the incomplete beta function B_a(alpha, beta).
    Beta(BetaArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Human => OutputFormat::Human,
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMethod {
    ClosedForm,
    Recurrence,
    Euclid,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum, default_value = "closed-form")]
    method: SolveMethod,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    /// Identity name, or `all` for the full acceptance-scale suite.
    #[arg(long)]
    identity: String,
    #[arg(long, default_value = "0", value_parser = sweep::parse_range)]
    n: std::ops::RangeInclusive<usize>,
    #[arg(long, default_value = "0", value_parser = sweep::parse_range)]
    m: std::ops::RangeInclusive<usize>,
    /// k (or p for brill).
    #[arg(long, default_value = "0", value_parser = sweep::parse_range)]
    k: std::ops::RangeInclusive<usize>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long)]
    a: Option<String>,
    /// Upper arguments for brill.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Seeded random draws for parameters left unset.
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Corrupt one coefficient in every verifier (negative control).
    #[arg(long, hide = true)]
    tamper: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "mu")]
    Mu,
    #[value(name = "a_coeffs")]
    ACoeffs,
    #[value(name = "d_coeffs")]
    DCoeffs,
}

impl TableKind {
    fn name(self) -> &'static str {
        match self {
            TableKind::P => "P",
            TableKind::Q => "Q",
            TableKind::Mu => "mu",
            TableKind::ACoeffs => "a_coeffs",
            TableKind::DCoeffs => "d_coeffs",
        }
    }
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    kind: TableKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Args)]
struct BetaArgs {
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    beta: String,
    #[arg(long)]
    a: String,
    /// Subinterval budget of the adaptive quadrature.
    #[arg(long, default_value_t = chaundy::special_fn::MAX_SEGMENTS)]
    max_intervals: usize,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

fn error_exit(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        Error::NonConvergence { .. } => ExitCode::from(EXIT_NONCONVERGENCE),
        _ => ExitCode::from(EXIT_USAGE),
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn solve(args: SolveArgs) -> ExitCode {
    let sol: BezoutSolution = match args.method {
        SolveMethod::ClosedForm => bezout::closed_form(args.n, args.m),
        SolveMethod::Recurrence => bezout::recurrence_solution(args.n, args.m),
        SolveMethod::Euclid => bezout::euclid_solution(args.n, args.m),
    };
    let residual = sol.residual();
    let mu = bezout::mu(args.n, args.m).to_string();
    let p = sol.p.coeff_strings();
    let q = sol.q.coeff_strings();
    let mut out = io::stdout().lock();
    let _ = match args.format {
        Format::Json => writeln!(
            out,
            "{}",
            json!({"P": p, "Q": q, "mu": mu, "residual": residual.to_string()})
        ),
        Format::Csv => {
            let mut s = String::from("poly,k,coeff\n");
            for (name, cs) in [("P", &p), ("Q", &q)] {
                for (k, c) in cs.iter().enumerate() {
                    s.push_str(&format!("{name},{k},{c}\n"));
                }
            }
            s.push_str(&format!("mu,0,{mu}\nresidual,0,{residual}"));
            writeln!(out, "{s}")
        }
        Format::Human => writeln!(
            out,
            "n = {}, m = {} ({})\nP = {}\nQ = {}\nP coefficients: [{}]\nQ coefficients: [{}]\nmu = {mu}\nresidual = {residual}",
            args.n,
            args.m,
            sol.method.name(),
            sol.p,
            sol.q,
            p.join(", "),
            q.join(", "),
        ),
    };
    if residual.is_zero() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn parse_list(v: &Option<String>) -> Result<Option<Vec<Rational>>, Error> {
    v.as_deref().map(sweep::parse_value_list).transpose()
}

fn check(args: CheckArgs) -> ExitCode {
    let format = OutputFormat::from(args.format);
    let tamper = args.tamper.then(Tamper::unit);
    let configs = if args.identity == "all" {
        let mut suite = sweep::standard_suite(args.seed, args.jobs);
        for c in &mut suite {
            c.tamper = tamper.clone();
        }
        suite
    } else {
        let identity = match args.identity.parse::<IdentityKind>() {
            Ok(k) => k,
            Err(e) => return error_exit(&e),
        };
        let lists = (|| {
            Ok::<_, Error>((
                parse_list(&args.alpha)?,
                parse_list(&args.beta)?,
                parse_list(&args.a)?,
                parse_list(&args.x)?,
            ))
        })();
        let (alpha, beta, a, x) = match lists {
            Ok(l) => l,
            Err(e) => return error_exit(&e),
        };
        let mut c = SweepConfig::new(identity)
            .grid(args.n.clone(), args.m.clone())
            .with_k(args.k.clone())
            .with_samples(args.samples, args.seed)
            .with_jobs(args.jobs);
        c.alpha = alpha;
        c.beta = beta;
        c.a = a;
        c.x = x;
        c.tamper = tamper;
        vec![c]
    };
    let mut out = io::stdout().lock();
    if let OutputFormat::Csv = format {
        let _ = writeln!(out, "{}", sweep::CSV_HEADER);
    }
    let mut all: Vec<CheckReport> = Vec::new();
    for config in &configs {
        let reports = match sweep::run_sweep(config) {
            Ok(r) => r,
            Err(e) => return error_exit(&e),
        };
        for r in &reports {
            let _ = writeln!(out, "{}", sweep::render_report(r, format));
        }
        if configs.len() > 1 {
            let line = format!("{}: {}", config.identity, sweep::summary(&reports));
            match format {
                OutputFormat::Human => {
                    let _ = writeln!(out, "{line}");
                }
                _ => eprintln!("{line}"),
            }
        }
        all.extend(reports);
    }
    let line = sweep::summary(&all);
    match format {
        OutputFormat::Human => {
            let _ = writeln!(out, "{line}");
        }
        _ => eprintln!("{line}"),
    }
    if all.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn table(args: TableArgs) -> ExitCode {
    let (n, m) = (args.n, args.m);
    let values: Vec<String> = match args.kind {
        TableKind::P => bezout::closed_form(n, m).p.coeff_strings(),
        TableKind::Q => bezout::closed_form(n, m).q.coeff_strings(),
        TableKind::Mu => vec![bezout::mu(n, m).to_string()],
        TableKind::ACoeffs => strings(&second_proof_coefficients(n, m).a),
        TableKind::DCoeffs => strings(&second_proof_coefficients(n, m).d),
    };
    let mut out = io::stdout().lock();
    let _ = match args.format {
        Format::Human => writeln!(out, "{}", values.join(", ")),
        Format::Json => writeln!(
            out,
            "{}",
            json!({"kind": args.kind.name(), "n": n, "m": m, "values": values})
        ),
        Format::Csv => {
            let rows: Vec<String> = values
                .iter()
                .enumerate()
                .map(|(k, v)| format!("{k},{v}"))
                .collect();
            writeln!(out, "k,{}\n{}", args.kind.name(), rows.join("\n"))
        }
    };
    ExitCode::SUCCESS
}

fn beta(args: BetaArgs) -> ExitCode {
    let parsed = (|| {
        Ok::<_, Error>((
            parse_rational(&args.alpha)?,
            parse_rational(&args.beta)?,
            parse_rational(&args.a)?,
        ))
    })();
    let (x, y, a) = match parsed {
        Ok(v) => v,
        Err(e) => return error_exit(&e),
    };
    let numeric = match incomplete_beta_numeric_with_budget(
        to_f64(&x),
        to_f64(&y),
        to_f64(&a),
        args.max_intervals,
    ) {
        Ok(v) => v,
        Err(e) => return error_exit(&e),
    };
    let exact = match (as_positive_index(&x), as_positive_index(&y)) {
        (Some(p), Some(q)) => incomplete_beta_exact(p, q).ok().map(|poly| poly.eval(&a)),
        _ => None,
    };
    let mut out = io::stdout().lock();
    let _ = match args.format {
        Format::Json => writeln!(
            out,
            "{}",
            json!({
                "alpha": x.to_string(),
                "beta": y.to_string(),
                "a": a.to_string(),
                "numeric": numeric,
                "exact": exact.as_ref().map(ToString::to_string),
            })
        ),
        Format::Csv => writeln!(
            out,
            "alpha,beta,a,numeric,exact\n{x},{y},{a},{numeric:e},{}",
            exact.as_ref().map(ToString::to_string).unwrap_or_default()
        ),
        Format::Human => match &exact {
            Some(q) => writeln!(out, "B_{a}({x}, {y}) = {q} ~ {numeric:.17e}"),
            None => writeln!(out, "B_{a}({x}, {y}) ~ {numeric:.17e}"),
        },
    };
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve(a) => solve(a),
        Command::Check(a) => check(a),
        Command::Table(a) => table(a),
        Command::Beta(a) => beta(a),
    }
}
