//! Grid sweeps over the identity verifiers, plus output rendering shared by
//! the CLI.
//!
//! Tasks are materialized in lexicographic `(n, m, k, sample)` order before
//! dispatch, and results are collected in task order, so the report stream
//! is identical for every worker count.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bezout::verify_cross_check_with;
use crate::error::{Error, Result};
use crate::identities::{self, CheckReport, Tamper};
use crate::numeric::{parse_rational, Index, Rational};
use crate::special_fn::verify_beta_identity_with;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    BezoutCrossCheck,
    ChaundyBullard,
    Symmetry,
    Cancellation,
    Brill,
    Lemma42,
    WTelescoping,
    Remark62,
    Remark63,
    Twin,
    GammaRatio,
    Beta,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 12] = [
        IdentityKind::BezoutCrossCheck,
        IdentityKind::ChaundyBullard,
        IdentityKind::Symmetry,
        IdentityKind::Cancellation,
        IdentityKind::Brill,
        IdentityKind::Lemma42,
        IdentityKind::WTelescoping,
        IdentityKind::Remark62,
        IdentityKind::Remark63,
        IdentityKind::Twin,
        IdentityKind::GammaRatio,
        IdentityKind::Beta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::BezoutCrossCheck => "bezout-cross-check",
            IdentityKind::ChaundyBullard => "chaundy-bullard",
            IdentityKind::Symmetry => "symmetry",
            IdentityKind::Cancellation => "cancellation",
            IdentityKind::Brill => "brill",
            IdentityKind::Lemma42 => "lemma42",
            IdentityKind::WTelescoping => "w-telescoping",
            IdentityKind::Remark62 => "remark62",
            IdentityKind::Remark63 => "remark63",
            IdentityKind::Twin => "twin",
            IdentityKind::GammaRatio => "gamma-ratio",
            IdentityKind::Beta => "beta",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "second-proof" => "cancellation",
            "gamma-ratio-form" => "gamma-ratio",
            other => other,
        };
        Self::ALL
            .into_iter()
            .find(|k| k.name() == alias)
            .ok_or_else(|| Error::Domain(format!("unknown identity `{s}`")))
    }
}

/// Parses `"5"` or an inclusive `"lo..hi"`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<Index>> {
    let bad = || Error::Domain(format!("invalid range `{s}` (expected N or LO..HI)"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: Index = lo.trim().parse().map_err(|_| bad())?;
    let hi: Index = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(Error::Domain(format!("empty range `{s}`")));
    }
    Ok(lo..=hi)
}

/// Comma-separated rational literals and inclusive integer ranges:
/// `"0.7"`, `"1/3,2"`, `"1..5"`.
pub fn parse_value_list(s: &str) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        if item.contains("..") {
            out.extend(parse_range(item)?.map(|v| Rational::from_integer(BigInt::from(v))));
        } else {
            out.push(parse_rational(item)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub identity: IdentityKind,
    pub n: RangeInclusive<Index>,
    pub m: RangeInclusive<Index>,
    pub k: RangeInclusive<Index>,
    /// `alpha` values (also the Brill upper argument when `x` is unset).
    pub alpha: Option<Vec<Rational>>,
    pub beta: Option<Vec<Rational>>,
    pub a: Option<Vec<Rational>>,
    /// Brill upper arguments.
    pub x: Option<Vec<Rational>>,
    /// Number of seeded random draws for parameters left unset.
    pub samples: usize,
    pub seed: u64,
    pub jobs: usize,
    pub tamper: Option<Tamper>,
}

impl SweepConfig {
    pub fn new(identity: IdentityKind) -> Self {
        Self {
            identity,
            n: 0..=0,
            m: 0..=0,
            k: 0..=0,
            alpha: None,
            beta: None,
            a: None,
            x: None,
            samples: 10,
            seed: 0,
            jobs: 1,
            tamper: None,
        }
    }

    pub fn grid(mut self, n: RangeInclusive<Index>, m: RangeInclusive<Index>) -> Self {
        self.n = n;
        self.m = m;
        self
    }

    pub fn with_k(mut self, k: RangeInclusive<Index>) -> Self {
        self.k = k;
        self
    }

    pub fn with_samples(mut self, samples: usize, seed: u64) -> Self {
        self.samples = samples;
        self.seed = seed;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    fn validate(&self) -> Result<()> {
        for (name, r) in [("n", &self.n), ("m", &self.m), ("k", &self.k)] {
            if r.is_empty() {
                return Err(Error::Domain(format!("empty {name} range")));
            }
        }
        if self.jobs == 0 {
            return Err(Error::Domain("--jobs must be positive".into()));
        }
        if self.alpha.is_some() != self.beta.is_some()
            && matches!(self.identity, IdentityKind::Beta | IdentityKind::GammaRatio)
        {
            return Err(Error::Domain(
                "--alpha and --beta must be given together".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
enum Task {
    Nm(Index, Index),
    Nmk(Index, Index, Index),
    Brill(Index, Rational),
    Pair(Index, Index, Rational, Rational),
    Beta(Index, Index, Rational, Rational, Option<Rational>),
}

fn random_rational(
    rng: &mut ChaCha8Rng,
    num: RangeInclusive<i64>,
    den: RangeInclusive<i64>,
) -> Rational {
    let n = rng.random_range(num);
    let d = rng.random_range(den);
    Rational::new(n.into(), d.into())
}

/// `count` rationals with numerator and denominator bounded by `10^3`.
pub fn sample_brill_arguments(seed: u64, count: usize) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_rational(&mut rng, -1000..=1000, 1..=1000))
        .collect()
}

/// `count` positive rational pairs with numerators and denominators in `1..=100`.
pub fn sample_rational_pairs(seed: u64, count: usize) -> Vec<(Rational, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6a09_e667);
    (0..count)
        .map(|_| {
            let a = random_rational(&mut rng, 1..=100, 1..=100);
            let b = random_rational(&mut rng, 1..=100, 1..=100);
            (a, b)
        })
        .collect()
}

/// `count` triples `(alpha, beta, a)` with `alpha, beta` in `(0, 3]` and `a` in
/// `[0, 1]`, on a `10^-6` lattice.
pub fn sample_beta_points(seed: u64, count: usize) -> Vec<(Rational, Rational, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xbb67_ae85);
    let scale = 1_000_000;
    (0..count)
        .map(|_| {
            let a = random_rational(&mut rng, 1..=3 * scale, scale..=scale);
            let b = random_rational(&mut rng, 1..=3 * scale, scale..=scale);
            let t = random_rational(&mut rng, 0..=scale, scale..=scale);
            (a, b, t)
        })
        .collect()
}

fn pairs(config: &SweepConfig) -> Vec<(Rational, Rational)> {
    match (&config.alpha, &config.beta) {
        (Some(al), Some(be)) => al
            .iter()
            .flat_map(|a| be.iter().map(move |b| (a.clone(), b.clone())))
            .collect(),
        _ => sample_rational_pairs(config.seed, config.samples),
    }
}

fn build_tasks(config: &SweepConfig) -> Result<Vec<Task>> {
    use IdentityKind::*;
    let grid: Vec<(Index, Index)> = config
        .n
        .clone()
        .flat_map(|n| config.m.clone().map(move |m| (n, m)))
        .collect();
    let tasks = match config.identity {
        BezoutCrossCheck | ChaundyBullard | Symmetry | Cancellation | Remark62 | Twin => {
            grid.iter().map(|&(n, m)| Task::Nm(n, m)).collect()
        }
        Lemma42 | WTelescoping | Remark63 => {
            let bound_by_n = config.identity != Remark63;
            grid.iter()
                .flat_map(|&(n, m)| {
                    let cap = if bound_by_n { n } else { m };
                    config
                        .k
                        .clone()
                        .filter(move |&k| k <= cap)
                        .map(move |k| Task::Nmk(n, m, k))
                })
                .collect()
        }
        Brill => {
            let xs = match (&config.x, &config.alpha) {
                (Some(x), _) | (None, Some(x)) => x.clone(),
                (None, None) => sample_brill_arguments(config.seed, config.samples),
            };
            config
                .k
                .clone()
                .flat_map(|p| xs.iter().map(move |x| Task::Brill(p, x.clone())))
                .collect()
        }
        GammaRatio => {
            let ps = pairs(config);
            grid.iter()
                .flat_map(|&(n, m)| {
                    ps.iter()
                        .map(move |(a, b)| Task::Pair(n, m, a.clone(), b.clone()))
                })
                .collect()
        }
        Beta => {
            let points: Vec<(Rational, Rational, Option<Rational>)> =
                match (&config.alpha, &config.beta) {
                    (Some(_), Some(_)) => {
                        let uppers: Vec<Option<Rational>> = match &config.a {
                            Some(list) => list.iter().cloned().map(Some).collect(),
                            None => vec![None],
                        };
                        pairs(config)
                            .into_iter()
                            .flat_map(|(a, b)| {
                                uppers
                                    .iter()
                                    .map(move |t| (a.clone(), b.clone(), t.clone()))
                            })
                            .collect()
                    }
                    _ => sample_beta_points(config.seed, config.samples)
                        .into_iter()
                        .map(|(a, b, t)| (a, b, Some(t)))
                        .collect(),
                };
            grid.iter()
                .flat_map(|&(n, m)| {
                    points
                        .iter()
                        .map(move |(a, b, t)| Task::Beta(n, m, a.clone(), b.clone(), t.clone()))
                })
                .collect()
        }
    };
    Ok(tasks)
}

fn run_task(kind: IdentityKind, task: &Task, tamper: Option<&Tamper>) -> Result<CheckReport> {
    use IdentityKind::*;
    match (kind, task) {
        (BezoutCrossCheck, &Task::Nm(n, m)) => Ok(verify_cross_check_with(n, m, tamper)),
        (ChaundyBullard, &Task::Nm(n, m)) => {
            Ok(identities::verify_chaundy_bullard_with(n, m, tamper))
        }
        (Symmetry, &Task::Nm(n, m)) => Ok(identities::verify_symmetry_with(n, m, tamper)),
        (Cancellation, &Task::Nm(n, m)) => Ok(identities::verify_cancellation_with(n, m, tamper)),
        (Remark62, &Task::Nm(n, m)) => Ok(identities::verify_remark62_with(n, m, tamper)),
        (Twin, &Task::Nm(n, m)) => Ok(identities::verify_twin_with(n, m, tamper)),
        (Lemma42, &Task::Nmk(n, m, k)) => identities::verify_lemma42_with(k, n, m, tamper),
        (WTelescoping, &Task::Nmk(n, m, k)) => {
            identities::verify_w_telescoping_with(k, n, m, tamper)
        }
        (Remark63, &Task::Nmk(n, m, k)) => identities::verify_remark63_with(k, m, n, tamper),
        (Brill, Task::Brill(p, x)) => Ok(identities::verify_brill_with(*p, x, tamper)),
        (GammaRatio, Task::Pair(n, m, a, b)) => {
            identities::verify_gamma_ratio_form_with(*n, *m, a, b, tamper)
        }
        (Beta, Task::Beta(n, m, a, b, t)) => {
            verify_beta_identity_with(*n, *m, a, b, t.as_ref(), tamper)
        }
        _ => unreachable!("task shape always matches its identity"),
    }
}

/// Runs one sweep. Reports come back in task order regardless of `jobs`.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<CheckReport>> {
    config.validate()?;
    let tasks = build_tasks(config)?;
    if tasks.is_empty() {
        return Err(Error::Domain(format!(
            "no valid parameter points for {} in the given ranges",
            config.identity
        )));
    }
    let tamper = config.tamper.as_ref();
    let run = || {
        tasks
            .par_iter()
            .map(|t| run_task(config.identity, t, tamper))
            .collect::<Result<Vec<_>>>()
    };
    if config.jobs == 1 {
        return tasks
            .iter()
            .map(|t| run_task(config.identity, t, tamper))
            .collect();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?
        .install(run)
}

/// The sweeps behind `check --identity all`: every identity at the grid sizes
/// the acceptance suite uses.
pub fn standard_suite(seed: u64, jobs: usize) -> Vec<SweepConfig> {
    use IdentityKind::*;
    let with = |c: SweepConfig| c.with_jobs(jobs).with_samples(0, seed);
    let exact_beta = {
        let mut c = SweepConfig::new(Beta).grid(0..=8, 0..=8);
        c.alpha = Some(parse_value_list("1..5").expect("literal"));
        c.beta = c.alpha.clone();
        c
    };
    vec![
        with(SweepConfig::new(BezoutCrossCheck).grid(0..=20, 0..=20)),
        with(SweepConfig::new(ChaundyBullard).grid(0..=20, 0..=20)),
        with(SweepConfig::new(Symmetry).grid(0..=20, 0..=20)),
        with(SweepConfig::new(Cancellation).grid(0..=12, 0..=12)),
        with(SweepConfig::new(Brill).with_k(0..=12)).with_samples(200, seed),
        with(
            SweepConfig::new(Lemma42)
                .grid(0..=12, 0..=12)
                .with_k(0..=12),
        ),
        with(
            SweepConfig::new(WTelescoping)
                .grid(0..=12, 0..=12)
                .with_k(0..=12),
        ),
        with(exact_beta),
        with(SweepConfig::new(Beta).grid(0..=4, 0..=4)).with_samples(100, seed),
        with(SweepConfig::new(Remark62).grid(0..=10, 0..=10)),
        with(
            SweepConfig::new(Remark63)
                .grid(0..=12, 0..=12)
                .with_k(0..=12),
        ),
        with(SweepConfig::new(Twin).grid(0..=15, 0..=15)),
        with(SweepConfig::new(GammaRatio).grid(0..=6, 0..=6)).with_samples(100, seed),
    ]
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub const CSV_HEADER: &str = "identity,params,passed,residual,method";

/// One line per report in the requested format (no trailing newline).
pub fn render_report(report: &CheckReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Human => report.to_string(),
        OutputFormat::Json => report.to_json().to_string(),
        OutputFormat::Csv => {
            let params = report
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(";");
            [
                csv_field(&report.identity),
                csv_field(&params),
                report.passed.to_string(),
                csv_field(&report.residual.render()),
                csv_field(&report.method),
            ]
            .join(",")
        }
    }
}

pub fn summary(reports: &[CheckReport]) -> String {
    let passed = reports.iter().filter(|r| r.passed).count();
    format!("passed {passed}/{}", reports.len())
}
