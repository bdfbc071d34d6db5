//! Seeded verification suites.
//!
//! Each (identity, trial index) pair gets its own RNG substream derived
//! from `(seed, identity id, trial)`, so reports are byte-identical across
//! runs and adding identities never perturbs existing streams. Guard trips
//! (poles, precondition misses) resample the binding from the same stream
//! and are counted; they are part of the seeded stream, so determinism is
//! preserved.

use num_complex::Complex64;
use rand_core::{RngCore, SeedableRng};
use rand_pcg::Pcg64Mcg;
use serde::{Deserialize, Serialize};

use crate::argexpr::{Binding, Symbol};
use crate::error::{Error, Result};
use crate::eval::EvalOptions;
use crate::hyperelliptic::f_addition_residual;
use crate::identity::{evaluate_identity, odd_half_periods, IdentityId, IdentitySpec};
use crate::period::PeriodMatrix;
use crate::tables::builtin_identity;

/// Sampling box for moduli: `Im tau1, Im tau2 in [0.8, 2.0]`, real parts in
/// `[-0.5, 0.5]`, `Im tau12 in (0, 0.5 sqrt(Im tau1 Im tau2)]`. These
/// ranges guarantee a valid period matrix by construction and keep
/// truncation radii small.
pub const IM_TAU_RANGE: (f64, f64) = (0.8, 2.0);
pub const RE_RANGE: (f64, f64) = (-0.5, 0.5);
pub const IM_TAU12_FRACTION: f64 = 0.5;

/// Sampled points have `|Re| <= 1` and `|Im| <= min(Im tau1, Im tau2) / 4`.
pub const POINT_RE_BOUND: f64 = 1.0;
pub const POINT_IM_FRACTION: f64 = 0.25;

/// Give up on a trial after this many binding resamples.
const MAX_RESAMPLES_PER_TRIAL: u32 = 64;

/// Resample fraction above which the run is failed as a sampling-domain
/// regression.
const RESAMPLE_FAIL_FRACTION: f64 = 0.2;

/// Identity families selectable in a suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Riemann,
    Master,
    Kossak,
    ThetaAddition,
    FAddition,
    Appendix,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Riemann,
        Family::Master,
        Family::Kossak,
        Family::ThetaAddition,
        Family::FAddition,
        Family::Appendix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Riemann => "riemann",
            Family::Master => "master",
            Family::Kossak => "kossak",
            Family::ThetaAddition => "theta-addition",
            Family::FAddition => "f-addition",
            Family::Appendix => "appendix",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "riemann" => Ok(Family::Riemann),
            "master" => Ok(Family::Master),
            "kossak" => Ok(Family::Kossak),
            "theta-addition" => Ok(Family::ThetaAddition),
            "f-addition" => Ok(Family::FAddition),
            "appendix" => Ok(Family::Appendix),
            _ => Err(Error::InvalidConfig(format!("unknown family {s:?}"))),
        }
    }
}

/// Configuration of one verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub families: Vec<Family>,
    pub trials: u32,
    pub seed: u64,
    /// Relative residual above which a trial counts as a failure.
    pub tol: f64,
    pub tail_tolerance: f64,
}

impl SuiteConfig {
    pub fn new(families: Vec<Family>, trials: u32, seed: u64, tol: f64) -> Self {
        SuiteConfig {
            families,
            trials,
            seed,
            tol,
            tail_tolerance: crate::eval::DEFAULT_TAIL_TOLERANCE,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be >= 1".into()));
        }
        if self.families.is_empty() {
            return Err(Error::InvalidConfig("families must not be empty".into()));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidConfig("tol must be positive".into()));
        }
        if !(self.tail_tolerance > 0.0 && self.tail_tolerance < 1.0) {
            return Err(Error::InvalidConfig(
                "tail_tolerance must lie in (0, 1)".into(),
            ));
        }
        Ok(())
    }
}

/// Per-identity statistics of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub id: String,
    pub paper_eq: String,
    pub trials: u32,
    /// Largest finite relative residual observed.
    pub max_rel: f64,
    /// Mean of the finite relative residuals.
    pub mean_rel: f64,
    /// Trials whose residual exceeded `tol` or that could not be evaluated.
    pub failures: u32,
    /// Binding redraws forced by pole or precondition guards.
    pub resamples: u32,
}

/// Outcome of [`run_suite`]: config echo, per-identity rows, verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: SuiteConfig,
    pub results: Vec<IdentityResult>,
    pub verdict: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    /// Stable JSON rendering (fixed key order, trailing newline).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Fixed-width summary table, one line per identity.
    pub fn summary_table(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<14} {:>6} {:>7} {:>12} {:>12} {:>9} {:>10}",
            "id", "eq", "trials", "max_rel", "mean_rel", "failures", "resamples"
        );
        for r in &self.results {
            let _ = writeln!(
                out,
                "{:<14} {:>6} {:>7} {:>12.3e} {:>12.3e} {:>9} {:>10}",
                r.id, r.paper_eq, r.trials, r.max_rel, r.mean_rel, r.failures, r.resamples
            );
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        out
    }
}

/// What one suite entry verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Entry {
    Theta(IdentityId),
    FAddition(u8),
}

impl Entry {
    fn id_string(self) -> String {
        match self {
            Entry::Theta(id) => id.to_string(),
            Entry::FAddition(i) => format!("f-add-{i}"),
        }
    }

    fn paper_eq(self) -> String {
        match self {
            Entry::Theta(id) => id.paper_eq(),
            Entry::FAddition(i) => format!("3-{}", 1 + i),
        }
    }
}

fn entries_for(families: &[Family]) -> Vec<Entry> {
    let mut seen = Vec::new();
    let mut entries = Vec::new();
    for &family in families {
        if seen.contains(&family) {
            continue;
        }
        seen.push(family);
        match family {
            Family::Riemann => entries.push(Entry::Theta(IdentityId::Riemann)),
            Family::Master => entries.push(Entry::Theta(IdentityId::Master)),
            Family::Kossak => {
                entries.extend((1..=3).map(|i| Entry::Theta(IdentityId::Kossak(i))))
            }
            Family::ThetaAddition => {
                entries.extend((1..=16).map(|i| Entry::Theta(IdentityId::ThetaAdd(i))))
            }
            Family::FAddition => entries.extend((1..=15).map(Entry::FAddition)),
            Family::Appendix => {
                entries.extend((1..=15).map(|i| Entry::Theta(IdentityId::Appendix(i))))
            }
        }
    }
    entries
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
    x ^ (x >> 31)
}

/// Substream generator for `(seed, identity id, trial index)`.
pub fn trial_rng(seed: u64, id: &str, trial: u32) -> Pcg64Mcg {
    let mut h = 0xcbf29ce484222325u64;
    for byte in id.bytes() {
        h = (h ^ byte as u64).wrapping_mul(0x100000001b3);
    }
    let stream = splitmix(seed ^ h).wrapping_add((trial as u64).wrapping_mul(0x9E3779B97F4A7C15));
    Pcg64Mcg::seed_from_u64(splitmix(stream))
}

fn unit(rng: &mut Pcg64Mcg) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn uniform(rng: &mut Pcg64Mcg, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * unit(rng)
}

/// Draw moduli from the sampling box; always valid by construction.
pub fn sample_moduli(rng: &mut Pcg64Mcg) -> PeriodMatrix {
    let im1 = uniform(rng, IM_TAU_RANGE.0, IM_TAU_RANGE.1);
    let im2 = uniform(rng, IM_TAU_RANGE.0, IM_TAU_RANGE.1);
    let re1 = uniform(rng, RE_RANGE.0, RE_RANGE.1);
    let re2 = uniform(rng, RE_RANGE.0, RE_RANGE.1);
    let re12 = uniform(rng, RE_RANGE.0, RE_RANGE.1);
    // (1 - u) lies in (0, 1], keeping Im tau12 strictly positive.
    let im12 = (1.0 - unit(rng)) * IM_TAU12_FRACTION * (im1 * im2).sqrt();
    PeriodMatrix::new(
        Complex64::new(re1, im1),
        Complex64::new(re2, im2),
        Complex64::new(re12, im12),
    )
    .expect("sampling box guarantees validity")
}

/// Draw one argument from the point box: `|Re| <= 1`, `|Im| <= im_bound`.
pub fn sample_point(rng: &mut Pcg64Mcg, im_bound: f64) -> Complex64 {
    let re = uniform(rng, -POINT_RE_BOUND, POINT_RE_BOUND);
    let im = uniform(rng, -im_bound, im_bound);
    Complex64::new(re, im)
}

/// Draw a binding for `spec`: every free symbol from the point box, except
/// that zero-locus identities get (alpha, beta) from a uniformly chosen odd
/// half-period of `omega`.
pub fn sample_binding(rng: &mut Pcg64Mcg, spec: &IdentitySpec, omega: &PeriodMatrix) -> Binding {
    let mut binding = Binding::new();
    if spec.needs_zero_locus() {
        let pairs = odd_half_periods(omega);
        let index = (rng.next_u64() % 6) as usize;
        let (alpha, beta) = pairs[index];
        binding.set(Symbol::Alpha, alpha).set(Symbol::Beta, beta);
    }
    let im_bound = POINT_IM_FRACTION * omega.tau1().im.min(omega.tau2().im);
    for s in Symbol::ALL {
        if spec.free_symbols.contains(s) && binding.get(s).is_none() {
            let value = sample_point(rng, im_bound);
            binding.set(s, value);
        }
    }
    binding
}

/// Guard errors trigger a binding resample instead of failing the trial.
fn is_guard(err: &Error) -> bool {
    matches!(
        err,
        Error::PreconditionViolated { .. }
            | Error::PoleEncountered { .. }
            | Error::DenominatorNearZero { .. }
    )
}

struct EntryStats {
    max_rel: f64,
    sum_rel: f64,
    finite: u32,
    failures: u32,
    resamples: u32,
}

fn run_entry(entry: Entry, config: &SuiteConfig) -> EntryStats {
    let opts = EvalOptions::with_tail_tolerance(config.tail_tolerance);
    let id = entry.id_string();
    let spec = match entry {
        Entry::Theta(tid) => Some(builtin_identity(tid)),
        Entry::FAddition(_) => None,
    };
    let mut stats = EntryStats {
        max_rel: 0.0,
        sum_rel: 0.0,
        finite: 0,
        failures: 0,
        resamples: 0,
    };
    for trial in 0..config.trials {
        let mut rng = trial_rng(config.seed, &id, trial);
        let omega = sample_moduli(&mut rng);
        let mut outcome = None;
        for _attempt in 0..=MAX_RESAMPLES_PER_TRIAL {
            let result = match (&spec, entry) {
                (Some(spec), _) => {
                    let binding = sample_binding(&mut rng, spec, &omega);
                    evaluate_identity(spec, &binding, &omega, &opts)
                }
                (None, Entry::FAddition(i)) => {
                    let im_bound =
                        POINT_IM_FRACTION * omega.tau1().im.min(omega.tau2().im);
                    let y = sample_point(&mut rng, im_bound);
                    let z = sample_point(&mut rng, im_bound);
                    let yp = sample_point(&mut rng, im_bound);
                    let zp = sample_point(&mut rng, im_bound);
                    f_addition_residual(i, y, z, yp, zp, &omega, &opts)
                }
                (None, Entry::Theta(_)) => unreachable!(),
            };
            match result {
                Ok(residual) => {
                    outcome = Some(residual.relative);
                    break;
                }
                Err(err) if is_guard(&err) => {
                    stats.resamples += 1;
                }
                Err(_) => break,
            }
        }
        match outcome {
            Some(rel) => {
                stats.max_rel = stats.max_rel.max(rel);
                stats.sum_rel += rel;
                stats.finite += 1;
                if rel > config.tol {
                    stats.failures += 1;
                }
            }
            None => stats.failures += 1,
        }
    }
    stats
}

/// Run every identity of the requested families for `config.trials`
/// seeded instances each and aggregate residual statistics.
pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let mut results = Vec::new();
    let mut pass = true;
    for entry in entries_for(&config.families) {
        let stats = run_entry(entry, config);
        if stats.failures > 0 {
            pass = false;
        }
        if (stats.resamples as f64) > RESAMPLE_FAIL_FRACTION * config.trials as f64 {
            pass = false;
        }
        results.push(IdentityResult {
            id: entry.id_string(),
            paper_eq: entry.paper_eq(),
            trials: config.trials,
            max_rel: stats.max_rel,
            mean_rel: if stats.finite > 0 {
                stats.sum_rel / stats.finite as f64
            } else {
                0.0
            },
            failures: stats.failures,
            resamples: stats.resamples,
        });
    }
    Ok(Report {
        config: config.clone(),
        results,
        verdict: if pass { "pass" } else { "fail" }.to_string(),
    })
}
