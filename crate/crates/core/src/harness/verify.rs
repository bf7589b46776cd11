//! Seeded verification runs.
//!
//! Trial `i` of a run with master seed `s` samples its configuration from a
//! SplitMix64 stream seeded with `derive_seed(s, i)`, so the outcome of a
//! trial depends only on its index and the run parameters. Trials execute on
//! a rayon pool and are reassembled in index order; the report is the same
//! for any number of workers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::config::VertexConfiguration;
use crate::constructions::{cone_configuration, link_configuration, DEFAULT_EPSILON_EXPONENT};
use crate::error::{Error, Result};
use crate::harness::io::configuration_to_value;
use crate::harness::sampling::{sample_from_stream, DEFAULT_BOUND};
use crate::invariants::{SimplexwiseMap, SphericalMap};
use crate::linalg::{affine_dependence, Sign};
use crate::proof_trace::lemma_trace;
use crate::rng::{derive_seed, SeedStream};
use crate::simplicial::{disjoint_pairs, Complex, Face, Parity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    /// Quantitative topological Radon: v(f) = 1 on Δ_{d+1}.
    TrPlus,
    /// Quantitative van Kampen–Flores: v on Δ_{d+2}^{d/2} (d even) or c (d odd) is 1.
    VkfPlus,
    /// Restriction to Δ_{d+1} against the skeleton / CGS number.
    LemmaPai,
    /// Cone equalities.
    LemmaRecCone,
    /// Link equalities.
    LemmaRecLink,
    /// Boundary-exchange and telescoping identities.
    ProofIdentity,
    /// Exactly one intersecting complementary partition of d+2 points.
    RadonUnique,
    /// Mixed-dimension intersection count is even and positive (d odd).
    FootnoteEven,
    /// lk₂(σ, τ) = lk₂(τ, σ).
    LkSymmetry,
}

impl Statement {
    pub const ALL: [Statement; 9] = [
        Statement::TrPlus,
        Statement::VkfPlus,
        Statement::LemmaPai,
        Statement::LemmaRecCone,
        Statement::LemmaRecLink,
        Statement::ProofIdentity,
        Statement::RadonUnique,
        Statement::FootnoteEven,
        Statement::LkSymmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statement::TrPlus => "tr-plus",
            Statement::VkfPlus => "vkf-plus",
            Statement::LemmaPai => "lemma-pai",
            Statement::LemmaRecCone => "lemma-rec-cone",
            Statement::LemmaRecLink => "lemma-rec-link",
            Statement::ProofIdentity => "proof-identity",
            Statement::RadonUnique => "radon-unique",
            Statement::FootnoteEven => "footnote-even",
            Statement::LkSymmetry => "lk-symmetry",
        }
    }

    /// Whether `dim` is supported.
    pub fn supports(self, dim: usize) -> bool {
        match self {
            Statement::LemmaRecCone => (1..=5).contains(&dim),
            Statement::FootnoteEven => (1..=6).contains(&dim) && dim % 2 == 1,
            _ => (1..=6).contains(&dim),
        }
    }

    /// Points per sampled configuration.
    pub fn point_count(self, dim: usize) -> usize {
        match self {
            Statement::TrPlus | Statement::RadonUnique => dim + 2,
            _ => dim + 3,
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Statement> {
        Statement::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown statement {s:?}")))
    }
}

impl Serialize for Statement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub statement: Statement,
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub bound: u32,
    pub epsilon_exponent: u32,
    /// Worker threads; 0 lets rayon decide. Does not affect the report.
    pub workers: usize,
    /// Echo passing trials in full.
    pub verbose: bool,
}

impl RunConfig {
    pub fn new(statement: Statement, dim: usize, trials: usize, seed: u64) -> Result<RunConfig> {
        if !statement.supports(dim) {
            return Err(Error::UnsupportedStatementDimension { statement: statement.to_string(), dim });
        }
        if trials == 0 {
            return Err(Error::mismatch("a positive trial count", 0));
        }
        Ok(RunConfig {
            statement,
            dim,
            trials,
            seed,
            bound: DEFAULT_BOUND,
            epsilon_exponent: DEFAULT_EPSILON_EXPONENT,
            workers: 0,
            verbose: false,
        })
    }

    pub fn with_bound(mut self, bound: u32) -> Self {
        self.bound = bound;
        self
    }

    pub fn with_epsilon_exponent(mut self, e: u32) -> Self {
        self.epsilon_exponent = e;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_verbose(mut self, verbose: bool) -> Self {
        self.verbose = verbose;
        self
    }

    fn validate(&self) -> Result<()> {
        if !self.statement.supports(self.dim) {
            return Err(Error::UnsupportedStatementDimension { statement: self.statement.to_string(), dim: self.dim });
        }
        if self.trials == 0 || self.bound == 0 || self.epsilon_exponent == 0 {
            return Err(Error::mismatch("positive trials, bound and epsilon exponent", format!("{self:?}")));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TrialReport {
    pub trial_index: usize,
    pub derived_seed: u64,
    pub configuration: Option<serde_json::Value>,
    pub invariants: BTreeMap<String, u64>,
    pub witnesses: Vec<(Face, Face)>,
    pub failed_checks: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub pass: bool,
    pub degenerate_resamples: usize,
    #[serde(skip)]
    pub retry_cap_exceeded: bool,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub config: RunConfig,
    pub trials: Vec<TrialReport>,
    pub aggregate_pass: bool,
    pub duration: Duration,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Summary {
    trials_passed: usize,
    degenerate_resamples_total: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ReportFile<'a> {
    statement: Statement,
    dim: usize,
    trials: usize,
    seed: u64,
    bound: u32,
    epsilon_exponent: u32,
    aggregate_pass: bool,
    failures: Vec<&'a TrialReport>,
    summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    trial_reports: Option<&'a [TrialReport]>,
}

impl RunReport {
    pub fn failures(&self) -> impl Iterator<Item = &TrialReport> {
        self.trials.iter().filter(|t| !t.pass)
    }

    pub fn retry_cap_exceeded(&self) -> bool {
        self.trials.iter().any(|t| t.retry_cap_exceeded)
    }

    /// Report file contents. The wall-clock duration is deliberately not part
    /// of the file so reruns compare byte for byte.
    pub fn to_json(&self) -> String {
        let c = &self.config;
        let file = ReportFile {
            statement: c.statement,
            dim: c.dim,
            trials: c.trials,
            seed: c.seed,
            bound: c.bound,
            epsilon_exponent: c.epsilon_exponent,
            aggregate_pass: self.aggregate_pass,
            failures: self.failures().collect(),
            summary: Summary {
                trials_passed: self.trials.iter().filter(|t| t.pass).count(),
                degenerate_resamples_total: self.trials.iter().map(|t| t.degenerate_resamples).sum(),
            },
            trial_reports: c.verbose.then_some(self.trials.as_slice()),
        };
        serde_json::to_string_pretty(&file).expect("report serialises")
    }
}

/// Accumulates the values and checks of one trial.
#[derive(Default)]
struct Ledger {
    invariants: BTreeMap<String, u64>,
    witnesses: Vec<(Face, Face)>,
    failed: Vec<String>,
    resamples: usize,
}

impl Ledger {
    fn value(&mut self, name: impl Into<String>, v: impl Into<u64>) {
        self.invariants.insert(name.into(), v.into());
    }

    fn parity(&mut self, name: impl Into<String>, p: Parity) {
        self.value(name, p.value());
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        if !ok {
            self.failed.push(name.into());
        }
    }
}

pub fn run_verification(rc: &RunConfig) -> Result<RunReport> {
    rc.validate()?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(rc.workers)
        .build()
        .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    let trials: Vec<TrialReport> = pool.install(|| (0..rc.trials).into_par_iter().map(|i| run_trial(rc, i)).collect());
    let aggregate_pass = trials.iter().all(|t| t.pass);
    Ok(RunReport { config: rc.clone(), trials, aggregate_pass, duration: start.elapsed() })
}

/// Runs trial `index` of `rc` on its own.
pub fn run_trial(rc: &RunConfig, index: usize) -> TrialReport {
    let derived_seed = derive_seed(rc.seed, index as u64);
    let mut stream = SeedStream::new(derived_seed);
    let mut ledger = Ledger::default();
    let mut configuration = None;
    let outcome = sample_from_stream(rc.dim, rc.statement.point_count(rc.dim), rc.bound, &mut stream).and_then(|sample| {
        ledger.resamples = sample.resamples;
        configuration = Some(sample.config);
        let cfg = configuration.as_ref().expect("just set");
        check_statement(rc, cfg, derive_seed(derived_seed, 1), &mut ledger)
    });
    let retry_cap_exceeded = matches!(outcome, Err(Error::RetryCapExceeded { .. }));
    let error = outcome.err().map(|e| e.to_string());
    let pass = error.is_none() && ledger.failed.is_empty();
    TrialReport {
        trial_index: index,
        derived_seed,
        configuration: if pass && !rc.verbose { None } else { configuration.as_ref().map(configuration_to_value) },
        invariants: ledger.invariants,
        witnesses: ledger.witnesses,
        failed_checks: ledger.failed,
        error,
        pass,
        degenerate_resamples: ledger.resamples,
        retry_cap_exceeded,
    }
}

fn check_statement(rc: &RunConfig, cfg: &VertexConfiguration, aux_seed: u64, ledger: &mut Ledger) -> Result<()> {
    let d = rc.dim;
    let map = SimplexwiseMap::new(cfg);
    match rc.statement {
        Statement::TrPlus => {
            let v = map.van_kampen(&Complex::simplex(d + 1))?;
            ledger.parity("v", v.parity);
            ledger.value("intersectingPairs", v.count() as u64);
            ledger.check("v(f) = 1", v.parity.is_one());
            ledger.check("witnesses nonempty", !v.pairs.is_empty());
            ledger.witnesses = v.pairs;
        }
        Statement::VkfPlus => {
            let (name, hits) = if d % 2 == 0 {
                ("v", map.van_kampen(&Complex::skeleton(d + 2, d / 2)?)?)
            } else {
                ("c", map.cgs()?)
            };
            ledger.parity(name, hits.parity);
            ledger.value("witnessPairs", hits.count() as u64);
            ledger.check(format!("{name} = 1"), hits.parity.is_one());
            ledger.check("witnesses nonempty", !hits.pairs.is_empty());
            ledger.witnesses = hits.pairs;
        }
        Statement::LemmaPai => {
            let restricted = map.van_kampen(&Complex::simplex(d + 1))?;
            let (name, other) = if d % 2 == 0 {
                ("vSkeleton", map.van_kampen(&Complex::skeleton(d + 2, d / 2)?)?)
            } else {
                ("c", map.cgs()?)
            };
            ledger.parity("vRestricted", restricted.parity);
            ledger.parity(name, other.parity);
            ledger.check(format!("vRestricted = {name}"), restricted.parity == other.parity);
            ledger.witnesses = restricted.pairs;
        }
        Statement::LemmaRecCone => {
            let cone = cone_configuration(cfg, aux_seed, rc.epsilon_exponent)?;
            ledger.resamples += cone.attempts - 1;
            let lifted = SimplexwiseMap::new(&cone.result);

            let mut sub: Vec<usize> = (0..=d + 1).collect();
            sub.push(cone.apex_index);
            let cone_part = cone.result.restrict(&sub)?;
            let v_cone = SimplexwiseMap::new(&cone_part).van_kampen(&Complex::simplex(d + 2))?;
            let v_base = map.van_kampen(&Complex::simplex(d + 1))?;
            ledger.parity("vCone", v_cone.parity);
            ledger.parity("vBase", v_base.parity);
            ledger.check("v(cone over base face) = v(f|base face)", v_cone.parity == v_base.parity);

            if d % 2 == 0 {
                let c_hat = lifted.cgs()?;
                let v_skel = map.van_kampen(&Complex::skeleton(d + 2, d / 2)?)?;
                ledger.parity("cCone", c_hat.parity);
                ledger.parity("vSkeleton", v_skel.parity);
                ledger.check("c(cone) = v(f|skeleton)", c_hat.parity == v_skel.parity);
                ledger.witnesses = c_hat.pairs;
            } else {
                let v_hat = lifted.van_kampen(&Complex::skeleton(d + 3, (d + 1) / 2)?)?;
                let c = map.cgs()?;
                ledger.parity("vConeSkeleton", v_hat.parity);
                ledger.parity("c", c.parity);
                ledger.check("v(cone|skeleton) = c(f)", v_hat.parity == c.parity);
                ledger.witnesses = v_hat.pairs;
            }
        }
        Statement::LemmaRecLink => {
            let links = (0..cfg.len()).map(|a| link_configuration(cfg, a)).collect::<Result<Vec<_>>>()?;
            for link in &links {
                ledger.check(format!("link at {} is generic", link.center), link.result.is_generic());
            }
            if d % 2 == 1 {
                let c = map.cgs()?;
                ledger.parity("c", c.parity);
                let skeleton = Complex::skeleton(d + 1, (d + 1) / 2)?;
                for link in &links {
                    let v = SphericalMap::new(&link.result).van_kampen(&skeleton)?;
                    ledger.parity(format!("vLink{}", link.center), v.parity);
                    ledger.check(format!("c(f) = v(link at {})", link.center), v.parity == c.parity);
                }
                ledger.witnesses = c.pairs;
            } else {
                let v = map.van_kampen(&Complex::skeleton(d + 2, d / 2)?)?;
                ledger.parity("vSkeleton", v.parity);
                let mut total = Parity::ZERO;
                for link in &links {
                    let c = SphericalMap::new(&link.result).cgs()?;
                    ledger.parity(format!("cLink{}", link.center), c.parity);
                    total += c.parity;
                }
                ledger.parity("cLinkSum", total);
                ledger.check("v(f|skeleton) = sum of c(link)", v.parity == total);
                ledger.witnesses = v.pairs;
            }
        }
        Statement::ProofIdentity => {
            let trace = lemma_trace(&map)?;
            for ex in &trace.exchanges {
                ledger.check(format!("boundary exchange at {}", ex.sigma), ex.holds());
            }
            for step in &trace.steps {
                ledger.check(format!("telescoping step k={}", step.k), step.holds());
                ledger.parity(format!("telescoping{}", step.k), step.sums[0]);
            }
            ledger.value("exchangesChecked", trace.exchanges.len() as u64);
            ledger.parity("difference", trace.difference);
            ledger.check("restriction difference = 0", trace.difference == Parity::ZERO);
        }
        Statement::RadonUnique => {
            let v = map.van_kampen(&Complex::simplex(d + 1))?;
            ledger.value("intersectingPartitions", v.count() as u64);
            ledger.check("exactly one intersecting partition", v.count() == 1);
            // The partition must also be the sign split of the affine dependence.
            let signs = affine_dependence(cfg.points())?;
            let plus = Face::new(signs.indices(Sign::Positive))?;
            let minus = Face::new(signs.indices(Sign::Negative))?;
            let expected = if plus < minus { (plus, minus) } else { (minus, plus) };
            ledger.check("partition matches dependence signs", v.pairs.first() == Some(&expected));
            ledger.witnesses = v.pairs;
        }
        Statement::FootnoteEven => {
            let mixed = map.mixed_pairs()?;
            ledger.value("mixedCount", mixed.count() as u64);
            ledger.parity("mixedParity", mixed.parity);
            ledger.check("mixed count even", mixed.parity == Parity::ZERO);
            ledger.check("mixed count positive", mixed.count() >= 1);
            ledger.witnesses = mixed.pairs;
        }
        Statement::LkSymmetry => {
            let pairs: Vec<(Face, Face)> = disjoint_pairs(&Complex::simplex(d + 2), d + 1)
                .into_iter()
                .filter(|(s, t)| s.dim() >= 1 && t.dim() >= 1)
                .collect();
            let mut linked = Vec::new();
            for (s, t) in &pairs {
                let forward = map.linking_number(s, t)?;
                let backward = map.linking_number(t, s)?;
                ledger.check(format!("lk({s},{t}) symmetric"), forward == backward);
                if forward.is_one() {
                    linked.push((s.clone(), t.clone()));
                }
            }
            ledger.value("pairsChecked", pairs.len() as u64);
            ledger.value("linkedPairs", linked.len() as u64);
            ledger.witnesses = linked;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statement_names_round_trip() {
        for st in Statement::ALL {
            assert_eq!(st.name().parse::<Statement>().unwrap(), st);
        }
        assert!("vkf".parse::<Statement>().is_err());
    }

    #[test]
    fn dimension_support() {
        assert!(RunConfig::new(Statement::FootnoteEven, 2, 1, 0).is_err());
        assert!(RunConfig::new(Statement::FootnoteEven, 3, 1, 0).is_ok());
        assert!(RunConfig::new(Statement::LemmaRecCone, 6, 1, 0).is_err());
        assert!(RunConfig::new(Statement::TrPlus, 7, 1, 0).is_err());
        assert!(RunConfig::new(Statement::TrPlus, 0, 1, 0).is_err());
        assert!(RunConfig::new(Statement::TrPlus, 2, 0, 0).is_err());
    }

    #[test]
    fn small_runs_pass() {
        for st in Statement::ALL {
            let d = if st == Statement::FootnoteEven { 1 } else { 2 };
            let report = run_verification(&RunConfig::new(st, d, 3, 11).unwrap()).unwrap();
            assert!(report.aggregate_pass, "{st}: {}", report.to_json());
        }
    }

    #[test]
    fn passing_trials_are_summarised() {
        let rc = RunConfig::new(Statement::TrPlus, 1, 2, 5).unwrap();
        let report = run_verification(&rc).unwrap();
        assert!(report.trials.iter().all(|t| t.configuration.is_none()));
        assert!(!report.to_json().contains("trialReports"));
        let verbose = run_verification(&rc.with_verbose(true)).unwrap();
        assert!(verbose.trials.iter().all(|t| t.configuration.is_some()));
        assert!(verbose.to_json().contains("trialReports"));
    }

    #[test]
    fn retry_cap_is_reported_per_trial() {
        // Four distinct integers cannot come from {-1, 0, 1}.
        let rc = RunConfig::new(Statement::LkSymmetry, 1, 2, 1).unwrap().with_bound(1);
        let report = run_verification(&rc).unwrap();
        assert!(!report.aggregate_pass);
        assert!(report.retry_cap_exceeded());
        assert!(report.trials.iter().all(|t| t.error.is_some() && t.configuration.is_none()));
    }
}
