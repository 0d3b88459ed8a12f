//! Sweeps congruence checks over a prime range.

use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use supercong_core::primes::primes_in;
use supercong_core::registry::{descriptor, evaluate_check_with};
use supercong_core::{
    registry_list, CheckDescriptor, CheckId, CheckKind, CheckReport, CheckStatus, Needs, PrimeTables,
};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckSelection {
    /// Every congruence in the catalog.
    All,
    Ids(Vec<CheckId>),
}

impl CheckSelection {
    /// Parses `all` or a comma-separated list of IDs.
    pub fn parse(s: &str) -> Result<Self, CliError> {
        if s.trim() == "all" {
            return Ok(CheckSelection::All);
        }
        let mut ids = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let id: CheckId = part.parse()?;
            if descriptor(id).kind != CheckKind::Congruence {
                return Err(CliError::NotACongruence(part.to_string()));
            }
            if !ids.contains(&id) {
                ids.push(id);
            }
        }
        if ids.is_empty() {
            return Err(CliError::InvalidArgument("no checks selected".into()));
        }
        Ok(CheckSelection::Ids(ids))
    }

    fn descriptors(&self) -> Vec<&'static CheckDescriptor> {
        match self {
            CheckSelection::All => {
                registry_list().iter().filter(|d| d.kind == CheckKind::Congruence).collect()
            }
            CheckSelection::Ids(ids) => ids.iter().map(|&id| descriptor(id)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub checks: CheckSelection,
    pub prime_lo: u64,
    pub prime_hi: u64,
    pub jobs: usize,
}

/// Parses `lo..hi` (inclusive) and validates `3 < lo <= hi`.
pub fn parse_prime_range(s: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::InvalidRange(s.to_string());
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if lo <= 3 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skip
    }

    fn add(&mut self, status: CheckStatus) {
        match status {
            CheckStatus::Pass => self.pass += 1,
            CheckStatus::Fail => self.fail += 1,
            CheckStatus::Skip => self.skip += 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    /// Sorted by check ID, then prime.
    pub reports: Vec<CheckReport>,
    pub summary: Summary,
}

/// Evaluates every selected check at every prime in `[lo, hi]`.
///
/// Special-number tables are built at most once per prime, for the union of
/// what the selected checks need.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutcome, CliError> {
    if cfg.prime_lo <= 3 || cfg.prime_lo > cfg.prime_hi {
        return Err(CliError::InvalidRange(format!("{}..{}", cfg.prime_lo, cfg.prime_hi)));
    }
    if cfg.jobs == 0 {
        return Err(CliError::InvalidArgument("jobs must be at least 1".into()));
    }
    let descs = cfg.checks.descriptors();
    let needs = descs.iter().fold(Needs::NONE, |acc, d| acc | d.needs);
    let primes = primes_in(cfg.prime_lo, cfg.prime_hi);
    let tables: Vec<OnceLock<PrimeTables>> = primes.iter().map(|_| OnceLock::new()).collect();

    let tasks: Vec<(usize, &CheckDescriptor)> =
        (0..primes.len()).flat_map(|i| descs.iter().map(move |&d| (i, d))).collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::InvalidArgument(e.to_string()))?;
    let results: Vec<Result<CheckReport, CliError>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(i, d)| {
                let start = Instant::now();
                let t = match tables[i].get() {
                    Some(t) => t,
                    None => {
                        let built = PrimeTables::new(primes[i], needs)?;
                        let _ = tables[i].set(built);
                        tables[i].get().expect("just initialized")
                    }
                };
                let mut report = evaluate_check_with(d, t)?;
                report.elapsed_ms = start.elapsed().as_micros() as f64 / 1e3;
                Ok(report)
            })
            .collect()
    });

    let mut reports = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    reports.sort_by(|a, b| a.id.as_str().cmp(b.id.as_str()).then(a.param.cmp(&b.param)));
    let mut summary = Summary::default();
    for r in &reports {
        summary.add(r.status);
    }
    Ok(SweepOutcome { reports, summary })
}
