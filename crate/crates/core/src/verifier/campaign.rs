use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::{run_task, Claim, CongruenceReport, CongruenceTask};
use crate::arith::Prime;
use crate::coster::harmonic_bound;
use crate::error::{Error, Result};
use crate::sequences::DombSpec;

/// A grid of tasks. Empty ranges are allowed and contribute no tasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignConfig {
    pub claims: Vec<Claim>,
    pub primes: Vec<u64>,
    pub m_range: RangeInclusive<u64>,
    /// Lower index `n` for the lifting claims and the multiplier in the
    /// Gessel congruence.
    pub n_range: RangeInclusive<u64>,
    pub r_range: RangeInclusive<u32>,
    /// Defaults to `1..=r` for each `r`.
    pub s_range: Option<RangeInclusive<u32>>,
    pub a_range: RangeInclusive<u32>,
    pub b_range: RangeInclusive<u32>,
    pub c_range: RangeInclusive<u32>,
    /// Largest harmonic index `j` for the `S_j` bounds.
    pub j_max: u32,
    /// Largest sequence index any task may request.
    pub max_index: u64,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            claims: Claim::ALL.to_vec(),
            primes: vec![5, 7, 11, 13],
            m_range: 1..=2,
            n_range: 1..=2,
            r_range: 1..=2,
            s_range: None,
            a_range: 2..=3,
            b_range: 1..=2,
            c_range: 1..=2,
            j_max: 10,
            max_index: 2000,
        }
    }
}

/// A task whose checker returned an error instead of a report.
#[derive(Debug, Clone, PartialEq)]
pub struct TaskFailure {
    pub task: CongruenceTask,
    pub error: Error,
}

fn lowest_is_at_least<T: PartialOrd + Copy + std::fmt::Display>(
    name: &str,
    range: &RangeInclusive<T>,
    min: T,
) -> Result<()> {
    if !range.is_empty() && *range.start() < min {
        return Err(Error::InvalidConfig(format!(
            "{name} must start at >= {min}, got {}",
            range.start()
        )));
    }
    Ok(())
}

impl CampaignConfig {
    /// Checks every range against the task invariants and returns the
    /// validated primes.
    pub fn validate(&self) -> Result<Vec<Prime>> {
        let primes = self
            .primes
            .iter()
            .map(|&p| Prime::new_large(p).map_err(|e| Error::InvalidConfig(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        lowest_is_at_least("m_range", &self.m_range, 1)?;
        lowest_is_at_least("n_range", &self.n_range, 1)?;
        lowest_is_at_least("r_range", &self.r_range, 1)?;
        lowest_is_at_least("A_range", &self.a_range, 1)?;
        lowest_is_at_least("B_range", &self.b_range, 1)?;
        lowest_is_at_least("C_range", &self.c_range, 1)?;
        if self.claims.iter().any(|c| c.needs_large_a()) {
            lowest_is_at_least("A_range", &self.a_range, 2)?;
        }
        if let Some(top) = self.largest_index(&primes) {
            if top > self.max_index {
                return Err(Error::InvalidConfig(format!(
                    "grid reaches index {top}, above the limit {}",
                    self.max_index
                )));
            }
        }
        Ok(primes)
    }

    fn largest_index(&self, primes: &[Prime]) -> Option<u64> {
        let p = primes.iter().map(|p| p.get()).max()?;
        let mut top = None;
        if !self.m_range.is_empty() && !self.r_range.is_empty() {
            top = Some(
                self.m_range
                    .end()
                    .saturating_mul(p.saturating_pow(*self.r_range.end())),
            );
        }
        if self.claims.contains(&Claim::Gessel) && !self.n_range.is_empty() {
            top = top.max(Some(self.n_range.end().saturating_mul(p)));
        }
        top
    }

    fn specs(&self) -> Vec<DombSpec> {
        let mut specs = Vec::new();
        for a in self.a_range.clone() {
            for b in self.b_range.clone() {
                for c in self.c_range.clone() {
                    if let Ok(spec) = DombSpec::new(a, b, c) {
                        specs.push(spec);
                    }
                }
            }
        }
        specs
    }

    fn s_values(&self, r: u32) -> impl Iterator<Item = u32> + '_ {
        let range = self.s_range.clone().unwrap_or(1..=r);
        range.filter(move |&s| s <= r)
    }

    /// Enumerates the grid, sorted by task key.
    pub fn tasks(&self) -> Result<Vec<CongruenceTask>> {
        let primes = self.validate()?;
        let specs = self.specs();
        let mut tasks = Vec::new();
        for &claim in &self.claims {
            for &p in &primes {
                self.tasks_for(claim, p, &specs, &mut tasks);
            }
        }
        tasks.sort();
        tasks.dedup();
        Ok(tasks)
    }

    fn tasks_for(&self, claim: Claim, p: Prime, specs: &[DombSpec], out: &mut Vec<CongruenceTask>) {
        let pv = p.get();
        match claim {
            Claim::Gessel => {
                out.extend(self.n_range.clone().map(|n| CongruenceTask::gessel(p, n)));
            }
            Claim::TheoremMain
            | Claim::WeakZagier
            | Claim::CentralBinomial
            | Claim::VanishingSum => {
                for m in self.m_range.clone() {
                    for r in self.r_range.clone() {
                        match claim {
                            Claim::WeakZagier => out.push(CongruenceTask::weak_zagier(p, m, r)),
                            Claim::CentralBinomial => out.push(CongruenceTask::central(p, m, r)),
                            Claim::TheoremMain => out.extend(
                                specs
                                    .iter()
                                    .map(|&spec| CongruenceTask::theorem(p, m, r, spec)),
                            ),
                            _ if m % pv != 0 => out.extend(
                                specs
                                    .iter()
                                    .map(|&spec| CongruenceTask::vanishing(p, m, r, spec)),
                            ),
                            _ => {}
                        }
                    }
                }
            }
            Claim::Prop21 => {
                for m in self.m_range.clone() {
                    for r in self.r_range.clone() {
                        for j in (1..=self.j_max).filter(|&j| harmonic_bound(p, j).is_ok()) {
                            out.push(CongruenceTask::harmonic(p, m, r, j));
                        }
                    }
                }
            }
            Claim::KeyCongruence
            | Claim::StepFactorization
            | Claim::RatioCongruence
            | Claim::Witnesses
            | Claim::SevenTerms => {
                for m in self.m_range.clone().filter(|m| m % pv != 0) {
                    for n in self.n_range.clone().filter(|n| n % pv != 0) {
                        for r in self.r_range.clone() {
                            for s in self.s_values(r) {
                                let lifts = s >= 1 && n * pv.pow(s) <= m * pv.pow(r);
                                if !lifts && !(claim == Claim::KeyCongruence && s == 0) {
                                    continue;
                                }
                                out.extend(
                                    specs.iter().map(|&spec| {
                                        CongruenceTask::lift(claim, p, m, n, r, s, spec)
                                    }),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Runs every task of the grid, concurrently, and returns the outcomes in
/// task order. A failing task becomes a [`TaskFailure`] entry.
pub fn run_campaign(
    config: &CampaignConfig,
) -> Result<Vec<std::result::Result<CongruenceReport, TaskFailure>>> {
    let tasks = config.tasks()?;
    Ok(tasks
        .par_iter()
        .map(|task| run_task(task).map_err(|error| TaskFailure { task: *task, error }))
        .collect())
}
