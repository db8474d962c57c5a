//! Verification tasks for every congruence claim, single-instance
//! checkers, and grid campaigns over them.

mod campaign;
mod checks;

use std::fmt;
use std::str::FromStr;

pub use campaign::{run_campaign, CampaignConfig, TaskFailure};
pub use checks::{
    run_task, verify_central_binomial, verify_gessel, verify_theorem_main, verify_weak_zagier,
};

use crate::arith::{Prime, Valuation};
use crate::error::Error;
use crate::sequences::DombSpec;

/// A claim that can be checked on concrete parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    /// `D(m p^r, A, B, C) = D(m p^{r-1}, A, B, C) mod p^{3r}` for `A >= 2`.
    TheoremMain,
    /// `D(m p^r, 1, 1, 1) = D(m p^{r-1}, 1, 1, 1) mod p^{2r}`.
    WeakZagier,
    /// `A(n p) = A(n) mod p^3`.
    Gessel,
    /// `C(2m p^r, m p^r) = C(2m p^{r-1}, m p^{r-1}) mod p^{3r}`.
    CentralBinomial,
    /// `g*(m p^r, n p^s) = 1 mod p^{r+2s}`.
    KeyCongruence,
    /// Binomial powers factor through `g*` across one lift.
    StepFactorization,
    RatioCongruence,
    VanishingSum,
    Witnesses,
    SevenTerms,
    /// Harmonic-sum bounds on `S_j(m p^r)`.
    Prop21,
}

impl Claim {
    pub const ALL: [Claim; 11] = [
        Claim::TheoremMain,
        Claim::WeakZagier,
        Claim::Gessel,
        Claim::CentralBinomial,
        Claim::KeyCongruence,
        Claim::StepFactorization,
        Claim::RatioCongruence,
        Claim::VanishingSum,
        Claim::Witnesses,
        Claim::SevenTerms,
        Claim::Prop21,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Claim::TheoremMain => "theorem",
            Claim::WeakZagier => "weak",
            Claim::Gessel => "gessel",
            Claim::CentralBinomial => "central",
            Claim::KeyCongruence => "key",
            Claim::StepFactorization => "steps",
            Claim::RatioCongruence => "ratio",
            Claim::VanishingSum => "vanishing",
            Claim::Witnesses => "witnesses",
            Claim::SevenTerms => "seventerms",
            Claim::Prop21 => "prop21",
        }
    }

    /// Claims that only make sense for `A >= 2`.
    pub fn needs_large_a(self) -> bool {
        matches!(
            self,
            Claim::TheoremMain | Claim::RatioCongruence | Claim::VanishingSum
        )
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Claim::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown claim {s:?}")))
    }
}

/// One verification instance. Fields a claim does not use are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CongruenceTask {
    pub claim: Claim,
    pub p: Prime,
    pub m: Option<u64>,
    pub n: Option<u64>,
    pub r: Option<u32>,
    pub s: Option<u32>,
    pub j: Option<u32>,
    pub spec: Option<DombSpec>,
}

impl CongruenceTask {
    fn bare(claim: Claim, p: Prime) -> Self {
        CongruenceTask {
            claim,
            p,
            m: None,
            n: None,
            r: None,
            s: None,
            j: None,
            spec: None,
        }
    }

    pub fn theorem(p: Prime, m: u64, r: u32, spec: DombSpec) -> Self {
        CongruenceTask {
            m: Some(m),
            r: Some(r),
            spec: Some(spec),
            ..Self::bare(Claim::TheoremMain, p)
        }
    }

    pub fn weak_zagier(p: Prime, m: u64, r: u32) -> Self {
        CongruenceTask {
            m: Some(m),
            r: Some(r),
            spec: Some(DombSpec::ZAGIER_E),
            ..Self::bare(Claim::WeakZagier, p)
        }
    }

    pub fn gessel(p: Prime, n: u64) -> Self {
        CongruenceTask {
            n: Some(n),
            ..Self::bare(Claim::Gessel, p)
        }
    }

    pub fn central(p: Prime, m: u64, r: u32) -> Self {
        CongruenceTask {
            m: Some(m),
            r: Some(r),
            ..Self::bare(Claim::CentralBinomial, p)
        }
    }

    /// A task over the lifting grid `(m, n, r, s)`.
    pub fn lift(claim: Claim, p: Prime, m: u64, n: u64, r: u32, s: u32, spec: DombSpec) -> Self {
        CongruenceTask {
            m: Some(m),
            n: Some(n),
            r: Some(r),
            s: Some(s),
            spec: Some(spec),
            ..Self::bare(claim, p)
        }
    }

    pub fn vanishing(p: Prime, m: u64, r: u32, spec: DombSpec) -> Self {
        CongruenceTask {
            m: Some(m),
            r: Some(r),
            spec: Some(spec),
            ..Self::bare(Claim::VanishingSum, p)
        }
    }

    pub fn harmonic(p: Prime, m: u64, r: u32, j: u32) -> Self {
        CongruenceTask {
            m: Some(m),
            r: Some(r),
            j: Some(j),
            ..Self::bare(Claim::Prop21, p)
        }
    }
}

impl fmt::Display for CongruenceTask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} p={}", self.claim, self.p)?;
        for (name, value) in [("m", self.m), ("n", self.n)] {
            if let Some(v) = value {
                write!(f, " {name}={v}")?;
            }
        }
        for (name, value) in [("r", self.r), ("s", self.s), ("j", self.j)] {
            if let Some(v) = value {
                write!(f, " {name}={v}")?;
            }
        }
        if let Some(spec) = self.spec {
            write!(f, " A={} B={} C={}", spec.a(), spec.b(), spec.c())?;
        }
        Ok(())
    }
}

/// Outcome of one task. `holds` is always
/// `difference_valuation >= required_valuation`.
#[derive(Debug, Clone, PartialEq)]
pub struct CongruenceReport {
    pub task: CongruenceTask,
    pub holds: bool,
    pub difference_valuation: Valuation,
    pub required_valuation: Valuation,
    pub elapsed_milliseconds: f64,
    pub detail: Option<String>,
}

impl CongruenceReport {
    /// Recomputes `holds` from the two valuations.
    pub fn is_consistent(&self) -> bool {
        self.holds == (self.difference_valuation >= self.required_valuation)
    }
}
