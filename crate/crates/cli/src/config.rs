use std::path::Path;

use anyhow::{bail, Context};
use domb_core::verifier::{CampaignConfig, Claim};
use serde::Deserialize;

use crate::args::Format;

/// Flat JSON campaign file. Unknown keys are rejected.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub claims: Option<Vec<String>>,
    pub primes: Option<Vec<u64>>,
    pub m_range: Option<[u64; 2]>,
    pub n_range: Option<[u64; 2]>,
    pub r_range: Option<[u32; 2]>,
    pub s_range: Option<[u32; 2]>,
    #[serde(rename = "A_range")]
    pub a_range: Option<[u32; 2]>,
    #[serde(rename = "B_range")]
    pub b_range: Option<[u32; 2]>,
    #[serde(rename = "C_range")]
    pub c_range: Option<[u32; 2]>,
    pub j_max: Option<u32>,
    pub format: Option<Format>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("parsing config {}", path.display()))
    }

    pub fn parse(text: &str) -> anyhow::Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Overlays the file on the default grid.
    pub fn into_campaign(self, max_index: u64) -> anyhow::Result<CampaignConfig> {
        let defaults = CampaignConfig::default();
        let claims = match self.claims {
            Some(names) => names
                .iter()
                .map(|name| name.parse::<Claim>())
                .collect::<Result<Vec<_>, _>>()?,
            None => defaults.claims.clone(),
        };
        if claims.is_empty() && self.primes.as_ref().is_some_and(|p| !p.is_empty()) {
            bail!("config selects no claims");
        }
        let range = |r: [u64; 2]| r[0]..=r[1];
        let small = |r: [u32; 2]| r[0]..=r[1];
        Ok(CampaignConfig {
            claims,
            primes: self.primes.unwrap_or(defaults.primes),
            m_range: self.m_range.map(range).unwrap_or(defaults.m_range),
            n_range: self.n_range.map(range).unwrap_or(defaults.n_range),
            r_range: self.r_range.map(small).unwrap_or(defaults.r_range),
            s_range: self.s_range.map(small),
            a_range: self.a_range.map(small).unwrap_or(defaults.a_range),
            b_range: self.b_range.map(small).unwrap_or(defaults.b_range),
            c_range: self.c_range.map(small).unwrap_or(defaults.c_range),
            j_max: self.j_max.unwrap_or(defaults.j_max),
            max_index,
        })
    }
}
