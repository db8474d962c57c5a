//! Truncated integer q-series, Dedekind eta products and the two
//! modular parameterizations `F = sum A(n) t^n` and `G = sum (-1)^n D(n) s^n`.

mod eta;
mod identities;
mod series;

pub use eta::{eta_quotient, eta_series, EtaQuotientSpec};
pub use identities::{
    verify_apery_eta_identity, verify_domb_eta_identity, IdentityReport, Mismatch,
};
pub use series::TruncatedSeries;
