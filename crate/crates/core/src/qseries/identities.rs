use super::{eta_quotient, EtaQuotientSpec, TruncatedSeries};
use crate::arith::ExactInteger;
use crate::error::{Error, Result};
use crate::sequences::{apery, domb};

/// First exponent at which the two sides differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub form: ExactInteger,
    pub expansion: ExactInteger,
}

/// Coefficientwise comparison of an eta-quotient form against
/// `sum c(n) u^n`, for exponents `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: &'static str,
    pub order: u64,
    pub form: Vec<ExactInteger>,
    pub expansion: Vec<ExactInteger>,
    pub mismatch: Option<Mismatch>,
}

impl IdentityReport {
    pub fn agrees(&self) -> bool {
        self.mismatch.is_none()
    }
}

fn compare(
    identity: &'static str,
    order: u64,
    form: &EtaQuotientSpec,
    hauptmodul: &EtaQuotientSpec,
    coefficient: impl Fn(u64) -> ExactInteger,
) -> Result<IdentityReport> {
    if order == 0 {
        return Err(Error::DegenerateInstance(
            "identity check needs order >= 1".into(),
        ));
    }
    let n = order as i64;
    let lhs = eta_quotient(form, n)?;
    let u = eta_quotient(hauptmodul, n)?;
    let coefficients = TruncatedSeries::new(0, (0..order).map(coefficient).collect(), n);
    let rhs = coefficients.compose(&u)?;
    let form = lhs.coefficients_from(0);
    let expansion = rhs.coefficients_from(0);
    let mismatch = form
        .iter()
        .zip(&expansion)
        .position(|(a, b)| a != b)
        .map(|i| Mismatch {
            exponent: i as i64,
            form: form[i].clone(),
            expansion: expansion[i].clone(),
        });
    Ok(IdentityReport {
        identity,
        order,
        form,
        expansion,
        mismatch,
    })
}

/// `F(z) = sum A(n) t(z)^n` through `q^{order-1}`.
pub fn verify_apery_eta_identity(order: u64) -> Result<IdentityReport> {
    compare(
        "apery",
        order,
        &EtaQuotientSpec::apery_form(),
        &EtaQuotientSpec::apery_hauptmodul(),
        apery,
    )
}

/// `G(z) = sum (-1)^n D(n) s(z)^n` through `q^{order-1}`.
pub fn verify_domb_eta_identity(order: u64) -> Result<IdentityReport> {
    compare(
        "domb",
        order,
        &EtaQuotientSpec::domb_form(),
        &EtaQuotientSpec::domb_hauptmodul(),
        |n| {
            let d = domb(n);
            if n % 2 == 1 {
                -d
            } else {
                d
            }
        },
    )
}
