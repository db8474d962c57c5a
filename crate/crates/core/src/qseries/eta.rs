use num_traits::Zero;

use super::TruncatedSeries;
use crate::arith::ExactInteger;
use crate::error::{Error, Result};

/// `prod_{n >= 1} (1 - q^n)`, i.e. `eta(z) / q^{1/24}`, to order `order`.
///
/// Built from Euler's pentagonal number theorem: the coefficient of
/// `q^{k(3k-1)/2}` is `(-1)^k` for every integer `k`, all others vanish.
pub fn eta_series(order: u64) -> TruncatedSeries {
    let order = order as i64;
    let mut coefficients = vec![ExactInteger::zero(); order.max(0) as usize];
    for k in 0i64.. {
        let mut placed = false;
        for j in [k, -k] {
            let e = j * (3 * j - 1) / 2;
            if e < order {
                coefficients[e as usize] = if j % 2 == 0 { 1 } else { -1 }.into();
                placed = true;
            }
        }
        if !placed {
            break;
        }
    }
    TruncatedSeries::new(0, coefficients, order)
}

/// `prod_d eta(d z)^{e_d}` as a list of `(d, e_d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaQuotientSpec {
    pub factors: Vec<(u32, i32)>,
}

impl EtaQuotientSpec {
    pub fn new(factors: Vec<(u32, i32)>) -> Result<Self> {
        if let Some(&(d, _)) = factors.iter().find(|(d, _)| *d == 0) {
            return Err(Error::DegenerateInstance(format!(
                "eta divisor must be >= 1, got {d}"
            )));
        }
        Ok(EtaQuotientSpec { factors })
    }

    /// `eta(2z)^7 eta(3z)^7 / (eta(z)^5 eta(6z)^5)`
    pub fn apery_form() -> Self {
        EtaQuotientSpec {
            factors: vec![(2, 7), (3, 7), (1, -5), (6, -5)],
        }
    }

    /// `(eta(6z) eta(z) / (eta(2z) eta(3z)))^12`
    pub fn apery_hauptmodul() -> Self {
        EtaQuotientSpec {
            factors: vec![(6, 12), (1, 12), (2, -12), (3, -12)],
        }
    }

    /// `eta(z)^4 eta(3z)^4 / (eta(2z)^2 eta(6z)^2)`
    pub fn domb_form() -> Self {
        EtaQuotientSpec {
            factors: vec![(1, 4), (3, 4), (2, -2), (6, -2)],
        }
    }

    /// `(eta(2z) eta(6z) / (eta(z) eta(3z)))^6`
    pub fn domb_hauptmodul() -> Self {
        EtaQuotientSpec {
            factors: vec![(2, 6), (6, 6), (1, -6), (3, -6)],
        }
    }

    /// `sum d e_d`, which is 24 times the exponent of the leading `q`.
    pub fn weight_sum(&self) -> i64 {
        self.factors
            .iter()
            .map(|&(d, e)| i64::from(d) * i64::from(e))
            .sum()
    }

    pub fn leading_exponent(&self) -> Result<i64> {
        let sum = self.weight_sum();
        if sum % 24 != 0 {
            return Err(Error::NonIntegralWeight(sum));
        }
        Ok(sum / 24)
    }

    /// `self / other`, by subtracting exponent lists.
    pub fn divide(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().map(|&(d, e)| (d, -e)));
        EtaQuotientSpec { factors }
    }
}

/// Expands an eta quotient as an integer q-series known below `order`.
pub fn eta_quotient(spec: &EtaQuotientSpec, order: i64) -> Result<TruncatedSeries> {
    let shift = spec.leading_exponent()?;
    let relative = order - shift;
    if relative <= 0 {
        return Ok(TruncatedSeries::new(order, Vec::new(), order));
    }
    let mut body = TruncatedSeries::one(relative);
    for &(d, e) in &spec.factors {
        if e == 0 {
            continue;
        }
        let base_order = (relative as u64).div_ceil(u64::from(d));
        let factor = eta_series(base_order)
            .substitute_power(d)
            .truncate(relative);
        body = body.mul(&factor.pow(i64::from(e))?);
    }
    Ok(body.shift(shift))
}
