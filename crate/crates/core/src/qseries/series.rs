use num_traits::{One, Signed, Zero};

use crate::arith::ExactInteger;
use crate::error::{Error, Result};

/// `sum_i coefficients[i] q^{leading_exponent + i}`, known exactly for
/// exponents below `valid_order` and unknown from there on.
///
/// The coefficient vector never extends past `valid_order`, and leading
/// zero coefficients are trimmed into `leading_exponent`. The zero series
/// has no coefficients and `leading_exponent == valid_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    leading_exponent: i64,
    coefficients: Vec<ExactInteger>,
    valid_order: i64,
}

impl TruncatedSeries {
    pub fn new(leading_exponent: i64, coefficients: Vec<ExactInteger>, valid_order: i64) -> Self {
        let mut series = TruncatedSeries {
            leading_exponent,
            coefficients,
            valid_order,
        };
        series.normalize();
        series
    }

    /// The constant `1` known to `valid_order`.
    pub fn one(valid_order: i64) -> Self {
        TruncatedSeries::monomial(ExactInteger::one(), 0, valid_order)
    }

    pub fn monomial(coefficient: ExactInteger, exponent: i64, valid_order: i64) -> Self {
        TruncatedSeries::new(exponent, vec![coefficient], valid_order)
    }

    fn normalize(&mut self) {
        let known = (self.valid_order - self.leading_exponent).max(0) as usize;
        self.coefficients.truncate(known);
        let zeros = self.coefficients.iter().take_while(|c| c.is_zero()).count();
        self.coefficients.drain(..zeros);
        self.leading_exponent += zeros as i64;
        if self.coefficients.is_empty() {
            self.leading_exponent = self.valid_order;
        }
        while self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
    }

    pub fn leading_exponent(&self) -> i64 {
        self.leading_exponent
    }

    pub fn valid_order(&self) -> i64 {
        self.valid_order
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Coefficient of `q^exponent`. Panics at or beyond `valid_order`.
    pub fn coefficient(&self, exponent: i64) -> ExactInteger {
        assert!(
            exponent < self.valid_order,
            "coefficient of q^{exponent} requested beyond valid order {}",
            self.valid_order
        );
        if exponent < self.leading_exponent {
            return ExactInteger::zero();
        }
        self.coefficients
            .get((exponent - self.leading_exponent) as usize)
            .cloned()
            .unwrap_or_default()
    }

    /// Coefficients of `q^from .. q^valid_order`.
    pub fn coefficients_from(&self, from: i64) -> Vec<ExactInteger> {
        (from..self.valid_order)
            .map(|e| self.coefficient(e))
            .collect()
    }

    /// The same series with `valid_order` lowered to `order`.
    pub fn truncate(&self, order: i64) -> Self {
        TruncatedSeries::new(
            self.leading_exponent,
            self.coefficients.clone(),
            order.min(self.valid_order),
        )
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        TruncatedSeries::new(
            self.leading_exponent + shift,
            self.coefficients.clone(),
            self.valid_order + shift,
        )
    }

    /// `q -> q^d`.
    pub fn substitute_power(&self, d: u32) -> Self {
        let d = i64::from(d);
        let mut coefficients = vec![ExactInteger::zero(); self.coefficients.len() * d as usize];
        for (i, c) in self.coefficients.iter().enumerate() {
            coefficients[i * d as usize] = c.clone();
        }
        TruncatedSeries::new(
            self.leading_exponent * d,
            coefficients,
            self.valid_order * d,
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.valid_order.min(other.valid_order);
        let lead = self.leading_exponent.min(other.leading_exponent).min(order);
        let coefficients = (lead..order)
            .map(|e| self.coefficient(e) + other.coefficient(e))
            .collect();
        TruncatedSeries::new(lead, coefficients, order)
    }

    pub fn scale(&self, factor: &ExactInteger) -> Self {
        TruncatedSeries::new(
            self.leading_exponent,
            self.coefficients.iter().map(|c| c * factor).collect(),
            self.valid_order,
        )
    }

    /// Product; valid up to the smaller of each factor's order shifted by
    /// the other's leading exponent, and never past either input's order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = (self.valid_order + other.leading_exponent)
            .min(other.valid_order + self.leading_exponent)
            .min(self.valid_order)
            .min(other.valid_order);
        let lead = self.leading_exponent + other.leading_exponent;
        let len = (order - lead).max(0) as usize;
        let mut coefficients = vec![ExactInteger::zero(); len];
        for (i, a) in self.coefficients.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate().take(len - i) {
                coefficients[i + j] += a * b;
            }
        }
        TruncatedSeries::new(lead, coefficients, order)
    }

    /// Multiplicative inverse. The first nonzero coefficient must be `±1`.
    pub fn reciprocal(&self) -> Result<Self> {
        let head = self.coefficients.first().ok_or(Error::NonUnitConstant)?;
        if !head.abs().is_one() {
            return Err(Error::NonUnitConstant);
        }
        let lead = self.leading_exponent;
        let len = (self.valid_order - lead) as usize;
        let unit = head.clone();
        // u * w = 1 with u_0 = ±1: w_n = -u_0 * sum_{i=1..n} u_i w_{n-i}
        let mut inverse: Vec<ExactInteger> = Vec::with_capacity(len);
        inverse.push(unit.clone());
        for n in 1..len {
            let mut acc = ExactInteger::zero();
            for i in 1..=n.min(self.coefficients.len() - 1) {
                acc += &self.coefficients[i] * &inverse[n - i];
            }
            inverse.push(-(&unit * acc));
        }
        let order = (self.valid_order - 2 * lead).min(self.valid_order);
        Ok(TruncatedSeries::new(-lead, inverse, order))
    }

    /// `self^exponent`; negative exponents go through the reciprocal.
    pub fn pow(&self, exponent: i64) -> Result<Self> {
        let base = if exponent < 0 {
            self.reciprocal()?
        } else {
            self.clone()
        };
        let mut e = exponent.unsigned_abs();
        let mut result = TruncatedSeries::one(base.valid_order);
        let mut square = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&square);
            }
            e >>= 1;
            if e > 0 {
                square = square.mul(&square);
            }
        }
        Ok(result)
    }

    /// `sum_n c_n u^n` where `c_n` are the coefficients of `self` in the
    /// variable `u`. Needs `u` to start at a positive power of `q` and
    /// `self` to have no negative powers.
    pub fn compose(&self, u: &TruncatedSeries) -> Result<Self> {
        if u.leading_exponent < 1 {
            return Err(Error::NonPositiveValuation(u.leading_exponent));
        }
        if self.leading_exponent < 0 {
            return Err(Error::NonPositiveValuation(self.leading_exponent));
        }
        let order = u
            .valid_order
            .min(self.valid_order.saturating_mul(u.leading_exponent));
        let mut total = TruncatedSeries::new(0, Vec::new(), order);
        let mut power = TruncatedSeries::one(order).mul(&u.pow(self.leading_exponent)?);
        let mut n = self.leading_exponent;
        while n < self.valid_order && power.leading_exponent < order {
            let c = self.coefficient(n);
            if !c.is_zero() {
                total = total.add(&power.scale(&c));
            }
            power = power.mul(u);
            n += 1;
        }
        Ok(total.truncate(order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(lead: i64, coeffs: &[i64], order: i64) -> TruncatedSeries {
        TruncatedSeries::new(lead, coeffs.iter().map(|&c| c.into()).collect(), order)
    }

    fn ints(xs: &[i64]) -> Vec<ExactInteger> {
        xs.iter().map(|&c| c.into()).collect()
    }

    #[test]
    fn normalization_trims_zeros() {
        let s = series(0, &[0, 0, 3, 4, 0], 5);
        assert_eq!(s.leading_exponent(), 2);
        assert_eq!(s.coefficients_from(0), ints(&[0, 0, 3, 4, 0]));
        let z = series(1, &[0, 0], 6);
        assert!(z.is_zero());
        assert_eq!(z.leading_exponent(), 6);
    }

    #[test]
    fn reciprocal_of_one() {
        let one = TruncatedSeries::one(10);
        assert_eq!(one.reciprocal().unwrap(), one);
    }

    #[test]
    fn reciprocal_of_one_minus_q() {
        let s = series(0, &[1, -1], 8);
        assert_eq!(s.reciprocal().unwrap().coefficients_from(0), ints(&[1; 8]));
        assert_eq!(s.mul(&s.reciprocal().unwrap()), TruncatedSeries::one(8));
    }

    #[test]
    fn reciprocal_of_shifted_series() {
        let s = series(2, &[-1, 3, 1], 10);
        let inv = s.reciprocal().unwrap();
        assert_eq!(inv.leading_exponent(), -2);
        assert_eq!(inv.valid_order(), 6);
        let prod = s.mul(&inv);
        assert_eq!(
            prod.coefficients_from(0),
            TruncatedSeries::one(prod.valid_order()).coefficients_from(0)
        );
    }

    #[test]
    fn reciprocal_needs_unit() {
        assert_eq!(
            series(0, &[2, 1], 5).reciprocal(),
            Err(Error::NonUnitConstant)
        );
        assert_eq!(series(0, &[], 5).reciprocal(), Err(Error::NonUnitConstant));
    }

    #[test]
    fn powers() {
        let s = series(0, &[1, 1], 6);
        assert_eq!(
            s.pow(4).unwrap().coefficients_from(0),
            ints(&[1, 4, 6, 4, 1, 0])
        );
        assert_eq!(
            s.pow(-1).unwrap().coefficients_from(0),
            ints(&[1, -1, 1, -1, 1, -1])
        );
        assert_eq!(s.pow(0).unwrap(), TruncatedSeries::one(6));
    }

    #[test]
    fn order_bookkeeping() {
        let a = series(0, &[1, 2, 3], 5);
        let b = series(1, &[1, 1], 7);
        let prod = a.mul(&b);
        assert!(prod.valid_order() <= a.valid_order().min(b.valid_order()));
        assert_eq!(a.add(&b).valid_order(), 5);
    }

    #[test]
    fn compose_geometric() {
        // 1/(1 - u) at u = q/(1 - q) is (1 - q)/(1 - 2q)
        let f = series(0, &[1; 10], 10);
        let u = series(1, &[1; 9], 10);
        let got = f.compose(&u).unwrap();
        assert_eq!(
            got.coefficients_from(0),
            ints(&[1, 1, 2, 4, 8, 16, 32, 64, 128, 256])
        );
    }

    #[test]
    fn compose_rejects_constant_inner() {
        let f = series(0, &[1, 1], 5);
        assert_eq!(
            f.compose(&series(0, &[1, 1], 5)),
            Err(Error::NonPositiveValuation(0))
        );
    }

    #[test]
    fn substitution() {
        let s = series(0, &[1, -1], 4);
        let t = s.substitute_power(3);
        assert_eq!(t.valid_order(), 12);
        assert_eq!(
            t.coefficients_from(0),
            ints(&[1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0])
        );
    }

    #[test]
    #[should_panic(expected = "beyond valid order")]
    fn reading_past_order_panics() {
        series(0, &[1], 3).coefficient(3);
    }
}
