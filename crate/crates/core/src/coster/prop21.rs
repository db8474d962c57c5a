use num_traits::One;

use super::products::{g_product, g_star, g_star_truncation, g_star_truncation_closed_form, s_sum};
use super::ValuationCheck;
use crate::arith::{
    choose, rational_pow, rational_valuation, to_rational, ExactInteger, ExactRational, Prime,
};
use crate::error::{Error, Result};

/// Which harmonic-sum bound applies to `S_j(m p^r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmonicPart {
    /// `S_j(m p^r) = 0 mod p^r` when `p - 1` does not divide `j`.
    Single,
    /// `S_{2i-1}(m p^r) = 0 mod p^{2r}` when `(p - 1)/2` does not divide `i`.
    Double,
}

impl HarmonicPart {
    pub fn multiplier(self) -> u32 {
        match self {
            HarmonicPart::Single => 1,
            HarmonicPart::Double => 2,
        }
    }
}

/// The strongest bound the lemma claims for `S_j`, or `HypothesisNotMet`
/// when `j` is a multiple of `p - 1`.
pub fn harmonic_bound(p: Prime, j: u32) -> Result<HarmonicPart> {
    p.require_large()?;
    if j == 0 {
        return Err(Error::HypothesisNotMet(
            "harmonic index j must be >= 1".into(),
        ));
    }
    let p = p.get();
    let half = (p - 1) / 2;
    if j % 2 == 1 && u64::from(j).div_ceil(2) % half != 0 {
        return Ok(HarmonicPart::Double);
    }
    if u64::from(j) % (p - 1) != 0 {
        return Ok(HarmonicPart::Single);
    }
    Err(Error::HypothesisNotMet(format!(
        "j = {j} is divisible by p - 1 = {}",
        p - 1
    )))
}

/// Parts (i)/(ii): `v_p(S_j(m p^r))` against `r` or `2r`.
pub fn check_prop21_i_ii(p: Prime, m: u64, r: u32, j: u32) -> Result<ValuationCheck> {
    if m == 0 || r == 0 {
        return Err(Error::DegenerateInstance(format!(
            "harmonic check needs m, r >= 1, got m = {m}, r = {r}"
        )));
    }
    let part = harmonic_bound(p, j)?;
    let k = m * p.get().pow(r);
    let achieved = rational_valuation(&s_sum(j, k, p), p);
    Ok(ValuationCheck::new(
        achieved,
        i64::from(part.multiplier() * r),
    ))
}

/// Part (iii): `g_AB(pX, k) = g*_AB(pX, k) g_AB(X, floor(k/p))`.
pub fn check_prop21_iii(a: u32, b: u32, x: &ExactInteger, k: u64, p: Prime) -> bool {
    let px = x * p.get();
    g_product(a, b, &px, k) == g_star(a, b, &px, k, p) * g_product(a, b, x, k / p.get())
}

/// Part (iv): the degree `<= 2` truncation of the expanded starred product
/// equals the closed form in `S_1`, `S_2`.
pub fn check_prop21_iv(a: u32, b: u32, k: u64, p: Prime) -> bool {
    g_star_truncation(a, b, k, p) == g_star_truncation_closed_form(a, b, k, p)
}

/// Part (v): `C(n,k)^A C(n+k,k)^B = (-1)^{Ak} (n/(n-k))^A g_AB(n, k)`.
pub fn check_prop21_v(n: u64, k: u64, a: u32, b: u32) -> Result<bool> {
    if k >= n {
        return Err(Error::DegenerateInstance(format!(
            "part (v) needs k < n, got n = {n}, k = {k}"
        )));
    }
    let lhs =
        num_traits::pow(choose(n, k), a as usize) * num_traits::pow(choose(n + k, k), b as usize);
    let ratio = ExactRational::new(n.into(), (n - k).into());
    let sign = if (u64::from(a) * k).is_multiple_of(2) {
        ExactRational::one()
    } else {
        -ExactRational::one()
    };
    let rhs =
        sign * rational_pow(&ratio, i64::from(a)) * g_product(a, b, &ExactInteger::from(n), k);
    Ok(to_rational(lhs) == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn harmonic_examples() {
        let c = check_prop21_i_ii(p(5), 1, 1, 1).unwrap();
        assert_eq!(
            (c.achieved.finite(), c.required.finite()),
            (Some(2), Some(2))
        );
        let c = check_prop21_i_ii(p(5), 1, 1, 2).unwrap();
        assert_eq!(
            (c.achieved.finite(), c.required.finite()),
            (Some(1), Some(1))
        );
        let c = check_prop21_i_ii(p(7), 1, 1, 3).unwrap();
        assert!(c.holds());
        assert_eq!(c.required.finite(), Some(2));
    }

    #[test]
    fn harmonic_side_conditions() {
        assert_eq!(harmonic_bound(p(5), 1).unwrap(), HarmonicPart::Double);
        // j = 3: (3 + 1)/2 = 2 is a multiple of (5 - 1)/2
        assert_eq!(harmonic_bound(p(5), 3).unwrap(), HarmonicPart::Single);
        assert_eq!(harmonic_bound(p(7), 2).unwrap(), HarmonicPart::Single);
        assert!(matches!(
            harmonic_bound(p(5), 4),
            Err(Error::HypothesisNotMet(_))
        ));
        assert!(matches!(
            harmonic_bound(p(7), 12),
            Err(Error::HypothesisNotMet(_))
        ));
        assert!(matches!(harmonic_bound(p(3), 1), Err(Error::SmallPrime(3))));
    }

    #[test]
    fn part_iii_examples() {
        assert!(check_prop21_iii(1, 1, &1.into(), 5, p(5)));
        assert!(check_prop21_iii(2, 1, &3.into(), 17, p(5)));
        assert!(check_prop21_iii(3, 2, &(-4).into(), 4, p(7)));
    }

    #[test]
    fn part_iv_examples() {
        for k in [0, 1, 5, 13] {
            assert!(check_prop21_iv(2, 1, k, p(5)));
        }
    }

    #[test]
    fn part_v_examples() {
        assert!(check_prop21_v(3, 1, 2, 1).unwrap());
        assert!(check_prop21_v(7, 3, 2, 2).unwrap());
        assert!(check_prop21_v(9, 4, 0, 0).unwrap());
        assert!(matches!(
            check_prop21_v(4, 4, 1, 1),
            Err(Error::DegenerateInstance(_))
        ));
    }
}
