use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{to_rational, ExactInteger, ExactRational, Prime};

/// `g_AB(X, k) = prod_{i=1..k} (1 - X/i)^A (1 + X/i)^B`.
pub fn g_product(a: u32, b: u32, x: &ExactInteger, k: u64) -> ExactRational {
    product_over(a, b, x, 1..=k)
}

/// `g*_AB(X, k)`: the same product restricted to `p` not dividing `i`.
pub fn g_star(a: u32, b: u32, x: &ExactInteger, k: u64, p: Prime) -> ExactRational {
    let p = p.get();
    product_over(a, b, x, (1..=k).filter(move |i| i % p != 0))
}

fn product_over(
    a: u32,
    b: u32,
    x: &ExactInteger,
    indices: impl Iterator<Item = u64> + Clone,
) -> ExactRational {
    // (1 - X/i) = (i - X)/i and (1 + X/i) = (i + X)/i
    let vanishes = |target: ExactInteger| indices.clone().any(|i| ExactInteger::from(i) == target);
    if (a > 0 && vanishes(x.clone())) || (b > 0 && vanishes(-x)) {
        return ExactRational::zero();
    }
    let mut minus = ExactInteger::one();
    let mut plus = ExactInteger::one();
    let mut denom = ExactInteger::one();
    for i in indices {
        let i = ExactInteger::from(i);
        if a > 0 {
            minus *= &i - x;
        }
        if b > 0 {
            plus *= &i + x;
        }
        denom *= i;
    }
    let numer = num_traits::pow(minus, a as usize) * num_traits::pow(plus, b as usize);
    ExactRational::new(numer, num_traits::pow(denom, (a + b) as usize))
}

/// `S_j(k) = sum_{i <= k, p does not divide i} 1/i^j`.
pub fn s_sum(j: u32, k: u64, p: Prime) -> ExactRational {
    let p = p.get();
    let indices = || (1..=k).filter(|i| i % p != 0);
    let lcm = indices().fold(ExactInteger::one(), |acc, i| {
        acc.lcm(&ExactInteger::from(i))
    });
    let common = num_traits::pow(lcm, j as usize);
    let numer: ExactInteger = indices()
        .map(|i| &common / num_traits::pow(ExactInteger::from(i), j as usize))
        .sum();
    ExactRational::new(numer, common)
}

/// A polynomial in `X` reduced modulo `X^3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    pub c0: ExactRational,
    pub c1: ExactRational,
    pub c2: ExactRational,
}

impl TruncatedPolynomial {
    pub fn one() -> Self {
        TruncatedPolynomial {
            c0: ExactRational::one(),
            c1: ExactRational::zero(),
            c2: ExactRational::zero(),
        }
    }

    /// `(1 + uX)^e mod X^3`.
    fn binomial_power(u: &ExactRational, e: u32) -> Self {
        let e = ExactInteger::from(e);
        let pairs = &e * (&e - 1u32) / 2u32;
        TruncatedPolynomial {
            c0: ExactRational::one(),
            c1: to_rational(e) * u,
            c2: to_rational(pairs) * u * u,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        TruncatedPolynomial {
            c0: &self.c0 * &other.c0,
            c1: &self.c0 * &other.c1 + &self.c1 * &other.c0,
            c2: &self.c0 * &other.c2 + &self.c1 * &other.c1 + &self.c2 * &other.c0,
        }
    }
}

/// Expands `prod (1 - X/i)^A (1 + X/i)^B` over `i <= k`, `p` not dividing
/// `i`, as a polynomial in `X` and drops every term of degree 3 or more.
pub fn g_star_truncation(a: u32, b: u32, k: u64, p: Prime) -> TruncatedPolynomial {
    let p = p.get();
    (1..=k)
        .filter(|i| i % p != 0)
        .fold(TruncatedPolynomial::one(), |acc, i| {
            let inv = ExactRational::new(1.into(), i.into());
            let down = TruncatedPolynomial::binomial_power(&-inv.clone(), a);
            let up = TruncatedPolynomial::binomial_power(&inv, b);
            acc.mul(&down).mul(&up)
        })
}

/// `1 + (B-A) S_1 X + ((A-B)^2 S_1^2 - (A+B) S_2)/2 X^2`.
pub fn g_star_truncation_closed_form(a: u32, b: u32, k: u64, p: Prime) -> TruncatedPolynomial {
    let s1 = s_sum(1, k, p);
    let s2 = s_sum(2, k, p);
    let diff = to_rational(ExactInteger::from(b) - ExactInteger::from(a));
    let total = to_rational(ExactInteger::from(a + b));
    let half = ExactRational::new(1.into(), 2.into());
    TruncatedPolynomial {
        c0: ExactRational::one(),
        c1: &diff * &s1,
        c2: half * (&diff * &diff * &s1 * &s1 - total * s2),
    }
}
