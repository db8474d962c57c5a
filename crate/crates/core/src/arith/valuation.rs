use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{ExactInteger, ExactRational, Prime};
use crate::error::{Error, Result};

/// A p-adic valuation. `Infinite` is reserved for the valuation of zero.
///
/// Integer valuations are never negative; rational ones may be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// `self >= bound`.
    pub fn at_least(self, bound: i64) -> bool {
        self >= Valuation::Finite(bound)
    }

    /// Valuation of `x^exp` given the valuation of `x`.
    pub fn times(self, exp: i64) -> Valuation {
        match self {
            Valuation::Finite(v) => Valuation::Finite(v * exp),
            Valuation::Infinite if exp == 0 => Valuation::Finite(0),
            Valuation::Infinite => Valuation::Infinite,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

/// Valuation of a product.
impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => v.fmt(f),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// Legendre's formula, `v_p(n!) = sum_{i >= 1} floor(n / p^i)`.
pub fn factorial_valuation(n: u64, p: Prime) -> u64 {
    let p = p.get();
    let mut total = 0;
    let mut rest = n;
    while rest > 0 {
        rest /= p;
        total += rest;
    }
    total
}

/// `v_p C(n, k)` by Legendre's formula on the three factorials.
pub fn binomial_valuation(n: u64, k: u64, p: Prime) -> Result<u64> {
    if k > n {
        return Err(Error::DegenerateInstance(format!(
            "binomial valuation needs k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(factorial_valuation(n, p) - factorial_valuation(k, p) - factorial_valuation(n - k, p))
}

/// Exponent of `p` in a nonzero integer; `Infinite` for zero.
pub fn integer_valuation(x: &ExactInteger, p: Prime) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let p = ExactInteger::from(p.get());
    let mut rest = x.abs();
    let mut count = 0;
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            return Valuation::Finite(count);
        }
        rest = q;
        count += 1;
    }
}

/// `v_p(numerator) - v_p(denominator)`; `Infinite` for zero.
pub fn rational_valuation(q: &ExactRational, p: Prime) -> Valuation {
    match (
        integer_valuation(q.numer(), p),
        integer_valuation(q.denom(), p),
    ) {
        (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a - b),
        _ => Valuation::Infinite,
    }
}

/// Congruence modulo `p^t` on p-integral rationals.
pub fn congruent_mod(a: &ExactRational, b: &ExactRational, p: Prime, t: u32) -> Result<bool> {
    for x in [a, b] {
        if rational_valuation(x, p) < Valuation::Finite(0) {
            return Err(Error::NotPIntegral { p: p.get() });
        }
    }
    Ok(rational_valuation(&(a - b), p).at_least(t as i64))
}
