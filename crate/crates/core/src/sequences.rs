//! Apéry numbers, Domb numbers and generalized Domb numbers, evaluated
//! from their defining binomial sums.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{choose, ExactInteger};
use crate::error::{Error, Result};

/// Exponent triple `(A, B, C)` of the generalized Domb sum
/// `D(n, A, B, C) = sum_k C(n,k)^A C(2k,k)^B C(2(n-k),n-k)^C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DombSpec {
    a: u32,
    b: u32,
    c: u32,
}

impl DombSpec {
    /// The classical Domb numbers, `(2, 1, 1)`.
    pub const DOMB: DombSpec = DombSpec { a: 2, b: 1, c: 1 };

    /// `(1, 1, 1)`, the coefficients of Zagier's sporadic case E.
    pub const ZAGIER_E: DombSpec = DombSpec { a: 1, b: 1, c: 1 };

    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::DegenerateInstance(format!(
                "Domb exponents must all be >= 1, got ({a}, {b}, {c})"
            )));
        }
        Ok(DombSpec { a, b, c })
    }

    pub fn a(self) -> u32 {
        self.a
    }

    pub fn b(self) -> u32 {
        self.b
    }

    pub fn c(self) -> u32 {
        self.c
    }
}

impl fmt::Display for DombSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// One computed term of a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceValue {
    pub index: u64,
    pub value: ExactInteger,
}

/// Selects one of the sequences this crate can evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sequence {
    Apery,
    Domb,
    Generalized(DombSpec),
}

impl Sequence {
    pub fn name(self) -> &'static str {
        match self {
            Sequence::Apery => "apery",
            Sequence::Domb => "domb",
            Sequence::Generalized(_) => "gendomb",
        }
    }

    pub fn value(self, n: u64) -> ExactInteger {
        match self {
            Sequence::Apery => apery(n),
            Sequence::Domb => domb(n),
            Sequence::Generalized(spec) => generalized_domb(n, spec),
        }
    }

    /// Terms `0..=n`.
    pub fn values_through(self, n: u64) -> Vec<SequenceValue> {
        (0..=n)
            .map(|index| SequenceValue {
                index,
                value: self.value(index),
            })
            .collect()
    }
}

/// `A(n) = sum_k C(n,k)^2 C(n+k,k)^2`.
pub fn apery(n: u64) -> ExactInteger {
    (0..=n)
        .map(|k| {
            let t = choose(n, k) * choose(n + k, k);
            &t * &t
        })
        .sum()
}

/// `C(2n, n)`.
pub fn central_binomial(n: u64) -> ExactInteger {
    choose(2 * n, n)
}

/// The single summand `C(n,k)^A C(2k,k)^B C(2(n-k),n-k)^C`.
pub fn domb_term(n: u64, k: u64, spec: DombSpec) -> Result<ExactInteger> {
    if k > n {
        return Err(Error::DegenerateInstance(format!(
            "Domb summand needs k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(term(n, k, spec))
}

fn term(n: u64, k: u64, spec: DombSpec) -> ExactInteger {
    let pow = |x: ExactInteger, e: u32| num_traits::pow(x, e as usize);
    pow(choose(n, k), spec.a)
        * pow(central_binomial(k), spec.b)
        * pow(central_binomial(n - k), spec.c)
}

/// `D(n, A, B, C)`.
pub fn generalized_domb(n: u64, spec: DombSpec) -> ExactInteger {
    if n == 0 {
        return ExactInteger::one();
    }
    (0..=n).fold(ExactInteger::zero(), |acc, k| acc + term(n, k, spec))
}

/// The Domb numbers `D(n) = D(n, 2, 1, 1)`.
pub fn domb(n: u64) -> ExactInteger {
    generalized_domb(n, DombSpec::DOMB)
}
