use std::fmt;

use crate::error::{Error, Result};

/// A rational prime, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// A prime `p > 3`, the standing hypothesis of every supercongruence
    /// checked by this crate.
    pub fn new_large(p: u64) -> Result<Self> {
        let prime = Prime::new(p)?;
        if p <= 3 {
            return Err(Error::SmallPrime(p));
        }
        Ok(prime)
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub(crate) fn require_large(self) -> Result<()> {
        if self.0 <= 3 {
            Err(Error::SmallPrime(self.0))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
