use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use super::{ExactInteger, ExactRational};
use crate::error::{Error, Result};

/// Rows with index above this are computed on demand and not retained.
pub const CACHED_ROW_LIMIT: u64 = 1024;

/// Thread-safe cache of Pascal rows keyed by `n`.
///
/// A row is built along itself with `C(n, k+1) = C(n, k)(n - k)/(k + 1)`
/// and mirrored, so no row depends on its predecessor being present.
#[derive(Debug, Default)]
pub struct PascalCache {
    rows: RwLock<HashMap<u64, Arc<[ExactInteger]>>>,
}

impl PascalCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Row `n` of Pascal's triangle, `C(n, 0..=n)`.
    pub fn row(&self, n: u64) -> Arc<[ExactInteger]> {
        if n > CACHED_ROW_LIMIT {
            return build_row(n);
        }
        if let Some(row) = self.rows.read().expect("pascal cache poisoned").get(&n) {
            return Arc::clone(row);
        }
        let row = build_row(n);
        let mut rows = self.rows.write().expect("pascal cache poisoned");
        Arc::clone(rows.entry(n).or_insert(row))
    }

    /// `C(n, k)`, zero when `k > n`.
    pub fn get(&self, n: u64, k: u64) -> ExactInteger {
        if k > n {
            return ExactInteger::zero();
        }
        if n > CACHED_ROW_LIMIT {
            return single(n, k);
        }
        self.row(n)[k as usize].clone()
    }

    pub fn cached_rows(&self) -> usize {
        self.rows.read().expect("pascal cache poisoned").len()
    }
}

fn build_row(n: u64) -> Arc<[ExactInteger]> {
    let len = n as usize + 1;
    let mut row = Vec::with_capacity(len);
    let mut current = ExactInteger::from(1u32);
    for k in 0..=n / 2 {
        row.push(current.clone());
        current = current * (n - k) / (k + 1);
    }
    for k in (n / 2 + 1)..=n {
        let mirrored = row[(n - k) as usize].clone();
        row.push(mirrored);
    }
    row.into()
}

fn single(n: u64, k: u64) -> ExactInteger {
    let k = k.min(n - k);
    let mut acc = ExactInteger::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Process-wide cache shared by the sequence and verification code.
pub fn global_cache() -> &'static PascalCache {
    static CACHE: OnceLock<PascalCache> = OnceLock::new();
    CACHE.get_or_init(PascalCache::new)
}

/// `C(n, k)` for unsigned arguments through the global cache.
pub fn choose(n: u64, k: u64) -> ExactInteger {
    global_cache().get(n, k)
}

/// `C(n, k)` with the convention `C(n, k) = 0` for `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<ExactInteger> {
    if n < 0 {
        return Err(Error::NegativeArgument(format!("binomial top {n}")));
    }
    if k < 0 {
        return Ok(ExactInteger::zero());
    }
    Ok(choose(n as u64, k as u64))
}

/// Checks `C(a-b, c-d) C(b, d) = C(a, c) C(c, d) C(a-c, b-d) / C(a, b)` as
/// exact rationals.
pub fn binomial_product_identity_check(a: u64, b: u64, c: u64, d: u64) -> Result<bool> {
    let valid = d <= b && b <= a && d <= c && c <= a && b - d <= a - c && c - d <= a - b;
    if !valid {
        return Err(Error::DegenerateInstance(format!(
            "binomial identity needs d <= b <= a, d <= c <= a, b-d <= a-c, c-d <= a-b; got ({a},{b},{c},{d})"
        )));
    }
    let lhs = ExactRational::from_integer(choose(a - b, c - d) * choose(b, d));
    let rhs = ExactRational::new(
        choose(a, c) * choose(c, d) * choose(a - c, b - d),
        choose(a, b),
    );
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal_oracle(n: usize) -> Vec<Vec<u128>> {
        let mut rows = vec![vec![1u128]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1u128; i + 1];
            for k in 1..i {
                row[k] = prev[k - 1] + prev[k];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2).unwrap(), 10.into());
        assert_eq!(binomial(10, 5).unwrap(), 252.into());
        for n in 0..20 {
            assert_eq!(binomial(n, 0).unwrap(), 1.into());
        }
    }

    #[test]
    fn out_of_range_is_zero() {
        assert!(binomial(4, -1).unwrap().is_zero());
        assert!(binomial(4, 5).unwrap().is_zero());
        assert!(binomial(0, 1).unwrap().is_zero());
    }

    #[test]
    fn negative_top_rejected() {
        assert!(matches!(binomial(-1, 0), Err(Error::NegativeArgument(_))));
    }

    #[test]
    fn rows_match_pascal_addition() {
        let oracle = pascal_oracle(100);
        let cache = PascalCache::new();
        for (n, row) in oracle.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(cache.get(n as u64, k as u64), ExactInteger::from(v));
            }
        }
        assert_eq!(cache.cached_rows(), 101);
    }

    #[test]
    fn uncached_rows_agree() {
        let n = CACHED_ROW_LIMIT + 7;
        let cache = PascalCache::new();
        let row = cache.row(n);
        assert_eq!(cache.get(n, 3), row[3]);
        assert_eq!(cache.get(n, n - 500), row[500]);
        assert_eq!(row[n as usize - 1], ExactInteger::from(n));
        assert_eq!(&row[300] + &row[301], single(n + 1, 301));
        assert_eq!(cache.cached_rows(), 0);
    }

    #[test]
    fn product_identity_examples() {
        assert!(binomial_product_identity_check(10, 4, 6, 2).unwrap());
        assert!(binomial_product_identity_check(20, 10, 10, 5).unwrap());
        assert!(binomial_product_identity_check(9, 0, 4, 0).unwrap());
        assert!(matches!(
            binomial_product_identity_check(5, 6, 1, 0),
            Err(Error::DegenerateInstance(_))
        ));
    }

    #[test]
    fn concurrent_readers_agree() {
        let cache = PascalCache::new();
        std::thread::scope(|scope| {
            for t in 0..8u64 {
                let cache = &cache;
                scope.spawn(move || {
                    for n in 0..120u64 {
                        let k = (n * 7 + t) % (n + 1);
                        assert_eq!(cache.get(n, k), single(n, k));
                    }
                });
            }
        });
    }
}
