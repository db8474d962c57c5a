//! Exact integer and rational arithmetic, binomial coefficients and
//! p-adic valuations.
//!
//! [`ExactInteger`] and [`ExactRational`] are `num` big integers and reduced
//! big rationals; every other module builds on these two types.

mod binomial;
mod prime;
mod valuation;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use binomial::{
    binomial, binomial_product_identity_check, choose, global_cache, PascalCache, CACHED_ROW_LIMIT,
};
pub use prime::Prime;
pub use valuation::{
    binomial_valuation, congruent_mod, factorial_valuation, integer_valuation, rational_valuation,
    Valuation,
};

/// Signed integer of unbounded magnitude.
pub type ExactInteger = BigInt;

/// Fraction of [`ExactInteger`]s, always kept in lowest terms with a
/// positive denominator.
pub type ExactRational = BigRational;

/// `base^exp` as an exact integer.
pub fn int_pow(base: u64, exp: u32) -> ExactInteger {
    num_traits::pow(ExactInteger::from(base), exp as usize)
}

/// `x^exp` for a rational `x`, with `exp` possibly negative.
pub fn rational_pow(x: &ExactRational, exp: i64) -> ExactRational {
    let magnitude = num_traits::pow(x.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        magnitude.recip()
    } else {
        magnitude
    }
}

/// Lifts an integer into the rationals.
pub fn to_rational(x: ExactInteger) -> ExactRational {
    ExactRational::from_integer(x)
}
