//! Coster's products `g_AB(X, k)`, `g*_AB(X, k)`, the restricted harmonic
//! sums `S_j(k)`, and the lemma-level checks built on them that drive the
//! proof of the generalized Domb supercongruence.

mod lifting;
mod products;
mod prop21;

pub use lifting::{
    coster_witnesses, key_congruence_check, ratio_congruence_check, rewritten_summand,
    seven_term_valuations, step_factorization_check, vanishing_sum_check, BcCase, CosterWitness,
    Lift, SevenTerms, VanishingSum,
};
pub use products::{
    g_product, g_star, g_star_truncation, g_star_truncation_closed_form, s_sum, TruncatedPolynomial,
};
pub use prop21::{
    check_prop21_i_ii, check_prop21_iii, check_prop21_iv, check_prop21_v, harmonic_bound,
    HarmonicPart,
};

use crate::arith::Valuation;

/// An achieved p-adic valuation against the valuation a claim requires.
///
/// `required == Infinite` encodes an exact identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuationCheck {
    pub achieved: Valuation,
    pub required: Valuation,
}

impl ValuationCheck {
    pub fn new(achieved: Valuation, required: i64) -> Self {
        ValuationCheck {
            achieved,
            required: Valuation::Finite(required),
        }
    }

    pub fn exact(equal: bool) -> Self {
        ValuationCheck {
            achieved: if equal {
                Valuation::Infinite
            } else {
                Valuation::Finite(0)
            },
            required: Valuation::Infinite,
        }
    }

    pub fn holds(&self) -> bool {
        self.achieved >= self.required
    }
}
