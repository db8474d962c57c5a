//! Exact computation of Apéry, Domb and generalized Domb numbers, and
//! mechanical verification of their supercongruences, of the lemmas on
//! Coster's products used to prove them, and of the eta-quotient
//! parameterizations of their generating functions.

pub mod arith;
pub mod coster;
pub mod error;
pub mod qseries;
pub mod sequences;
pub mod verifier;

pub use arith::{ExactInteger, ExactRational, Prime, Valuation};
pub use error::{Error, Result};
pub use sequences::{DombSpec, Sequence, SequenceValue};
