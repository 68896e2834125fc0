//! Identities satisfied by the `R_λ`: the evaluation and binomial formulas,
//! duality, Pieri rules, closed forms, comparisons with shifted Jack
//! polynomials and the triangularity statements.
//!
//! Every `check_*` function returns `Ok(())` when the identity holds and
//! `Err(Error::Mismatch(..))` with both sides spelled out when it does not.

pub mod closed;
pub mod duality;
pub mod evaluation;
pub mod jack;
pub mod pieri;
pub mod table;
pub mod triangularity;

use std::fmt::Display;

use num_rational::BigRational;

use crate::error::{Error, Result};

/// The values of `α` used wherever a formula depends on it.
pub fn alpha_samples() -> Vec<BigRational> {
    [(1, 1), (2, 1), (5, 2), (7, 3)].iter().map(|&(p, q)| BigRational::new(p.into(), q.into())).collect()
}

pub(crate) fn ensure_eq<T: PartialEq + Display>(lhs: &T, rhs: &T, what: impl FnOnce() -> String) -> Result<()> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Error::Mismatch(format!("{}: left {lhs}, right {rhs}", what())))
    }
}

pub(crate) fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Mismatch(what()))
    }
}
