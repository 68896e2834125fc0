//! Partition bookkeeping: bracket map, degrees, `ρ`, index subsets, order
//! relations, monoids, and products of arm/leg statistics.

pub mod factors;
pub mod order;
pub mod partition;

pub use order::{monoid_test, order_test, Monoid, Relation};
pub use partition::{
    bracket, bracket1, bracket_inverse, enumerate_lambda, even_degree, n_even, n_odd, odd_degree, Partition,
};

use crate::exactalg::ParamScalar;

/// `ρ = ((n-1) r, (n-2) r, ..., r, 0)`.
pub fn rho(n: usize, r: &ParamScalar) -> Vec<ParamScalar> {
    (0..n).map(|i| r * &ParamScalar::int((n - 1 - i) as i64)).collect()
}

/// `ρ + v`.
pub fn rho_plus(v: &[i64], r: &ParamScalar) -> Vec<ParamScalar> {
    rho(v.len(), r).iter().zip(v).map(|(p, &x)| p + &ParamScalar::int(x)).collect()
}

/// `-ρ_α = -(α + ρ_i)`, the point used in the evaluation formula.
pub fn minus_rho_alpha(n: usize, alpha: &ParamScalar, r: &ParamScalar) -> Vec<ParamScalar> {
    rho(n, r).iter().map(|p| -(alpha + p)).collect()
}
