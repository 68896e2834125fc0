//! The evaluation formula `R_λ(-ρ_α) = (-1)^{|λ|_odd} A_λ(α) B_λ` and its
//! homogeneous versions.

use num_rational::BigRational;

use super::{ensure, ensure_eq};
use crate::ambient::Ambient;
use crate::combinatorics::factors::{b_factor_rows, eval_factors};
use crate::combinatorics::{bracket1, enumerate_lambda, minus_rho_alpha, odd_degree, order_test, Partition, Relation};
use crate::error::Result;
use crate::exactalg::{MultiPoly, ParamScalar};
use crate::interpolation::build_r;

/// `(-1)^{|λ|_odd} A_λ(α) B_λ`. Fails if the row and box forms of `A` or `B` disagree.
pub fn special_value(lam: &Partition, alpha: &BigRational, r: &ParamScalar) -> Result<ParamScalar> {
    let (a, b) = eval_factors(lam, &ParamScalar::from_rational(alpha), r)?;
    let v = &a * &b;
    Ok(if odd_degree(lam) % 2 == 1 { -v } else { v })
}

/// `R_λ(-ρ_α)` by substitution.
pub fn special_value_direct(amb: &Ambient, lam: &Partition, alpha: &BigRational) -> Result<ParamScalar> {
    build_r(amb, lam)?.eval(&minus_rho_alpha(amb.n, &ParamScalar::from_rational(alpha), &amb.r))
}

pub fn check_special_value(amb: &Ambient, lam: &Partition, alpha: &BigRational) -> Result<()> {
    let closed = special_value(lam, alpha, &amb.r)?;
    let direct = special_value_direct(amb, lam, alpha)?;
    ensure(!direct.is_zero(), || format!("R_{lam}(-ρ_α) vanishes at α = {alpha}"))?;
    ensure_eq(&closed, &direct, || format!("R_{lam}(-ρ_α), α = {alpha}"))
}

/// `R̄_λ(1,…,1)`: `B_λ` if `n` is odd or `[λ]_1 = 0`, otherwise 0.
pub fn homogeneous_evaluation(amb: &Ambient, lam: &Partition) -> Result<ParamScalar> {
    if amb.n % 2 == 1 || bracket1(lam) == 0 {
        b_factor_rows(lam, &amb.r)
    } else {
        Ok(ParamScalar::zero())
    }
}

pub fn check_homogeneous_evaluation(amb: &Ambient, lam: &Partition) -> Result<()> {
    let top = build_r(amb, lam)?.top_component();
    let direct = top.eval(&vec![ParamScalar::one(); amb.n])?;
    ensure_eq(&homogeneous_evaluation(amb, lam)?, &direct, || format!("R̄_{lam}(1,…,1)"))
}

/// `R̄_λ(1+z) / B_λ`.
pub fn homogeneous_binomial_lhs(amb: &Ambient, lam: &Partition) -> Result<MultiPoly> {
    let top = build_r(amb, lam)?.top_component();
    let b = b_factor_rows(lam, &amb.r)?;
    Ok(top.translate(&vec![ParamScalar::one(); amb.n]).scale(&b.inv()?))
}

/// `Σ_μ R_μ(ρ+λ)/R_μ(ρ+μ) · R̄_μ(z)/B_μ` over `μ ⊑ λ`, and for even `n` only
/// over `μ` with `[μ]_1 = [λ]_1`.
pub fn homogeneous_binomial_rhs(amb: &Ambient, lam: &Partition) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero(amb.n);
    let at_lam = amb.rho_plus(lam);
    for mu in enumerate_lambda(amb.n, odd_degree(lam)) {
        if !order_test(&mu, lam, Relation::Sqsubseteq)? {
            continue;
        }
        if amb.n % 2 == 0 && bracket1(&mu) != bracket1(lam) {
            continue;
        }
        let r_mu = build_r(amb, &mu)?;
        let c = r_mu.eval(&at_lam)?.checked_div(&r_mu.eval(&amb.rho_plus(&mu))?)?;
        let c = c.checked_div(&b_factor_rows(&mu, &amb.r)?)?;
        acc = acc.add(&r_mu.top_component().scale(&c));
    }
    Ok(acc)
}

pub fn homogeneous_binomial(amb: &Ambient, lam: &Partition) -> Result<()> {
    ensure_eq(&homogeneous_binomial_lhs(amb, lam)?, &homogeneous_binomial_rhs(amb, lam)?, || {
        format!("R̄_{lam}(1+z)/B_{lam}")
    })
}
