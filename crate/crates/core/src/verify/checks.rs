//! Checks on the construction and the operators that the identity layer
//! does not cover: the defining properties, eigenvalues, cut-off and
//! commutativity.

use num_rational::BigRational;

use crate::ambient::Ambient;
use crate::combinatorics::factors::c_prime_even;
use crate::combinatorics::{bracket, bracket1, enumerate_lambda, odd_degree, Partition};
use crate::diffops::{component_operators, determinant_expand, eigenvalue, euler_fields, DiffOp, Kind};
use crate::error::{Error, Result};
use crate::exactalg::{Mono, MultiPoly, ParamScalar};
use crate::interpolation::{build_r, e_mu};

fn mismatch(msg: String) -> Error {
    Error::Mismatch(msg)
}

fn same(lhs: &MultiPoly, rhs: &MultiPoly, what: impl FnOnce() -> String) -> Result<()> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(mismatch(format!("{}: left {lhs}, right {rhs}", what())))
    }
}

/// Semisymmetry, degree `|λ|_odd`, unit coefficient on `z^{[λ]}`, vanishing on
/// `Λ(|λ|_odd) ∖ {λ}` and `R_λ(ρ+λ) = [c'_λ]_even`.
pub fn defining(amb: &Ambient, lam: &Partition) -> Result<()> {
    let f = build_r(amb, lam)?;
    if !f.is_semisymmetric() {
        return Err(mismatch(format!("R_{lam} is not semisymmetric")));
    }
    let d = odd_degree(lam);
    if f.total_degree().unwrap_or(0) as i64 != d {
        return Err(mismatch(format!("deg R_{lam} = {:?}, expected {d}", f.total_degree())));
    }
    let lead = Mono::from_slice(&bracket(lam).iter().map(|&x| x as u16).collect::<Vec<_>>());
    if !f.coeff(&lead).is_one() {
        return Err(mismatch(format!("coefficient of z^{:?} in R_{lam} is {}", bracket(lam), f.coeff(&lead))));
    }
    for mu in enumerate_lambda(amb.n, d) {
        let v = f.eval(&amb.rho_plus(&mu))?;
        if mu == *lam {
            let want = c_prime_even(lam, &amb.r);
            if v != want {
                return Err(mismatch(format!("R_{lam}(ρ+λ) = {v}, expected {want}")));
            }
        } else if !v.is_zero() {
            return Err(mismatch(format!("R_{lam}(ρ+{mu}) = {v}")));
        }
    }
    Ok(())
}

fn int(t: i64) -> BigRational {
    BigRational::from_integer(t.into())
}

/// `X(t) R_λ` and `Y(t) R_λ` are the eigenvalue products times `R_λ`.
pub fn eigen(amb: &Ambient, lam: &Partition, kind: Kind, t: i64) -> Result<()> {
    if kind == Kind::Y && amb.n_even() == 0 {
        return Ok(());
    }
    let f = build_r(amb, lam)?;
    let op = determinant_expand(kind, amb, &int(t))?;
    let ev = eigenvalue(kind, amb, lam, &ParamScalar::int(t));
    same(&op.apply(&f)?, &f.scale(&ev), || format!("{}·R_{lam}", op.label))
}

/// `η R̄_λ = |λ|_odd R̄_λ` and `η' R̄_λ = [λ]_1 R̄_λ`.
pub fn euler(amb: &Ambient, lam: &Partition) -> Result<()> {
    let bar = build_r(amb, lam)?.top_component();
    let (eta, eta_prime) = euler_fields(amb, &bar)?;
    same(&eta, &bar.scale(&ParamScalar::int(odd_degree(lam))), || format!("η R̄_{lam}"))?;
    same(&eta_prime, &bar.scale(&ParamScalar::int(bracket1(lam))), || format!("η' R̄_{lam}"))
}

/// The cut-off property of every shift coefficient of `X(t)`, `Y(t)` at `ρ+μ`,
/// for `t = 0, …, n̄`, which covers every component operator.
pub fn cutoff(amb: &Ambient, mu: &Partition) -> Result<()> {
    for kind in [Kind::X, Kind::Y] {
        if kind == Kind::Y && amb.n_even() == 0 {
            continue;
        }
        for t in 0..=amb.n_odd() as i64 {
            let op = determinant_expand(kind, amb, &int(t))?;
            if !op.cutoff_check(amb, mu)? {
                return Err(mismatch(format!("{} violates the cut-off at μ = {mu}", op.label)));
            }
        }
    }
    Ok(())
}

/// All component operators `X_1, …, Y_1, …` in one list.
pub fn components(amb: &Ambient) -> Result<Vec<DiffOp>> {
    let mut ops: Vec<DiffOp> = component_operators(Kind::X, amb)?.iter().cloned().collect();
    if amb.n_even() > 0 {
        ops.extend(component_operators(Kind::Y, amb)?.iter().cloned());
    }
    Ok(ops)
}

/// `A B 𝐞_μ = B A 𝐞_μ`.
pub fn commute(a: &DiffOp, b: &DiffOp, mu: &Partition) -> Result<()> {
    let e = e_mu(mu);
    let ab = a.apply(&b.apply(&e)?)?;
    let ba = b.apply(&a.apply(&e)?)?;
    same(&ab, &ba, || format!("[{}, {}] on 𝐞_{mu}", a.label, b.label))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        for n in 1..=3 {
            let amb = Ambient::symbolic(n);
            let ops = components(&amb).unwrap();
            for lam in enumerate_lambda(n, 2) {
                defining(&amb, &lam).unwrap();
                euler(&amb, &lam).unwrap();
                cutoff(&amb, &lam).unwrap();
                for kind in [Kind::X, Kind::Y] {
                    eigen(&amb, &lam, kind, 1).unwrap();
                }
                for a in &ops {
                    for b in &ops {
                        commute(a, b, &lam).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn a_wrong_value_is_caught() {
        let amb = Ambient::symbolic(2);
        let lam = Partition::new(vec![1, 0], 2).unwrap();
        let f = build_r(&amb, &lam).unwrap();
        let err = same(&f, &f.scale(&ParamScalar::int(2)), || "doubling".into()).unwrap_err();
        assert!(err.to_string().contains("doubling"));
    }
}
