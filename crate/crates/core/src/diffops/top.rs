//! Top-degree parts of the operators: `X̄(t)`, `Ȳ(t)` and the Euler fields.

use num_rational::BigRational;

use super::operator::{component_operators, determinant_expand, DiffOp};
use super::Kind;
use crate::ambient::Ambient;
use crate::combinatorics::n_even;
use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, ParamScalar};

fn homogeneous_degree(f: &MultiPoly) -> Result<u32> {
    let d = f.total_degree().unwrap_or(0);
    if f.homogeneous_component(d) != *f {
        return Err(Error::OutOfRange("expected a homogeneous polynomial".into()));
    }
    Ok(d)
}

/// The degree-`deg f` part of `D f`, for homogeneous `f`.
pub fn apply_top_op(op: &DiffOp, f: &MultiPoly) -> Result<MultiPoly> {
    let d = homogeneous_degree(f)?;
    Ok(op.apply(f)?.homogeneous_component(d))
}

/// `X̄(t) f` or `Ȳ(t) f` for homogeneous `f`.
pub fn apply_top(kind: Kind, amb: &Ambient, f: &MultiPoly, t: &BigRational) -> Result<MultiPoly> {
    apply_top_op(&*determinant_expand(kind, amb, t)?, f)
}

/// `Σ z_i ∂_i f`.
pub fn euler(f: &MultiPoly) -> MultiPoly {
    let n = f.nvars();
    let mut acc = MultiPoly::zero(n);
    for i in 0..n {
        acc = acc.add(&f.partial(i).mul(&MultiPoly::var(n, i)));
    }
    acc
}

/// `η = X̄_1 - n̄ n̲ r`, computed through the operator, one homogeneous piece at a time.
pub fn eta_via_operator(amb: &Ambient, f: &MultiPoly) -> Result<MultiPoly> {
    let x1 = &component_operators(Kind::X, amb)?[0];
    let shift = &amb.r * &ParamScalar::int((amb.n_odd() * amb.n_even()) as i64);
    by_components(f, |g| Ok(apply_top_op(x1, g)?.sub(&g.scale(&shift))))
}

/// `η' = X̄_1 - Ȳ_1 - n̲ r`, one homogeneous piece at a time.
pub fn eta_prime(amb: &Ambient, f: &MultiPoly) -> Result<MultiPoly> {
    let n = amb.n;
    let x1 = &component_operators(Kind::X, amb)?[0];
    let diff = if n_even(n) > 0 {
        let y1 = &component_operators(Kind::Y, amb)?[0];
        DiffOp::combine(n, "X_1-Y_1".into(), &[(ParamScalar::one(), x1), (-ParamScalar::one(), y1)])
    } else {
        x1.clone()
    };
    let shift = &amb.r * &ParamScalar::int(n_even(n) as i64);
    by_components(f, |g| Ok(apply_top_op(&diff, g)?.sub(&g.scale(&shift))))
}

/// `(η f, η' f)`.
pub fn euler_fields(amb: &Ambient, f: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
    Ok((euler(f), eta_prime(amb, f)?))
}

fn by_components(f: &MultiPoly, op: impl Fn(&MultiPoly) -> Result<MultiPoly>) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero(f.nvars());
    for d in 0..=f.total_degree().unwrap_or(0) {
        let g = f.homogeneous_component(d);
        if !g.is_zero() {
            acc = acc.add(&op(&g)?);
        }
    }
    Ok(acc)
}

/// `Σ_{i odd} u_i ∂_i f` at a point, with
/// `u_i = v_i ∏_{j even}(z_i - z_j) / ∏_{j odd, j≠i}(z_i - z_j)` and `v_i = z_i` for odd `n`, 1 otherwise.
pub fn eta_prime_closed_form_at(f: &MultiPoly, z: &[ParamScalar]) -> Result<ParamScalar> {
    let n = z.len();
    let mut acc = ParamScalar::zero();
    for i in (0..n).step_by(2) {
        let mut u = if n % 2 == 1 { z[i].clone() } else { ParamScalar::one() };
        for j in 0..n {
            if j == i {
                continue;
            }
            let d = &z[i] - &z[j];
            if j % 2 == 1 {
                u *= &d;
            } else {
                u = u.checked_div(&d)?;
            }
        }
        acc += &(&u * &f.partial(i).eval(z)?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{bracket1, enumerate_lambda, odd_degree, Partition};
    use crate::interpolation::{build_r, elementary_semisym, top_component};

    #[test]
    fn euler_on_degree_one() {
        let e2 = elementary_semisym(2, 4).unwrap();
        assert_eq!(euler(&e2), e2);
    }

    #[test]
    fn eta_prime_eigenvalues() {
        for n in 2..=4 {
            let amb = Ambient::symbolic(n);
            for lam in enumerate_lambda(n, 2) {
                let bar = top_component(&build_r(&amb, &lam).unwrap()).unwrap();
                let (eta, etap) = euler_fields(&amb, &bar).unwrap();
                assert_eq!(eta, bar.scale(&ParamScalar::int(odd_degree(&lam))), "n={n} λ={lam}");
                assert_eq!(etap, bar.scale(&ParamScalar::int(bracket1(&lam))), "n={n} λ={lam}");
                assert_eq!(eta_via_operator(&amb, &bar).unwrap(), eta);
            }
        }
    }

    #[test]
    fn apply_top_rejects_inhomogeneous() {
        let amb = Ambient::symbolic(3);
        let r1 = build_r(&amb, &Partition::new(vec![1, 0, 0], 3).unwrap()).unwrap();
        assert!(apply_top(Kind::X, &amb, &r1, &BigRational::from_integer(1.into())).is_err());
    }
}
