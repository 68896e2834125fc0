//! Triangularity of `R_λ` in the monomial, `u`-monomial and `𝐞` bases,
//! the support of products, and vanishing off the order `⊑`.

use std::collections::HashMap;

use super::{ensure, ensure_eq};
use crate::ambient::Ambient;
use crate::combinatorics::order::dominates;
use crate::combinatorics::partition::even_part;
use crate::combinatorics::{bracket, bracket1, enumerate_lambda, odd_degree, order_test, Partition, Relation};
use crate::error::Result;
use crate::exactalg::{Mono, MultiPoly, ParamScalar};
use crate::interpolation::basis::expand_by_leading_terms;
use crate::interpolation::{build_r, Basis};

fn exponents(m: &Mono) -> Vec<i64> {
    m.as_slice().iter().map(|&e| e as i64).collect()
}

/// Monomials of `R_λ` are dominated by `[λ]`, the coefficient of `z^{[λ]}` is 1,
/// and `R̄_λ` is homogeneous of degree `|λ|_odd`.
pub fn triangular1(amb: &Ambient, lam: &Partition) -> Result<()> {
    let r_lam = build_r(amb, lam)?;
    let top = bracket(lam);
    for (m, _) in r_lam.terms() {
        let e = exponents(m);
        ensure(dominates(&top, &e), || format!("z^{e:?} in R_{lam} is not dominated by [λ] = {top:?}"))?;
    }
    let lead = Mono::from_slice(&top.iter().map(|&x| x as u16).collect::<Vec<_>>());
    ensure_eq(&r_lam.coeff(&lead), &ParamScalar::one(), || format!("coefficient of z^[λ] in R_{lam}"))?;
    let d = odd_degree(lam) as u32;
    for (m, _) in r_lam.top_component().terms() {
        ensure(m.degree() == d, || format!("R̄_{lam} has a monomial of degree {} != {d}", m.degree()))?;
    }
    Ok(())
}

/// `f(u_1+u_2, u_2, u_3+u_4, u_4, …)`, with `u_{n+1} = 0` for odd `n`.
pub fn u_substitute(f: &MultiPoly) -> MultiPoly {
    let n = f.nvars();
    let images: Vec<MultiPoly> = (0..n)
        .map(|i| {
            let v = MultiPoly::var(n, i);
            if i % 2 == 0 && i + 1 < n {
                v.add(&MultiPoly::var(n, i + 1))
            } else {
                v
            }
        })
        .collect();
    let mut powers: HashMap<(usize, u16), MultiPoly> = HashMap::new();
    let mut acc = MultiPoly::zero(n);
    for (m, c) in f.terms() {
        let mut t = MultiPoly::constant(n, c.clone());
        for (i, &e) in m.as_slice().iter().enumerate() {
            if e > 0 {
                let p = powers.entry((i, e)).or_insert_with(|| images[i].pow(e as u32));
                t = t.mul(p);
            }
        }
        acc = acc.add(&t);
    }
    acc
}

/// How the even exponents of a `u`-monomial are compared with `λ_even`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvenBound {
    /// Prefix sums, as the degree argument actually gives.
    Dominance,
    /// Entry by entry, a strictly stronger requirement.
    Componentwise,
}

/// Monomials `u^μ` of `R_λ(u_1+u_2, u_2, …)` satisfy `μ ≤ [λ]` and `μ_even` bounded by `λ_even`.
pub fn triangular2a(amb: &Ambient, lam: &Partition, bound: EvenBound) -> Result<()> {
    let sub = u_substitute(&*build_r(amb, lam)?);
    let top = bracket(lam);
    let lam_even = even_part(lam);
    for (m, _) in sub.terms() {
        let e = exponents(m);
        ensure(dominates(&top, &e), || format!("u^{e:?} in R_{lam}(u) is not dominated by [λ] = {top:?}"))?;
        let ev = even_part(&e);
        let ok = match bound {
            EvenBound::Dominance => dominates(&lam_even, &ev),
            EvenBound::Componentwise => ev.iter().zip(&lam_even).all(|(a, b)| a <= b),
        };
        ensure(ok, || format!("u^{e:?} in R_{lam}(u): even exponents {ev:?} exceed λ_even = {lam_even:?} ({bound:?})"))?;
    }
    Ok(())
}

/// `R_λ = Σ_{μ ⪯ λ} b_μ 𝐞_μ` with `b_λ = 1`, and the support of `R̄_λ` is homogeneous-`⪯` below `λ`.
pub fn triangular2b(amb: &Ambient, lam: &Partition) -> Result<()> {
    let r_lam = build_r(amb, lam)?;
    let full = expand_by_leading_terms(amb, &r_lam, Basis::Elementary)?;
    for mu in full.support() {
        ensure(order_test(mu, lam, Relation::Prec)?, || format!("𝐞_{mu} occurs in R_{lam} but μ ⋠ λ"))?;
    }
    ensure_eq(&full.coeff(lam), &ParamScalar::one(), || format!("coefficient of 𝐞_{lam} in R_{lam}"))?;
    let top = expand_by_leading_terms(amb, &r_lam.top_component(), Basis::Elementary)?;
    for mu in top.support() {
        ensure(order_test(mu, lam, Relation::PrecHom)?, || format!("𝐞_{mu} occurs in R̄_{lam} off the homogeneous order"))?;
    }
    Ok(())
}

/// The `𝐞`-support of `R̄_λ` keeps `|μ|_odd` and `[μ]_1`.
pub fn bigrading(amb: &Ambient, lam: &Partition) -> Result<()> {
    let top = expand_by_leading_terms(amb, &build_r(amb, lam)?.top_component(), Basis::Elementary)?;
    for mu in top.support() {
        ensure(odd_degree(mu) == odd_degree(lam) && bracket1(mu) == bracket1(lam), || {
            format!("𝐞_{mu} in R̄_{lam} has bidegree ({}, {}) instead of ({}, {})", odd_degree(mu), bracket1(mu), odd_degree(lam), bracket1(lam))
        })?;
    }
    Ok(())
}

/// Every `R_τ` in `R_λ R_μ` has `λ ⊑ τ`, `μ ⊑ τ` and `τ ⪯ λ+μ`.
pub fn product_support(amb: &Ambient, lam: &Partition, mu: &Partition) -> Result<()> {
    let prod = build_r(amb, lam)?.mul(&*build_r(amb, mu)?);
    let sum: Vec<i64> = lam.iter().zip(mu.iter()).map(|(a, b)| a + b).collect();
    for tau in expand_by_leading_terms(amb, &prod, Basis::R)?.support() {
        let ok = order_test(lam, tau, Relation::Sqsubseteq)?
            && order_test(mu, tau, Relation::Sqsubseteq)?
            && order_test(tau, &sum, Relation::Prec)?;
        ensure(ok, || format!("R_{tau} occurs in R_{lam} R_{mu} outside λ, μ ⊑ τ ⪯ λ+μ"))?;
    }
    Ok(())
}

/// `R_λ(ρ+μ) = 0` for every `μ ∈ Λ(d)` with `λ ⋢ μ`.
pub fn extra_vanishing(amb: &Ambient, lam: &Partition, d: i64) -> Result<()> {
    let r_lam = build_r(amb, lam)?;
    for mu in enumerate_lambda(amb.n, d) {
        if order_test(lam, &mu, Relation::Sqsubseteq)? {
            continue;
        }
        let v = r_lam.eval(&amb.rho_plus(&mu))?;
        ensure(v.is_zero(), || format!("R_{lam}(ρ+{mu}) = {v} although λ ⋢ μ"))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec(), v.len()).unwrap()
    }

    #[test]
    fn u_coordinates() {
        // z1 - z2 + z3 - r becomes u1 + u3 - r for n = 3.
        let amb = Ambient::symbolic(3);
        let sub = u_substitute(&build_r(&amb, &p(&[1, 0, 0])).unwrap());
        let want = MultiPoly::var(3, 0)
            .add(&MultiPoly::var(3, 2))
            .sub(&MultiPoly::constant(3, ParamScalar::r()));
        assert_eq!(sub, want);
    }

    #[test]
    fn small_sweep() {
        for n in 1..=3 {
            let amb = Ambient::symbolic(n);
            for lam in enumerate_lambda(n, 2) {
                triangular1(&amb, &lam).unwrap();
                triangular2a(&amb, &lam, EvenBound::Dominance).unwrap();
                triangular2b(&amb, &lam).unwrap();
                bigrading(&amb, &lam).unwrap();
                extra_vanishing(&amb, &lam, 3).unwrap();
                for mu in enumerate_lambda(n, 2) {
                    product_support(&amb, &lam, &mu).unwrap();
                }
            }
        }
    }

    #[test]
    fn even_exponents_are_only_bounded_in_dominance() {
        // R_(1,1,0,0) contains u^[0,0,0,1]; [0,1] is dominated by λ_even = [1,0]
        // but not bounded by it entry by entry.
        let amb = Ambient::symbolic(4);
        let lam = p(&[1, 1, 0, 0]);
        triangular2a(&amb, &lam, EvenBound::Dominance).unwrap();
        assert!(triangular2a(&amb, &lam, EvenBound::Componentwise).is_err());
        let sub = u_substitute(&build_r(&amb, &lam).unwrap());
        assert!(!sub.coeff(&Mono::from_slice(&[0, 0, 0, 1])).is_zero());
    }

    #[test]
    fn elementary_support_of_21() {
        let amb = Ambient::symbolic(3);
        let lam = p(&[2, 1, 0]);
        let e = expand_by_leading_terms(&amb, &build_r(&amb, &lam).unwrap(), Basis::Elementary).unwrap();
        assert!(e.support().all(|mu| order_test(mu, &lam, Relation::Prec).unwrap()));
        assert!(e.coeff(&lam).is_one());
    }
}
