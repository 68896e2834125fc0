//! Expansions of semisymmetric polynomials in the `𝐞_μ`, column-product and
//! `R_μ` bases, and the involutive transform `f ↦ f̂` on the nodes `ρ+λ`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::build::{build_r, column_r};
use super::elementary::e_mu;
use crate::ambient::Ambient;
use crate::combinatorics::{bracket, bracket_inverse, enumerate_lambda, odd_degree, order_test, Partition, Relation};
use crate::error::{Error, Result};
use crate::exactalg::{json, Mono, MultiPoly, ParamScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Elementary,
    /// `∏_k R_{(1^k)}^{μ_k - μ_{k+1}}`.
    Columns,
    R,
    /// Top homogeneous components `R̄_μ`.
    Top,
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "elementary" | "e" => Ok(Basis::Elementary),
            "columns" => Ok(Basis::Columns),
            "R" | "r" => Ok(Basis::R),
            "Rbar" | "rbar" | "top" => Ok(Basis::Top),
            _ => Err(Error::Parse(format!("unknown basis '{s}'"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Elementary => "elementary",
            Basis::Columns => "columns",
            Basis::R => "R",
            Basis::Top => "Rbar",
        })
    }
}

/// A finite linear combination of basis elements indexed by partitions.
/// Terms are kept in descending grlex order of `z^{[μ]}`, without zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RExpansion {
    pub basis: Basis,
    pub n: usize,
    pub terms: Vec<(Partition, ParamScalar)>,
}

impl RExpansion {
    /// Sums repeated indices, drops zeros and sorts by descending `z^{[μ]}`.
    pub fn from_terms(basis: Basis, n: usize, it: impl IntoIterator<Item = (Partition, ParamScalar)>) -> Self {
        let mut acc: BTreeMap<Partition, ParamScalar> = BTreeMap::new();
        for (mu, c) in it {
            *acc.entry(mu).or_default() += &c;
        }
        let mut terms: Vec<(Partition, ParamScalar)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by_cached_key(|(mu, _)| std::cmp::Reverse(Mono::from_slice(&to_u16(&bracket(mu)))));
        RExpansion { basis, n, terms }
    }

    pub fn coeff(&self, mu: &Partition) -> ParamScalar {
        self.terms.iter().find(|(p, _)| p == mu).map(|(_, c)| c.clone()).unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.iter().map(|(p, _)| p)
    }

    pub fn to_json(&self) -> String {
        let items: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| {
                let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                format!("{{\"mu\":[{}],{}}}", parts.join(","), json::scalar_fields(c))
            })
            .collect();
        format!("{{\"basis\":\"{}\",\"n\":{},\"terms\":[{}]}}", self.basis, self.n, items.join(","))
    }
}

impl fmt::Display for RExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.basis {
            Basis::Elementary => "e",
            Basis::Columns => "C",
            Basis::R => "R",
            Basis::Top => "Rbar",
        };
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let label: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            let label = label.join(",");
            let (neg, abs) = if c.is_constant() && c.to_string().starts_with('-') { (true, -c) } else { (false, c.clone()) };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if abs.is_one() {
                write!(f, "{name}({label})")?;
            } else if abs.is_constant() {
                write!(f, "{abs}*{name}({label})")?;
            } else {
                write!(f, "({abs})*{name}({label})")?;
            }
        }
        Ok(())
    }
}

/// The element of `basis` indexed by `mu`.
pub fn basis_element(amb: &Ambient, basis: Basis, mu: &Partition) -> Result<MultiPoly> {
    match basis {
        Basis::Elementary => Ok((*e_mu(mu)).clone()),
        Basis::Columns => {
            let n = amb.n;
            let mut acc = MultiPoly::one(n);
            for k in 1..=n {
                let next = if k < n { mu[k] } else { 0 };
                let e = (mu[k - 1] - next) as u32;
                if e > 0 {
                    acc = acc.mul(&column_r(amb, k)?.pow(e));
                }
            }
            Ok(acc)
        }
        Basis::R => Ok((*build_r(amb, mu)?).clone()),
        Basis::Top => Ok(build_r(amb, mu)?.top_component()),
    }
}

fn check_input(amb: &Ambient, f: &MultiPoly) -> Result<()> {
    if f.nvars() != amb.n {
        return Err(Error::LengthMismatch(amb.n, f.nvars()));
    }
    if !f.is_semisymmetric() {
        return Err(Error::NotSemisymmetric(f.to_string()));
    }
    Ok(())
}

/// Repeatedly cancels the grlex-leading monomial. Every basis here has
/// leading monomial `z^{[μ]}` with coefficient 1, so this terminates.
pub fn expand_by_leading_terms(amb: &Ambient, f: &MultiPoly, basis: Basis) -> Result<RExpansion> {
    check_input(amb, f)?;
    let mut rest = f.clone();
    let mut terms = Vec::new();
    while let Some((m, c)) = rest.leading() {
        let nu: Vec<i64> = m.as_slice().iter().map(|&x| x as i64).collect();
        let mu = bracket_inverse(&nu).map_err(|_| Error::NotSemisymmetric(format!("leading monomial {nu:?}")))?;
        let c = c.clone();
        let b = basis_element(amb, basis, &mu)?;
        debug_assert!(b.coeff(m).is_one());
        rest = rest.sub(&b.scale(&c));
        terms.push((mu, c));
    }
    Ok(RExpansion { basis, n: amb.n, terms })
}

/// `f̂(ρ+λ) = Σ_{μ ⊑ λ} (-1)^{|μ|_odd} R_μ(ρ+λ)/R_μ(ρ+μ) · f(ρ+μ)`, for `λ ∈ Λ(d)`.
pub fn hat_values(amb: &Ambient, values: &[(Partition, ParamScalar)]) -> Result<Vec<(Partition, ParamScalar)>> {
    let mut out = Vec::with_capacity(values.len());
    for (lam, _) in values {
        let pt = amb.rho_plus(lam);
        let mut acc = ParamScalar::zero();
        for (mu, fv) in values {
            if fv.is_zero() || !order_test(mu, lam, Relation::Sqsubseteq)? {
                continue;
            }
            let r_mu = build_r(amb, mu)?;
            let ratio = r_mu.eval(&pt)?.checked_div(&r_mu.eval(&amb.rho_plus(mu))?)?;
            let term = &ratio * fv;
            if odd_degree(mu) % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        out.push((lam.clone(), acc));
    }
    Ok(out)
}

/// Values of `f` at `ρ+λ` for `λ ∈ Λ(d)`.
pub fn node_values(amb: &Ambient, f: &MultiPoly, d: i64) -> Result<Vec<(Partition, ParamScalar)>> {
    enumerate_lambda(amb.n, d)
        .into_iter()
        .map(|lam| {
            let v = f.eval(&amb.rho_plus(&lam))?;
            Ok((lam, v))
        })
        .collect()
}

/// `f̂` on `Λ(deg f)`.
pub fn hat_transform(amb: &Ambient, f: &MultiPoly) -> Result<Vec<(Partition, ParamScalar)>> {
    let d = f.total_degree().unwrap_or(0) as i64;
    hat_values(amb, &node_values(amb, f, d)?)
}

/// `Σ_μ (-1)^{|μ|_odd} ĥ(ρ+μ) R_μ / R_μ(ρ+μ)` as an `R`-basis expansion.
pub fn from_hat(amb: &Ambient, hat: &[(Partition, ParamScalar)]) -> Result<RExpansion> {
    let mut terms = Vec::new();
    for (mu, h) in hat {
        if h.is_zero() {
            continue;
        }
        let r_mu = build_r(amb, mu)?;
        let mut c = h.checked_div(&r_mu.eval(&amb.rho_plus(mu))?)?;
        if odd_degree(mu) % 2 != 0 {
            c = -c;
        }
        terms.push((mu.clone(), c));
    }
    Ok(RExpansion::from_terms(Basis::R, amb.n, terms))
}

fn to_u16(v: &[i64]) -> Vec<u16> {
    v.iter().map(|&x| x as u16).collect()
}

pub fn to_basis(amb: &Ambient, f: &MultiPoly, basis: Basis) -> Result<RExpansion> {
    match basis {
        Basis::R => {
            check_input(amb, f)?;
            from_hat(amb, &hat_transform(amb, f)?)
        }
        _ => expand_by_leading_terms(amb, f, basis),
    }
}

pub fn from_basis(amb: &Ambient, e: &RExpansion) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero(amb.n);
    for (mu, c) in &e.terms {
        acc = acc.add(&basis_element(amb, e.basis, mu)?.scale(c));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec(), v.len()).unwrap()
    }

    #[test]
    fn e_mu_is_a_single_term() {
        let amb = Ambient::symbolic(3);
        let mu = p(&[2, 1, 0]);
        let ex = to_basis(&amb, &e_mu(&mu), Basis::Elementary).unwrap();
        assert_eq!(ex.terms, vec![(mu, ParamScalar::one())]);
    }

    #[test]
    fn r_basis_routes_agree_and_reconstruct() {
        for n in 1..=4 {
            let amb = Ambient::symbolic(n);
            for lam in enumerate_lambda(n, 2) {
                let a = build_r(&amb, &lam).unwrap();
                let b = build_r(&amb, &p(&{
                    let mut v = vec![0; n];
                    v[0] = 1;
                    v
                }))
                .unwrap();
                let f = a.mul(&b);
                let hat = to_basis(&amb, &f, Basis::R).unwrap();
                let tri = expand_by_leading_terms(&amb, &f, Basis::R).unwrap();
                assert_eq!(hat, tri, "n={n} λ={lam}");
                assert_eq!(from_basis(&amb, &hat).unwrap(), f);
            }
        }
    }

    #[test]
    fn hat_of_basis_element_is_concentrated() {
        let amb = Ambient::symbolic(3);
        for nu in enumerate_lambda(3, 2) {
            let f = build_r(&amb, &nu).unwrap();
            let d = odd_degree(&nu);
            let hat = hat_values(&amb, &node_values(&amb, &f, d).unwrap()).unwrap();
            for (lam, h) in hat {
                if lam == nu {
                    let mut want = f.eval(&amb.rho_plus(&nu)).unwrap();
                    if d % 2 == 1 {
                        want = -want;
                    }
                    assert_eq!(h, want);
                } else {
                    assert!(h.is_zero(), "ν={nu} λ={lam}");
                }
            }
        }
    }

    #[test]
    fn elementary_support_is_below_in_prec() {
        let amb = Ambient::symbolic(3);
        let lam = p(&[2, 1, 0]);
        let ex = to_basis(&amb, &build_r(&amb, &lam).unwrap(), Basis::Elementary).unwrap();
        assert!(ex.coeff(&lam).is_one());
        for mu in ex.support() {
            assert!(order_test(mu, &lam, Relation::Prec).unwrap(), "{mu}");
        }
        assert_eq!(bracket(&ex.terms[0].0), bracket(&lam));
    }

    #[test]
    fn rejects_non_semisymmetric_input() {
        let amb = Ambient::symbolic(3);
        assert!(to_basis(&amb, &MultiPoly::var(3, 0), Basis::Elementary).is_err());
    }
}
