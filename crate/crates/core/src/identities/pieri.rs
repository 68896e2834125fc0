//! Pieri rules: products of `R_μ` with `∏(t+z_i)`, with `e_m` of the odd or
//! even variables, with `R_{(1^m)}`, and of `R̄_μ` with `𝐞_m`.

use std::fmt;
use std::str::FromStr;

use super::ensure_eq;
use crate::ambient::Ambient;
use crate::combinatorics::factors::{psi_prime_boxes, psi_prime_pairs};
use crate::combinatorics::partition::{count_even, count_odd, in_p_even, in_p_odd, indicator, subsets};
use crate::combinatorics::{n_even, n_odd, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, ParamScalar};
use crate::interpolation::elementary::{elementary_symmetric, even_positions, odd_positions};
use crate::interpolation::{build_r, column_r, elementary_semisym, to_basis, Basis, RExpansion};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    fn of(i: usize) -> Parity {
        if i % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// 0-based positions of the 1-based indices of this parity.
    fn positions(self, n: usize) -> Vec<usize> {
        match self {
            Parity::Odd => odd_positions(n),
            Parity::Even => even_positions(n),
        }
    }

    fn count(self, set: &[usize]) -> usize {
        match self {
            Parity::Odd => count_odd(set),
            Parity::Even => count_even(set),
        }
    }

    fn family(self, n: usize) -> Vec<Vec<usize>> {
        subsets(n)
            .into_iter()
            .filter(|s| match self {
                Parity::Odd => in_p_odd(s),
                Parity::Even => in_p_even(s),
            })
            .collect()
    }

    /// Number of indices of this parity among `1..=n`.
    pub fn width(self, n: usize) -> usize {
        match self {
            Parity::Odd => n_odd(n),
            Parity::Even => n_even(n),
        }
    }
}

impl FromStr for Parity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            _ => Err(Error::Parse(format!("unknown parity `{s}`"))),
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

/// `λ = μ + ε_I` and `[ψ'_{λ/μ}]_even`, or `None` if `λ` is not a partition
/// (in which case the pair product must vanish). The pair and box forms are
/// compared on the way.
pub fn psi(mu: &Partition, set: &[usize], r: &ParamScalar) -> Result<Option<(Partition, ParamScalar)>> {
    let n = mu.n();
    let raw: Vec<i64> = mu.iter().zip(indicator(n, set)).map(|(a, b)| a + b).collect();
    let pairs = psi_prime_pairs(mu, &raw, set, r)?;
    match Partition::new(raw.clone(), n) {
        Ok(lam) => {
            let boxes = psi_prime_boxes(mu, &lam, r)?;
            if boxes != pairs {
                return Err(Error::Invariant(format!("ψ' for {lam}/{mu}: pairs {pairs}, boxes {boxes}")));
            }
            Ok(Some((lam, pairs)))
        }
        Err(_) if pairs.is_zero() => Ok(None),
        Err(_) => Err(Error::Invariant(format!("ψ' = {pairs} for the non-partition {raw:?}"))),
    }
}

/// `e_k` of the given values.
fn e_of(vals: &[ParamScalar], k: usize) -> ParamScalar {
    let mut e = vec![ParamScalar::one()];
    for v in vals {
        e.push(ParamScalar::zero());
        for j in (1..e.len()).rev() {
            let add = &e[j - 1] * v;
            e[j] += &add;
        }
    }
    e.get(k).cloned().unwrap_or_default()
}

/// `ρ_i + μ_i` for `i ∉ I` of the given parity.
fn outside_values(amb: &Ambient, mu: &Partition, set: &[usize], parity: Parity) -> Vec<ParamScalar> {
    let pt = amb.rho_plus(mu);
    (1..=amb.n).filter(|&i| Parity::of(i) == parity && !set.contains(&i)).map(|i| pt[i - 1].clone()).collect()
}

/// `∏_{i parity}(t+z_i) R_μ = Σ_I ∏_{i∉I, parity}(t+ρ_i+μ_i) [ψ'_{λ/μ}]_even R_λ`.
pub fn pieri_t(amb: &Ambient, mu: &Partition, parity: Parity, t: &ParamScalar) -> Result<RExpansion> {
    let mut terms = Vec::new();
    for set in parity.family(amb.n) {
        if let Some((lam, c)) = psi(mu, &set, &amb.r)? {
            let pre: ParamScalar = outside_values(amb, mu, &set, parity).iter().map(|x| t + x).product();
            terms.push((lam, &pre * &c));
        }
    }
    Ok(RExpansion::from_terms(Basis::R, amb.n, terms))
}

pub fn pieri_t_product(amb: &Ambient, mu: &Partition, parity: Parity, t: &ParamScalar) -> Result<MultiPoly> {
    let n = amb.n;
    let mut f = (*build_r(amb, mu)?).clone();
    for v in parity.positions(n) {
        f = f.mul(&MultiPoly::var(n, v).add(&MultiPoly::constant(n, t.clone())));
    }
    Ok(f)
}

/// `e_m(z_parity) R_μ = Σ_{|I|_parity <= m} e_{m-s}(ρ_i+μ_i | i∉I, parity) [ψ'_{λ/μ}]_even R_λ`.
pub fn pieri_elementary(amb: &Ambient, mu: &Partition, m: usize, parity: Parity) -> Result<RExpansion> {
    if m > parity.width(amb.n) {
        return Err(Error::OutOfRange(format!("m = {m} exceeds the number of {parity} variables")));
    }
    let mut terms = Vec::new();
    for set in parity.family(amb.n) {
        let s = parity.count(&set);
        if s > m {
            continue;
        }
        if let Some((lam, c)) = psi(mu, &set, &amb.r)? {
            let e = e_of(&outside_values(amb, mu, &set, parity), m - s);
            terms.push((lam, &e * &c));
        }
    }
    Ok(RExpansion::from_terms(Basis::R, amb.n, terms))
}

pub fn pieri_elementary_product(amb: &Ambient, mu: &Partition, m: usize, parity: Parity) -> Result<MultiPoly> {
    let e = elementary_symmetric(amb.n, &parity.positions(amb.n), m);
    Ok(e.mul(&*build_r(amb, mu)?))
}

/// A parity-preserving bijection `{s+1..n} → {1..n} ∖ I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Matching {
    /// Increasing within each parity class.
    OrderPreserving,
    /// Decreasing within each parity class.
    Reversed,
}

/// `k_{s+1}, ..., k_n` for the complement of `set`.
pub fn matching(n: usize, set: &[usize], how: Matching) -> Vec<usize> {
    let s = set.len();
    let mut pool: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for i in (1..=n).filter(|i| !set.contains(i)) {
        pool[i % 2].push(i);
    }
    if how == Matching::Reversed {
        pool[0].reverse();
        pool[1].reverse();
    }
    let mut next = [0usize; 2];
    (s + 1..=n)
        .map(|i| {
            let class = i % 2;
            let k = pool[class][next[class]];
            next[class] += 1;
            k
        })
        .collect()
}

/// `R_{(1^m)} R_μ = Σ_I R_{(1^{m-|I|})}(ρ+μ | I') [ψ'_{λ/μ}]_even R_λ`, with `I`
/// in `P_odd` or `P_even` as `m` is odd or even.
pub fn pieri_shifted_with(amb: &Ambient, mu: &Partition, m: usize, how: Matching) -> Result<RExpansion> {
    let n = amb.n;
    if m > n {
        return Err(Error::OutOfRange(format!("m = {m} exceeds n = {n}")));
    }
    let parity = if m % 2 == 1 { Parity::Odd } else { Parity::Even };
    let pt = amb.rho_plus(mu);
    let mut terms = Vec::new();
    for set in parity.family(n) {
        let s = set.len();
        if s > m {
            continue;
        }
        let Some((lam, c)) = psi(mu, &set, &amb.r)? else { continue };
        let coeff = if m == s {
            ParamScalar::one()
        } else {
            let small = column_r(&amb.with_n(n - s), m - s)?;
            let args: Vec<ParamScalar> = matching(n, &set, how).into_iter().map(|k| pt[k - 1].clone()).collect();
            small.eval(&args)?
        };
        terms.push((lam, &coeff * &c));
    }
    Ok(RExpansion::from_terms(Basis::R, n, terms))
}

pub fn pieri_shifted(amb: &Ambient, mu: &Partition, m: usize) -> Result<RExpansion> {
    pieri_shifted_with(amb, mu, m, Matching::OrderPreserving)
}

pub fn pieri_shifted_product(amb: &Ambient, mu: &Partition, m: usize) -> Result<MultiPoly> {
    Ok(column_r(amb, m)?.mul(&*build_r(amb, mu)?))
}

/// `𝐞_m R̄_μ = Σ_I [ψ'_{λ/μ}]_even R̄_λ`, `I` with `⌈m/2⌉` odd and `⌊m/2⌋` even members.
pub fn pieri_homogeneous(amb: &Ambient, mu: &Partition, m: usize) -> Result<RExpansion> {
    if m == 0 || m > amb.n {
        return Err(Error::OutOfRange(format!("m = {m} must lie in 1..={}", amb.n)));
    }
    let mut terms = Vec::new();
    for set in subsets(amb.n) {
        if count_odd(&set) != m.div_ceil(2) || count_even(&set) != m / 2 {
            continue;
        }
        if let Some((lam, c)) = psi(mu, &set, &amb.r)? {
            terms.push((lam, c));
        }
    }
    Ok(RExpansion::from_terms(Basis::Top, amb.n, terms))
}

pub fn pieri_homogeneous_product(amb: &Ambient, mu: &Partition, m: usize) -> Result<MultiPoly> {
    Ok(elementary_semisym(m, amb.n)?.mul(&build_r(amb, mu)?.top_component()))
}

fn compare(formula: RExpansion, product: &MultiPoly, amb: &Ambient, what: impl FnOnce() -> String) -> Result<()> {
    let direct = to_basis(amb, product, formula.basis)?;
    ensure_eq(&formula, &direct, what)
}

/// `∏(t+z_i) R_μ` at `t = 0, ..., width`, enough to pin down the degree-`width` polynomial in `t`.
pub fn check_pieri_t(amb: &Ambient, mu: &Partition, parity: Parity) -> Result<()> {
    for t in 0..=parity.width(amb.n) as i64 {
        let t = ParamScalar::int(t);
        compare(pieri_t(amb, mu, parity, &t)?, &pieri_t_product(amb, mu, parity, &t)?, amb, || {
            format!("∏_{parity}(t+z_i)·R_{mu} at t = {t}")
        })?;
    }
    Ok(())
}

pub fn check_pieri_elementary(amb: &Ambient, mu: &Partition, m: usize, parity: Parity) -> Result<()> {
    compare(pieri_elementary(amb, mu, m, parity)?, &pieri_elementary_product(amb, mu, m, parity)?, amb, || {
        format!("e_{m}(z_{parity})·R_{mu}")
    })
}

pub fn check_pieri_shifted(amb: &Ambient, mu: &Partition, m: usize) -> Result<()> {
    let formula = pieri_shifted(amb, mu, m)?;
    ensure_eq(&formula, &pieri_shifted_with(amb, mu, m, Matching::Reversed)?, || {
        format!("R_(1^{m})·R_{mu} depends on the matching")
    })?;
    compare(formula, &pieri_shifted_product(amb, mu, m)?, amb, || format!("R_(1^{m})·R_{mu}"))
}

pub fn check_pieri_homogeneous(amb: &Ambient, mu: &Partition, m: usize) -> Result<()> {
    compare(pieri_homogeneous(amb, mu, m)?, &pieri_homogeneous_product(amb, mu, m)?, amb, || {
        format!("𝐞_{m}·R̄_{mu}")
    })
}

/// The four worked products for `n = 3`, with the coefficients written out
/// as rational functions of `μ` and `r`.
pub mod three {
    use super::*;

    fn lin(a: i64, b: i64) -> ParamScalar {
        ParamScalar::linear(a, b)
    }

    /// `(μ_a - μ_b)(μ_a - μ_b - 1 + 2r) / ((μ1 - μ3 + 2r)(μ1 - μ3 - 1 + 2r))`.
    fn ratio(mu: &[i64], a: usize, b: usize) -> ParamScalar {
        let d = mu[a] - mu[b];
        let e = mu[0] - mu[2];
        let num = &lin(d, 0) * &lin(d - 1, 2);
        num.checked_div(&(&lin(e, 2) * &lin(e - 1, 2))).expect("nonzero for symbolic r")
    }

    fn expansion(mu: &Partition, parts: Vec<([i64; 3], ParamScalar)>) -> Result<RExpansion> {
        let mut terms = Vec::new();
        for (shift, c) in parts {
            let raw: Vec<i64> = mu.iter().zip(shift).map(|(a, b)| a + b).collect();
            match Partition::new(raw.clone(), 3) {
                Ok(lam) => terms.push((lam, c)),
                Err(_) if c.is_zero() => {}
                Err(_) => return Err(Error::Invariant(format!("coefficient {c} on the non-partition {raw:?}"))),
            }
        }
        Ok(RExpansion::from_terms(Basis::R, 3, terms))
    }

    fn check_len(mu: &Partition) -> Result<()> {
        if mu.n() != 3 {
            return Err(Error::LengthMismatch(3, mu.n()));
        }
        Ok(())
    }

    /// `(z1 + z3) R_μ`.
    pub fn odd_linear(mu: &Partition) -> Result<RExpansion> {
        check_len(mu)?;
        expansion(
            mu,
            vec![
                ([0, 0, 0], lin(mu[0] + mu[2], 2)),
                ([1, 0, 0], ParamScalar::one()),
                ([0, 0, 1], ratio(mu, 1, 2)),
                ([1, 1, 0], ParamScalar::one()),
                ([0, 1, 1], ratio(mu, 0, 1)),
            ],
        )
    }

    /// `z2 R_μ`.
    pub fn even_linear(mu: &Partition) -> Result<RExpansion> {
        check_len(mu)?;
        expansion(
            mu,
            vec![([0, 0, 0], lin(mu[1], 1)), ([1, 1, 0], ParamScalar::one()), ([0, 1, 1], ratio(mu, 0, 1))],
        )
    }

    /// `z1 z3 R_μ`.
    pub fn odd_quadratic(mu: &Partition) -> Result<RExpansion> {
        check_len(mu)?;
        let m3 = ParamScalar::int(mu[2]);
        let a = lin(mu[0], 2);
        expansion(
            mu,
            vec![
                ([0, 0, 0], &a * &m3),
                ([1, 0, 0], m3.clone()),
                ([0, 0, 1], &a * &ratio(mu, 1, 2)),
                ([1, 1, 0], m3.clone()),
                ([0, 1, 1], &a * &ratio(mu, 0, 1)),
                ([1, 1, 1], ParamScalar::one()),
            ],
        )
    }

    /// `R_(1) R_μ`.
    pub fn first_column(mu: &Partition) -> Result<RExpansion> {
        check_len(mu)?;
        expansion(
            mu,
            vec![
                ([0, 0, 0], ParamScalar::int(mu[0] - mu[1] + mu[2])),
                ([1, 0, 0], ParamScalar::one()),
                ([0, 0, 1], ratio(mu, 1, 2)),
            ],
        )
    }

    /// Each worked product against the direct expansion and the general rule.
    pub fn check(mu: &Partition) -> Result<()> {
        let amb = Ambient::symbolic(3);
        let r_mu = build_r(&amb, mu)?;
        let z = |i: usize| MultiPoly::var(3, i);
        let cases: [(&str, RExpansion, MultiPoly, RExpansion); 4] = [
            ("(z1+z3)", odd_linear(mu)?, z(0).add(&z(2)), pieri_elementary(&amb, mu, 1, Parity::Odd)?),
            ("z2", even_linear(mu)?, z(1), pieri_elementary(&amb, mu, 1, Parity::Even)?),
            ("z1·z3", odd_quadratic(mu)?, z(0).mul(&z(2)), pieri_elementary(&amb, mu, 2, Parity::Odd)?),
            ("R_(1)", first_column(mu)?, (*column_r(&amb, 1)?).clone(), pieri_shifted(&amb, mu, 1)?),
        ];
        for (name, shown, factor, rule) in cases {
            ensure_eq(&shown, &rule, || format!("{name}·R_{mu}: worked form against the general rule"))?;
            compare(shown, &factor.mul(&r_mu), &amb, || format!("{name}·R_{mu}"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_lambda;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec(), v.len()).unwrap()
    }

    #[test]
    fn matching_example() {
        // n = 5, I = {2,3,5}: f(z | I') = f(z_4, z_1).
        assert_eq!(matching(5, &[2, 3, 5], Matching::OrderPreserving), vec![4, 1]);
        assert_eq!(matching(5, &[1], Matching::Reversed), vec![4, 5, 2, 3]);
    }

    #[test]
    fn empty_partition_products() {
        let amb = Ambient::symbolic(3);
        let zero = Partition::zero(3);
        for m in 0..=3 {
            let ex = pieri_shifted(&amb, &zero, m).unwrap();
            assert_eq!(ex.terms, vec![(Partition::column(m, 3).unwrap(), ParamScalar::one())]);
        }
        let ex = pieri_homogeneous(&amb, &zero, 2).unwrap();
        assert_eq!(ex.terms, vec![(p(&[1, 1, 0]), ParamScalar::one())]);
    }

    #[test]
    fn rules_small_sweep() {
        for n in 1..=3 {
            let amb = Ambient::symbolic(n);
            for mu in enumerate_lambda(n, 2) {
                check_pieri_t(&amb, &mu, Parity::Odd).unwrap();
                check_pieri_t(&amb, &mu, Parity::Even).unwrap();
                for m in 0..=n {
                    check_pieri_shifted(&amb, &mu, m).unwrap();
                    if m >= 1 {
                        check_pieri_homogeneous(&amb, &mu, m).unwrap();
                    }
                }
                for m in 0..=n_odd(n) {
                    check_pieri_elementary(&amb, &mu, m, Parity::Odd).unwrap();
                }
            }
        }
    }

    #[test]
    fn worked_products_for_three_variables() {
        for mu in enumerate_lambda(3, 2) {
            three::check(&mu).unwrap();
        }
    }
}
