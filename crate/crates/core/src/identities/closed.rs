//! Closed forms: hooks, two-row top components, the three- and four-variable
//! sums, and the integrality probe.

use num_bigint::BigInt;

use super::ensure_eq;
use crate::ambient::Ambient;
use crate::combinatorics::factors::c_even;
use crate::combinatorics::partition::enumerate_bidegree;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exactalg::{binom, rising, MultiPoly, ParamScalar};
use crate::interpolation::{build_r, column_r, e_mu};

/// `(a, 1^{m-1})` padded to `n` parts.
pub fn hook_partition(a: usize, m: usize, n: usize) -> Result<Partition> {
    if a == 0 || m == 0 {
        return Err(Error::OutOfRange("a hook needs a >= 1 and m >= 1".into()));
    }
    let mut parts = vec![a as i64];
    parts.extend(std::iter::repeat(1).take(m - 1));
    Partition::new(parts, n)
}

/// `R_{(a,1^{m-1})}` as a polynomial in `R_(1)` and the columns:
/// `(R_(1)-1)...(R_(1)-a+1) R_(1^m)` for odd `m`, and
/// `(R_(1)-1)...(R_(1)-a+2) (R_(1) R_(1^m) - (a-1)/(a-1+mr) R_(1^{m+1}))` for even `m`, `a >= 2`.
pub fn hook(amb: &Ambient, a: usize, m: usize) -> Result<MultiPoly> {
    let n = amb.n;
    if a == 0 || m == 0 || m > n {
        return Err(Error::OutOfRange(format!("hook (a, m) = ({a}, {m}) with n = {n}")));
    }
    let r1 = column_r(amb, 1)?;
    let shifted = |k: usize| r1.sub(&MultiPoly::constant(n, ParamScalar::int(k as i64)));
    let col = column_r(amb, m)?;
    if m % 2 == 1 || a == 1 {
        let mut acc = (*col).clone();
        for k in 1..a {
            acc = acc.mul(&shifted(k));
        }
        return Ok(acc);
    }
    let k = (a - 1) as i64;
    let c = ParamScalar::int(k).checked_div(&ParamScalar::linear(k, m as i64))?;
    let mut acc = r1.mul(&col).sub(&column_r(amb, m + 1)?.scale(&c));
    for k in 1..a - 1 {
        acc = acc.mul(&shifted(k));
    }
    Ok(acc)
}

pub fn check_hook(amb: &Ambient, a: usize, m: usize) -> Result<()> {
    let lam = hook_partition(a, m, amb.n)?;
    ensure_eq(&hook(amb, a, m)?, &*build_r(amb, &lam)?, || format!("hook R_{lam}"))
}

fn multinomial(parts: &[i64]) -> BigInt {
    let fact = |k: i64| -> BigInt { (1..=k).map(BigInt::from).product() };
    let total: i64 = parts.iter().sum();
    parts.iter().fold(fact(total), |acc, &k| acc / fact(k))
}

/// `R̄_{(a,b)} = c_{ab}^{-1} Σ_μ binom(-2r, μ1) multinomial(μ1; μ1-μ2, ..., μ_n) 𝐞_μ`
/// over `|μ_odd| = a`, `|μ_even| = b`, with `c_{ab} = binom(a, b) binom(-2r, a)`.
pub fn two_row(amb: &Ambient, a: i64, b: i64) -> Result<MultiPoly> {
    let n = amb.n;
    if n < 2 || b < 0 || a < b {
        return Err(Error::OutOfRange(format!("two-row (a, b) = ({a}, {b}) with n = {n}")));
    }
    let minus_2r = &amb.r * &ParamScalar::int(-2);
    let c_ab = &binom(&ParamScalar::int(a), b as usize) * &binom(&minus_2r, a as usize);
    let mut acc = MultiPoly::zero(n);
    for mu in enumerate_bidegree(n, a, b) {
        let diffs: Vec<i64> = (0..n).map(|k| mu[k] - if k + 1 < n { mu[k + 1] } else { 0 }).collect();
        let c = &binom(&minus_2r, mu[0] as usize) * &ParamScalar::from_bigint(multinomial(&diffs));
        acc = acc.add(&e_mu(&mu).scale(&c));
    }
    Ok(acc.scale(&c_ab.inv()?))
}

pub fn check_two_row(amb: &Ambient, a: i64, b: i64) -> Result<()> {
    let mut parts = vec![a, b];
    parts.resize(amb.n, 0);
    let lam = Partition::new(parts, amb.n)?;
    ensure_eq(&two_row(amb, a, b)?, &build_r(amb, &lam)?.top_component(), || format!("two-row R̄_{lam}"))
}

/// `R̄_μ = Σ_k (-1)^k binom(μ1-μ2, k) binom(μ2-μ3, k) / binom(μ1-μ3+2r-1, k) · 𝐞_{(μ1-k, μ2, μ3+k)}` for `n = 3`.
pub fn n3_closed_form(mu: &Partition, r: &ParamScalar) -> Result<MultiPoly> {
    if mu.n() != 3 {
        return Err(Error::LengthMismatch(3, mu.n()));
    }
    let (d1, d2) = (mu[0] - mu[1], mu[1] - mu[2]);
    let top = &ParamScalar::int(mu[0] - mu[2] - 1) + &(r * &ParamScalar::int(2));
    let mut acc = MultiPoly::zero(3);
    for k in 0..=d1.min(d2) {
        let ku = k as usize;
        let mut c = (&binom(&ParamScalar::int(d1), ku) * &binom(&ParamScalar::int(d2), ku)).checked_div(&binom(&top, ku))?;
        if k % 2 == 1 {
            c = -c;
        }
        let nu = Partition::new(vec![mu[0] - k, mu[1], mu[2] + k], 3)?;
        acc = acc.add(&e_mu(&nu).scale(&c));
    }
    Ok(acc)
}

pub fn check_n3(mu: &Partition) -> Result<()> {
    let amb = Ambient::symbolic(3);
    ensure_eq(&n3_closed_form(mu, &amb.r)?, &build_r(&amb, mu)?.top_component(), || format!("n = 3 form of R̄_{mu}"))
}

/// `R̄_{(a,b,0,0)} = Σ_{k,l} (-a+b)_k (-b)_{k+2l} / ((-a-2r+1)_{k+l} k! l!) · 𝐞_1^{a-b-k} 𝐞_2^{b-k-2l} 𝐞_3^k 𝐞_4^l`.
pub fn n4_two_row(a: i64, b: i64, r: &ParamScalar) -> Result<MultiPoly> {
    if b < 0 || a < b {
        return Err(Error::OutOfRange(format!("two-row (a, b) = ({a}, {b})")));
    }
    let fact = |k: i64| ParamScalar::from_bigint((1..=k).map(BigInt::from).product());
    let base = &ParamScalar::int(1 - a) + &(r * &ParamScalar::int(-2));
    let mut acc = MultiPoly::zero(4);
    for k in 0..=a - b {
        for l in 0..=(b - k) / 2 {
            if k + 2 * l > b {
                continue;
            }
            let num = &rising(&ParamScalar::int(b - a), k as usize) * &rising(&ParamScalar::int(-b), (k + 2 * l) as usize);
            let den = &(&rising(&base, (k + l) as usize) * &fact(k)) * &fact(l);
            let mu = Partition::new(vec![a - k - l, b - l, k + l, l], 4)?;
            acc = acc.add(&e_mu(&mu).scale(&num.checked_div(&den)?));
        }
    }
    Ok(acc)
}

pub fn check_n4(a: i64, b: i64) -> Result<()> {
    let amb = Ambient::symbolic(4);
    let lam = Partition::new(vec![a, b, 0, 0], 4)?;
    ensure_eq(&n4_two_row(a, b, &amb.r)?, &build_r(&amb, &lam)?.top_component(), || format!("n = 4 sum for R̄_{lam}"))
}

/// Whether `[c_λ]_even R_λ` has coefficients in `Z[r]`.
pub fn integrality_probe(amb: &Ambient, lam: &Partition) -> Result<bool> {
    let scaled = build_r(amb, lam)?.scale(&c_even(lam, &amb.r));
    let ok = scaled.terms().all(|(_, c)| c.is_integral());
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_lambda;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec(), v.len()).unwrap()
    }

    #[test]
    fn hooks() {
        for n in 1..=4 {
            let amb = Ambient::symbolic(n);
            for m in 1..=n {
                for a in 1..=3 {
                    check_hook(&amb, a, m).unwrap();
                }
            }
        }
    }

    #[test]
    fn two_rows() {
        let amb = Ambient::symbolic(3);
        assert_eq!(two_row(&amb, 1, 0).unwrap(), *e_mu(&p(&[1, 0, 0])));
        for n in 2..=4 {
            let amb = Ambient::symbolic(n);
            for a in 0..=3 {
                for b in 0..=a.min(2) {
                    check_two_row(&amb, a, b).unwrap();
                }
            }
        }
    }

    #[test]
    fn three_and_four_variables() {
        let r = ParamScalar::r();
        assert_eq!(n3_closed_form(&p(&[1, 1, 1]), &r).unwrap(), MultiPoly::var(3, 0).mul(&MultiPoly::var(3, 2)));
        for mu in enumerate_lambda(3, 3) {
            check_n3(&mu).unwrap();
        }
        let amb3 = Ambient::symbolic(3);
        for a in 0..=3 {
            for b in 0..=a {
                let lam = p(&[a, b, 0]);
                assert_eq!(n3_closed_form(&lam, &r).unwrap(), two_row(&amb3, a, b).unwrap());
                check_n4(a, b).unwrap();
            }
        }
    }

    #[test]
    fn integrality() {
        let amb = Ambient::symbolic(3);
        assert!(integrality_probe(&amb, &p(&[1, 0, 0])).unwrap());
        // R_(21) carries 1/(1+2r), which [c_λ]_even = 1+2r clears.
        let r21 = build_r(&amb, &p(&[2, 1, 0])).unwrap();
        assert!(!r21.terms().all(|(_, c)| c.is_integral()));
        assert!(integrality_probe(&amb, &p(&[2, 1, 0])).unwrap());
    }
}
