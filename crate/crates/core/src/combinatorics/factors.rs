//! Products over boxes and index pairs: leading coefficients, evaluation
//! factors and Pieri coefficients.

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::exactalg::{rising, ParamScalar};

fn int(v: i64) -> ParamScalar {
    ParamScalar::int(v)
}

/// `a + b r`.
fn lin(a: i64, b: i64, r: &ParamScalar) -> ParamScalar {
    &int(a) + &(r * &int(b))
}

/// `[c'_λ]_even = ∏_{l(s) even} (a(s) + 1 + l(s) r)`, the value `R_λ(ρ+λ)`.
pub fn c_prime_even(lam: &Partition, r: &ParamScalar) -> ParamScalar {
    lam.boxes()
        .filter_map(|(i, j)| {
            let (a, l) = (lam.arm(i, j), lam.leg(i, j));
            (l % 2 == 0).then(|| lin(a + 1, l, r))
        })
        .product()
}

/// `[c_λ]_even = ∏_{l(s) odd} (a(s) + (l(s)+1) r)`.
pub fn c_even(lam: &Partition, r: &ParamScalar) -> ParamScalar {
    lam.boxes()
        .filter_map(|(i, j)| {
            let (a, l) = (lam.arm(i, j), lam.leg(i, j));
            (l % 2 == 1).then(|| lin(a, l + 1, r))
        })
        .product()
}

/// `[b_λ(s)]_even`.
pub fn b_even(lam: &Partition, i: i64, j: i64, r: &ParamScalar) -> Result<ParamScalar> {
    let (a, l) = (lam.arm(i, j), lam.leg(i, j));
    if l % 2 == 1 {
        Ok(lin(a, l + 1, r))
    } else {
        lin(a + 1, l, r).inv()
    }
}

/// `A_λ(α) = ∏_{n-i even} [α + (n-i) r ↑ λ_i]`.
pub fn a_factor_rows(lam: &Partition, alpha: &ParamScalar, r: &ParamScalar) -> ParamScalar {
    let n = lam.n() as i64;
    (1..=n)
        .filter(|i| (n - i) % 2 == 0)
        .map(|i| rising(&(alpha + &(r * &int(n - i))), lam[i as usize - 1] as usize))
        .product()
}

/// `A_λ(α) = ∏_{n-l'(s) odd} (α + a'(s) + (n-l'(s)-1) r)`.
pub fn a_factor_boxes(lam: &Partition, alpha: &ParamScalar, r: &ParamScalar) -> ParamScalar {
    let n = lam.n() as i64;
    lam.boxes()
        .filter(|&(i, _)| (n - (i - 1)) % 2 == 1)
        .map(|(i, j)| alpha + &lin(j - 1, n - (i - 1) - 1, r))
        .product()
}

/// `B_λ` from index pairs.
pub fn b_factor_rows(lam: &Partition, r: &ParamScalar) -> Result<ParamScalar> {
    let n = lam.n();
    let mut num = ParamScalar::one();
    let mut den = ParamScalar::one();
    for i in 0..n {
        for j in i + 1..n {
            let d = (j - i) as i64;
            let k = (lam[i] - lam[j]) as usize;
            if d % 2 == 1 {
                num *= &rising(&lin(0, d + 1, r), k);
            } else {
                den *= &rising(&lin(0, d, r), k);
            }
        }
    }
    num.checked_div(&den)
}

/// `B_λ` from boxes.
pub fn b_factor_boxes(lam: &Partition, r: &ParamScalar) -> Result<ParamScalar> {
    let n = lam.n() as i64;
    let mut num = ParamScalar::one();
    let mut den = ParamScalar::one();
    for (i, j) in lam.boxes() {
        let lp = i - 1;
        if (n - lp) % 2 == 0 {
            num *= &lin(j - 1, n - lp, r);
        }
        let (a, l) = (lam.arm(i, j), lam.leg(i, j));
        if l % 2 == 1 {
            den *= &lin(a, l + 1, r);
        }
    }
    num.checked_div(&den)
}

/// `(A_λ(α), B_λ)`, each computed from rows and from boxes.
pub fn eval_factors(lam: &Partition, alpha: &ParamScalar, r: &ParamScalar) -> Result<(ParamScalar, ParamScalar)> {
    let a = a_factor_rows(lam, alpha, r);
    if a != a_factor_boxes(lam, alpha, r) {
        return Err(Error::Invariant(format!("row and box forms of A differ for {lam}")));
    }
    let b = b_factor_rows(lam, r)?;
    if b != b_factor_boxes(lam, r)? {
        return Err(Error::Invariant(format!("row and box forms of B differ for {lam}")));
    }
    Ok((a, b))
}

/// `[ψ'_{λ/μ}]_even` from index pairs, where `λ = μ + ε_I`.
pub fn psi_prime_pairs(mu: &[i64], lam: &[i64], set: &[usize], r: &ParamScalar) -> Result<ParamScalar> {
    let n = mu.len();
    let inset = |k: usize| set.contains(&k);
    let mut num = ParamScalar::one();
    let mut den = ParamScalar::one();
    for i in 1..=n {
        if inset(i) {
            continue;
        }
        for j in i + 1..=n {
            if !inset(j) {
                continue;
            }
            let d = (j - i) as i64;
            let dm = mu[i - 1] - mu[j - 1];
            let dl = lam[i - 1] - lam[j - 1];
            if d % 2 == 1 {
                num *= &(&lin(dm, d - 1, r) * &lin(dl, d + 1, r));
            } else {
                den *= &(&lin(dm, d, r) * &lin(dl, d, r));
            }
        }
    }
    num.checked_div(&den)
}

/// `[ψ'_{λ/μ}]_even = ∏_{s ∈ C_{λ/μ} - R_{λ/μ}} [b_λ(s)]_even / [b_μ(s)]_even`.
pub fn psi_prime_boxes(mu: &Partition, lam: &Partition, r: &ParamScalar) -> Result<ParamScalar> {
    let skew: Vec<(i64, i64)> = lam.boxes().filter(|&(i, j)| !mu.contains_box(i, j)).collect();
    let mut acc = ParamScalar::one();
    for (i, j) in mu.boxes() {
        let in_col = skew.iter().any(|&(_, c)| c == j);
        let in_row = skew.iter().any(|&(rw, _)| rw == i);
        if in_col && !in_row {
            acc *= &b_even(lam, i, j, r)?.checked_div(&b_even(mu, i, j, r)?)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::{enumerate_lambda, in_p_odd, indicator, subsets};

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec(), v.len()).unwrap()
    }

    #[test]
    fn leading_coefficient_small_cases() {
        let r = ParamScalar::r();
        // (2,1): boxes (1,1) a=1 l=1, (1,2) a=0 l=0, (2,1) a=0 l=0.
        assert_eq!(c_prime_even(&p(&[2, 1, 0]), &r), ParamScalar::one());
        assert_eq!(c_even(&p(&[2, 1, 0]), &r), ParamScalar::linear(1, 2));
        assert_eq!(c_prime_even(&p(&[2, 0]), &r), ParamScalar::int(2));
        assert_eq!(c_prime_even(&p(&[1, 1, 1]), &r), ParamScalar::linear(1, 2));
    }

    #[test]
    fn row_and_box_forms_agree() {
        let r = ParamScalar::r();
        let alpha = ParamScalar::ratio(5, 2);
        for n in 1..=5 {
            for lam in enumerate_lambda(n, 4) {
                assert_eq!(a_factor_rows(&lam, &alpha, &r), a_factor_boxes(&lam, &alpha, &r), "{lam}");
                assert_eq!(b_factor_rows(&lam, &r).unwrap(), b_factor_boxes(&lam, &r).unwrap(), "{lam}");
            }
        }
    }

    #[test]
    fn column_one_evaluation_factors() {
        let r = ParamScalar::r();
        let alpha = ParamScalar::int(1);
        let (a, b) = eval_factors(&p(&[1, 0, 0]), &alpha, &r).unwrap();
        assert_eq!(a, ParamScalar::linear(1, 2));
        assert_eq!(b, ParamScalar::one());
    }

    #[test]
    fn psi_pair_and_box_forms_agree() {
        let r = ParamScalar::r();
        for n in 1..=5 {
            for mu in enumerate_lambda(n, 3) {
                for set in subsets(n) {
                    if !in_p_odd(&set) {
                        continue;
                    }
                    let Some(lam) = mu.add_vec(&indicator(n, &set)) else { continue };
                    assert_eq!(
                        psi_prime_pairs(&mu, &lam, &set, &r).unwrap(),
                        psi_prime_boxes(&mu, &lam, &r).unwrap(),
                        "mu={mu} I={set:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn psi_three_variable_example() {
        // λ = μ + ε_3 in three variables.
        let r = ParamScalar::r();
        let mu = p(&[4, 2, 1]);
        let lam = p(&[4, 2, 2]);
        let (m1, m2, m3) = (4, 2, 1);
        let num = &ParamScalar::int(m2 - m3) * &ParamScalar::linear(m2 - m3 - 1, 2);
        let den = &ParamScalar::linear(m1 - m3, 2) * &ParamScalar::linear(m1 - m3 - 1, 2);
        let want = num.checked_div(&den).unwrap();
        assert_eq!(psi_prime_pairs(&mu, &lam, &[3], &r).unwrap(), want);
    }
}
