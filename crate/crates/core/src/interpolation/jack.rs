//! Shifted Jack polynomials `P_κ(z; s)`, used as an independent oracle.

use super::solve::Lu;
use crate::error::{Error, Result};
use crate::exactalg::{Mono, MultiPoly, ParamScalar};

/// Partitions with at most `k` parts and size at most `d`.
fn small_partitions(k: usize, d: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    fn rec(i: usize, k: usize, left: i64, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..=cap.min(left) {
            cur.push(v);
            rec(i + 1, k, left - v, v, cur, out);
            cur.pop();
        }
    }
    rec(0, k, d, d, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.iter().sum::<i64>().cmp(&b.iter().sum::<i64>()).then_with(|| b.cmp(a)));
    out
}

/// Distinct rearrangements of `v`.
fn permutations(v: &[i64]) -> Vec<Vec<i64>> {
    let mut v = v.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // next_permutation over the sorted multiset
    loop {
        let n = v.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

pub fn monomial_symmetric(nu: &[i64]) -> MultiPoly {
    let k = nu.len();
    MultiPoly::from_terms(
        k,
        permutations(nu).into_iter().map(|e| {
            let m: Vec<u16> = e.iter().map(|&x| x as u16).collect();
            (Mono::from_slice(&m), ParamScalar::one())
        }),
    )
}

/// `ρ'_i = (k - i) s`.
pub fn jack_rho(k: usize, s: &ParamScalar) -> Vec<ParamScalar> {
    (0..k).map(|i| s * &ParamScalar::int((k - 1 - i) as i64)).collect()
}

/// `P_κ(z; s)` in `k = κ.len()` variables: symmetric, degree `|κ|`, coefficient
/// 1 on `z^κ`, vanishing at `ρ'+ν` for `|ν| <= |κ|`, `ν != κ`.
pub fn shifted_jack(kappa: &[i64], s: &ParamScalar) -> Result<MultiPoly> {
    let k = kappa.len();
    if kappa.windows(2).any(|w| w[0] < w[1]) || kappa.iter().any(|&x| x < 0) {
        return Err(Error::InvalidPartition(format!("{kappa:?}")));
    }
    let d: i64 = kappa.iter().sum();
    let parts = small_partitions(k, d);
    let basis: Vec<MultiPoly> = parts.iter().map(|nu| monomial_symmetric(nu)).collect();
    let rho = jack_rho(k, s);
    let rows: Vec<Vec<ParamScalar>> = parts
        .iter()
        .map(|nu| {
            let pt: Vec<ParamScalar> = rho.iter().zip(nu).map(|(a, &b)| a + &ParamScalar::int(b)).collect();
            basis.iter().map(|m| m.eval(&pt)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let lu = Lu::factor(rows, &|i| format!("m_{:?}", parts[i]), s)?;
    let pos = parts.iter().position(|p| p == kappa).expect("κ is a node");
    let coeffs = lu.solve_unit(pos)?;
    let mut poly = MultiPoly::zero(k);
    for (m, c) in basis.iter().zip(&coeffs) {
        poly = poly.add(&m.scale(c));
    }
    let lead: Vec<u16> = kappa.iter().map(|&x| x as u16).collect();
    let c = poly.coeff_of(&lead);
    Ok(poly.scale(&c.inv()?))
}

/// `P̃_κ(u; s) = P_κ(ρ' + u; s)`.
pub fn shifted_jack_u(kappa: &[i64], s: &ParamScalar) -> Result<MultiPoly> {
    Ok(shifted_jack(kappa, s)?.translate(&jack_rho(kappa.len(), s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_jack_is_shifted_sum() {
        let s = ParamScalar::r();
        let p = shifted_jack(&[1, 0, 0], &s).unwrap();
        let rho_sum: ParamScalar = jack_rho(3, &s).into_iter().sum();
        let want = monomial_symmetric(&[1, 0, 0]).sub(&MultiPoly::constant(3, rho_sum));
        assert_eq!(p, want);
    }

    #[test]
    fn column_jack_matches_decreasing_index_formula() {
        use crate::interpolation::elementary::shifted_jack_column;
        let s = ParamScalar::r();
        for k in 1..=4usize {
            for m in 1..=k {
                let mut kappa = vec![1; m];
                kappa.resize(k, 0);
                let got = shifted_jack_u(&kappa, &s).unwrap();
                let vars: Vec<usize> = (0..k).collect();
                assert_eq!(got, shifted_jack_column(k, &vars, m, &s), "k={k} m={m}");
            }
        }
    }

    #[test]
    fn jack_is_symmetric() {
        let s = ParamScalar::linear(0, 2);
        let p = shifted_jack(&[2, 1, 0], &s).unwrap();
        assert_eq!(p.swap_vars(0, 1), p);
        assert_eq!(p.swap_vars(1, 2), p);
    }
}
