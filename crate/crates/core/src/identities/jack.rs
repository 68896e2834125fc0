//! Comparisons with shifted Jack polynomials and the explicit shifted
//! elementary polynomials, all in the coordinates `u = z - ρ`.

use super::ensure_eq;
use crate::ambient::Ambient;
use crate::combinatorics::partition::{even_part, odd_part};
use crate::combinatorics::{bracket1, enumerate_lambda, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, ParamScalar};
use crate::interpolation::elementary::{elementary_symmetric, even_positions, odd_positions};
use crate::interpolation::{build_r, column_r, shifted_elementary, shifted_jack_u};

/// `R̃_λ(u) = R_λ(ρ + u)`.
pub fn r_tilde(amb: &Ambient, lam: &Partition) -> Result<MultiPoly> {
    Ok(build_r(amb, lam)?.translate(&amb.rho()))
}

fn two_r(amb: &Ambient) -> ParamScalar {
    &amb.r * &ParamScalar::int(2)
}

/// `R̃_λ(u) = P̃_{λ_even}(u_even; 2r)` when `[λ]_1 = 0`.
pub fn check_jack1(amb: &Ambient, lam: &Partition) -> Result<()> {
    if bracket1(lam) != 0 {
        return Err(Error::OutOfRange(format!("[{lam}]_1 != 0")));
    }
    let kappa = even_part(lam);
    let p = shifted_jack_u(&kappa, &two_r(amb))?.embed(amb.n, &even_positions(amb.n));
    ensure_eq(&r_tilde(amb, lam)?, &p, || format!("R̃_{lam} against P̃_{kappa:?}(u_even; 2r)"))
}

/// All `λ ∈ Λ` with `λ_odd = μ`: the even parts interlace `μ`.
pub fn with_odd_part(n: usize, mu: &[i64]) -> Vec<Partition> {
    enumerate_lambda(n, mu.iter().sum()).into_iter().filter(|l| odd_part(l) == mu).collect()
}

/// `Σ_{λ_odd = μ} R̃_λ(u)/R̃_λ(λ) = P̃_μ(u_odd; 2r)/P̃_μ(μ; 2r)`.
pub fn check_jack2(amb: &Ambient, mu: &[i64]) -> Result<()> {
    if mu.len() != amb.n_odd() {
        return Err(Error::LengthMismatch(amb.n_odd(), mu.len()));
    }
    let mut lhs = MultiPoly::zero(amb.n);
    for lam in with_odd_part(amb.n, mu) {
        let own = build_r(amb, &lam)?.eval(&amb.rho_plus(&lam))?;
        lhs = lhs.add(&r_tilde(amb, &lam)?.scale(&own.inv()?));
    }
    let s = two_r(amb);
    let own: Vec<ParamScalar> = mu.iter().map(|&v| ParamScalar::int(v)).collect();
    let p = shifted_jack_u(mu, &s)?;
    let rhs = p.scale(&p.eval(&own)?.inv()?).embed(amb.n, &odd_positions(amb.n));
    ensure_eq(&lhs, &rhs, || format!("Σ_{{λ_odd = {mu:?}}} R̃_λ/R̃_λ(λ)"))
}

/// `P̃_{(1^k)}(u_parity; 2r)` via the shifted Jack oracle, zero if there are too few variables.
fn jack_column(amb: &Ambient, k: usize, positions: &[usize]) -> Result<MultiPoly> {
    if k > positions.len() {
        return Ok(MultiPoly::zero(amb.n));
    }
    let mut kappa = vec![1; k];
    kappa.resize(positions.len(), 0);
    Ok(shifted_jack_u(&kappa, &two_r(amb))?.embed(amb.n, positions))
}

/// `R̃_{(1^{2m-1})} = P̃_{(1^m)}(u_odd) - P̃_{(1^m)}(u_even)` and `R̃_{(1^{2m})} = P̃_{(1^m)}(u_even)`
/// for every column that fits, plus the explicit column formula.
pub fn check_columns(amb: &Ambient) -> Result<()> {
    let n = amb.n;
    for m in 1..=n {
        let k = m.div_ceil(2);
        let even = jack_column(amb, k, &even_positions(n))?;
        let want = if m % 2 == 1 { jack_column(amb, k, &odd_positions(n))?.sub(&even) } else { even };
        let col = Partition::column(m, n)?;
        ensure_eq(&r_tilde(amb, &col)?, &want, || format!("R̃_(1^{m}) against shifted Jack columns"))?;
        ensure_eq(&shifted_elementary(amb, m)?, &*column_r(amb, m)?, || format!("explicit R_(1^{m})"))?;
    }
    Ok(())
}

/// The first four shifted columns written out in `u`:
/// `R̃_(1) = e_1(u_odd) - e_1(u_even)`, `R̃_(11) = e_1(u_even)`,
/// `R̃_(111) = e_2(u_odd) - e_2(u_even) + r Σ_{i odd}(i-1)u_i - r Σ_{i even}(i-2)u_i`,
/// `R̃_(1111) = e_2(u_even) + r Σ_{i even}(i-2)u_i`.
pub fn first_columns_u(amb: &Ambient) -> [MultiPoly; 4] {
    let n = amb.n;
    let (odd, even) = (odd_positions(n), even_positions(n));
    let e = |vars: &[usize], k| elementary_symmetric(n, vars, k);
    let weighted = |vars: &[usize], off: i64| {
        vars.iter().fold(MultiPoly::zero(n), |acc, &v| {
            acc.add(&MultiPoly::var(n, v).scale(&(&amb.r * &ParamScalar::int(v as i64 + 1 - off))))
        })
    };
    [
        e(&odd, 1).sub(&e(&even, 1)),
        e(&even, 1),
        e(&odd, 2).sub(&e(&even, 2)).add(&weighted(&odd, 1)).sub(&weighted(&even, 2)),
        e(&even, 2).add(&weighted(&even, 2)),
    ]
}

pub fn check_first_columns(amb: &Ambient) -> Result<()> {
    for (k, shown) in first_columns_u(amb).iter().enumerate() {
        let m = k + 1;
        let built = if m <= amb.n { r_tilde(amb, &Partition::column(m, amb.n)?)? } else { MultiPoly::zero(amb.n) };
        ensure_eq(shown, &built, || format!("R̃_(1^{m}) in u, n = {}", amb.n))?;
    }
    Ok(())
}

/// Partitions of `Λ(d)` with `[λ]_1 = 0`.
pub fn balanced(n: usize, d: i64) -> Vec<Partition> {
    enumerate_lambda(n, d).into_iter().filter(|l| bracket1(l) == 0).collect()
}

/// Partitions `μ` with `n̄` parts and `|μ| <= d`.
pub fn odd_shapes(n: usize, d: i64) -> Vec<Vec<i64>> {
    let mut seen: Vec<Vec<i64>> = Vec::new();
    for lam in enumerate_lambda(n, d) {
        let mu = odd_part(&lam);
        if !seen.contains(&mu) {
            seen.push(mu);
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jack_comparisons() {
        for n in 1..=4 {
            let amb = Ambient::symbolic(n);
            for lam in balanced(n, 2) {
                check_jack1(&amb, &lam).unwrap();
            }
            for mu in odd_shapes(n, 2) {
                check_jack2(&amb, &mu).unwrap();
            }
        }
    }

    #[test]
    fn columns() {
        for n in 1..=5 {
            let amb = Ambient::symbolic(n);
            check_columns(&amb).unwrap();
            check_first_columns(&amb).unwrap();
        }
    }
}
