//! The binomial formula, the symmetric and the involutive coefficient
//! matrices, and the transform `f ↦ f̂` with its properties.

use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{ensure, ensure_eq};
use crate::ambient::Ambient;
use crate::combinatorics::{enumerate_lambda, minus_rho_alpha, odd_degree, order_test, Partition, Relation};
use crate::diffops::{determinant_expand, DiffOp, Kind};
use crate::error::Result;
use crate::exactalg::{MultiPoly, ParamScalar};
use crate::interpolation::basis::{from_hat, hat_values, node_values};
use crate::interpolation::{build_r, e_mu, from_basis};

fn alpha_point(amb: &Ambient, alpha: &BigRational) -> Vec<ParamScalar> {
    minus_rho_alpha(amb.n, &ParamScalar::from_rational(alpha), &amb.r)
}

/// `R_λ(-α-z) / R_λ(-ρ_α)`.
pub fn binomial_lhs(amb: &Ambient, lam: &Partition, alpha: &BigRational) -> Result<MultiPoly> {
    let r_lam = build_r(amb, lam)?;
    let a = ParamScalar::from_rational(alpha);
    let g = r_lam.negate_vars().translate(&vec![a; amb.n]);
    Ok(g.scale(&r_lam.eval(&alpha_point(amb, alpha))?.inv()?))
}

/// `Σ_{μ ⊑ λ} (-1)^{|μ|_odd} R_μ(ρ+λ)/R_μ(ρ+μ) · R_μ(z)/R_μ(-ρ_α)`.
pub fn binomial_rhs(amb: &Ambient, lam: &Partition, alpha: &BigRational) -> Result<MultiPoly> {
    let pt = alpha_point(amb, alpha);
    let at_lam = amb.rho_plus(lam);
    let mut acc = MultiPoly::zero(amb.n);
    for mu in enumerate_lambda(amb.n, odd_degree(lam)) {
        if !order_test(&mu, lam, Relation::Sqsubseteq)? {
            continue;
        }
        let r_mu = build_r(amb, &mu)?;
        let mut c = r_mu.eval(&at_lam)?.checked_div(&r_mu.eval(&amb.rho_plus(&mu))?)?;
        c = c.checked_div(&r_mu.eval(&pt)?)?;
        if odd_degree(&mu) % 2 == 1 {
            c = -c;
        }
        acc = acc.add(&r_mu.scale(&c));
    }
    Ok(acc)
}

pub fn binomial_check(amb: &Ambient, lam: &Partition, alpha: &BigRational) -> Result<()> {
    ensure_eq(&binomial_lhs(amb, lam, alpha)?, &binomial_rhs(amb, lam, alpha)?, || {
        format!("binomial formula for λ = {lam}, α = {alpha}")
    })
}

/// `S[λ][ν] = R_λ(-ρ_α-ν) / R_λ(-ρ_α)` on `Λ(d)`.
pub fn symmetric_matrix(amb: &Ambient, d: i64, alpha: &BigRational) -> Result<(Vec<Partition>, Vec<Vec<ParamScalar>>)> {
    let lambdas = enumerate_lambda(amb.n, d);
    let base = alpha_point(amb, alpha);
    let mut rows = Vec::with_capacity(lambdas.len());
    for lam in &lambdas {
        let r_lam = build_r(amb, lam)?;
        let denom = r_lam.eval(&base)?;
        let row = lambdas
            .iter()
            .map(|nu| {
                let pt: Vec<ParamScalar> = base.iter().zip(nu.iter()).map(|(b, &v)| b - &ParamScalar::int(v)).collect();
                r_lam.eval(&pt)?.checked_div(&denom)
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok((lambdas, rows))
}

pub fn check_symmetric(amb: &Ambient, d: i64, alpha: &BigRational) -> Result<()> {
    let (lambdas, m) = symmetric_matrix(amb, d, alpha)?;
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            ensure_eq(&m[i][j], &m[j][i], || {
                format!("R_λ(-ρ_α-ν)/R_λ(-ρ_α) at (λ, ν) = ({}, {}), α = {alpha}", lambdas[i], lambdas[j])
            })?;
        }
    }
    Ok(())
}

/// `M[μ][λ] = (-1)^{|μ|_odd} R_μ(ρ+λ) / R_μ(ρ+μ)` on `Λ(d)`.
#[derive(Clone, Debug)]
pub struct DualityMatrix {
    pub lambdas: Vec<Partition>,
    pub entries: Vec<Vec<ParamScalar>>,
}

impl DualityMatrix {
    pub fn new(amb: &Ambient, d: i64) -> Result<Self> {
        let lambdas = enumerate_lambda(amb.n, d);
        let mut entries = Vec::with_capacity(lambdas.len());
        for mu in &lambdas {
            let r_mu = build_r(amb, mu)?;
            let own = r_mu.eval(&amb.rho_plus(mu))?;
            let sign = if odd_degree(mu) % 2 == 1 { ParamScalar::int(-1) } else { ParamScalar::one() };
            let row = lambdas
                .iter()
                .map(|lam| Ok(&r_mu.eval(&amb.rho_plus(lam))?.checked_div(&own)? * &sign))
                .collect::<Result<Vec<_>>>()?;
            entries.push(row);
        }
        Ok(DualityMatrix { lambdas, entries })
    }

    pub fn square(&self) -> Vec<Vec<ParamScalar>> {
        let k = self.lambdas.len();
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        (0..k)
                            .filter(|&l| !self.entries[i][l].is_zero() && !self.entries[l][j].is_zero())
                            .map(|l| &self.entries[i][l] * &self.entries[l][j])
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    /// Entries vanish off `μ ⊑ λ`, and `M² = 1`.
    pub fn check(&self) -> Result<()> {
        let k = self.lambdas.len();
        for i in 0..k {
            for j in 0..k {
                let (mu, lam) = (&self.lambdas[i], &self.lambdas[j]);
                if !order_test(mu, lam, Relation::Sqsubseteq)? {
                    ensure(self.entries[i][j].is_zero(), || format!("M[{mu}][{lam}] = {} off ⊑", self.entries[i][j]))?;
                }
            }
        }
        let sq = self.square();
        for (i, row) in sq.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let want = if i == j { ParamScalar::one() } else { ParamScalar::zero() };
                ensure_eq(v, &want, || format!("M² at ({}, {})", self.lambdas[i], self.lambdas[j]))?;
            }
        }
        Ok(())
    }
}

/// A semisymmetric polynomial of degree `<= d` with small random coefficients in `Z[r]`.
pub fn random_semisym(amb: &Ambient, d: i64, seed: u64) -> MultiPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = MultiPoly::zero(amb.n);
    for mu in enumerate_lambda(amb.n, d) {
        if rng.gen_bool(0.3) {
            continue;
        }
        let c = ParamScalar::linear(rng.gen_range(-3..=3), rng.gen_range(-1..=1));
        f = f.add(&e_mu(&mu).scale(&c));
    }
    f
}

/// Checks on `f`:
/// i) `f̂̂ = f` on `Λ(d)`; ii) `f̂` vanishes on `Λ(d+1) ∖ Λ(d)`;
/// iii) `Σ (-1)^{|μ|_odd} f̂(ρ+μ) R_μ/R_μ(ρ+μ) = f`;
/// iv) `(D f)^ = c_0^D f̂` on `Λ(d)` for `D = X(1), Y(1)`.
pub fn check_interpol(amb: &Ambient, f: &MultiPoly) -> Result<()> {
    let d = f.total_degree().unwrap_or(0) as i64;
    let values = node_values(amb, f, d)?;
    let hat = hat_values(amb, &values)?;
    ensure(hat_values(amb, &hat)? == values, || format!("double transform differs from f = {f}"))?;

    let wide = hat_values(amb, &node_values(amb, f, d + 1)?)?;
    for (lam, h) in &wide {
        if odd_degree(lam) > d {
            ensure(h.is_zero(), || format!("f̂(ρ+{lam}) = {h} outside Λ({d})"))?;
        } else {
            let narrow = hat.iter().find(|(l, _)| l == lam).map(|(_, v)| v.clone()).unwrap_or_default();
            ensure_eq(h, &narrow, || format!("f̂(ρ+{lam}) depends on the window"))?;
        }
    }

    ensure_eq(&from_basis(amb, &from_hat(amb, &hat)?)?, f, || "reconstruction from f̂".into())?;

    let one = BigRational::from_integer(1.into());
    let mut ops: Vec<std::sync::Arc<DiffOp>> = vec![determinant_expand(Kind::X, amb, &one)?];
    if amb.n_even() > 0 {
        ops.push(determinant_expand(Kind::Y, amb, &one)?);
    }
    for op in ops {
        let c0 = op.c0()?;
        let df = op.apply(f)?;
        let dhat = hat_values(amb, &node_values(amb, &df, d)?)?;
        for ((lam, lhs), (_, h)) in dhat.iter().zip(&hat) {
            let rhs = &c0.eval(&amb.rho_plus(lam))? * h;
            ensure_eq(lhs, &rhs, || format!("({} f)^ at ρ+{lam}", op.label))?;
        }
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
    fn binomial_first_column_has_two_terms() {
        let amb = Ambient::symbolic(3);
        let alpha = BigRational::from_integer(1.into());
        let lam = p(&[1, 0, 0]);
        binomial_check(&amb, &lam, &alpha).unwrap();
        // (z1 - z2 + z3 + α + r) / (α + 2r) with α = 1
        let lhs = binomial_lhs(&amb, &lam, &alpha).unwrap();
        let den = ParamScalar::linear(1, 2).inv().unwrap();
        assert_eq!(lhs.coeff_of(&[1, 0, 0]), den);
        assert_eq!(lhs.coeff_of(&[0, 0, 0]), &ParamScalar::linear(1, 1) * &den);
        assert!(binomial_lhs(&amb, &Partition::zero(3), &alpha).unwrap().coeff_of(&[0, 0, 0]).is_one());
    }

    #[test]
    fn binomial_small_sweep() {
        for n in 1..=3 {
            let amb = Ambient::symbolic(n);
            for lam in enumerate_lambda(n, 2) {
                binomial_check(&amb, &lam, &BigRational::new(5.into(), 2.into())).unwrap();
            }
        }
    }

    #[test]
    fn symmetric_and_involutive() {
        let amb = Ambient::symbolic(3);
        check_symmetric(&amb, 2, &BigRational::from_integer(1.into())).unwrap();
        DualityMatrix::new(&amb, 2).unwrap().check().unwrap();
    }

    #[test]
    fn interpol_on_random_input() {
        for n in 2..=3 {
            let amb = Ambient::symbolic(n);
            check_interpol(&amb, &random_semisym(&amb, 2, 7)).unwrap();
            check_interpol(&amb, &MultiPoly::one(n)).unwrap();
        }
    }
}
