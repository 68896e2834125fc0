//! Construction of `R_λ` and `r_λ` from the vanishing conditions.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock};

use super::elementary::{e_mu, e_mu_value, e_values};
use super::solve::Lu;
use crate::ambient::Ambient;
use crate::combinatorics::factors::c_prime_even;
use crate::combinatorics::{bracket, enumerate_lambda, odd_degree, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{Mono, MultiPoly, ParamScalar};
use crate::memo::Memo;

/// The square system `𝐞_μ(ρ+ν)`, `μ, ν ∈ Λ(d)`, factored once per `(r, n, d)`.
pub struct InterpSystem {
    pub lambdas: Vec<Partition>,
    index: HashMap<Partition, usize>,
    lu: Lu,
}

impl InterpSystem {
    pub fn position(&self, lam: &Partition) -> Option<usize> {
        self.index.get(lam).copied()
    }

    /// Coefficients in the `𝐞_μ` basis of the polynomial taking value 1 at
    /// `ρ+λ` and 0 at the other nodes.
    pub fn delta_coefficients(&self, lam: &Partition) -> Result<Vec<ParamScalar>> {
        let k = self.position(lam).ok_or_else(|| Error::OutOfRange(format!("{lam} is not a node")))?;
        self.lu.solve_unit(k)
    }
}

type SysKey = (ParamScalar, usize, i64);
type PolyKey = (ParamScalar, Partition);

static SYSTEMS: LazyLock<Memo<SysKey, InterpSystem>> = LazyLock::new(Memo::default);
static R_CACHE: LazyLock<Memo<PolyKey, MultiPoly>> = LazyLock::new(Memo::default);

pub fn interpolation_system(amb: &Ambient, d: i64) -> Result<Arc<InterpSystem>> {
    SYSTEMS.get_or_compute((amb.r.clone(), amb.n, d), || {
        let lambdas = enumerate_lambda(amb.n, d);
        let rows: Vec<Vec<ParamScalar>> = lambdas
            .iter()
            .map(|nu| {
                let ev = e_values(&amb.rho_plus(nu));
                lambdas.iter().map(|mu| e_mu_value(mu, &ev)).collect()
            })
            .collect();
        let lu = Lu::factor(rows, &|k| format!("e_{}", lambdas[k]), &amb.r)?;
        let index = lambdas.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Ok(InterpSystem { lambdas, index, lu })
    })
}

fn check_partition(amb: &Ambient, lam: &Partition) -> Result<()> {
    if lam.n() != amb.n {
        return Err(Error::LengthMismatch(amb.n, lam.n()));
    }
    Ok(())
}

/// `R_λ`: semisymmetric of degree `|λ|_odd`, monic on `z^{[λ]}`, vanishing at
/// `ρ+μ` for every other `μ ∈ Λ(|λ|_odd)`.
pub fn build_r(amb: &Ambient, lam: &Partition) -> Result<Arc<MultiPoly>> {
    check_partition(amb, lam)?;
    R_CACHE.get_or_compute((amb.r.clone(), lam.clone()), || build_r_uncached(amb, lam))
}

fn build_r_uncached(amb: &Ambient, lam: &Partition) -> Result<MultiPoly> {
    let n = amb.n;
    if n == 0 {
        return Ok(MultiPoly::one(0));
    }
    if let Some(inner) = lam.minus_delta() {
        // R_λ(z) = (∏_{n-i even} z_i) R_{λ-δ}(z - δ)
        let prev = build_r(amb, &inner)?;
        let shifted = prev.shift(&vec![1; n])?;
        let mut mono = Mono::zero(n);
        for i in 1..=n {
            if (n - i) % 2 == 0 {
                mono.0[i - 1] = 1;
            }
        }
        return Ok(shifted.mul_mono(&mono));
    }
    let sys = interpolation_system(amb, odd_degree(lam))?;
    let coeffs = sys.delta_coefficients(lam)?;
    let mut poly = MultiPoly::zero(n);
    for (mu, c) in sys.lambdas.iter().zip(&coeffs) {
        if !c.is_zero() {
            poly = poly.add(&e_mu(mu).scale(c));
        }
    }
    let lead: Vec<u16> = bracket(lam).iter().map(|&x| x as u16).collect();
    let c = poly.coeff_of(&lead);
    if c.is_zero() {
        return Err(Error::Singular { column: format!("z^{lead:?}"), r: amb.r.to_string() });
    }
    Ok(poly.scale(&c.inv()?))
}

/// `r_λ = R_λ / R_λ(ρ+λ)`, the Kronecker-delta normalization.
pub fn build_r_normalized(amb: &Ambient, lam: &Partition) -> Result<MultiPoly> {
    let big = build_r(amb, lam)?;
    let v = big.eval(&amb.rho_plus(lam))?;
    Ok(big.scale(&v.inv()?))
}

/// `R_λ(ρ+λ)` from the hook product, without building `R_λ`.
pub fn value_at_own_node(amb: &Ambient, lam: &Partition) -> ParamScalar {
    c_prime_even(lam, &amb.r)
}

/// `R_{(1^m)}` with the convention that it vanishes for `m > n`.
pub fn column_r(amb: &Ambient, m: usize) -> Result<Arc<MultiPoly>> {
    if m > amb.n {
        return Ok(Arc::new(MultiPoly::zero(amb.n)));
    }
    build_r(amb, &Partition::column(m, amb.n)?)
}

/// Parses a partition given as integers and builds `R_λ`.
pub fn build_r_parts(amb: &Ambient, parts: &[i64]) -> Result<Arc<MultiPoly>> {
    build_r(amb, &Partition::new(parts.to_vec(), amb.n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interpolation::elementary::shifted_elementary;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec(), v.len()).unwrap()
    }

    #[test]
    fn first_polynomial_three_variables() {
        let amb = Ambient::symbolic(3);
        let r1 = build_r(&amb, &p(&[1, 0, 0])).unwrap();
        assert_eq!(*r1, shifted_elementary(&amb, 1).unwrap());
        assert!(r1.eval(&amb.rho_plus(&[1, 1, 0])).unwrap().is_zero());
    }

    #[test]
    fn second_row_is_r1_squared_minus_r1() {
        for n in 1..=4 {
            let amb = Ambient::symbolic(n);
            let mut two = vec![0; n];
            two[0] = 2;
            let mut one = vec![0; n];
            one[0] = 1;
            let r1 = build_r(&amb, &p(&one)).unwrap();
            let r2 = build_r(&amb, &p(&two)).unwrap();
            assert_eq!(*r2, r1.mul(&r1).sub(&r1), "n={n}");
        }
    }

    #[test]
    fn normalized_value_at_own_node() {
        let amb = Ambient::symbolic(3);
        let lam = p(&[1, 1, 1]);
        let big = build_r(&amb, &lam).unwrap();
        assert_eq!(big.eval(&amb.rho_plus(&lam)).unwrap(), ParamScalar::linear(1, 2));
        let small = build_r_normalized(&amb, &lam).unwrap();
        assert_eq!(small.eval(&amb.rho_plus(&lam)).unwrap(), ParamScalar::one());
        let zero = build_r_normalized(&amb, &p(&[0, 0, 0])).unwrap();
        assert_eq!(zero, MultiPoly::one(3));
    }

    #[test]
    fn normalized_vanishes_off_node() {
        for n in 1..=4 {
            let amb = Ambient::symbolic(n);
            for lam in enumerate_lambda(n, 3) {
                let f = build_r_normalized(&amb, &lam).unwrap();
                for mu in enumerate_lambda(n, odd_degree(&lam)) {
                    let v = f.eval(&amb.rho_plus(&mu)).unwrap();
                    let want = if mu == lam { ParamScalar::one() } else { ParamScalar::zero() };
                    assert_eq!(v, want, "n={n} λ={lam} μ={mu}");
                }
            }
        }
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let amb = Ambient::symbolic(3);
        assert!(build_r(&amb, &p(&[1, 0])).is_err());
    }

    #[test]
    fn singular_specialization_is_reported() {
        // At r = -1/2 the node (1,1,1) has R(ρ+λ) = 1+2r = 0, so the degree-2 system degenerates.
        let q = crate::exactalg::parse_rational("-1/2").unwrap();
        assert!(Ambient::rational(3, &q).is_err());
        let bad = Ambient { n: 3, r: ParamScalar::from_rational(&q) };
        assert!(matches!(build_r(&bad, &p(&[2, 0, 0])), Err(Error::Singular { .. })));
        let amb0 = Ambient::rational(2, &crate::exactalg::parse_rational("0").unwrap()).unwrap();
        assert!(build_r(&amb0, &p(&[1, 1])).is_ok());
    }
}
