//! Difference operators `φ^{-1} Σ_S ĉ_S T_S` acting on semisymmetric polynomials.

use std::sync::{Arc, LazyLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{divide_by_vandermonde, vandermonde, OperatorMatrix};
use super::Kind;
use crate::ambient::Ambient;
use crate::combinatorics::partition::{in_p_even, in_p_odd, indicator, subsets};
use crate::combinatorics::{n_even, n_odd, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, ParamScalar};
use crate::memo::Memo;

/// `φ^{-1} Σ_S ĉ_S T_S`. Subsets are 1-based and sorted; `ĉ_S` are polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp {
    pub n: usize,
    pub label: String,
    pub terms: Vec<(Vec<usize>, MultiPoly)>,
}

fn mask_to_set(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| i + 1).collect()
}

type ExpKey = (Kind, usize, ParamScalar, ParamScalar);
static EXPANSIONS: LazyLock<Memo<ExpKey, DiffOp>> = LazyLock::new(Memo::default);

/// `X(t)` or `Y(t)` at a value of `t`.
pub fn determinant_expand(kind: Kind, amb: &Ambient, t: &BigRational) -> Result<Arc<DiffOp>> {
    let tt = ParamScalar::from_rational(t);
    EXPANSIONS.get_or_compute((kind, amb.n, tt.clone(), amb.r.clone()), || {
        let n = amb.n;
        let m = OperatorMatrix::new(kind, n, &tt, &amb.r)?;
        let mut terms: Vec<(Vec<usize>, MultiPoly)> =
            m.expand().into_iter().map(|(mask, p)| (mask_to_set(mask, n), p)).collect();
        let order = subsets(n);
        terms.sort_by_key(|(s, _)| order.iter().position(|o| o == s));
        for (s, _) in &terms {
            let allowed = match kind {
                Kind::X => in_p_odd(s),
                Kind::Y => in_p_even(s),
            };
            if !allowed {
                return Err(Error::Invariant(format!("{kind:?}({t}) has a shift by {s:?} outside its subset family")));
            }
        }
        Ok(DiffOp { n, label: format!("{kind:?}({t})"), terms })
    })
}

impl DiffOp {
    pub fn identity(n: usize) -> DiffOp {
        DiffOp { n, label: "1".into(), terms: vec![(vec![], vandermonde(n))] }
    }

    pub fn coeff(&self, set: &[usize]) -> Option<&MultiPoly> {
        self.terms.iter().find(|(s, _)| s == set).map(|(_, p)| p)
    }

    /// `Σ_k a_k D_k`.
    pub fn combine(n: usize, label: String, parts: &[(ParamScalar, &DiffOp)]) -> DiffOp {
        let mut acc: Vec<(Vec<usize>, MultiPoly)> = Vec::new();
        for (a, d) in parts {
            if a.is_zero() {
                continue;
            }
            for (s, p) in &d.terms {
                let q = p.scale(a);
                match acc.iter_mut().find(|(t, _)| t == s) {
                    Some((_, slot)) => *slot = slot.add(&q),
                    None => acc.push((s.clone(), q)),
                }
            }
        }
        acc.retain(|(_, p)| !p.is_zero());
        let order = subsets(n);
        acc.sort_by_key(|(s, _)| order.iter().position(|o| o == s));
        DiffOp { n, label, terms: acc }
    }

    /// `D f`; fails if the division by `φ` leaves a remainder.
    pub fn apply(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if f.nvars() != self.n {
            return Err(Error::LengthMismatch(self.n, f.nvars()));
        }
        if !f.is_semisymmetric() {
            return Err(Error::NotSemisymmetric(f.to_string()));
        }
        if f.is_zero() {
            return Ok(f.clone());
        }
        let mut acc = MultiPoly::zero(self.n);
        for (s, c) in &self.terms {
            let shifted = f.shift(&indicator(self.n, s))?;
            acc = acc.add(&c.mul(&shifted));
        }
        // φ has integer coefficients, so clearing r-denominators first keeps
        // the divisions on polynomial coefficients.
        let (cleared, l) = acc.clear_denominators();
        let q = divide_by_vandermonde(&cleared)?;
        Ok(q.scale(&ParamScalar::from_poly(l).inv()?))
    }

    /// The coefficient `c_0 = ĉ_∅ / φ` of the identity shift.
    pub fn c0(&self) -> Result<MultiPoly> {
        match self.coeff(&[]) {
            Some(p) => divide_by_vandermonde(p),
            None => Ok(MultiPoly::zero(self.n)),
        }
    }

    /// True if `ĉ_S(ρ+μ) = 0` whenever `μ - ε_S` is not a partition.
    pub fn cutoff_check(&self, amb: &Ambient, mu: &Partition) -> Result<bool> {
        let pt = amb.rho_plus(mu);
        for (s, c) in &self.terms {
            let lowered: Vec<i64> = mu.iter().zip(indicator(self.n, s)).map(|(a, b)| a - b).collect();
            if Partition::new(lowered, self.n).is_err() && !c.eval(&pt)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `∏_{i odd}(t+ρ_i+λ_i)` for `X`, over even `i` for `Y`.
pub fn eigenvalue(kind: Kind, amb: &Ambient, lam: &[i64], t: &ParamScalar) -> ParamScalar {
    let start = if kind == Kind::X { 0 } else { 1 };
    amb.rho_plus(lam).iter().skip(start).step_by(2).map(|x| t + x).product()
}

/// Eigenvalue of the `k`-th component, `e_k` of the `ρ_i+λ_i` of matching parity.
pub fn component_eigenvalue(kind: Kind, amb: &Ambient, lam: &[i64], k: usize) -> ParamScalar {
    let start = if kind == Kind::X { 0 } else { 1 };
    let vals: Vec<ParamScalar> = amb.rho_plus(lam).into_iter().skip(start).step_by(2).collect();
    let mut e = vec![ParamScalar::one()];
    for v in &vals {
        e.push(ParamScalar::zero());
        for j in (1..e.len()).rev() {
            let add = &e[j - 1] * v;
            e[j] += &add;
        }
    }
    e.get(k).cloned().unwrap_or_default()
}

/// Coefficients of the Lagrange basis polynomials for the nodes `0..=m`,
/// `out[s][k]` being the coefficient of `t^k` in `L_s`.
fn lagrange_basis(m: usize) -> Vec<Vec<BigRational>> {
    let nodes: Vec<BigRational> = (0..=m as i64).map(|x| BigRational::from_integer(x.into())).collect();
    let mut out = Vec::new();
    for s in 0..=m {
        let mut poly = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for q in 0..=m {
            if q == s {
                continue;
            }
            // multiply by (t - t_q)
            let mut next = vec![BigRational::zero(); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &nodes[q];
            }
            poly = next;
            denom *= &nodes[s] - &nodes[q];
        }
        out.push(poly.into_iter().map(|c| c / &denom).collect());
    }
    out
}

static COMPONENTS: LazyLock<Memo<(Kind, usize, ParamScalar), Vec<DiffOp>>> = LazyLock::new(Memo::default);

/// `[D_1, ..., D_m]` with `X(t) = t^m + D_1 t^{m-1} + ... + D_m`, recovered
/// from `t = 0, ..., m`; likewise for `Y`.
pub fn component_operators(kind: Kind, amb: &Ambient) -> Result<Arc<Vec<DiffOp>>> {
    COMPONENTS.get_or_compute((kind, amb.n, amb.r.clone()), || {
        let n = amb.n;
        let m = if kind == Kind::X { n_odd(n) } else { n_even(n) };
        let samples: Vec<Arc<DiffOp>> = (0..=m)
            .map(|t| determinant_expand(kind, amb, &BigRational::from_integer((t as i64).into())))
            .collect::<Result<_>>()?;
        let basis = lagrange_basis(m);
        let mut by_power = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let parts: Vec<(ParamScalar, &DiffOp)> =
                (0..=m).map(|s| (ParamScalar::from_rational(&basis[s][k]), samples[s].as_ref())).collect();
            by_power.push(DiffOp::combine(n, format!("{kind:?}[t^{k}]"), &parts));
        }
        if by_power[m].terms != DiffOp::identity(n).terms {
            return Err(Error::Invariant(format!("{kind:?}(t) is not monic of degree {m} in t")));
        }
        Ok((1..=m)
            .map(|k| {
                let mut d = by_power[m - k].clone();
                d.label = format!("{kind:?}_{k}");
                d
            })
            .collect())
    })
}

/// The coefficient of `T_I` in the subset expansion, as a value at `z`:
/// `(-1)^{|I|_o} ∏_{i∉I} (t+z_i) ∏_{i∈I, n-i even} z_i ∏ (z_i-z_j-r) / ∏ (z_i-z_j)`,
/// the first product over odd (for `X`) or even (for `Y`) `i`, the last two
/// over `i ∈ I`, `j ∉ I` with `j-i` odd and even respectively.
pub fn closed_form_coefficient(
    kind: Kind,
    set: &[usize],
    t: &ParamScalar,
    z: &[ParamScalar],
    r: &ParamScalar,
) -> Result<ParamScalar> {
    let n = z.len();
    let allowed = match kind {
        Kind::X => in_p_odd(set),
        Kind::Y => in_p_even(set),
    };
    if !allowed {
        return Ok(ParamScalar::zero());
    }
    let inset = |i: usize| set.contains(&i);
    let parity = if kind == Kind::X { 1 } else { 0 };
    let mut num = ParamScalar::one();
    let mut den = ParamScalar::one();
    for i in 1..=n {
        if !inset(i) && i % 2 == parity {
            num *= &(t + &z[i - 1]);
        }
    }
    for &i in set {
        if (n - i) % 2 == 0 {
            num *= &z[i - 1];
        }
        for j in (1..=n).filter(|&j| !inset(j)) {
            let diff = &z[i - 1] - &z[j - 1];
            if (i + j) % 2 == 1 {
                num *= &(&diff - r);
            } else {
                den *= &diff;
            }
        }
    }
    let odd_count = set.iter().filter(|&&i| i % 2 == 1).count();
    let v = num.checked_div(&den)?;
    Ok(if odd_count % 2 == 1 { -v } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_lambda;
    use crate::interpolation::build_r;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn x_on_one_variable() {
        let amb = Ambient::symbolic(1);
        let op = determinant_expand(Kind::X, &amb, &q(2)).unwrap();
        let z = MultiPoly::var(1, 0);
        // (z+2) z^2 - z (z-1)^2
        let f = z.mul(&z);
        let want = z.add(&MultiPoly::constant(1, ParamScalar::int(2))).mul(&f).sub(&z.mul(&f.shift(&[1]).unwrap()));
        assert_eq!(op.apply(&f).unwrap(), want);
    }

    #[test]
    fn identity_coefficient_of_x() {
        let amb = Ambient::symbolic(4);
        let op = determinant_expand(Kind::X, &amb, &q(1)).unwrap();
        let want = MultiPoly::var(4, 0).add(&MultiPoly::one(4)).mul(&MultiPoly::var(4, 2).add(&MultiPoly::one(4)));
        assert_eq!(op.c0().unwrap(), want);
    }

    #[test]
    fn eigen_small() {
        for n in 1..=4 {
            let amb = Ambient::symbolic(n);
            for kind in [Kind::X, Kind::Y] {
                for t in [0, 1] {
                    let op = determinant_expand(kind, &amb, &q(t)).unwrap();
                    for lam in enumerate_lambda(n, 2) {
                        let f = build_r(&amb, &lam).unwrap();
                        let ev = eigenvalue(kind, &amb, &lam, &ParamScalar::int(t));
                        assert_eq!(op.apply(&f).unwrap(), f.scale(&ev), "n={n} {kind:?} t={t} λ={lam}");
                    }
                }
            }
        }
    }

    #[test]
    fn components_act_through_c0() {
        // D R_λ = c₀^D(ρ+λ) R_λ, and for a product D D' the scalars multiply.
        for n in 2..=4 {
            let amb = Ambient::symbolic(n);
            let mut ops: Vec<DiffOp> = component_operators(Kind::X, &amb).unwrap().to_vec();
            ops.extend(component_operators(Kind::Y, &amb).unwrap().iter().cloned());
            let c0s: Vec<MultiPoly> = ops.iter().map(|d| d.c0().unwrap()).collect();
            for lam in enumerate_lambda(n, 2) {
                let f = build_r(&amb, &lam).unwrap();
                let at = amb.rho_plus(&lam);
                let vals: Vec<ParamScalar> = c0s.iter().map(|c| c.eval(&at).unwrap()).collect();
                for (i, d) in ops.iter().enumerate() {
                    let once = d.apply(&f).unwrap();
                    assert_eq!(once, f.scale(&vals[i]), "{} on R_{lam}", d.label);
                    for (j, e) in ops.iter().enumerate() {
                        let twice = e.apply(&once).unwrap();
                        assert_eq!(twice, f.scale(&(&vals[i] * &vals[j])), "{} {} on R_{lam}", e.label, d.label);
                    }
                }
            }
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(12))]

        #[test]
        fn filtrations_are_preserved(n in 1usize..=4, seed in 0u64..1000, t in 0i64..3) {
            let amb = Ambient::symbolic(n);
            let f = crate::identities::duality::random_semisym(&amb, 3, seed);
            for kind in [Kind::X, Kind::Y] {
                let g = determinant_expand(kind, &amb, &q(t)).unwrap().apply(&f).unwrap();
                proptest::prop_assert!(g.total_degree() <= f.total_degree());
                for m in 1..=n {
                    proptest::prop_assert!(g.degree_prefix(m) <= f.degree_prefix(m), "deg_{m} grew under {kind:?}");
                }
            }
        }
    }

    #[test]
    fn eigenvalue_examples() {
        let amb = Ambient::symbolic(3);
        let t = ParamScalar::int(5);
        assert_eq!(eigenvalue(Kind::Y, &amb, &[1, 1, 0], &t), &t + &ParamScalar::linear(1, 1));
        assert_eq!(
            eigenvalue(Kind::X, &amb, &[2, 1, 0], &t),
            &(&t + &ParamScalar::linear(2, 2)) * &t
        );
        assert!(eigenvalue(Kind::X, &amb, &[0, 0, 0], &ParamScalar::zero()).is_zero());
    }

    #[test]
    fn components_have_elementary_c0() {
        let amb = Ambient::symbolic(4);
        let xs = component_operators(Kind::X, &amb).unwrap();
        assert_eq!(xs.len(), 2);
        let e1 = MultiPoly::var(4, 0).add(&MultiPoly::var(4, 2));
        assert_eq!(xs[0].c0().unwrap(), e1);
        let diff = DiffOp::combine(
            4,
            "X1-Y1".into(),
            &[(ParamScalar::one(), &xs[0]), (-ParamScalar::one(), &component_operators(Kind::Y, &amb).unwrap()[0])],
        );
        assert_eq!(diff.apply(&MultiPoly::one(4)).unwrap(), MultiPoly::constant(4, ParamScalar::linear(0, 2)));
    }

    #[test]
    fn cutoff_small() {
        let amb = Ambient::symbolic(3);
        let op = determinant_expand(Kind::X, &amb, &q(1)).unwrap();
        for mu in enumerate_lambda(3, 3) {
            assert!(op.cutoff_check(&amb, &mu).unwrap(), "μ={mu}");
        }
    }
}
