//! Elementary semisymmetric polynomials `𝐞_m`, their products `𝐞_μ`, and the
//! shifted versions `R_{(1^m)}`.

use std::sync::{Arc, LazyLock};

use crate::ambient::Ambient;
use crate::combinatorics::{n_even, n_odd, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{Mono, MultiPoly, ParamScalar};
use crate::memo::Memo;

/// `e_m` of the variables at 0-based positions `vars`, as a polynomial in `n` variables.
pub fn elementary_symmetric(n: usize, vars: &[usize], m: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(n);
    fn rec(start: usize, left: usize, vars: &[usize], e: &mut Mono, p: &mut MultiPoly) {
        if left == 0 {
            p.add_term(e.clone(), &ParamScalar::one());
            return;
        }
        for k in start..vars.len() {
            if vars.len() - k < left {
                break;
            }
            e.0[vars[k]] += 1;
            rec(k + 1, left - 1, vars, e, p);
            e.0[vars[k]] -= 1;
        }
    }
    rec(0, m, vars, &mut Mono::zero(n), &mut p);
    p
}

pub fn odd_positions(n: usize) -> Vec<usize> {
    (0..n).step_by(2).collect()
}

pub fn even_positions(n: usize) -> Vec<usize> {
    (1..n).step_by(2).collect()
}

fn check_m(m: usize, n: usize) -> Result<()> {
    if m == 0 || m > n {
        return Err(Error::OutOfRange(format!("m = {m} must lie in 1..={n}")));
    }
    Ok(())
}

/// `𝐞_{2k-1} = e_k(z_odd) - e_k(z_even)`, `𝐞_{2k} = e_k(z_even)`.
pub fn elementary_semisym(m: usize, n: usize) -> Result<MultiPoly> {
    check_m(m, n)?;
    let k = m.div_ceil(2);
    let even = elementary_symmetric(n, &even_positions(n), k);
    if m % 2 == 1 {
        Ok(elementary_symmetric(n, &odd_positions(n), k).sub(&even))
    } else {
        Ok(even)
    }
}

static E_MU: LazyLock<Memo<(usize, Partition), MultiPoly>> = LazyLock::new(Memo::default);

/// `𝐞_μ = 𝐞_1^{μ1-μ2} ... 𝐞_n^{μn}`, with leading monomial `z^{[μ]}`.
pub fn e_mu(mu: &Partition) -> Arc<MultiPoly> {
    let n = mu.n();
    E_MU.get_or_compute((n, mu.clone()), || {
        let mut acc = MultiPoly::one(n);
        for k in 1..=n {
            let next = if k < n { mu[k] } else { 0 };
            let e = (mu[k - 1] - next) as u32;
            if e > 0 {
                acc = acc.mul(&elementary_semisym(k, n)?.pow(e));
            }
        }
        Ok(acc)
    })
    .expect("e_mu is total")
}

/// Values `𝐞_1(x), ..., 𝐞_n(x)` at a point.
pub fn e_values(x: &[ParamScalar]) -> Vec<ParamScalar> {
    let n = x.len();
    let sym = |vals: Vec<&ParamScalar>| {
        // e_0..e_len via the usual recurrence
        let mut e = vec![ParamScalar::one()];
        for v in vals {
            e.push(ParamScalar::zero());
            for k in (1..e.len()).rev() {
                let add = &e[k - 1] * v;
                e[k] += &add;
            }
        }
        e
    };
    let eo = sym(x.iter().step_by(2).collect());
    let ee = sym(x.iter().skip(1).step_by(2).collect());
    (1..=n)
        .map(|m| {
            let k = m.div_ceil(2);
            let even = ee.get(k).cloned().unwrap_or_default();
            if m % 2 == 1 {
                &eo.get(k).cloned().unwrap_or_default() - &even
            } else {
                even
            }
        })
        .collect()
}

/// `𝐞_μ(x)` from precomputed `e_values(x)`.
pub fn e_mu_value(mu: &[i64], ev: &[ParamScalar]) -> ParamScalar {
    let n = mu.len();
    let mut acc = ParamScalar::one();
    for k in 1..=n {
        let next = if k < n { mu[k] } else { 0 };
        let e = (mu[k - 1] - next) as u32;
        if e > 0 {
            acc *= &ev[k - 1].pow(e);
        }
    }
    acc
}

/// `P̃_{(1^k)}(v; s) = Σ_{K >= i1 > ... > ik >= 1} ∏_j (v_{i_j} + (j-1) s)` on
/// the variables at positions `vars`, as a polynomial in `n` variables.
pub fn shifted_jack_column(n: usize, vars: &[usize], k: usize, s: &ParamScalar) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    fn rec(hi: usize, j: usize, k: usize, vars: &[usize], s: &ParamScalar, acc: MultiPoly, out: &mut MultiPoly) {
        if j == k {
            *out = out.add(&acc);
            return;
        }
        // choose i_{j+1} < hi
        for i in (0..hi).rev() {
            if i + 1 < k - j {
                break;
            }
            let n = acc.nvars();
            let factor = MultiPoly::var(n, vars[i]).add(&MultiPoly::constant(n, s * &ParamScalar::int(j as i64)));
            rec(i, j + 1, k, vars, s, acc.mul(&factor), out);
        }
    }
    rec(vars.len(), 0, k, vars, s, MultiPoly::one(n), &mut out);
    out
}

/// `R̃_{(1^m)}(u)` in the coordinates `u = z - ρ`.
pub fn shifted_elementary_u(amb: &Ambient, m: usize) -> Result<MultiPoly> {
    let n = amb.n;
    check_m(m, n)?;
    let s = &amb.r * &ParamScalar::int(2);
    let k = m.div_ceil(2);
    let even = if k <= n_even(n) {
        shifted_jack_column(n, &even_positions(n), k, &s)
    } else {
        MultiPoly::zero(n)
    };
    if m % 2 == 1 {
        let odd = if k <= n_odd(n) { shifted_jack_column(n, &odd_positions(n), k, &s) } else { MultiPoly::zero(n) };
        Ok(odd.sub(&even))
    } else {
        Ok(even)
    }
}

/// `R_{(1^m)}(z)` from the explicit shifted formula.
pub fn shifted_elementary(amb: &Ambient, m: usize) -> Result<MultiPoly> {
    let neg_rho: Vec<ParamScalar> = amb.rho().iter().map(|x| -x).collect();
    Ok(shifted_elementary_u(amb, m)?.translate(&neg_rho))
}

/// `𝐞_m` or `R_{(1^m)}` depending on `shifted`.
pub fn elementary(amb: &Ambient, m: usize, shifted: bool) -> Result<MultiPoly> {
    if shifted {
        shifted_elementary(amb, m)
    } else {
        elementary_semisym(m, amb.n)
    }
}
