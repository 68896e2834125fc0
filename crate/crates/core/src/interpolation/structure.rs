//! Top homogeneous parts and restriction to fewer variables.

use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, ParamScalar};

/// `f̄`, the homogeneous part of maximal degree.
pub fn top_component(f: &MultiPoly) -> Result<MultiPoly> {
    if f.is_zero() {
        return Err(Error::OutOfRange("the zero polynomial has no top component".into()));
    }
    Ok(f.top_component())
}

/// `f(z_1, ..., z_{n-1}, 0)` in `n-1` variables.
pub fn stability_restrict(f: &MultiPoly) -> Result<MultiPoly> {
    if f.nvars() < 2 {
        return Err(Error::OutOfRange(format!("restriction needs n >= 2, got {}", f.nvars())));
    }
    Ok(f.set_last_zero())
}

/// `g(z_1 - r, ..., z_m - r)`, the other side of the stability identity.
pub fn shift_all_by_r(g: &MultiPoly, r: &ParamScalar) -> MultiPoly {
    g.translate(&vec![-r.clone(); g.nvars()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::Ambient;
    use crate::combinatorics::{enumerate_lambda, Partition};
    use crate::interpolation::build::build_r;
    use crate::interpolation::elementary::{elementary_symmetric, even_positions};

    #[test]
    fn top_of_first_polynomial() {
        let amb = Ambient::symbolic(3);
        let r1 = build_r(&amb, &Partition::new(vec![1, 0, 0], 3).unwrap()).unwrap();
        let want = MultiPoly::var(3, 0).sub(&MultiPoly::var(3, 1)).add(&MultiPoly::var(3, 2));
        assert_eq!(top_component(&r1).unwrap(), want);
        assert_eq!(top_component(&want).unwrap(), want);
        assert!(top_component(&MultiPoly::zero(3)).is_err());
    }

    #[test]
    fn top_of_even_columns() {
        for n in 2..=5 {
            let amb = Ambient::symbolic(n);
            for m in 1..=n / 2 {
                let col = build_r(&amb, &Partition::column(2 * m, n).unwrap()).unwrap();
                assert_eq!(top_component(&col).unwrap(), elementary_symmetric(n, &even_positions(n), m));
            }
        }
    }

    #[test]
    fn restriction_matches_smaller_ambient() {
        for n in 2..=4 {
            let amb = Ambient::symbolic(n);
            let small = amb.with_n(n - 1);
            for lam in enumerate_lambda(n, 3) {
                let got = stability_restrict(&build_r(&amb, &lam).unwrap()).unwrap();
                match lam.drop_last() {
                    Some(short) => {
                        let want = shift_all_by_r(&build_r(&small, &short).unwrap(), &amb.r);
                        assert_eq!(got, want, "n={n} λ={lam}");
                    }
                    None => assert!(got.is_zero(), "n={n} λ={lam}"),
                }
            }
        }
    }
}
