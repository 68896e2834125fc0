//! Dense exact LU factorization over `Q(r)`.

use crate::error::{Error, Result};
use crate::exactalg::ParamScalar;

/// `P A = L U` with unit lower `L`; both stored in one matrix.
pub struct Lu {
    size: usize,
    a: Vec<Vec<ParamScalar>>,
    /// `perm[k]` is the original row placed at position `k`.
    perm: Vec<usize>,
}

impl Lu {
    /// Factors a square matrix. Among the nonzero candidates in a column the
    /// pivot is the one of least size in `r`, ties going to the lowest row.
    /// `labels` names columns in the error raised for a singular matrix.
    pub fn factor(mut a: Vec<Vec<ParamScalar>>, labels: &dyn Fn(usize) -> String, r: &ParamScalar) -> Result<Lu> {
        let size = a.len();
        let mut perm: Vec<usize> = (0..size).collect();
        for k in 0..size {
            let p = (k..size)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| (a[i][k].weight(), i))
                .ok_or_else(|| Error::Singular { column: labels(k), r: r.to_string() })?;
            a.swap(k, p);
            perm.swap(k, p);
            let inv = a[k][k].inv()?;
            let (top, rest) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in rest.iter_mut() {
                if row[k].is_zero() {
                    continue;
                }
                let m = &row[k] * &inv;
                for j in k + 1..size {
                    if !pivot_row[j].is_zero() {
                        let t = &m * &pivot_row[j];
                        row[j] -= &t;
                    }
                }
                row[k] = m;
            }
        }
        Ok(Lu { size, a, perm })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn solve(&self, b: &[ParamScalar]) -> Result<Vec<ParamScalar>> {
        let n = self.size;
        let mut y: Vec<ParamScalar> = self.perm.iter().map(|&i| b[i].clone()).collect();
        for i in 0..n {
            for j in 0..i {
                if !self.a[i][j].is_zero() && !y[j].is_zero() {
                    let t = &self.a[i][j] * &y[j];
                    y[i] -= &t;
                }
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                if !self.a[i][j].is_zero() && !y[j].is_zero() {
                    let t = &self.a[i][j] * &y[j];
                    y[i] -= &t;
                }
            }
            y[i] = y[i].checked_div(&self.a[i][i])?;
        }
        Ok(y)
    }

    /// Solves `A x = e_k`.
    pub fn solve_unit(&self, k: usize) -> Result<Vec<ParamScalar>> {
        let mut b = vec![ParamScalar::zero(); self.size];
        b[k] = ParamScalar::one();
        self.solve(&b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64, b: i64) -> ParamScalar {
        ParamScalar::linear(a, b)
    }

    #[test]
    fn solves_symbolic_system() {
        let a = vec![vec![s(0, 0), s(1, 1)], vec![s(2, 0), s(0, 1)]];
        let lu = Lu::factor(a.clone(), &|k| k.to_string(), &ParamScalar::r()).unwrap();
        let b = vec![s(1, 0), s(0, 1)];
        let x = lu.solve(&b).unwrap();
        for i in 0..2 {
            let lhs: ParamScalar = (0..2).map(|j| &a[i][j] * &x[j]).sum();
            assert_eq!(lhs, b[i]);
        }
    }

    #[test]
    fn singular_system_names_column() {
        let a = vec![vec![s(1, 0), s(0, 1)], vec![s(2, 0), s(0, 2)]];
        match Lu::factor(a, &|k| format!("col{k}"), &ParamScalar::r()) {
            Err(Error::Singular { column, .. }) => assert_eq!(column, "col1"),
            _ => panic!("expected singular"),
        }
    }
}
