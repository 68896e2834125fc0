//! The matrices `𝔛(t)`, `𝔜(t)` of difference operators and the expansion of
//! their determinants as `Σ_S ĉ_S(z) T_S`.

use std::collections::HashMap;

use super::Kind;
use crate::combinatorics::{n_even, n_odd};
use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, ParamScalar};

pub const MAX_N: usize = 7;

/// One entry `plain + shifted·T`, where `T` shifts the variable of its row.
#[derive(Clone, Debug)]
pub struct Entry {
    pub plain: MultiPoly,
    pub shifted: MultiPoly,
}

#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    pub kind: Kind,
    pub n: usize,
    pub t: ParamScalar,
    /// `row_var[k]` is the 0-based variable of row `k`: first `x_i = z_{2i-1}`, then `y_i = z_{2i}`.
    pub row_var: Vec<usize>,
    pub entries: Vec<Vec<Entry>>,
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::OutOfRange(format!("difference operators are built for 1 <= n <= {MAX_N}, got {n}")));
    }
    Ok(())
}

impl OperatorMatrix {
    pub fn new(kind: Kind, n: usize, t: &ParamScalar, r: &ParamScalar) -> Result<Self> {
        check_n(n)?;
        let (no, ne) = (n_odd(n) as u32, n_even(n) as u32);
        let z = |v: usize| MultiPoly::var(n, v);
        let c = |s: &ParamScalar| MultiPoly::constant(n, s.clone());
        let zero = MultiPoly::zero(n);
        let mut row_var: Vec<usize> = (0..no as usize).map(|i| 2 * i).collect();
        row_var.extend((0..ne as usize).map(|i| 2 * i + 1));
        let mut entries = Vec::with_capacity(n);
        for (k, &v) in row_var.iter().enumerate() {
            let is_x = k < no as usize;
            let w = z(v);
            let w_r = w.add(&c(r));
            let w_t = w.add(&c(t));
            let mut row = Vec::with_capacity(n);
            for col in 0..n {
                let left = col < no as usize;
                // 1-based column index within its block
                let j = if left { col as u32 + 1 } else { col as u32 + 1 - no };
                let e = match (kind, is_x, left) {
                    (Kind::X, true, true) => Entry { plain: w_t.mul(&w_r.pow(no - j)), shifted: w.pow(no + 1 - j).neg() },
                    (Kind::X, true, false) => Entry { plain: zero.clone(), shifted: w.pow(no - j).neg() },
                    (Kind::X, false, true) => Entry { plain: w_r.pow(ne + 1 - j), shifted: w.pow(ne + 1 - j).neg() },
                    (Kind::X, false, false) => Entry { plain: w_r.pow(ne - j), shifted: zero.clone() },
                    (Kind::Y, true, true) => Entry { plain: w_r.pow(no - j), shifted: zero.clone() },
                    (Kind::Y, true, false) => Entry { plain: w_r.pow(no - j), shifted: w.pow(no - j).neg() },
                    (Kind::Y, false, true) => Entry { plain: zero.clone(), shifted: w.pow(ne + 1 - j).neg() },
                    (Kind::Y, false, false) => {
                        Entry { plain: w_t.mul(&w_r.pow(ne - j)), shifted: w.pow(ne + 1 - j).neg() }
                    }
                };
                row.push(e);
            }
            entries.push(row);
        }
        Ok(OperatorMatrix { kind, n, t: t.clone(), row_var, entries })
    }

    /// `det = Σ_S ĉ_S T_S`, keyed by the bitmask of shifted variables.
    /// Rows act on distinct variables, so the determinant is multilinear in
    /// the split `plain + shifted·T` of each row; cofactor expansion along
    /// rows with minors memoized by their column set does every `S` at once.
    pub fn expand(&self) -> HashMap<u32, MultiPoly> {
        let mut memo: HashMap<u32, HashMap<u32, MultiPoly>> = HashMap::new();
        let full = (1u32 << self.n) - 1;
        self.minor(full, &mut memo)
    }

    fn minor(&self, cols: u32, memo: &mut HashMap<u32, HashMap<u32, MultiPoly>>) -> HashMap<u32, MultiPoly> {
        if cols == 0 {
            return HashMap::from([(0, MultiPoly::one(self.n))]);
        }
        if let Some(m) = memo.get(&cols) {
            return m.clone();
        }
        let k = self.n - cols.count_ones() as usize;
        let bit = 1u32 << self.row_var[k];
        let mut out: HashMap<u32, MultiPoly> = HashMap::new();
        let mut pos = 0;
        for j in 0..self.n {
            if cols & (1 << j) == 0 {
                continue;
            }
            let sign_neg = pos % 2 == 1;
            pos += 1;
            let e = &self.entries[k][j];
            if e.plain.is_zero() && e.shifted.is_zero() {
                continue;
            }
            let sub = self.minor(cols & !(1 << j), memo);
            for (mask, p) in &sub {
                for (factor, m) in [(&e.plain, *mask), (&e.shifted, *mask | bit)] {
                    if factor.is_zero() {
                        continue;
                    }
                    let mut term = factor.mul(p);
                    if sign_neg {
                        term = term.neg();
                    }
                    let slot = out.entry(m).or_insert_with(|| MultiPoly::zero(self.n));
                    *slot = slot.add(&term);
                }
            }
        }
        out.retain(|_, p| !p.is_zero());
        memo.insert(cols, out.clone());
        out
    }
}

/// `φ(z) = ∏_{i<j, j-i even} (z_i - z_j)`.
pub fn vandermonde(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::one(n);
    for (i, j) in vandermonde_pairs(n) {
        acc = acc.mul(&MultiPoly::var(n, i).sub(&MultiPoly::var(n, j)));
    }
    acc
}

/// 0-based pairs `(i, j)`, `i < j`, `j - i` even.
pub fn vandermonde_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..n {
        for j in (i + 2..n).step_by(2) {
            v.push((i, j));
        }
    }
    v
}

pub fn divide_by_vandermonde(f: &MultiPoly) -> Result<MultiPoly> {
    let mut cur = f.clone();
    for (i, j) in vandermonde_pairs(f.nvars()) {
        cur = cur.div_by_difference(i, j)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_variable_x() {
        let t = ParamScalar::int(3);
        let m = OperatorMatrix::new(Kind::X, 1, &t, &ParamScalar::r()).unwrap();
        let ex = m.expand();
        let z = MultiPoly::var(1, 0);
        assert_eq!(ex[&0], z.add(&MultiPoly::constant(1, t)));
        assert_eq!(ex[&1], z.neg());
        assert_eq!(ex.len(), 2);
    }

    #[test]
    fn expansion_matches_permutation_sum() {
        // Leibniz over permutations as an independent check, n = 3 and 4.
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k - 1);
                    out.push(q);
                }
            }
            out
        }
        fn sign(p: &[usize]) -> bool {
            let mut inv = 0;
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            inv % 2 == 1
        }
        for n in 3..=4 {
            for kind in [Kind::X, Kind::Y] {
                let m = OperatorMatrix::new(kind, n, &ParamScalar::int(2), &ParamScalar::r()).unwrap();
                let got = m.expand();
                let mut want: HashMap<u32, MultiPoly> = HashMap::new();
                for p in perms(n) {
                    let mut terms: Vec<(u32, MultiPoly)> = vec![(0, MultiPoly::one(n))];
                    for (k, &j) in p.iter().enumerate() {
                        let e = &m.entries[k][j];
                        let bit = 1u32 << m.row_var[k];
                        terms = terms
                            .into_iter()
                            .flat_map(|(mask, q)| [(mask, q.mul(&e.plain)), (mask | bit, q.mul(&e.shifted))])
                            .filter(|(_, q)| !q.is_zero())
                            .collect();
                    }
                    for (mask, q) in terms {
                        let q = if sign(&p) { q.neg() } else { q };
                        let slot = want.entry(mask).or_insert_with(|| MultiPoly::zero(n));
                        *slot = slot.add(&q);
                    }
                }
                want.retain(|_, q| !q.is_zero());
                assert_eq!(got, want, "n={n} {kind:?}");
            }
        }
    }

    #[test]
    fn vandermonde_division_roundtrip() {
        let n = 5;
        let phi = vandermonde(n);
        let g = MultiPoly::var(n, 1).add(&MultiPoly::one(n));
        assert_eq!(divide_by_vandermonde(&phi.mul(&g)).unwrap(), g);
        assert!(divide_by_vandermonde(&g).is_err());
    }

    #[test]
    fn size_limit() {
        assert!(OperatorMatrix::new(Kind::X, 8, &ParamScalar::zero(), &ParamScalar::r()).is_err());
    }
}
