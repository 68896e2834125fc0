//! Partitions with at most `n` parts, the bracket map and degree functions.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition padded with zeros to exactly `n` parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(mut parts: Vec<i64>, n: usize) -> Result<Self> {
        while parts.len() > n && parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.len() > n {
            return Err(Error::InvalidPartition(format!("{parts:?} has more than {n} parts")));
        }
        parts.resize(n, 0);
        if parts.iter().any(|&x| x < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn zero(n: usize) -> Self {
        Partition(vec![0; n])
    }

    /// `(1^m)` with `n` parts.
    pub fn column(m: usize, n: usize) -> Result<Self> {
        Self::new(vec![1; m], n)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&x| x > 0).count()
    }

    /// `λ_j'`, the length of column `j` (1-based).
    pub fn conjugate_part(&self, j: i64) -> i64 {
        self.0.iter().filter(|&&x| x >= j).count() as i64
    }

    /// Boxes `(i, j)`, 1-based, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &l)| (1..=l).map(move |j| (i as i64 + 1, j)))
    }

    pub fn contains_box(&self, i: i64, j: i64) -> bool {
        i >= 1 && (i as usize) <= self.0.len() && j >= 1 && self.0[i as usize - 1] >= j
    }

    pub fn arm(&self, i: i64, j: i64) -> i64 {
        self.0[i as usize - 1] - j
    }

    pub fn leg(&self, i: i64, j: i64) -> i64 {
        self.conjugate_part(j) - i
    }

    /// Drops one from every part; requires `λ_n >= 1`.
    pub fn minus_delta(&self) -> Option<Partition> {
        if self.0.last().copied().unwrap_or(0) < 1 {
            return None;
        }
        Some(Partition(self.0.iter().map(|x| x - 1).collect()))
    }

    /// The first `n-1` parts, valid when `λ_n = 0`.
    pub fn drop_last(&self) -> Option<Partition> {
        if self.0.last() != Some(&0) {
            return None;
        }
        Some(Partition(self.0[..self.0.len() - 1].to_vec()))
    }

    /// `λ + v`, if the result is still a partition.
    pub fn add_vec(&self, v: &[i64]) -> Option<Partition> {
        let w: Vec<i64> = self.0.iter().zip(v).map(|(a, b)| a + b).collect();
        Partition::new(w, self.n()).ok()
    }
}

impl Deref for Partition {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `3,1,0` or `(3,1,0)` into a vector of integers.
pub fn parse_int_vector(s: &str) -> Result<Vec<i64>> {
    let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| i64::from_str(x.trim()).map_err(|_| Error::Parse(format!("bad integer list `{s}`"))))
        .collect()
}

pub fn n_odd(n: usize) -> usize {
    n.div_ceil(2)
}

pub fn n_even(n: usize) -> usize {
    n / 2
}

/// Entries at odd positions `1, 3, 5, ...` (1-based).
pub fn odd_part(v: &[i64]) -> Vec<i64> {
    v.iter().step_by(2).copied().collect()
}

/// Entries at even positions `2, 4, ...` (1-based).
pub fn even_part(v: &[i64]) -> Vec<i64> {
    v.iter().skip(1).step_by(2).copied().collect()
}

pub fn size(v: &[i64]) -> i64 {
    v.iter().sum()
}

pub fn odd_degree(v: &[i64]) -> i64 {
    odd_part(v).iter().sum()
}

pub fn even_degree(v: &[i64]) -> i64 {
    even_part(v).iter().sum()
}

/// `[v]_1 = v_1 - v_2 + v_3 - ...`.
pub fn bracket1(v: &[i64]) -> i64 {
    odd_degree(v) - even_degree(v)
}

/// `[λ]_m = λ_m - λ_{m+1} + λ_{m+2} - ...` for every `m`.
pub fn bracket(v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; v.len()];
    let mut acc = 0;
    for i in (0..v.len()).rev() {
        acc = v[i] - acc;
        out[i] = acc;
    }
    out
}

/// Inverse of the bracket map: `λ_i = ν_i + ν_{i+1}`.
pub fn bracket_inverse(nu: &[i64]) -> Result<Partition> {
    let n = nu.len();
    let lam: Vec<i64> = (0..n).map(|i| nu[i] + if i + 1 < n { nu[i + 1] } else { 0 }).collect();
    Partition::new(lam, n)
}

/// All of `Λ_n(d) = {λ : |λ|_odd <= d}` in canonical order: by `|λ|_odd`,
/// then `|λ|`, then lexicographically decreasing.
pub fn enumerate_lambda(n: usize, d: i64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(i: usize, n: usize, d: i64, odd: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if i == n {
            out.push(Partition(cur.clone()));
            return;
        }
        let cap = if i == 0 { d } else { cur[i - 1] };
        for v in 0..=cap {
            let odd2 = if i % 2 == 0 { odd + v } else { odd };
            if odd2 > d {
                break;
            }
            cur[i] = v;
            rec(i + 1, n, d, odd2, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        return vec![Partition(Vec::new())];
    }
    rec(0, n, d, 0, &mut cur, &mut out);
    sort_canonical(&mut out);
    out
}

pub fn sort_canonical(v: &mut [Partition]) {
    v.sort_by(|a, b| {
        odd_degree(a)
            .cmp(&odd_degree(b))
            .then(size(a).cmp(&size(b)))
            .then_with(|| b.0.cmp(&a.0))
    });
}

/// Partitions with `|λ_odd| = a`, `|λ_even| = b`.
pub fn enumerate_bidegree(n: usize, a: i64, b: i64) -> Vec<Partition> {
    enumerate_lambda(n, a).into_iter().filter(|p| odd_degree(p) == a && even_degree(p) == b).collect()
}

/// Subsets of `{1..n}` (as sorted 1-based index lists) in a fixed order: by size, then lexicographic.
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..(1u32 << n))
        .map(|mask| (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect())
        .collect();
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn count_odd(set: &[usize]) -> usize {
    set.iter().filter(|&&i| i % 2 == 1).count()
}

pub fn count_even(set: &[usize]) -> usize {
    set.iter().filter(|&&i| i % 2 == 0).count()
}

/// `P_odd`: subsets with `|I|_o = |I|_e` or `|I|_o = |I|_e + 1`.
pub fn in_p_odd(set: &[usize]) -> bool {
    let (o, e) = (count_odd(set), count_even(set));
    o == e || o == e + 1
}

/// `P_even`: subsets with `|I|_o = |I|_e`.
pub fn in_p_even(set: &[usize]) -> bool {
    count_odd(set) == count_even(set)
}

/// Indicator vector `ε_I`.
pub fn indicator(n: usize, set: &[usize]) -> Vec<i64> {
    let mut v = vec![0; n];
    for &i in set {
        v[i - 1] = 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2], 3).is_err());
        assert!(Partition::new(vec![1, 1, 1, 1], 3).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0], 2).unwrap().parts(), &[2, 1]);
        assert!(Partition::new(vec![1, -1], 2).is_err());
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(&[3, 1, 0]), vec![2, 1, 0]);
        assert_eq!(bracket(&[2, 2, 1, 1]), vec![0, 2, 0, 1]);
        assert_eq!(bracket_inverse(&[2, 1, 0]).unwrap().parts(), &[3, 1, 0]);
        assert!(bracket_inverse(&[0, 1, 1]).is_err());
        assert_eq!(bracket1(&[3, 1, 2]), 4);
    }

    #[test]
    fn lambda_sizes_match_counting_oracle() {
        // Counted independently by brute force over boxes [0, d]^n.
        let expected: [(usize, [usize; 7]); 6] = [
            (1, [1, 2, 3, 4, 5, 6, 7]),
            (2, [1, 3, 6, 10, 15, 21, 28]),
            (3, [1, 3, 7, 13, 22, 34, 50]),
            (4, [1, 3, 8, 16, 30, 50, 80]),
            (5, [1, 3, 8, 17, 33, 58, 97]),
            (6, [1, 3, 8, 18, 36, 66, 115]),
        ];
        for (n, row) in expected {
            for (d, &cnt) in row.iter().enumerate() {
                assert_eq!(enumerate_lambda(n, d as i64).len(), cnt, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn canonical_order_example() {
        let v = enumerate_lambda(2, 1);
        let got: Vec<Vec<i64>> = v.into_iter().map(Partition::into_vec).collect();
        assert_eq!(got, vec![vec![0, 0], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn subset_classes() {
        assert!(in_p_odd(&[1]));
        assert!(in_p_odd(&[1, 2]));
        assert!(!in_p_odd(&[2]));
        assert!(in_p_even(&[2, 3]));
        assert!(!in_p_even(&[1]));
        assert_eq!(subsets(3).len(), 8);
    }

    proptest! {
        #[test]
        fn bracket_roundtrip(v in prop::collection::vec(0i64..5, 1..7)) {
            let mut v = v;
            v.sort_unstable_by(|a, b| b.cmp(a));
            let n = v.len();
            let p = Partition::new(v.clone(), n).unwrap();
            let b = bracket(&p);
            prop_assert_eq!(bracket_inverse(&b).unwrap(), p.clone());
            prop_assert_eq!(b[0], bracket1(&p));
            prop_assert!(b.iter().all(|&x| x >= 0));
        }
    }
}
