//! Dense univariate polynomials in the parameter `r` with integer coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in `r`, coefficients stored in ascending degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RPoly {
    c: Vec<BigInt>,
}

impl RPoly {
    pub fn zero() -> Self {
        RPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The indeterminate `r`.
    pub fn r() -> Self {
        RPoly { c: vec![BigInt::zero(), BigInt::one()] }
    }

    pub fn constant(v: BigInt) -> Self {
        Self::from_coeffs(vec![v])
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        Self::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn from_coeffs(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        RPoly { c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.c.first().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, o: &RPoly) -> RPoly {
        let (long, short) = if self.c.len() >= o.c.len() { (self, o) } else { (o, self) };
        let mut c = long.c.clone();
        for (a, b) in c.iter_mut().zip(&short.c) {
            *a += b;
        }
        Self::from_coeffs(c)
    }

    pub fn sub(&self, o: &RPoly) -> RPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RPoly {
        RPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, o: &RPoly) -> RPoly {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.c.len() == 1 {
            return self.scale(&o.c[0]);
        }
        if self.c.len() == 1 {
            return o.scale(&self.c[0]);
        }
        let mut c = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }

    pub fn scale(&self, k: &BigInt) -> RPoly {
        if k.is_zero() {
            return Self::zero();
        }
        RPoly { c: self.c.iter().map(|x| x * k).collect() }
    }

    pub fn pow(&self, e: u32) -> RPoly {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for x in &self.c {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `k`, which must divide all of them.
    pub fn div_scalar_exact(&self, k: &BigInt) -> RPoly {
        if k.is_one() {
            return self.clone();
        }
        RPoly { c: self.c.iter().map(|x| x / k).collect() }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> RPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        self.div_scalar_exact(&g)
    }

    /// Exact quotient in `Z[r]`, or `None` if `d` does not divide `self` there.
    pub fn div_exact(&self, d: &RPoly) -> Option<RPoly> {
        if d.is_zero() {
            return None;
        }
        if d.c.len() == 1 {
            let k = &d.c[0];
            if self.c.iter().all(|x| (x % k).is_zero()) {
                return Some(self.div_scalar_exact(k));
            }
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.c.len() < d.c.len() {
            return None;
        }
        let mut rem = self.c.clone();
        let dl = d.c.len();
        let lc = d.lc();
        let mut q = vec![BigInt::zero(); rem.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let top = &rem[k + dl - 1];
            if top.is_zero() {
                continue;
            }
            let (qk, rr) = top.div_rem(&lc);
            if !rr.is_zero() {
                return None;
            }
            for (j, dj) in d.c.iter().enumerate() {
                rem[k + j] -= &qk * dj;
            }
            q[k] = qk;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(q))
    }

    /// Pseudo-remainder of `self` by `d`.
    fn pseudo_rem(&self, d: &RPoly) -> RPoly {
        let mut rem = self.c.clone();
        let dl = d.c.len();
        let lc = d.lc();
        while rem.len() >= dl {
            let top = rem.last().cloned().unwrap();
            let shift = rem.len() - dl;
            for x in rem.iter_mut() {
                *x *= &lc;
            }
            for (j, dj) in d.c.iter().enumerate() {
                rem[shift + j] -= &top * dj;
            }
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        Self::from_coeffs(rem)
    }

    /// Gcd over `Q[r]`, returned primitive with positive leading coefficient.
    pub fn gcd(a: &RPoly, b: &RPoly) -> RPoly {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        if a.is_constant() || b.is_constant() {
            return Self::one();
        }
        let (mut p, mut q) = if a.c.len() >= b.c.len() {
            (a.primitive(), b.primitive())
        } else {
            (b.primitive(), a.primitive())
        };
        loop {
            let rem = p.pseudo_rem(&q);
            if rem.is_zero() {
                return q;
            }
            if rem.is_constant() {
                return Self::one();
            }
            p = q;
            q = rem.primitive();
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn cmp_lex(&self, o: &RPoly) -> Ordering {
        self.c.len().cmp(&o.c.len()).then_with(|| self.c.iter().rev().cmp(o.c.iter().rev()))
    }
}

impl fmt::Display for RPoly {
    /// Descending powers, e.g. `2r^2-r+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    write!(f, "r")?;
                    if d > 1 {
                        write!(f, "^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> RPoly {
        RPoly::from_i64s(v)
    }

    #[test]
    fn gcd_of_shared_linear_factor() {
        // (r+1)(2r+1) and (r+1)(r-3)
        let a = p(&[1, 1]).mul(&p(&[1, 2]));
        let b = p(&[1, 1]).mul(&p(&[-3, 1])).scale(&BigInt::from(6));
        assert_eq!(RPoly::gcd(&a, &b), p(&[1, 1]));
        assert_eq!(RPoly::gcd(&p(&[1, 2]), &p(&[2, 1])), RPoly::one());
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = p(&[1, 3, 2]);
        assert_eq!(a.div_exact(&p(&[1, 2])), Some(p(&[1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 3])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[2])), Some(p(&[1, 2])));
    }

    #[test]
    fn display_is_descending() {
        assert_eq!(p(&[1, -1, 2]).to_string(), "2r^2-r+1");
        assert_eq!(p(&[0, 1]).to_string(), "r");
    }
}
