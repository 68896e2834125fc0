//! Sparse multivariate polynomials over `Q(r)` in graded-lex order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use smallvec::SmallVec;

use super::rpoly::RPoly;
use super::scalar::ParamScalar;
use crate::error::{Error, Result};

/// Exponent vector. Ordered graded-lex with `z1 > z2 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub SmallVec<[u16; 8]>);

impl Mono {
    pub fn zero(n: usize) -> Self {
        Mono(SmallVec::from_elem(0, n))
    }

    pub fn from_slice(e: &[u16]) -> Self {
        Mono(SmallVec::from_slice(e))
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut m = Self::zero(n);
        m.0[i] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &Mono) -> Option<Mono> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&o.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Mono(out))
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Polynomial in `z_1..z_n` with coefficients in `Q(r)`; no zero coefficients stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Mono, ParamScalar>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: ParamScalar) -> Self {
        Self::monomial(n, Mono::zero(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, ParamScalar::one())
    }

    /// The variable `z_{i+1}` (0-based index `i`).
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(n, Mono::unit(n, i), ParamScalar::one())
    }

    pub fn monomial(n: usize, e: Mono, c: ParamScalar) -> Self {
        assert_eq!(e.0.len(), n, "exponent length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MultiPoly { n, terms }
    }

    pub fn from_terms(n: usize, it: impl IntoIterator<Item = (Mono, ParamScalar)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &ParamScalar)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, e: &Mono) -> ParamScalar {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn coeff_of(&self, e: &[u16]) -> ParamScalar {
        self.coeff(&Mono::from_slice(e))
    }

    pub fn leading(&self) -> Option<(&Mono, &ParamScalar)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(e, _)| e.degree())
    }

    /// Total degree in the first `m` variables.
    pub fn degree_prefix(&self, m: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.0[..m].iter().map(|&x| x as u32).sum()).max()
    }

    pub fn add_term(&mut self, e: Mono, c: &ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    fn check_n(&self, o: &MultiPoly) {
        assert_eq!(self.n, o.n, "variable count mismatch");
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        self.check_n(o);
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c);
        }
        p
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, k: &ParamScalar) -> MultiPoly {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        self.map_coeffs(|c| c * k)
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamScalar) -> ParamScalar) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let v = f(c);
                (!v.is_zero()).then(|| (e.clone(), v))
            })
            .collect();
        MultiPoly { n: self.n, terms }
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        self.check_n(o);
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.n);
        }
        let mut acc: HashMap<Mono, ParamScalar> = HashMap::with_capacity(self.len() * o.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let v = ca * cb;
                acc.entry(a.mul(b)).and_modify(|x| *x += &v).or_insert(v);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        MultiPoly { n: self.n, terms }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Value at a point of `Q(r)^n`.
    pub fn eval(&self, pt: &[ParamScalar]) -> Result<ParamScalar> {
        if pt.len() != self.n {
            return Err(Error::LengthMismatch(self.n, pt.len()));
        }
        let maxdeg: Vec<usize> = (0..self.n)
            .map(|i| self.terms.keys().map(|e| e.0[i] as usize).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<ParamScalar>> = pt
            .iter()
            .zip(&maxdeg)
            .map(|(x, &d)| {
                let mut v = Vec::with_capacity(d + 1);
                v.push(ParamScalar::one());
                for k in 1..=d {
                    let next = &v[k - 1] * x;
                    v.push(next);
                }
                v
            })
            .collect();
        // Clearing denominators first keeps most products on the fast path.
        let (cleared, l) = self.clear_denominators();
        let mut acc = ParamScalar::zero();
        for (e, c) in &cleared.terms {
            let mut t = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    t *= &powers[i][k as usize];
                    if t.is_zero() {
                        break;
                    }
                }
            }
            acc += &t;
        }
        acc.checked_div(&ParamScalar::from_poly(l))
    }

    pub fn eval_ints(&self, pt: &[i64]) -> Result<ParamScalar> {
        let v: Vec<ParamScalar> = pt.iter().map(|&x| ParamScalar::int(x)).collect();
        self.eval(&v)
    }

    /// Returns `(F, L)` with `F = L f`, `L` a primitive polynomial in `r`, and
    /// every coefficient of `F` lying in `Q[r]`.
    pub fn clear_denominators(&self) -> (MultiPoly, RPoly) {
        let mut l = RPoly::one();
        for c in self.terms.values() {
            if !c.den().is_constant() {
                l = ParamScalar::lcm_den(&l, c.den());
            }
        }
        if l.is_one() {
            return (self.clone(), l);
        }
        let lp = ParamScalar::from_poly(l.clone());
        (self.scale(&lp), l)
    }

    /// `f(z + c)`.
    pub fn translate(&self, c: &[ParamScalar]) -> MultiPoly {
        assert_eq!(c.len(), self.n);
        let mut cur = self.clone();
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let maxd = cur.terms.keys().map(|e| e.0[i]).max().unwrap_or(0) as usize;
            let mut cpow = vec![ParamScalar::one()];
            for k in 1..=maxd {
                let next = &cpow[k - 1] * ci;
                cpow.push(next);
            }
            let binom = pascal(maxd);
            let mut acc: HashMap<Mono, ParamScalar> = HashMap::new();
            for (e, coef) in &cur.terms {
                let d = e.0[i] as usize;
                for k in 0..=d {
                    let mut e2 = e.clone();
                    e2.0[i] = k as u16;
                    let v = coef * &(&cpow[d - k] * &ParamScalar::from_bigint(binom[d][k].clone()));
                    acc.entry(e2).and_modify(|x| *x += &v).or_insert(v);
                }
            }
            cur.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        cur
    }

    /// `f(z - v)` for an integer vector `v`.
    pub fn shift(&self, v: &[i64]) -> Result<MultiPoly> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch(self.n, v.len()));
        }
        let c: Vec<ParamScalar> = v.iter().map(|&x| ParamScalar::int(-x)).collect();
        Ok(self.translate(&c))
    }

    /// `f(-z)`.
    pub fn negate_vars(&self) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), if e.degree() % 2 == 1 { -c } else { c.clone() }))
            .collect();
        MultiPoly { n: self.n, terms }
    }

    /// Exchanges `z_i` and `z_j` (0-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2.0.swap(i, j);
                (e2, c.clone())
            })
            .collect();
        MultiPoly { n: self.n, terms }
    }

    /// Invariance under every transposition `z_i <-> z_{i+2}`.
    pub fn is_semisymmetric(&self) -> bool {
        (0..self.n.saturating_sub(2)).all(|i| self.swap_vars(i, i + 2) == *self)
    }

    pub fn homogeneous_component(&self, d: u32) -> MultiPoly {
        let terms = self.terms.iter().filter(|(e, _)| e.degree() == d).map(|(e, c)| (e.clone(), c.clone())).collect();
        MultiPoly { n: self.n, terms }
    }

    pub fn top_component(&self) -> MultiPoly {
        match self.total_degree() {
            Some(d) => self.homogeneous_component(d),
            None => self.clone(),
        }
    }

    /// `f(z_1, .., z_{n-1}, 0)` as a polynomial in `n-1` variables.
    pub fn set_last_zero(&self) -> MultiPoly {
        let m = self.n - 1;
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.0[m] == 0)
            .map(|(e, c)| (Mono::from_slice(&e.0[..m]), c.clone()))
            .collect();
        MultiPoly { n: m, terms }
    }

    /// Re-homes the variables: variable `i` of `self` becomes variable `pos[i]` of the result.
    pub fn embed(&self, n: usize, pos: &[usize]) -> MultiPoly {
        assert_eq!(pos.len(), self.n);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut m = Mono::zero(n);
                for (i, &p) in pos.iter().enumerate() {
                    m.0[p] = e.0[i];
                }
                (m, c.clone())
            })
            .collect();
        MultiPoly { n, terms }
    }

    /// Exact quotient by `z_i - z_j` (0-based).
    pub fn div_by_difference(&self, i: usize, j: usize) -> Result<MultiPoly> {
        // Write f = sum_k A_k z_i^k; then Q_{k-1} = A_k + z_j Q_k from the top down.
        let mut groups: BTreeMap<u16, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e.0[i];
            let mut e2 = e.clone();
            e2.0[i] = 0;
            groups.entry(k).or_insert_with(|| MultiPoly::zero(self.n)).add_term(e2, c);
        }
        let top = match groups.keys().next_back() {
            Some(&k) => k,
            None => return Ok(MultiPoly::zero(self.n)),
        };
        let zj = Mono::unit(self.n, j);
        let mut quotient = MultiPoly::zero(self.n);
        let mut q = MultiPoly::zero(self.n);
        for k in (1..=top).rev() {
            let a = groups.remove(&k).unwrap_or_else(|| MultiPoly::zero(self.n));
            q = a.add(&q.mul_mono(&zj));
            for (e, c) in &q.terms {
                let mut e2 = e.clone();
                e2.0[i] = k - 1;
                quotient.terms.insert(e2, c.clone());
            }
        }
        let a0 = groups.remove(&0).unwrap_or_else(|| MultiPoly::zero(self.n));
        let rem = a0.add(&q.mul_mono(&zj));
        if !rem.is_zero() {
            return Err(Error::NonZeroRemainder(Box::new(rem)));
        }
        Ok(quotient)
    }

    pub fn mul_mono(&self, m: &Mono) -> MultiPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.mul(m), c.clone())).collect();
        MultiPoly { n: self.n, terms }
    }

    /// `∂f/∂z_i` (0-based).
    pub fn partial(&self, i: usize) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.0[i] > 0)
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2.0[i] -= 1;
                (e2, c.scale_int(e.0[i] as i64))
            })
            .collect();
        MultiPoly { n: self.n, terms }
    }

    /// Exact quotient `self / g` by graded-lex leading-term division.
    pub fn div_exact(&self, g: &MultiPoly) -> Result<MultiPoly> {
        self.check_n(g);
        let (gl, gc) = match g.leading() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(Error::DivisionByZero("MultiPoly::div_exact")),
        };
        let ginv = gc.inv()?;
        let mut rem = self.clone();
        let mut q = MultiPoly::zero(self.n);
        while let Some((e, c)) = rem.leading() {
            let m = match e.div(&gl) {
                Some(m) => m,
                None => return Err(Error::NonZeroRemainder(Box::new(rem))),
            };
            let k = c * &ginv;
            rem = rem.sub(&g.mul_mono(&m).scale(&k));
            q.add_term(m, &k);
        }
        Ok(q)
    }

    /// Substitutes a rational value for `r` in every coefficient.
    pub fn specialize_r(&self, r: &num_rational::BigRational) -> Result<MultiPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let v = ParamScalar::from_rational(&c.specialize(r)?);
            if !v.is_zero() {
                terms.insert(e.clone(), v);
            }
        }
        Ok(MultiPoly { n: self.n, terms })
    }

    /// Human-readable rendering using `var` as the variable stem.
    pub fn to_string_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms().enumerate() {
            let mono: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { format!("{var}{}", i + 1) } else { format!("{var}{}^{x}", i + 1) })
                .collect();
            let neg = c.num().lc() < 0.into();
            let body = if neg { (-c).to_string() } else { c.to_string() };
            if k > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let needs_paren = body[1..].contains(['+', '-']) && !body.starts_with('(') && (neg || !mono.is_empty());
            let body = if needs_paren { format!("({body})") } else { body };
            if mono.is_empty() {
                s.push_str(&body);
            } else if body == "1" {
                s.push_str(&mono.join("*"));
            } else {
                s.push_str(&format!("{body}*{}", mono.join("*")));
            }
        }
        s
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("z"))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[n={}]({self})", self.n)
    }
}

fn pascal(d: usize) -> Vec<Vec<num_bigint::BigInt>> {
    let mut rows: Vec<Vec<num_bigint::BigInt>> = vec![vec![1.into()]];
    for k in 1..=d {
        let prev = &rows[k - 1];
        let mut row = vec![num_bigint::BigInt::from(1); k + 1];
        for j in 1..k {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn graded_lex_order() {
        let a = Mono::from_slice(&[1, 0, 0]);
        let b = Mono::from_slice(&[0, 1, 1]);
        let c = Mono::from_slice(&[0, 2, 0]);
        assert!(b > a);
        assert!(c > b);
        let p = z(3, 0).add(&z(3, 1).mul(&z(3, 2)));
        assert_eq!(p.leading().unwrap().0, &b);
    }

    #[test]
    fn shift_by_unit_vector() {
        // (z1 - 1)^2 = z1^2 - 2 z1 + 1
        let p = z(2, 0).pow(2).shift(&[1, 0]).unwrap();
        assert_eq!(p.coeff_of(&[2, 0]), ParamScalar::int(1));
        assert_eq!(p.coeff_of(&[1, 0]), ParamScalar::int(-2));
        assert_eq!(p.coeff_of(&[0, 0]), ParamScalar::int(1));
        assert!(z(2, 0).shift(&[1, 0, 0]).is_err());
    }

    #[test]
    fn division_by_difference() {
        let n = 3;
        let f = z(n, 0).pow(3).sub(&z(n, 2).pow(3));
        let q = f.div_by_difference(0, 2).unwrap();
        assert_eq!(q.mul(&z(n, 0).sub(&z(n, 2))), f);
        let g = z(n, 0).pow(2).add(&z(n, 1));
        assert!(matches!(g.div_by_difference(0, 2), Err(Error::NonZeroRemainder(_))));
        assert!(matches!(g.div_exact(&z(n, 2)), Err(Error::NonZeroRemainder(_))));
    }

    #[test]
    fn evaluation_with_symbolic_coefficients() {
        let r = ParamScalar::r();
        let half = ParamScalar::one().checked_div(&ParamScalar::linear(1, 2)).unwrap();
        let f = z(2, 0).scale(&half).add(&MultiPoly::constant(2, r.clone()));
        let v = f.eval(&[ParamScalar::linear(1, 2), ParamScalar::int(7)]).unwrap();
        assert_eq!(v, &ParamScalar::one() + &r);
        assert!(f.eval(&[ParamScalar::one()]).is_err());
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u16..3, n), -4i64..5, -2i64..3), 0..6).prop_map(move |ts| {
            MultiPoly::from_terms(
                n,
                ts.into_iter().map(|(e, a, b)| (Mono::from_slice(&e), ParamScalar::linear(a, b))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.sub(&a), MultiPoly::zero(3));
        }

        #[test]
        fn shift_is_a_group_action(a in arb_poly(3), u in prop::collection::vec(-2i64..3, 3), v in prop::collection::vec(-2i64..3, 3)) {
            let uv: Vec<i64> = u.iter().zip(&v).map(|(x, y)| x + y).collect();
            prop_assert_eq!(a.shift(&u).unwrap().shift(&v).unwrap(), a.shift(&uv).unwrap());
        }

        #[test]
        fn eval_is_a_homomorphism(a in arb_poly(3), b in arb_poly(3), pt in prop::collection::vec(-3i64..4, 3)) {
            let x = a.eval_ints(&pt).unwrap();
            let y = b.eval_ints(&pt).unwrap();
            prop_assert_eq!(a.mul(&b).eval_ints(&pt).unwrap(), &x * &y);
            prop_assert_eq!(a.add(&b).eval_ints(&pt).unwrap(), &x + &y);
        }

        #[test]
        fn exact_division_roundtrip(a in arb_poly(3), b in arb_poly(3)) {
            prop_assume!(!b.is_zero());
            let p = a.mul(&b);
            prop_assert_eq!(p.div_exact(&b).unwrap(), a.clone());
            let d = z(3, 0).sub(&z(3, 2));
            prop_assert_eq!(a.mul(&d).div_by_difference(0, 2).unwrap(), a);
        }
    }
}
