//! Elements of `Q(r)` kept in a canonical reduced form.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rpoly::RPoly;
use crate::error::{Error, Result};

/// A rational function `num/den` in `r`.
///
/// Canonical form: `num` and `den` are coprime in `Q[r]`, the gcd of all their
/// integer coefficients taken together is 1, and `den` has a positive leading
/// coefficient. Zero is `0/1`. Equal values therefore have equal fields.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamScalar {
    num: RPoly,
    den: RPoly,
}

impl Default for ParamScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar { num: RPoly::zero(), den: RPoly::one() }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn r() -> Self {
        ParamScalar { num: RPoly::r(), den: RPoly::one() }
    }

    pub fn int(v: i64) -> Self {
        ParamScalar { num: RPoly::constant(BigInt::from(v)), den: RPoly::one() }
    }

    pub fn from_bigint(v: BigInt) -> Self {
        ParamScalar { num: RPoly::constant(v), den: RPoly::one() }
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(&BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_parts(RPoly::constant(q.numer().clone()), RPoly::constant(q.denom().clone()))
            .expect("nonzero denominator")
    }

    pub fn from_poly(p: RPoly) -> Self {
        ParamScalar { num: p, den: RPoly::one() }
    }

    /// `a + b r`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_poly(RPoly::from_i64s(&[a, b]))
    }

    /// Builds `num/den` and reduces it to canonical form.
    pub fn from_parts(num: RPoly, den: RPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("ParamScalar::from_parts"));
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(mut num: RPoly, mut den: RPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if !num.is_constant() && !den.is_constant() {
            let g = RPoly::gcd(&num, &den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let mut c = num.content().gcd(&den.content());
        if den.lc().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        ParamScalar { num, den }
    }

    pub fn num(&self) -> &RPoly {
        &self.num
    }

    pub fn den(&self) -> &RPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not depend on `r`.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// True when the value lies in `Q[r]`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// True when the value lies in `Z[r]`.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.is_constant() {
            return None;
        }
        Some(BigRational::new(self.num.constant_term(), self.den.constant_term()))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("ParamScalar::inv"));
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero("ParamScalar::div"));
        }
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        ParamScalar { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self * &Self::int(k)
    }

    /// Value at a rational `r`; fails if the denominator vanishes there.
    pub fn specialize(&self, r: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(r);
        if d.is_zero() {
            return Err(Error::Pole(format!("{r}"), format!("{self}")));
        }
        Ok(self.num.eval(r) / d)
    }

    /// Total degree of numerator plus denominator, a rough size measure.
    pub fn weight(&self) -> usize {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }

    /// Least common multiple of the polynomial parts of two denominators.
    pub fn lcm_den(a: &RPoly, b: &RPoly) -> RPoly {
        if a.is_constant() {
            return b.primitive();
        }
        if b.is_constant() {
            return a.primitive();
        }
        let g = RPoly::gcd(a, b);
        a.primitive().mul(&b.primitive().div_exact(&g).expect("gcd divides"))
    }

    fn add_ref(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::normalize(self.num.add(&o.num), self.den.clone());
        }
        if self.den.is_constant() && o.den.is_constant() {
            let a = self.den.constant_term();
            let b = o.den.constant_term();
            let l = a.lcm(&b);
            let num = self.num.scale(&(&l / &a)).add(&o.num.scale(&(&l / &b)));
            return Self::normalize(num, RPoly::constant(l));
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Self::normalize(num, self.den.mul(&o.den))
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_constant() && o.den.is_constant() {
            return Self::normalize(self.num.mul(&o.num), self.den.mul(&o.den));
        }
        // Cross-cancel before multiplying to keep the final gcd cheap.
        let g1 = RPoly::gcd(&self.num, &o.den);
        let g2 = RPoly::gcd(&o.num, &self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), o.den.clone())
        } else {
            (self.num.div_exact(&g1).unwrap(), o.den.div_exact(&g1).unwrap())
        };
        let (n2, d1) = if g2.is_one() {
            (o.num.clone(), self.den.clone())
        } else {
            (o.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        Self::normalize(n1.mul(&n2), d1.mul(&d2))
    }

    fn fmt_poly(p: &RPoly, f: &mut fmt::Formatter<'_>, wrap: bool) -> fmt::Result {
        let compound = p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if wrap && compound {
            write!(f, "({p})")
        } else {
            write!(f, "{p}")
        }
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return Self::fmt_poly(&self.num, f, false);
        }
        Self::fmt_poly(&self.num, f, true)?;
        write!(f, "/")?;
        Self::fmt_poly(&self.den, f, true)
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for ParamScalar {
    fn from(v: i64) -> Self {
        Self::int(v)
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&ParamScalar> for &ParamScalar {
            type Output = ParamScalar;
            fn $m(self, o: &ParamScalar) -> ParamScalar {
                $body(self, o)
            }
        }
        impl $tr<ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, o: ParamScalar) -> ParamScalar {
                $body(&self, &o)
            }
        }
        impl $tr<&ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, o: &ParamScalar) -> ParamScalar {
                $body(&self, o)
            }
        }
        impl $tr<ParamScalar> for &ParamScalar {
            type Output = ParamScalar;
            fn $m(self, o: ParamScalar) -> ParamScalar {
                $body(self, &o)
            }
        }
    };
}

binop!(Add, add, |a: &ParamScalar, b: &ParamScalar| a.add_ref(b));
binop!(Sub, sub, |a: &ParamScalar, b: &ParamScalar| a.add_ref(&-b));
binop!(Mul, mul, |a: &ParamScalar, b: &ParamScalar| a.mul_ref(b));

impl AddAssign<&ParamScalar> for ParamScalar {
    fn add_assign(&mut self, o: &ParamScalar) {
        *self = self.add_ref(o);
    }
}

impl SubAssign<&ParamScalar> for ParamScalar {
    fn sub_assign(&mut self, o: &ParamScalar) {
        *self = self.add_ref(&-o);
    }
}

impl MulAssign<&ParamScalar> for ParamScalar {
    fn mul_assign(&mut self, o: &ParamScalar) {
        *self = self.mul_ref(o);
    }
}

impl std::iter::Sum for ParamScalar {
    fn sum<I: Iterator<Item = ParamScalar>>(iter: I) -> Self {
        iter.fold(ParamScalar::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for ParamScalar {
    fn product<I: Iterator<Item = ParamScalar>>(iter: I) -> Self {
        iter.fold(ParamScalar::one(), |a, b| a * b)
    }
}

/// Rising factorial `[x ↑ k] = x (x+1) ... (x+k-1)`.
pub fn rising(x: &ParamScalar, k: usize) -> ParamScalar {
    (0..k).map(|i| x + &ParamScalar::int(i as i64)).product()
}

/// Generalized binomial coefficient `x (x-1) ... (x-k+1) / k!`.
pub fn binom(x: &ParamScalar, k: usize) -> ParamScalar {
    let top: ParamScalar = (0..k).map(|i| x - &ParamScalar::int(i as i64)).product();
    let fact: BigInt = (1..=k as u64).map(BigInt::from).product();
    top.checked_div(&ParamScalar::from_bigint(fact)).expect("k! is nonzero")
}

/// Parses `p`, `p/q`, or `sym` into a rational parameter value (`None` for symbolic).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    let q: BigInt = q.parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(p, q))
}

pub fn rational_is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lin(a: i64, b: i64) -> ParamScalar {
        ParamScalar::linear(a, b)
    }

    #[test]
    fn canonical_form_is_jointly_normalized() {
        let h = ParamScalar::ratio(1, 2);
        assert_eq!(h.num().coeffs(), &[BigInt::from(1)]);
        assert_eq!(h.den().coeffs(), &[BigInt::from(2)]);
        let x = lin(2, 4).checked_div(&lin(-3, -6)).unwrap();
        assert_eq!(x, ParamScalar::ratio(-2, 3));
        let y = lin(1, 1).checked_div(&lin(2, 4)).unwrap();
        assert_eq!(y.den().coeffs(), &[BigInt::from(2), BigInt::from(4)]);
        assert_eq!(y.num().coeffs(), &[BigInt::from(1), BigInt::from(1)]);
        let z = ParamScalar::from_parts(RPoly::from_i64s(&[3, 3]), RPoly::from_i64s(&[6, 12])).unwrap();
        assert_eq!(z.num().coeffs(), &[BigInt::from(1), BigInt::from(1)]);
        assert_eq!(z.den().coeffs(), &[BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(ParamScalar::from_parts(RPoly::one(), RPoly::zero()).is_err());
        assert!(ParamScalar::one().checked_div(&ParamScalar::zero()).is_err());
    }

    #[test]
    fn specialization_reports_poles() {
        let x = ParamScalar::one().checked_div(&lin(1, 2)).unwrap();
        let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        assert!(x.specialize(&half).is_err());
        assert_eq!(x.specialize(&BigRational::one()).unwrap(), BigRational::new(1.into(), 3.into()));
    }

    #[test]
    fn rising_and_binomial() {
        assert_eq!(rising(&ParamScalar::r(), 2), &ParamScalar::r() * &lin(1, 1));
        assert_eq!(binom(&ParamScalar::int(5), 2), ParamScalar::int(10));
        assert_eq!(binom(&ParamScalar::int(-3), 2), ParamScalar::int(6));
    }

    fn arb_scalar() -> impl Strategy<Value = ParamScalar> {
        (prop::collection::vec(-6i64..6, 0..3), prop::collection::vec(-6i64..6, 1..3))
            .prop_filter_map("nonzero den", |(n, d)| {
                ParamScalar::from_parts(RPoly::from_i64s(&n), RPoly::from_i64s(&d)).ok()
            })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, ParamScalar::zero());
            if !b.is_zero() {
                prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
            }
        }

        #[test]
        fn canonical_is_idempotent(a in arb_scalar()) {
            let again = ParamScalar::from_parts(a.num().clone(), a.den().clone()).unwrap();
            prop_assert_eq!(&again, &a);
            prop_assert!(a.den().lc() > BigInt::zero());
        }

        #[test]
        fn specialization_is_a_homomorphism(a in arb_scalar(), b in arb_scalar(), p in 1i64..7, q in 1i64..5) {
            let r = BigRational::new(p.into(), q.into());
            if let (Ok(x), Ok(y)) = (a.specialize(&r), b.specialize(&r)) {
                prop_assert_eq!((&a * &b).specialize(&r).unwrap(), &x * &y);
                prop_assert_eq!((&a + &b).specialize(&r).unwrap(), x + y);
            }
        }
    }
}
