//! The ambient setting: number of variables and the value of `r`.

use num_rational::BigRational;
use num_traits::Signed;

use crate::combinatorics::{self, n_even, n_odd};
use crate::error::{Error, Result};
use crate::exactalg::ParamScalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ambient {
    pub n: usize,
    /// Either the indeterminate `r` or an admissible rational value.
    pub r: ParamScalar,
}

impl Ambient {
    pub fn symbolic(n: usize) -> Self {
        Ambient { n, r: ParamScalar::r() }
    }

    /// Rational `r`; negative values are rejected since the interpolation
    /// problem can degenerate there.
    pub fn rational(n: usize, r: &BigRational) -> Result<Self> {
        check_r(n, r)?;
        Ok(Ambient { n, r: ParamScalar::from_rational(r) })
    }

    pub fn with_n(&self, n: usize) -> Self {
        Ambient { n, r: self.r.clone() }
    }

    pub fn is_symbolic(&self) -> bool {
        !self.r.is_constant()
    }

    pub fn n_odd(&self) -> usize {
        n_odd(self.n)
    }

    pub fn n_even(&self) -> usize {
        n_even(self.n)
    }

    pub fn rho(&self) -> Vec<ParamScalar> {
        combinatorics::rho(self.n, &self.r)
    }

    pub fn rho_plus(&self, v: &[i64]) -> Vec<ParamScalar> {
        combinatorics::rho_plus(v, &self.r)
    }

    pub fn r_label(&self) -> String {
        if self.is_symbolic() {
            "sym".into()
        } else {
            self.r.to_string()
        }
    }
}

/// Rejects `r < 0`, which includes every `-p/(2q)` with `1 <= q < n/2`.
pub fn check_r(n: usize, r: &BigRational) -> Result<()> {
    if r.is_negative() {
        return Err(Error::InadmissibleR(r.to_string(), format!("negative values are excluded (n = {n})")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_rational;

    #[test]
    fn negative_r_rejected() {
        assert!(Ambient::rational(4, &parse_rational("-1/2").unwrap()).is_err());
        assert!(Ambient::rational(4, &parse_rational("-3").unwrap()).is_err());
        assert!(Ambient::rational(4, &parse_rational("1/2").unwrap()).is_ok());
        assert!(Ambient::rational(4, &parse_rational("0").unwrap()).is_ok());
    }
}
