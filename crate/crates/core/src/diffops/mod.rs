//! The difference operators `X(t)`, `Y(t)`, their components, and the
//! top-degree differential operators.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

pub mod matrix;
pub mod operator;
pub mod top;

pub use matrix::{vandermonde, OperatorMatrix, MAX_N};
pub use operator::{
    closed_form_coefficient, component_eigenvalue, component_operators, determinant_expand, eigenvalue, DiffOp,
};
pub use top::{apply_top, euler, euler_fields, eta_prime};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    X,
    Y,
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "X" | "x" => Ok(Kind::X),
            "Y" | "y" => Ok(Kind::Y),
            _ => Err(Error::Parse(format!("unknown operator '{s}', expected X or Y"))),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}
