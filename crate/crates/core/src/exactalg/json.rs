//! Canonical JSON encoding of polynomials.
//!
//! `{"n":N,"terms":[{"exp":[..],"num":[..],"den":[..]}]}` with terms in
//! descending graded-lex order and `num`/`den` the ascending integer
//! coefficient lists of the canonical `ParamScalar`.

use num_bigint::BigInt;
use serde_json::Value;

use super::multipoly::{Mono, MultiPoly};
use super::rpoly::RPoly;
use super::scalar::ParamScalar;
use crate::error::{Error, Result};

fn int_list(p: &RPoly) -> String {
    let v: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", v.join(","))
}

/// `{"num":[..],"den":[..]}` for a scalar.
pub fn scalar_to_json(c: &ParamScalar) -> String {
    format!("{{\"num\":{},\"den\":{}}}", int_list(c.num()), int_list(c.den()))
}

pub fn scalar_fields(c: &ParamScalar) -> String {
    format!("\"num\":{},\"den\":{}", int_list(c.num()), int_list(c.den()))
}

pub fn to_json(p: &MultiPoly) -> String {
    let terms: Vec<String> = p
        .terms()
        .map(|(e, c)| {
            let exp: Vec<String> = e.as_slice().iter().map(|x| x.to_string()).collect();
            format!("{{\"exp\":[{}],{}}}", exp.join(","), scalar_fields(c))
        })
        .collect();
    format!("{{\"n\":{},\"terms\":[{}]}}", p.nvars(), terms.join(","))
}

fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().map_err(|_| Error::Parse(format!("not an integer: {n}"))),
        _ => Err(Error::Parse(format!("expected integer, got {v}"))),
    }
}

fn parse_poly(v: Option<&Value>) -> Result<RPoly> {
    let arr = v.and_then(Value::as_array).ok_or_else(|| Error::Parse("expected coefficient list".into()))?;
    Ok(RPoly::from_coeffs(arr.iter().map(parse_int).collect::<Result<_>>()?))
}

pub fn scalar_from_value(v: &Value) -> Result<ParamScalar> {
    ParamScalar::from_parts(parse_poly(v.get("num"))?, parse_poly(v.get("den"))?)
}

/// Parses and canonicalizes; non-canonical but valid input is accepted.
pub fn from_json(s: &str) -> Result<MultiPoly> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    from_value(&v)
}

pub fn from_value(v: &Value) -> Result<MultiPoly> {
    let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing n".into()))? as usize;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing terms".into()))?;
    let mut p = MultiPoly::zero(n);
    for t in terms {
        let exp = t.get("exp").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing exp".into()))?;
        if exp.len() != n {
            return Err(Error::LengthMismatch(n, exp.len()));
        }
        let e: Vec<u16> = exp
            .iter()
            .map(|x| x.as_u64().and_then(|x| u16::try_from(x).ok()).ok_or_else(|| Error::Parse(format!("bad exponent {x}"))))
            .collect::<Result<_>>()?;
        p.add_term(Mono::from_slice(&e), &scalar_from_value(t)?);
    }
    Ok(p)
}
