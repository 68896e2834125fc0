//! The table of non-elementary `R_λ` of small degree written as polynomials
//! in the columns `R_(1^k)`, with a parser for the checked-in golden copy.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use super::ensure_eq;
use crate::ambient::Ambient;
use crate::combinatorics::{bracket, enumerate_lambda, odd_degree, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{Mono, MultiPoly, ParamScalar};
use crate::interpolation::basis::expand_by_leading_terms;
use crate::interpolation::{build_r, column_r, Basis, RExpansion};

/// The golden table for `|λ|_odd <= 3`.
pub const GOLDEN_DEGREE3: &str = include_str!("../../data/degree3_table.txt");

/// A polynomial in the columns: entry `k` of a key is the power of `R_(1^{k+1})`.
/// Keys carry no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColumnPoly(BTreeMap<Vec<u32>, ParamScalar>);

impl ColumnPoly {
    pub fn scalar(c: ParamScalar) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(Vec::new(), c);
        }
        ColumnPoly(m)
    }

    pub fn column(k: usize) -> Self {
        let mut key = vec![0; k];
        key[k - 1] = 1;
        ColumnPoly(BTreeMap::from([(key, ParamScalar::one())]))
    }

    fn as_scalar(&self) -> Option<ParamScalar> {
        match self.0.len() {
            0 => Some(ParamScalar::zero()),
            1 => self.0.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.0.clone();
        for (k, c) in &o.0 {
            *out.entry(k.clone()).or_default() += c;
        }
        out.retain(|_, c| !c.is_zero());
        ColumnPoly(out)
    }

    pub fn neg(&self) -> Self {
        ColumnPoly(self.0.iter().map(|(k, c)| (k.clone(), -c)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out: BTreeMap<Vec<u32>, ParamScalar> = BTreeMap::new();
        for (a, c) in &self.0 {
            for (b, d) in &o.0 {
                let mut key = vec![0; a.len().max(b.len())];
                for (i, e) in a.iter().enumerate() {
                    key[i] += e;
                }
                for (i, e) in b.iter().enumerate() {
                    key[i] += e;
                }
                *out.entry(key).or_default() += &(c * d);
            }
        }
        out.retain(|_, c| !c.is_zero());
        ColumnPoly(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(ColumnPoly::scalar(ParamScalar::one()), |acc, _| acc.mul(self))
    }

    /// Substitutes the interpolation polynomials in `n` variables, with `R_(1^k) = 0` for `k > n`.
    pub fn evaluate(&self, amb: &Ambient) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero(amb.n);
        for (key, c) in &self.0 {
            let mut t = MultiPoly::constant(amb.n, c.clone());
            for (i, &e) in key.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&column_r(amb, i + 1)?.pow(e));
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// The same polynomial as an expansion in the column-product basis of `n` variables.
    pub fn to_expansion(&self, n: usize) -> Result<RExpansion> {
        let mut terms = Vec::new();
        for (key, c) in &self.0 {
            if key.len() > n {
                continue;
            }
            let mut parts = key_parts(key);
            parts.resize(n, 0);
            terms.push((Partition::new(parts, n)?, c.clone()));
        }
        Ok(RExpansion::from_terms(Basis::Columns, n, terms))
    }

    pub fn from_expansion(e: &RExpansion) -> Self {
        ColumnPoly(e.terms.iter().map(|(mu, c)| (column_key(mu), c.clone())).collect())
    }

    /// Keys in descending order of the leading monomial `z^{[μ]}` of the product they index.
    fn ordered_keys(&self) -> Vec<&Vec<u32>> {
        let mut keys: Vec<&Vec<u32>> = self.0.keys().collect();
        keys.sort_by_cached_key(|key| {
            let parts = key_parts(key);
            std::cmp::Reverse(Mono::from_slice(&bracket(&parts).iter().map(|&x| x as u16).collect::<Vec<_>>()))
        });
        keys
    }
}

/// Exponents of the columns in `∏_k R_(1^k)^{μ_k - μ_{k+1}}`, without trailing zeros.
fn column_key(mu: &[i64]) -> Vec<u32> {
    let n = mu.len();
    let mut key: Vec<u32> = (0..n).map(|k| (mu[k] - if k + 1 < n { mu[k + 1] } else { 0 }) as u32).collect();
    while key.last() == Some(&0) {
        key.pop();
    }
    key
}

fn key_parts(key: &[u32]) -> Vec<i64> {
    let mut parts = vec![0i64; key.len()];
    let mut run = 0i64;
    for k in (0..key.len()).rev() {
        run += key[k] as i64;
        parts[k] = run;
    }
    parts
}

fn column_label(k: usize) -> String {
    format!("R({})", "1".repeat(k))
}

fn partition_label(parts: &[i64]) -> String {
    let s: String = parts.iter().filter(|&&x| x > 0).map(|x| x.to_string()).collect();
    format!("R({s})")
}

/// One row `R_λ = Σ c · ∏ R_(1^k)^{e_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    /// Nonzero parts of `λ`.
    pub lambda: Vec<i64>,
    pub rhs: ColumnPoly,
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =", partition_label(&self.lambda))?;
        if self.rhs.0.is_empty() {
            return f.write_str(" 0");
        }
        for (i, key) in self.rhs.ordered_keys().into_iter().enumerate() {
            let c = &self.rhs.0[key];
            let neg = c.num().lc().is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str(" -")?,
                (0, false) => f.write_str(" ")?,
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono: String = key
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| if e == 1 { column_label(k + 1) } else { format!("{}^{e}", column_label(k + 1)) })
                .collect();
            match (abs.is_one(), mono.is_empty()) {
                (true, true) => f.write_str("1")?,
                (true, false) => f.write_str(&mono)?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) if abs.is_integral() && abs.is_constant() => write!(f, "{abs}{mono}")?,
                (false, false) if abs.is_integral() => write!(f, "({abs}) {mono}")?,
                (false, false) => write!(f, "{abs} {mono}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    R,
    Col,
    Open,
    Close,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&ch) = chars.peek() {
        chars.next();
        out.push(match ch {
            ' ' | '\t' => continue,
            '0'..='9' => {
                let mut num = ch.to_string();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    num.push(d);
                    chars.next();
                }
                Tok::Num(num)
            }
            'r' => Tok::R,
            'R' => Tok::Col,
            '(' => Tok::Open,
            ')' => Tok::Close,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            _ => return Err(Error::Parse(format!("unexpected character '{ch}' in '{s}'"))),
        });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn label(&mut self) -> Result<Vec<i64>> {
        self.expect(Tok::Col)?;
        self.expect(Tok::Open)?;
        let digits = match self.next() {
            Some(Tok::Num(d)) => d,
            got => return Err(Error::Parse(format!("expected a partition label, found {got:?}"))),
        };
        self.expect(Tok::Close)?;
        Ok(digits.chars().map(|c| c as i64 - '0' as i64).collect())
    }

    fn expr(&mut self) -> Result<ColumnPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ColumnPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    let d = d.as_scalar().ok_or_else(|| Error::Parse("division by a non-scalar".into()))?;
                    acc = acc.mul(&ColumnPoly::scalar(d.inv()?));
                }
                Some(Tok::Num(_) | Tok::R | Tok::Col | Tok::Open) => acc = acc.mul(&self.unary()?),
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<ColumnPoly> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            return match self.next() {
                Some(Tok::Num(e)) => Ok(base.pow(e.parse().map_err(|_| Error::Parse(format!("bad exponent {e}")))?)),
                got => Err(Error::Parse(format!("expected an exponent, found {got:?}"))),
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ColumnPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                let v: i64 = v.parse().map_err(|_| Error::Parse(format!("bad integer {v}")))?;
                Ok(ColumnPoly::scalar(ParamScalar::int(v)))
            }
            Some(Tok::R) => {
                self.pos += 1;
                Ok(ColumnPoly::scalar(ParamScalar::r()))
            }
            Some(Tok::Col) => {
                let parts = self.label()?;
                if parts.iter().any(|&p| p != 1) {
                    return Err(Error::Parse(format!("{} is not a column", partition_label(&parts))));
                }
                Ok(ColumnPoly::column(parts.len()))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::Close)?;
                Ok(e)
            }
            got => Err(Error::Parse(format!("unexpected token {got:?}"))),
        }
    }
}

/// Parses `R(λ) = <polynomial in the columns>`, one row per line; `#` starts a comment.
pub fn parse_table(text: &str) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| Error::Parse(format!("no '=' in '{line}'")))?;
        let mut p = Parser { toks: lex(lhs)?, pos: 0 };
        let lambda = p.label()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("trailing input after {}", partition_label(&lambda))));
        }
        let mut p = Parser { toks: lex(rhs)?, pos: 0 };
        let rhs = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("trailing input in '{line}'")));
        }
        rows.push(TableRow { lambda, rhs });
    }
    Ok(rows)
}

fn row_key(lam: &[i64]) -> (i64, i64, Vec<i64>) {
    (lam[0], odd_degree(lam), lam.to_vec())
}

/// Every `R_λ` with `|λ|_odd <= d` and `λ_1 > 1`, computed in `2d` variables
/// where all the columns it involves are nonzero.
pub fn compute_table(r: &ParamScalar, d: i64) -> Result<Vec<TableRow>> {
    let n = (2 * d).max(1) as usize;
    let amb = Ambient { n, r: r.clone() };
    let mut rows = Vec::new();
    for lam in enumerate_lambda(n, d) {
        if lam[0] <= 1 {
            continue;
        }
        let e = expand_by_leading_terms(&amb, &*build_r(&amb, &lam)?, Basis::Columns)?;
        let lambda: Vec<i64> = lam.iter().copied().filter(|&x| x > 0).collect();
        rows.push(TableRow { lambda, rhs: ColumnPoly::from_expansion(&e) });
    }
    rows.sort_by_key(|row| row_key(&row.lambda));
    Ok(rows)
}

/// Row-by-row differences between two tables, compared by value.
pub fn diff_tables(computed: &[TableRow], golden: &[TableRow]) -> Vec<String> {
    let mut out = Vec::new();
    for row in computed {
        match golden.iter().find(|g| g.lambda == row.lambda) {
            None => out.push(format!("missing from golden: {row}")),
            Some(g) if g.rhs != row.rhs => out.push(format!("computed: {row}\n  golden: {g}")),
            Some(_) => {}
        }
    }
    for g in golden {
        if !computed.iter().any(|row| row.lambda == g.lambda) {
            out.push(format!("not computed: {g}"));
        }
    }
    out
}

/// Substitutes each golden row in `n` variables and compares with `R_λ`, which is zero
/// when `λ` has more than `n` parts.
pub fn check_rows_at(rows: &[TableRow], amb: &Ambient) -> Result<()> {
    for row in rows {
        let want = if row.lambda.len() > amb.n {
            MultiPoly::zero(amb.n)
        } else {
            let lam = Partition::new(row.lambda.clone(), amb.n)?;
            (*build_r(amb, &lam)?).clone()
        };
        ensure_eq(&row.rhs.evaluate(amb)?, &want, || format!("{row} in {} variables", amb.n))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_golden_file() {
        let rows = parse_table(GOLDEN_DEGREE3).unwrap();
        assert_eq!(rows.len(), 11);
        let r21 = rows.iter().find(|r| r.lambda == [2, 1]).unwrap();
        let want = ColumnPoly::column(1)
            .mul(&ColumnPoly::column(2))
            .add(&ColumnPoly::column(3).mul(&ColumnPoly::scalar(ParamScalar::linear(1, 2).inv().unwrap())).neg());
        assert_eq!(r21.rhs, want);
    }

    #[test]
    fn rejects_malformed_rows() {
        assert!(parse_table("R(2) R(1)").is_err());
        assert!(parse_table("R(2) = R(21)").is_err());
        assert!(parse_table("R(2) = R(1) / R(1)").is_err());
        assert!(parse_table("R(2) = (R(1)").is_err());
    }

    #[test]
    fn round_trip_through_display() {
        let rows = parse_table(GOLDEN_DEGREE3).unwrap();
        for row in &rows {
            let again = parse_table(&row.to_string()).unwrap();
            assert_eq!(again[0].rhs, row.rhs, "{row}");
        }
    }

    #[test]
    fn degree_two_rows_hold() {
        let rows: Vec<TableRow> =
            parse_table(GOLDEN_DEGREE3).unwrap().into_iter().filter(|r| odd_degree(&r.lambda) <= 2).collect();
        for n in 2..=4 {
            check_rows_at(&rows, &Ambient::symbolic(n)).unwrap();
        }
        let computed = compute_table(&ParamScalar::r(), 2).unwrap();
        assert!(diff_tables(&computed, &rows).is_empty());
    }
}
