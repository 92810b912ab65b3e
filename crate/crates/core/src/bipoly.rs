//! Bivariate polynomials over the rationals, with the expression syntax
//! used by the command-line tools.
//!
//! Terms live in a `BTreeMap` keyed by `(x_exp, y_exp)`; zero coefficients
//! are never stored, so structural equality is semantic equality and every
//! iteration order is deterministic.

use crate::rat::Interval;
use crate::unipoly::UniPoly;
use crate::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn one() -> Self {
        BiPoly::constant(BigRational::one())
    }

    /// The monomial c * x^i * y^j.
    pub fn monomial(i: u32, j: u32, c: BigRational) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn var_x() -> Self {
        BiPoly::monomial(1, 0, BigRational::one())
    }

    pub fn var_y() -> Self {
        BiPoly::monomial(0, 1, BigRational::one())
    }

    pub fn from_i64(terms: &[(u32, u32, i64)]) -> Self {
        let mut p = BiPoly::zero();
        for &(i, j, c) in terms {
            p.add_term(i, j, BigRational::from_integer(c.into()));
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, v)| (k, -v.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, v)| (k, v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = BiPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        // Horner in y over Horner-evaluated x-sections.
        self.section_at_x_poly()
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, cx| acc * y + cx.eval(x))
    }

    /// Coefficients of y^j as polynomials in x (the (Q[x])[y] view).
    /// Index = y-exponent; the top entry is nonzero unless self is zero.
    pub fn coeffs_y(&self) -> Vec<UniPoly> {
        self.section_at_x_poly()
    }

    fn section_at_x_poly(&self) -> Vec<UniPoly> {
        let dy = match self.deg_y() {
            None => return vec![],
            Some(d) => d as usize,
        };
        let dx = self.deg_x().unwrap() as usize;
        let mut rows = vec![vec![BigRational::zero(); dx + 1]; dy + 1];
        for (&(i, j), c) in &self.terms {
            rows[j as usize][i as usize] = c.clone();
        }
        rows.into_iter().map(UniPoly::new).collect()
    }

    pub fn from_coeffs_y(coeffs: Vec<UniPoly>) -> Self {
        let mut p = BiPoly::zero();
        for (j, c) in coeffs.into_iter().enumerate() {
            for (i, v) in c.coeffs().iter().enumerate() {
                p.add_term(i as u32, j as u32, v.clone());
            }
        }
        p
    }

    /// Leading coefficient with respect to y, as a polynomial in x.
    pub fn lc_y(&self) -> UniPoly {
        self.coeffs_y().pop().unwrap_or_else(UniPoly::zero)
    }

    pub fn swap_xy(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// Univariate section f(x0, y) as a polynomial in y.
    pub fn section_at_x(&self, x0: &BigRational) -> UniPoly {
        UniPoly::new(
            self.coeffs_y()
                .iter()
                .map(|c| c.eval(x0))
                .collect::<Vec<_>>(),
        )
    }

    /// Univariate section f(x, y0) as a polynomial in x.
    pub fn section_at_y(&self, y0: &BigRational) -> UniPoly {
        self.swap_xy().section_at_x(y0)
    }

    pub fn derivative_x(&self) -> Self {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.add_term(i - 1, j, c * BigRational::from_integer(i.into()));
            }
        }
        out
    }

    pub fn derivative_y(&self) -> Self {
        self.swap_xy().derivative_x().swap_xy()
    }

    /// General substitution f(xs, ys). Powers are cached, so cost is one
    /// multiplication chain per distinct exponent.
    pub fn substitute(&self, xs: &BiPoly, ys: &BiPoly) -> Self {
        let mut xpow: Vec<BiPoly> = vec![BiPoly::one()];
        let mut ypow: Vec<BiPoly> = vec![BiPoly::one()];
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            while xpow.len() <= i as usize {
                let next = xpow.last().unwrap().mul(xs);
                xpow.push(next);
            }
            while ypow.len() <= j as usize {
                let next = ypow.last().unwrap().mul(ys);
                ypow.push(next);
            }
            out = out.add(&xpow[i as usize].mul(&ypow[j as usize]).scale(c));
        }
        out
    }

    /// f(x + s*y, y): the shear that generic-izes the y-direction.
    pub fn shear_x(&self, s: &BigRational) -> Self {
        let xs = BiPoly::var_x().add(&BiPoly::monomial(0, 1, s.clone()));
        self.substitute(&xs, &BiPoly::var_y())
    }

    /// f(x + u, y + v).
    pub fn translate(&self, u: &BigRational, v: &BigRational) -> Self {
        let xs = BiPoly::var_x().add(&BiPoly::constant(u.clone()));
        let ys = BiPoly::var_y().add(&BiPoly::constant(v.clone()));
        self.substitute(&xs, &ys)
    }

    /// Outward enclosure of f over the box X x Y.
    pub fn eval_box(&self, x: &Interval, y: &Interval) -> Interval {
        let mut acc = Interval::point(BigRational::zero());
        for (&(i, j), c) in &self.terms {
            let mut t = Interval::point(c.clone());
            for _ in 0..i {
                t = t.mul(x);
            }
            for _ in 0..j {
                t = t.mul(y);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Embeds a polynomial in x alone.
    pub fn from_unipoly_x(p: &UniPoly) -> Self {
        let mut out = BiPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(i as u32, 0, c.clone());
        }
        out
    }

    /// Embeds a polynomial in y alone.
    pub fn from_unipoly_y(p: &UniPoly) -> Self {
        BiPoly::from_unipoly_x(p).swap_xy()
    }

    /// Top form f_d(x, y): the terms of maximal total degree.
    pub fn top_form(&self) -> Self {
        match self.total_degree() {
            None => BiPoly::zero(),
            Some(d) => BiPoly {
                terms: self
                    .terms
                    .iter()
                    .filter(|(&(i, j), _)| i + j == d)
                    .map(|(&k, v)| (k, v.clone()))
                    .collect(),
            },
        }
    }
}

impl fmt::Display for BiPoly {
    /// Canonical form: terms by descending total degree, ties by descending
    /// x-power; explicit `*`; coefficients as reduced rationals. Output
    /// reparses to an equal polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().cloned().collect();
        keys.sort_by_key(|&(i, j)| (std::cmp::Reverse(i + j), std::cmp::Reverse(i)));
        for (n, &(i, j)) in keys.iter().enumerate() {
            let c = &self.terms[&(i, j)];
            let neg = c.is_negative();
            let mag = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                parts.push(mag.to_string());
            }
            if i == 1 {
                parts.push("x".into());
            } else if i > 1 {
                parts.push(format!("x^{}", i));
            }
            if j == 1 {
                parts.push("y".into());
            } else if j > 1 {
                parts.push(format!("y^{}", j));
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

// Expression parser. Grammar, with `uint` a decimal literal and `rat`
// either `p` or `p/q` (no spaces around the slash):
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := '(' expr ')' | 'x' | 'y' | rat
//
// Errors carry 1-based column numbers into the source string.

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            'x' => {
                toks.push((col, Tok::X));
                i += 1;
            }
            'y' => {
                toks.push((col, Tok::Y));
                i += 1;
            }
            '+' => {
                toks.push((col, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((col, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((col, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((col, Tok::Caret));
                i += 1;
            }
            '(' => {
                toks.push((col, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((col, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: String = chars[start..i].iter().collect();
                let mut denom = String::from("1");
                if i < chars.len() && chars[i] == '/' {
                    i += 1;
                    let dstart = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return Err(Error::ParseError {
                            col: dstart + 1,
                            msg: "expected digits after '/'".into(),
                        });
                    }
                    denom = chars[dstart..i].iter().collect();
                }
                let n: num_bigint::BigInt = numer.parse().unwrap();
                let d: num_bigint::BigInt = denom.parse().unwrap();
                if d.is_zero() {
                    return Err(Error::ParseError {
                        col,
                        msg: "zero denominator".into(),
                    });
                }
                toks.push((col, Tok::Num(BigRational::new(n, d))));
            }
            _ => {
                return Err(Error::ParseError {
                    col,
                    msg: format!("unexpected character '{}'", c),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.pos)
    }

    fn next_col(&self) -> usize {
        self.peek().map(|&(c, _)| c).unwrap_or(self.end_col)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = if matches!(self.peek(), Some((_, Tok::Minus))) {
            self.bump();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some((_, Tok::Plus)) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some((_, Tok::Minus)) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some((_, Tok::Star))) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BiPoly> {
        let base = self.base()?;
        if matches!(self.peek(), Some((_, Tok::Caret))) {
            self.bump();
            let col = self.next_col();
            match self.bump() {
                Some((_, Tok::Num(r))) => {
                    if !r.is_integer() || r.is_negative() {
                        return Err(Error::ExponentNotInteger { col });
                    }
                    let e: u32 = r.to_integer().try_into().map_err(|_| Error::ParseError {
                        col,
                        msg: "exponent too large".into(),
                    })?;
                    Ok(base.pow(e))
                }
                Some((_, Tok::X)) | Some((_, Tok::Y)) => Err(Error::ExponentNotInteger { col }),
                _ => Err(Error::ParseError {
                    col,
                    msg: "expected exponent".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<BiPoly> {
        let col = self.next_col();
        match self.bump() {
            Some((_, Tok::X)) => Ok(BiPoly::var_x()),
            Some((_, Tok::Y)) => Ok(BiPoly::var_y()),
            Some((_, Tok::Num(r))) => Ok(BiPoly::constant(r)),
            Some((_, Tok::LParen)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    other => Err(Error::ParseError {
                        col: other.map(|(c, _)| c).unwrap_or(self.end_col),
                        msg: "expected ')'".into(),
                    }),
                }
            }
            other => Err(Error::ParseError {
                col: other.map(|(c, _)| c).unwrap_or(col),
                msg: "expected 'x', 'y', a number, or '('".into(),
            }),
        }
    }
}

/// Parses the curve-expression syntax into a polynomial.
pub fn parse_bipoly(src: &str) -> Result<BiPoly> {
    let toks = lex(src)?;
    let end_col = src.chars().count() + 1;
    let mut p = Parser {
        toks,
        pos: 0,
        end_col,
    };
    if p.peek().is_none() {
        return Err(Error::ParseError {
            col: 1,
            msg: "empty expression".into(),
        });
    }
    let out = p.expr()?;
    if let Some((col, _)) = p.peek() {
        return Err(Error::ParseError {
            col: *col,
            msg: "unexpected trailing input".into(),
        });
    }
    Ok(out)
}
