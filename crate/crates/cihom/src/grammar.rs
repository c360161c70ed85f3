//! The polynomial string grammar: parsing and canonical printing.
//!
//! Coefficients are integers or `num/den` fractions, variables match
//! `[A-Za-z_][A-Za-z0-9_]*`, the operators are `+ - * ^` with parentheses.
//! Multiplication is always explicit (`2*x`, never `2x`). Printing emits the
//! canonical form (terms descending in the active order) and parsing it back
//! reproduces the polynomial bit-exactly.

use crate::monomial::Monomial;
use crate::poly::{PolyCtx, Polynomial};
use crate::scalar::{FieldSpec, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// A parse failure with the byte position (0-based) in the input string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    fn new(pos: usize, msg: impl Into<String>) -> ParseError {
        ParseError { pos, msg: msg.into() }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "at column {}: {}", self.pos + 1, self.msg)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = s.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => { toks.push((i, Tok::Plus)); i += 1; }
            '-' => { toks.push((i, Tok::Minus)); i += 1; }
            '*' => { toks.push((i, Tok::Star)); i += 1; }
            '^' => { toks.push((i, Tok::Caret)); i += 1; }
            '/' => { toks.push((i, Tok::Slash)); i += 1; }
            '(' => { toks.push((i, Tok::LParen)); i += 1; }
            ')' => { toks.push((i, Tok::RParen)); i += 1; }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i].parse().unwrap();
                toks.push((start, Tok::Num(n)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(s[start..i].to_string())));
            }
            _ => return Err(ParseError::new(i, format!("unexpected character `{c}`"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ctx: &'a PolyCtx,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => { self.bump(); negate = true; }
            Some(Tok::Plus) => { self.bump(); }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t, self.ctx);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t, self.ctx);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f, self.ctx);
        }
        // juxtaposition like `2x` or `x y` is a hard error
        if let Some(Tok::Ident(_) | Tok::Num(_) | Tok::LParen) = self.peek() {
            return Err(ParseError::new(
                self.here(),
                "missing `*` (juxtaposition is not multiplication)",
            ));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let at = self.here();
            match self.bump() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| ParseError::new(at, "exponent out of range"))?;
                    Ok(base.pow(e, self.ctx))
                }
                _ => Err(ParseError::new(at, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Num(n)) => {
                // optional /den immediately after an integer literal
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    let dat = self.here();
                    match self.bump() {
                        Some(Tok::Num(d)) => {
                            if d.is_zero() {
                                return Err(ParseError::new(dat, "zero denominator"));
                            }
                            let c = scalar_fraction(&n, &d, self.ctx.field)
                                .map_err(|m| ParseError::new(dat, m))?;
                            Ok(Polynomial::constant(self.ctx, c))
                        }
                        _ => Err(ParseError::new(dat, "expected a denominator")),
                    }
                } else {
                    let c = scalar_int(&n, self.ctx.field);
                    Ok(Polynomial::constant(self.ctx, c))
                }
            }
            Some(Tok::Ident(name)) => match self.ctx.var_index(&name) {
                Some(v) => Ok(Polynomial::var(self.ctx, v)),
                None => Err(ParseError::new(at, format!("unknown variable `{name}`"))),
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                let at = self.here();
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(ParseError::new(at, "expected `)`")),
                }
            }
            Some(t) => Err(ParseError::new(at, format!("unexpected token {t:?}"))),
            None => Err(ParseError::new(at, "unexpected end of input")),
        }
    }
}

fn scalar_int(n: &BigInt, field: FieldSpec) -> Scalar {
    match field {
        FieldSpec::Q => Scalar::Rat(BigRational::from_integer(n.clone())),
        FieldSpec::Fp(p) => {
            let m = ((n % p) + p) % p;
            let val: u64 = m.try_into().unwrap();
            Scalar::Fp { val, p }
        }
    }
}

fn scalar_fraction(n: &BigInt, d: &BigInt, field: FieldSpec) -> Result<Scalar, String> {
    match field {
        FieldSpec::Q => Ok(Scalar::Rat(BigRational::new(n.clone(), d.clone()))),
        FieldSpec::Fp(p) => {
            let dm = ((d % p) + p) % p;
            let dv: u64 = dm.try_into().unwrap();
            if dv == 0 {
                return Err(format!("denominator divisible by {p}"));
            }
            let num = scalar_int(n, field);
            let den = Scalar::Fp { val: dv, p };
            Ok(num.mul(&den.inv()))
        }
    }
}

/// Parse a polynomial in the grammar against the given context.
pub fn parse_poly(s: &str, ctx: &PolyCtx) -> Result<Polynomial, ParseError> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(ParseError::new(0, "empty polynomial"));
    }
    let end = s.len();
    let mut p = Parser { toks, pos: 0, ctx, end };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::new(p.here(), "trailing input"));
    }
    Ok(poly)
}

/// Canonical printing: terms descending in the active order, explicit `*`,
/// coefficients in lowest terms. `parse_poly(render_poly(p)) == p`.
pub fn render_poly(p: &Polynomial, ctx: &PolyCtx) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = if neg { c.neg() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mono = render_mono(m, ctx);
        if mono.is_empty() {
            out.push_str(&mag.render());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&mag.render());
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

fn render_mono(m: &Monomial, ctx: &PolyCtx) -> String {
    let mut parts = Vec::new();
    for (v, &e) in m.exps.iter().enumerate() {
        if e == 1 {
            parts.push(ctx.vars[v].clone());
        } else if e > 1 {
            parts.push(format!("{}^{}", ctx.vars[v], e));
        }
    }
    parts.join("*")
}

/// Render a module element as its comma-separated component list.
pub fn render_vec(v: &crate::freemod::PolyVec, ctx: &PolyCtx) -> String {
    v.comps
        .iter()
        .map(|p| render_poly(p, ctx))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Render a matrix row-major: rows joined by semicolons.
pub fn render_matrix(m: &crate::freemod::PolyMatrix, ctx: &PolyCtx) -> String {
    if m.rows == 0 || m.cols() == 0 {
        return format!("[{}x{}]", m.rows, m.cols());
    }
    (0..m.rows)
        .map(|i| {
            (0..m.cols())
                .map(|j| render_poly(m.entry(i, j), ctx))
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Check that a name is usable as a variable or module identifier.
pub fn is_valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;

    fn ctx() -> PolyCtx {
        PolyCtx::new(
            FieldSpec::Q,
            vec!["x".into(), "y".into()],
            vec![1, 1],
            MonomialOrder::DegRevLex,
        )
    }

    #[test]
    fn round_trip_samples() {
        let ctx = ctx();
        for s in [
            "x^2 - y^2",
            "x*y",
            "2*x^2*y - 1/3*x + 4",
            "-x + y",
            "1/2",
            "0",
            "x^2 + 2*x*y + y^2",
        ] {
            let p = parse_poly(s, &ctx).unwrap();
            let printed = render_poly(&p, &ctx);
            let back = parse_poly(&printed, &ctx).unwrap();
            assert_eq!(p, back, "round trip failed for `{s}` -> `{printed}`");
        }
    }

    #[test]
    fn canonical_print() {
        let ctx = ctx();
        let p = parse_poly("y^2 + x^2 - 2*x*y", &ctx).unwrap();
        assert_eq!(render_poly(&p, &ctx), "x^2 - 2*x*y + y^2");
    }

    #[test]
    fn rejects_juxtaposition() {
        let ctx = ctx();
        let err = parse_poly("2x", &ctx).unwrap_err();
        assert_eq!(err.pos, 1);
        assert!(parse_poly("x y", &ctx).is_err());
    }

    #[test]
    fn rejects_unknown_variable() {
        let ctx = ctx();
        let err = parse_poly("x + z", &ctx).unwrap_err();
        assert_eq!(err.pos, 4);
    }

    #[test]
    fn parenthesized_powers() {
        let ctx = ctx();
        let p = parse_poly("(x + y)^2", &ctx).unwrap();
        assert_eq!(p, parse_poly("x^2 + 2*x*y + y^2", &ctx).unwrap());
    }

    #[test]
    fn fraction_coefficients() {
        let ctx = ctx();
        let p = parse_poly("3/4*x - 1/2", &ctx).unwrap();
        assert_eq!(render_poly(&p, &ctx), "3/4*x - 1/2");
    }

    #[test]
    fn error_positions_are_exact() {
        let ctx = ctx();
        let err = parse_poly("x + ", &ctx).unwrap_err();
        assert_eq!(err.pos, 4);
        let err = parse_poly("x ^ y", &ctx).unwrap_err();
        assert_eq!(err.pos, 4);
    }
}
