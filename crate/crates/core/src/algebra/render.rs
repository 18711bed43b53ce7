//! Canonical text forms and a parser that reads them back.
//!
//! Polynomials in `q` are written in strictly decreasing degree with
//! explicit `*` and `^`; a rational function with a non-unit denominator is
//! written `( num ) / ( den )`. Polynomials in `x` follow the same order;
//! series numerators in `t` are written in increasing degree.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::qrat::QRat;
use super::xpoly::XPoly;
use super::zpoly::ZPoly;
use crate::error::AlgebraError;

fn monomial(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

pub fn render_zpoly(p: &ZPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if k == 0 {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&monomial(var, k));
        } else {
            out.push_str(&format!("{a}*{}", monomial(var, k)));
        }
    }
    out
}

pub fn render_qrat(r: &QRat) -> String {
    if r.denom().is_one() {
        render_zpoly(r.numer(), "q")
    } else {
        format!(
            "( {} ) / ( {} )",
            render_zpoly(r.numer(), "q"),
            render_zpoly(r.denom(), "q")
        )
    }
}

fn is_single_term(r: &QRat) -> bool {
    r.denom().is_one() && r.numer().coeffs().iter().filter(|c| !c.is_zero()).count() == 1
}

/// Renders `sum c_k var^k`; decreasing degree unless `ascending`.
pub fn render_xpoly(f: &XPoly, var: &str, ascending: bool) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let terms: Vec<(usize, &QRat)> = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let single = terms.len() == 1;
    let ordered: Box<dyn Iterator<Item = &(usize, &QRat)>> = if ascending {
        Box::new(terms.iter())
    } else {
        Box::new(terms.iter().rev())
    };
    let mut out = String::new();
    for &(k, c) in ordered {
        let neg = c.numer().lead().unwrap().is_negative();
        let a = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let body = if k == 0 {
            if is_single_term(&a) || (single && !neg) {
                render_qrat(&a)
            } else {
                format!("({})", render_qrat(&a))
            }
        } else if a.is_one() {
            monomial(var, k)
        } else if is_single_term(&a) {
            format!("{}*{}", render_qrat(&a), monomial(var, k))
        } else {
            format!("({})*{}", render_qrat(&a), monomial(var, k))
        };
        out.push_str(&body);
    }
    out
}

/// Series numerator in increasing powers of `t`.
pub fn render_t_numerator(coeffs: &[QRat]) -> String {
    render_xpoly(&XPoly::new(coeffs.to_vec()), "t", true)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Var(char),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>, AlgebraError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Token::Int(text.parse().unwrap()));
        } else if c.is_ascii_alphabetic() {
            out.push(Token::Var(c));
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(AlgebraError::Parse(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    var: char,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<XPoly, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            if self.eat_op('+') {
                acc = &acc + &self.term()?;
            } else if self.eat_op('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<XPoly, AlgebraError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_op('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat_op('/') {
                let d = self.unary()?;
                let c = constant_of(&d)?;
                if c.is_zero() {
                    return Err(AlgebraError::Parse("division by zero".into()));
                }
                acc = acc.scale(&c.recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<XPoly, AlgebraError> {
        if self.eat_op('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat_op('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<XPoly, AlgebraError> {
        let base = self.atom()?;
        if !self.eat_op('^') {
            return Ok(base);
        }
        let negative = self.eat_op('-');
        let e = match self.tokens.get(self.pos) {
            Some(Token::Int(n)) => n
                .to_u32()
                .ok_or_else(|| AlgebraError::Parse("exponent too large".into()))?,
            _ => return Err(AlgebraError::Parse("expected integer exponent".into())),
        };
        self.pos += 1;
        if negative {
            let c = constant_of(&base)?;
            if c.is_zero() {
                return Err(AlgebraError::Parse("zero to a negative power".into()));
            }
            Ok(XPoly::constant(c.pow(-(e as i32))))
        } else {
            Ok(base.pow(e))
        }
    }

    fn atom(&mut self) -> Result<XPoly, AlgebraError> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok(XPoly::constant(QRat::from_int(n)))
            }
            Some(Token::Var('q')) => {
                self.pos += 1;
                Ok(XPoly::constant(QRat::q()))
            }
            Some(Token::Var(v)) if v == self.var => {
                self.pos += 1;
                Ok(XPoly::x())
            }
            Some(Token::Var(v)) => Err(AlgebraError::Parse(format!("unknown variable '{v}'"))),
            Some(Token::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat_op(')') {
                    return Err(AlgebraError::Parse("expected ')'".into()));
                }
                Ok(e)
            }
            Some(t) => Err(AlgebraError::Parse(format!("unexpected token {t:?}"))),
            None => Err(AlgebraError::Parse("unexpected end of input".into())),
        }
    }
}

fn constant_of(p: &XPoly) -> Result<QRat, AlgebraError> {
    match p.degree() {
        None => Ok(QRat::zero()),
        Some(0) => Ok(p.coeff(0)),
        _ => Err(AlgebraError::Parse(
            "division by a non-constant polynomial".into(),
        )),
    }
}

/// Parses a polynomial in `var` with coefficients in `Q(q)`.
pub fn parse_xpoly(s: &str, var: char) -> Result<XPoly, AlgebraError> {
    let mut p = Parser {
        tokens: tokenize(s)?,
        pos: 0,
        var,
    };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(AlgebraError::Parse(format!(
            "trailing input at token {}",
            p.pos
        )));
    }
    Ok(e)
}

/// Parses an element of `Q(q)`.
pub fn parse_qrat(s: &str) -> Result<QRat, AlgebraError> {
    // No main variable: any letter other than `q` is rejected.
    constant_of(&parse_xpoly(s, '\0')?)
}
