//! Text form of polynomials.
//!
//! Grammar: `[+|-] term ((+|-) term)*`, where a term is a product of factors
//! separated by `*` or whitespace, and a factor is an integer, a rational
//! `p/q`, or a variable with an optional `^exponent`. Variables are `x1..xP`
//! followed by `u1..uM` when a u-block is configured; upper-case `X`/`U` are
//! accepted so operator polynomials parse the same way. Rationals print as
//! `p/q` (or `p`), never as decimals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::apolarity::Polynomial;
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::monomial::Monomial;

/// Naming of the positional variables: `x1..x{x_count}` then
/// `u1..u{u_count}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VariableNames {
    pub x_count: usize,
    pub u_count: usize,
    pub upper: bool,
}

impl VariableNames {
    pub fn plain(num_vars: usize) -> Self {
        Self {
            x_count: num_vars,
            u_count: 0,
            upper: false,
        }
    }

    pub fn split(x_count: usize, u_count: usize) -> Self {
        Self {
            x_count,
            u_count,
            upper: false,
        }
    }

    /// Same positions, dual (upper-case) names.
    pub fn dual(self) -> Self {
        Self {
            upper: true,
            ..self
        }
    }

    pub fn num_vars(&self) -> usize {
        self.x_count + self.u_count
    }

    pub fn name(&self, var: usize) -> String {
        let (x, u) = if self.upper { ('X', 'U') } else { ('x', 'u') };
        if var < self.x_count {
            format!("{x}{}", var + 1)
        } else {
            format!("{u}{}", var - self.x_count + 1)
        }
    }
}

pub fn parse_polynomial(text: &str, num_vars: usize) -> Result<Polynomial> {
    parse_polynomial_with(text, &VariableNames::plain(num_vars))
}

pub fn parse_polynomial_with(text: &str, names: &VariableNames) -> Result<Polynomial> {
    let n = names.num_vars();
    if n == 0 {
        return Err(Error::invalid("need at least one variable"));
    }
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        names,
    };
    let terms = parser.expression()?;
    let mut degree: Option<(u32, usize)> = None;
    for (m, _, offset) in &terms {
        match degree {
            None => degree = Some((m.degree(), *offset)),
            Some((d, _)) if d != m.degree() => {
                return Err(Error::Inhomogeneous {
                    first: d,
                    second: m.degree(),
                })
            }
            _ => {}
        }
    }
    Polynomial::new(n, terms.into_iter().map(|(m, c, _)| (m, c)))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a VariableNames,
}

impl Parser<'_> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expression(&mut self) -> Result<Vec<(Monomial, Rational, usize)>> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                1
            }
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            None => return self.err(self.pos, "empty expression"),
            _ => 1,
        };
        loop {
            let start = self.pos;
            let (m, c) = self.term()?;
            let c = if sign < 0 { -c } else { c };
            terms.push((m, c, start));
            match self.peek() {
                None => break,
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(ch) => {
                    return self.err(self.pos, format!("unexpected character '{}'", ch as char))
                }
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let n = self.names.num_vars();
        let mut exps = vec![0u32; n];
        let mut coeff = Rational::one();
        let mut factors = 0;
        loop {
            match self.peek() {
                Some(ch) if ch.is_ascii_digit() => {
                    coeff *= self.number()?;
                }
                Some(b'x' | b'X' | b'u' | b'U') => {
                    let (var, power) = self.variable()?;
                    exps[var] += power;
                }
                Some(b'*') if factors > 0 => {
                    self.pos += 1;
                    continue;
                }
                Some(ch) if factors == 0 => {
                    return self.err(self.pos, format!("expected a term, found '{}'", ch as char))
                }
                None if factors == 0 => return self.err(self.pos, "expected a term"),
                _ => break,
            }
            factors += 1;
        }
        Ok((Monomial::new(exps)?, coeff))
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn number(&mut self) -> Result<Rational> {
        let numer: BigInt = self.digits()?.parse().expect("digits parse");
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let denom: BigInt = self.digits()?.parse().expect("digits parse");
            if denom.is_zero() {
                return self.err(at, "zero denominator");
            }
            return Ok(Rational::new(numer, denom));
        }
        Ok(Rational::from_integer(numer))
    }

    fn variable(&mut self) -> Result<(usize, u32)> {
        let start = self.pos;
        let block = self.src[self.pos].to_ascii_lowercase();
        self.pos += 1;
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits_start == self.pos {
            return self.err(start, "variable needs an index, e.g. x1");
        }
        let index: usize = std::str::from_utf8(&self.src[digits_start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| Error::Parse {
                offset: digits_start,
                message: "variable index too large".into(),
            })?;
        let limit = if block == b'x' {
            self.names.x_count
        } else {
            self.names.u_count
        };
        if index == 0 || index > limit {
            return self.err(
                start,
                format!(
                    "unknown variable {}{index} (have {limit} {} variables)",
                    block as char, block as char
                ),
            );
        }
        let var = if block == b'x' {
            index - 1
        } else {
            self.names.x_count + index - 1
        };
        let mut power = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            power = self.digits()?.parse().map_err(|_| Error::Parse {
                offset: at,
                message: "exponent too large".into(),
            })?;
        }
        Ok((var, power))
    }
}

fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn format_monomial(m: &Monomial, names: &VariableNames) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| {
            if e == 1 {
                names.name(v)
            } else {
                format!("{}^{e}", names.name(v))
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Terms in descending lex order, e.g. `3/2*x1^3 - x2^3`. The zero
/// polynomial prints as `0`.
pub fn format_polynomial(f: &Polynomial, names: &VariableNames) -> String {
    let mut out = String::new();
    for (i, (m, c)) in f.terms().iter().rev().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = format_monomial(m, names);
        if m.degree() == 0 {
            out.push_str(&format_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_rational(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn rational_to_string(q: &Rational) -> String {
    format_rational(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    #[test]
    fn parses_examples() {
        let f = parse_polynomial("x1^2 + x1*x2", 2).unwrap();
        assert_eq!(f.coefficient(&mono(&[2, 0])), rat(1));
        assert_eq!(f.coefficient(&mono(&[1, 1])), rat(1));
        assert_eq!(f.len(), 2);

        let g = parse_polynomial("3/2 x1^3 - x2^3", 2).unwrap();
        assert_eq!(g.coefficient(&mono(&[3, 0])), ratio(3, 2));
        assert_eq!(g.coefficient(&mono(&[0, 3])), rat(-1));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_polynomial("x1^2 + x2", 2),
            Err(Error::Inhomogeneous { .. })
        ));
        assert!(matches!(
            parse_polynomial("x1 + x3", 2),
            Err(Error::Parse { offset: 5, .. })
        ));
        assert!(matches!(
            parse_polynomial("x1 - x1", 2),
            Err(Error::ZeroPolynomial)
        ));
        assert!(matches!(
            parse_polynomial("x1 +", 2),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial("x1 ? x2", 2),
            Err(Error::Parse { offset: 3, .. })
        ));
        assert!(matches!(
            parse_polynomial("1/0 x1", 2),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_polynomial("", 2), Err(Error::Parse { .. })));
    }

    #[test]
    fn combines_like_terms() {
        let f = parse_polynomial("x1*x2 + 2 x2 x1 - x1^2", 2).unwrap();
        assert_eq!(f.coefficient(&mono(&[1, 1])), rat(3));
        assert_eq!(
            format_polynomial(&f, &VariableNames::plain(2)),
            "-x1^2 + 3*x1*x2"
        );
    }

    #[test]
    fn u_block_names() {
        let names = VariableNames::split(3, 2);
        let f = parse_polynomial_with("x1*u2^2 + x2*u1*u2 + x3*u1^2", &names).unwrap();
        assert_eq!(f.num_vars(), 5);
        assert_eq!(
            format_polynomial(&f, &names),
            "x1*u2^2 + x2*u1*u2 + x3*u1^2"
        );
        assert!(parse_polynomial_with("u3", &names).is_err());
        assert_eq!(
            format_polynomial(&f, &names.dual()),
            "X1*U2^2 + X2*U1*U2 + X3*U1^2"
        );
    }

    #[test]
    fn constants_and_zero() {
        let c = Polynomial::new(2, [(Monomial::one(2), ratio(-7, 3))]).unwrap();
        assert_eq!(format_polynomial(&c, &VariableNames::plain(2)), "-7/3");
        assert_eq!(parse_polynomial("-7/3", 2).unwrap(), c);
        assert_eq!(
            format_polynomial(&Polynomial::zero(2, 1), &VariableNames::plain(2)),
            "0"
        );
    }
}
