//! Textual notation for field elements, polynomials and rational functions.
//!
//! Elements of F_p print as decimal integers and other elements as their
//! base-p digit list `[c0,c1,...]`; `g` names the class of the variable of
//! the defining polynomial. Expressions accept `+ - * / ^` and parentheses.

use super::field::Field;
use super::fq::{Fq, FqElem};
use super::poly::Poly;
use super::ratfunc::{FunctionField, RatFunc};
use crate::error::{Error, Result};

pub fn elem_to_string(fq: &Fq, a: FqElem) -> String {
    let p = fq.p();
    if a.0 < p {
        return a.0.to_string();
    }
    let mut digits = Vec::with_capacity(fq.degree() as usize);
    let mut m = a.0;
    for _ in 0..fq.degree() {
        digits.push((m % p).to_string());
        m /= p;
    }
    format!("[{}]", digits.join(","))
}

pub fn poly_to_string(fq: &Fq, a: &Poly, var: char) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (k, &c) in a.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        terms.push(if k == 0 {
            elem_to_string(fq, c)
        } else if c == FqElem::ONE {
            mono
        } else {
            format!("{}*{}", elem_to_string(fq, c), mono)
        });
    }
    terms.join("+")
}

fn term_count(a: &Poly) -> usize {
    a.coeffs().iter().filter(|c| !c.is_zero()).count()
}

pub fn ratfunc_to_string(k: &FunctionField, r: &RatFunc) -> String {
    let fq = k.fq();
    let num = poly_to_string(fq, r.num(), k.var());
    if r.is_polynomial() {
        return num;
    }
    let den = poly_to_string(fq, r.den(), k.var());
    let wrap = |s: String, n: usize| if n > 1 { format!("({s})") } else { s };
    format!("{}/{}", wrap(num, term_count(r.num())), wrap(den, term_count(r.den())))
}

struct Parser<'a> {
    k: &'a FunctionField,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        let col = self.chars.get(self.pos).map(|c| c.0 + 1).unwrap_or_else(|| self.chars.last().map(|c| c.0 + 2).unwrap_or(1));
        Error::Parse { line: 1, col, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            v = v
                .checked_mul(10)
                .and_then(|x| x.checked_add(c.to_digit(10).unwrap() as u64))
                .ok_or_else(|| self.err("integer too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let k = self.k;
        let mut acc = if self.eat('-') {
            k.neg(&self.term()?)
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = k.add(&acc, &self.term()?);
            } else if self.eat('-') {
                acc = k.sub(&acc, &self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let k = self.k;
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = k.mul(&acc, &self.power()?);
            } else if self.peek() == Some('/') {
                self.pos += 1;
                let d = self.power()?;
                acc = k.div(&acc, &d).ok_or_else(|| self.err("division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.number()?;
            return Ok(self.k.pow(&base, e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        let k = self.k;
        let fq = k.fq();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                Ok(k.constant(FqElem((n % fq.p() as u64) as u32)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some('[') => {
                self.pos += 1;
                let mut digits = Vec::new();
                loop {
                    let d = self.number()?;
                    if d >= fq.p() as u64 {
                        return Err(self.err("coefficient out of range"));
                    }
                    digits.push(d as u32);
                    if self.eat(']') {
                        break;
                    }
                    if !self.eat(',') {
                        return Err(self.err("expected ',' or ']'"));
                    }
                }
                if digits.len() > fq.degree() as usize {
                    return Err(self.err("too many coefficients for this field"));
                }
                let idx = digits.iter().rev().fold(0u32, |acc, &d| acc * fq.p() + d);
                Ok(k.constant(FqElem(idx)))
            }
            Some('g') if fq.degree() > 1 => {
                self.pos += 1;
                Ok(k.constant(fq.generator()))
            }
            Some(c) if c == k.var() => {
                self.pos += 1;
                Ok(k.t())
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parse a rational function in the field's variable.
pub fn parse_ratfunc(k: &FunctionField, s: &str) -> Result<RatFunc> {
    let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser { k, chars, pos: 0 };
    if p.chars.is_empty() {
        return Err(p.err("empty expression"));
    }
    let r = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(r)
}

pub fn parse_poly(k: &FunctionField, s: &str) -> Result<Poly> {
    let r = parse_ratfunc(k, s)?;
    if !r.is_polynomial() {
        return Err(Error::Parse { line: 1, col: 1, msg: "expected a polynomial".into() });
    }
    Ok(r.num().clone())
}

pub fn parse_elem(fq: &Fq, s: &str) -> Result<FqElem> {
    let k = FunctionField::new(fq.clone());
    let r = parse_ratfunc(&k, s)?;
    r.constant_value().ok_or(Error::Parse { line: 1, col: 1, msg: "expected a field element".into() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn print_and_parse() {
        let f = Fq::new(5, 1).unwrap();
        let k = FunctionField::new(f.clone());
        for s in ["t^3+2*t+1", "0", "4", "t", "t/(t+1)", "(t^2+2)/(t^3+t+1)", "1/t", "3*t^2"] {
            let r = parse_ratfunc(&k, s).unwrap();
            assert_eq!(ratfunc_to_string(&k, &r), s);
        }
        let r = parse_ratfunc(&k, " t * t - 1 ").unwrap();
        assert_eq!(ratfunc_to_string(&k, &r), "t^2+4");
    }

    #[test]
    fn extension_elements() {
        let f = Fq::new(3, 2).unwrap();
        let g = parse_elem(&f, "g").unwrap();
        assert_eq!(elem_to_string(&f, g), "[0,1]");
        assert_eq!(parse_elem(&f, "[0,1]").unwrap(), g);
        let g5 = parse_elem(&f, "g^5").unwrap();
        assert_eq!(g5, f.pow(g, 5));
        let k = FunctionField::new(f.clone());
        let r = parse_ratfunc(&k, "[1,2]*t^2+g*t+2").unwrap();
        let s = ratfunc_to_string(&k, &r);
        assert_eq!(s, "[1,2]*t^2+[0,1]*t+2");
        assert_eq!(parse_ratfunc(&k, &s).unwrap(), r);
    }

    #[test]
    fn rejects_garbage() {
        let k = FunctionField::new(Fq::new(5, 1).unwrap());
        for s in ["", "t^", "2t", "x", "t+", "(t", "[1,2]", "1/0", "t t"] {
            assert!(parse_ratfunc(&k, s).is_err(), "{s}");
        }
        assert!(matches!(parse_ratfunc(&k, "t+?"), Err(Error::Parse { col: 3, .. })));
    }
}
