//! Text parser for Laurent polynomials.
//!
//! Accepted form: a sum of terms like `2*x^3*y^-1`, `(0.5,-1)*x*y`, `x`, `7`.
//! Variables are `x, y, z` or `x1..xn`; exponents are integers and may be
//! negative; coefficients are real literals or complex literals `(re,im)`.
//! A `*` between factors is optional before a variable, so `2x*y` and
//! `2*x*y` parse the same way.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::LaurentPolynomial;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(f64),
    Complex(f64, f64),
    Ident(usize), // variable index
    Caret,
    Star,
    Plus,
    Minus,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, pos: usize, msg: &str) -> Error {
        Error::Parse {
            pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Result<f64> {
        let start = self.pos;
        if self.pos < self.src.len() && (self.src[self.pos] == b'+' || self.src[self.pos] == b'-')
        {
            self.pos += 1;
        }
        let mut saw_digit = false;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
            saw_digit = true;
        }
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            self.pos += 1;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
                saw_digit = true;
            }
        }
        if !saw_digit {
            return Err(self.err(start, "expected a number"));
        }
        if self.pos < self.src.len() && (self.src[self.pos] | 32) == b'e' {
            let mark = self.pos;
            self.pos += 1;
            if self.pos < self.src.len()
                && (self.src[self.pos] == b'+' || self.src[self.pos] == b'-')
            {
                self.pos += 1;
            }
            if self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
            } else {
                // not an exponent suffix after all
                self.pos = mark;
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<f64>()
            .map_err(|_| self.err(start, "malformed number"))
    }

    fn next(&mut self) -> Result<Option<(usize, Tok)>> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let b = self.src[self.pos];
        let tok = match b {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'(' => {
                self.pos += 1;
                self.skip_ws();
                let re = self.number()?;
                self.skip_ws();
                if self.pos >= self.src.len() || self.src[self.pos] != b',' {
                    return Err(self.err(self.pos, "expected ',' in complex literal"));
                }
                self.pos += 1;
                self.skip_ws();
                let im = self.number()?;
                self.skip_ws();
                if self.pos >= self.src.len() || self.src[self.pos] != b')' {
                    return Err(self.err(self.pos, "expected ')' in complex literal"));
                }
                self.pos += 1;
                Tok::Complex(re, im)
            }
            b'0'..=b'9' | b'.' => Tok::Number(self.number()?),
            b'x' | b'y' | b'z' => {
                self.pos += 1;
                let mut digits = String::new();
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    digits.push(self.src[self.pos] as char);
                    self.pos += 1;
                }
                let idx = if digits.is_empty() {
                    match b {
                        b'x' => 0,
                        b'y' => 1,
                        _ => 2,
                    }
                } else {
                    if b != b'x' {
                        return Err(self.err(start, "indexed variables must use x1, x2, ..."));
                    }
                    let k: usize = digits
                        .parse()
                        .map_err(|_| self.err(start, "bad variable index"))?;
                    if k == 0 {
                        return Err(self.err(start, "variable indices start at 1"));
                    }
                    k - 1
                };
                Tok::Ident(idx)
            }
            _ => return Err(self.err(start, "unexpected character")),
        };
        Ok(Some((start, tok)))
    }
}

/// Parses the textual form into a canonical polynomial (like terms merged,
/// zero coefficients dropped). The dimension is the highest variable index
/// seen, so `1 + x + y + z` has n = 3.
pub fn parse_polynomial(text: &str) -> Result<LaurentPolynomial> {
    let mut lx = Lexer::new(text);
    let mut toks: Vec<(usize, Tok)> = Vec::new();
    while let Some(t) = lx.next()? {
        toks.push(t);
    }
    if toks.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty input".into(),
        });
    }

    let mut max_var = 0usize;
    for (_, t) in &toks {
        if let Tok::Ident(i) = t {
            max_var = max_var.max(*i + 1);
        }
    }
    let n = max_var.max(1);

    let mut terms: Vec<(Vec<i64>, Complex64)> = Vec::new();
    let mut i = 0usize;
    let mut sign = 1.0;
    // optional leading sign
    while i < toks.len() {
        match toks[i].1 {
            Tok::Plus => i += 1,
            Tok::Minus => {
                sign = -sign;
                i += 1;
            }
            _ => break,
        }
    }
    loop {
        // one term: factors separated by optional '*'
        let mut coeff = Complex64::new(sign, 0.0);
        let mut exp = vec![0i64; n];
        let mut got_factor = false;
        loop {
            if i >= toks.len() {
                break;
            }
            let (pos, tok) = toks[i].clone();
            match tok {
                Tok::Number(v) => {
                    coeff *= v;
                    i += 1;
                }
                Tok::Complex(re, im) => {
                    coeff *= Complex64::new(re, im);
                    i += 1;
                }
                Tok::Ident(var) => {
                    i += 1;
                    let mut e = 1i64;
                    if i < toks.len() && toks[i].1 == Tok::Caret {
                        i += 1;
                        let mut esign = 1i64;
                        if i < toks.len() && toks[i].1 == Tok::Minus {
                            esign = -1;
                            i += 1;
                        }
                        match toks.get(i) {
                            Some((p, Tok::Number(v))) => {
                                if v.fract() != 0.0 {
                                    return Err(Error::Parse {
                                        pos: *p,
                                        msg: "exponent must be an integer".into(),
                                    });
                                }
                                e = esign * (*v as i64);
                                i += 1;
                            }
                            _ => {
                                return Err(Error::Parse {
                                    pos,
                                    msg: "expected integer exponent after '^'".into(),
                                })
                            }
                        }
                    }
                    exp[var] += e;
                }
                Tok::Star => {
                    i += 1;
                    continue;
                }
                Tok::Plus | Tok::Minus => break,
                #[allow(unreachable_patterns)]
                _ => {
                    return Err(Error::Parse {
                        pos,
                        msg: "unexpected token".into(),
                    })
                }
            }
            got_factor = true;
        }
        if !got_factor {
            let pos = toks.get(i).map(|(p, _)| *p).unwrap_or(text.len());
            return Err(Error::Parse {
                pos,
                msg: "expected a term".into(),
            });
        }
        terms.push((exp, coeff));
        if i >= toks.len() {
            break;
        }
        // sign separators before the next term
        sign = 1.0;
        let mut saw_sep = false;
        while i < toks.len() {
            match toks[i].1 {
                Tok::Plus => {
                    saw_sep = true;
                    i += 1;
                }
                Tok::Minus => {
                    saw_sep = true;
                    sign = -sign;
                    i += 1;
                }
                _ => break,
            }
        }
        if !saw_sep {
            let pos = toks.get(i).map(|(p, _)| *p).unwrap_or(text.len());
            return Err(Error::Parse {
                pos,
                msg: "expected '+' or '-' between terms".into(),
            });
        }
        if i >= toks.len() {
            return Err(Error::Parse {
                pos: text.len(),
                msg: "dangling sign at end of input".into(),
            });
        }
    }

    LaurentPolynomial::from_terms(n, terms)
}
