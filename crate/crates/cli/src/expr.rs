//! Small expression language for polynomials typed on the command line.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '·')? unary)*        juxtaposition multiplies
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := number ('/' number)? | name | '(' expr ')'
//! ```
//!
//! Names may carry a bracket suffix such as `x[1,2]`. A name `zM` that is not
//! otherwise bound is the root of unity `ζ_M`.

use anyonic_core::{CycNum, Rational};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("at offset {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown name {0:?}")]
    UnknownName(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Name(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            out.push((pos, Tok::Num(chars[start..i].iter().map(|c| c.1).collect())));
        } else if ch.is_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            if i < chars.len() && chars[i].1 == '[' {
                while i < chars.len() && chars[i].1 != ']' {
                    i += 1;
                }
                if i == chars.len() {
                    return Err(ExprError::Syntax {
                        pos,
                        message: "unclosed '['".into(),
                    });
                }
                i += 1;
            }
            out.push((pos, Tok::Name(chars[start..i].iter().map(|c| c.1).collect())));
        } else if "+-*·^()/".contains(ch) {
            out.push((pos, Tok::Op(if ch == '·' { '*' } else { ch })));
            i += 1;
        } else {
            return Err(ExprError::Syntax {
                pos,
                message: format!("unexpected character {ch:?}"),
            });
        }
    }
    Ok(out)
}

/// Values an expression can evaluate to.
pub trait Context {
    type Value: Clone;
    /// Generator or variable name; `None` if unbound.
    fn atom(&self, name: &str) -> Option<Self::Value>;
    fn scalar(&self, c: CycNum) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
}

struct Parser<'a, C: Context> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a C,
}

impl<C: Context> Parser<'_, C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, message: &str) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            pos: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<C::Value, ExprError> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let mut rhs = self.term()?;
            if op == '-' {
                rhs = self.ctx.mul(&self.ctx.scalar(CycNum::from_integer(-1)), &rhs);
            }
            acc = self.ctx.add(&acc, &rhs);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<C::Value, ExprError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                }
                Some(Tok::Num(_) | Tok::Name(_) | Tok::Op('(')) => {}
                _ => return Ok(acc),
            }
            let rhs = self.unary()?;
            acc = self.ctx.mul(&acc, &rhs);
        }
    }

    fn unary(&mut self) -> Result<C::Value, ExprError> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.pos += 1;
            let v = self.unary()?;
            return Ok(self.ctx.mul(&self.ctx.scalar(CycNum::from_integer(-1)), &v));
        }
        self.power()
    }

    fn power(&mut self) -> Result<C::Value, ExprError> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let Some(Tok::Num(n)) = self.peek().cloned() else {
                return self.err("expected an integer exponent");
            };
            let Ok(k) = n.parse::<u32>() else {
                return self.err("exponent too large");
            };
            self.pos += 1;
            let mut acc = self.ctx.scalar(CycNum::one());
            for _ in 0..k {
                acc = self.ctx.mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<C::Value, ExprError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut text = n;
                if let (Some(Tok::Op('/')), Some(Tok::Num(d))) =
                    (self.peek().cloned(), self.toks.get(self.pos + 1).map(|t| t.1.clone()))
                {
                    self.pos += 2;
                    text = format!("{text}/{d}");
                }
                match text.parse::<Rational>() {
                    Ok(r) => Ok(self.ctx.scalar(CycNum::from_rational(r))),
                    Err(_) => self.err("bad number"),
                }
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                if let Some(v) = self.ctx.atom(&name) {
                    return Ok(v);
                }
                match root_of_unity(&name) {
                    Some(c) => Ok(self.ctx.scalar(c)),
                    None => Err(ExprError::UnknownName(name)),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(_) => self.err("expected a number, name or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn root_of_unity(name: &str) -> Option<CycNum> {
    let m: u32 = name.strip_prefix('z')?.parse().ok()?;
    CycNum::root_of_unity(m, 1).ok()
}

pub fn evaluate<C: Context>(src: &str, ctx: &C) -> Result<C::Value, ExprError> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
        ctx,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Names that appear in an expression, in order of first appearance.
pub fn names(src: &str) -> Result<Vec<String>, ExprError> {
    let mut out: Vec<String> = Vec::new();
    for (_, t) in tokenize(src)? {
        if let Tok::Name(n) = t {
            if !out.contains(&n) {
                out.push(n);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Numbers;

    impl Context for Numbers {
        type Value = CycNum;
        fn atom(&self, name: &str) -> Option<CycNum> {
            (name == "two").then(|| CycNum::from_integer(2))
        }
        fn scalar(&self, c: CycNum) -> CycNum {
            c
        }
        fn add(&self, a: &CycNum, b: &CycNum) -> CycNum {
            a + b
        }
        fn mul(&self, a: &CycNum, b: &CycNum) -> CycNum {
            a * b
        }
    }

    #[test]
    fn arithmetic() {
        let v = |s| evaluate(s, &Numbers).unwrap();
        assert_eq!(v("1 + 2*3"), CycNum::from_integer(7));
        assert_eq!(v("-(1/2 - 3/2)^2"), CycNum::from_integer(-1));
        assert_eq!(v("two two"), CycNum::from_integer(4));
        assert_eq!(v("1 + z3 + z3^2"), CycNum::zero());
        assert_eq!(v("2/3 + 1/3*z3"), v("(2 + z3)*1/3"));
    }

    #[test]
    fn errors() {
        assert!(matches!(evaluate("1 +", &Numbers), Err(ExprError::Syntax { .. })));
        assert_eq!(evaluate("foo", &Numbers), Err(ExprError::UnknownName("foo".into())));
        assert!(matches!(evaluate("(1", &Numbers), Err(ExprError::Syntax { .. })));
        assert!(matches!(evaluate("x[1", &Numbers), Err(ExprError::Syntax { .. })));
        assert!(matches!(evaluate("1 $", &Numbers), Err(ExprError::Syntax { pos: 2, .. })));
    }

    #[test]
    fn bracketed_names() {
        assert_eq!(names("x[1,2]*x[2,1] - t1").unwrap(), vec!["x[1,2]", "x[2,1]", "t1"]);
    }
}
