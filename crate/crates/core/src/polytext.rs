//! Parser for the polynomial text grammar.
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := coeff ['*'] factors? | factors
//! coeff  := integer ['/' integer]
//! factors:= var ['^' exp] ('*' var ['^' exp])*
//! ```
//!
//! Variables are names of the context (`x1`, `K3`, `t1`, `y`, `w`, ...);
//! an alias table can map additional names (declared species) onto
//! context variables. The printer in [`crate::poly`] emits exactly this
//! grammar, and printing then parsing returns the same polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::context::VariableContext;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.position + 1, self.message)
    }
}

impl std::error::Error for PolyParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Number(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, PolyParseError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        match c {
            '+' => tokens.push((start, Token::Plus)),
            '-' => tokens.push((start, Token::Minus)),
            '*' => tokens.push((start, Token::Star)),
            '^' => tokens.push((start, Token::Caret)),
            '/' => tokens.push((start, Token::Slash)),
            _ if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let text: String = chars[i..j].iter().collect();
                let n = BigInt::from_str(&text).expect("digits parse");
                tokens.push((start, Token::Number(n)));
                i = j;
                continue;
            }
            _ if c.is_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len()
                    && (chars[j].is_alphanumeric() || chars[j] == '_')
                {
                    j += 1;
                }
                let text: String = chars[i..j].iter().collect();
                tokens.push((start, Token::Ident(text)));
                i = j;
                continue;
            }
            _ => {
                return Err(PolyParseError {
                    position: start,
                    message: format!("unexpected character `{}`", c),
                })
            }
        }
        i += 1;
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    ctx: &'a Arc<VariableContext>,
    aliases: &'a BTreeMap<String, usize>,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn error(&self, message: impl Into<String>) -> PolyParseError {
        PolyParseError {
            position: self.here(),
            message: message.into(),
        }
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.ctx
            .index_of(name)
            .or_else(|| self.aliases.get(name).copied())
    }

    fn parse_exponent(&mut self) -> Result<u32, PolyParseError> {
        match self.bump() {
            Some(Token::Number(n)) => u32::try_from(&n)
                .map_err(|_| self.error("exponent out of range")),
            _ => Err(self.error("expected exponent after `^`")),
        }
    }

    /// One term: optional coefficient, then `*`-joined variable powers.
    fn parse_term(&mut self) -> Result<(BigRational, Monomial), PolyParseError> {
        let mut coeff = BigRational::one();
        let mut have_coeff = false;
        if let Some(Token::Number(_)) = self.peek() {
            let n = match self.bump() {
                Some(Token::Number(n)) => n,
                _ => unreachable!(),
            };
            coeff = BigRational::from_integer(n);
            have_coeff = true;
            if let Some(Token::Slash) = self.peek() {
                self.bump();
                match self.bump() {
                    Some(Token::Number(d)) => {
                        if d == BigInt::from(0) {
                            return Err(self.error("zero denominator"));
                        }
                        coeff /= BigRational::from_integer(d);
                    }
                    _ => return Err(self.error("expected denominator after `/`")),
                }
            }
            if let Some(Token::Star) = self.peek() {
                self.bump();
            } else if !matches!(self.peek(), Some(Token::Ident(_))) {
                // bare constant term
                return Ok((coeff, Monomial::one()));
            }
        }
        let mut pairs: Vec<(usize, u32)> = Vec::new();
        loop {
            match self.peek() {
                Some(Token::Ident(_)) => {
                    let name = match self.bump() {
                        Some(Token::Ident(n)) => n,
                        _ => unreachable!(),
                    };
                    let idx = self
                        .var_index(&name)
                        .ok_or_else(|| self.error(format!("unknown variable `{}`", name)))?;
                    let exp = if let Some(Token::Caret) = self.peek() {
                        self.bump();
                        self.parse_exponent()?
                    } else {
                        1
                    };
                    pairs.push((idx, exp));
                }
                _ if pairs.is_empty() && !have_coeff => {
                    return Err(self.error("expected a term"));
                }
                _ => return Err(self.error("expected a variable")),
            }
            if let Some(Token::Star) = self.peek() {
                self.bump();
                continue;
            }
            break;
        }
        Ok((coeff, Monomial::from_pairs(pairs)))
    }

    fn parse_poly(&mut self) -> Result<Vec<(BigRational, Monomial)>, PolyParseError> {
        let mut terms = Vec::new();
        let mut sign = BigRational::one();
        if let Some(Token::Minus) = self.peek() {
            self.bump();
            sign = -sign;
        }
        loop {
            let (c, m) = self.parse_term()?;
            terms.push((c * &sign, m));
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    sign = BigRational::one();
                }
                Some(Token::Minus) => {
                    self.bump();
                    sign = -BigRational::one();
                }
                None => break,
                _ => return Err(self.error("expected `+` or `-`")),
            }
        }
        Ok(terms)
    }
}

/// Parses a polynomial over `ctx`, resolving extra names via `aliases`.
pub fn parse_polynomial_with_aliases(
    input: &str,
    ctx: &Arc<VariableContext>,
    order: &MonomialOrder,
    aliases: &BTreeMap<String, usize>,
) -> Result<Polynomial, PolyParseError> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(PolyParseError {
            position: 0,
            message: "empty polynomial".into(),
        });
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        ctx,
        aliases,
        end: input.chars().count(),
    };
    let terms = parser.parse_poly()?;
    Ok(Polynomial::from_terms(
        Arc::clone(ctx),
        order.clone(),
        terms,
    ))
}

pub fn parse_polynomial(
    input: &str,
    ctx: &Arc<VariableContext>,
    order: &MonomialOrder,
) -> Result<Polynomial, PolyParseError> {
    parse_polynomial_with_aliases(input, ctx, order, &BTreeMap::new())
}

/// Collects the variable names used in polynomial sources and builds a
/// context for them: `x<i>`/`K<i>`/`t<i>` filled densely up to the
/// largest index seen, then `y` and `w` if used. Unknown names are
/// reported as errors by the subsequent parse.
pub fn infer_context(sources: &[&str]) -> Arc<VariableContext> {
    let mut max_x = 0usize;
    let mut max_k = 0usize;
    let mut max_t = 0usize;
    let mut saw_y = false;
    let mut saw_w = false;
    for src in sources {
        if let Ok(tokens) = tokenize(src) {
            for (_, t) in tokens {
                if let Token::Ident(name) = t {
                    if let Some(n) = suffix_index(&name, 'x') {
                        max_x = max_x.max(n);
                    } else if let Some(n) = suffix_index(&name, 'K') {
                        max_k = max_k.max(n);
                    } else if let Some(n) = suffix_index(&name, 't') {
                        max_t = max_t.max(n);
                    } else if name == "y" {
                        saw_y = true;
                    } else if name == "w" {
                        saw_w = true;
                    }
                }
            }
        }
    }
    let mut aux: Vec<String> = (1..=max_t).map(|i| format!("t{}", i)).collect();
    if saw_y {
        aux.push("y".into());
    }
    if saw_w {
        aux.push("w".into());
    }
    let x: Vec<String> = (1..=max_x).map(|i| format!("x{}", i)).collect();
    let k: Vec<String> = (1..=max_k).map(|i| format!("K{}", i)).collect();
    Arc::new(VariableContext::new(x, k, aux).expect("canonical names"))
}

fn suffix_index(name: &str, prefix: char) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    if rest.is_empty() || rest.starts_with('0') {
        return None;
    }
    rest.parse::<usize>().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Arc<VariableContext> {
        VariableContext::standard(2, 3)
    }

    fn parse(s: &str) -> Polynomial {
        parse_polynomial(s, &ctx(), &MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn grammar_shapes() {
        assert_eq!(parse("K1*K2 - K3^2").to_string(), "K1*K2 - K3^2");
        // parsing re-sorts terms into the requested order
        assert_eq!(parse("K1*K3 - K2^2").to_string(), "-K2^2 + K1*K3");
        assert_eq!(parse("2x1").to_string(), "2*x1");
        assert_eq!(parse("3/4").to_string(), "3/4");
        assert_eq!(parse("-K2").to_string(), "-K2");
        assert_eq!(parse("x1^2*K3").to_string(), "x1^2*K3");
        assert_eq!(parse("0").terms().len(), 0);
        assert_eq!(parse("x1 - x1").to_string(), "0");
    }

    #[test]
    fn coefficients_combine() {
        let p = parse("1/2*x1 + 1/2*x1");
        assert_eq!(p.to_string(), "x1");
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_polynomial("x1 + $", &ctx(), &MonomialOrder::Grevlex).unwrap_err();
        assert_eq!(err.position, 5);
        let err = parse_polynomial("z9", &ctx(), &MonomialOrder::Grevlex).unwrap_err();
        assert!(err.message.contains("unknown variable"));
        let err = parse_polynomial("1/0", &ctx(), &MonomialOrder::Grevlex).unwrap_err();
        assert!(err.message.contains("zero denominator"));
        assert!(parse_polynomial("", &ctx(), &MonomialOrder::Grevlex).is_err());
    }

    #[test]
    fn aliases_resolve_species_names() {
        let ctx = ctx();
        let mut aliases = BTreeMap::new();
        aliases.insert("A".to_string(), 0usize);
        let p =
            parse_polynomial_with_aliases("2A", &ctx, &MonomialOrder::Grevlex, &aliases).unwrap();
        assert_eq!(p.to_string(), "2*x1");
    }

    #[test]
    fn inferred_context_is_dense() {
        let ctx = infer_context(&["x2*K3 - y"]);
        assert_eq!(ctx.x_count(), 2);
        assert_eq!(ctx.k_count(), 3);
        assert_eq!(ctx.aux_count(), 1);
        assert_eq!(ctx.index_of("y"), Some(5));
    }

    #[test]
    fn zero_constant_normalizes_to_empty() {
        assert!(parse("0").is_zero());
        assert!(parse("0 + 0").is_zero());
    }
}
