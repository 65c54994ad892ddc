//! Polynomial text: parsing, formatting and the `vars:` file format.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use seshadri_core::field::{Rational, Rationals};
use seshadri_core::poly::{default_names, QPoly};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{line}:{column}: unknown variable `{name}`")]
    UnknownVariable { name: String, line: usize, column: usize },
    #[error("{line}:{column}: zero denominator")]
    ZeroDenominator { line: usize, column: usize },
    #[error("invalid variable list: {0}")]
    Header(String),
}

impl ParseError {
    /// Line and column of the offending token, 1-based.
    pub fn position(&self) -> Option<(usize, usize)> {
        match self {
            ParseError::Syntax { line, column, .. } | ParseError::UnknownVariable { line, column, .. } | ParseError::ZeroDenominator { line, column } => {
                Some((*line, *column))
            }
            ParseError::Header(_) => None,
        }
    }
}

/// Variable names in order, with optional aliases resolving to the same index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variables {
    names: Vec<String>,
    aliases: Vec<(String, usize)>,
}

impl Variables {
    pub fn declared(names: Vec<String>) -> Result<Self, ParseError> {
        if names.is_empty() {
            return Err(ParseError::Header("no variables declared".into()));
        }
        for (i, n) in names.iter().enumerate() {
            let mut chars = n.chars();
            let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(ParseError::Header(format!("`{n}` is not a variable name")));
            }
            if names[..i].contains(n) {
                return Err(ParseError::Header(format!("`{n}` declared twice")));
            }
        }
        Ok(Variables { names, aliases: vec![] })
    }

    /// `x1..xn`, also reachable as `x, y, z, w` when there are at most four.
    pub fn default_for(arity: usize) -> Self {
        let names: Vec<String> = (1..=arity).map(|i| format!("x{i}")).collect();
        let aliases = if arity <= 4 { default_names(arity).into_iter().enumerate().map(|(i, n)| (n, i)).collect() } else { vec![] };
        Variables { names, aliases }
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name).or_else(|| self.aliases.iter().find(|(a, _)| a == name).map(|&(_, i)| i))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str, first_line: usize) -> Result<Vec<Spanned>, ParseError> {
    let mut out = vec![];
    let (mut line, mut column) = (first_line, 1);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                column += 1;
            }
            out.push(Spanned { tok: Tok::Int(digits.parse().expect("digits")), line: l, column: col });
            continue;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                name.push(d);
                chars.next();
                column += 1;
            }
            out.push(Spanned { tok: Tok::Ident(name), line: l, column: col });
            continue;
        } else {
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => return Err(ParseError::Syntax { line: l, column: col, message: format!("unexpected character `{c}`") }),
            }
        };
        chars.next();
        column += 1;
        out.push(Spanned { tok, line: l, column: col });
    }
    out.push(Spanned { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    vars: &'a Variables,
}

impl Parser<'_> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, at: &Spanned, message: String) -> ParseError {
        ParseError::Syntax { line: at.line, column: at.column, message }
    }

    fn expected(&self, what: &str) -> ParseError {
        let t = self.peek();
        self.error(t, format!("expected {what}, found {}", t.tok.describe()))
    }

    fn constant(&self, c: Rational) -> QPoly {
        QPoly::constant(self.vars.arity(), c)
    }

    // expr := ['-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<QPoly, ParseError> {
        let negate = self.peek().tok == Tok::Minus;
        if negate {
            self.bump();
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek().tok, Tok::Ident(_) | Tok::LParen)
    }

    // term := coeff ('*'? factor)* | factor ('*' factor)*
    fn term(&mut self) -> Result<QPoly, ParseError> {
        if let Tok::Int(_) = self.peek().tok {
            let c = self.coeff()?;
            let mut acc = self.constant(c);
            loop {
                if self.peek().tok == Tok::Star {
                    self.bump();
                    acc = &acc * &self.factor()?;
                } else if self.starts_factor() {
                    acc = &acc * &self.factor()?;
                } else {
                    return Ok(acc);
                }
            }
        }
        if !self.starts_factor() {
            return Err(self.expected("a term"));
        }
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    // coeff := int | int '/' uint
    fn coeff(&mut self) -> Result<Rational, ParseError> {
        let Tok::Int(num) = self.bump().tok else { unreachable!("checked by caller") };
        if self.peek().tok != Tok::Slash {
            return Ok(Rational::from_integer(num));
        }
        self.bump();
        let at = self.peek().clone();
        let Tok::Int(den) = self.bump().tok else {
            return Err(self.error(&at, format!("expected denominator, found {}", at.tok.describe())));
        };
        if den.is_zero() {
            return Err(ParseError::ZeroDenominator { line: at.line, column: at.column });
        }
        Ok(Rational::new(num, den))
    }

    // factor := var ('^' uint)? | '(' expr ')' ('^' uint)?
    fn factor(&mut self) -> Result<QPoly, ParseError> {
        let at = self.peek().clone();
        let base = match at.tok {
            Tok::Ident(ref name) => {
                self.bump();
                let Some(i) = self.vars.index(name) else {
                    return Err(ParseError::UnknownVariable { name: name.clone(), line: at.line, column: at.column });
                };
                QPoly::var(self.vars.arity(), Rationals, i)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.expected("`)`"));
                }
                self.bump();
                inner
            }
            _ => return Err(self.expected("a variable or `(`")),
        };
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.bump();
        let Tok::Int(e) = self.peek().tok.clone() else {
            return Err(self.error(&caret, "expected exponent after `^`".into()));
        };
        let at = self.bump();
        let e = e.to_u16().ok_or_else(|| self.error(&at, "exponent too large".into()))?;
        Ok(base.pow(e as u32))
    }
}

/// Parses `src` as a polynomial in `vars`. Line numbers start at `first_line`.
pub fn parse_polynomial_at(src: &str, vars: &Variables, first_line: usize) -> Result<QPoly, ParseError> {
    let toks = lex(src, first_line)?;
    let mut p = Parser { toks, pos: 0, vars };
    if p.peek().tok == Tok::End {
        return Err(p.expected("a polynomial"));
    }
    let f = p.expr()?;
    if p.peek().tok != Tok::End {
        return Err(p.expected("`+`, `-` or end of input"));
    }
    Ok(f)
}

pub fn parse_polynomial(src: &str, vars: &Variables) -> Result<QPoly, ParseError> {
    parse_polynomial_at(src, vars, 1)
}

/// Text form readable by [`parse_polynomial`] with the same variables.
pub fn format_polynomial(f: &QPoly, vars: &Variables) -> String {
    f.format_with(vars.names())
}

/// A polynomial file: a `vars: a,b,c` header line and one expression.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialText {
    pub source: String,
    pub vars: Variables,
    pub polynomial: QPoly,
}

pub fn parse_file(text: &str) -> Result<PolynomialText, ParseError> {
    let (header, body) = text.split_once('\n').unwrap_or((text, ""));
    let Some(list) = header.trim().strip_prefix("vars:") else {
        return Err(ParseError::Syntax { line: 1, column: 1, message: "expected header `vars: <names>`".into() });
    };
    let names: Vec<String> = list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    let vars = Variables::declared(names)?;
    let polynomial = parse_polynomial_at(body, &vars, 2)?;
    Ok(PolynomialText { source: text.to_string(), vars, polynomial })
}

/// Comma-separated rationals such as `0,1/2,-3`.
pub fn parse_point(src: &str) -> Result<Vec<Rational>, ParseError> {
    let one = Variables::default_for(1);
    let mut out = vec![];
    for (k, part) in src.split(',').enumerate() {
        let column = src.split(',').take(k).map(|p| p.len() + 1).sum::<usize>() + 1;
        let f = parse_polynomial(part, &one).map_err(|e| match e {
            ParseError::ZeroDenominator { .. } => ParseError::ZeroDenominator { line: 1, column },
            _ => ParseError::Syntax { line: 1, column, message: format!("`{}` is not a rational number", part.trim()) },
        })?;
        if f.degree().unwrap_or(0) > 0 {
            return Err(ParseError::Syntax { line: 1, column, message: format!("`{}` is not a rational number", part.trim()) });
        }
        out.push(f.constant_term());
    }
    Ok(out)
}
