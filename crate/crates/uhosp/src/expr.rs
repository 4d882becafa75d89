//! Expression syntax: lexer, recursive-descent parser and printer.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := rational | 'h' | generator | '(' expr ')'
//!         | 'comm[' expr ',' expr ']' | 'acomm[' expr ',' expr ']'
//!         | func '(' expr ')'
//! ```
//!
//! Printing is the inverse of parsing up to parentheses: `parse(print(e)) == e`.

use std::fmt;

use uhosp_core::pbw::{Alphabet, Gen, Generator};
use uhosp_core::scalars::Rational;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Func {
    Exp,
    Sinh,
    Cosh,
    Ln,
    Arctanh,
}

impl Func {
    pub const ALL: [Func; 5] = [Func::Exp, Func::Sinh, Func::Cosh, Func::Ln, Func::Arctanh];

    pub fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Ln => "ln",
            Func::Arctanh => "arctanh",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

/// Parsed expression. Literals are non-negative; signs live in `Sum`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Num(Rational),
    H,
    Gen(Generator),
    /// `T = exp(hX)`, deformed alphabet only.
    T,
    Sum(Vec<(Sign, Expr)>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
    Comm(Box<Expr>, Box<Expr>),
    Acomm(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    /// The alphabet of the generators used, if any. Parsing guarantees
    /// there is at most one.
    pub fn alphabet(&self) -> Option<Alphabet> {
        match self {
            Expr::Num(_) | Expr::H => None,
            Expr::Gen(g) => Some(g.alphabet),
            Expr::T => Some(Alphabet::Deformed),
            Expr::Sum(ts) => ts.iter().find_map(|(_, e)| e.alphabet()),
            Expr::Product(fs) => fs.iter().find_map(Expr::alphabet),
            Expr::Pow(b, _) | Expr::Call(_, b) => b.alphabet(),
            Expr::Comm(a, b) | Expr::Acomm(a, b) => a.alphabet().or_else(|| b.alphabet()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(r) => write!(f, "number {r}"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::LBracket => f.write_str("'['"),
            Tok::RBracket => f.write_str("']'"),
            Tok::Comma => f.write_str("','"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' | '·' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, line: l0, column: c0 });
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let mut s: String = chars[start..i].iter().collect();
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                let dstart = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                s.push('/');
                s.extend(&chars[dstart..i]);
            }
            col += i - start;
            let r: Rational = s.parse().map_err(|_| err(l0, c0, format!("invalid number '{s}'")))?;
            out.push(Spanned { tok: Tok::Num(r), line: l0, column: c0 });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric()) {
                i += 1;
            }
            // Odd generators carry their sign in the name: V+ V- v+ v-, and J+ J-.
            let stem: String = chars[start..i].iter().collect();
            if matches!(stem.as_str(), "V" | "v" | "J")
                && i < chars.len()
                && matches!(chars[i], '+' | '-' | '−')
            {
                let sign = if chars[i] == '+' { '+' } else { '-' };
                i += 1;
                out.push(Spanned { tok: Tok::Ident(format!("{stem}{sign}")), line: l0, column: c0 });
            } else {
                out.push(Spanned { tok: Tok::Ident(stem), line: l0, column: c0 });
            }
            col += i - start;
            continue;
        }
        return Err(err(l0, c0, format!("unexpected character '{c}'")));
    }
    out.push(Spanned { tok: Tok::End, line, column: col });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    alphabet: Option<Alphabet>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self, message: impl Into<String>) -> ParseError {
        let t = &self.toks[self.pos];
        err(t.line, t.column, message)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.here(format!("expected {want}, found {}", self.peek())))
        }
    }

    fn note_alphabet(&mut self, a: Alphabet) -> Result<(), ParseError> {
        match self.alphabet {
            Some(b) if b != a => Err(self.here("classical and deformed generators mixed in one expression")),
            _ => {
                self.alphabet = Some(a);
                Ok(())
            }
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Tok::Minus => {
                self.bump();
                Sign::Minus
            }
            Tok::Plus => {
                self.bump();
                Sign::Plus
            }
            _ => Sign::Plus,
        };
        loop {
            terms.push((sign, self.term()?));
            sign = match self.peek() {
                Tok::Plus => Sign::Plus,
                Tok::Minus => Sign::Minus,
                _ => break,
            };
            self.bump();
        }
        if terms.len() == 1 && terms[0].0 == Sign::Plus {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(Expr::Sum(terms))
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        while *self.peek() == Tok::Star {
            self.bump();
            factors.push(self.factor()?);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().expect("one factor"));
        }
        Ok(Expr::Product(factors))
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            Tok::Num(r) if r.is_integer() => {
                let e = u32::try_from(r.numer()).map_err(|_| self.prev_err("exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            t => Err(self.prev_err(format!("expected a non-negative integer exponent, found {t}"))),
        }
    }

    fn prev_err(&self, message: impl Into<String>) -> ParseError {
        let t = &self.toks[self.pos.saturating_sub(1)];
        err(t.line, t.column, message)
    }

    fn bracket_pair(&mut self) -> Result<(Box<Expr>, Box<Expr>), ParseError> {
        self.expect(Tok::LBracket)?;
        let a = self.expr()?;
        self.expect(Tok::Comma)?;
        let b = self.expr()?;
        self.expect(Tok::RBracket)?;
        Ok((Box::new(a), Box::new(b)))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Num(r) => {
                self.bump();
                Ok(Expr::Num(r))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if name == "h" {
                    self.bump();
                    return Ok(Expr::H);
                }
                if name == "T" {
                    self.note_alphabet(Alphabet::Deformed)?;
                    self.bump();
                    return Ok(Expr::T);
                }
                if let Some(g) = Gen::parse(&name) {
                    self.note_alphabet(g.alphabet)?;
                    self.bump();
                    return Ok(Expr::Gen(g));
                }
                if name == "comm" || name == "acomm" {
                    self.bump();
                    let (a, b) = self.bracket_pair()?;
                    return Ok(if name == "comm" { Expr::Comm(a, b) } else { Expr::Acomm(a, b) });
                }
                if let Some(f) = Func::ALL.into_iter().find(|f| f.name() == name) {
                    self.bump();
                    self.expect(Tok::LParen)?;
                    let arg = self.expr()?;
                    self.expect(Tok::RParen)?;
                    return Ok(Expr::Call(f, Box::new(arg)));
                }
                Err(self.here(format!("unknown symbol '{name}'")))
            }
            t => Err(self.here(format!("expected an operand, found {t}"))),
        }
    }
}

/// Parses one expression; classical and deformed generators may not be mixed.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, alphabet: None };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.here(format!("unexpected {}", p.peek())));
    }
    Ok(e)
}

fn write_num(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "({}/{})", r.numer(), r.denom())
    }
}

fn write_wrapped(e: &Expr, wrap: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if wrap {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(r) => write_num(r, f),
            Expr::H => f.write_str("h"),
            Expr::Gen(g) => write!(f, "{g}"),
            Expr::T => f.write_str("T"),
            Expr::Sum(terms) => {
                for (i, (sign, t)) in terms.iter().enumerate() {
                    match (i, sign) {
                        (0, Sign::Plus) => {}
                        (0, Sign::Minus) => f.write_str("-")?,
                        (_, Sign::Plus) => f.write_str(" + ")?,
                        (_, Sign::Minus) => f.write_str(" - ")?,
                    }
                    write_wrapped(t, matches!(t, Expr::Sum(_)), f)?;
                }
                Ok(())
            }
            Expr::Product(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write_wrapped(x, matches!(x, Expr::Sum(_) | Expr::Product(_)), f)?;
                }
                Ok(())
            }
            Expr::Pow(b, k) => {
                write_wrapped(b, matches!(**b, Expr::Sum(_) | Expr::Product(_) | Expr::Pow(..)), f)?;
                write!(f, "^{k}")
            }
            Expr::Comm(a, b) => write!(f, "comm[{a}, {b}]"),
            Expr::Acomm(a, b) => write!(f, "acomm[{a}, {b}]"),
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

#[cfg(test)]
mod tests;
