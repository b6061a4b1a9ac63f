//! Minimal s-expression reader shared by every text format in the crate.

use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SExpr {
    Atom(String, Pos),
    List(Vec<SExpr>, Pos),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{pos}: {msg}")]
pub struct SyntaxError {
    pub pos: Pos,
    pub msg: String,
}

impl SyntaxError {
    pub fn new(pos: Pos, msg: impl Into<String>) -> Self {
        SyntaxError { pos, msg: msg.into() }
    }
}

impl SExpr {
    pub fn pos(&self) -> Pos {
        match self {
            SExpr::Atom(_, p) | SExpr::List(_, p) => *p,
        }
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            SExpr::Atom(s, _) => Some(s),
            SExpr::List(..) => None,
        }
    }

    pub fn as_list(&self) -> Option<&[SExpr]> {
        match self {
            SExpr::List(items, _) => Some(items),
            SExpr::Atom(..) => None,
        }
    }

    /// Head symbol of a list whose first element is an atom.
    pub fn head(&self) -> Option<&str> {
        self.as_list().and_then(|l| l.first()).and_then(SExpr::as_atom)
    }

    pub fn expect_list(&self, what: &str) -> Result<&[SExpr], SyntaxError> {
        self.as_list().ok_or_else(|| SyntaxError::new(self.pos(), format!("expected {what}, found atom")))
    }

    pub fn expect_atom(&self, what: &str) -> Result<&str, SyntaxError> {
        self.as_atom().ok_or_else(|| SyntaxError::new(self.pos(), format!("expected {what}, found list")))
    }
}

fn is_delim(c: char) -> bool {
    c.is_whitespace() || c == '(' || c == ')' || c == ';'
}

/// Parses every top-level expression in `text`. `;` starts a line comment.
pub fn parse_all(text: &str) -> Result<Vec<SExpr>, SyntaxError> {
    let mut stack: Vec<(Vec<SExpr>, Pos)> = Vec::new();
    let mut top = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);

    while let Some(&c) = chars.peek() {
        let here = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == ';' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
            }
        } else if c == '(' {
            chars.next();
            col += 1;
            stack.push((Vec::new(), here));
        } else if c == ')' {
            chars.next();
            col += 1;
            let (items, start) = stack.pop().ok_or_else(|| SyntaxError::new(here, "unbalanced ')'"))?;
            let e = SExpr::List(items, start);
            match stack.last_mut() {
                Some((parent, _)) => parent.push(e),
                None => top.push(e),
            }
        } else {
            let mut tok = String::new();
            while let Some(&c) = chars.peek() {
                if is_delim(c) {
                    break;
                }
                tok.push(c);
                chars.next();
                col += 1;
            }
            let e = SExpr::Atom(tok, here);
            match stack.last_mut() {
                Some((parent, _)) => parent.push(e),
                None => top.push(e),
            }
        }
    }
    if let Some((_, start)) = stack.pop() {
        return Err(SyntaxError::new(start, "unclosed '('"));
    }
    Ok(top)
}

/// Parses exactly one expression.
pub fn parse_one(text: &str) -> Result<SExpr, SyntaxError> {
    let mut all = parse_all(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        0 => Err(SyntaxError::new(Pos { line: 1, col: 1 }, "empty input")),
        _ => Err(SyntaxError::new(all[1].pos(), "trailing input after expression")),
    }
}
