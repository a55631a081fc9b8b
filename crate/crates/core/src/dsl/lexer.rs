use num_bigint::BigInt;

use super::{Diagnostic, Pos};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Eq,
    Semi,
    At,
    Eof,
}

impl Tok {
    pub(super) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(v) => format!("'{v}'"),
            Tok::Eof => "end of input".to_string(),
            other => format!("'{}'", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Caret => "^",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::Eq => "=",
            Tok::Semi => ";",
            Tok::At => "@",
            _ => "",
        }
    }
}

#[derive(Debug, Clone)]
pub(super) struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> char {
        let c = self.chars.next().expect("peeked");
        if c == '\n' {
            self.pos.line += 1;
            self.pos.col = 1;
        } else {
            self.pos.col += 1;
        }
        c
    }

    fn take_while(&mut self, keep: impl Fn(char) -> bool) -> String {
        let mut out = String::new();
        while self.peek().is_some_and(&keep) {
            out.push(self.bump());
        }
        out
    }
}

/// Splits `text` into tokens; `#` starts a comment running to end of line.
pub(super) fn lex(text: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut cur = Cursor { chars: text.chars().peekable(), pos: Pos { line: 1, col: 1 } };
    let mut out = Vec::new();
    while let Some(c) = cur.peek() {
        let pos = cur.pos;
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if c == '#' {
            cur.take_while(|c| c != '\n');
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let digits = cur.take_while(|c| c.is_ascii_digit());
            if cur.peek().is_some_and(|c| c.is_alphabetic() || c == '_') {
                return Err(Diagnostic::error(cur.pos, "implicit multiplication is not allowed; write '*'"));
            }
            Tok::Int(digits.parse().expect("ascii digits"))
        } else if c.is_alphabetic() || c == '_' {
            Tok::Ident(cur.take_while(|c| c.is_alphanumeric() || c == '_'))
        } else {
            cur.bump();
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '=' => Tok::Eq,
                ';' => Tok::Semi,
                '@' => Tok::At,
                other => return Err(Diagnostic::error(pos, format!("unexpected character '{other}'"))),
            }
        };
        out.push(Token { tok, pos });
    }
    out.push(Token { tok: Tok::Eof, pos: cur.pos });
    Ok(out)
}
