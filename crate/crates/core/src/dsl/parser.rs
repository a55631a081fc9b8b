//! Recursive descent over the token stream. Expressions are expanded on the
//! fly into polynomials in `x` whose coefficients are polynomials in `n`.

use num_traits::{ToPrimitive, Zero};

use super::lexer::{Tok, Token};
use super::{Diagnostic, Pos};
use crate::poly::IntPoly;
use crate::recurrence::{CoeffFamily, RecurrenceSpec};

const MAX_EXPONENT: u32 = 256;

/// `Σ_j n^j c_j(x)`, indexed by the power of `n`.
#[derive(Debug, Clone)]
struct NPoly(Vec<IntPoly>);

impl NPoly {
    fn constant(p: IntPoly) -> Self {
        NPoly(vec![p]).trim()
    }

    fn n() -> Self {
        NPoly(vec![IntPoly::zero(), IntPoly::one()])
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(IntPoly::is_zero) {
            self.0.pop();
        }
        self
    }

    /// Degree in `n`; 0 for the zero polynomial.
    fn n_degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn add(&self, other: &NPoly) -> NPoly {
        let len = self.0.len().max(other.0.len());
        let zero = IntPoly::zero();
        NPoly((0..len).map(|j| self.0.get(j).unwrap_or(&zero) + other.0.get(j).unwrap_or(&zero)).collect()).trim()
    }

    fn neg(&self) -> NPoly {
        NPoly(self.0.iter().map(|p| -p).collect())
    }

    fn mul(&self, other: &NPoly) -> NPoly {
        if self.0.is_empty() || other.0.is_empty() {
            return NPoly(Vec::new());
        }
        let mut out = vec![IntPoly::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        NPoly(out).trim()
    }

    fn part(&self, j: usize) -> IntPoly {
        self.0.get(j).cloned().unwrap_or_else(IntPoly::zero)
    }
}

pub(super) struct Parser {
    tokens: Vec<Token>,
    at: usize,
    /// First place in the current expression where a product left the affine range.
    nonaffine: Option<Pos>,
    /// First `n` in the current expression.
    first_n: Option<Pos>,
}

type PResult<T> = Result<T, Diagnostic>;

impl Parser {
    pub(super) fn new(tokens: Vec<Token>) -> Self {
        Parser { tokens, at: 0, nonaffine: None, first_n: None }
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> Diagnostic {
        let t = self.peek();
        Diagnostic::error(t.pos, format!("expected {expected}, found {}", t.tok.describe()))
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> PResult<Pos> {
        if self.peek().tok == tok {
            Ok(self.next().pos)
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn keyword(&mut self, word: &str) -> PResult<Pos> {
        match &self.peek().tok {
            Tok::Ident(s) if s == word => Ok(self.next().pos),
            _ => Err(self.unexpected(&format!("'{word}'"))),
        }
    }

    /// `(name, spec)`, plus the positions of alpha and beta for later warnings.
    pub(super) fn spec(&mut self) -> PResult<(String, RecurrenceSpec, Pos)> {
        self.keyword("recurrence")?;
        let name = match self.next() {
            Token { tok: Tok::Ident(s), .. } => s,
            t => return Err(Diagnostic::error(t.pos, format!("expected a recurrence name, found {}", t.tok.describe()))),
        };
        self.expect(Tok::LBrace, "'{'")?;
        let alpha = self.assignment("alpha")?.1;
        let (beta_pos, beta) = self.assignment("beta")?;
        self.keyword("init")?;
        self.expect(Tok::Eq, "'='")?;
        let (_, init) = self.expr_checked()?;
        if init.n_degree() > 0 {
            let pos = self.first_n.expect("n seen");
            return Err(Diagnostic::error(pos, "initial polynomial must not depend on n"));
        }
        self.expect(Tok::At, "'@'")?;
        let start_index = match self.next() {
            Token { tok: Tok::Int(v), pos } => {
                v.to_usize().ok_or_else(|| Diagnostic::error(pos, "start index out of range"))?
            }
            t => return Err(Diagnostic::error(t.pos, format!("expected a start index, found {}", t.tok.describe()))),
        };
        self.expect(Tok::Semi, "';'")?;
        self.expect(Tok::RBrace, "'}'")?;
        self.expect(Tok::Eof, "end of input")?;
        let spec = RecurrenceSpec {
            alpha: CoeffFamily::new(alpha.part(0), alpha.part(1)),
            beta: CoeffFamily::new(beta.part(0), beta.part(1)),
            initial: init.part(0),
            start_index,
        };
        Ok((name, spec, beta_pos))
    }

    fn assignment(&mut self, key: &str) -> PResult<(Pos, NPoly)> {
        self.keyword(key)?;
        self.expect(Tok::Eq, "'='")?;
        let (pos, value) = self.expr_checked()?;
        if value.n_degree() > 1 {
            return Err(Diagnostic::error(self.nonaffine.unwrap_or(pos), "coefficient not affine in n"));
        }
        self.expect(Tok::Semi, "';'")?;
        Ok((pos, value))
    }

    fn expr_checked(&mut self) -> PResult<(Pos, NPoly)> {
        self.nonaffine = None;
        self.first_n = None;
        let pos = self.peek().pos;
        let value = self.expr()?;
        Ok((pos, value))
    }

    fn expr(&mut self) -> PResult<NPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    acc = acc.add(&self.term()?.neg());
                }
                Tok::Int(_) | Tok::LParen => {
                    let pos = self.peek().pos;
                    return Err(Diagnostic::error(pos, "implicit multiplication is not allowed; write '*'"));
                }
                Tok::Ident(ref s) if s == "n" || s == "x" => {
                    let pos = self.peek().pos;
                    return Err(Diagnostic::error(pos, "implicit multiplication is not allowed; write '*'"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<NPoly> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.next();
            let pos = self.peek().pos;
            let rhs = self.factor()?;
            acc = acc.mul(&rhs);
            self.note_degree(&acc, pos);
        }
        Ok(acc)
    }

    fn note_degree(&mut self, value: &NPoly, pos: Pos) {
        if value.n_degree() > 1 && self.nonaffine.is_none() {
            self.nonaffine = Some(pos);
        }
    }

    fn factor(&mut self) -> PResult<NPoly> {
        match self.peek().tok {
            Tok::Minus => {
                self.next();
                Ok(self.factor()?.neg())
            }
            Tok::Plus => {
                self.next();
                self.factor()
            }
            _ => {
                let pos = self.peek().pos;
                let base = self.atom()?;
                if self.peek().tok != Tok::Caret {
                    return Ok(base);
                }
                self.next();
                let exp = match self.next() {
                    Token { tok: Tok::Int(v), pos } => match v.to_u32() {
                        Some(e) if e <= MAX_EXPONENT => e,
                        _ => {
                            return Err(Diagnostic::error(pos, format!("exponent too large (at most {MAX_EXPONENT})")))
                        }
                    },
                    t => {
                        return Err(Diagnostic::error(
                            t.pos,
                            format!("expected an integer exponent, found {}", t.tok.describe()),
                        ))
                    }
                };
                let mut out = NPoly::constant(IntPoly::one());
                for _ in 0..exp {
                    out = out.mul(&base);
                }
                self.note_degree(&out, pos);
                Ok(out)
            }
        }
    }

    fn atom(&mut self) -> PResult<NPoly> {
        let t = self.next();
        match t.tok {
            Tok::Int(v) => Ok(NPoly::constant(IntPoly::constant(v))),
            Tok::Ident(s) if s == "x" => Ok(NPoly::constant(IntPoly::x())),
            Tok::Ident(s) if s == "n" => {
                self.first_n.get_or_insert(t.pos);
                Ok(NPoly::n())
            }
            Tok::Ident(s) => Err(Diagnostic::error(t.pos, format!("unknown identifier '{s}'; only 'n' and 'x' are variables"))),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            other => Err(Diagnostic::error(t.pos, format!("expected a term, found {}", other.describe()))),
        }
    }
}

/// Any `x^k` with `k` even carrying a nonzero coefficient in either part.
pub(super) fn has_even_terms(f: &CoeffFamily) -> bool {
    let even = |p: &IntPoly| p.coeffs().iter().step_by(2).any(|c| !c.is_zero());
    even(f.constant_part()) || even(f.slope_part())
}
