//! Text format for single recurrences, `.eurec` files:
//!
//! ```text
//! # flag descents
//! recurrence C {
//!     alpha = 1 + x + 2*n*x^2;
//!     beta = x - x^3;
//!     init = 1 @ 0;
//! }
//! ```
//!
//! Coefficients are integer polynomials in `x` and `n`, expanded and required
//! to be affine in `n`. Multiplication is always explicit.

mod lexer;
mod parser;

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::IntPoly;
use crate::recurrence::{CoeffFamily, RecurrenceSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecSource {
    /// Shown in diagnostics, usually the file name.
    pub name: String,
    pub text: String,
}

impl SpecSource {
    pub fn new(name: impl Into<String>, text: impl Into<String>) -> Self {
        SpecSource { name: name.into(), text: text.into() }
    }

    pub fn from_file(path: &Path) -> std::io::Result<Self> {
        Ok(SpecSource::new(path.display().to_string(), std::fs::read_to_string(path)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
    pub severity: Severity,
    pub message: String,
}

pub(crate) type Diagnostic = ParseDiagnostic;

impl ParseDiagnostic {
    pub(crate) fn error(pos: Pos, message: impl Into<String>) -> Self {
        ParseDiagnostic { line: pos.line, column: pos.col, severity: Severity::Error, message: message.into() }
    }

    fn warning(pos: Pos, message: impl Into<String>) -> Self {
        ParseDiagnostic { severity: Severity::Warning, ..Self::error(pos, message) }
    }

    /// `name:line:col: severity: message`.
    pub fn render(&self, source_name: &str) -> String {
        format!("{source_name}:{}:{}: {}: {}", self.line, self.column, self.severity, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedSpec {
    pub name: String,
    pub spec: RecurrenceSpec,
    pub warnings: Vec<ParseDiagnostic>,
}

/// Parses one recurrence. On failure the diagnostics hold at least one error.
pub fn parse_spec(src: &SpecSource) -> Result<ParsedSpec, Vec<ParseDiagnostic>> {
    let tokens = lexer::lex(&src.text).map_err(|d| vec![d])?;
    let (name, spec, beta_pos) = parser::Parser::new(tokens).spec().map_err(|d| vec![d])?;
    let mut warnings = Vec::new();
    if parser::has_even_terms(&spec.beta) {
        warnings.push(ParseDiagnostic::warning(
            beta_pos,
            "beta has even powers of x, so no even/odd pair system can be derived",
        ));
    }
    Ok(ParsedSpec { name, spec, warnings })
}

/// Canonical text: terms ascending in `x`, the `n`-free part of each power
/// before its `n` part, coefficients of 1 left implicit.
pub fn format_spec(name: &str, spec: &RecurrenceSpec) -> String {
    format!(
        "recurrence {name} {{\n    alpha = {};\n    beta = {};\n    init = {} @ {};\n}}\n",
        format_family(&spec.alpha),
        format_family(&spec.beta),
        format_poly(&spec.initial),
        spec.start_index
    )
}

pub fn format_family(f: &CoeffFamily) -> String {
    let terms = f
        .terms()
        .into_iter()
        .enumerate()
        .flat_map(|(k, (c, s))| [(c, k, false), (s, k, true)]);
    join_terms(terms)
}

pub fn format_poly(p: &IntPoly) -> String {
    join_terms(p.coeffs().iter().cloned().enumerate().map(|(k, c)| (c, k, false)))
}

fn join_terms(terms: impl Iterator<Item = (BigInt, usize, bool)>) -> String {
    let mut out = String::new();
    for (c, k, with_n) in terms.filter(|(c, ..)| !c.is_zero()) {
        let body = monomial(k, with_n);
        let magnitude = c.abs();
        let text = match (magnitude.is_one(), body.is_empty()) {
            (_, true) => magnitude.to_string(),
            (true, false) => body,
            (false, false) => format!("{magnitude}*{body}"),
        };
        match (out.is_empty(), c.is_negative()) {
            (true, false) => out.push_str(&text),
            (true, true) => out.push_str(&format!("-{text}")),
            (false, false) => out.push_str(&format!(" + {text}")),
            (false, true) => out.push_str(&format!(" - {text}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn monomial(k: usize, with_n: bool) -> String {
    let x = match k {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{k}"),
    };
    match (with_n, x.is_empty()) {
        (false, _) => x,
        (true, true) => "n".to_string(),
        (true, false) => format!("n*{x}"),
    }
}
