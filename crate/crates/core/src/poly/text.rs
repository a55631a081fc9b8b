//! Canonical text form: `c0 + c1*x + c2*x^2 + ...`, ascending, zero terms
//! omitted, every coefficient written out. The zero polynomial is `0`.

use std::fmt::{self, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{IntPoly, RatPoly};
use crate::error::{Error, Result};

pub(super) fn write_terms<'a, C>(f: &mut fmt::Formatter<'_>, coeffs: impl Iterator<Item = &'a C>) -> fmt::Result
where
    C: Display + Signed + Zero + 'a,
{
    let mut first = true;
    for (i, c) in coeffs.enumerate() {
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        write!(f, "{}", c.abs())?;
        match i {
            0 => {}
            1 => write!(f, "*x")?,
            _ => write!(f, "*x^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Splits canonical text into `(coefficient text, exponent)` pairs, sign folded
/// into the coefficient text.
fn terms(src: &str) -> Result<Vec<(String, usize)>> {
    let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial text".into()));
    }
    let mut out = Vec::new();
    let mut rest = compact.as_str();
    let mut sign = "";
    if let Some(stripped) = rest.strip_prefix('-') {
        sign = "-";
        rest = stripped;
    }
    loop {
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = &rest[..end];
        let (coeff, exp) = match term.split_once('*') {
            None => (term, 0),
            Some((c, var)) => {
                let exp = match var {
                    "x" => 1,
                    _ => var
                        .strip_prefix("x^")
                        .and_then(|k| k.parse::<usize>().ok())
                        .ok_or_else(|| Error::Parse(format!("bad monomial {term:?}")))?,
                };
                (c, exp)
            }
        };
        if coeff.is_empty() {
            return Err(Error::Parse(format!("missing coefficient in {term:?}")));
        }
        out.push((format!("{sign}{coeff}"), exp));
        if end == rest.len() {
            break;
        }
        sign = if rest.as_bytes()[end] == b'-' { "-" } else { "" };
        rest = &rest[end + 1..];
    }
    Ok(out)
}

pub(super) fn parse_int_poly(src: &str) -> Result<IntPoly> {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for (c, exp) in terms(src)? {
        let value: BigInt = c
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer coefficient {c:?}")))?;
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::zero());
        }
        coeffs[exp] += value;
    }
    Ok(IntPoly::new(coeffs))
}

pub(super) fn parse_rat_poly(src: &str) -> Result<RatPoly> {
    let mut coeffs: Vec<BigRational> = Vec::new();
    for (c, exp) in terms(src)? {
        let value = parse_rational(&c)?;
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigRational::zero());
        }
        coeffs[exp] += value;
    }
    Ok(RatPoly::new(coeffs))
}

pub(crate) fn parse_rational(src: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {src:?}"));
    match src.split_once('/') {
        None => Ok(BigRational::from_integer(src.parse().map_err(|_| bad())?)),
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}
