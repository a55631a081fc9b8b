//! Hurwitz stability by the Routh array, and the even/odd split criterion it
//! is equivalent to.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::roots::{has_root_in, interlaces, root_report};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// All roots in the open left half plane. With `strip_origin` the factor `x^m`
/// of maximal `m` is removed first. A vanishing Routh pivot is reported as
/// not (strictly) stable.
pub fn hurwitz_stable(f: &IntPoly, strip_origin: bool) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_standard() {
        return Err(Error::NotStandard);
    }
    let g = if strip_origin { f.strip_origin().1 } else { f.clone() };
    Ok(routh_first_column_positive(&g))
}

fn routh_first_column_positive(f: &IntPoly) -> bool {
    let d = f.degree().expect("nonzero");
    let coeff = |i: isize| {
        if i < 0 {
            BigRational::zero()
        } else {
            BigRational::from_integer(f.coeff(i as usize))
        }
    };
    let width = d / 2 + 1;
    let row = |start: isize| (0..width).map(|j| coeff(start - 2 * j as isize)).collect::<Vec<_>>();
    let mut prev = row(d as isize);
    let mut cur = row(d as isize - 1);
    if !prev[0].is_positive() {
        return false;
    }
    for _ in 0..d {
        if !cur[0].is_positive() {
            return false;
        }
        let next: Vec<BigRational> = (0..width)
            .map(|j| {
                let a = prev.get(j + 1).cloned().unwrap_or_default();
                let b = cur.get(j + 1).cloned().unwrap_or_default();
                (&cur[0] * a - &prev[0] * b) / &cur[0]
            })
            .collect();
        prev = std::mem::replace(&mut cur, next);
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteBiehlerReport {
    pub input: IntPoly,
    pub even: IntPoly,
    pub odd: IntPoly,
    /// `F` is Hurwitz stable.
    pub stable: bool,
    /// `F^E`, `F^O` standard with only nonpositive zeros and `F^O ≺ F^E`.
    pub split_condition: bool,
    /// `F(iy) = 0` for some real `y`: a root on the imaginary axis, where the
    /// split condition can hold although `F` is not strictly stable.
    pub boundary: bool,
}

impl HermiteBiehlerReport {
    /// The two verdicts agree, or differ only through an imaginary-axis root.
    pub fn consistent(&self) -> bool {
        self.stable == self.split_condition || (self.boundary && !self.stable)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "input": self.input.to_string(),
            "even": self.even.to_string(),
            "odd": self.odd.to_string(),
            "stable": self.stable,
            "split_condition": self.split_condition,
            "boundary": self.boundary,
            "consistent": self.consistent(),
        })
    }
}

fn nonpositive_real_rooted(f: &IntPoly) -> Result<bool> {
    let r = root_report(f)?;
    Ok(r.all_real && r.all_nonpositive)
}

fn split_condition(even: &IntPoly, odd: &IntPoly) -> Result<bool> {
    if odd.is_zero() {
        // only a positive constant is stable among polynomials in x^2
        return Ok(even.degree() == Some(0) && even.is_standard());
    }
    if !even.is_standard() || !odd.is_standard() {
        return Ok(false);
    }
    Ok(nonpositive_real_rooted(even)? && nonpositive_real_rooted(odd)? && interlaces(odd, even)?)
}

/// Evaluates both sides of the stability criterion on `F = F^E(x^2) + x F^O(x^2)`.
pub fn hermite_biehler_check(f: &IntPoly) -> Result<HermiteBiehlerReport> {
    let stable = hurwitz_stable(f, false)?;
    let (even, odd) = f.hb_split();
    let split_condition = split_condition(&even, &odd)?;
    // F(iy) = E(-y^2) + iy O(-y^2): y = 0 needs E(0) = 0, y != 0 needs a
    // common root of E and O on the negative axis
    let common = if odd.is_zero() {
        even.clone()
    } else {
        even.to_rat().gcd(&odd.to_rat()).primitive_integer()
    };
    let boundary = even.coeff(0).is_zero() || {
        let bound: BigInt = common.coeffs().iter().map(|c| c.abs()).sum::<BigInt>() + 1u32;
        has_root_in(&common, &-BigRational::from_integer(bound), &BigRational::zero())
    };
    Ok(HermiteBiehlerReport { input: f.clone(), even, odd, stable, split_condition, boundary })
}
