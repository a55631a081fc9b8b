use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{text, IntPoly};
use crate::error::{Error, Result};

/// Polynomial over the rationals; `BigRational` keeps every entry reduced with
/// a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> RatPoly {
        let mut acc = RatPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn evaluate(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn div_rem(&self, g: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let gd = g.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = g.coeffs[gd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(gd)];
        while rem.len() > gd {
            let top = rem.len() - 1;
            let q = &rem[top] * &lc_inv;
            let shift = top - gd;
            for (j, gc) in g.coeffs.iter().enumerate() {
                rem[shift + j] -= &q * gc;
            }
            quot[shift] = q;
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((RatPoly::new(quot), RatPoly::new(rem)))
    }

    /// Monic gcd (zero when both are zero).
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// The integer polynomial obtained by multiplying by a positive rational so
    /// that the coefficients are coprime integers. Preserves the sign of every
    /// evaluation.
    pub fn primitive_integer(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let denom_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        IntPoly::new(ints.into_iter().map(|c| c / &content).collect())
    }

    /// `Some` when every coefficient is an integer.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        RatPoly {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_terms(f, self.coeffs.iter())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

impl std::str::FromStr for RatPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        text::parse_rat_poly(s)
    }
}

impl<'a> Add<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        RatPoly::new(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Sub<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(c: &[i64]) -> RatPoly {
        RatPoly::from(&IntPoly::from_i64s(c))
    }

    #[test]
    fn div_rem_and_gcd() {
        // (x+1)(x+2) / (x+1)
        let (q, rem) = r(&[2, 3, 1]).div_rem(&r(&[1, 1])).unwrap();
        assert_eq!(q, r(&[2, 1]));
        assert!(rem.is_zero());
        // gcd((x+1)^2 (x-3), (x+1)(x+5)) = x + 1
        let a = &(&r(&[1, 1]) * &r(&[1, 1])) * &r(&[-3, 1]);
        let b = &r(&[1, 1]) * &r(&[5, 1]);
        assert_eq!(a.gcd(&b), r(&[1, 1]));
        assert_eq!(r(&[3]).gcd(&r(&[0, 1])), r(&[1]));
    }

    #[test]
    fn primitive_integer_keeps_sign() {
        let p = RatPoly::new(vec![
            BigRational::new((-1).into(), 2.into()),
            BigRational::new(3.into(), 4.into()),
        ]);
        assert_eq!(p.primitive_integer(), IntPoly::from_i64s(&[-2, 3]));
        assert_eq!(r(&[4, 6]).primitive_integer(), IntPoly::from_i64s(&[2, 3]));
        assert_eq!(r(&[-4, -6]).primitive_integer(), IntPoly::from_i64s(&[-2, -3]));
    }
}
