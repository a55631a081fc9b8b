//! Dense univariate polynomials with exact coefficients.
//!
//! [`IntPoly`] is the value type for every enumerative polynomial in the crate.
//! [`RatPoly`] shows up only where division is unavoidable: Sturm chains, gcds,
//! and series tables.
//!
//! Both types keep their coefficient vector normalized, index `i` holding the
//! coefficient of `x^i` and no trailing zeros. The zero polynomial is the empty
//! vector and has no degree.

mod rat;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use rat::RatPoly;

/// The declared degree parameter `n` of a reversal or symmetry window.
///
/// It may exceed the actual degree: `x^n f(1/x)` depends on the chosen `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeBound(pub usize);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Positive leading coefficient.
    pub fn is_standard(&self) -> bool {
        self.leading().is_some_and(Signed::is_positive)
    }

    /// Largest `m` with `x^m` dividing `self`; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Removes the factor `x^m` of maximal `m`, returning `(m, self / x^m)`.
    pub fn strip_origin(&self) -> (usize, IntPoly) {
        match self.valuation() {
            None => (0, IntPoly::zero()),
            Some(m) => (m, IntPoly::new(self.coeffs[m..].to_vec())),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact value at a rational point (Horner).
    pub fn evaluate(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn evaluate_int(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Sign of `self(num/den)` for `den > 0`, computed on the homogenized
    /// integer form so no fractions are built.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> i8 {
        let Some(d) = self.degree() else { return 0 };
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        // acc = sum c_i num^i den^(d-i), built from the top down
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if i == d {
                acc = c.clone();
            } else {
                den_pow *= den;
                acc = acc * num + c * &den_pow;
            }
        }
        sign_of(&acc)
    }

    /// `x^n f(1/x)`: the coefficient sequence reversed within `0..=n`.
    pub fn reverse(&self, n: DegreeBound) -> Result<IntPoly> {
        let Some(d) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if n.0 < d {
            return Err(Error::DegreeBound {
                bound: n.0,
                degree: d,
            });
        }
        let mut coeffs = vec![BigInt::zero(); n.0 + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n.0 - i] = c.clone();
        }
        Ok(IntPoly::new(coeffs))
    }

    /// Compressed even/odd parts `(f^E, f^O)` with `f(x) = f^E(x^2) + x f^O(x^2)`.
    pub fn hb_split(&self) -> (IntPoly, IntPoly) {
        let even = self.coeffs.iter().step_by(2).cloned().collect();
        let odd = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        (IntPoly::new(even), IntPoly::new(odd))
    }

    /// `e(x^2) + x o(x^2)`, the inverse of [`IntPoly::hb_split`].
    pub fn hb_join(even: &IntPoly, odd: &IntPoly) -> IntPoly {
        let len = (2 * even.coeffs.len()).max(2 * odd.coeffs.len() + 1);
        let mut coeffs = vec![BigInt::zero(); len];
        for (k, c) in even.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        for (k, c) in odd.coeffs.iter().enumerate() {
            coeffs[2 * k + 1] = c.clone();
        }
        IntPoly::new(coeffs)
    }

    /// Uncompressed parts `(f^e, f^o)` with `f = f^e + f^o`.
    pub fn even_odd_uncompressed(&self) -> (IntPoly, IntPoly) {
        let pick = |parity: usize| {
            IntPoly::new(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if i % 2 == parity { c.clone() } else { BigInt::zero() })
                    .collect(),
            )
        };
        (pick(0), pick(1))
    }

    /// `f(x^2)`.
    pub fn substitute_square(&self) -> IntPoly {
        IntPoly::hb_join(self, &IntPoly::zero())
    }

    /// `f(c x)`.
    pub fn substitute_scaled(&self, c: &BigInt) -> IntPoly {
        let mut power = BigInt::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power *= c;
        }
        IntPoly::new(coeffs)
    }

    /// Quotient of an exact division in `Z[x]`.
    ///
    /// Fails with the remainder left over when `g` does not divide `self`.
    pub fn exact_div(&self, g: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem_integral(g)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision { remainder: r })
        }
    }

    /// Long division over the integers, stopping as soon as the leading
    /// coefficient of the running remainder is not divisible by `lc(g)`.
    fn div_rem_integral(&self, g: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let gd = g.degree().ok_or(Error::DivisionByZero)?;
        let lc = &g.coeffs[gd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(gd)];
        while rem.len() > gd {
            let top = rem.len() - 1;
            let (q, r) = rem[top].div_rem(lc);
            if !r.is_zero() {
                break;
            }
            let shift = top - gd;
            for (j, gc) in g.coeffs.iter().enumerate() {
                rem[shift + j] -= &q * gc;
            }
            quot[shift] = q;
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::from(self)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Result<IntPoly> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial JSON must be an array".into()))?;
        let coeffs = items
            .iter()
            .map(|item| {
                item.as_str()
                    .and_then(|s| s.parse::<BigInt>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad coefficient {item}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

pub(crate) fn sign_of(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_terms(f, self.coeffs.iter())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl std::str::FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        text::parse_int_poly(s)
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::new(coeffs)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1, 1]) + &p(&[0, 2]), p(&[1, 3]));
        assert_eq!(&p(&[1, 3]) + &IntPoly::zero(), p(&[1, 3]));
        assert_eq!(&p(&[1, 3]) + &p(&[3, 1]), p(&[4, 4]));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), IntPoly::zero());
    }

    #[test]
    fn mul_examples() {
        let one_plus_x = p(&[1, 1]);
        assert_eq!(&one_plus_x * &one_plus_x, p(&[1, 2, 1]));
        assert_eq!(&one_plus_x.pow(2) * &one_plus_x, p(&[1, 3, 3, 1]));
        assert_eq!(&one_plus_x * &IntPoly::zero(), IntPoly::zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[1, 3, 3, 1]).derivative(), p(&[3, 6, 3]));
        assert_eq!(p(&[7]).derivative(), IntPoly::zero());
        assert_eq!(p(&[0, 1, 1, 1]).derivative(), p(&[1, 2, 3]));
    }

    #[test]
    fn evaluate_examples() {
        let one = BigRational::one();
        assert_eq!(p(&[1, 6, 1]).evaluate(&one), BigRational::from_integer(8.into()));
        assert_eq!(
            p(&[5, 6, 1]).evaluate(&BigRational::zero()),
            BigRational::from_integer(5.into())
        );
        assert_eq!(p(&[0, 1, 4, 3]).evaluate(&one), BigRational::from_integer(8.into()));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(p(&[1, 2]).evaluate(&half), BigRational::from_integer(2.into()));
    }

    #[test]
    fn sign_at_matches_evaluate() {
        let f = p(&[-3, 1, 2]);
        for (num, den) in [(-5, 3), (0, 1), (1, 2), (7, 4), (-1, 1)] {
            let exact = f.evaluate(&BigRational::new(num.into(), den.into()));
            let expected = if exact.is_positive() { 1 } else if exact.is_negative() { -1 } else { 0 };
            assert_eq!(f.sign_at(&num.into(), &den.into()), expected);
        }
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p(&[1, 3]).reverse(DegreeBound(1)).unwrap(), p(&[3, 1]));
        assert_eq!(p(&[0, 4, 10, 1]).reverse(DegreeBound(3)).unwrap(), p(&[1, 10, 4]));
        assert_eq!(p(&[2]).reverse(DegreeBound(2)).unwrap(), p(&[0, 0, 2]));
        assert!(matches!(
            p(&[1, 2, 3]).reverse(DegreeBound(1)),
            Err(Error::DegreeBound { bound: 1, degree: 2 })
        ));
    }

    #[test]
    fn hb_split_examples() {
        assert_eq!(p(&[1, 3, 3, 1]).hb_split(), (p(&[1, 3]), p(&[3, 1])));
        assert_eq!(p(&[0, 1, 3, 7, 3, 1]).hb_split(), (p(&[0, 3, 3]), p(&[1, 7, 1])));
        assert_eq!(IntPoly::zero().hb_split(), (IntPoly::zero(), IntPoly::zero()));
    }

    #[test]
    fn hb_join_examples() {
        assert_eq!(IntPoly::hb_join(&p(&[1, 3]), &p(&[3, 1])), p(&[1, 3, 3, 1]));
        assert_eq!(IntPoly::hb_join(&p(&[2, 5]), &IntPoly::zero()), p(&[2, 0, 5]));
        assert_eq!(IntPoly::hb_join(&p(&[1]), &p(&[1])), p(&[1, 1]));
    }

    #[test]
    fn even_odd_uncompressed_examples() {
        assert_eq!(p(&[1, 3, 3, 1]).even_odd_uncompressed(), (p(&[1, 0, 3]), p(&[0, 3, 0, 1])));
        assert_eq!(p(&[1, 0, 4]).even_odd_uncompressed(), (p(&[1, 0, 4]), IntPoly::zero()));
        assert_eq!(p(&[0, 1, 0, -1]).even_odd_uncompressed(), (IntPoly::zero(), p(&[0, 1, 0, -1])));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p(&[0, 1, 2, 1]).exact_div(&IntPoly::x()).unwrap(), p(&[1, 2, 1]));
        assert_eq!(p(&[4, 1]).exact_div(&IntPoly::one()).unwrap(), p(&[4, 1]));
        match p(&[1, 1]).exact_div(&IntPoly::x()) {
            Err(Error::InexactDivision { remainder }) => assert_eq!(remainder, p(&[1])),
            other => panic!("expected inexact division, got {other:?}"),
        }
        assert!(matches!(p(&[1]).exact_div(&IntPoly::zero()), Err(Error::DivisionByZero)));
        // leading coefficient not divisible
        assert!(p(&[1, 1]).exact_div(&p(&[1, 2])).is_err());
        assert_eq!(p(&[2, 6, 4]).exact_div(&p(&[2])).unwrap(), p(&[1, 3, 2]));
    }

    #[test]
    fn substitutions() {
        assert_eq!(p(&[1, 1]).substitute_scaled(&BigInt::from(-1)), p(&[1, -1]));
        assert_eq!(p(&[1, 2, 3]).substitute_square(), p(&[1, 0, 2, 0, 3]));
        assert_eq!(p(&[0, 0, 3, 1]).strip_origin(), (2, p(&[3, 1])));
    }

    #[test]
    fn json_form() {
        let f = p(&[1, 0, -3]);
        assert_eq!(f.to_json().to_string(), r#"["1","0","-3"]"#);
        assert_eq!(IntPoly::from_json(&f.to_json()).unwrap(), f);
        let via_serde: IntPoly = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(via_serde, f);
        assert_eq!(IntPoly::zero().to_json().to_string(), "[]");
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..20, 0..7).prop_map(|v| IntPoly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn hb_round_trip(f in small_poly()) {
            let (e, o) = f.hb_split();
            prop_assert_eq!(IntPoly::hb_join(&e, &o), f.clone());
            for i in 0..f.coeffs().len() {
                let part = if i % 2 == 0 { &e } else { &o };
                prop_assert_eq!(f.coeff(i), part.coeff(i / 2));
            }
        }

        #[test]
        fn reverse_is_involution(f in small_poly(), extra in 0usize..4) {
            let n = DegreeBound(f.degree().unwrap_or(0) + extra);
            prop_assert_eq!(f.reverse(n).unwrap().reverse(n).unwrap(), f);
        }

        #[test]
        fn ring_laws(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!((&f + &g).derivative(), &f.derivative() + &g.derivative());
            prop_assert_eq!((&f * &g).derivative(), &(&f.derivative() * &g) + &(&f * &g.derivative()));
        }

        #[test]
        fn exact_div_inverts_mul(f in small_poly(), g in small_poly()) {
            prop_assume!(!g.is_zero());
            prop_assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
        }

        #[test]
        fn text_round_trip(f in small_poly()) {
            let text = f.to_string();
            prop_assert_eq!(text.parse::<IntPoly>().unwrap(), f);
        }
    }
}
