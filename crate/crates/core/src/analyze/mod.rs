//! Structural checks on integer polynomials. Everything is exact; no check
//! ever evaluates in floating point.

mod roots;
mod stability;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{DegreeBound, IntPoly};

pub use roots::{distinct_real_roots, interlaces, interlacing, root_report, Interlacing, RootInterval, RootReport};
pub use stability::{hermite_biehler_check, hurwitz_stable, HermiteBiehlerReport};

/// `f_i = f_{n-i}` for `0 <= i <= n`. A polynomial of degree above `n` is not
/// symmetric in that window.
pub fn is_symmetric(f: &IntPoly, n: DegreeBound) -> bool {
    first_asymmetry(f, n).is_none()
}

fn first_asymmetry(f: &IntPoly, n: DegreeBound) -> Option<usize> {
    if f.degree().is_some_and(|d| d > n.0) {
        return Some(n.0 + 1);
    }
    (0..=n.0 / 2).find(|&i| f.coeff(i) != f.coeff(n.0 - i))
}

/// Weakly increasing then weakly decreasing coefficients, together with the
/// inclusive index range where the maximum is attained. `None` for the zero
/// polynomial.
pub fn is_unimodal(f: &IntPoly) -> (bool, Option<(usize, usize)>) {
    let c = f.coeffs();
    let Some(max) = c.iter().max() else {
        return (true, None);
    };
    let first = c.iter().position(|v| v == max).unwrap();
    let last = c.iter().rposition(|v| v == max).unwrap();
    let rising = c[..=first].windows(2).all(|w| w[0] <= w[1]);
    let falling = c[last..].windows(2).all(|w| w[0] >= w[1]);
    let plateau = c[first..=last].iter().all(|v| v == max);
    (rising && falling && plateau, Some((first, last)))
}

/// Visiting order `0, n, 1, n-1, 2, …` of the chain in
/// [`is_alternatingly_increasing`].
fn alternating_chain(n: usize) -> Vec<usize> {
    let (mut lo, mut hi) = (0usize, n);
    let mut out = Vec::with_capacity(n + 1);
    while lo <= hi {
        out.push(lo);
        if hi != lo {
            out.push(hi);
        }
        lo += 1;
        if hi == 0 {
            break;
        }
        hi -= 1;
    }
    out
}

fn first_alternation_failure(f: &IntPoly, n: DegreeBound) -> Option<(usize, usize)> {
    if f.degree().is_some_and(|d| d > n.0) {
        return Some((n.0, n.0 + 1));
    }
    alternating_chain(n.0)
        .windows(2)
        .find(|w| f.coeff(w[0]) > f.coeff(w[1]))
        .map(|w| (w[0], w[1]))
}

/// `f_0 <= f_n <= f_1 <= f_{n-1} <= …`, coefficients padded with zeros up to `n`.
pub fn is_alternatingly_increasing(f: &IntPoly, n: DegreeBound) -> bool {
    first_alternation_failure(f, n).is_none()
}

/// Coordinates of a symmetric polynomial in the basis `x^k (1+x)^{n-2k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaVector {
    pub n: usize,
    pub gamma: Vec<BigInt>,
}

impl GammaVector {
    pub fn recompose(&self) -> IntPoly {
        let one_plus_x = IntPoly::from_i64s(&[1, 1]);
        self.gamma.iter().enumerate().fold(IntPoly::zero(), |acc, (k, g)| {
            &acc + &one_plus_x.pow((self.n - 2 * k) as u32).shift(k).scale(g)
        })
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gamma.iter().all(|g| *g >= BigInt::zero())
    }
}

pub fn gamma_vector(f: &IntPoly, n: DegreeBound) -> Result<GammaVector> {
    if let Some(i) = first_asymmetry(f, n) {
        return Err(Error::Asymmetric(i));
    }
    let n = n.0;
    let one_plus_x = IntPoly::from_i64s(&[1, 1]);
    let mut rest = f.clone();
    let mut gamma = Vec::with_capacity(n / 2 + 1);
    for k in 0..=n / 2 {
        let g = rest.coeff(k);
        rest = &rest - &one_plus_x.pow((n - 2 * k) as u32).shift(k).scale(&g);
        gamma.push(g);
    }
    if !rest.is_zero() {
        return Err(Error::Residue { residue: rest });
    }
    Ok(GammaVector { n, gamma })
}

/// Coordinates in the basis `(1+x)^ν x^k (1+x^2)^{n-k}`, `0 <= k <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiGammaVector {
    pub nu: u8,
    pub n: usize,
    pub lambda: Vec<BigInt>,
}

impl SemiGammaVector {
    pub fn recompose(&self) -> IntPoly {
        let one_plus_x2 = IntPoly::from_i64s(&[1, 0, 1]);
        let sum = self.lambda.iter().enumerate().fold(IntPoly::zero(), |acc, (k, l)| {
            &acc + &one_plus_x2.pow((self.n - k) as u32).shift(k).scale(l)
        });
        &sum * &IntPoly::from_i64s(&[1, 1]).pow(u32::from(self.nu))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.lambda.iter().all(|l| *l >= BigInt::zero())
    }
}

pub fn semi_gamma_vector(f: &IntPoly, nu: u8, n: usize) -> Result<SemiGammaVector> {
    if nu > 1 {
        return Err(Error::Domain(format!("nu must be 0 or 1, got {nu}")));
    }
    let mut rest = if nu == 1 {
        f.exact_div(&IntPoly::from_i64s(&[1, 1])).map_err(|_| Error::NotDivisible)?
    } else {
        f.clone()
    };
    let one_plus_x2 = IntPoly::from_i64s(&[1, 0, 1]);
    let mut lambda = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let l = rest.coeff(k);
        rest = &rest - &one_plus_x2.pow((n - k) as u32).shift(k).scale(&l);
        lambda.push(l);
    }
    if !rest.is_zero() {
        return Err(Error::Residue { residue: rest });
    }
    Ok(SemiGammaVector { nu, n, lambda })
}

/// The analyzer checks addressable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Symmetric,
    Unimodal,
    AlternatinglyIncreasing,
    Gamma,
    SemiGamma,
    RealRooted,
    Stable,
    HermiteBiehler,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Symmetric,
        Check::Unimodal,
        Check::AlternatinglyIncreasing,
        Check::Gamma,
        Check::SemiGamma,
        Check::RealRooted,
        Check::Stable,
        Check::HermiteBiehler,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Symmetric => "symmetric",
            Check::Unimodal => "unimodal",
            Check::AlternatinglyIncreasing => "alternating",
            Check::Gamma => "gamma",
            Check::SemiGamma => "semi_gamma",
            Check::RealRooted => "real_rooted",
            Check::Stable => "stable",
            Check::HermiteBiehler => "hermite_biehler",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Outcome of one named check on one polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub check: Check,
    pub input: IntPoly,
    pub verdict: bool,
    /// Failing index pair, coordinates, residue or root interval, as text.
    pub witness: Option<String>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check.as_str(),
            "input": self.input.to_string(),
            "verdict": self.verdict,
            "witness": self.witness,
        })
    }
}

fn join(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Runs `check` on `f` with window `n`. The semi-γ check uses `ν = 1` when
/// `1 + x` divides `f` and the window `n` as the basis size.
pub fn run_check(check: Check, f: &IntPoly, n: DegreeBound) -> Result<Report> {
    let (verdict, witness) = match check {
        Check::Symmetric => match first_asymmetry(f, n) {
            None => (true, None),
            Some(i) => (false, Some(format!("({i}, {})", n.0.saturating_sub(i)))),
        },
        Check::Unimodal => match is_unimodal(f) {
            (ok, Some((a, b))) => (ok, Some(format!("modes {a}..={b}"))),
            (ok, None) => (ok, None),
        },
        Check::AlternatinglyIncreasing => match first_alternation_failure(f, n) {
            None => (true, None),
            Some((i, j)) => (false, Some(format!("({i}, {j})"))),
        },
        Check::Gamma => match gamma_vector(f, n) {
            Ok(g) => (g.is_nonnegative(), Some(join(&g.gamma))),
            Err(Error::Asymmetric(i)) => (false, Some(format!("asymmetric at {i}"))),
            Err(e) => return Err(e),
        },
        Check::SemiGamma => {
            let nu = u8::from(!f.is_zero() && f.evaluate_int(&-BigInt::one()).is_zero());
            match semi_gamma_vector(f, nu, n.0) {
                Ok(s) => (s.is_nonnegative(), Some(format!("nu = {nu}, lambda = {}", join(&s.lambda)))),
                Err(Error::Residue { residue }) => (false, Some(format!("residue {residue}"))),
                Err(e) => return Err(e),
            }
        }
        Check::RealRooted => {
            let r = root_report(f)?;
            let witness = r
                .intervals
                .iter()
                .map(|iv| format!("({}, {}]x{}", iv.lo, iv.hi, iv.multiplicity))
                .collect::<Vec<_>>()
                .join(" ");
            (r.all_real && r.all_nonpositive, Some(witness))
        }
        Check::Stable => (hurwitz_stable(f, true)?, None),
        Check::HermiteBiehler => {
            let (_, g) = f.strip_origin();
            let r = hermite_biehler_check(&g)?;
            (
                r.consistent(),
                Some(format!("stable = {}, split = {}, boundary = {}", r.stable, r.split_condition, r.boundary)),
            )
        }
    };
    Ok(Report { check, input: f.clone(), verdict, witness })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn symmetry() {
        assert!(is_symmetric(&poly(&[1, 3, 3, 1]), DegreeBound(3)));
        assert!(!is_symmetric(&poly(&[1, 2]), DegreeBound(1)));
        assert!(is_symmetric(&poly(&[1]), DegreeBound(0)));
        assert!(is_symmetric(&poly(&[0, 1, 0]), DegreeBound(2)));
        assert!(!is_symmetric(&poly(&[1, 1, 1]), DegreeBound(1)));
    }

    #[test]
    fn unimodality() {
        assert_eq!(is_unimodal(&poly(&[1, 4, 1])), (true, Some((1, 1))));
        assert_eq!(is_unimodal(&poly(&[1, 10, 4])), (true, Some((1, 1))));
        assert!(!is_unimodal(&poly(&[1, 0, 1])).0);
        assert_eq!(is_unimodal(&poly(&[1, 3, 3, 1])), (true, Some((1, 2))));
        assert!(!is_unimodal(&poly(&[3, 1, 3, 3])).0);
        assert_eq!(is_unimodal(&IntPoly::zero()), (true, None));
    }

    #[test]
    fn alternating_increase() {
        assert_eq!(alternating_chain(3), vec![0, 3, 1, 2]);
        assert_eq!(alternating_chain(2), vec![0, 2, 1]);
        assert_eq!(alternating_chain(0), vec![0]);
        assert!(is_alternatingly_increasing(&poly(&[0, 4, 10, 1]), DegreeBound(3)));
        assert!(is_alternatingly_increasing(&poly(&[1, 10, 4]), DegreeBound(2)));
        assert!(!is_alternatingly_increasing(&poly(&[2, 1]), DegreeBound(1)));
    }

    #[test]
    fn gamma_examples() {
        let g = gamma_vector(&poly(&[1, 3, 3, 1]), DegreeBound(3)).unwrap();
        assert_eq!(g.gamma, ints(&[1, 0]));
        let g = gamma_vector(&poly(&[1, 7, 1]), DegreeBound(2)).unwrap();
        assert_eq!(g.gamma, ints(&[1, 5]));
        assert!(matches!(gamma_vector(&poly(&[1, 3]), DegreeBound(1)), Err(Error::Asymmetric(0))));
    }

    #[test]
    fn semi_gamma_examples() {
        let l3 = poly(&[0, 1, 3, 7, 3, 1]);
        assert_eq!(semi_gamma_vector(&l3, 0, 3).unwrap().lambda, ints(&[0, 1, 3, 5]));
        assert_eq!(semi_gamma_vector(&poly(&[0, 1, 0, 1]), 0, 2).unwrap().lambda, ints(&[0, 1, 0]));
        assert_eq!(semi_gamma_vector(&poly(&[1, 1]), 1, 0).unwrap().lambda, ints(&[1]));
        assert!(matches!(semi_gamma_vector(&poly(&[1, 2]), 1, 0), Err(Error::NotDivisible)));
        assert!(matches!(semi_gamma_vector(&poly(&[1, 1]), 0, 0), Err(Error::Residue { .. })));
    }

    #[test]
    fn stability_examples() {
        assert!(hurwitz_stable(&poly(&[1, 3, 3, 1]), false).unwrap());
        // C_3 = (1+x)^3 A_3
        let c3 = &poly(&[1, 3, 3, 1]) * &poly(&[1, 4, 1]);
        assert!(hurwitz_stable(&c3, false).unwrap());
        let t3 = poly(&[0, 1, 3, 2]);
        assert!(!hurwitz_stable(&t3, false).unwrap());
        assert!(hurwitz_stable(&t3, true).unwrap());
        assert!(hurwitz_stable(&poly(&[1, 1, 1]), false).unwrap());
        assert!(!hurwitz_stable(&poly(&[1, 0, 1]), false).unwrap());
        assert!(!hurwitz_stable(&poly(&[1, -1, 1]), false).unwrap());
        // x^3 + x^2 + x + 6 has roots with positive real part
        assert!(!hurwitz_stable(&poly(&[6, 1, 1, 1]), false).unwrap());
        assert!(hurwitz_stable(&IntPoly::zero(), false).is_err());
        assert!(hurwitz_stable(&poly(&[1, -1]), false).is_err());
    }

    #[test]
    fn hermite_biehler_examples() {
        let r = hermite_biehler_check(&poly(&[1, 3, 3, 1])).unwrap();
        assert!(r.stable && r.split_condition && !r.boundary && r.consistent());
        let r = hermite_biehler_check(&poly(&[1, 1, 1])).unwrap();
        assert!(r.stable && r.split_condition);
        let r = hermite_biehler_check(&poly(&[0, 1, 1])).unwrap();
        assert!(!r.stable && r.split_condition && r.boundary && r.consistent());
        // (1 + x^2)(1 + x): a pair of roots on the imaginary axis
        let r = hermite_biehler_check(&poly(&[1, 1, 1, 1])).unwrap();
        assert!(!r.stable && r.boundary && r.consistent());
        let r = hermite_biehler_check(&poly(&[6, 1, 1, 1])).unwrap();
        assert!(!r.stable && !r.split_condition && r.consistent());
        let r = hermite_biehler_check(&poly(&[5])).unwrap();
        assert!(r.stable && r.split_condition);
    }

    #[test]
    fn check_reports() {
        let r = run_check(Check::Symmetric, &poly(&[1, 2]), DegreeBound(1)).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witness.as_deref(), Some("(0, 1)"));
        let r = run_check(Check::SemiGamma, &poly(&[1, 1]), DegreeBound(0)).unwrap();
        assert!(r.verdict);
        assert_eq!(r.to_json()["check"], "semi_gamma");
        for c in Check::ALL {
            assert_eq!(c.as_str().parse::<Check>().unwrap(), c);
        }
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-20i64..=20, 0..8).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn gamma_round_trip(half in proptest::collection::vec(-20i64..=20, 1..6), odd in any::<bool>()) {
            let mut c = half.clone();
            let mirror: Vec<i64> = half.iter().rev().skip(usize::from(!odd)).copied().collect();
            c.extend(mirror);
            let n = c.len() - 1;
            let f = IntPoly::from_i64s(&c);
            let g = gamma_vector(&f, DegreeBound(n)).unwrap();
            prop_assert_eq!(g.recompose(), f);
        }

        #[test]
        fn semi_gamma_round_trip(lambda in proptest::collection::vec(-20i64..=20, 1..6), nu in 0u8..=1) {
            let s = SemiGammaVector { nu, n: lambda.len() - 1, lambda: ints(&lambda) };
            let f = s.recompose();
            prop_assert_eq!(semi_gamma_vector(&f, nu, s.n).unwrap(), s);
        }

        #[test]
        fn stable_products_of_left_factors(a in proptest::collection::vec(1i64..6, 0..5), extra in small_poly()) {
            // products of (x + a) with a > 0 are stable and pass the split test
            let f = a.iter().fold(IntPoly::one(), |acc, &r| &acc * &poly(&[r, 1]));
            prop_assert!(hurwitz_stable(&f, false).unwrap());
            let r = hermite_biehler_check(&f).unwrap();
            prop_assert!(r.consistent() && r.split_condition);
            if extra.is_standard() {
                prop_assert!(hermite_biehler_check(&extra).unwrap().consistent());
            }
        }
    }
}
