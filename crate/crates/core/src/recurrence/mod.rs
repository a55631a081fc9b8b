//! Single Eulerian recurrences `F_{n+1} = α_n F_n + β_n F_n'` and pair systems
//!
//! ```text
//! E_{n+1} = p_n E_n + q_n E_n' + r_n O_n
//! O_{n+1} = u_n O_n + v_n O_n' + w_n E_n
//! ```
//!
//! together with the conversion from the first to the second. When `β_n` is
//! odd, `F_n = E_n(x^2) + x O_n(x^2)` holds for the derived system at every
//! index.

pub mod catalog;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// A polynomial in `x` whose coefficients are affine in the index `n`:
/// `constant(x) + n * slope(x)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct CoeffFamily {
    constant: IntPoly,
    slope: IntPoly,
}

impl CoeffFamily {
    pub fn new(constant: IntPoly, slope: IntPoly) -> Self {
        CoeffFamily { constant, slope }
    }

    /// Builds from `(c0_k, c1_k)` pairs indexed by the power of `x`.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let constant: Vec<i64> = terms.iter().map(|t| t.0).collect();
        let slope: Vec<i64> = terms.iter().map(|t| t.1).collect();
        CoeffFamily::new(IntPoly::from_i64s(&constant), IntPoly::from_i64s(&slope))
    }

    /// Independent of `n`.
    pub fn fixed(p: IntPoly) -> Self {
        CoeffFamily::new(p, IntPoly::zero())
    }

    pub fn constant_part(&self) -> &IntPoly {
        &self.constant
    }

    pub fn slope_part(&self) -> &IntPoly {
        &self.slope
    }

    /// `(c0_k, c1_k)` for `k = 0..=degree`; empty for the zero family.
    pub fn terms(&self) -> Vec<(BigInt, BigInt)> {
        let len = self.constant.coeffs().len().max(self.slope.coeffs().len());
        (0..len)
            .map(|k| (self.constant.coeff(k), self.slope.coeff(k)))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.slope.is_zero()
    }

    pub fn instantiate(&self, n: usize) -> IntPoly {
        &self.constant + &self.slope.scale(&BigInt::from(n))
    }

    /// Applies a linear map on `Z[x]` to both components.
    fn map(&self, f: impl Fn(&IntPoly) -> IntPoly) -> CoeffFamily {
        CoeffFamily::new(f(&self.constant), f(&self.slope))
    }
}

impl fmt::Debug for CoeffFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoeffFamily[{} ; n*({})]", self.constant, self.slope)
    }
}

/// `F_{n+1} = α_n F_n + β_n F_n'` from `F_start = initial`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecurrenceSpec {
    pub alpha: CoeffFamily,
    pub beta: CoeffFamily,
    pub initial: IntPoly,
    pub start_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSystemSpec {
    pub p: CoeffFamily,
    pub q: CoeffFamily,
    pub r: CoeffFamily,
    pub u: CoeffFamily,
    pub v: CoeffFamily,
    pub w: CoeffFamily,
    pub e_initial: IntPoly,
    pub o_initial: IntPoly,
    pub start_index: usize,
}

impl RecurrenceSpec {
    pub fn step(&self, n: usize, f: &IntPoly) -> IntPoly {
        &(&self.alpha.instantiate(n) * f) + &(&self.beta.instantiate(n) * &f.derivative())
    }

    /// `F_start, …, F_{n_max}`.
    pub fn iterate(&self, n_max: usize) -> Result<Vec<IntPoly>> {
        if n_max < self.start_index {
            return Err(Error::RangeBelowStart {
                n_max,
                start: self.start_index,
            });
        }
        let mut out = Vec::with_capacity(n_max - self.start_index + 1);
        out.push(self.initial.clone());
        for n in self.start_index..n_max {
            let next = self.step(n, out.last().expect("nonempty"));
            out.push(next);
        }
        Ok(out)
    }

    /// `F_n` alone.
    pub fn at(&self, n: usize) -> Result<IntPoly> {
        Ok(self.iterate(n)?.pop().expect("nonempty"))
    }

    pub fn derive_pair(&self) -> Result<PairSystemSpec> {
        let (e0, o0) = self.initial.hb_split();
        derive_pair(&self.alpha, &self.beta, e0, o0, self.start_index)
    }
}

impl PairSystemSpec {
    pub fn step(&self, n: usize, e: &IntPoly, o: &IntPoly) -> (IntPoly, IntPoly) {
        let e_next = &(&(&self.p.instantiate(n) * e) + &(&self.q.instantiate(n) * &e.derivative()))
            + &(&self.r.instantiate(n) * o);
        let o_next = &(&(&self.u.instantiate(n) * o) + &(&self.v.instantiate(n) * &o.derivative()))
            + &(&self.w.instantiate(n) * e);
        (e_next, o_next)
    }

    /// `(E_n, O_n)` for `n = start, …, n_max`.
    pub fn iterate(&self, n_max: usize) -> Result<Vec<(IntPoly, IntPoly)>> {
        if n_max < self.start_index {
            return Err(Error::RangeBelowStart {
                n_max,
                start: self.start_index,
            });
        }
        let mut out = Vec::with_capacity(n_max - self.start_index + 1);
        out.push((self.e_initial.clone(), self.o_initial.clone()));
        for n in self.start_index..n_max {
            let (e, o) = out.last().expect("nonempty");
            let next = self.step(n, e, o);
            out.push(next);
        }
        Ok(out)
    }

    pub fn at(&self, n: usize) -> Result<(IntPoly, IntPoly)> {
        Ok(self.iterate(n)?.pop().expect("nonempty"))
    }

    /// The recurrence on `F = E(x^2) + x O(x^2)` this system is dual to:
    /// `x α(x) = x p(x^2) + r(x^2)` and `2x β(x) = q(x^2)`.
    ///
    /// Only meaningful when [`PairSystemSpec::is_dual_form`] holds.
    pub fn dual_single(&self) -> Result<RecurrenceSpec> {
        let alpha = CoeffFamily::new(
            dual_alpha(self.p.constant_part(), self.r.constant_part())?,
            dual_alpha(self.p.slope_part(), self.r.slope_part())?,
        );
        let two_x = IntPoly::monomial(BigInt::from(2), 1);
        let beta = CoeffFamily::new(
            self.q.constant.substitute_square().exact_div(&two_x)?,
            self.q.slope.substitute_square().exact_div(&two_x)?,
        );
        Ok(RecurrenceSpec {
            alpha,
            beta,
            initial: IntPoly::hb_join(&self.e_initial, &self.o_initial),
            start_index: self.start_index,
        })
    }

    /// Whether `u = p + q/(2x)`, `v = q` and `x w = r` hold as family identities.
    pub fn is_dual_form(&self) -> bool {
        let two_x = IntPoly::monomial(BigInt::from(2), 1);
        let (Ok(c), Ok(s)) = (self.q.constant.exact_div(&two_x), self.q.slope.exact_div(&two_x)) else {
            return false;
        };
        let u_expected = CoeffFamily::new(&self.p.constant + &c, &self.p.slope + &s);
        self.u == u_expected && self.v == self.q && self.w.map(|w| w.shift(1)) == self.r
    }
}

/// α(x) = p(x^2) + r(x^2)/x, coefficientwise: from `x α = x p(x^2) + r(x^2)`.
fn dual_alpha(p: &IntPoly, r: &IntPoly) -> Result<IntPoly> {
    IntPoly::hb_join(r, p).exact_div(&IntPoly::x())
}

/// Pair system dual to the single recurrence with coefficients `(alpha, beta)`.
///
/// Requires `β_n` to have no even-exponent terms for any `n`, which for affine
/// families is a check on the coefficient table.
pub fn derive_pair(
    alpha: &CoeffFamily,
    beta: &CoeffFamily,
    e0: IntPoly,
    o0: IntPoly,
    start_index: usize,
) -> Result<PairSystemSpec> {
    for (k, (c0, c1)) in beta.terms().iter().enumerate() {
        if k % 2 == 0 && !(c0.is_zero() && c1.is_zero()) {
            return Err(Error::Inadmissible { exponent: k });
        }
    }
    // x α = r(x^2) + x p(x^2)
    let x_alpha = alpha.map(|a| a.shift(1));
    let r = x_alpha.map(|a| a.hb_split().0);
    let p = x_alpha.map(|a| a.hb_split().1);
    // 2x β = q(x^2)
    let q = beta.map(|b| b.shift(1).scale(&BigInt::from(2)).hb_split().0);
    // q/(2x) is the compressed odd part of β
    let q_over_2x = beta.map(|b| b.hb_split().1);
    let u = CoeffFamily::new(
        &p.constant + &q_over_2x.constant,
        &p.slope + &q_over_2x.slope,
    );
    if r.terms().first().is_some_and(|(c0, c1)| !(c0.is_zero() && c1.is_zero())) {
        return Err(Error::NonPolynomialW);
    }
    let w = r.map(|a| a.exact_div(&IntPoly::x()).expect("zero constant term checked"));
    Ok(PairSystemSpec {
        p,
        v: q.clone(),
        q,
        r,
        u,
        w,
        e_initial: e0,
        o_initial: o0,
        start_index,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityFailure {
    pub n: usize,
    pub single: IntPoly,
    pub joined: IntPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub start: usize,
    pub n_max: usize,
    pub checked: usize,
    pub first_failure: Option<DualityFailure>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks `F_n = E_n(x^2) + x O_n(x^2)` for every `n` from the pair's start
/// index through `n_max`. The single recurrence may start earlier; it is then
/// advanced to the pair's start before the initial data are compared.
pub fn verify_duality(
    single: &RecurrenceSpec,
    pair: &PairSystemSpec,
    n_max: usize,
) -> Result<DualityReport> {
    if pair.start_index < single.start_index {
        return Err(Error::RangeBelowStart {
            n_max: pair.start_index,
            start: single.start_index,
        });
    }
    let singles = single.iterate(n_max.max(pair.start_index))?;
    let offset = pair.start_index - single.start_index;
    let f_start = &singles[offset];
    if f_start.hb_split() != (pair.e_initial.clone(), pair.o_initial.clone()) {
        return Err(Error::IncompatibleInitial {
            single: f_start.clone(),
            even: pair.e_initial.clone(),
            odd: pair.o_initial.clone(),
        });
    }
    let pairs = pair.iterate(n_max.max(pair.start_index))?;
    let mut checked = 0;
    for (i, (e, o)) in pairs.iter().enumerate() {
        let n = pair.start_index + i;
        if n > n_max {
            break;
        }
        let joined = IntPoly::hb_join(e, o);
        let f = &singles[offset + i];
        checked += 1;
        if &joined != f {
            return Ok(DualityReport {
                start: pair.start_index,
                n_max,
                checked,
                first_failure: Some(DualityFailure {
                    n,
                    single: f.clone(),
                    joined,
                }),
            });
        }
    }
    Ok(DualityReport {
        start: pair.start_index,
        n_max,
        checked,
        first_failure: None,
    })
}
