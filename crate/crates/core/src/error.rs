use thiserror::Error;

use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree bound {bound} is below the polynomial degree {degree}")]
    DegreeBound { bound: usize, degree: usize },

    #[error("division is not exact, remainder {remainder}")]
    InexactDivision { remainder: IntPoly },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("beta has a nonzero even part at x^{exponent}; the recurrence has no pair system")]
    Inadmissible { exponent: usize },

    #[error("r has a nonzero constant term; w = r/x is not a polynomial")]
    NonPolynomialW,

    #[error("initial data do not match: single gives {single}, pair gives ({even}, {odd})")]
    IncompatibleInitial {
        single: IntPoly,
        even: IntPoly,
        odd: IntPoly,
    },

    #[error("n_max {n_max} is below the start index {start}")]
    RangeBelowStart { n_max: usize, start: usize },

    #[error("filter {filter} does not apply to family {family} at n = {n}")]
    IncompatibleFilter {
        family: String,
        filter: String,
        n: usize,
    },

    #[error("statistic {stat} does not apply to family {family}")]
    InvalidStatistic { family: String, stat: String },

    #[error("statistic {0} is not an axis of this distribution")]
    MissingAxis(String),

    #[error("element lies outside the domain: {0}")]
    Domain(String),

    #[error("polynomial is not symmetric in window {0}")]
    Asymmetric(usize),

    #[error("polynomial is not divisible by (1 + x)")]
    NotDivisible,

    #[error("expansion leaves a nonzero residue {residue}")]
    Residue { residue: IntPoly },

    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not standard (leading coefficient must be positive)")]
    NotStandard,

    #[error("polynomial {0} is not real-rooted")]
    NotRealRooted(IntPoly),

    #[error("degree difference deg q - deg p = {0} is neither 0 nor 1")]
    DegreeGap(isize),

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series entry {index} is beyond truncation order {order}")]
    BeyondOrder { index: usize, order: usize },

    #[error("unknown name {0:?}")]
    UnknownName(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
