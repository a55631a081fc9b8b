//! Truncated exponential generating functions `Σ P_n(x) z^n / n!` with exact
//! rational polynomial coefficients.
//!
//! Closed forms are never expanded by division. An identity `X = P / Q` is
//! checked as `X · Q = P` on truncations, and square roots are squared first.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RatPoly};
use crate::recurrence::catalog;

/// Entries `0..=order`; entry `n` is the coefficient of `z^n / n!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfTable {
    entries: Vec<RatPoly>,
}

fn binomials(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

fn rat_int(c: BigInt) -> RatPoly {
    RatPoly::constant(BigRational::from_integer(c))
}

impl EgfTable {
    /// A table of order `polys.len() - 1`. Fails on an empty sequence.
    pub fn from_rat(entries: Vec<RatPoly>) -> Result<EgfTable> {
        if entries.is_empty() {
            return Err(Error::Domain("a series table needs at least entry 0".into()));
        }
        Ok(EgfTable { entries })
    }

    pub fn order(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[RatPoly] {
        &self.entries
    }

    pub fn get(&self, n: usize) -> Result<&RatPoly> {
        self.entries.get(n).ok_or(Error::BeyondOrder { index: n, order: self.order() })
    }

    /// `c` in degree zero.
    pub fn constant(c: RatPoly, order: usize) -> EgfTable {
        let mut entries = vec![RatPoly::zero(); order + 1];
        entries[0] = c;
        EgfTable { entries }
    }

    pub fn one(order: usize) -> EgfTable {
        EgfTable::constant(RatPoly::one(), order)
    }

    pub fn truncate(&self, order: usize) -> Result<EgfTable> {
        if order > self.order() {
            return Err(Error::BeyondOrder { index: order, order: self.order() });
        }
        Ok(EgfTable { entries: self.entries[..=order].to_vec() })
    }

    fn same_order(&self, other: &EgfTable) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.order(), right: other.order() })
        }
    }

    pub fn add(&self, other: &EgfTable) -> Result<EgfTable> {
        self.same_order(other)?;
        Ok(EgfTable { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &EgfTable) -> Result<EgfTable> {
        self.same_order(other)?;
        Ok(EgfTable { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect() })
    }

    /// Multiplies every entry by a polynomial in `x`.
    pub fn scale_poly(&self, c: &RatPoly) -> EgfTable {
        EgfTable { entries: self.entries.iter().map(|a| a * c).collect() }
    }

    /// Binomial convolution: entry `n` is `Σ_k C(n,k) a_k b_{n-k}`.
    pub fn mul(&self, other: &EgfTable) -> Result<EgfTable> {
        self.same_order(other)?;
        let entries = (0..=self.order())
            .map(|n| {
                binomials(n).into_iter().enumerate().fold(RatPoly::zero(), |acc, (k, c)| {
                    &acc + &(&(&self.entries[k] * &other.entries[n - k]) * &rat_int(c))
                })
            })
            .collect();
        Ok(EgfTable { entries })
    }

    /// `e^{c z}`: entry `n` is `c^n`.
    pub fn exp_linear(c: &RatPoly, order: usize) -> EgfTable {
        let mut entries = Vec::with_capacity(order + 1);
        let mut power = RatPoly::one();
        for _ in 0..=order {
            entries.push(power.clone());
            power = &power * c;
        }
        EgfTable { entries }
    }

    /// `A(x, s z)`: entry `n` is `s^n a_n`.
    pub fn scale_z(&self, s: &RatPoly) -> EgfTable {
        let mut power = RatPoly::one();
        let mut entries = Vec::with_capacity(self.entries.len());
        for a in &self.entries {
            entries.push(a * &power);
            power = &power * s;
        }
        EgfTable { entries }
    }

    /// One line `n: <polynomial>` per entry.
    pub fn dump(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for EgfTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, p) in self.entries.iter().enumerate() {
            writeln!(f, "{n}: {p}")?;
        }
        Ok(())
    }
}

/// The table of a polynomial sequence starting at index 0.
pub fn egf_from_sequence(polys: &[IntPoly]) -> Result<EgfTable> {
    EgfTable::from_rat(polys.iter().map(IntPoly::to_rat).collect())
}

pub fn egf_mul(a: &EgfTable, b: &EgfTable) -> Result<EgfTable> {
    a.mul(b)
}

pub fn egf_exp_linear(c: &RatPoly, order: usize) -> EgfTable {
    EgfTable::exp_linear(c, order)
}

pub fn egf_scale_z(a: &EgfTable, s: &RatPoly) -> EgfTable {
    a.scale_z(s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub order: usize,
    /// First index where the tables differ, with both entries.
    pub first_difference: Option<(usize, RatPoly, RatPoly)>,
}

impl SeriesReport {
    pub fn passed(&self) -> bool {
        self.first_difference.is_none()
    }

    pub fn to_json(&self) -> Value {
        let diff = self.first_difference.as_ref().map(|(n, l, r)| {
            json!({ "n": n, "lhs": l.to_string(), "rhs": r.to_string() })
        });
        json!({ "order": self.order, "passed": self.passed(), "first_difference": diff })
    }
}

/// Entrywise comparison of two truncations of the same order.
pub fn verify_series_identity(lhs: &EgfTable, rhs: &EgfTable) -> Result<SeriesReport> {
    lhs.same_order(rhs)?;
    let first_difference = lhs
        .entries
        .iter()
        .zip(&rhs.entries)
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(n, (a, b))| (n, a.clone(), b.clone()));
    Ok(SeriesReport { order: lhs.order(), first_difference })
}

/// Names accepted by [`verify_named`].
pub const SERIES_IDENTITIES: &[&str] = &[
    "CE-GF", "CO-GF", "A-GF", "B-GF", "A-QUOTIENT", "B-QUOTIENT", "A-CONV", "B-CONV", "C-SCALE", "M-SQUARE",
    "N-SQUARE",
];

fn rp(c: &[i64]) -> RatPoly {
    IntPoly::from_i64s(c).to_rat()
}

/// The generating-function inputs, all read off the recurrences.
struct Tables {
    order: usize,
    a: EgfTable,
    b: EgfTable,
    c: EgfTable,
    ce: EgfTable,
    co: EgfTable,
    m: EgfTable,
    n: EgfTable,
}

impl Tables {
    fn build(order: usize) -> Result<Tables> {
        let seq = |name: &str| -> Result<EgfTable> { egf_from_sequence(&catalog::lookup(name)?.polys(order)?) };
        // the pair split of C starts at n = 0 with (C^E_0, C^O_0) = (1, 0)
        let split = catalog::single_spec("C")?.derive_pair()?.iterate(order)?;
        let (ce, co): (Vec<IntPoly>, Vec<IntPoly>) = split.into_iter().unzip();
        Ok(Tables {
            order,
            a: seq("A")?,
            b: seq("B")?,
            c: seq("C")?,
            ce: egf_from_sequence(&ce)?,
            co: egf_from_sequence(&co)?,
            m: seq("M")?,
            n: seq("N")?,
        })
    }

    fn exp(&self, c: &[i64]) -> EgfTable {
        EgfTable::exp_linear(&rp(c), self.order)
    }

    fn constant(&self, c: &[i64]) -> EgfTable {
        EgfTable::constant(rp(c), self.order)
    }
}

/// Direct binomial sums of the two quotient corollaries, as tables.
fn convolution_sums(t: &Tables) -> Result<(EgfTable, EgfTable)> {
    let mut a_sum = Vec::new();
    let mut b_sum = Vec::new();
    for n in 0..=t.order {
        let binom = binomials(n);
        let mut s = RatPoly::zero();
        let mut o = RatPoly::zero();
        for k in 0..=n {
            let c = rat_int(binom[k].clone());
            s = &s + &(&(t.a.get(k)? * t.ce.get(n - k)?) * &c);
            if k < n {
                o = &o + &(&(t.a.get(k)? * t.co.get(n - k)?) * &c);
            }
        }
        a_sum.push(s);
        b_sum.push(t.a.get(n)? + &(&o * &rp(&[0, 1])));
    }
    Ok((EgfTable::from_rat(a_sum)?, EgfTable::from_rat(b_sum)?))
}

/// Checks one of the [`SERIES_IDENTITIES`] to truncation `order`.
pub fn verify_named(name: &str, order: usize) -> Result<SeriesReport> {
    let t = Tables::build(order)?;
    let x = t.constant(&[0, 1]);
    let (lhs, rhs) = match name {
        // C^E (x - e^{2(x-1)z}) = x - e^{(x-1)z}
        "CE-GF" => (t.ce.mul(&x.sub(&t.exp(&[-2, 2]))?)?, x.sub(&t.exp(&[-1, 1]))?),
        // C^O (e^{2(x-1)z} - x) = 1 - e^{(x-1)z}
        "CO-GF" => (t.co.mul(&t.exp(&[-2, 2]).sub(&x)?)?, t.constant(&[1]).sub(&t.exp(&[-1, 1]))?),
        // A (x - e^{(x-1)z}) = x - 1
        "A-GF" => (t.a.mul(&x.sub(&t.exp(&[-1, 1]))?)?, t.constant(&[-1, 1])),
        // B (1 - x e^{2(1-x)z}) = (1 - x) e^{(1-x)z}
        "B-GF" => (
            t.b.mul(&t.constant(&[1]).sub(&t.exp(&[2, -2]).scale_poly(&rp(&[0, 1])))?)?,
            t.exp(&[1, -1]).scale_poly(&rp(&[1, -1])),
        ),
        // A(x, 2z) = C^E A
        "A-QUOTIENT" => (t.a.scale_z(&rp(&[2])), t.ce.mul(&t.a)?),
        // B = (1 + x C^O) A
        "B-QUOTIENT" => (t.b.clone(), t.constant(&[1]).add(&t.co.scale_poly(&rp(&[0, 1])))?.mul(&t.a)?),
        "A-CONV" => (t.a.scale_z(&rp(&[2])), convolution_sums(&t)?.0),
        "B-CONV" => (t.b.clone(), convolution_sums(&t)?.1),
        // C(x, z) = A(x, (1 + x) z)
        "C-SCALE" => (t.c.clone(), t.a.scale_z(&rp(&[1, 1]))),
        // M^2 (x - e^{2(x-1)t}) = x - 1
        "M-SQUARE" => (t.m.mul(&t.m)?.mul(&x.sub(&t.exp(&[-2, 2]))?)?, t.constant(&[-1, 1])),
        // N^2 (1 - x e^{2(1-x)t}) = 1 - x
        "N-SQUARE" => (
            t.n.mul(&t.n)?.mul(&t.constant(&[1]).sub(&t.exp(&[2, -2]).scale_poly(&rp(&[0, 1])))?)?,
            t.constant(&[1, -1]),
        ),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    verify_series_identity(&lhs, &rhs)
}
