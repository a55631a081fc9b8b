//! Exact real-root census: square-free decomposition, Sturm chains and
//! bisection over rational intervals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RatPoly};

/// A real root `r` with `lo < r <= hi`, or exactly `r = lo = hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn to_json(&self) -> Value {
        json!({ "lo": self.lo.to_string(), "hi": self.hi.to_string(), "multiplicity": self.multiplicity })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootReport {
    pub degree: usize,
    /// Real roots counted with multiplicity.
    pub real_root_count: usize,
    pub all_real: bool,
    pub all_nonpositive: bool,
    /// Multiplicity of `0` as a root.
    pub zero_multiplicity: usize,
    /// One interval per distinct real root, ascending and pairwise disjoint.
    pub intervals: Vec<RootInterval>,
}

impl RootReport {
    pub fn to_json(&self) -> Value {
        json!({
            "degree": self.degree,
            "real_root_count": self.real_root_count,
            "all_real": self.all_real,
            "all_nonpositive": self.all_nonpositive,
            "zero_multiplicity": self.zero_multiplicity,
            "intervals": self.intervals.iter().map(RootInterval::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Sturm chain of a square-free integer polynomial, each member scaled by a
/// positive rational to a primitive integer polynomial.
struct Sturm {
    chain: Vec<IntPoly>,
}

impl Sturm {
    fn new(p: &IntPoly) -> Sturm {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d.to_rat().primitive_integer());
        }
        while chain.len() >= 2 {
            let a = chain[chain.len() - 2].to_rat();
            let b = chain[chain.len() - 1].to_rat();
            let (_, r) = a.div_rem(&b).expect("chain members are nonzero");
            if r.is_zero() {
                break;
            }
            chain.push(-&r.primitive_integer());
        }
        Sturm { chain }
    }

    fn variations(&self, signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, t: &BigRational) -> usize {
        self.variations(self.chain.iter().map(|p| p.sign_at(t.numer(), t.denom())))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        self.variations(self.chain.iter().map(|p| {
            let lead = if p.leading().is_some_and(Signed::is_positive) { 1 } else { -1 };
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if positive || !odd {
                lead
            } else {
                -lead
            }
        }))
    }

    /// Distinct roots in `(lo, hi]`.
    fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    fn count_above(&self, lo: &BigRational) -> usize {
        self.variations_at(lo) - self.variations_at_infinity(true)
    }

    fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    fn base(&self) -> &IntPoly {
        &self.chain[0]
    }

    fn has_root_in(&self, iv: &RootInterval) -> bool {
        if iv.is_exact() {
            self.base().sign_at(iv.hi.numer(), iv.hi.denom()) == 0
        } else {
            self.count(&iv.lo, &iv.hi) > 0
        }
    }
}

/// Yun's square-free factorization: pairs `(g, m)` with `f = c · Π g^m`, the
/// `g` square-free, pairwise coprime, nonconstant primitive integer
/// polynomials.
pub(crate) fn squarefree_factors(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let f = f.to_rat();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let div = |a: &RatPoly, b: &RatPoly| a.div_rem(b).expect("nonzero divisor").0;
    let mut b = div(&f, &a0);
    let mut c = div(&fp, &a0);
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.primitive_integer(), i));
        }
        b = div(&b, &a);
        c = div(&d, &a);
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Product of the distinct irreducible factors, as a primitive integer polynomial.
pub(crate) fn squarefree_part(f: &IntPoly) -> IntPoly {
    squarefree_factors(f)
        .iter()
        .fold(IntPoly::one(), |acc, (g, _)| &acc * g)
}

/// `1 + max |a_i / a_d|`, rounded up and padded by one.
fn cauchy_bound(f: &IntPoly) -> BigRational {
    let lead = f.leading().expect("nonzero").abs();
    let max = f.coeffs().iter().map(|c| BigRational::new(c.abs(), lead.clone())).max().unwrap_or_default();
    BigRational::from_integer(max.ceil().to_integer() + BigInt::from(2))
}

fn isolate(sturm: &Sturm, lo: BigRational, hi: BigRational, out: &mut Vec<RootInterval>) {
    match sturm.count(&lo, &hi) {
        0 => {}
        1 => {
            let exact = sturm.base().sign_at(hi.numer(), hi.denom()) == 0;
            let lo = if exact { hi.clone() } else { lo };
            out.push(RootInterval { lo, hi, multiplicity: 1 });
        }
        _ => {
            let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
            isolate(sturm, lo, mid.clone(), out);
            isolate(sturm, mid, hi, out);
        }
    }
}

/// Isolating intervals of the distinct real roots of a nonconstant
/// square-free polynomial, ascending.
fn isolate_all(sqfree: &IntPoly) -> Vec<RootInterval> {
    let sturm = Sturm::new(sqfree);
    let b = cauchy_bound(sqfree);
    let mut out = Vec::new();
    isolate(&sturm, -b.clone(), b, &mut out);
    out
}

/// Multiplicity of the root isolated by `iv` in the polynomial with the given
/// square-free factors.
fn multiplicity_in(factors: &[(Sturm, usize)], iv: &RootInterval) -> usize {
    factors
        .iter()
        .find(|(s, _)| s.has_root_in(iv))
        .map_or(0, |&(_, m)| m)
}

fn factor_chains(f: &IntPoly) -> Vec<(Sturm, usize)> {
    squarefree_factors(f)
        .into_iter()
        .map(|(g, m)| (Sturm::new(&g), m))
        .collect()
}

pub fn root_report(f: &IntPoly) -> Result<RootReport> {
    let degree = f.degree().ok_or(Error::ZeroPolynomial)?;
    let zero_multiplicity = f.valuation().unwrap_or(0);
    if degree == 0 {
        return Ok(RootReport {
            degree,
            real_root_count: 0,
            all_real: true,
            all_nonpositive: true,
            zero_multiplicity,
            intervals: Vec::new(),
        });
    }
    let factors = factor_chains(f);
    let sqfree = factors.iter().fold(IntPoly::one(), |acc, (s, _)| &acc * s.base());
    let mut intervals = isolate_all(&sqfree);
    for iv in &mut intervals {
        iv.multiplicity = multiplicity_in(&factors, iv);
    }
    let real_root_count = intervals.iter().map(|iv| iv.multiplicity).sum();
    let positive = Sturm::new(&sqfree).count_above(&BigRational::zero());
    Ok(RootReport {
        degree,
        real_root_count,
        all_real: real_root_count == degree,
        all_nonpositive: positive == 0,
        zero_multiplicity,
        intervals,
    })
}

/// Number of distinct real roots.
pub fn distinct_real_roots(f: &IntPoly) -> Result<usize> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Ok(0);
    }
    Ok(Sturm::new(&squarefree_part(f)).count_all())
}

/// Whether `f` has a root in the open interval `(lo, hi)` or at `hi`.
pub(crate) fn has_root_in(f: &IntPoly, lo: &BigRational, hi: &BigRational) -> bool {
    f.degree().unwrap_or(0) > 0 && Sturm::new(&squarefree_part(f)).count(lo, hi) > 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interlacing {
    /// `deg q = deg p + 1`, `θ_1 <= ξ_1 <= θ_2 <= … <= ξ_n <= θ_{n+1}`.
    Interlaces,
    /// `deg q = deg p`, `ξ_1 <= θ_1 <= ξ_2 <= … <= ξ_n <= θ_n`.
    AlternatesLeft,
}

/// Sorted roots of `p` and of `q`, each as indices into the common ordered
/// list of distinct roots of `p·q`, repeated by multiplicity.
fn merged_root_indices(p: &IntPoly, q: &IntPoly) -> (Vec<usize>, Vec<usize>) {
    let fp = factor_chains(p);
    let fq = factor_chains(q);
    let sqfree = fp
        .iter()
        .chain(&fq)
        .fold(IntPoly::one(), |acc, (s, _)| &acc * s.base());
    let sqfree = squarefree_part(&sqfree);
    let (mut xi, mut theta) = (Vec::new(), Vec::new());
    if sqfree.degree().unwrap_or(0) == 0 {
        return (xi, theta);
    }
    for (j, iv) in isolate_all(&sqfree).iter().enumerate() {
        xi.extend(std::iter::repeat(j).take(multiplicity_in(&fp, iv)));
        theta.extend(std::iter::repeat(j).take(multiplicity_in(&fq, iv)));
    }
    (xi, theta)
}

/// Checks `p ≺ q`. Errors when either side has non-real roots or the
/// degrees are not compatible with either relation; `Ok(None)` when the
/// roots fail to alternate.
pub fn interlacing(p: &IntPoly, q: &IntPoly) -> Result<Option<Interlacing>> {
    for f in [p, q] {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !f.is_standard() {
            return Err(Error::NotStandard);
        }
    }
    let gap = q.degree().unwrap() as isize - p.degree().unwrap() as isize;
    if gap != 0 && gap != 1 {
        return Err(Error::DegreeGap(gap));
    }
    let (xi, theta) = merged_root_indices(p, q);
    if xi.len() != p.degree().unwrap() {
        return Err(Error::NotRealRooted(p.clone()));
    }
    if theta.len() != q.degree().unwrap() {
        return Err(Error::NotRealRooted(q.clone()));
    }
    let ok = if gap == 1 {
        (0..xi.len()).all(|i| theta[i] <= xi[i] && xi[i] <= theta[i + 1])
    } else {
        (0..xi.len()).all(|i| xi[i] <= theta[i] && (i + 1 == xi.len() || theta[i] <= xi[i + 1]))
    };
    Ok(ok.then_some(if gap == 1 { Interlacing::Interlaces } else { Interlacing::AlternatesLeft }))
}

/// `p ≺ q` as a plain verdict: non-real-rooted inputs and incompatible
/// degrees do not interlace.
pub fn interlaces(p: &IntPoly, q: &IntPoly) -> Result<bool> {
    match interlacing(p, q) {
        Ok(kind) => Ok(kind.is_some()),
        Err(Error::NotRealRooted(_) | Error::DegreeGap(_)) => Ok(false),
        Err(e) => Err(e),
    }
}
