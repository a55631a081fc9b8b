//! Every named recurrence and pair system, under stable identifiers.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::{CoeffFamily, PairSystemSpec, RecurrenceSpec};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    Single,
    Pair,
    /// Built from other entries by an identity rather than iterated.
    Derived,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DerivedRule {
    /// `D_n = B_n - n 2^{n-1} x A_{n-1}` for `n >= 2`, `D_0 = D_1 = 1`.
    TypeD,
    /// `M_n = L_n^E + L_n^O`.
    AscentPlateau,
    /// `N_n = L_n^E + x L_n^O`.
    LeftAscentPlateau,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CatalogSpec {
    Single(RecurrenceSpec),
    Pair(PairSystemSpec),
    Derived(DerivedRule),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: EntryKind,
    pub spec: CatalogSpec,
    pub description: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CatalogValue {
    Single(IntPoly),
    Pair(IntPoly, IntPoly),
}

impl CatalogEntry {
    pub fn start_index(&self) -> usize {
        match &self.spec {
            CatalogSpec::Single(s) => s.start_index,
            CatalogSpec::Pair(p) => p.start_index,
            CatalogSpec::Derived(_) => 0,
        }
    }

    pub fn single(&self) -> Option<&RecurrenceSpec> {
        match &self.spec {
            CatalogSpec::Single(s) => Some(s),
            _ => None,
        }
    }

    pub fn pair(&self) -> Option<&PairSystemSpec> {
        match &self.spec {
            CatalogSpec::Pair(p) => Some(p),
            _ => None,
        }
    }

    /// Values at `start, …, n_max`.
    pub fn values(&self, n_max: usize) -> Result<Vec<CatalogValue>> {
        match &self.spec {
            CatalogSpec::Single(s) => Ok(s.iterate(n_max)?.into_iter().map(CatalogValue::Single).collect()),
            CatalogSpec::Pair(p) => Ok(p
                .iterate(n_max)?
                .into_iter()
                .map(|(e, o)| CatalogValue::Pair(e, o))
                .collect()),
            CatalogSpec::Derived(rule) => Ok(derived(*rule, n_max)?
                .into_iter()
                .map(CatalogValue::Single)
                .collect()),
        }
    }

    /// Polynomial sequence `start..=n_max` for single and derived entries.
    pub fn polys(&self, n_max: usize) -> Result<Vec<IntPoly>> {
        self.values(n_max)?
            .into_iter()
            .map(|v| match v {
                CatalogValue::Single(p) => Ok(p),
                CatalogValue::Pair(..) => Err(Error::UnknownName(format!("{} is a pair system", self.name))),
            })
            .collect()
    }
}

fn fam(terms: &[(i64, i64)]) -> CoeffFamily {
    CoeffFamily::from_terms(terms)
}

fn single(alpha: &[(i64, i64)], beta: &[(i64, i64)], initial: &[i64], start_index: usize) -> CatalogSpec {
    CatalogSpec::Single(RecurrenceSpec {
        alpha: fam(alpha),
        beta: fam(beta),
        initial: IntPoly::from_i64s(initial),
        start_index,
    })
}

#[allow(clippy::too_many_arguments)]
fn pair(
    p: &[(i64, i64)],
    q: &[(i64, i64)],
    r: &[(i64, i64)],
    u: &[(i64, i64)],
    v: &[(i64, i64)],
    w: &[(i64, i64)],
    initial: (&[i64], &[i64]),
    start_index: usize,
) -> CatalogSpec {
    CatalogSpec::Pair(PairSystemSpec {
        p: fam(p),
        q: fam(q),
        r: fam(r),
        u: fam(u),
        v: fam(v),
        w: fam(w),
        e_initial: IntPoly::from_i64s(initial.0),
        o_initial: IntPoly::from_i64s(initial.1),
        start_index,
    })
}

// x(1 - x^2) and 2x(1 - x): the two derivative coefficients that recur
const X_ONE_MINUS_X2: &[(i64, i64)] = &[(0, 0), (1, 0), (0, 0), (-1, 0)];
const TWO_X_ONE_MINUS_X: &[(i64, i64)] = &[(0, 0), (2, 0), (-2, 0)];

pub fn catalog() -> Vec<CatalogEntry> {
    use EntryKind::*;
    vec![
        CatalogEntry {
            name: "A",
            kind: Single,
            spec: single(&[(1, 0), (0, 1)], &[(0, 0), (1, 0), (-1, 0)], &[1], 0),
            description: "type A Eulerian polynomials, A_{n+1} = (1 + nx) A_n + x(1-x) A_n'",
        },
        CatalogEntry {
            name: "B",
            kind: Single,
            spec: single(&[(1, 0), (1, 2)], TWO_X_ONE_MINUS_X, &[1], 0),
            description: "type B Eulerian polynomials, B_{n+1} = (1 + x + 2nx) B_n + 2x(1-x) B_n'",
        },
        CatalogEntry {
            name: "C",
            kind: Single,
            spec: single(&[(1, 0), (1, 0), (0, 2)], X_ONE_MINUS_X2, &[1], 0),
            description: "flag descent polynomials, C_{n+1} = (2nx^2 + x + 1) C_n + x(1-x^2) C_n'",
        },
        CatalogEntry {
            name: "D",
            kind: Derived,
            spec: CatalogSpec::Derived(DerivedRule::TypeD),
            description: "type D Eulerian polynomials, D_n = B_n - n 2^{n-1} x A_{n-1} (n >= 2), D_0 = D_1 = 1",
        },
        CatalogEntry {
            name: "L",
            kind: Single,
            spec: single(&[(0, 0), (1, 0), (0, 2)], X_ONE_MINUS_X2, &[1], 0),
            description: "flag ascent-plateau polynomials, L_{n+1} = (x + 2nx^2) L_n + x(1-x^2) L_n'",
        },
        CatalogEntry {
            name: "M",
            kind: Derived,
            spec: CatalogSpec::Derived(DerivedRule::AscentPlateau),
            description: "ascent-plateau polynomials, M_n = L_n^E + L_n^O",
        },
        CatalogEntry {
            name: "N",
            kind: Derived,
            spec: CatalogSpec::Derived(DerivedRule::LeftAscentPlateau),
            description: "left ascent-plateau polynomials, N_n = L_n^E + x L_n^O",
        },
        CatalogEntry {
            name: "T",
            kind: Single,
            spec: single(&[(0, 0), (1, 0), (0, 1)], X_ONE_MINUS_X2, &[1], 0),
            description: "up-down run polynomials, T_{n+1} = x(nx + 1) T_n + x(1-x^2) T_n'",
        },
        CatalogEntry {
            name: "R",
            kind: Single,
            spec: single(&[(1, 0), (0, 0), (0, 1)], X_ONE_MINUS_X2, &[1, 1], 1),
            description: "R_{n+1} = (nx^2 + 1) R_n + x(1-x^2) R_n', R_1 = 1 + x; R_n = Wbar_n(x^2) + x W_n(x^2)",
        },
        CatalogEntry {
            name: "W",
            kind: Single,
            spec: single(&[(2, 0), (-1, 1)], TWO_X_ONE_MINUS_X, &[1], 1),
            description: "interior peak polynomials, W_{n+1} = (nx - x + 2) W_n + 2x(1-x) W_n'",
        },
        CatalogEntry {
            name: "Wbar",
            kind: Single,
            spec: single(&[(1, 0), (0, 1)], TWO_X_ONE_MINUS_X, &[1], 1),
            description: "left peak polynomials, Wbar_{n+1} = (nx + 1) Wbar_n + 2x(1-x) Wbar_n'",
        },
        CatalogEntry {
            name: "H",
            kind: Single,
            spec: single(&[(1, 0), (1, 0), (0, 2)], &[(0, 0), (2, 0), (0, 0), (-2, 0)], &[1], 0),
            description: "H_{n+1} = (2nx^2 + x + 1) H_n + 2x(1-x^2) H_n'; H_n = U_n(x^2) + x V_n(x^2)",
        },
        CatalogEntry {
            name: "Htilde",
            kind: Single,
            spec: single(&[(-1, 0), (3, 0), (0, 2)], &[(0, 0), (2, 0), (0, 0), (-2, 0)], &[0, 1], 1),
            description: "alternating run polynomials of signed permutations, Htilde_{n+1} = (2nx^2 + 3x - 1) Htilde_n + 2x(1-x^2) Htilde_n'",
        },
        CatalogEntry {
            name: "b",
            kind: Single,
            spec: single(&[(0, 0), (1, 1), (1, 1)], X_ONE_MINUS_X2, &[0, 1], 0),
            description: "symmetric tree-like tableaux, b_{n+1} = (n+1)x(1+x) b_n + x(1-x^2) b_n'",
        },
        CatalogEntry {
            name: "CEO",
            kind: Pair,
            spec: pair(
                &[(1, 0), (0, 2)],
                TWO_X_ONE_MINUS_X,
                &[(0, 0), (1, 0)],
                &[(2, 0), (-1, 2)],
                TWO_X_ONE_MINUS_X,
                &[(1, 0)],
                (&[1], &[1]),
                1,
            ),
            description: "(C_n^E, C_n^O) with C_1^E = C_1^O = 1",
        },
        CatalogEntry {
            name: "LEO",
            kind: Pair,
            spec: pair(
                &[(0, 0), (0, 2)],
                TWO_X_ONE_MINUS_X,
                &[(0, 0), (1, 0)],
                &[(1, 0), (-1, 2)],
                TWO_X_ONE_MINUS_X,
                &[(1, 0)],
                (&[], &[1]),
                1,
            ),
            description: "(L_n^E, L_n^O) with L_1^E = 0, L_1^O = 1",
        },
        CatalogEntry {
            name: "TEO",
            kind: Pair,
            spec: pair(
                &[(0, 0), (0, 1)],
                TWO_X_ONE_MINUS_X,
                &[(0, 0), (1, 0)],
                &[(1, 0), (-1, 1)],
                TWO_X_ONE_MINUS_X,
                &[(1, 0)],
                (&[], &[1]),
                1,
            ),
            description: "(T_n^E, T_n^O) with T_1^E = 0, T_1^O = 1",
        },
        CatalogEntry {
            name: "UV",
            kind: Pair,
            spec: pair(
                &[(1, 0), (0, 2)],
                &[(0, 0), (4, 0), (-4, 0)],
                &[(0, 0), (1, 0)],
                &[(3, 0), (-2, 2)],
                &[(0, 0), (4, 0), (-4, 0)],
                &[(1, 0)],
                (&[1], &[]),
                0,
            ),
            description: "(U_n, V_n), peaks and valleys over signed permutations with positive first letter, U_0 = 1, V_0 = 0",
        },
    ]
}

pub fn lookup(name: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Single recurrence by name; errors for pairs and derived entries.
pub fn single_spec(name: &str) -> Result<RecurrenceSpec> {
    lookup(name)?
        .single()
        .cloned()
        .ok_or_else(|| Error::UnknownName(format!("{name} is not a single recurrence")))
}

pub fn pair_spec(name: &str) -> Result<PairSystemSpec> {
    lookup(name)?
        .pair()
        .cloned()
        .ok_or_else(|| Error::UnknownName(format!("{name} is not a pair system")))
}

/// The single recurrence each named pair system is the even/odd split of.
pub fn pair_companion(pair_name: &str) -> Option<&'static str> {
    match pair_name {
        "CEO" => Some("C"),
        "LEO" => Some("L"),
        "TEO" => Some("T"),
        "UV" => Some("H"),
        _ => None,
    }
}

fn derived(rule: DerivedRule, n_max: usize) -> Result<Vec<IntPoly>> {
    match rule {
        DerivedRule::TypeD => {
            let a = single_spec("A")?.iterate(n_max)?;
            let b = single_spec("B")?.iterate(n_max)?;
            Ok((0..=n_max)
                .map(|n| {
                    if n < 2 {
                        return IntPoly::one();
                    }
                    let factor = BigInt::from(n) * (BigInt::one() << (n - 1));
                    &b[n] - &a[n - 1].shift(1).scale(&factor)
                })
                .collect())
        }
        DerivedRule::AscentPlateau | DerivedRule::LeftAscentPlateau => {
            let l = single_spec("L")?.iterate(n_max)?;
            Ok(l.iter()
                .map(|ln| {
                    let (e, o) = ln.hb_split();
                    match rule {
                        DerivedRule::AscentPlateau => &e + &o,
                        _ => &e + &o.shift(1),
                    }
                })
                .collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn names_are_unique() {
        let cat = catalog();
        let mut names: Vec<_> = cat.iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), cat.len());
        assert_eq!(cat.len(), 18);
    }

    #[test]
    fn instantiate_examples() {
        let c = single_spec("C").unwrap();
        assert_eq!(c.alpha.instantiate(1), p(&[1, 1, 2]));
        let ceo = pair_spec("CEO").unwrap();
        assert_eq!(ceo.u.instantiate(1), p(&[2, 1]));
        assert_eq!(ceo.w.instantiate(7), ceo.w.instantiate(0));
    }

    #[test]
    fn small_initial_values() {
        assert_eq!(single_spec("C").unwrap().iterate(2).unwrap(), vec![p(&[1]), p(&[1, 1]), p(&[1, 3, 3, 1])]);
        assert_eq!(single_spec("L").unwrap().at(3).unwrap(), p(&[0, 1, 3, 7, 3, 1]));
        assert_eq!(
            single_spec("b").unwrap().iterate(2).unwrap(),
            vec![p(&[0, 1]), p(&[0, 1, 1]), p(&[0, 1, 4, 3])]
        );
        assert_eq!(single_spec("A").unwrap().at(3).unwrap(), p(&[1, 4, 1]));
        assert_eq!(single_spec("B").unwrap().at(2).unwrap(), p(&[1, 6, 1]));
        assert_eq!(single_spec("Htilde").unwrap().at(2).unwrap(), p(&[0, 1, 3]));
        assert_eq!(single_spec("T").unwrap().at(3).unwrap(), p(&[0, 1, 3, 2]));
    }

    #[test]
    fn pair_examples() {
        assert_eq!(pair_spec("CEO").unwrap().at(2).unwrap(), (p(&[1, 3]), p(&[3, 1])));
        assert_eq!(pair_spec("LEO").unwrap().at(2).unwrap(), (p(&[0, 1]), p(&[1, 1])));
        assert_eq!(pair_spec("TEO").unwrap().at(3).unwrap(), (p(&[0, 3]), p(&[1, 2])));
    }

    #[test]
    fn derived_entries() {
        let d = lookup("D").unwrap().polys(3).unwrap();
        assert_eq!(d[2], p(&[1, 2, 1]));
        let m = lookup("M").unwrap().polys(3).unwrap();
        let n = lookup("N").unwrap().polys(3).unwrap();
        assert_eq!(m[3], p(&[1, 10, 4]));
        assert_eq!(n[3], p(&[0, 4, 10, 1]));
    }

    #[test]
    fn unknown_and_wrong_kind() {
        assert!(matches!(lookup("Z"), Err(Error::UnknownName(_))));
        assert!(single_spec("CEO").is_err());
        assert!(pair_spec("C").is_err());
        assert!(lookup("CEO").unwrap().polys(2).is_err());
    }
}
