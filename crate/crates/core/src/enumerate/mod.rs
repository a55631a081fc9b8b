//! Brute-force generation of `S_n`, `S^B_n`, `S^D_n` and the Stirling
//! permutations `Q_n`, with exact statistics and joint distributions.
//!
//! Elements are handled as plain words (`&[i32]`) on the hot path. Signed
//! permutations are stored by their window `π(1) … π(n)`; Stirling
//! permutations by their letters.
//!
//! Every space can be split by fixed prefixes; [`fold_partitioned`] counts the
//! parts independently and merges, which is how the large families (|Q_8| is
//! about two million) are handled.

mod dist;
mod phi;
mod stats;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dist::{joint_distribution, plain_poly, stat_poly, weighted_poly, JointDistribution};
pub use phi::phi_map;
pub use stats::statistic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Sym,
    Signed,
    EvenSigned,
    Stirling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyFilter {
    None,
    FirstPositive,
    FirstNegative,
    LastPositive,
    LastNegative,
    StirlingPlus,
    StirlingMinus,
    SymDescEnd,
    SymAscEnd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatName {
    DesA,
    DesB,
    DesD,
    Fdes,
    Neg,
    ExcA,
    Fexc,
    Ipk,
    Lpk,
    Udrun,
    Pk,
    Val,
    Altrun,
    Ap,
    Lap,
    Fap,
}

macro_rules! named {
    ($ty:ident { $($variant:ident => $text:literal),* $(,)? }) => {
        impl $ty {
            pub const ALL: &'static [$ty] = &[$($ty::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self { $($ty::$variant => $text),* }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $ty {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($text => Ok($ty::$variant),)*
                    _ => Err(Error::UnknownName(s.to_string())),
                }
            }
        }
    };
}

named!(Family {
    Sym => "sym",
    Signed => "signed",
    EvenSigned => "even_signed",
    Stirling => "stirling",
});

named!(FamilyFilter {
    None => "none",
    FirstPositive => "first_positive",
    FirstNegative => "first_negative",
    LastPositive => "last_positive",
    LastNegative => "last_negative",
    StirlingPlus => "stirling_plus",
    StirlingMinus => "stirling_minus",
    SymDescEnd => "sym_desc_end",
    SymAscEnd => "sym_asc_end",
});

named!(StatName {
    DesA => "des_A",
    DesB => "des_B",
    DesD => "des_D",
    Fdes => "fdes",
    Neg => "neg",
    ExcA => "exc_A",
    Fexc => "fexc",
    Ipk => "ipk",
    Lpk => "lpk",
    Udrun => "udrun",
    Pk => "pk",
    Val => "val",
    Altrun => "altrun",
    Ap => "ap",
    Lap => "lap",
    Fap => "fap",
});

impl StatName {
    pub fn applies_to(self, family: Family) -> bool {
        use Family::*;
        use StatName::*;
        match self {
            DesA | ExcA => matches!(family, Sym | Signed | EvenSigned),
            DesB | Fdes | Neg | Fexc | Pk | Val | Altrun => matches!(family, Signed | EvenSigned),
            DesD => family == EvenSigned,
            Ipk | Lpk | Udrun => family == Sym,
            Ap | Lap | Fap => family == Stirling,
        }
    }
}

impl FamilyFilter {
    pub fn applies_to(self, family: Family, n: usize) -> bool {
        use Family::*;
        use FamilyFilter::*;
        match self {
            None => true,
            FirstPositive | FirstNegative | LastPositive | LastNegative => {
                matches!(family, Signed | EvenSigned) && n >= 1
            }
            StirlingPlus | StirlingMinus => family == Stirling && n >= 1,
            SymDescEnd | SymAscEnd => family == Sym && n >= 1,
        }
    }

    /// Membership test on a word of the filter's family.
    pub(crate) fn accepts(self, w: &[i32]) -> bool {
        use FamilyFilter::*;
        match self {
            None => true,
            FirstPositive => w[0] > 0,
            FirstNegative => w[0] < 0,
            LastPositive => w[w.len() - 1] > 0,
            LastNegative => w[w.len() - 1] < 0,
            StirlingPlus => w[0] < w[1],
            StirlingMinus => w[0] == w[1],
            // π(n-1) against π(n), with π(0) = 0 when n = 1
            SymDescEnd | SymAscEnd => {
                let n = w.len();
                let before = if n >= 2 { w[n - 2] } else { 0 };
                (before > w[n - 1]) == (self == SymDescEnd)
            }
        }
    }
}

pub(crate) fn check_filter(family: Family, n: usize, filter: FamilyFilter) -> Result<()> {
    if filter.applies_to(family, n) {
        Ok(())
    } else {
        Err(Error::IncompatibleFilter {
            family: family.to_string(),
            filter: filter.to_string(),
            n,
        })
    }
}

/// A signed permutation by its window `π(1) … π(n)`. Ordinary permutations
/// are the windows with no negative entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPerm(Vec<i32>);

impl SignedPerm {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Domain(format!("{window:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        Ok(SignedPerm(window))
    }

    pub fn window(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negatives(&self) -> usize {
        self.0.iter().filter(|&&v| v < 0).count()
    }

    /// Member of `S^D_n`.
    pub fn is_even(&self) -> bool {
        self.negatives() % 2 == 0
    }

    pub fn is_unsigned(&self) -> bool {
        self.negatives() == 0
    }
}

/// A Stirling permutation: a word on `{1,1,…,n,n}` in which every letter
/// between the two copies of `i` exceeds `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StirlingPerm(Vec<i32>);

impl StirlingPerm {
    pub fn new(word: Vec<i32>) -> Result<Self> {
        let bad = || Error::Domain(format!("{word:?} is not a Stirling permutation"));
        if word.len() % 2 != 0 {
            return Err(bad());
        }
        let n = word.len() / 2;
        let mut first = vec![None; n + 1];
        let mut count = vec![0usize; n + 1];
        for (pos, &v) in word.iter().enumerate() {
            if v < 1 || v as usize > n {
                return Err(bad());
            }
            let v = v as usize;
            count[v] += 1;
            match first[v] {
                None => first[v] = Some(pos),
                Some(start) => {
                    if word[start + 1..pos].iter().any(|&between| between as usize <= v) {
                        return Err(bad());
                    }
                }
            }
        }
        if count[1..].iter().any(|&c| c != 2) {
            return Err(bad());
        }
        Ok(StirlingPerm(word))
    }

    pub fn word(&self) -> &[i32] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len() / 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Element {
    Perm(SignedPerm),
    Stirling(StirlingPerm),
}

impl Element {
    pub fn word(&self) -> &[i32] {
        match self {
            Element::Perm(p) => p.window(),
            Element::Stirling(s) => s.word(),
        }
    }
}

/// `n!`, `2^n n!`, `2^{n-1} n!` (`1` at `n = 0`) or `(2n-1)!!`.
pub fn family_size(family: Family, n: usize) -> BigUint {
    let fact: BigUint = (1..=n).map(BigUint::from).product();
    match family {
        Family::Sym => fact,
        Family::Signed => fact << n,
        Family::EvenSigned => fact << n.saturating_sub(1),
        Family::Stirling => (1..=n).map(|k| BigUint::from(2 * k - 1)).product(),
    }
}

fn is_even_word(w: &[i32]) -> bool {
    w.iter().filter(|&&v| v < 0).count() % 2 == 0
}

/// Depth-first extension of a permutation prefix. Candidates are tried in
/// increasing value, so leaves come out in lexicographic order.
fn extend_perm(word: &mut Vec<i32>, used: &mut u64, n: usize, signed: bool, visit: &mut dyn FnMut(&[i32])) {
    if word.len() == n {
        visit(word);
        return;
    }
    let n_i = n as i32;
    let candidates = (-n_i..=n_i).filter(|&v| v != 0 && (signed || v > 0));
    for v in candidates {
        let bit = 1u64 << v.unsigned_abs();
        if *used & bit != 0 {
            continue;
        }
        *used |= bit;
        word.push(v);
        extend_perm(word, used, n, signed, visit);
        word.pop();
        *used &= !bit;
    }
}

/// Inserts the adjacent pair `kk` into every gap, for `k = order+1 ..= n`.
fn extend_stirling(word: &mut Vec<i32>, n: usize, visit: &mut dyn FnMut(&[i32])) {
    let k = word.len() / 2 + 1;
    if k > n {
        visit(word);
        return;
    }
    let letter = k as i32;
    for gap in 0..=word.len() {
        word.splice(gap..gap, [letter, letter]);
        extend_stirling(word, n, visit);
        word.drain(gap..gap + 2);
    }
}

/// Starting points of the partition: fixed prefixes (or small Stirling
/// permutations) whose extensions cover the family exactly once.
fn seeds(family: Family, n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    match family {
        Family::Sym | Family::Signed | Family::EvenSigned => {
            let mut prefix = Vec::new();
            prefixes(&mut prefix, n, n.min(2), family != Family::Sym, &mut out);
        }
        Family::Stirling => {
            let m = n.min(4);
            extend_stirling(&mut Vec::new(), m, &mut |w: &[i32]| out.push(w.to_vec()));
        }
    }
    out
}

fn prefixes(prefix: &mut Vec<i32>, n: usize, depth: usize, signed: bool, out: &mut Vec<Vec<i32>>) {
    if prefix.len() == depth {
        out.push(prefix.clone());
        return;
    }
    let n_i = n as i32;
    for v in (-n_i..=n_i).filter(|&v| v != 0 && (signed || v > 0)) {
        if prefix.iter().any(|p| p.unsigned_abs() == v.unsigned_abs()) {
            continue;
        }
        prefix.push(v);
        prefixes(prefix, n, depth, signed, out);
        prefix.pop();
    }
}

fn visit_seed(family: Family, n: usize, filter: FamilyFilter, seed: &[i32], visit: &mut dyn FnMut(&[i32])) {
    let mut accept = |w: &[i32]| {
        if family == Family::EvenSigned && !is_even_word(w) {
            return;
        }
        if filter.accepts(w) {
            visit(w);
        }
    };
    let mut word = seed.to_vec();
    match family {
        Family::Stirling => extend_stirling(&mut word, n, &mut accept),
        _ => {
            let mut used = seed.iter().fold(0u64, |m, v| m | (1u64 << v.unsigned_abs()));
            extend_perm(&mut word, &mut used, n, family != Family::Sym, &mut accept);
        }
    }
}

/// Sequential visit of every qualifying element.
pub fn for_each(family: Family, n: usize, filter: FamilyFilter, mut visit: impl FnMut(&[i32])) -> Result<()> {
    check_filter(family, n, filter)?;
    for seed in seeds(family, n) {
        visit_seed(family, n, filter, &seed, &mut visit);
    }
    Ok(())
}

/// Counts each prefix class independently (in parallel when enabled) and
/// merges the per-class accumulators.
pub fn fold_partitioned<A, I, F, M>(
    family: Family,
    n: usize,
    filter: FamilyFilter,
    init: I,
    fold: F,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &[i32]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    check_filter(family, n, filter)?;
    let seeds = seeds(family, n);
    Ok(crate::par::map_reduce(
        &seeds,
        |seed| {
            let mut acc = init();
            visit_seed(family, n, filter, seed, &mut |w| fold(&mut acc, w));
            acc
        },
        &init,
        &merge,
    ))
}

/// Every qualifying element, in lexicographic order of the underlying words.
pub fn generate(family: Family, n: usize, filter: FamilyFilter) -> Result<Vec<Element>> {
    let mut words = Vec::new();
    for_each(family, n, filter, |w| words.push(w.to_vec()))?;
    words.sort();
    Ok(words
        .into_iter()
        .map(|w| match family {
            Family::Stirling => Element::Stirling(StirlingPerm(w)),
            _ => Element::Perm(SignedPerm(w)),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(family: Family, n: usize, filter: FamilyFilter) -> usize {
        generate(family, n, filter).unwrap().len()
    }

    #[test]
    fn generate_examples() {
        assert_eq!(count(Family::Sym, 3, FamilyFilter::None), 6);
        assert_eq!(count(Family::Stirling, 3, FamilyFilter::None), 15);
        let c_plus = generate(Family::Signed, 2, FamilyFilter::FirstPositive).unwrap();
        let windows: Vec<&[i32]> = c_plus.iter().map(Element::word).collect();
        assert_eq!(windows, vec![&[1, -2][..], &[1, 2], &[2, -1], &[2, 1]]);
    }

    #[test]
    fn family_sizes() {
        for n in 0..=6 {
            for family in [Family::Sym, Family::Signed, Family::EvenSigned] {
                assert_eq!(BigUint::from(count(family, n, FamilyFilter::None)), family_size(family, n), "{family} {n}");
            }
        }
        for n in 0..=6 {
            assert_eq!(BigUint::from(count(Family::Stirling, n, FamilyFilter::None)), family_size(Family::Stirling, n));
        }
        assert_eq!(family_size(Family::Stirling, 8), BigUint::from(2_027_025u32));
    }

    #[test]
    fn generated_elements_are_valid_and_distinct() {
        let q = generate(Family::Stirling, 5, FamilyFilter::None).unwrap();
        for e in &q {
            StirlingPerm::new(e.word().to_vec()).unwrap();
        }
        let mut words: Vec<_> = q.iter().map(|e| e.word().to_vec()).collect();
        words.dedup();
        assert_eq!(words.len(), 945);
        for e in generate(Family::EvenSigned, 4, FamilyFilter::None).unwrap() {
            let p = SignedPerm::new(e.word().to_vec()).unwrap();
            assert!(p.is_even());
        }
    }

    #[test]
    fn filters_partition() {
        for n in 1..=5 {
            let all = count(Family::Signed, n, FamilyFilter::None);
            assert_eq!(count(Family::Signed, n, FamilyFilter::FirstPositive) * 2, all);
            assert_eq!(
                count(Family::Signed, n, FamilyFilter::LastPositive) + count(Family::Signed, n, FamilyFilter::LastNegative),
                all
            );
            let q = count(Family::Stirling, n, FamilyFilter::None);
            assert_eq!(
                count(Family::Stirling, n, FamilyFilter::StirlingPlus) + count(Family::Stirling, n, FamilyFilter::StirlingMinus),
                q
            );
            let s = count(Family::Sym, n, FamilyFilter::None);
            assert_eq!(
                count(Family::Sym, n, FamilyFilter::SymDescEnd) + count(Family::Sym, n, FamilyFilter::SymAscEnd),
                s
            );
        }
        assert_eq!(count(Family::Sym, 1, FamilyFilter::SymAscEnd), 1);
    }

    #[test]
    fn incompatible_filters() {
        assert!(matches!(
            generate(Family::Sym, 3, FamilyFilter::FirstPositive),
            Err(Error::IncompatibleFilter { .. })
        ));
        assert!(generate(Family::Signed, 0, FamilyFilter::FirstPositive).is_err());
        assert!(generate(Family::Stirling, 2, FamilyFilter::SymDescEnd).is_err());
    }

    #[test]
    fn partitioned_fold_matches_sequential() {
        for family in Family::ALL.iter().copied() {
            let total = fold_partitioned(family, 5, FamilyFilter::None, || 0u64, |a, _| *a += 1, |a, b| a + b).unwrap();
            assert_eq!(BigUint::from(total), family_size(family, 5));
        }
    }

    #[test]
    fn element_validation() {
        assert!(SignedPerm::new(vec![1, -1]).is_err());
        assert!(SignedPerm::new(vec![3, 1]).is_err());
        assert!(StirlingPerm::new(vec![1, 2, 1, 2]).is_err());
        assert!(StirlingPerm::new(vec![2, 1, 1, 2]).is_err());
        assert!(StirlingPerm::new(vec![1, 2, 2, 1]).is_ok());
    }

    #[test]
    fn names_round_trip() {
        for s in StatName::ALL {
            assert_eq!(s.as_str().parse::<StatName>().unwrap(), *s);
        }
        for f in FamilyFilter::ALL {
            assert_eq!(f.as_str().parse::<FamilyFilter>().unwrap(), *f);
        }
        assert!("desA".parse::<StatName>().is_err());
    }
}
