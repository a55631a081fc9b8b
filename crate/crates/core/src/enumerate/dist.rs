use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde_json::{json, Value};

use super::{check_filter, fold_partitioned, stats, Family, FamilyFilter, StatName};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Exact joint counts of a list of statistics over a (filtered) family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointDistribution {
    pub family: Family,
    pub n: usize,
    pub filter: FamilyFilter,
    pub stats: Vec<StatName>,
    /// Statistic-value tuple, in the order of `stats`, to its count.
    pub entries: BTreeMap<Vec<u32>, BigUint>,
}

impl JointDistribution {
    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    fn axis(&self, stat: StatName) -> Result<usize> {
        self.stats
            .iter()
            .position(|&s| s == stat)
            .ok_or_else(|| Error::MissingAxis(stat.to_string()))
    }

    /// Marginal on a sub-list of the statistics.
    pub fn project(&self, onto: &[StatName]) -> Result<JointDistribution> {
        let axes = onto.iter().map(|&s| self.axis(s)).collect::<Result<Vec<_>>>()?;
        let mut entries = BTreeMap::new();
        for (key, count) in &self.entries {
            let sub: Vec<u32> = axes.iter().map(|&a| key[a]).collect();
            *entries.entry(sub).or_insert_with(BigUint::zero) += count;
        }
        Ok(JointDistribution { stats: onto.to_vec(), entries, ..self.clone() })
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(key, count)| json!({ "key": key, "count": count.to_string() }))
            .collect();
        json!({
            "family": self.family.as_str(),
            "n": self.n,
            "filter": self.filter.as_str(),
            "stats": self.stats.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            "entries": entries,
        })
    }

    pub fn from_json(value: &Value) -> Result<JointDistribution> {
        let bad = |what: &str| Error::Parse(format!("distribution JSON: bad or missing {what}"));
        let text = |key: &str| value.get(key).and_then(Value::as_str).ok_or_else(|| bad(key));
        let family = text("family")?.parse()?;
        let filter = text("filter")?.parse()?;
        let n = value.get("n").and_then(Value::as_u64).ok_or_else(|| bad("n"))? as usize;
        let stats = value
            .get("stats")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("stats"))?
            .iter()
            .map(|s| s.as_str().ok_or_else(|| bad("stats"))?.parse())
            .collect::<Result<Vec<StatName>>>()?;
        let mut entries = BTreeMap::new();
        for entry in value.get("entries").and_then(Value::as_array).ok_or_else(|| bad("entries"))? {
            let key = entry
                .get("key")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("key"))?
                .iter()
                .map(|k| k.as_u64().map(|k| k as u32).ok_or_else(|| bad("key")))
                .collect::<Result<Vec<u32>>>()?;
            if key.len() != stats.len() {
                return Err(bad("key"));
            }
            let count: BigUint = entry
                .get("count")
                .and_then(Value::as_str)
                .and_then(|c| c.parse().ok())
                .ok_or_else(|| bad("count"))?;
            entries.insert(key, count);
        }
        Ok(JointDistribution { family, n, filter, stats, entries })
    }
}

/// Tallies the joint values of `stats` over every element of the filtered
/// family.
pub fn joint_distribution(
    family: Family,
    n: usize,
    filter: FamilyFilter,
    stats: &[StatName],
) -> Result<JointDistribution> {
    check_filter(family, n, filter)?;
    if let Some(s) = stats.iter().find(|s| !s.applies_to(family)) {
        return Err(Error::InvalidStatistic { family: family.to_string(), stat: s.to_string() });
    }
    let counts = fold_partitioned(
        family,
        n,
        filter,
        HashMap::<Vec<u32>, u64>::new,
        |acc, w| {
            let key = stats.iter().map(|&s| stats::value(w, s)).collect();
            *acc.entry(key).or_insert(0) += 1;
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    )?;
    let entries = counts.into_iter().map(|(k, v)| (k, BigUint::from(v))).collect();
    Ok(JointDistribution { family, n, filter, stats: stats.to_vec(), entries })
}

/// `Σ count · q0^{weight stat} · x^{axis stat}`.
pub fn stat_poly(dist: &JointDistribution, axis: StatName, weights: Option<(StatName, i64)>) -> Result<IntPoly> {
    let a = dist.axis(axis)?;
    let weight = weights.map(|(s, q0)| dist.axis(s).map(|i| (i, BigInt::from(q0)))).transpose()?;
    let mut coeffs: Vec<BigInt> = Vec::new();
    for (key, count) in &dist.entries {
        let e = key[a] as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        let mut term = BigInt::from(count.clone());
        if let Some((i, q0)) = &weight {
            term *= num_traits::pow(q0.clone(), key[*i] as usize);
        }
        coeffs[e] += term;
    }
    Ok(IntPoly::new(coeffs))
}

/// Generating polynomial of one statistic.
pub fn plain_poly(family: Family, n: usize, filter: FamilyFilter, stat: StatName) -> Result<IntPoly> {
    stat_poly(&joint_distribution(family, n, filter, &[stat])?, stat, None)
}

/// Generating polynomial of `stat` with each element weighted by
/// `q0^{weight}`.
pub fn weighted_poly(
    family: Family,
    n: usize,
    filter: FamilyFilter,
    stat: StatName,
    weight: StatName,
    q0: i64,
) -> Result<IntPoly> {
    let dist = joint_distribution(family, n, filter, &[stat, weight])?;
    stat_poly(&dist, stat, Some((weight, q0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{family_size, generate};

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn counts(d: &JointDistribution) -> Vec<(u32, u64)> {
        d.entries.iter().map(|(k, v)| (k[0], v.to_string().parse().unwrap())).collect()
    }

    #[test]
    fn eulerian_over_s3() {
        let d = joint_distribution(Family::Sym, 3, FamilyFilter::None, &[StatName::DesA]).unwrap();
        assert_eq!(counts(&d), vec![(0, 1), (1, 4), (2, 1)]);
        assert_eq!(d.total(), BigUint::from(6u32));
    }

    #[test]
    fn ascent_plateaus_over_q3_minus() {
        let d = joint_distribution(Family::Stirling, 3, FamilyFilter::StirlingMinus, &[StatName::Ap]).unwrap();
        assert_eq!(counts(&d), vec![(0, 1), (1, 7), (2, 1)]);
    }

    #[test]
    fn projections() {
        assert_eq!(plain_poly(Family::Signed, 2, FamilyFilter::None, StatName::DesB).unwrap(), poly(&[1, 6, 1]));
        assert_eq!(plain_poly(Family::EvenSigned, 2, FamilyFilter::None, StatName::Fexc).unwrap(), poly(&[1, 0, 3]));
        // fdes over the eight signed permutations of size 2, listed by hand:
        // 12:0  21:2  -12:1  1-2:2  -21:1  2-1:2  -1-2:3  -2-1:1
        assert_eq!(plain_poly(Family::Signed, 2, FamilyFilter::None, StatName::Fdes).unwrap(), poly(&[1, 3, 3, 1]));
        let q1 = weighted_poly(Family::Signed, 3, FamilyFilter::None, StatName::Fdes, StatName::Neg, 1).unwrap();
        assert_eq!(q1, plain_poly(Family::Signed, 3, FamilyFilter::None, StatName::Fdes).unwrap());
    }

    #[test]
    fn weighted_matches_direct_sum() {
        let elems = generate(Family::Signed, 3, FamilyFilter::None).unwrap();
        let mut direct = vec![BigInt::zero(); 8];
        for e in &elems {
            let w = e.word();
            direct[stats::value(w, StatName::Fdes) as usize] += BigInt::from(-2i64).pow(stats::value(w, StatName::Neg));
        }
        let weighted = weighted_poly(Family::Signed, 3, FamilyFilter::None, StatName::Fdes, StatName::Neg, -2).unwrap();
        assert_eq!(weighted, IntPoly::new(direct));
    }

    #[test]
    fn totals_and_errors() {
        for family in Family::ALL.iter().copied() {
            let stat = StatName::ALL.iter().copied().find(|s| s.applies_to(family)).unwrap();
            let d = joint_distribution(family, 4, FamilyFilter::None, &[stat]).unwrap();
            assert_eq!(d.total(), family_size(family, 4));
        }
        assert!(matches!(
            joint_distribution(Family::Sym, 3, FamilyFilter::None, &[StatName::DesD]),
            Err(Error::InvalidStatistic { .. })
        ));
        let d = joint_distribution(Family::Sym, 3, FamilyFilter::None, &[StatName::DesA]).unwrap();
        assert!(matches!(stat_poly(&d, StatName::ExcA, None), Err(Error::MissingAxis(_))));
    }

    #[test]
    fn json_round_trip_and_projection() {
        let d = joint_distribution(Family::Signed, 3, FamilyFilter::FirstPositive, &[StatName::Fdes, StatName::Neg]).unwrap();
        let back = JointDistribution::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
        assert!(d.to_json()["entries"][0]["count"].is_string());
        let marginal = d.project(&[StatName::Fdes]).unwrap();
        assert_eq!(
            stat_poly(&marginal, StatName::Fdes, None).unwrap(),
            plain_poly(Family::Signed, 3, FamilyFilter::FirstPositive, StatName::Fdes).unwrap()
        );
    }
}
