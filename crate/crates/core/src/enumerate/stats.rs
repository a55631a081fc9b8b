//! Statistics on words. Boundary conventions (`π(0) = 0`, `π(0) = -π(2)`) are
//! realized by building the padded word rather than by index special cases.

use super::{Element, StatName};
use crate::error::{Error, Result};

/// Value of `name` on `elem`, checking that the statistic is defined for the
/// element's kind (`des_D` needs an even signed permutation; `ipk`, `lpk`,
/// `udrun` need an unsigned one).
pub fn statistic(elem: &Element, name: StatName) -> Result<u32> {
    use StatName::*;
    let invalid = |family: &str| Error::InvalidStatistic {
        family: family.to_string(),
        stat: name.to_string(),
    };
    match elem {
        Element::Stirling(s) => {
            if matches!(name, Ap | Lap | Fap) {
                Ok(value(s.word(), name))
            } else {
                Err(invalid("stirling"))
            }
        }
        Element::Perm(p) => match name {
            Ap | Lap | Fap => Err(invalid("signed")),
            DesD if !p.is_even() => Err(invalid("signed")),
            Ipk | Lpk | Udrun if !p.is_unsigned() => Err(invalid("signed")),
            _ => Ok(value(p.window(), name)),
        },
    }
}

/// Unchecked evaluation on a raw word of the right family.
pub(crate) fn value(w: &[i32], name: StatName) -> u32 {
    use StatName::*;
    match name {
        DesA => des_a(w),
        DesB => des_a(w) + first_negative(w),
        DesD => des_d(w),
        Fdes => 2 * des_a(w) + first_negative(w),
        Neg => neg(w),
        ExcA => exc_a(w),
        Fexc => 2 * exc_a(w) + neg(w),
        Ipk => ipk(w),
        Lpk | Pk => peaks(&zero_padded(w)),
        Val => valleys(&zero_padded(w)),
        Udrun | Altrun => runs(&zero_padded(w)),
        Ap => ap(w),
        Lap => ap(&zero_padded(w)),
        Fap => 2 * ap(w) + u32::from(w.len() >= 2 && w[0] == w[1]),
    }
}

fn zero_padded(w: &[i32]) -> Vec<i32> {
    let mut s = Vec::with_capacity(w.len() + 1);
    s.push(0);
    s.extend_from_slice(w);
    s
}

fn des_a(w: &[i32]) -> u32 {
    w.windows(2).filter(|p| p[0] > p[1]).count() as u32
}

fn first_negative(w: &[i32]) -> u32 {
    u32::from(w.first().is_some_and(|&v| v < 0))
}

/// Descents of `π(0) π(1) … π(n)` with `π(0) = -π(2)`. For `n < 2` there is no
/// `π(2)` and the `i = 0` position contributes nothing.
fn des_d(w: &[i32]) -> u32 {
    if w.len() < 2 {
        return des_a(w);
    }
    let mut s = Vec::with_capacity(w.len() + 1);
    s.push(-w[1]);
    s.extend_from_slice(w);
    des_a(&s)
}

fn neg(w: &[i32]) -> u32 {
    w.iter().filter(|&&v| v < 0).count() as u32
}

fn exc_a(w: &[i32]) -> u32 {
    w.iter()
        .enumerate()
        .filter(|&(i, &v)| v > i as i32 + 1)
        .count() as u32
}

/// Peaks at interior positions of the word as given.
fn peaks(s: &[i32]) -> u32 {
    s.windows(3).filter(|t| t[0] < t[1] && t[1] > t[2]).count() as u32
}

fn valleys(s: &[i32]) -> u32 {
    s.windows(3).filter(|t| t[0] > t[1] && t[1] < t[2]).count() as u32
}

/// `ipk`: peaks at positions `2..=n-1` of the unpadded word.
fn ipk(w: &[i32]) -> u32 {
    peaks(w)
}

/// Number of maximal monotone runs.
fn runs(s: &[i32]) -> u32 {
    if s.len() < 2 {
        return 0;
    }
    let turns = s
        .windows(3)
        .filter(|t| (t[1] > t[0]) != (t[2] > t[1]))
        .count() as u32;
    1 + turns
}

/// Ascent-plateaus `σ(i-1) < σ(i) = σ(i+1)` at interior positions.
fn ap(s: &[i32]) -> u32 {
    s.windows(3).filter(|t| t[0] < t[1] && t[1] == t[2]).count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{generate, Family, FamilyFilter, SignedPerm, StirlingPerm};

    fn perm(w: &[i32]) -> Element {
        Element::Perm(SignedPerm::new(w.to_vec()).unwrap())
    }

    fn stirling(w: &[i32]) -> Element {
        Element::Stirling(StirlingPerm::new(w.to_vec()).unwrap())
    }

    #[test]
    fn named_examples() {
        assert_eq!(statistic(&perm(&[-1, -2]), StatName::DesD).unwrap(), 2);
        assert_eq!(statistic(&stirling(&[1, 1]), StatName::Fap).unwrap(), 1);
        assert_eq!(statistic(&stirling(&[1, 1]), StatName::Ap).unwrap(), 0);
        assert_eq!(statistic(&perm(&[3, 2, 1]), StatName::Udrun).unwrap(), 2);
    }

    #[test]
    fn small_values() {
        assert_eq!(statistic(&perm(&[-1]), StatName::DesB).unwrap(), 1);
        assert_eq!(statistic(&perm(&[2, -1]), StatName::Fdes).unwrap(), 2);
        assert_eq!(statistic(&perm(&[-2, 1]), StatName::Fdes).unwrap(), 1);
        assert_eq!(statistic(&perm(&[2, 3, 1]), StatName::ExcA).unwrap(), 2);
        assert_eq!(statistic(&perm(&[2, -1]), StatName::Fexc).unwrap(), 3);
        assert_eq!(statistic(&perm(&[1, 3, 2]), StatName::Ipk).unwrap(), 1);
        assert_eq!(statistic(&perm(&[2, 1, 3]), StatName::Ipk).unwrap(), 0);
        assert_eq!(statistic(&perm(&[2, 1, 3]), StatName::Lpk).unwrap(), 1);
        assert_eq!(statistic(&perm(&[1]), StatName::Altrun).unwrap(), 1);
        assert_eq!(statistic(&perm(&[1, -2, 3]), StatName::Pk).unwrap(), 1);
        assert_eq!(statistic(&perm(&[1, -2, 3]), StatName::Val).unwrap(), 1);
        assert_eq!(statistic(&perm(&[1, -2, 3]), StatName::Altrun).unwrap(), 3);
        assert_eq!(statistic(&stirling(&[1, 2, 2, 1]), StatName::Lap).unwrap(), 1);
        assert_eq!(statistic(&stirling(&[1, 1, 2, 2]), StatName::Lap).unwrap(), 2);
        assert_eq!(statistic(&stirling(&[2, 2, 1, 1]), StatName::Ap).unwrap(), 0);
        // n = 1: the π(0) = -π(2) position is vacuous
        assert_eq!(statistic(&perm(&[1]), StatName::DesD).unwrap(), 0);
    }

    #[test]
    fn invalid_pairings() {
        assert!(statistic(&perm(&[-1, 2]), StatName::DesD).is_err());
        assert!(statistic(&perm(&[-1, 2]), StatName::Udrun).is_err());
        assert!(statistic(&perm(&[1, 2]), StatName::Ap).is_err());
        assert!(statistic(&stirling(&[1, 1]), StatName::DesA).is_err());
    }

    #[test]
    fn elementwise_relations() {
        for n in 0..=5 {
            for e in generate(Family::Signed, n, FamilyFilter::None).unwrap() {
                let w = e.word();
                let des_a = value(w, StatName::DesA);
                let des_b = value(w, StatName::DesB);
                assert_eq!(value(w, StatName::Fdes), des_a + des_b);
                assert_eq!(value(w, StatName::Fexc), 2 * value(w, StatName::ExcA) + value(w, StatName::Neg));
                if n >= 1 && w[0] > 0 {
                    assert_eq!(des_b, des_a);
                    // runs of the 0-prepended window count one more than the turning points
                    assert_eq!(value(w, StatName::Altrun), value(w, StatName::Pk) + value(w, StatName::Val) + 1);
                } else if n >= 1 {
                    assert_eq!(des_b, des_a + 1);
                }
            }
        }
        for n in 0..=5 {
            for e in generate(Family::Stirling, n, FamilyFilter::None).unwrap() {
                let w = e.word();
                assert_eq!(value(w, StatName::Fap), value(w, StatName::Ap) + value(w, StatName::Lap));
            }
        }
    }
}
