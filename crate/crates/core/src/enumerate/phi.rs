use super::SignedPerm;
use crate::error::{Error, Result};

/// Bijection from signed permutations with `π(1) > 0` onto those with
/// `π(n) > 0`, preserving `des_B`.
///
/// If `π(n) > 0` the permutation is returned unchanged. Otherwise, with `k`
/// the first index where a positive entry is followed by a negative one, the
/// result is the rotation `π(k+1) … π(n) π(1) … π(k)`.
pub fn phi_map(pi: &SignedPerm) -> Result<SignedPerm> {
    let w = pi.window();
    match (w.first(), w.last()) {
        (Some(&first), _) if first < 0 => Err(Error::Domain(format!("{w:?} does not start with a positive entry"))),
        (Some(_), Some(&last)) if last < 0 => {
            // π(1) > 0 and π(n) < 0, so a sign change from + to - exists
            let k = w.windows(2).position(|p| p[0] > 0 && p[1] < 0).expect("sign change") + 1;
            let mut out = w[k..].to_vec();
            out.extend_from_slice(&w[..k]);
            Ok(SignedPerm(out))
        }
        _ => Ok(pi.clone()),
    }
}
