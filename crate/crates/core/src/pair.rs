//! Arithmetic bookkeeping from group-level data (tower, ranks, cuspidal
//! index) to correspondence-level data (case tag and Weyl ranks).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weyl::CorrCase;

/// A sign, `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^e`.
    pub fn neg_one_pow(e: u32) -> Sign {
        if e.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Which kind of classical group a rank formula refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Symplectic,
    Unitary,
    EvenOrthogonal,
}

/// The rank at which the tower carries its cuspidal unipotent
/// representation: `k^2 + k` (symplectic), `(k^2 + k)/2` (unitary),
/// `k^2` (even orthogonal).
pub fn m_of_k(kind: GroupKind, k: u32) -> u32 {
    match kind {
        GroupKind::Symplectic => k * k + k,
        GroupKind::Unitary => (k * k + k) / 2,
        GroupKind::EvenOrthogonal => k * k,
    }
}

/// Dual-pair families. Only the first three feed the correspondence
/// formulas; odd orthogonal and linear towers are representable but
/// [`resolve`] refuses them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    /// `(Sp_{2m}, O^+_{2mp})`
    SpOPlus,
    /// `(Sp_{2m}, O^-_{2mp})`
    SpOMinus,
    /// `(U_m, U_mp)`
    UU,
    /// `(Sp_{2m}, O_{2mp+1})` — bookkeeping only
    SpOOdd,
    /// `(GL_m, GL_mp)` — bookkeeping only
    GlGl,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::SpOPlus => "sp-o-plus",
            Family::SpOMinus => "sp-o-minus",
            Family::UU => "u-u",
            Family::SpOOdd => "sp-o-odd",
            Family::GlGl => "gl-gl",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sp-o-plus" => Ok(Family::SpOPlus),
            "sp-o-minus" => Ok(Family::SpOMinus),
            "u-u" => Ok(Family::UU),
            "sp-o-odd" => Ok(Family::SpOOdd),
            "gl-gl" => Ok(Family::GlGl),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }
}

/// First occurrence for `(Sp, O^ε)` towers: `λ_k` lands at index `k` when
/// `ε = (-1)^k`, and at `k + 1` otherwise.
pub fn first_occurrence_sp_o(eps: Sign, k: u32) -> u32 {
    if eps == Sign::neg_one_pow(k) {
        k
    } else {
        k + 1
    }
}

/// First occurrence for unitary towers: the neighbour `k' ∈ {k-1, k+1}`
/// whose sign `(-1)^{k'(k'+1)/2}` matches the target tower. Exactly one
/// neighbour matches. The degenerate `k = 0` into the even tower is its own
/// first occurrence (`θ(0) = 0`, the `k = k' = 0` case of the unitary
/// formulas); there is no index below it to land on.
pub fn first_occurrence_unitary(k: u32, target: Sign) -> Result<u32> {
    let tower_sign = |j: u32| Sign::neg_one_pow(j * (j + 1) / 2);
    if k == 0 {
        return Ok(match target {
            Sign::Minus => 1,
            Sign::Plus => 0,
        });
    }
    if tower_sign(k + 1) == target {
        Ok(k + 1)
    } else {
        debug_assert_eq!(tower_sign(k - 1), target);
        Ok(k - 1)
    }
}

/// Resolved correspondence data for one dual pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualPairSpec {
    pub family: Family,
    pub m: u32,
    pub mp: u32,
    pub k: u32,
    pub theta_k: u32,
    pub case: CorrCase,
    pub l: u32,
    pub lp: u32,
}

/// Populates a [`DualPairSpec`] from group-level data.
///
/// For `(Sp_{2m}, O^ε_{2mp})`: `l = m - k(k+1)`, `lp = mp - θ(k)^2`, case
/// `so1` iff `ε = (-1)^k`. For `(U_m, U_mp)`: `l = (m - k(k+1)/2)/2`,
/// `lp = (mp - θ(k)(θ(k)+1)/2)/2`, case `u1` iff `k` is odd or
/// `k = θ(k) = 0`. Negative or non-integral ranks are rejected, as are the
/// bookkeeping-only families.
pub fn resolve(family: Family, m: u32, mp: u32, k: u32) -> Result<DualPairSpec> {
    match family {
        Family::SpOPlus | Family::SpOMinus => {
            let eps = if family == Family::SpOPlus {
                Sign::Plus
            } else {
                Sign::Minus
            };
            let theta_k = first_occurrence_sp_o(eps, k);
            let cusp_l = m_of_k(GroupKind::Symplectic, k);
            let cusp_r = m_of_k(GroupKind::EvenOrthogonal, theta_k);
            if m < cusp_l {
                return Err(Error::InvalidRank(format!("l = {m} - {cusp_l} < 0")));
            }
            if mp < cusp_r {
                return Err(Error::InvalidRank(format!("lp = {mp} - {cusp_r} < 0")));
            }
            let case = if eps == Sign::neg_one_pow(k) {
                CorrCase::SoSame
            } else {
                CorrCase::SoDiff
            };
            Ok(DualPairSpec {
                family,
                m,
                mp,
                k,
                theta_k,
                case,
                l: m - cusp_l,
                lp: mp - cusp_r,
            })
        }
        Family::UU => {
            let cusp_l = m_of_k(GroupKind::Unitary, k);
            if m < cusp_l || !(m - cusp_l).is_multiple_of(2) {
                return Err(Error::InvalidRank(format!(
                    "m = {m} carries no series with cuspidal index k = {k}"
                )));
            }
            let target = Sign::neg_one_pow(mp);
            let theta_k = first_occurrence_unitary(k, target)?;
            let cusp_r = m_of_k(GroupKind::Unitary, theta_k);
            if mp < cusp_r || !(mp - cusp_r).is_multiple_of(2) {
                return Err(Error::InvalidRank(format!(
                    "mp = {mp} carries no series with cuspidal index θ(k) = {theta_k}"
                )));
            }
            let case = if k % 2 == 1 || (k == 0 && theta_k == 0) {
                CorrCase::UOdd
            } else {
                CorrCase::UEven
            };
            Ok(DualPairSpec {
                family,
                m,
                mp,
                k,
                theta_k,
                case,
                l: (m - cusp_l) / 2,
                lp: (mp - cusp_r) / 2,
            })
        }
        Family::SpOOdd | Family::GlGl => Err(Error::UnsupportedFamily(family.label().to_string())),
    }
}

/// The working form of the stable range condition (right group smaller):
/// `m >= 2*mp`.
pub fn stable_range(spec: &DualPairSpec) -> bool {
    spec.m >= 2 * spec.mp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_of_k_examples() {
        assert_eq!(m_of_k(GroupKind::Symplectic, 1), 2);
        assert_eq!(m_of_k(GroupKind::Unitary, 2), 3);
        assert_eq!(m_of_k(GroupKind::EvenOrthogonal, 0), 0);
    }

    #[test]
    fn first_occurrence_sp_o_examples() {
        assert_eq!(first_occurrence_sp_o(Sign::Plus, 0), 0);
        assert_eq!(first_occurrence_sp_o(Sign::Minus, 0), 1);
        assert_eq!(first_occurrence_sp_o(Sign::Minus, 1), 1);
        assert_eq!(first_occurrence_sp_o(Sign::Plus, 1), 2);
    }

    #[test]
    fn first_occurrence_unitary_examples() {
        // sign table of (-1)^{k(k+1)/2}: + - - + + - - + ...
        assert_eq!(first_occurrence_unitary(0, Sign::Minus).unwrap(), 1);
        assert_eq!(first_occurrence_unitary(0, Sign::Plus).unwrap(), 0);
        assert_eq!(first_occurrence_unitary(1, Sign::Plus).unwrap(), 0);
        assert_eq!(first_occurrence_unitary(1, Sign::Minus).unwrap(), 2);
        assert_eq!(first_occurrence_unitary(2, Sign::Plus).unwrap(), 3);
        assert_eq!(first_occurrence_unitary(2, Sign::Minus).unwrap(), 1);
    }

    #[test]
    fn unitary_sign_table() {
        // exactly one neighbour of k matches each target sign, for all k >= 1
        for k in 1..=8u32 {
            let s = |j: u32| Sign::neg_one_pow(j * (j + 1) / 2);
            assert_ne!(s(k - 1), s(k + 1));
            for target in [Sign::Plus, Sign::Minus] {
                let kp = first_occurrence_unitary(k, target).unwrap();
                assert_eq!(s(kp), target);
                assert!(kp == k + 1 || kp + 1 == k);
            }
        }
    }

    #[test]
    fn resolve_examples() {
        let spec = resolve(Family::SpOMinus, 6, 2, 1).unwrap();
        assert_eq!(
            (spec.theta_k, spec.case, spec.l, spec.lp),
            (1, CorrCase::SoSame, 4, 1)
        );
        let spec = resolve(Family::UU, 9, 5, 1).unwrap();
        assert_eq!(
            (spec.theta_k, spec.case, spec.l, spec.lp),
            (2, CorrCase::UOdd, 4, 1)
        );
        assert!(resolve(Family::SpOPlus, 4, 1, 1).is_err());
    }

    #[test]
    fn resolve_refuses_uncovered_families() {
        assert!(matches!(
            resolve(Family::SpOOdd, 4, 2, 0),
            Err(Error::UnsupportedFamily(_))
        ));
        assert!(matches!(
            resolve(Family::GlGl, 4, 2, 0),
            Err(Error::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn resolve_rejects_bad_unitary_parity() {
        // m - k(k+1)/2 must be even
        assert!(resolve(Family::UU, 8, 2, 1).is_err());
        // the degenerate even-tower k = 0 resolves with θ = 0
        let spec = resolve(Family::UU, 4, 2, 0).unwrap();
        assert_eq!((spec.theta_k, spec.case), (0, CorrCase::UOdd));
    }

    #[test]
    fn stable_range_examples() {
        let spec = resolve(Family::SpOMinus, 6, 2, 1).unwrap();
        assert!(stable_range(&spec));
        let spec = resolve(Family::SpOMinus, 2, 1, 0).unwrap();
        assert!(stable_range(&spec));
        let spec = resolve(Family::SpOMinus, 3, 2, 0).unwrap();
        assert!(!stable_range(&spec));
    }

    #[test]
    fn stable_range_implies_weyl_stable_range() {
        for family in [Family::SpOPlus, Family::SpOMinus, Family::UU] {
            for m in 0..=20u32 {
                for mp in 0..=m / 2 {
                    for k in 0..=6u32 {
                        if let Ok(spec) = resolve(family, m, mp, k) {
                            if stable_range(&spec) {
                                assert!(
                                    spec.l >= 2 * spec.lp,
                                    "{family} m={m} mp={mp} k={k}: l={} lp={}",
                                    spec.l,
                                    spec.lp
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}
