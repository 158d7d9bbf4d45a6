//! Closed-form minimal and maximal elements of `Θ(ξ',η')` for the four
//! cases, and the partition-level form of the unitary minimum.
//!
//! The closed forms are defined in the stable range `l >= 2*lp` only;
//! outside it the operations refuse rather than extrapolate.

use crate::beta::{two_core, two_core_index};
use crate::bipartition::Bipartition;
use crate::error::{Error, Result};
use crate::partition::{union_part, Partition};
use crate::weyl::CorrCase;

fn check_instance(l: u32, lp: u32, bp_right: &Bipartition) -> Result<()> {
    if bp_right.weight() != lp {
        return Err(Error::WeightMismatch {
            left: bp_right.weight(),
            right: lp,
        });
    }
    if l < 2 * lp {
        return Err(Error::StableRange { l, lp });
    }
    Ok(())
}

/// The minimal bipartition of `Θ(bp_right)` in weight `l`: the difference
/// `l - lp` joins one component as a new part.
///
/// - `so1`: `(ξ', (l-lp) ∪ η')`
/// - `so2`: `((l-lp) ∪ ξ', η')`
/// - `u1`:  `((l-lp) ∪ η', ξ')`
/// - `u2`:  `(η', (l-lp) ∪ ξ')`
pub fn closed_min(case: CorrCase, l: u32, lp: u32, bp_right: &Bipartition) -> Result<Bipartition> {
    check_instance(l, lp, bp_right)?;
    let d = l - lp;
    let (xi, eta) = (&bp_right.first, &bp_right.second);
    let min = match case {
        CorrCase::SoSame => Bipartition::new(xi.clone(), union_part(d, eta)),
        CorrCase::SoDiff => Bipartition::new(union_part(d, xi), eta.clone()),
        CorrCase::UOdd => Bipartition::new(union_part(d, eta), xi.clone()),
        CorrCase::UEven => Bipartition::new(eta.clone(), union_part(d, xi)),
    };
    debug_assert_eq!(min.weight(), l);
    Ok(min)
}

/// The maximal bipartition of `Θ(bp_right)` in weight `l`: the difference
/// is merged with the two leading parts the theorem designates, the
/// remaining parts shift up as written.
///
/// - `so1`: `(ξ', (l-lp+η'_1+η'_2, η'_3, ...))`
/// - `so2`: `((l-lp+η'_1+ξ'_1, ξ'_2, ...), (η'_2, ...))`
/// - `u1`:  `((l-lp+ξ'_1+η'_1, η'_2, ...), (ξ'_2, ...))`
/// - `u2`:  `(η', (l-lp+ξ'_1+ξ'_2, ξ'_3, ...))`
pub fn closed_max(case: CorrCase, l: u32, lp: u32, bp_right: &Bipartition) -> Result<Bipartition> {
    check_instance(l, lp, bp_right)?;
    let d = l - lp;
    let (xi, eta) = (&bp_right.first, &bp_right.second);
    // head absorbed from the first two parts of one partition
    let merge_two = |p: &Partition| -> Partition {
        let mut parts = vec![d + p.part(1) + p.part(2)];
        parts.extend(p.parts().iter().skip(2));
        Partition::new(parts).expect("merged head dominates the tail in stable range")
    };
    // head absorbed across components: d + p_1 + q_1 followed by q_2, ...
    let merge_cross = |p: &Partition, q: &Partition| -> Partition {
        let mut parts = vec![d + p.part(1) + q.part(1)];
        parts.extend(q.parts().iter().skip(1));
        Partition::new(parts).expect("merged head dominates the tail in stable range")
    };
    let rest = |p: &Partition| -> Partition {
        Partition::new(p.parts().iter().skip(1).copied().collect())
            .expect("tail of a partition is a partition")
    };
    let max = match case {
        CorrCase::SoSame => Bipartition::new(xi.clone(), merge_two(eta)),
        CorrCase::SoDiff => Bipartition::new(merge_cross(eta, xi), rest(eta)),
        CorrCase::UOdd => Bipartition::new(merge_cross(xi, eta), rest(xi)),
        CorrCase::UEven => Bipartition::new(eta.clone(), merge_two(xi)),
    };
    debug_assert_eq!(max.weight(), l);
    Ok(max)
}

/// Partition-level minimum for unitary instances whose first-occurrence
/// index moves up (`θ(k) = k + 1`): the minimal partner of `μ'` is
/// `(m - mp) ∪ μ'`. Requires `μ' ⊢ mp` with a nonempty staircase 2-core
/// `τ_{k+1}`, rank parity `m ≡ k(k+1)/2 (mod 2)`, and the stable range
/// `m >= 2*mp`.
pub fn partition_level_min(m: u32, mp: u32, mu_right: &Partition) -> Result<Partition> {
    if mu_right.weight() != mp {
        return Err(Error::WeightMismatch {
            left: mu_right.weight(),
            right: mp,
        });
    }
    let core = two_core(mu_right);
    let j = two_core_index(mu_right);
    if j == 0 {
        return Err(Error::CoreMismatch {
            partition: mu_right.to_string(),
            core: core.to_string(),
            expected: "a nonempty staircase".into(),
        });
    }
    let k = j - 1;
    let mk = k * (k + 1) / 2;
    if m < mk || !(m - mk).is_multiple_of(2) {
        return Err(Error::InvalidRank(format!(
            "m = {m} carries no series with cuspidal index k = {k}"
        )));
    }
    if m < 2 * mp {
        return Err(Error::StableRange { l: m, lp: mp });
    }
    Ok(union_part(m - mp, mu_right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beta::{mu_from_core_quotient, tau};

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn closed_min_examples() {
        assert_eq!(
            closed_min(CorrCase::SoSame, 2, 1, &bp("|1")).unwrap(),
            bp("|1,1")
        );
        assert_eq!(
            closed_min(CorrCase::SoDiff, 2, 1, &bp("1|")).unwrap(),
            bp("1,1|")
        );
        assert_eq!(
            closed_min(CorrCase::UEven, 2, 0, &bp("|")).unwrap(),
            bp("|2")
        );
    }

    #[test]
    fn closed_max_examples() {
        assert_eq!(
            closed_max(CorrCase::SoSame, 2, 1, &bp("|1")).unwrap(),
            bp("|2")
        );
        assert_eq!(
            closed_max(CorrCase::UOdd, 2, 1, &bp("1|")).unwrap(),
            bp("2|")
        );
        assert_eq!(
            closed_max(CorrCase::SoDiff, 2, 1, &bp("1|")).unwrap(),
            bp("2|")
        );
        assert_eq!(
            closed_max(CorrCase::SoDiff, 6, 3, &bp("2|1")).unwrap(),
            bp("6|")
        );
        assert_eq!(
            closed_max(CorrCase::UOdd, 6, 3, &bp("2,1|")).unwrap(),
            bp("5|1")
        );
    }

    #[test]
    fn stable_range_is_enforced() {
        assert_eq!(
            closed_min(CorrCase::SoSame, 1, 1, &bp("|1")),
            Err(Error::StableRange { l: 1, lp: 1 })
        );
        assert_eq!(
            closed_max(CorrCase::UEven, 3, 2, &bp("1|1")),
            Err(Error::StableRange { l: 3, lp: 2 })
        );
        assert!(closed_min(CorrCase::SoSame, 2, 1, &bp("1|1")).is_err());
    }

    #[test]
    fn partition_level_examples() {
        assert_eq!(partition_level_min(4, 1, &p("1")).unwrap(), p("3,1"));
        // cross-check through the quotient route
        let min_bp = closed_min(CorrCase::UEven, 2, 0, &bp("|")).unwrap();
        assert_eq!(mu_from_core_quotient(0, &min_bp), p("3,1"));
        // odd cuspidal index: k = 1, core τ_2
        assert_eq!(partition_level_min(7, 3, &p("2,1")).unwrap(), p("4,2,1"));
        // m = 2*mp boundary: union with the partition itself
        assert_eq!(partition_level_min(2, 1, &p("1")).unwrap(), p("1,1"));
    }

    #[test]
    fn partition_level_preconditions() {
        // core τ_0 is not of the form τ_{k+1}
        assert!(partition_level_min(4, 2, &p("2")).is_err());
        // parity: m = 5 carries no series with k = 0
        assert!(partition_level_min(5, 1, &p("1")).is_err());
        // parity: m = 6 carries no series with k = 1
        assert!(partition_level_min(6, 3, &p("2,1")).is_err());
        // stable range (k = 1, so m must be odd)
        assert_eq!(
            partition_level_min(5, 3, &p("2,1")),
            Err(Error::StableRange { l: 5, lp: 3 })
        );
        assert!(partition_level_min(4, 1, &p("2")).is_err());
    }

    #[test]
    fn tau_k_core_matches() {
        // sanity for the error path text: core of (2,1) is itself
        assert_eq!(two_core(&p("2,1")), tau(2));
    }
}
