//! Pieri-rule induction products, the four `Ω_{l,l'}` decompositions, and
//! Θ-set computation, both as brute-force expansion of the formal sums and
//! as the closed membership criteria.
//!
//! Case tags and the shape of each expansion:
//!
//! - `so1` (SO_SAME):  inner `(ξ,ζ)`, both sides grow the second component
//!   above `ζ` with the shared `ξ` in front.
//! - `so2` (SO_DIFF):  inner `(ξ,η)`, left grows the first component above
//!   `ξ`, right grows the second above `η`; the inner pair is split across
//!   the two sides.
//! - `u1` (U_ODD):     as `so2` on the left; the right side is built on the
//!   sign-twisted inner bipartition.
//! - `u2` (U_EVEN):    left grows the second component above `ζ`; right as
//!   in `u1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bipartition::{enumerate_bipartitions, sgn_twist, Bipartition};
use crate::error::{Error, Result};
use crate::exec::map_ordered;
use crate::partition::{enumerate_partitions, has_common_predecessor, precedes};

/// Which of the four correspondence formulas applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CorrCase {
    /// Symplectic-even-orthogonal with matching sign, `ε = (-1)^k`.
    SoSame,
    /// Symplectic-even-orthogonal with opposite sign.
    SoDiff,
    /// Unitary, odd cuspidal index (or the degenerate `k = k' = 0`).
    UOdd,
    /// Unitary, even nonzero cuspidal index.
    UEven,
}

impl CorrCase {
    pub const ALL: [CorrCase; 4] = [
        CorrCase::SoSame,
        CorrCase::SoDiff,
        CorrCase::UOdd,
        CorrCase::UEven,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CorrCase::SoSame => "so1",
            CorrCase::SoDiff => "so2",
            CorrCase::UOdd => "u1",
            CorrCase::UEven => "u2",
        }
    }
}

impl fmt::Display for CorrCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CorrCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "so1" => Ok(CorrCase::SoSame),
            "so2" => Ok(CorrCase::SoDiff),
            "u1" => Ok(CorrCase::UOdd),
            "u2" => Ok(CorrCase::UEven),
            other => Err(Error::UnknownCase(other.to_string())),
        }
    }
}

impl Serialize for CorrCase {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// `Ω_{l,l'}` as a formal sum: a multiplicity map on pairs of irreducible
/// character labels. Every left key has weight `left_weight`, every right
/// key weight `right_weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrPairMultiset {
    case: CorrCase,
    left_weight: u32,
    right_weight: u32,
    entries: BTreeMap<(Bipartition, Bipartition), u64>,
}

impl IrrPairMultiset {
    pub fn case(&self) -> CorrCase {
        self.case
    }

    pub fn left_weight(&self) -> u32 {
        self.left_weight
    }

    pub fn right_weight(&self) -> u32 {
        self.right_weight
    }

    /// Entries in key order, multiplicities >= 1.
    pub fn iter(&self) -> impl Iterator<Item = (&(Bipartition, Bipartition), u64)> {
        self.entries.iter().map(|(k, &m)| (k, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, left: &Bipartition, right: &Bipartition) -> u64 {
        self.entries
            .get(&(left.clone(), right.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// Support of the formal sum, in key order.
    pub fn support(&self) -> Vec<(Bipartition, Bipartition)> {
        self.entries.keys().cloned().collect()
    }
}

/// Constituents of `Ind(χ_{λ,μ} ⊗ sgn)` from `W_r × W_{l-r}` to `W_l`:
/// all `(λ, μ')` with `μ ⪯ μ'` and total weight `l`.
pub fn pieri_sgn(a: &Bipartition, l: u32) -> Result<Vec<Bipartition>> {
    if l < a.weight() {
        return Err(Error::RankBelowWeight {
            rank: l,
            weight: a.weight(),
        });
    }
    Ok(enumerate_partitions(l - a.first.weight())
        .into_iter()
        .filter(|mu| precedes(&a.second, mu))
        .map(|mu| Bipartition::new(a.first.clone(), mu))
        .collect())
}

/// Constituents of `Ind(χ_{λ,μ} ⊗ 1)`: all `(λ', μ)` with `λ ⪯ λ'` and total
/// weight `l`.
pub fn pieri_triv(a: &Bipartition, l: u32) -> Result<Vec<Bipartition>> {
    if l < a.weight() {
        return Err(Error::RankBelowWeight {
            rank: l,
            weight: a.weight(),
        });
    }
    Ok(enumerate_partitions(l - a.second.weight())
        .into_iter()
        .filter(|la| precedes(&a.first, la))
        .map(|la| Bipartition::new(la, a.second.clone()))
        .collect())
}

/// Expands `Ω_{l,lp}` for the given case: the sum over inner rank
/// `r = 0..=min(l,lp)` and inner bipartitions of `r`, with the appropriate
/// pair of Pieri expansions per case. Multiplicities accumulate over
/// distinct inner terms.
///
/// The outer `r`-loop fans out over the rayon pool when the `parallel`
/// feature is on; partial maps are merged in `r` order, so the result does
/// not depend on scheduling.
pub fn omega(case: CorrCase, l: u32, lp: u32) -> IrrPairMultiset {
    let rmax = l.min(lp);
    let partial: Vec<BTreeMap<(Bipartition, Bipartition), u64>> =
        map_ordered((0..=rmax).collect(), |r| {
            let mut map = BTreeMap::new();
            for inner in enumerate_bipartitions(r) {
                let (lefts, rights) = expand(case, &inner, l, lp);
                for lf in &lefts {
                    for rg in &rights {
                        *map.entry((lf.clone(), rg.clone())).or_insert(0) += 1;
                    }
                }
            }
            map
        });
    let mut entries = BTreeMap::new();
    for map in partial {
        for (key, m) in map {
            *entries.entry(key).or_insert(0) += m;
        }
    }
    IrrPairMultiset {
        case,
        left_weight: l,
        right_weight: lp,
        entries,
    }
}

fn expand(
    case: CorrCase,
    inner: &Bipartition,
    l: u32,
    lp: u32,
) -> (Vec<Bipartition>, Vec<Bipartition>) {
    // inner.weight() <= min(l, lp), so neither expansion can fail
    let take = |r: Result<Vec<Bipartition>>| r.expect("inner rank bounded by min(l, lp)");
    match case {
        CorrCase::SoSame => (take(pieri_sgn(inner, l)), take(pieri_sgn(inner, lp))),
        CorrCase::SoDiff => (take(pieri_triv(inner, l)), take(pieri_sgn(inner, lp))),
        CorrCase::UOdd => (
            take(pieri_triv(inner, l)),
            take(pieri_triv(&sgn_twist(inner), lp)),
        ),
        CorrCase::UEven => (
            take(pieri_sgn(inner, l)),
            take(pieri_triv(&sgn_twist(inner), lp)),
        ),
    }
}

/// `Θ(bp_right)`: the left labels paired with `bp_right` in the support of
/// `Ω_{l,lp}`, in key order. This is the brute-force route through the
/// formal sum.
pub fn theta_set(
    case: CorrCase,
    l: u32,
    lp: u32,
    bp_right: &Bipartition,
) -> Result<Vec<Bipartition>> {
    if bp_right.weight() != lp {
        return Err(Error::WeightMismatch {
            left: bp_right.weight(),
            right: lp,
        });
    }
    Ok(omega(case, l, lp)
        .iter()
        .filter(|((_, r), _)| r == bp_right)
        .map(|((lf, _), _)| lf.clone())
        .collect())
}

/// Closed membership criterion for `(bp_left, bp_right)` in the support of
/// `Ω_{l,lp}`, case by case:
///
/// - `so1`: equal first components, second components share a `⪯`-predecessor.
/// - `so2`: `right.first ⪯ left.first` and `left.second ⪯ right.second`.
/// - `u1`:  `right.second ⪯ left.first` and `left.second ⪯ right.first`.
/// - `u2`:  `left.first = right.second`, and `left.second` shares a
///   `⪯`-predecessor with `right.first`.
pub fn theta_membership(
    case: CorrCase,
    l: u32,
    lp: u32,
    bp_left: &Bipartition,
    bp_right: &Bipartition,
) -> Result<bool> {
    if bp_left.weight() != l {
        return Err(Error::WeightMismatch {
            left: bp_left.weight(),
            right: l,
        });
    }
    if bp_right.weight() != lp {
        return Err(Error::WeightMismatch {
            left: bp_right.weight(),
            right: lp,
        });
    }
    Ok(match case {
        CorrCase::SoSame => {
            bp_left.first == bp_right.first
                && has_common_predecessor(&bp_left.second, &bp_right.second)
        }
        CorrCase::SoDiff => {
            precedes(&bp_right.first, &bp_left.first) && precedes(&bp_left.second, &bp_right.second)
        }
        CorrCase::UOdd => {
            precedes(&bp_right.second, &bp_left.first) && precedes(&bp_left.second, &bp_right.first)
        }
        CorrCase::UEven => {
            bp_left.first == bp_right.second
                && has_common_predecessor(&bp_left.second, &bp_right.first)
        }
    })
}
