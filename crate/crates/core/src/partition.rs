//! Integer partitions and the two single-partition orders everything else
//! builds on: prefix-sum dominance and the box-adding order `⪯`.
//!
//! Partitions are stored without trailing zeros. Formulas that need padding
//! read through the total accessor [`Partition::part`], which returns 0 past
//! the stored length; state is never mutated to add zeros.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0.
///
/// `Ord` is the lexicographic order on the part vectors; it is used only to
/// keep sets and report rows deterministic, not as a mathematical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The zero partition `()`.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from a weakly decreasing sequence. Trailing (or
    /// interior) zeros are stripped; an increasing step is rejected.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                input: format!("{parts:?}"),
                reason: "parts must be weakly decreasing".into(),
            });
        }
        let mut parts = parts;
        parts.retain(|&p| p > 0);
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The `i`-th part, 1-indexed as in the usual notation `μ_i`; 0 for every
    /// index past the stored length.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the text form: comma-separated decreasing integers, empty
    /// string for `()`. Zeros are accepted and stripped.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let p: u32 = tok.parse().map_err(|_| Error::InvalidPartition {
                input: s.to_string(),
                reason: format!("part {tok:?} is not a non-negative integer"),
            })?;
            parts.push(p);
        }
        Partition::new(parts).map_err(|_| Error::InvalidPartition {
            input: s.to_string(),
            reason: "parts must be weakly decreasing".into(),
        })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Dominance: every prefix sum of `a` is at most the matching prefix sum of
/// `b`. The weights may differ; the comparison is prefix-sum-wise exactly as
/// written.
pub fn dominance_leq(a: &Partition, b: &Partition) -> bool {
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0u64, 0u64);
    for i in 1..=n {
        sa += u64::from(a.part(i));
        sb += u64::from(b.part(i));
        if sa > sb {
            return false;
        }
    }
    true
}

/// The box-adding order `a ⪯ b`: for all `i`, `b_{i+1} <= a_i <= b_i`. The
/// diagram of `a` sits inside `b` and `b` adds at most one box per column.
pub fn precedes(a: &Partition, b: &Partition) -> bool {
    let n = a.len().max(b.len());
    for i in 1..=n {
        if !(b.part(i + 1) <= a.part(i) && a.part(i) <= b.part(i)) {
            return false;
        }
    }
    true
}

/// Whether some `ζ` satisfies `ζ ⪯ a` and `ζ ⪯ b`. Closed criterion:
/// `max(a_{i+1}, b_{i+1}) <= min(a_i, b_i)` for all `i`; the witness is
/// `ζ_i = max(a_{i+1}, b_{i+1})`.
pub fn has_common_predecessor(a: &Partition, b: &Partition) -> bool {
    common_predecessor_witness(a, b).is_some()
}

/// The canonical common predecessor from the closed criterion, if one exists.
pub fn common_predecessor_witness(a: &Partition, b: &Partition) -> Option<Partition> {
    let n = a.len().max(b.len());
    let mut zeta = Vec::new();
    for i in 1..=n {
        let lo = a.part(i + 1).max(b.part(i + 1));
        let hi = a.part(i).min(b.part(i));
        if lo > hi {
            return None;
        }
        zeta.push(lo);
    }
    Some(Partition::new(zeta).expect("max of suffixes is weakly decreasing"))
}

/// Multiset union `{x} ∪ mu`, re-sorted decreasingly; `x = 0` returns `mu`
/// unchanged.
pub fn union_part(x: u32, mu: &Partition) -> Partition {
    let mut parts = mu.parts.clone();
    parts.push(x);
    Partition::from_unsorted(parts)
}

/// All partitions of `n`, each exactly once, in lexicographically decreasing
/// order: `(n), (n-1,1), ..., (1,...,1)`.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    extend_partitions(n, n, &mut prefix, &mut out);
    out
}

fn extend_partitions(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for p in (1..=n.min(max)).rev() {
        prefix.push(p);
        extend_partitions(n - p, p, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn construction_strips_zeros_and_rejects_increases() {
        assert_eq!(Partition::new(vec![3, 2, 0, 0]).unwrap(), p("3,2"));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(""), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("-1".parse::<Partition>().is_err());
        assert_eq!(p("3,2,0"), p("3,2"));
    }

    #[test]
    fn indexed_access_is_total() {
        let mu = p("3,1");
        assert_eq!(mu.part(1), 3);
        assert_eq!(mu.part(2), 1);
        assert_eq!(mu.part(3), 0);
        assert_eq!(mu.part(100), 0);
        assert_eq!(mu.weight(), 4);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p("2,2"), &p("3,1")));
        assert!(dominance_leq(&p("3,1"), &p("3,1")));
        assert!(!dominance_leq(&p("3,1"), &p("2,2")));
    }

    #[test]
    fn precedes_examples() {
        assert!(precedes(&p("2,1"), &p("3,1")));
        assert!(precedes(&p(""), &p("1")));
        assert!(!precedes(&p(""), &p("1,1")));
        assert!(!precedes(&p("1,1"), &p("1")));
    }

    #[test]
    fn common_predecessor_examples() {
        assert_eq!(common_predecessor_witness(&p("2"), &p("1,1")), Some(p("1")));
        assert!(!has_common_predecessor(&p("3"), &p("1,1,1")));
        for mu in enumerate_partitions(5) {
            assert!(has_common_predecessor(&mu, &mu));
        }
    }

    #[test]
    fn union_examples() {
        assert_eq!(union_part(1, &p("1")), p("1,1"));
        assert_eq!(union_part(0, &p("3,2")), p("3,2"));
        assert_eq!(union_part(2, &p("3,1")), p("3,2,1"));
        assert_eq!(union_part(2, &p("3,1")).weight(), 2 + p("3,1").weight());
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(2), vec![p("2"), p("1,1")]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        // lexicographically decreasing
        let all = enumerate_partitions(6);
        assert_eq!(all.len(), 11);
        for w in all.windows(2) {
            assert!(w[0].parts() > w[1].parts());
        }
    }

    /// Brute-force oracle: search every candidate ζ of weight up to
    /// min(|a|, |b|) instead of using the closed max/min criterion.
    fn common_predecessor_brute(a: &Partition, b: &Partition) -> bool {
        let bound = a.weight().min(b.weight());
        (0..=bound).any(|w| {
            enumerate_partitions(w)
                .iter()
                .any(|z| precedes(z, a) && precedes(z, b))
        })
    }

    #[test]
    fn common_predecessor_matches_brute_force() {
        for wa in 0..=7u32 {
            for wb in 0..=7u32 {
                for a in enumerate_partitions(wa) {
                    for b in enumerate_partitions(wb) {
                        assert_eq!(
                            has_common_predecessor(&a, &b),
                            common_predecessor_brute(&a, &b),
                            "criterion disagrees with search on ({a}, {b})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn precedes_implies_containment_and_weight() {
        for wa in 0..=6u32 {
            for wb in 0..=6u32 {
                for a in enumerate_partitions(wa) {
                    for b in enumerate_partitions(wb) {
                        if precedes(&a, &b) {
                            assert!(a.weight() <= b.weight());
                            for i in 1..=a.len() {
                                assert!(a.part(i) <= b.part(i));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_is_a_partial_order_on_fixed_weight() {
        for n in 0..=8u32 {
            let all = enumerate_partitions(n);
            for a in &all {
                assert!(dominance_leq(a, a));
                for b in &all {
                    if dominance_leq(a, b) && dominance_leq(b, a) {
                        assert_eq!(a, b, "antisymmetry fails on weight {n}");
                    }
                    for c in &all {
                        if dominance_leq(a, b) && dominance_leq(b, c) {
                            assert!(dominance_leq(a, c), "transitivity fails");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        for n in 0..=7u32 {
            for mu in enumerate_partitions(n) {
                assert_eq!(mu.to_string().parse::<Partition>().unwrap(), mu);
            }
        }
    }
}
