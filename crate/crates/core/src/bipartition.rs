//! Bipartitions as labels of irreducible type-B Weyl group characters, the
//! Achar-Henderson natural order, and the dimension bookkeeping that powers
//! the induction-identity oracles.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// An ordered pair of partitions. `(α, β)` labels the irreducible character
/// `χ_{α,β}` of the Weyl group of type B_n with `n = |α| + |β|`; the
/// component order is significant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    pub fn weight(&self) -> u32 {
        self.first.weight() + self.second.weight()
    }
}

impl fmt::Display for Bipartition {
    /// Compact text form `α|β`, each side in partition text form; `"|"` is
    /// the empty bipartition. The parser also accepts spaces around `|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut halves = s.split('|');
        let (a, b) = match (halves.next(), halves.next(), halves.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::InvalidBipartition {
                    input: s.to_string(),
                })
            }
        };
        Ok(Bipartition::new(a.trim().parse()?, b.trim().parse()?))
    }
}

impl Serialize for Bipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Bipartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The Achar-Henderson natural order on bipartitions of one integer:
/// for all `k >= 0`,
///
/// ```text
/// ρ_1+σ_1+...+ρ_k+σ_k         <= μ_1+ν_1+...+μ_k+ν_k
/// ρ_1+σ_1+...+ρ_k+σ_k+ρ_{k+1} <= μ_1+ν_1+...+μ_k+ν_k+μ_{k+1}
/// ```
///
/// Comparing different weights is rejected: the order is defined inside one
/// `P_2(n)`.
pub fn ah_leq(a: &Bipartition, b: &Bipartition) -> Result<bool> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch {
            left: a.weight(),
            right: b.weight(),
        });
    }
    let n = a
        .first
        .len()
        .max(a.second.len())
        .max(b.first.len())
        .max(b.second.len());
    let (mut sa, mut sb) = (0u64, 0u64);
    for k in 0..=n {
        if sa + u64::from(a.first.part(k + 1)) > sb + u64::from(b.first.part(k + 1)) {
            return Ok(false);
        }
        sa += u64::from(a.first.part(k + 1)) + u64::from(a.second.part(k + 1));
        sb += u64::from(b.first.part(k + 1)) + u64::from(b.second.part(k + 1));
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Tensoring with the sign character swaps the components:
/// `sgn ⊗ χ_{λ,μ} = χ_{μ,λ}`.
pub fn sgn_twist(a: &Bipartition) -> Bipartition {
    Bipartition::new(a.second.clone(), a.first.clone())
}

/// All bipartitions of `n`: the weight of the first component descends from
/// `n` to 0, each side in the partition enumeration order.
pub fn enumerate_bipartitions(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for a in enumerate_partitions(k) {
            for b in enumerate_partitions(n - k) {
                out.push(Bipartition::new(a.clone(), b));
            }
        }
    }
    out
}

/// Number of standard Young tableaux of shape `p`, by the hook length
/// formula.
pub fn syt_count(p: &Partition) -> u64 {
    let n = p.weight() as u64;
    let mut hooks: u128 = 1;
    let parts = p.parts();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = parts[i + 1..].iter().filter(|&&r| r as usize > j).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    let fact: u128 = (1..=n).map(u128::from).product();
    u64::try_from(fact / hooks).expect("tableau count fits in u64 at desk scale")
}

fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(acc).expect("binomial fits in u64 at desk scale")
}

/// Dimension of the irreducible W_n character labelled by `a`:
/// `C(n, |first|) * syt(first) * syt(second)`.
pub fn dim_chi(a: &Bipartition) -> u64 {
    binomial(a.weight(), a.first.weight()) * syt_count(&a.first) * syt_count(&a.second)
}
