//! β-numbers, 2-cores and 2-quotients, the inverse construction
//! `μ_k(ξ,η)` from a staircase core and a quotient pair, and the sign
//! `ε_μ` attached to a unipotent character label.

use crate::bipartition::Bipartition;
use crate::error::{Error, Result};
use crate::partition::{dominance_leq, Partition};

/// Strictly decreasing non-negative integers of declared cardinality `t`;
/// the encoding `β_i = μ_i + t - i` of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaSet {
    values: Vec<u32>,
}

impl BetaSet {
    /// Builds a β-set from strictly decreasing values.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition {
                input: format!("{values:?}"),
                reason: "beta values must be strictly decreasing".into(),
            });
        }
        Ok(BetaSet { values })
    }

    /// Values, largest first.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Declared cardinality.
    pub fn t(&self) -> u32 {
        self.values.len() as u32
    }
}

/// The `t`-set of β-numbers of `mu`: `{μ_i + t - i : i = 1..t}`. Requires
/// `t` at least the number of parts.
pub fn beta_set(mu: &Partition, t: u32) -> Result<BetaSet> {
    if (t as usize) < mu.len() {
        return Err(Error::BetaCardinality {
            t,
            parts: mu.len() as u32,
        });
    }
    let values = (1..=t as usize)
        .map(|i| mu.part(i) + t - i as u32)
        .collect();
    Ok(BetaSet { values })
}

/// Inverse of [`beta_set`] at the set's own cardinality:
/// `μ_i = β_i - (t - i)`, zeros stripped.
pub fn beta_to_partition(b: &BetaSet) -> Partition {
    let t = b.values.len() as u32;
    let parts: Vec<u32> = b
        .values
        .iter()
        .enumerate()
        .map(|(idx, &v)| v - (t - idx as u32 - 1))
        .collect();
    Partition::new(parts).expect("strictly decreasing beta values unshift to a partition")
}

/// The 2-core: repeatedly replace some `β_j` by `β_j - 2` while the values
/// stay a set, then convert back. Independent of the starting cardinality;
/// always a staircase.
pub fn two_core(mu: &Partition) -> Partition {
    let mut values: std::collections::BTreeSet<u32> = beta_set(mu, mu.len() as u32)
        .expect("t = len is always valid")
        .values
        .iter()
        .copied()
        .collect();
    loop {
        let movable = values
            .iter()
            .copied()
            .find(|&b| b >= 2 && !values.contains(&(b - 2)));
        match movable {
            Some(b) => {
                values.remove(&b);
                values.insert(b - 2);
            }
            None => break,
        }
    }
    let sorted: Vec<u32> = values.into_iter().rev().collect();
    beta_to_partition(&BetaSet { values: sorted })
}

/// The staircase `τ_k = (k, k-1, ..., 1)`; `τ_0 = ()`.
pub fn tau(k: u32) -> Partition {
    Partition::new((1..=k).rev().collect()).expect("staircase is decreasing")
}

/// The index of the staircase 2-core of `mu`: `two_core(mu) = τ_k`.
pub fn two_core_index(mu: &Partition) -> u32 {
    let core = two_core(mu);
    let k = core.len() as u32;
    debug_assert_eq!(core, tau(k), "a 2-core is always a staircase");
    k
}

/// The 2-quotient of parameter 1: split the `t`-set of β-numbers (`t` odd)
/// into halved even values and halved-after-decrement odd values, and
/// convert each side at its own cardinality. The first component comes from
/// the even values.
pub fn two_quotient(mu: &Partition, t: u32) -> Result<Bipartition> {
    if t.is_multiple_of(2) {
        return Err(Error::QuotientParameterEven(t));
    }
    let beta = beta_set(mu, t)?;
    let evens: Vec<u32> = beta
        .values
        .iter()
        .filter(|&&b| b % 2 == 0)
        .map(|&b| b / 2)
        .collect();
    let odds: Vec<u32> = beta
        .values
        .iter()
        .filter(|&&b| b % 2 == 1)
        .map(|&b| (b - 1) / 2)
        .collect();
    Ok(Bipartition::new(
        beta_to_partition(&BetaSet { values: evens }),
        beta_to_partition(&BetaSet { values: odds }),
    ))
}

/// For a partition with 2-core `τ_k` and an odd `t`-set of β-numbers, the
/// cardinalities `(t_0, t_1)` of the even and odd values:
/// `k` even gives `((t+k+1)/2, (t-k-1)/2)`, `k` odd gives
/// `((t-k)/2, (t+k)/2)`. Defined for `t >= k + 1` when `k` is even and
/// `t >= k` when `k` is odd.
pub fn quotient_cardinalities(k: u32, t: u32) -> Option<(u32, u32)> {
    if t.is_multiple_of(2) {
        return None;
    }
    if k.is_multiple_of(2) {
        if t < k + 1 {
            return None;
        }
        Some(((t + k).div_ceil(2), (t - k - 1) / 2))
    } else {
        if t < k {
            return None;
        }
        Some(((t - k) / 2, (t + k) / 2))
    }
}

/// The unique partition with 2-core `τ_k` and 2-quotient of parameter 1
/// equal to `q`: pick the smallest odd `t` whose cardinality split fits the
/// part counts of `q`, rebuild the even β-numbers from `q.first` and the
/// odd ones from `q.second`, merge, and convert.
pub fn mu_from_core_quotient(k: u32, q: &Bipartition) -> Partition {
    let mut t = 1;
    let (t0, t1) = loop {
        if let Some((t0, t1)) = quotient_cardinalities(k, t) {
            if t0 as usize >= q.first.len() && t1 as usize >= q.second.len() {
                break (t0, t1);
            }
        }
        t += 2;
    };
    let evens = beta_set(&q.first, t0).expect("t0 fits by choice of t");
    let odds = beta_set(&q.second, t1).expect("t1 fits by choice of t");
    let mut values: Vec<u32> = evens
        .values
        .iter()
        .map(|&b| 2 * b)
        .chain(odds.values.iter().map(|&b| 2 * b + 1))
        .collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    let mu = beta_to_partition(&BetaSet { values });
    debug_assert_eq!(mu.weight(), 2 * q.weight() + k * (k + 1) / 2);
    debug_assert_eq!(two_core(&mu), tau(k));
    mu
}

/// Exponent conventions for the sign `ε_μ`. The second summand of the
/// exponent is read either as `C(n,2)` or as the printed literal
/// `C(n(n-1), 2)`, with `n` the weight. The two readings always agree:
/// `C(n(n-1), 2) = C(n,2) * (n(n-1) - 1)` and the second factor is odd, so
/// both exponents share a parity. Both are kept so the choice is explicit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EpsilonConvention {
    /// Exponent `Σ C(μ_i, 2) + C(n, 2)`.
    #[default]
    ChooseTwo,
    /// Exponent `Σ C(μ_i, 2) + C(n(n-1), 2)`.
    NestedChooseTwo,
}

/// The sign `ε_μ = (-1)^{Σ C(μ_i,2) + C(n,2)}` under the default
/// convention; see [`EpsilonConvention`] for the alternative reading.
pub fn epsilon_sign(mu: &Partition) -> i8 {
    epsilon_sign_with(mu, EpsilonConvention::default())
}

pub fn epsilon_sign_with(mu: &Partition, convention: EpsilonConvention) -> i8 {
    let choose2 = |m: u64| m * m.saturating_sub(1) / 2;
    let n = u64::from(mu.weight());
    let mut exp: u64 = mu.parts().iter().map(|&p| choose2(u64::from(p))).sum();
    exp += match convention {
        EpsilonConvention::ChooseTwo => choose2(n),
        EpsilonConvention::NestedChooseTwo => choose2(n * n.saturating_sub(1)),
    };
    if exp.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Dominance of the partitions rebuilt from core `τ_k` and the two quotient
/// labels: `μ_k(a) <= μ_k(b)`.
pub fn mu_leq(k: u32, a: &Bipartition, b: &Bipartition) -> Result<bool> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch {
            left: a.weight(),
            right: b.weight(),
        });
    }
    Ok(dominance_leq(
        &mu_from_core_quotient(k, a),
        &mu_from_core_quotient(k, b),
    ))
}
