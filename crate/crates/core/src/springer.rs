//! Symplectic partitions, u-symbols, distinguished representatives, and the
//! surjection `λ(ξ,η)` from bipartitions of `n` onto symplectic partitions
//! of `2n`, together with the dominance preorder it induces.

use std::fmt;

use serde::Serialize;

use crate::bipartition::Bipartition;
use crate::error::{Error, Result};
use crate::partition::{dominance_leq, enumerate_partitions, Partition};

/// True iff the weight is even and each odd part occurs with even
/// multiplicity.
pub fn is_symplectic(p: &Partition) -> bool {
    if !p.weight().is_multiple_of(2) {
        return false;
    }
    let parts = p.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        if parts[i] % 2 == 1 && (j - i) % 2 == 1 {
            return false;
        }
        i = j;
    }
    true
}

/// A partition of an even integer whose odd parts have even multiplicity;
/// labels a unipotent conjugacy class of the symplectic group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SymplecticPartition(Partition);

impl SymplecticPartition {
    pub fn new(p: Partition) -> Result<Self> {
        if is_symplectic(&p) {
            Ok(SymplecticPartition(p))
        } else {
            Err(Error::NotSymplectic(p.to_string()))
        }
    }

    pub fn underlying(&self) -> &Partition {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.weight()
    }
}

impl fmt::Display for SymplecticPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All symplectic partitions of `2n`, in the partition enumeration order.
pub fn enumerate_symplectic(n: u32) -> Vec<SymplecticPartition> {
    enumerate_partitions(2 * n)
        .into_iter()
        .filter(is_symplectic)
        .map(SymplecticPartition)
        .collect()
}

/// The injective map `λ ↦ (ξ(λ), η(λ))`: pad `λ` to an even number `2k` of
/// parts, set `λ*_j = λ_{2k-j+1} + j - 1`, split `λ*` into its `k` odd
/// values `2ξ*_i + 1` and `k` even values `2η*_i`, and unshift
/// `ξ_i = ξ*_{k-i+1} - (k-i)`, `η_i = η*_{k-i+1} - (k-i)`.
pub fn symplectic_to_bipartition(p: &SymplecticPartition) -> Bipartition {
    let lam = p.underlying();
    let k = lam.len().div_ceil(2);
    if k == 0 {
        return Bipartition::empty();
    }
    let mut odd_halves = Vec::new(); // ξ* ascending
    let mut even_halves = Vec::new(); // η* ascending
    for j in 1..=2 * k {
        let star = lam.part(2 * k - j + 1) + (j as u32 - 1);
        if star % 2 == 1 {
            odd_halves.push((star - 1) / 2);
        } else {
            even_halves.push(star / 2);
        }
    }
    assert_eq!(
        odd_halves.len(),
        even_halves.len(),
        "symplectic partitions split λ* evenly"
    );
    let unshift = |star: &[u32]| -> Partition {
        let k = star.len();
        let parts: Vec<u32> = (1..=k).map(|i| star[k - i] - (k - i) as u32).collect();
        Partition::new(parts).expect("unshifted strictly increasing sequence is a partition")
    };
    Bipartition::new(unshift(&odd_halves), unshift(&even_halves))
}

/// Two-row array of shifted entries attached to a bipartition; the
/// Springer-correspondence carrier. The top row always has one more entry
/// than the bottom row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct USymbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl USymbol {
    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// All `2k+1` entries, sorted ascending; two symbols are similar iff
    /// these multisets agree.
    pub fn entry_multiset(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.top.iter().chain(self.bottom.iter()).copied().collect();
        all.sort_unstable();
        all
    }

    /// Reads the bipartition back off the rows by removing the `+2i` shifts.
    /// Fails when the rows are not shifted partitions (possible for
    /// hand-built symbols, impossible for symbols produced by [`u_symbol`]
    /// or [`distinguished_representative`] of such).
    pub fn bipartition(&self) -> Result<Bipartition> {
        let read = |row: &[u32], shift_step: u32| -> Result<Partition> {
            let m = row.len();
            let mut parts = Vec::with_capacity(m);
            for j in 0..m {
                // largest part first: row[m-1-j] carries shift (m-1-j)*2 + base
                let idx = m - 1 - j;
                let shift = 2 * idx as u32 + shift_step;
                let val = row[idx];
                if val < shift {
                    return Err(Error::MalformedUSymbol);
                }
                parts.push(val - shift);
            }
            Partition::new(parts).map_err(|_| Error::MalformedUSymbol)
        };
        Ok(Bipartition::new(
            read(&self.top, 0)?,
            read(&self.bottom, 1)?,
        ))
    }
}

impl fmt::Display for USymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| {
            r.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "({} ; {})", row(&self.top), row(&self.bottom))
    }
}

/// The u-symbol of `(ξ,η)`: with `k` parts in `η` and `ξ` padded to `k+1`,
/// top row `(ξ_{k+1}, ξ_k+2, ..., ξ_1+2k)` and bottom row
/// `(η_k+1, ..., η_1+2k-1)`. If `ξ` has more than `k+1` nonzero parts, `k`
/// is raised to `len(ξ) - 1` and `η` padded instead.
pub fn u_symbol(a: &Bipartition) -> USymbol {
    let k = a.second.len().max(a.first.len().saturating_sub(1));
    let top = (0..=k)
        .map(|i| a.first.part(k + 1 - i) + 2 * i as u32)
        .collect();
    let bottom = (0..k)
        .map(|i| a.second.part(k - i) + 2 * i as u32 + 1)
        .collect();
    USymbol { top, bottom }
}

/// True iff the interleaved chain
/// `top_1 <= bottom_1 <= top_2 <= bottom_2 <= ... <= top_{k+1}` holds.
pub fn is_distinguished(s: &USymbol) -> bool {
    for i in 0..s.bottom.len() {
        if !(s.top[i] <= s.bottom[i] && s.bottom[i] <= s.top[i + 1]) {
            return false;
        }
    }
    true
}

/// The unique distinguished symbol similar to `s`: sort the `2k+1` entries
/// ascending and deal them alternately, top row first.
pub fn distinguished_representative(s: &USymbol) -> USymbol {
    let all = s.entry_multiset();
    let top = all.iter().copied().step_by(2).collect();
    let bottom = all.iter().copied().skip(1).step_by(2).collect();
    let rep = USymbol { top, bottom };
    debug_assert!(is_distinguished(&rep));
    rep
}

/// The surjection `λ(ξ,η)`: pass to the distinguished representative of the
/// u-symbol, read off its bipartition `(ξ̂,η̂)`, pad both to
/// `k = max(len ξ̂, len η̂)`, re-shift `ξ*_i = ξ̂_{k-i+1} + (i-1)` (same for
/// `η*`), merge `{2ξ*+1} ∪ {2η*}` increasingly into `λ*`, and invert
/// `λ_{2k-j+1} = λ*_j - (j-1)`.
pub fn bipartition_to_symplectic(a: &Bipartition) -> SymplecticPartition {
    let rep = distinguished_representative(&u_symbol(a));
    let hat = rep
        .bipartition()
        .expect("distinguished representative of a u-symbol encodes a bipartition");
    let k = hat.first.len().max(hat.second.len());
    if k == 0 {
        return SymplecticPartition(Partition::empty());
    }
    let mut lam_star = Vec::with_capacity(2 * k);
    for i in 1..=k {
        let xi_star = hat.first.part(k - i + 1) + (i as u32 - 1);
        let eta_star = hat.second.part(k - i + 1) + (i as u32 - 1);
        lam_star.push(2 * xi_star + 1);
        lam_star.push(2 * eta_star);
    }
    lam_star.sort_unstable();
    let mut lam = Vec::with_capacity(2 * k);
    for j in (1..=2 * k).rev() {
        lam.push(lam_star[j - 1] - (j as u32 - 1));
    }
    let lam = Partition::new(lam).expect("inverted λ* is weakly decreasing");
    debug_assert_eq!(lam.weight(), 2 * a.weight());
    SymplecticPartition::new(lam).expect("λ(ξ,η) is symplectic")
}

/// Dominance of the associated symplectic partitions:
/// `λ(a) <= λ(b)`. A preorder, not a partial order: distinct bipartitions
/// in one similarity class share their `λ`.
pub fn springer_leq(a: &Bipartition, b: &Bipartition) -> Result<bool> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch {
            left: a.weight(),
            right: b.weight(),
        });
    }
    Ok(dominance_leq(
        bipartition_to_symplectic(a).underlying(),
        bipartition_to_symplectic(b).underlying(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartition::enumerate_bipartitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> SymplecticPartition {
        SymplecticPartition::new(p(s)).unwrap()
    }

    #[test]
    fn symplectic_predicate() {
        assert!(is_symplectic(&p("2,2")));
        assert!(!is_symplectic(&p("3,1")));
        assert!(is_symplectic(&p("1,1,1,1")));
        assert!(is_symplectic(&p("")));
        assert!(!is_symplectic(&p("2,1")));
        assert!(SymplecticPartition::new(p("3,1")).is_err());
    }

    #[test]
    fn forward_map_examples() {
        assert_eq!(symplectic_to_bipartition(&sp("2")), bp("1|"));
        assert_eq!(symplectic_to_bipartition(&sp("1,1")), bp("|1"));
        assert_eq!(symplectic_to_bipartition(&sp("2,1,1")), bp("1,1|"));
        assert_eq!(symplectic_to_bipartition(&sp("")), bp("|"));
    }

    #[test]
    fn u_symbol_examples() {
        let s = u_symbol(&bp("1|1"));
        assert_eq!((s.top(), s.bottom()), (&[0, 3][..], &[2][..]));
        let s = u_symbol(&bp("|2"));
        assert_eq!((s.top(), s.bottom()), (&[0, 2][..], &[3][..]));
        let s = u_symbol(&bp("|"));
        assert_eq!((s.top(), s.bottom()), (&[0][..], &[][..]));
        // long first component raises k
        let s = u_symbol(&bp("1,1,1|"));
        assert_eq!((s.top(), s.bottom()), (&[1, 3, 5][..], &[1, 3][..]));
    }

    #[test]
    fn distinguished_examples() {
        assert!(is_distinguished(&u_symbol(&bp("1|1"))));
        assert!(!is_distinguished(&u_symbol(&bp("|2"))));
        assert!(is_distinguished(&u_symbol(&bp("|"))));
    }

    #[test]
    fn representative_examples() {
        let rep = distinguished_representative(&u_symbol(&bp("|2")));
        assert_eq!((rep.top(), rep.bottom()), (&[0, 3][..], &[2][..]));
        let s = u_symbol(&bp("1|1"));
        assert_eq!(distinguished_representative(&s), s);
        let hand = USymbol {
            top: vec![1, 1],
            bottom: vec![1],
        };
        assert_eq!(distinguished_representative(&hand), hand);
        assert!(hand.bipartition().is_err());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(bipartition_to_symplectic(&bp("1|")), sp("2"));
        assert_eq!(bipartition_to_symplectic(&bp("|1")), sp("1,1"));
        assert_eq!(bipartition_to_symplectic(&bp("|2")), sp("2,2"));
        assert_eq!(bipartition_to_symplectic(&bp("|1,1")), sp("1,1,1,1"));
        assert_eq!(bipartition_to_symplectic(&bp("|")), sp(""));
    }

    #[test]
    fn springer_order_examples() {
        assert!(springer_leq(&bp("|1,1"), &bp("|2")).unwrap());
        assert!(springer_leq(&bp("1|1"), &bp("1|1")).unwrap());
        assert!(!springer_leq(&bp("2|"), &bp("1,1|")).unwrap());
        assert!(springer_leq(&bp("1|"), &bp("2|")).is_err());
        // preorder only: one similarity class, one λ
        assert_eq!(
            bipartition_to_symplectic(&bp("|2")),
            bipartition_to_symplectic(&bp("1|1"))
        );
        assert!(springer_leq(&bp("|2"), &bp("1|1")).unwrap());
        assert!(springer_leq(&bp("1|1"), &bp("|2")).unwrap());
    }

    #[test]
    fn round_trip_small() {
        for n in 0..=6u32 {
            for lam in enumerate_symplectic(n) {
                let xi_eta = symplectic_to_bipartition(&lam);
                assert!(is_distinguished(&u_symbol(&xi_eta)), "symbol of {xi_eta}");
                assert_eq!(bipartition_to_symplectic(&xi_eta), lam);
            }
        }
    }

    #[test]
    fn surjectivity_small() {
        for n in 0..=5u32 {
            let mut image: Vec<SymplecticPartition> = enumerate_bipartitions(n)
                .iter()
                .map(bipartition_to_symplectic)
                .collect();
            image.sort();
            image.dedup();
            let mut expected = enumerate_symplectic(n);
            expected.sort();
            assert_eq!(image, expected, "image over P_2({n})");
        }
    }
}
