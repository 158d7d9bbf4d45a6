//! Exhaustive desk-scale certification of the correspondence combinatorics,
//! producing machine-readable reports.
//!
//! Failures never abort a sweep: every instance is enumerated, then
//! summarised, so a counterexample list is available when something breaks.
//! Instance lists are built in a fixed order and fanned out through an
//! order-preserving map, so report bytes are identical for identical
//! parameters regardless of thread count.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::beta::{mu_from_core_quotient, mu_leq, tau, two_core, two_quotient};
use crate::bipartition::{ah_leq, dim_chi, enumerate_bipartitions, Bipartition};
use crate::error::Result;
use crate::exec::map_ordered;
use crate::extremal::{closed_max, closed_min, partition_level_min};
use crate::partition::{dominance_leq, enumerate_partitions, union_part, Partition};
use crate::springer::{
    bipartition_to_symplectic, enumerate_symplectic, is_distinguished, springer_leq,
    symplectic_to_bipartition, u_symbol,
};
use crate::weyl::{omega, pieri_sgn, pieri_triv, theta_membership, theta_set, CorrCase};

/// One verified instance.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub instance: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

impl Check {
    fn new(
        name: &str,
        instance: String,
        pass: bool,
        expected: impl Into<String>,
        actual: String,
    ) -> Check {
        Check {
            name: name.to_string(),
            instance,
            pass,
            expected: expected.into(),
            actual,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub failed: usize,
}

/// A deterministic sweep report: same params, same bytes.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    fn new(suite: &str, params: BTreeMap<String, String>, checks: Vec<Check>) -> Report {
        let summary = Summary {
            total: checks.len(),
            failed: checks.iter().filter(|c| !c.pass).count(),
        };
        Report {
            suite: suite.to_string(),
            params,
            checks,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

fn params_of(entries: &[(&str, String)]) -> BTreeMap<String, String> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn fmt_bps(v: &[Bipartition]) -> String {
    let inner: Vec<String> = v.iter().map(|b| b.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

/// The order index `k` each unitary case is certified against: `u1` with
/// `k = 1`, `u2` with `k = 2`. The SO cases order by the symplectic
/// partition instead.
pub fn default_order_index(case: CorrCase) -> Option<u32> {
    match case {
        CorrCase::SoSame | CorrCase::SoDiff => None,
        CorrCase::UOdd => Some(1),
        CorrCase::UEven => Some(2),
    }
}

/// The partition that orders `Θ` elements for this case: `λ(x)` for SO
/// cases, `μ_k(x)` for unitary ones.
fn order_key(case: CorrCase, k: Option<u32>, x: &Bipartition) -> Partition {
    match case {
        CorrCase::SoSame | CorrCase::SoDiff => bipartition_to_symplectic(x).underlying().clone(),
        CorrCase::UOdd | CorrCase::UEven => {
            mu_from_core_quotient(k.expect("unitary order needs k"), x)
        }
    }
}

/// The stable-range sweep shared by the extremal suites:
/// `lp <= max_lp`, `2*lp <= l <= max_l`, every right label in `P_2(lp)`.
fn extremal_instances(max_l: u32, max_lp: u32) -> Vec<(u32, u32, Bipartition)> {
    let mut out = Vec::new();
    for lp in 0..=max_lp {
        for l in (2 * lp)..=max_l {
            for bp in enumerate_bipartitions(lp) {
                out.push((l, lp, bp));
            }
        }
    }
    out
}

/// Existence and uniqueness of extremal elements: for every sweep instance,
/// the brute-force `Θ` from `Ω` is non-empty, contains the closed min/max,
/// and they are its unique least/greatest elements under the case order
/// (`λ`-dominance for SO, `μ_k`-dominance for unitary), using the default
/// order index per case.
pub fn verify_extremal(case: CorrCase, max_l: u32, max_lp: u32) -> Report {
    verify_extremal_with_k(case, default_order_index(case), max_l, max_lp)
}

/// As [`verify_extremal`] with an explicit unitary order index.
pub fn verify_extremal_with_k(case: CorrCase, k: Option<u32>, max_l: u32, max_lp: u32) -> Report {
    let order_desc = match case {
        CorrCase::SoSame | CorrCase::SoDiff => "lambda-dominance".to_string(),
        _ => format!("mu_k-dominance, k={}", k.unwrap_or(0)),
    };
    let checks = map_ordered(extremal_instances(max_l, max_lp), |(l, lp, bp)| {
        let instance = format!("l={l} lp={lp} right={bp}");
        let theta = theta_set(case, l, lp, &bp).expect("right label has weight lp");
        if theta.is_empty() {
            return Check::new(
                "extremal",
                instance,
                false,
                "theta set is non-empty in the stable range",
                "theta set is empty".into(),
            );
        }
        let cmin = closed_min(case, l, lp, &bp).expect("sweep stays in stable range");
        let cmax = closed_max(case, l, lp, &bp).expect("sweep stays in stable range");
        let keys: Vec<(Bipartition, Partition)> = theta
            .iter()
            .map(|x| (x.clone(), order_key(case, k, x)))
            .collect();
        let minima: Vec<Bipartition> = keys
            .iter()
            .filter(|(_, ky)| keys.iter().all(|(_, other)| dominance_leq(ky, other)))
            .map(|(x, _)| x.clone())
            .collect();
        let maxima: Vec<Bipartition> = keys
            .iter()
            .filter(|(_, ky)| keys.iter().all(|(_, other)| dominance_leq(other, ky)))
            .map(|(x, _)| x.clone())
            .collect();
        let mut problems = Vec::new();
        if !theta.contains(&cmin) {
            problems.push(format!("closed min {cmin} is not in theta"));
        }
        if !theta.contains(&cmax) {
            problems.push(format!("closed max {cmax} is not in theta"));
        }
        if minima != vec![cmin.clone()] {
            problems.push(format!(
                "least elements {} != closed min {cmin}",
                fmt_bps(&minima)
            ));
        }
        if maxima != vec![cmax.clone()] {
            problems.push(format!(
                "greatest elements {} != closed max {cmax}",
                fmt_bps(&maxima)
            ));
        }
        let pass = problems.is_empty();
        let actual = if pass {
            "holds".to_string()
        } else {
            problems.join("; ")
        };
        Check::new(
            "extremal",
            instance,
            pass,
            format!("{cmin} and {cmax} are the unique extremes under {order_desc}"),
            actual,
        )
    });
    Report::new(
        "extremal",
        params_of(&[
            ("case", case.label().to_string()),
            ("max_l", max_l.to_string()),
            ("max_lp", max_lp.to_string()),
            ("order", order_desc),
        ]),
        checks,
    )
}

/// Lemma-vs-formula equivalence: the support of the expanded `Ω_{l,lp}`
/// equals the closed membership predicate, per `(l, lp)` on the stable-range
/// sweep.
pub fn verify_membership(case: CorrCase, max_l: u32, max_lp: u32) -> Report {
    let mut ranks = Vec::new();
    for lp in 0..=max_lp {
        for l in (2 * lp)..=max_l {
            ranks.push((l, lp));
        }
    }
    let checks = map_ordered(ranks, |(l, lp)| {
        let support = omega(case, l, lp).support();
        let mut predicted = Vec::new();
        for a in enumerate_bipartitions(l) {
            for b in enumerate_bipartitions(lp) {
                if theta_membership(case, l, lp, &a, &b).expect("weights match by construction") {
                    predicted.push((a.clone(), b.clone()));
                }
            }
        }
        predicted.sort();
        let pass = support == predicted;
        let actual = if pass {
            format!("equal ({} pairs)", support.len())
        } else {
            let only_support: Vec<String> = support
                .iter()
                .filter(|p| !predicted.contains(p))
                .take(3)
                .map(|(a, b)| format!("({a}, {b})"))
                .collect();
            let only_predicted: Vec<String> = predicted
                .iter()
                .filter(|p| !support.contains(p))
                .take(3)
                .map(|(a, b)| format!("({a}, {b})"))
                .collect();
            format!(
                "support has {} pairs, predicate {}; only in support: {:?}; only in predicate: {:?}",
                support.len(),
                predicted.len(),
                only_support,
                only_predicted
            )
        };
        Check::new(
            "membership",
            format!("l={l} lp={lp}"),
            pass,
            "support(omega) equals the closed membership predicate",
            actual,
        )
    });
    Report::new(
        "membership",
        params_of(&[
            ("case", case.label().to_string()),
            ("max_l", max_l.to_string()),
            ("max_lp", max_lp.to_string()),
        ]),
        checks,
    )
}

/// Natural-order extremes: the closed min/max are the least and greatest
/// elements of `Θ` under the Achar-Henderson order.
pub fn verify_natural_extremes(case: CorrCase, max_l: u32, max_lp: u32) -> Report {
    let checks = map_ordered(extremal_instances(max_l, max_lp), |(l, lp, bp)| {
        let instance = format!("l={l} lp={lp} right={bp}");
        let theta = theta_set(case, l, lp, &bp).expect("right label has weight lp");
        let cmin = closed_min(case, l, lp, &bp).expect("stable range");
        let cmax = closed_max(case, l, lp, &bp).expect("stable range");
        let mut problems = Vec::new();
        if !theta.contains(&cmin) || !theta.contains(&cmax) {
            problems.push("closed forms not in theta".to_string());
        }
        for x in &theta {
            if !ah_leq(&cmin, x).expect("equal weights") {
                problems.push(format!("{cmin} is not AH-below {x}"));
            }
            if !ah_leq(x, &cmax).expect("equal weights") {
                problems.push(format!("{x} is not AH-below {cmax}"));
            }
        }
        let pass = problems.is_empty();
        let actual = if pass {
            "holds".to_string()
        } else {
            problems.join("; ")
        };
        Check::new(
            "natural-extremes",
            instance,
            pass,
            format!("{cmin} and {cmax} are the AH least/greatest of theta"),
            actual,
        )
    });
    Report::new(
        "natural-extremes",
        params_of(&[
            ("case", case.label().to_string()),
            ("max_l", max_l.to_string()),
            ("max_lp", max_lp.to_string()),
        ]),
        checks,
    )
}

/// Monotonicity of the label maps on `Θ`-restricted pairs: for `so1`,
/// AH order and `λ`-dominance agree (an iff); for `u2`, AH order implies
/// `μ_2`-dominance.
pub fn verify_monotonicity(max_l: u32, max_lp: u32) -> Report {
    let mut instances = Vec::new();
    for case in [CorrCase::SoSame, CorrCase::UEven] {
        for inst in extremal_instances(max_l, max_lp) {
            instances.push((case, inst));
        }
    }
    let checks = map_ordered(instances, |(case, (l, lp, bp))| {
        let theta = theta_set(case, l, lp, &bp).expect("right label has weight lp");
        let (name, expected) = match case {
            CorrCase::SoSame => (
                "ah-iff-lambda",
                "AH order coincides with lambda-dominance on theta pairs",
            ),
            _ => (
                "ah-implies-mu",
                "AH order implies mu_2-dominance on theta pairs",
            ),
        };
        let mut problems = Vec::new();
        for a in &theta {
            for b in &theta {
                let ah = ah_leq(a, b).expect("equal weights");
                match case {
                    CorrCase::SoSame => {
                        let sp = springer_leq(a, b).expect("equal weights");
                        if ah != sp {
                            problems.push(format!("({a}, {b}): AH {ah} but lambda {sp}"));
                        }
                    }
                    _ => {
                        if ah && !mu_leq(2, a, b).expect("equal weights") {
                            problems.push(format!("({a}, {b}): AH holds but mu_2 fails"));
                        }
                    }
                }
            }
        }
        let pass = problems.is_empty();
        let actual = if pass {
            "holds".to_string()
        } else {
            problems.truncate(4);
            problems.join("; ")
        };
        Check::new(
            name,
            format!("case={} l={l} lp={lp} right={bp}", case.label()),
            pass,
            expected,
            actual,
        )
    });
    Report::new(
        "monotonicity",
        params_of(&[("max_l", max_l.to_string()), ("max_lp", max_lp.to_string())]),
        checks,
    )
}

/// Springer machinery: round trip and distinguishedness over all symplectic
/// partitions of `2n`, surjectivity of `λ(ξ,η)`, and one distinguished
/// symbol per similarity class, all for `n <= max_n`.
pub fn verify_springer(max_n: u32) -> Report {
    let mut checks = Vec::new();
    for n in 0..=max_n {
        let all = enumerate_symplectic(n);
        let per_partition = map_ordered(all.clone(), |lam| {
            let bp = symplectic_to_bipartition(&lam);
            let distinguished = is_distinguished(&u_symbol(&bp));
            let back = bipartition_to_symplectic(&bp);
            let pass = distinguished && back == lam;
            Check::new(
                "round-trip",
                format!("lambda={lam}"),
                pass,
                "lambda -> (xi,eta) -> lambda is the identity with a distinguished symbol",
                if pass {
                    "holds".into()
                } else {
                    format!("(xi,eta)={bp} distinguished={distinguished} back={back}")
                },
            )
        });
        checks.extend(per_partition);

        let mut image: Vec<_> = enumerate_bipartitions(n)
            .iter()
            .map(bipartition_to_symplectic)
            .collect();
        image.sort();
        image.dedup();
        let mut expected: Vec<_> = all.clone();
        expected.sort();
        let pass = image == expected;
        checks.push(Check::new(
            "surjectivity",
            format!("n={n}"),
            pass,
            "image of P_2(n) is every symplectic partition of 2n",
            if pass {
                format!("equal ({} classes)", expected.len())
            } else {
                format!("image size {} vs {}", image.len(), expected.len())
            },
        ));
    }
    for n in 0..=max_n {
        let mut classes: BTreeMap<Vec<u32>, Vec<Bipartition>> = BTreeMap::new();
        for bp in enumerate_bipartitions(n) {
            classes
                .entry(u_symbol(&bp).entry_multiset())
                .or_default()
                .push(bp);
        }
        for (entries, members) in classes {
            let distinguished: Vec<&Bipartition> = members
                .iter()
                .filter(|bp| is_distinguished(&u_symbol(bp)))
                .collect();
            let pass = distinguished.len() == 1;
            checks.push(Check::new(
                "similarity-class",
                format!("n={n} entries={entries:?}"),
                pass,
                "exactly one member has a distinguished symbol",
                format!(
                    "{} of {} members distinguished",
                    distinguished.len(),
                    members.len()
                ),
            ));
        }
    }
    Report::new(
        "springer",
        params_of(&[("max_n", max_n.to_string())]),
        checks,
    )
}

/// Removes one beta value by 2 in every legal way, pairing each move with
/// the diagram-level rim-hook check.
fn domino_moves(mu: &Partition, t: u32) -> Vec<Partition> {
    let beta: Vec<u32> = crate::beta::beta_set(mu, t)
        .expect("t at least the part count")
        .values()
        .to_vec();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b >= 2 && !beta.contains(&(b - 2)) {
            let mut values = beta.clone();
            values[i] = b - 2;
            values.sort_unstable_by(|x, y| y.cmp(x));
            out.push(crate::beta::beta_to_partition(
                &crate::beta::BetaSet::new(values).expect("distinct after move"),
            ));
        }
    }
    out
}

/// Cells of the Young diagram, row-major, 0-indexed.
fn diagram_cells(mu: &Partition) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for (i, &row) in mu.parts().iter().enumerate() {
        for j in 0..row as usize {
            cells.push((i, j));
        }
    }
    cells
}

/// True iff `inner` is obtained from `outer` by deleting one domino
/// (two edge-adjacent cells).
fn differs_by_domino(outer: &Partition, inner: &Partition) -> bool {
    let outer_cells = diagram_cells(outer);
    let inner_cells = diagram_cells(inner);
    let removed: Vec<(usize, usize)> = outer_cells
        .iter()
        .filter(|c| !inner_cells.contains(c))
        .copied()
        .collect();
    if removed.len() != 2 || inner_cells.iter().any(|c| !outer_cells.contains(c)) {
        return false;
    }
    let ((r1, c1), (r2, c2)) = (removed[0], removed[1]);
    (r1 == r2 && c1.abs_diff(c2) == 1) || (c1 == c2 && r1.abs_diff(r2) == 1)
}

/// β-calculus invariants for all `μ ⊢ n <= max_n`: the weight identity
/// `|μ| = 2|quotient| + |core|`, rim-hook parity invariance, invariance of
/// the quotient under `t -> t+2`, the core-vs-cardinality equivalence, and
/// inversion of `μ_k` against the 2-quotient for `k <= 3`.
pub fn verify_unitary(max_n: u32) -> Report {
    let mut mus = Vec::new();
    for n in 0..=max_n {
        for mu in enumerate_partitions(n) {
            mus.push(mu);
        }
    }

    let mut checks = map_ordered(mus.clone(), |mu| {
        let t = (mu.len() as u32) | 1;
        let q = two_quotient(&mu, t).expect("odd t covers the parts");
        let core = two_core(&mu);
        let pass = mu.weight() == 2 * q.weight() + core.weight();
        Check::new(
            "weight-identity",
            format!("mu={mu} t={t}"),
            pass,
            "|mu| = 2|quotient| + |core|",
            format!("{} = 2*{} + {}", mu.weight(), q.weight(), core.weight()),
        )
    });

    checks.extend(map_ordered(mus.clone(), |mu| {
        let t = mu.len() as u32 + 2;
        let beta = crate::beta::beta_set(&mu, t).expect("t covers the parts");
        let count = |vals: &[u32]| {
            let even = vals.iter().filter(|&&b| b % 2 == 0).count();
            (even, vals.len() - even)
        };
        let before = count(beta.values());
        let mut problems = Vec::new();
        let moves = domino_moves(&mu, t);
        for smaller in &moves {
            let after = count(
                crate::beta::beta_set(smaller, t)
                    .expect("same cardinality")
                    .values(),
            );
            if after != before {
                problems.push(format!("{smaller}: parity counts {after:?} vs {before:?}"));
            }
            if !differs_by_domino(&mu, smaller) {
                problems.push(format!("{smaller}: beta move is not a rim 2-hook removal"));
            }
        }
        let pass = problems.is_empty();
        Check::new(
            "parity-invariance",
            format!("mu={mu} t={t}"),
            pass,
            "every beta move removes a rim 2-hook and preserves even/odd counts",
            if pass {
                format!("holds ({} moves)", moves.len())
            } else {
                problems.join("; ")
            },
        )
    }));

    checks.extend(map_ordered(mus.clone(), |mu| {
        let t = (mu.len() as u32) | 1;
        let q = two_quotient(&mu, t).expect("odd t covers the parts");
        let pass = two_quotient(&mu, t + 2).expect("larger t") == q
            && two_quotient(&mu, t + 4).expect("larger t") == q;
        Check::new(
            "t-invariance",
            format!("mu={mu} t={t}"),
            pass,
            "2-quotient is unchanged under t -> t+2",
            if pass {
                "holds".into()
            } else {
                "differs".into()
            },
        )
    }));

    checks.extend(map_ordered((0..=max_n).collect::<Vec<_>>(), |n| {
        let all = enumerate_partitions(n);
        let t = n.max(1) | 1; // covers every partition of n
        let mut problems = Vec::new();
        let mut pairs = 0usize;
        for (i, a) in all.iter().enumerate() {
            for b in all.iter().skip(i + 1) {
                pairs += 1;
                let same_core = two_core(a) == two_core(b);
                let beta_counts = |mu: &Partition| {
                    let beta = crate::beta::beta_set(mu, t).expect("t covers n parts");
                    beta.values().iter().filter(|&&v| v % 2 == 0).count()
                };
                let same_counts = beta_counts(a) == beta_counts(b);
                if same_core != same_counts {
                    problems.push(format!(
                        "({a}, {b}): cores {same_core}, counts {same_counts}"
                    ));
                }
            }
        }
        let pass = problems.is_empty();
        Check::new(
            "core-vs-cardinalities",
            format!("n={n} t={t}"),
            pass,
            "equal 2-cores iff equal even/odd beta cardinalities",
            if pass {
                format!("holds ({pairs} pairs)")
            } else {
                problems.truncate(4);
                problems.join("; ")
            },
        )
    }));

    let mut inversion_targets: Vec<(u32, Partition)> = Vec::new();
    for k in 0..=3u32 {
        let core = tau(k);
        inversion_targets.extend(
            mus.iter()
                .filter(|mu| two_core(mu) == core)
                .map(|mu| (k, mu.clone())),
        );
    }
    checks.extend(map_ordered(inversion_targets, |(k, mu)| {
        let t = (mu.len() as u32) | 1;
        let q = two_quotient(&mu, t).expect("odd t covers the parts");
        let back = mu_from_core_quotient(k, &q);
        let pass = back == mu;
        Check::new(
            "quotient-inversion",
            format!("k={k} mu={mu}"),
            pass,
            "mu_from_core_quotient inverts the 2-quotient on partitions with core tau_k",
            if pass {
                "holds".into()
            } else {
                format!("rebuilt {back}")
            },
        )
    }));

    let mut bijection_ranks = Vec::new();
    for k in 0..=3u32 {
        let base = k * (k + 1) / 2;
        for r in 0..=5u32 {
            if 2 * r + base <= max_n {
                bijection_ranks.push((k, r));
            }
        }
    }
    checks.extend(map_ordered(bijection_ranks, |(k, r)| {
        let weight = 2 * r + k * (k + 1) / 2;
        let mut image: Vec<Partition> = enumerate_bipartitions(r)
            .iter()
            .map(|q| mu_from_core_quotient(k, q))
            .collect();
        image.sort();
        let before = image.len();
        image.dedup();
        let mut expected: Vec<Partition> = enumerate_partitions(weight)
            .into_iter()
            .filter(|mu| two_core(mu) == tau(k))
            .collect();
        expected.sort();
        let pass = image.len() == before && image == expected;
        Check::new(
            "quotient-bijection",
            format!("k={k} r={r}"),
            pass,
            "mu_from_core_quotient maps P_2(r) bijectively onto partitions with core tau_k",
            if pass {
                format!("holds ({} partitions)", expected.len())
            } else {
                format!(
                    "image {} of {} vs {} targets",
                    image.len(),
                    before,
                    expected.len()
                )
            },
        )
    }));

    Report::new(
        "unitary",
        params_of(&[("max_n", max_n.to_string())]),
        checks,
    )
}

/// Partition-level minima for unitary instances with `θ(k) = k + 1`: the
/// minimal partner of `μ' ⊢ mp` is `(m - mp) ∪ μ'`, checked through the
/// closed-form bipartition and the quotient inverse, for `mp <= max_mp` and
/// `m` in `2mp..=2mp+4`.
pub fn verify_partition_level(max_mp: u32) -> Report {
    let mut instances = Vec::new();
    for k in 0..=3u32 {
        let core = tau(k + 1);
        if core.weight() > max_mp {
            continue;
        }
        for mp in (core.weight()..=max_mp).step_by(2) {
            for mu_right in enumerate_partitions(mp)
                .into_iter()
                .filter(|mu| two_core(mu) == core)
            {
                for m in (2 * mp)..=(2 * mp + 4) {
                    if (m as i64 - (k * (k + 1) / 2) as i64) % 2 == 0 && m >= k * (k + 1) / 2 {
                        instances.push((k, m, mp, mu_right.clone()));
                    }
                }
            }
        }
    }
    let checks = map_ordered(instances, |(k, m, mp, mu_right)| {
        let instance = format!("k={k} m={m} mp={mp} mu'={mu_right}");
        let expected_min = union_part(m - mp, &mu_right);
        let case = if k % 2 == 1 {
            CorrCase::UOdd
        } else {
            CorrCase::UEven
        };
        let l = (m - k * (k + 1) / 2) / 2;
        let lp = (mp - tau(k + 1).weight()) / 2;
        let t = (mu_right.len() as u32) | 1;
        let bp_right = two_quotient(&mu_right, t).expect("odd t covers the parts");
        let result: Result<(Partition, Partition)> = (|| {
            let min_bp = closed_min(case, l, lp, &bp_right)?;
            Ok((
                mu_from_core_quotient(k, &min_bp),
                partition_level_min(m, mp, &mu_right)?,
            ))
        })();
        match result {
            Ok((via_quotient, via_union)) => {
                let pass = via_quotient == expected_min && via_union == expected_min;
                Check::new(
                    "partition-level-min",
                    instance,
                    pass,
                    format!("minimal partner is {expected_min}"),
                    if pass {
                        "holds".into()
                    } else {
                        format!("quotient route {via_quotient}, union route {via_union}")
                    },
                )
            }
            Err(e) => Check::new(
                "partition-level-min",
                instance,
                false,
                format!("minimal partner is {expected_min}"),
                format!("error: {e}"),
            ),
        }
    });
    Report::new(
        "partition-level",
        params_of(&[("max_mp", max_mp.to_string())]),
        checks,
    )
}

/// Pieri dimension identity: the constituents of either induction rule at
/// rank `l` carry total dimension `C(l, r) * dim χ`, for all `a ∈ P_2(r)`,
/// `r <= l <= max_l`.
pub fn verify_pieri(max_l: u32) -> Report {
    fn binomial(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
    }
    let mut instances = Vec::new();
    for r in 0..=max_l {
        for a in enumerate_bipartitions(r) {
            for l in r..=max_l {
                instances.push((a.clone(), r, l));
            }
        }
    }
    let checks = map_ordered(instances, |(a, r, l)| {
        let expected = binomial(u64::from(l), u64::from(r)) * dim_chi(&a);
        let sgn_total: u64 = pieri_sgn(&a, l).expect("l >= r").iter().map(dim_chi).sum();
        let triv_total: u64 = pieri_triv(&a, l).expect("l >= r").iter().map(dim_chi).sum();
        let pass = sgn_total == expected && triv_total == expected;
        Check::new(
            "pieri-dimension",
            format!("a={a} l={l}"),
            pass,
            format!("both rules expand to total dimension {expected}"),
            format!("sgn {sgn_total}, triv {triv_total}"),
        )
    });
    Report::new("pieri", params_of(&[("max_l", max_l.to_string())]), checks)
}

/// Bounds for [`verify_all`]; the defaults are the certification bounds the
/// acceptance suite runs at.
#[derive(Clone, Copy, Debug)]
pub struct VerifyBounds {
    pub max_l: u32,
    pub max_lp: u32,
    pub springer_n: u32,
    pub unitary_n: u32,
    pub max_mp: u32,
    pub pieri_l: u32,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        VerifyBounds {
            max_l: 7,
            max_lp: 3,
            springer_n: 8,
            unitary_n: 12,
            max_mp: 6,
            pieri_l: 6,
        }
    }
}

/// Runs every suite at the given bounds, in a fixed order.
pub fn verify_all(bounds: VerifyBounds) -> Vec<Report> {
    let mut reports = Vec::new();
    for case in CorrCase::ALL {
        reports.push(verify_extremal(case, bounds.max_l, bounds.max_lp));
    }
    for case in CorrCase::ALL {
        reports.push(verify_membership(case, bounds.max_l, bounds.max_lp));
    }
    for case in CorrCase::ALL {
        reports.push(verify_natural_extremes(case, bounds.max_l, bounds.max_lp));
    }
    reports.push(verify_monotonicity(bounds.max_l, bounds.max_lp));
    reports.push(verify_springer(bounds.springer_n));
    reports.push(verify_unitary(bounds.unitary_n));
    reports.push(verify_partition_level(bounds.max_mp));
    reports.push(verify_pieri(bounds.pieri_l));
    reports
}
