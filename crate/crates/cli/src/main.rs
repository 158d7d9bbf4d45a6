//! Command-line surface over the correspondence combinatorics.
//!
//! Subcommands mirror the library modules: `partition`, `springer`,
//! `betaset`, `mu`, `omega`, `theta`, `extremal`, `pair`, `verify`.
//! Output is JSON by default (`--format text` for an aligned view).
//! Exit codes: 0 success, 1 domain error, 2 usage error; `verify` exits 0
//! only when every check passes.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use howe_weyl::beta::{beta_set, epsilon_sign, mu_from_core_quotient, two_core, two_quotient};
use howe_weyl::extremal::{closed_max, closed_min};
use howe_weyl::pair::{resolve, stable_range, Family};
use howe_weyl::partition::{
    common_predecessor_witness, dominance_leq, enumerate_partitions, precedes, union_part,
};
use howe_weyl::springer::{
    bipartition_to_symplectic, distinguished_representative, is_distinguished, u_symbol,
};
use howe_weyl::verify::{
    default_order_index, verify_all, verify_extremal, verify_membership, verify_monotonicity,
    verify_natural_extremes, verify_partition_level, verify_pieri, verify_springer, verify_unitary,
    Report, VerifyBounds,
};
use howe_weyl::weyl::{omega, theta_set};
use howe_weyl::{Bipartition, CorrCase, Partition};

#[derive(Parser)]
#[command(
    name = "howe-weyl",
    about = "Weyl-group combinatorics of the Howe correspondence",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads for the sweep drivers (default: all cores). Output
    /// bytes do not depend on this.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct BipartitionArg {
    /// Two partitions in text form (empty string for the zero partition),
    /// e.g. --bipartition "2,1" "1".
    #[arg(long, num_args = 2, value_names = ["FIRST", "SECOND"])]
    bipartition: Vec<String>,
}

impl BipartitionArg {
    fn parse(&self) -> Result<Bipartition, howe_weyl::Error> {
        Ok(Bipartition::new(
            self.bipartition[0].parse()?,
            self.bipartition[1].parse()?,
        ))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Partition orders and enumeration.
    Partition {
        #[command(subcommand)]
        sub: PartitionCommand,
    },
    /// U-symbol, distinguished representative, and symplectic partition of
    /// a bipartition.
    Springer(BipartitionArg),
    /// Beta-numbers, 2-core, and 2-quotient of a partition.
    Betaset {
        /// Partition in text form.
        #[arg(long)]
        partition: String,
        /// Cardinality of the beta-set (odd for the quotient).
        #[arg(long)]
        t: u32,
    },
    /// Rebuild the partition with 2-core tau_k and the given 2-quotient.
    Mu {
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        bipartition: BipartitionArg,
    },
    /// Expand the formal sum Omega_{l,lp} for one case.
    Omega {
        #[arg(long)]
        case: String,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        lp: u32,
    },
    /// Theta set of a fixed right label.
    Theta {
        #[arg(long)]
        case: String,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        lp: u32,
        #[arg(long, num_args = 2, value_names = ["FIRST", "SECOND"])]
        right: Vec<String>,
    },
    /// Closed-form extremal elements of a Theta set.
    Extremal {
        #[arg(long)]
        case: String,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        lp: u32,
        #[arg(long, num_args = 2, value_names = ["FIRST", "SECOND"])]
        right: Vec<String>,
        /// Order index for the unitary cases (default: 1 for u1, 2 for u2).
        #[arg(long)]
        k: Option<u32>,
    },
    /// Dual-pair bookkeeping.
    Pair {
        #[command(subcommand)]
        sub: PairCommand,
    },
    /// Certification sweeps; exits 0 only when every check passes.
    Verify {
        /// One of: all, extremal, membership, natural-order, monotonicity,
        /// springer, unitary, partition-level, pieri.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        max_l: u32,
        #[arg(long, default_value_t = 3)]
        max_lp: u32,
        #[arg(long, default_value_t = 8)]
        springer_n: u32,
        #[arg(long, default_value_t = 12)]
        unitary_n: u32,
        #[arg(long, default_value_t = 6)]
        max_mp: u32,
        #[arg(long, default_value_t = 6)]
        pieri_l: u32,
    },
}

#[derive(Subcommand)]
enum PartitionCommand {
    /// Compare two partitions under dominance, precedence, and common
    /// predecessors.
    Order {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// All partitions of n, lexicographically decreasing.
    Enumerate {
        #[arg(long)]
        n: u32,
    },
    /// Multiset union {x} ∪ mu.
    Union {
        #[arg(long)]
        x: u32,
        #[arg(long)]
        mu: String,
    },
}

#[derive(Subcommand)]
enum PairCommand {
    /// Resolve group-level data to correspondence-level data.
    Resolve {
        /// One of: sp-o-plus, sp-o-minus, u-u (sp-o-odd and gl-gl are
        /// recognised but refused).
        #[arg(long)]
        family: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        mp: u32,
        #[arg(long)]
        k: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    #[cfg(feature = "parallel")]
    if let Some(jobs) = cli.jobs {
        // a failure here means a pool already exists, which is fine
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = cli.jobs;
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                howe_weyl::Error::InvalidPartition { .. }
                | howe_weyl::Error::InvalidBipartition { .. }
                | howe_weyl::Error::UnknownCase(_)
                | howe_weyl::Error::UnknownSuite(_)
                | howe_weyl::Error::UnsupportedFamily(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn emit(format: Format, value: &impl Serialize, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable output")
        ),
        Format::Text => println!("{}", text()),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, howe_weyl::Error> {
    match &cli.command {
        Command::Partition { sub } => run_partition(cli.format, sub)?,
        Command::Springer(arg) => {
            let bp = arg.parse()?;
            let symbol = u_symbol(&bp);
            let rep = distinguished_representative(&symbol);
            let lambda = bipartition_to_symplectic(&bp);
            let out = json!({
                "bipartition": bp,
                "usymbol": symbol,
                "distinguished": is_distinguished(&symbol),
                "representative": rep,
                "lambda": lambda,
            });
            emit(cli.format, &out, || {
                format!(
                    "usymbol       {symbol}\ndistinguished {}\nrepresentative {rep}\nlambda        {lambda}",
                    is_distinguished(&symbol)
                )
            });
        }
        Command::Betaset { partition, t } => {
            let mu: Partition = partition.parse()?;
            let beta = beta_set(&mu, *t)?;
            let quotient = two_quotient(&mu, *t)?;
            let core = two_core(&mu);
            let out = json!({
                "partition": mu,
                "t": t,
                "beta": beta.values(),
                "core": core,
                "quotient": quotient,
            });
            emit(cli.format, &out, || {
                format!(
                    "beta     {:?}\ncore     {core}\nquotient {quotient}",
                    beta.values()
                )
            });
        }
        Command::Mu { k, bipartition } => {
            let q = bipartition.parse()?;
            let mu = mu_from_core_quotient(*k, &q);
            let out = json!({
                "k": k,
                "quotient": q,
                "mu": mu,
                "epsilon": epsilon_sign(&mu),
            });
            emit(cli.format, &out, || {
                format!("mu      {mu}\nepsilon {}", epsilon_sign(&mu))
            });
        }
        Command::Omega { case, l, lp } => {
            let case: CorrCase = case.parse()?;
            let om = omega(case, *l, *lp);
            let entries: Vec<_> = om
                .iter()
                .map(|((left, right), mult)| json!({"left": left, "right": right, "mult": mult}))
                .collect();
            let out = json!({"case": case, "l": l, "lp": lp, "entries": entries});
            emit(cli.format, &out, || {
                om.iter()
                    .map(|((a, b), m)| format!("{m} x ({a})  ({b})"))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Command::Theta { case, l, lp, right } => {
            let case: CorrCase = case.parse()?;
            let bp_right = Bipartition::new(right[0].parse()?, right[1].parse()?);
            let om = omega(case, *l, *lp);
            let theta = theta_set(case, *l, *lp, &bp_right)?;
            let entries: Vec<_> = theta
                .iter()
                .map(|left| {
                    json!({"left": left, "right": bp_right, "mult": om.multiplicity(left, &bp_right)})
                })
                .collect();
            let out = json!({"case": case, "l": l, "lp": lp, "entries": entries});
            emit(cli.format, &out, || {
                theta
                    .iter()
                    .map(|b| b.to_string())
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Command::Extremal {
            case,
            l,
            lp,
            right,
            k,
        } => {
            let case: CorrCase = case.parse()?;
            let bp_right = Bipartition::new(right[0].parse()?, right[1].parse()?);
            let min = closed_min(case, *l, *lp, &bp_right)?;
            let max = closed_max(case, *l, *lp, &bp_right)?;
            let out = match case {
                CorrCase::SoSame | CorrCase::SoDiff => json!({
                    "case": case, "l": l, "lp": lp, "right": bp_right,
                    "min": min, "max": max,
                    "min_lambda": bipartition_to_symplectic(&min),
                    "max_lambda": bipartition_to_symplectic(&max),
                }),
                CorrCase::UOdd | CorrCase::UEven => {
                    let k = k.or_else(|| default_order_index(case)).unwrap_or(1);
                    json!({
                        "case": case, "l": l, "lp": lp, "right": bp_right,
                        "min": min, "max": max, "k": k,
                        "min_mu": mu_from_core_quotient(k, &min),
                        "max_mu": mu_from_core_quotient(k, &max),
                    })
                }
            };
            emit(cli.format, &out, || format!("min {min}\nmax {max}"));
        }
        Command::Pair { sub } => {
            let PairCommand::Resolve { family, m, mp, k } = sub;
            let family: Family = family.parse()?;
            let spec = resolve(family, *m, *mp, *k)?;
            let out = json!({
                "family": spec.family,
                "m": spec.m,
                "mp": spec.mp,
                "k": spec.k,
                "theta_k": spec.theta_k,
                "case": spec.case,
                "l": spec.l,
                "lp": spec.lp,
                "stable_range": stable_range(&spec),
            });
            emit(cli.format, &out, || {
                format!(
                    "theta(k) {}\ncase     {}\nl        {}\nlp       {}\nstable   {}",
                    spec.theta_k,
                    spec.case,
                    spec.l,
                    spec.lp,
                    stable_range(&spec)
                )
            });
        }
        Command::Verify {
            suite,
            max_l,
            max_lp,
            springer_n,
            unitary_n,
            max_mp,
            pieri_l,
        } => {
            let bounds = VerifyBounds {
                max_l: *max_l,
                max_lp: *max_lp,
                springer_n: *springer_n,
                unitary_n: *unitary_n,
                max_mp: *max_mp,
                pieri_l: *pieri_l,
            };
            let reports: Vec<Report> = match suite.as_str() {
                "all" => verify_all(bounds),
                "extremal" => CorrCase::ALL
                    .iter()
                    .map(|&c| verify_extremal(c, bounds.max_l, bounds.max_lp))
                    .collect(),
                "membership" => CorrCase::ALL
                    .iter()
                    .map(|&c| verify_membership(c, bounds.max_l, bounds.max_lp))
                    .collect(),
                "natural-order" => CorrCase::ALL
                    .iter()
                    .map(|&c| verify_natural_extremes(c, bounds.max_l, bounds.max_lp))
                    .collect(),
                "monotonicity" => vec![verify_monotonicity(bounds.max_l, bounds.max_lp)],
                "springer" => vec![verify_springer(bounds.springer_n)],
                "unitary" => vec![verify_unitary(bounds.unitary_n)],
                "partition-level" => vec![verify_partition_level(bounds.max_mp)],
                "pieri" => vec![verify_pieri(bounds.pieri_l)],
                other => return Err(howe_weyl::Error::UnknownSuite(other.to_string())),
            };
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                ),
                Format::Text => {
                    for r in &reports {
                        let case = r
                            .params
                            .get("case")
                            .map(|c| format!(" [{c}]"))
                            .unwrap_or_default();
                        println!(
                            "{:<18}{:<7} total {:>5}  failed {:>3}",
                            r.suite, case, r.summary.total, r.summary.failed
                        );
                        for c in r.failures() {
                            println!("  FAIL {} {}: {}", c.name, c.instance, c.actual);
                        }
                    }
                }
            }
            let failed: usize = reports.iter().map(|r| r.summary.failed).sum();
            return Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_partition(format: Format, sub: &PartitionCommand) -> Result<(), howe_weyl::Error> {
    match sub {
        PartitionCommand::Order { a, b } => {
            let a: Partition = a.parse()?;
            let b: Partition = b.parse()?;
            let witness = common_predecessor_witness(&a, &b);
            let out = json!({
                "a": a,
                "b": b,
                "dominance_leq": dominance_leq(&a, &b),
                "dominance_geq": dominance_leq(&b, &a),
                "precedes": precedes(&a, &b),
                "preceded_by": precedes(&b, &a),
                "common_predecessor": witness,
            });
            emit(format, &out, || {
                format!(
                    "a <= b (dominance) {}\nb <= a (dominance) {}\na ⪯ b              {}\nb ⪯ a              {}\ncommon predecessor {}",
                    dominance_leq(&a, &b),
                    dominance_leq(&b, &a),
                    precedes(&a, &b),
                    precedes(&b, &a),
                    witness.map(|w| w.to_string()).unwrap_or_else(|| "none".into())
                )
            });
        }
        PartitionCommand::Enumerate { n } => {
            let all = enumerate_partitions(*n);
            let out = json!({"n": n, "count": all.len(), "partitions": all});
            emit(format, &out, || {
                all.iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        PartitionCommand::Union { x, mu } => {
            let mu: Partition = mu.parse()?;
            let result = union_part(*x, &mu);
            let out = json!({"x": x, "mu": mu, "union": result});
            emit(format, &out, || result.to_string());
        }
    }
    Ok(())
}
