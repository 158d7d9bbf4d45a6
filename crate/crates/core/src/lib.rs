//! Combinatorics of the Howe correspondence between unipotent
//! Harish-Chandra series of finite classical groups, at the level of type-B
//! Weyl group characters.
//!
//! What lives where:
//!
//! - [`partition`]: partitions, prefix-sum dominance, the box-adding order
//!   `⪯`, and common predecessors.
//! - [`bipartition`]: type-B character labels, the Achar-Henderson natural
//!   order, character dimensions.
//! - [`weyl`]: Pieri expansions, the four `Ω_{l,l'}` decompositions, Θ-sets
//!   by brute force and by closed membership criteria.
//! - [`springer`]: u-symbols, distinguished representatives, the surjection
//!   onto symplectic partitions, and its dominance preorder.
//! - [`beta`]: β-numbers, 2-cores/2-quotients, the core-and-quotient
//!   inverse `μ_k`, the sign `ε_μ`.
//! - [`extremal`]: closed-form minimal/maximal elements of each Θ-set.
//! - [`pair`]: Witt-tower bookkeeping from group ranks to case tags and
//!   Weyl ranks.
//! - [`verify`]: exhaustive desk-scale certification sweeps with
//!   machine-readable reports.
//!
//! With the default `parallel` feature the sweep drivers fan out over
//! rayon; disabling it leaves behaviourally identical sequential code.

pub mod beta;
pub mod bipartition;
mod error;
mod exec;
pub mod extremal;
pub mod pair;
pub mod partition;
pub mod springer;
pub mod verify;
pub mod weyl;

pub use bipartition::Bipartition;
pub use error::{Error, Result};
pub use partition::Partition;
pub use weyl::CorrCase;
