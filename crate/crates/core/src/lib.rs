//! Exact branching multiplicities for the classical pairs
//! `GL(m) ⊂ GL(n)`, `Sp(2m) ⊂ Sp(2n)` and `SO(q) ⊂ SO(p)`.
//!
//! Multiplicities are evaluated as determinants of binomial-coefficient
//! matrices over exact rationals ([`branching`], [`detkit`]) and can be
//! cross-checked against an independent weight-multiplicity oracle
//! ([`oracle`]).
//!
//! ```
//! use branchkit::{branching, BranchPair, DominantWeight};
//!
//! let pair: BranchPair = "Sp:6/Sp:2".parse().unwrap();
//! let lambda = DominantWeight::new(&pair.big(), vec![2, 1, 0]).unwrap();
//! let table = branching::decompose(&pair, &lambda).unwrap();
//! assert_eq!(table.get(&[0]), 20u32.into());
//! ```

pub mod branching;
pub mod cli;
pub mod combinatorics;
pub mod detkit;
pub mod error;
pub mod groups;
pub mod oracle;
pub mod rational;
pub mod weyl;

pub use error::{Error, Result};
pub use groups::{BranchPair, ClassicalGroup, DominantWeight, Family};
pub use rational::{ExactRational, HalfInteger};
