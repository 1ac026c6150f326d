//! Canonical basic sets for Ariki–Koike algebras: multipartitions, shifted
//! symbols, multicharges, crystal graphs and the regular/asymptotic/singular
//! classification of weight sequences.

pub mod dominance;
pub mod error;
pub mod classify;
pub mod crystal;
pub mod exec;
pub mod multicharge;
pub mod multipartition;
pub mod perm;
pub mod symbol;
pub mod verify;

#[cfg(test)]
mod proptests;

pub type Rational = num_rational::Rational64;

pub use dominance::{dominance_compare, Dominance};
pub use error::{Error, Result};
pub use exec::Exec;
pub use multicharge::{Multicharge, Perturbation};
pub use multipartition::{Multipartition, Node, Partition};
pub use perm::Perm;
pub use symbol::{ShiftedSymbol, WeightSequence};
