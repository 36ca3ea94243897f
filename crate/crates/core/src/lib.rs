//! Decision procedures for finite preference domains and exhaustive
//! verification of social choice functions on them.
//!
//! * [`orders`]: linear orders and the single-swap adjacency relation.
//! * [`domains`]: connectedness, top-connected closures, the two distinct
//!   neighbours condition, no-restoration properties and disagreement.
//! * [`graph`]: the graph on alternatives induced by top swaps.
//! * [`scf`]: social choice functions as dense tables, axiom checkers and
//!   the explicit non-dictatorial constructions.
//! * [`search`]: an arc-consistency backtracking engine that finds a rule
//!   meeting an axiom bundle or proves that none exists.
//! * [`format`]: the domain and SCF text formats.
//! * [`witness`]: self-contained, replayable certificates.
#![forbid(unsafe_code)]

pub mod domains;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod orders;
pub mod scf;
pub mod search;
mod verdict;
pub mod witness;

pub use domains::{Domain, DomainVerdict, DomainWitness, PrefIdx, PrefPath};
pub use error::{Error, Result};
pub use orders::{Alt, AlternativeSet, LinearOrder};
pub use scf::{Profile, ScfTable};
pub use verdict::Verdict;
