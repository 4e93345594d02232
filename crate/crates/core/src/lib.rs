//! Fuzzy ideal calculus and regularity theory for finite ordered
//! Γ-semigroups.
//!
//! - [`structure`]: validated po-Γ-groupoids, subset products, `(H]`, `A_a`
//! - [`fuzzy`]: fuzzy subsets, sup-min composition, fuzzy ideal predicates
//! - [`battery`]: grid batteries used to quantify over fuzzy subsets
//! - [`ideal`]: crisp ideals, principal ideals, regularity deciders
//! - [`suite`]: executable checks for the fuzzy-ideal theorems
//! - [`enumerate`]: exhaustive generation of small po-Γ-semigroups
//! - [`format`]: JSON documents for structures, fuzzy subsets and reports
//! - [`cli`]: the `fuzzy-gamma` command-line frontend
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod battery;
pub mod cli;
pub mod enumerate;
pub mod fixtures;
pub mod format;
pub mod fuzzy;
pub mod ideal;
pub mod structure;
pub mod suite;

pub use battery::{enumerate_grid_battery, BatteryScope, GridBattery};
pub use enumerate::{
    canonical_form, census, enumerate_orders, enumerate_structures, enumerate_tables, Census,
    SearchSpec,
};
pub use fuzzy::{compose, FuzzySubset};
pub use ideal::{classify, ClassificationReport, RegularityClass};
pub use structure::{Factorizations, GammaStructure, Subset, ValidateOptions};
pub use suite::{check, check_all, find_counterexample, Claim, Outcome, TheoremId, TheoremVerdict};
