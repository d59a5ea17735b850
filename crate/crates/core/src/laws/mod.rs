//! The trace identities as checks, generators for each category, and a
//! seeded or exhaustive runner.

pub mod checks;
pub mod instances;
pub mod suite;

pub use checks::*;
pub use instances::{
    ChainInstance, CobInstance, CorruptedChain, DiagonalCase, Instance, MatInstance, RelInstance,
    SupInstance,
};
pub use suite::{
    coverage_manifest, run_suite, Law, LawResult, Report, SuiteConfig, EXHAUSTIVE_CAP, INSTANCES,
};
