//! Exact invariants of Brieskorn contact manifolds with periodic Reeb flow:
//! the Maslov index of the Reeb loop, Morse-Bott orbit strata with their
//! Robbin-Salamon indices, graded generator tables of the chain complex,
//! Laurent-module analysis of the resulting homology, and Hilbert-function
//! cross-checks against finitely presented GF(2)-algebras.
//!
//! Everything is exact integer/rational arithmetic; no floating point.
//! All values are immutable after construction and safe to share across
//! threads.

pub mod algebra;
pub mod data;
pub mod error;
pub mod grading;
pub mod module;
pub mod report;
pub mod strata;
pub mod tuple;

pub use error::{Error, Result};
pub use grading::{
    breaking_excluded, check_index_positivity, generator_table, s_class, virtual_dimension,
    Action, Generator, GeneratorTable, IndexClass, IndexReport, TheoremCase,
};
pub use module::{
    detect_vanishing_differential, detector_required_max_l, homology_table, period_module,
    DifferentialStatus, HomologyTable, ModuleMode, PeriodicGradedDims, Vanishing,
};
pub use strata::{
    active_set, enumerate_strata, robbin_salamon_index, BettiResolver, BettiSource, BettiTable,
    Stratum, StrataSet,
};
pub use tuple::{ExponentTuple, ShiftClass};
