//! Exact counting of independent traces and supertraces on symplectic
//! reflection algebras of wreath-product type.
//!
//! For every finite subgroup Γ of Sp(2, C) — cyclic, binary dihedral,
//! binary tetrahedral/octahedral/icosahedral — the conjugacy classes of
//! Γ≀S_N are marked partitions: partitions of N whose parts carry a
//! conjugacy class of Γ. The number of trace functionals T and supertrace
//! functionals S on the associated algebra equals the number of these
//! classes whose characteristic polynomial is nonzero at +1 resp. −1.
//!
//! The crate computes T and S by three independent routes and
//! cross-validates them:
//!
//! * [`census`] — direct enumeration/counting of marked partitions with
//!   exact admissibility predicates;
//! * [`series`] — coefficient extraction from Euler-product generating
//!   functions with big-integer arithmetic;
//! * [`oracle`] — element-level brute force over Γ≀S_N for tiny N, testing
//!   eigenvalues ±1 on explicit numeric matrices.
//!
//! See the `examples/` directory for runnable walkthroughs of each layer,
//! and the `wreath-traces` binary for the command-line interface.

pub mod census;
pub mod cli;
pub mod error;
pub mod exact;
pub mod gamma;
pub mod oracle;
pub mod series;

pub use census::{census_counts, CensusResult, MarkedPartition};
pub use error::{Error, Result};
pub use gamma::{class_table, table_for, GammaClassTable, GammaSpec};
pub use series::{class_series, supertrace_series, trace_series, TruncatedSeries};
