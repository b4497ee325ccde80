//! Verification kernel for finite strict 2-groups and their actions.
//!
//! Everything here is table-driven and exact: groups are multiplication
//! tables, categories are explicit arrow lists with composition tables, and
//! every axiom is checked exhaustively rather than sampled.  The crate builds
//! the full tower — 2-groups, sub-2-group lattices, coset categories, the
//! orbit 2-category with its atomic topology, category-valued presheaves and
//! the 2-sheaf condition, and the filtered-colimit reconstruction — and
//! machine-checks that the sheaf side and the action side agree on instances
//! small enough to enumerate.
//!
//! The [`classical`] module runs the corresponding 1-dimensional
//! orbit-category pipeline for ordinary finite groups, which serves as an
//! independent oracle for the degenerate (discrete) case.

pub mod action;
pub mod bounds;
pub mod catkit;
pub mod check;
pub mod classical;
pub mod equivalence;
pub mod error;
pub mod fixtures;
pub mod grp;
pub mod orbit;
pub mod sheaf;
pub mod twogroup;

pub use bounds::Bounds;
pub use error::{Error, Result};
