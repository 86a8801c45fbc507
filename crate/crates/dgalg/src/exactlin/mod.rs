//! Exact field arithmetic and linear algebra: scalars, dense matrices,
//! canonical subspaces and quotient maps. Everything downstream reduces to
//! this module.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so independent calls may run in parallel.

mod mat;
mod scalar;
mod subspace;

pub use mat::{Mat, RowReducer, SpanSolver};
pub use scalar::{FieldError, FieldSpec, Scalar};
pub use subspace::{quotient_map, subspace_ops, Subspace, SubspaceError, SubspaceOps};
