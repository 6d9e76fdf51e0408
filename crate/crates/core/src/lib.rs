//! Exact-arithmetic workbench for border rank of tensors.
//!
//! * [`algebra`]: rationals, Laurent polynomials in `t`, sparse exact
//!   matrices and limits of subspace families.
//! * [`tensor`]: order-3 tensors, the standard constructors and flattenings.
//! * [`koszul`]: Koszul flattenings and certified border-rank lower bounds.
//! * [`degeneration`]: border-rank algorithms as curves of rank-one tensors.
//! * [`schemes`]: limit ideals, lengths and Hilbert functions of collapsing
//!   point configurations.
//! * [`substitution`]: slices, slice elimination and factor projection.
//! * [`io`]: the JSON file formats.

pub mod algebra;
pub mod catalog;
pub mod degeneration;
pub mod error;
pub mod io;
pub mod koszul;
pub mod schemes;
pub mod substitution;
pub mod tensor;

pub use error::{Error, Result};
