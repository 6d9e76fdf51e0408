//! Exact scalar and linear algebra kernels shared by every other module.

pub mod laurent;
pub mod limit;
pub mod matrix;
pub mod rat;
pub mod ratfunc;

pub use laurent::{t_content_normalize, LaurentPoly, LaurentVec};
pub use limit::{limit_subspace, limit_subspace_detailed, LimitSubspace, SubspaceFamily};
pub use matrix::{in_span, rank_of_vectors, RatMatrix};
pub use rat::{frac, parse_rat, rat, Rat};
