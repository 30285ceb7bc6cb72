//! Exact computations with Nichols algebras of braided vector spaces built
//! from racks and cocycles.
//!
//! Scalars live in cyclotomic fields `Q(ζ_N)` ([`scalar`]); every dimension
//! is the rank of an exact sparse matrix ([`linalg`]). The layers are:
//!
//! - [`rack`] and [`cocycle`]: racks, group tables, rack and group 2-cocycles, twisting;
//! - [`braid`]: braidings, braid-group representations, quantum symmetrizers;
//! - [`tensor`]: free graded algebras, ideal components, the braided shuffle product;
//! - [`approx`]: Nichols dimensions, covers, truncation and extension;
//! - [`twist`]: intertwiners between twist-equivalent cocycles;
//! - [`cli`]: the job runner behind the `nichols` binary.

pub mod approx;
pub mod braid;
pub mod cli;
pub mod cocycle;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod rack;
pub mod scalar;
pub mod tensor;
pub mod twist;

pub use approx::{
    approximation_dims, cover_check, cover_dims, extension_dims, nichols_dims, truncate_graded_algebra, AlgebraTag,
    CoverReport, CoverVerdict, HilbertPrefix, TruncatedBialgebra,
};
pub use braid::{
    braid_rep_apply, braiding_diagonal, braiding_from_rack, check_yang_baxter, matsumoto_word, quantum_symmetrizer,
    BraidWord, Braiding, Budget, Options, Permutation, YangBaxterVerdict,
};
pub use cocycle::{coboundary, twist_rack_cocycle, validate_group_cocycle, validate_rack_cocycle, GroupCocycle, RackCocycle};
pub use error::{Error, Result};
pub use linalg::{SparseMatrix, SparseVector};
pub use rack::{conjugation_rack, symmetric_group, validate_rack, GroupTable, Rack};
pub use scalar::ExactScalar;
pub use twist::{intertwiner_matrix, twist_invariance_check, verify_intertwining, Intertwiner};
