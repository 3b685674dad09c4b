//! Exact evaluation of the Links-Gould link invariants `LG^m = LG^{m,1}`
//! (`m = 1..4`) for links presented as braid words.
//!
//! The pipeline: build the state model for `m`, apply one sparse crossing
//! operator per braid letter to a frontier operator on the strand space,
//! close every strand but one with handle weights, extract the scalar the
//! resulting map is a multiple of the identity by, and convert it to a
//! Laurent polynomial in `q` and `p`. All arithmetic is exact.

pub mod braid;
pub mod golden;
pub mod invariant;
pub mod ring;
pub mod statemodel;
pub mod tensor;
pub mod verify;

pub use braid::{BraidError, BraidWord, LinkEntry, LinkTable};
pub use invariant::{compute, compute_with_model, InvariantResult, Symmetry};
pub use ring::{LiTerm, Monomial, RingCtx, RingElem, RingError};
pub use statemodel::{compute_scalings, hrho_exponents, ModelError, StateModel};
pub use tensor::{SparseOperator, TensorError};
pub use verify::CheckReport;
