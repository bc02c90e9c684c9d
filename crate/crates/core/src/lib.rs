//! Linear and cyclic restricted sumsets over prime fields and integer
//! lattices, the polynomial-method coefficients behind their lower bounds, and
//! exhaustive verification of those bounds on small instances.
//!
//! For finite sets `A_1, ..., A_n` of an additive group,
//!
//! * `L(A_1, ..., A_n)` collects `a_1 + ... + a_n` with `a_i != a_{i+1}`, and
//! * `C(A_1, ..., A_n)` additionally requires `a_n != a_1`.
//!
//! The crate is split into [`domain`] (carriers and their order), [`engine`]
//! (sumset computation), [`poly`] (exact polynomial arithmetic, coefficient
//! extraction and the falling-factorial transform) and [`bounds`] (bound
//! formulas, theorem checks and sweeps).

pub mod bounds;
pub mod domain;
pub mod engine;
pub mod error;
pub mod poly;

pub use error::{Error, Result};
