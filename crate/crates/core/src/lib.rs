//! The INW pseudorandom generator built from small-bias spaces over GF(2^m),
//! with an exact density-matrix simulator for checking that it fools quantum
//! branching programs.
//!
//! - [`gf2m`]: arithmetic in GF(2^m), m = 2·3^i.
//! - [`epsbias`]: the powering small-bias space and its exhaustive audit.
//! - [`extractor`]: the XOR extractor Ext(x, (α, β)) = x ⊕ A(α, β).
//! - [`inw`]: parameters, recursive and streaming evaluation, cost model.
//! - [`qsim`]: density matrices, programs, coin averaging, measurement elimination.
//! - [`harness`]: fooling experiments and benchmarks.

pub mod bits;
pub mod epsbias;
pub mod error;
pub mod extractor;
pub mod gf2m;
pub mod harness;
pub mod inw;
pub mod qsim;

pub use bits::BitString;
pub use error::{Error, Result};
