//! Numerical engine for isometric actions of compact Lie groups on products
//! of compact symmetric spaces.
//!
//! Everything is computed at the Lie algebra level with real matrices:
//! complex and quaternionic algebras are realified, and all rank decisions
//! go through a Jacobi SVD governed by a [`Tolerance`](liealg::Tolerance).
#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod actions;
pub mod analyze;
pub mod catalog;
pub mod error;
pub mod liealg;
pub mod spaces;

pub use error::{Error, Result};
