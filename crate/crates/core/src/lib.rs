//! Exact octonion algebra and the octonionic maps into `Spin(7) ⊂ SO(8)`.
//!
//! Everything is generic over a [`Scalar`] backend: [`Rational`] for exact
//! arithmetic, `f64` for tolerance-based checks. Angles never appear as real
//! numbers; maps parameterized by an angle take a [`CirclePoint`] instead.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod circle;
pub mod degree;
mod error;
pub mod geometry;
mod linalg;
pub mod octonion;
pub mod sampling;
pub mod scalar;
pub mod spinmaps;

pub use circle::CirclePoint;
pub use error::Error;
pub use geometry::{Matrix8, OrientedPlane, Subspace};
pub use octonion::{Octonion, Vector8};
pub use scalar::{Rational, Scalar, Tolerance};

pub type Result<T, E = Error> = core::result::Result<T, E>;
