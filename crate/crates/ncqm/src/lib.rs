//! Arithmetic, representation theory and operator calculus for the group G_NC,
//! the triple central extension of the translation group of ℝ⁴ underlying
//! two-dimensional noncommutative quantum mechanics.

pub mod algebra;
pub mod cli;
pub mod coadjoint;
pub mod error;
pub mod gauge;
pub mod group;
pub mod hermite;
pub mod matrix;
pub mod scalar;
pub mod uir;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
