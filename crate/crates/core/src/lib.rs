//! Exact lattice, weight and intersection computations for Wahl degenerations.

#![allow(clippy::needless_range_loop)]

pub mod ade;
pub mod error;
pub mod flopsim;
pub mod linalg;
pub mod localint;
pub mod modulidim;
pub mod oracle;
pub mod pic;
pub mod qsing;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Q;
