//! Subfactor invariants of finite group-subgroup inclusions.

pub mod algebra;
pub mod aut;
pub mod character;
pub mod cocycle;
pub mod config;
pub mod corpus;
pub mod error;
pub mod extension;
pub mod group;
pub mod index;
pub mod induced;
pub mod linalg;
pub mod perm;
pub mod subfactor;
pub mod verify;
pub mod wreath;

pub use algebra::{AlgebraMatrix, GroupAlgebraElement};
pub use config::Config;
pub use error::{Error, Result};
pub use group::{CosetData, DoubleCosetData, GroupAction, GroupHomomorphism, GroupSpec, PermGroup};
pub use num_complex::Complex64;
pub use perm::Permutation;
