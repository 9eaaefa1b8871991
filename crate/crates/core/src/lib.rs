//! Composition length of finite permutation and matrix groups, the
//! extremal group families that attain the sharp bounds, and exact
//! verification of those bounds.

pub mod actions;
pub mod bounds;
pub mod complen;
pub mod constructions;
pub mod error;
pub mod gf;
pub mod perm;

pub use error::{Error, Result};
pub use perm::{PermGroup, Permutation};
