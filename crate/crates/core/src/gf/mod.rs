//! Matrix groups over finite fields of order at most 256.

mod field;
mod group;
mod mat;
mod meataxe;
mod subspace;

pub use field::Field;
pub use group::{build_l, gl1_power, l_order, MatGroup};
pub use mat::Mat;
pub use meataxe::{
    irreducible_constituents, is_irreducible, is_irreducible_with_budget, Constituent, Irreducibility, DEFAULT_BUDGET,
};
pub use subspace::{left_nullspace, spin, Subspace};
