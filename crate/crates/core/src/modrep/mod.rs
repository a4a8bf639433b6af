//! Right modules as matrix representations and the module-level homological operations.

mod envelope;
pub(crate) mod hom;
mod module;
mod stable;

pub use envelope::{
    coinduced, cosyzygy, cosyzygy_n, essential_closure, injective_envelope, is_injective, is_projective,
    is_self_injective, projective_cover, syzygy, syzygy_n,
};
pub use hom::{find_hom, hom_basis, hom_dim, solve_hom, HomConstraints, HomSolution};
pub use module::{Module, ModuleHom, ShortExactSequence};
pub use stable::{factoring_subspace, factors_through_injective, stable_hom, stable_inverse, StableHom};
