//! Cochain complexes of modules: lazy unbounded complexes, chain maps, cones, Hom and tensor
//! complexes, null-homotopy certificates and minimal decompositions.

mod complex;
mod hom_complex;
mod map;
mod minimal;
mod tensor;

pub use complex::{ChainComplex, ComplexSource, Props};
pub use hom_complex::{
    are_homotopic, certified_window, is_null_homotopic, is_totally_acyclic, Cohomology, HomComplex, HomWindow,
    NullHomotopy,
};
pub use map::{cone, cylinder, cylinder_maps, induced_on_cocycles, ChainMap, CylinderMaps, Homotopy, MapSource};
pub use minimal::{comparison, is_minimal, minimal_decomposition, minimal_decomposition_random, MinimalDecomposition};
pub use tensor::{internal_hom_complex, internal_hom_modules, tensor_complex, tensor_modules, unit_module};
