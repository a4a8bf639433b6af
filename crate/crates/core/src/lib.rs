//! Exact computations in the stable derived category of a finite-dimensional algebra:
//! minimal and complete resolutions, Tate cohomology, stable Hom-spaces, Gorenstein
//! approximations and homotopically minimal complexes.
//!
//! Everything is generic over the scalar [`Field`]; the aliases below fix the common choices.

pub mod algebra;
pub mod complexes;
pub mod corpus;
pub mod error;
pub mod exactla;
pub mod io;
pub mod modrep;
pub mod resolutions;
pub mod stable;

pub use algebra::{Algebra, AlgebraSpec, HopfDatum};
pub use error::{Error, Result};
pub use exactla::{Field, Fp, Matrix, Rational};
pub use modrep::{Module, ModuleHom};

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type Q = Rational;
