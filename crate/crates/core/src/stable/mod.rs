//! Tate cohomology, the Tate ring, Gorenstein injective approximations and their checks.

mod approx;
mod hopf;
mod les;
mod report;
mod ring;
mod tate;

pub use approx::{
    approximation, gorenstein_replacement, vanishing_report, xclass_member, yclass_member, ApproximationPair,
    Replacement,
};
pub use hopf::{hopf_report, injective_via_hopf, stabilize_hopf, tensor_unit_resolutions, UnitResolutions};
pub use les::{connecting_ranks, les_check, LesCheck, LongSequence};
pub use report::{Check, Report};
pub use ring::{tate_ring, GradedRing};
pub use tate::{comparison_map, ext_group, tate_cohomology, Route, TateContext, TateGroup};
