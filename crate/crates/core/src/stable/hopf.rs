//! Resolutions by tensoring with the resolutions of the trivial module over a cocommutative
//! Hopf algebra: `A ⊗ ik` is an injective resolution and `A ⊗ tk` a complete resolution.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::complexes::{induced_on_cocycles, minimal_decomposition, tensor_complex, ChainComplex, Props};
use crate::error::Result;
use crate::exactla::{Field, Matrix};
use crate::modrep::{is_injective, stable_inverse, Module, ModuleHom};
use crate::resolutions::{
    injective_resolution, lift_map, projective_resolution, splice, Resolution, ResolutionKind,
};
use crate::stable::report::Report;

pub struct UnitResolutions<F: Field> {
    pub ik: Resolution<F>,
    pub pk: Resolution<F>,
    pub tk: Resolution<F>,
}

pub fn tensor_unit_resolutions<F: Field>(a: &Arc<Algebra<F>>) -> Result<UnitResolutions<F>> {
    a.require_cocommutative_hopf()?;
    let k = Module::trivial(a.clone())?;
    Ok(UnitResolutions { ik: injective_resolution(&k)?, pk: projective_resolution(&k)?, tk: splice(&k)? })
}

fn tensor_resolution<F: Field>(m: &Module<F>, r: &Resolution<F>, props: Props) -> Result<Resolution<F>> {
    let complex = tensor_complex(&ChainComplex::concentrated(m, 0), &r.complex)?.with_props(props);
    let aug = Matrix::identity(m.dim()).kron(r.augmentation.matrix());
    let augmentation = ModuleHom::new(m.clone(), complex.term(0)?, aug)?;
    Ok(Resolution { kind: r.kind, of: m.clone(), complex, augmentation })
}

/// `A ⊗ ik`, an injective resolution of `A`.
pub fn injective_via_hopf<F: Field>(m: &Module<F>, units: &UnitResolutions<F>) -> Result<Resolution<F>> {
    let props = Props { support: (Some(0), None), injective_terms: true, cohomology: Some((0, 0)) };
    tensor_resolution(m, &units.ik, props)
}

/// `A ⊗ tk`, a complete resolution of `A`.
pub fn stabilize_hopf<F: Field>(m: &Module<F>, units: &UnitResolutions<F>) -> Result<Resolution<F>> {
    debug_assert_eq!(units.tk.kind, ResolutionKind::Complete);
    tensor_resolution(m, &units.tk, crate::stable::tate::acyclic_injective((None, None)))
}

/// Verifies the tensor resolutions of `A` on degrees `[lo, hi]` (`lo < 0 < hi`).
pub fn hopf_report<F: Field>(m: &Module<F>, units: &UnitResolutions<F>, window: (i64, i64)) -> Result<Report> {
    let (lo, hi) = window;
    let mut r = Report::new("hopf", window);
    let ia = injective_via_hopf(m, units)?;
    let x = &ia.complex;
    let mut inj = true;
    for n in 0..=hi {
        inj &= is_injective(&x.term(n)?)?;
    }
    r.check("tensor_ik.injective_terms", inj);
    let (z0, inc) = x.cocycles(0)?;
    let aug_onto = z0.dim() == m.dim() && ia.augmentation.is_injective() && {
        let sp = crate::exactla::RowSpace::from_matrix(inc.matrix());
        (0..m.dim()).all(|i| sp.contains(ia.augmentation.matrix().row(i)))
    };
    r.check("tensor_ik.augmented", aug_onto);
    r.check("tensor_ik.acyclic_above_0", x.is_acyclic(1, hi)?);
    // minimal up to contractible summands: the minimal part matches the minimal resolution
    let dec = minimal_decomposition(&x.window(0, hi + 1)?, 0, hi + 1)?;
    let minimal = dec.minimal.dims(0, hi)?;
    let oracle = injective_resolution(m)?.complex.dims(0, hi)?;
    r.dim("tensor_ik.dims", x.dims(0, hi)?);
    r.dim("tensor_ik.minimal_dims", minimal.clone());
    r.check("tensor_ik.minimal_or_contractible", minimal == oracle);

    let ta = stabilize_hopf(m, units)?;
    let t = &ta.complex;
    let dims = t.dims(lo, hi)?;
    let want: Vec<usize> = units.tk.complex.dims(lo, hi)?.iter().map(|d| d * m.dim()).collect();
    r.check("tensor_tk.dims", dims == want);
    r.dim("tensor_tk.dims", dims);
    r.check("tensor_tk.acyclic", t.is_acyclic(lo, hi)?);

    // Z^0(A ⊗ tk) against TA = Z^0(tA) through the lift of the identity
    let sa = splice(m)?;
    let phi = lift_map(&ModuleHom::identity(m), &sa, &ta)?;
    let z = induced_on_cocycles(&phi, 0)?;
    r.dim("TA", z.source().dim());
    r.dim("Z0(A⊗tk)", z.target().dim());
    r.check("stable_iso_with_replacement", stable_inverse(&z)?.is_some());
    Ok(r)
}
