//! Hom-spaces modulo maps factoring through injective modules.

use crate::error::Result;
use crate::exactla::{Field, Frame, Matrix, RowSpace};
use crate::modrep::envelope::injective_envelope;
use crate::modrep::hom::hom_basis;
use crate::modrep::{Module, ModuleHom};

/// `Hom(M, N)` modulo the maps factoring through an injective.
#[derive(Clone)]
pub struct StableHom<F> {
    pub source: Module<F>,
    pub target: Module<F>,
    /// Representatives of a basis of the stable Hom-space.
    pub reps: Vec<ModuleHom<F>>,
    /// Basis of the subspace of maps factoring through an injective.
    pub factoring: Vec<Matrix<F>>,
    frame: Option<Frame<F>>,
}

impl<F: Field> StableHom<F> {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of the class of `f` with respect to `reps`.
    pub fn coords(&self, f: &Matrix<F>) -> Vec<F> {
        match &self.frame {
            None => Vec::new(),
            Some(frame) => {
                let c = frame.coords(&f.flatten()).expect("map lies in the Hom-space");
                c[self.factoring.len()..].to_vec()
            }
        }
    }

    /// Whether `f` factors through an injective.
    pub fn is_zero_class(&self, f: &Matrix<F>) -> bool {
        self.coords(f).iter().all(|x| x.is_zero())
    }
}

/// Maps `M -> N` factoring through an injective are exactly those factoring through `M -> E(M)`.
pub fn factoring_subspace<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<Vec<Matrix<F>>> {
    let (e, iota) = injective_envelope(m)?;
    let mut space = RowSpace::new(m.dim() * n.dim());
    for g in hom_basis(&e, n)? {
        space.insert(&iota.matrix().matmul(g.matrix()).flatten());
    }
    let b = space.basis();
    Ok((0..b.rows()).map(|r| Matrix::new(m.dim(), n.dim(), b.row(r).to_vec())).collect())
}

pub fn stable_hom<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<StableHom<F>> {
    let factoring = factoring_subspace(m, n)?;
    let len = m.dim() * n.dim();
    let mut space = RowSpace::new(len);
    let mut stacked: Vec<Vec<F>> = Vec::new();
    for f in &factoring {
        space.insert(&f.flatten());
        stacked.push(f.flatten());
    }
    let mut reps = Vec::new();
    for h in hom_basis(m, n)? {
        if space.insert(&h.matrix().flatten()) {
            stacked.push(h.matrix().flatten());
            reps.push(h);
        }
    }
    let frame = if stacked.is_empty() { None } else { Frame::new(Matrix::from_rows(&stacked, len)) };
    Ok(StableHom { source: m.clone(), target: n.clone(), reps, factoring, frame })
}

pub fn factors_through_injective<F: Field>(f: &ModuleHom<F>) -> Result<bool> {
    let fac = factoring_subspace(f.source(), f.target())?;
    let space = RowSpace::from_matrix(&Matrix::from_rows(
        &fac.iter().map(|m| m.flatten()).collect::<Vec<_>>(),
        f.source().dim() * f.target().dim(),
    ));
    Ok(space.contains(&f.matrix().flatten()))
}

/// A stable inverse of `φ: A -> Z`, i.e. `ψ: Z -> A` with both composites equal to the
/// identity modulo maps factoring through injectives, or `None` if `φ` is not a stable
/// isomorphism.
pub fn stable_inverse<F: Field>(phi: &ModuleHom<F>) -> Result<Option<ModuleHom<F>>> {
    let a = phi.source();
    let z = phi.target();
    let hz = hom_basis(z, a)?;
    let fa = factoring_subspace(a, a)?;
    let fz = factoring_subspace(z, z)?;
    let (da, dz) = (a.dim(), z.dim());
    let rows_a = da * da;
    let unknowns = hz.len() + fa.len() + fz.len();
    if unknowns == 0 {
        return Ok((da == 0 && dz == 0).then(|| ModuleHom::zero(z, a)));
    }
    // columns: first the A-equation entries, then the Z-equation entries
    let mut sys = Matrix::zeros(unknowns, rows_a + dz * dz);
    for (k, h) in hz.iter().enumerate() {
        let x = phi.matrix().matmul(h.matrix()).flatten();
        let y = h.matrix().matmul(phi.matrix()).flatten();
        for (c, v) in x.into_iter().chain(y).enumerate() {
            sys[(k, c)] = v;
        }
    }
    for (k, g) in fa.iter().enumerate() {
        for (c, v) in g.flatten().into_iter().enumerate() {
            sys[(hz.len() + k, c)] = -v;
        }
    }
    for (k, g) in fz.iter().enumerate() {
        for (c, v) in g.flatten().into_iter().enumerate() {
            sys[(hz.len() + fa.len() + k, rows_a + c)] = -v;
        }
    }
    let rhs: Vec<F> = Matrix::<F>::identity(da).flatten().into_iter().chain(Matrix::<F>::identity(dz).flatten()).collect();
    let Some(sol) = sys.solve_left(&Matrix::row_vector(rhs))? else {
        return Ok(None);
    };
    let mut psi = Matrix::zeros(dz, da);
    for (k, h) in hz.iter().enumerate() {
        psi.add_scaled(&sol[(0, k)], h.matrix());
    }
    Ok(Some(ModuleHom::new_unchecked(z.clone(), a.clone(), psi)))
}
