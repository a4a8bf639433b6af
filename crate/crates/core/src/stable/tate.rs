//! Tate cohomology by independent routes, ordinary Ext and the comparison map.

use std::collections::BTreeMap;

use crate::complexes::{certified_window, tensor_complex, ChainComplex, HomComplex, HomWindow, Props};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::modrep::{stable_hom, Module};
use crate::resolutions::{
    canonical_map, complete_resolution, injective_resolution, projective_resolution, splice, Provider, Regime,
    Resolution,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    /// `H^n Hom(A, tB)`, the defining route.
    HomIntoComplete,
    /// Stable maps `A -> Z^n(tB)`.
    StableHom,
    /// `H^0 Hom(tA, Σ^n tB)` on a certified window.
    CompleteToComplete,
    /// `H^n Hom(A, B ⊗ tk)` over a cocommutative Hopf algebra.
    HopfTensor,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::HomIntoComplete => "route1",
            Route::StableHom => "route2",
            Route::CompleteToComplete => "route3",
            Route::HopfTensor => "hopf",
        }
    }

    /// Every route that applies in the provider's regime.
    pub fn all_for<F: Field>(provider: &Provider<F>) -> Vec<Route> {
        let mut out = vec![Route::HomIntoComplete, Route::StableHom];
        if provider.regime == Regime::SelfInjective {
            out.push(Route::CompleteToComplete);
            if provider.algebra.require_cocommutative_hopf().is_ok() {
                out.push(Route::HopfTensor);
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct TateGroup<F: Field> {
    pub source: Module<F>,
    pub target: Module<F>,
    pub degree: i64,
    pub dim: usize,
    /// Dimension found by each route that ran.
    pub routes: Vec<(Route, usize)>,
    /// Cocycle representatives `A -> (tB)^n` of a basis.
    pub basis: Vec<Matrix<F>>,
}

/// Shared resolutions for computing `Êxt^n(A, B)` in many degrees.
pub struct TateContext<F: Field> {
    a: Module<F>,
    b: Module<F>,
    routes: Vec<Route>,
    tb: Resolution<F>,
    ta: Option<Resolution<F>>,
    route1: HomComplex<F>,
    hopf: Option<HomComplex<F>>,
}

impl<F: Field> TateContext<F> {
    pub fn new(a: &Module<F>, b: &Module<F>, provider: &Provider<F>) -> Result<Self> {
        Self::with_routes(a, b, provider, &Route::all_for(provider))
    }

    pub fn with_routes(a: &Module<F>, b: &Module<F>, provider: &Provider<F>, routes: &[Route]) -> Result<Self> {
        provider.require_supported()?;
        crate::algebra::ensure_same(a.algebra(), b.algebra())?;
        crate::algebra::ensure_same(a.algebra(), &provider.algebra)?;
        let mut routes: Vec<Route> = routes.iter().copied().filter(|r| Route::all_for(provider).contains(r)).collect();
        if !routes.contains(&Route::HomIntoComplete) {
            routes.insert(0, Route::HomIntoComplete);
        }
        let tb = complete_resolution(b, provider)?;
        let route1 = HomComplex::new(&ChainComplex::concentrated(a, 0), &tb.complex, HomWindow::Auto)?;
        let ta = if routes.contains(&Route::CompleteToComplete) { Some(complete_resolution(a, provider)?) } else { None };
        let hopf = if routes.contains(&Route::HopfTensor) {
            let tk = splice(&Module::trivial(a.algebra().clone())?)?;
            let bt = tensor_complex(&ChainComplex::concentrated(b, 0), &tk.complex)?;
            Some(HomComplex::new(&ChainComplex::concentrated(a, 0), &bt, HomWindow::Auto)?)
        } else {
            None
        };
        Ok(TateContext { a: a.clone(), b: b.clone(), routes, tb, ta, route1, hopf })
    }

    pub fn target_resolution(&self) -> &Resolution<F> {
        &self.tb
    }

    pub fn route_dim(&self, route: Route, n: i64) -> Result<usize> {
        match route {
            Route::HomIntoComplete => self.route1.cohomology_dim(n),
            Route::StableHom => {
                let (z, _) = self.tb.complex.cocycles(n)?;
                Ok(stable_hom(&self.a, &z)?.dim())
            }
            Route::CompleteToComplete => {
                let ta = self.ta.as_ref().ok_or_else(|| Error::InvalidComplex("route 3 not enabled".into()))?;
                let shifted = self.tb.complex.shift(n);
                let w = certified_window(&ta.complex, &shifted)?
                    .ok_or_else(|| Error::WindowExhausted("no certified window for Hom(tA, Σ^n tB)".into()))?;
                HomComplex::new(&ta.complex, &shifted, w)?.cohomology_dim(0)
            }
            Route::HopfTensor => {
                let h = self.hopf.as_ref().ok_or_else(|| Error::InvalidComplex("Hopf route not enabled".into()))?;
                h.cohomology_dim(n)
            }
        }
    }

    pub fn group(&self, n: i64) -> Result<TateGroup<F>> {
        let h = self.route1.cohomology(n)?;
        let basis = h
            .reps
            .iter()
            .map(|v| Ok(self.route1.to_maps(n, v)?.remove(&0).unwrap_or_else(|| Matrix::zeros(self.a.dim(), 0))))
            .collect::<Result<Vec<_>>>()?;
        let dim = h.dim();
        let mut routes = vec![(Route::HomIntoComplete, dim)];
        for &r in self.routes.iter().filter(|r| **r != Route::HomIntoComplete) {
            routes.push((r, self.route_dim(r, n)?));
        }
        if let Some((r, d)) = routes.iter().find(|(_, d)| *d != dim) {
            return Err(Error::InternalConsistency(format!(
                "Tate cohomology routes disagree in degree {n}: route1 = {dim}, {} = {d}",
                r.name()
            )));
        }
        Ok(TateGroup { source: self.a.clone(), target: self.b.clone(), degree: n, dim, routes, basis })
    }
}

pub fn tate_cohomology<F: Field>(a: &Module<F>, b: &Module<F>, n: i64, provider: &Provider<F>) -> Result<TateGroup<F>> {
    TateContext::new(a, b, provider)?.group(n)
}

/// `dim Ext^n(A, B)` through the injective resolution of `B`, checked against the projective
/// resolution of `A`.
pub fn ext_group<F: Field>(a: &Module<F>, b: &Module<F>, n: i64) -> Result<usize> {
    if n < 0 {
        return Ok(0);
    }
    let ib = injective_resolution(b)?;
    let pa = projective_resolution(a)?;
    let inj = HomComplex::new(&ChainComplex::concentrated(a, 0), &ib.complex, HomWindow::Auto)?.cohomology_dim(n)?;
    let proj = HomComplex::new(&pa.complex, &ChainComplex::concentrated(b, 0), HomWindow::Auto)?.cohomology_dim(n)?;
    if inj != proj {
        return Err(Error::InternalConsistency(format!("Ext^{n}: injective route {inj}, projective route {proj}")));
    }
    Ok(inj)
}

/// Matrix of `Ext^n(A, B) -> Êxt^n(A, B)` induced by `iB -> tB`, with respect to the
/// cohomology bases of the two Hom complexes (rows: Ext, columns: Tate).
pub fn comparison_map<F: Field>(a: &Module<F>, b: &Module<F>, n: i64, provider: &Provider<F>) -> Result<Matrix<F>> {
    provider.require_supported()?;
    if n < 0 {
        return Err(Error::DegreeUnavailable(n));
    }
    let ib = injective_resolution(b)?;
    let tb = complete_resolution(b, provider)?;
    let c = canonical_map(&ib, &tb)?.component(n)?;
    let a0 = ChainComplex::concentrated(a, 0);
    let src = HomComplex::new(&a0, &ib.complex, HomWindow::Auto)?;
    let tgt = HomComplex::new(&a0, &tb.complex, HomWindow::Auto)?;
    let (hs, ht) = (src.cohomology(n)?, tgt.cohomology(n)?);
    let mut rows = Vec::new();
    for v in &hs.reps {
        let f = src.to_maps(n, v)?.remove(&0).unwrap_or_else(|| Matrix::zeros(a.dim(), 0));
        let g = BTreeMap::from([(0, f.matmul(&c))]);
        let w = tgt.from_maps(n, &g)?;
        let class = ht
            .class_of(&w)
            .ok_or_else(|| Error::InternalConsistency("image of a cocycle is not a cocycle".into()))?;
        rows.push(class);
    }
    Ok(Matrix::from_rows(&rows, ht.dim()))
}

/// Properties of an acyclic complex of injectives with the given support.
pub(crate) fn acyclic_injective(support: (Option<i64>, Option<i64>)) -> Props {
    Props { support, injective_terms: true, cohomology: Some((1, 0)) }
}
