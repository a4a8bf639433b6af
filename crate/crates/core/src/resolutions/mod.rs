//! Minimal injective and projective resolutions, complete resolutions and chain-map lifting.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::algebra::Algebra;
use crate::complexes::{
    minimal_decomposition, ChainComplex, ChainMap, ComplexSource, MapSource, MinimalDecomposition, Props,
};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::modrep::{
    injective_envelope, is_self_injective, projective_cover, solve_hom, syzygy, HomConstraints, Module, ModuleHom,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionKind {
    Injective,
    Projective,
    Complete,
}

/// A resolution of a module as a lazily extended complex.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    pub kind: ResolutionKind,
    pub of: Module<F>,
    pub complex: ChainComplex<F>,
    /// `M -> X^0` for injective and complete kinds (the latter onto `Z^0`), `X^0 -> M` for projective.
    pub augmentation: ModuleHom<F>,
}

struct InjState<F> {
    terms: Vec<Module<F>>,
    diffs: Vec<Matrix<F>>,
    /// Map into the last term (the augmentation, then the last differential).
    incoming: ModuleHom<F>,
}

struct InjectiveExtender<F> {
    state: Mutex<InjState<F>>,
}

impl<F: Field> InjectiveExtender<F> {
    fn ensure(&self, n: usize) -> Result<()> {
        let mut st = self.state.lock().expect("resolution state");
        while st.terms.len() <= n {
            let (c, pi) = st.incoming.cokernel();
            let (e, iota) = injective_envelope(&c)?;
            let last = st.terms.last().expect("degree 0 present").clone();
            let d = pi.matrix().matmul(iota.matrix());
            st.incoming = ModuleHom::new_unchecked(last, e.clone(), d.clone());
            st.terms.push(e);
            st.diffs.push(d);
        }
        Ok(())
    }
}

impl<F: Field> ComplexSource<F> for InjectiveExtender<F> {
    fn term(&self, n: i64) -> Result<Module<F>> {
        self.ensure(n as usize)?;
        Ok(self.state.lock().expect("resolution state").terms[n as usize].clone())
    }

    fn diff(&self, n: i64) -> Result<Matrix<F>> {
        self.ensure(n as usize + 1)?;
        Ok(self.state.lock().expect("resolution state").diffs[n as usize].clone())
    }
}

/// Minimal injective resolution `M -> I^0 -> I^1 -> ...`, computed on demand.
pub fn injective_resolution<F: Field>(m: &Module<F>) -> Result<Resolution<F>> {
    let (e, iota) = injective_envelope(m)?;
    let ext = InjectiveExtender {
        state: Mutex::new(InjState { terms: vec![e], diffs: Vec::new(), incoming: iota.clone() }),
    };
    let props = Props { support: (Some(0), None), injective_terms: true, cohomology: Some((0, 0)) };
    let complex = ChainComplex::from_source(m.algebra().clone(), Arc::new(ext), props);
    Ok(Resolution { kind: ResolutionKind::Injective, of: m.clone(), complex, augmentation: iota })
}

struct ProjState<F> {
    terms: Vec<Module<F>>,
    /// `diffs[k]: P^{-k-1} -> P^{-k}`.
    diffs: Vec<Matrix<F>>,
    /// Map out of the last term (the augmentation, then the last differential).
    outgoing: ModuleHom<F>,
}

struct ProjectiveExtender<F> {
    state: Mutex<ProjState<F>>,
}

impl<F: Field> ProjectiveExtender<F> {
    fn ensure(&self, k: usize) -> Result<()> {
        let mut st = self.state.lock().expect("resolution state");
        while st.terms.len() <= k {
            let (kmod, inc) = st.outgoing.kernel();
            let (p, pi) = projective_cover(&kmod)?;
            let last = st.terms.last().expect("degree 0 present").clone();
            let d = pi.matrix().matmul(inc.matrix());
            st.outgoing = ModuleHom::new_unchecked(p.clone(), last, d.clone());
            st.terms.push(p);
            st.diffs.push(d);
        }
        Ok(())
    }
}

impl<F: Field> ComplexSource<F> for ProjectiveExtender<F> {
    fn term(&self, n: i64) -> Result<Module<F>> {
        let k = (-n) as usize;
        self.ensure(k)?;
        Ok(self.state.lock().expect("resolution state").terms[k].clone())
    }

    fn diff(&self, n: i64) -> Result<Matrix<F>> {
        // d^n: P^n -> P^{n+1} with n <= -1
        let k = (-n - 1) as usize;
        self.ensure(k + 1)?;
        Ok(self.state.lock().expect("resolution state").diffs[k].clone())
    }
}

/// Minimal projective resolution `... -> P^{-1} -> P^0 -> M`, computed on demand.
pub fn projective_resolution<F: Field>(m: &Module<F>) -> Result<Resolution<F>> {
    let (p, pi) = projective_cover(m)?;
    let ext = ProjectiveExtender {
        state: Mutex::new(ProjState { terms: vec![p], diffs: Vec::new(), outgoing: pi.clone() }),
    };
    let injective_terms = is_self_injective(m.algebra())?;
    let props = Props { support: (None, Some(0)), injective_terms, cohomology: Some((0, 0)) };
    let complex = ChainComplex::from_source(m.algebra().clone(), Arc::new(ext), props);
    Ok(Resolution { kind: ResolutionKind::Projective, of: m.clone(), complex, augmentation: pi })
}

struct Splice<F: Field> {
    inj: ChainComplex<F>,
    proj: ChainComplex<F>,
    glue: Matrix<F>,
}

impl<F: Field> ComplexSource<F> for Splice<F> {
    fn term(&self, n: i64) -> Result<Module<F>> {
        if n >= 0 {
            self.inj.term(n)
        } else {
            self.proj.term(n + 1)
        }
    }

    fn diff(&self, n: i64) -> Result<Matrix<F>> {
        match n {
            n if n >= 0 => self.inj.diff(n),
            -1 => Ok(self.glue.clone()),
            n => self.proj.diff(n + 1),
        }
    }
}

/// Complete resolution over a self-injective algebra: the projective resolution in degrees
/// `< 0` glued to the injective resolution through `P^0 -> M -> I^0`.
pub fn splice<F: Field>(m: &Module<F>) -> Result<Resolution<F>> {
    if !is_self_injective(m.algebra())? {
        return Err(Error::NonSelfInjective);
    }
    let i = injective_resolution(m)?;
    let p = projective_resolution(m)?;
    let glue = p.augmentation.matrix().matmul(i.augmentation.matrix());
    let props = Props { support: (None, None), injective_terms: true, cohomology: Some((1, 0)) };
    let complex = ChainComplex::from_source(
        m.algebra().clone(),
        Arc::new(Splice { inj: i.complex.clone(), proj: p.complex.clone(), glue }),
        props,
    );
    Ok(Resolution { kind: ResolutionKind::Complete, of: m.clone(), complex, augmentation: i.augmentation })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    SelfInjective,
    FiniteGlobalDimension,
    Unsupported,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Regime::SelfInjective => "SelfInjective",
            Regime::FiniteGlobalDimension => "FiniteGlobalDimension",
            Regime::Unsupported => "Unsupported",
        };
        f.write_str(s)
    }
}

pub const DEFAULT_CUTOFF: usize = 20;

/// How complete resolutions are obtained for an algebra.
#[derive(Clone, Debug)]
pub struct Provider<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub regime: Regime,
    pub cutoff: usize,
    /// Length of the projective resolution of `Λ/J`, when it terminated within the cutoff.
    pub global_dimension: Option<usize>,
}

impl<F: Field> Provider<F> {
    pub fn require_supported(&self) -> Result<()> {
        if self.regime == Regime::Unsupported {
            return Err(Error::UnsupportedAlgebra(format!(
                "the algebra is not self-injective and the projective resolution of Λ/J did not terminate within {} steps",
                self.cutoff
            )));
        }
        Ok(())
    }
}

pub fn detect_regime<F: Field>(a: &Arc<Algebra<F>>, cutoff: usize) -> Result<Provider<F>> {
    a.require_radical()?;
    let mut provider = Provider { algebra: a.clone(), regime: Regime::Unsupported, cutoff, global_dimension: None };
    if is_self_injective(a)? {
        provider.regime = Regime::SelfInjective;
        if a.radical().map_or(false, |r| r.rows() == 0) {
            provider.global_dimension = Some(0);
        }
        return Ok(provider);
    }
    let mut m = Module::top(a.clone())?;
    for steps in 0..=cutoff {
        if m.dim() == 0 {
            provider.regime = Regime::FiniteGlobalDimension;
            provider.global_dimension = Some(steps.saturating_sub(1));
            return Ok(provider);
        }
        m = syzygy(&m)?.0;
    }
    Ok(provider)
}

/// Complete resolution `iM -> tM` in the provider's regime: the splice over self-injective
/// algebras and the zero complex when every module has finite injective dimension.
pub fn complete_resolution<F: Field>(m: &Module<F>, provider: &Provider<F>) -> Result<Resolution<F>> {
    provider.require_supported()?;
    match provider.regime {
        Regime::SelfInjective => splice(m),
        _ => {
            let zero = ChainComplex::zero(m.algebra().clone());
            let aug = ModuleHom::zero(m, &Module::zero(m.algebra().clone()));
            Ok(Resolution { kind: ResolutionKind::Complete, of: m.clone(), complex: zero, augmentation: aug })
        }
    }
}

/// The canonical map from the injective resolution to the complete resolution.
pub fn canonical_map<F: Field>(i: &Resolution<F>, t: &Resolution<F>) -> Result<ChainMap<F>> {
    lift_map(&ModuleHom::identity(&i.of), i, t)
}

struct Lifter<F: Field> {
    x: ChainComplex<F>,
    y: ChainComplex<F>,
    negative: bool,
    comps: Mutex<BTreeMap<i64, Matrix<F>>>,
}

impl<F: Field> Lifter<F> {
    fn solve(&self, n: i64, c: HomConstraints<F>) -> Result<Matrix<F>> {
        let sol = solve_hom(&self.x.term(n)?, &self.y.term(n)?, &c)?
            .ok_or_else(|| Error::InternalConsistency(format!("lifting obstruction in degree {n}")))?;
        Ok(sol.particular)
    }
}

impl<F: Field> MapSource<F> for Lifter<F> {
    fn component(&self, n: i64) -> Result<Matrix<F>> {
        if let Some(m) = self.comps.lock().expect("lift state").get(&n) {
            return Ok(m.clone());
        }
        if n < 0 && !self.negative {
            return Ok(Matrix::zeros(self.x.dim(n)?, self.y.dim(n)?));
        }
        let k = {
            let comps = self.comps.lock().expect("lift state");
            let below = comps.range(..n).next_back().map(|(k, _)| *k);
            let above = comps.range(n..).next().map(|(k, _)| *k);
            if n > 0 { below.or(above) } else { above.or(below) }
        };
        let mut k = k.expect("at least one seed");
        while k != n {
            let prev = self.comps.lock().expect("lift state")[&k].clone();
            let next = if n > k {
                // d_X^k f^{k+1} = f^k d_Y^k
                let t = prev.matmul(&self.y.diff(k)?);
                let f = self.solve(k + 1, HomConstraints::images(self.x.diff(k)?, t))?;
                k += 1;
                f
            } else {
                // f^{k-1} d_Y^{k-1} = d_X^{k-1} f^k
                let t = self.x.diff(k - 1)?.matmul(&prev);
                let f = self.solve(k - 1, HomConstraints::composite(self.y.diff(k - 1)?, t))?;
                k -= 1;
                f
            };
            self.comps.lock().expect("lift state").insert(k, next);
        }
        Ok(self.comps.lock().expect("lift state")[&n].clone())
    }
}

/// Extends `f: M -> N` to a chain map between resolutions: against injectivity in positive
/// degrees and, for complete targets, against total acyclicity in negative degrees.
pub fn lift_map<F: Field>(f: &ModuleHom<F>, rx: &Resolution<F>, ry: &Resolution<F>) -> Result<ChainMap<F>> {
    use ResolutionKind::*;
    let negative = match (rx.kind, ry.kind) {
        (Projective, _) | (_, Projective) => {
            return Err(Error::InvalidComplex("lifting is defined for injective and complete resolutions".into()))
        }
        (Complete, Injective) if rx.complex.props().support.0.is_none() => {
            return Err(Error::InvalidComplex("a complete source needs a complete target".into()))
        }
        (_, Complete) => rx.kind == Complete,
        _ => false,
    };
    if !(rx.of == *f.source() && ry.of == *f.target()) {
        return Err(Error::DimensionMismatch("map does not match the resolved modules".into()));
    }
    let (x, y) = (rx.complex.clone(), ry.complex.clone());
    // f^0 ∘ (augmentation) must agree: ι_M f^0 = f ι_N
    let f0 = if y.dim(0)? == 0 || x.dim(0)? == 0 {
        Matrix::zeros(x.dim(0)?, y.dim(0)?)
    } else {
        let t = f.matrix().matmul(ry.augmentation.matrix());
        solve_hom(&x.term(0)?, &y.term(0)?, &HomConstraints::images(rx.augmentation.matrix().clone(), t))?
            .ok_or_else(|| Error::InternalConsistency("no extension of the map to degree 0".into()))?
            .particular
    };
    let mut comps = BTreeMap::new();
    comps.insert(0, f0);
    extend_chain_map(&x, &y, comps, negative)
}

/// Extends the given components to a chain map `X -> Y`: upward from the largest seed below
/// a degree (needs `Y` injective and `X` exact there), downward from the smallest seed above
/// it (needs `X` injective and `Y` exact). Without `negative`, unseeded negative degrees are
/// zero. The seeds must already commute with the differentials between consecutive seeds.
pub fn extend_chain_map<F: Field>(
    x: &ChainComplex<F>,
    y: &ChainComplex<F>,
    seeds: BTreeMap<i64, Matrix<F>>,
    negative: bool,
) -> Result<ChainMap<F>> {
    if seeds.is_empty() {
        return Err(Error::InvalidHom("no seed components".into()));
    }
    let lifter = Lifter { x: x.clone(), y: y.clone(), negative, comps: Mutex::new(seeds) };
    ChainMap::from_source(x.clone(), y.clone(), Arc::new(lifter))
}

/// An injective resolution `X -> iX` of a bounded complex, with the quasi-isomorphism.
pub struct ComplexResolution<F: Field> {
    pub complex: ChainComplex<F>,
    pub quasi_iso: ChainMap<F>,
}

struct RawState<F> {
    terms: BTreeMap<i64, Module<F>>,
    diffs: BTreeMap<i64, Matrix<F>>,
    phi: BTreeMap<i64, Matrix<F>>,
    next: i64,
}

/// `I^n = E((X^n ⊕ coker d_I^{n-2}) / {(d x, −φ x)})`, built degree by degree.
struct RawResolution<F: Field> {
    x: ChainComplex<F>,
    lo: i64,
    state: Mutex<RawState<F>>,
}

impl<F: Field> RawResolution<F> {
    fn ensure(&self, n: i64) -> Result<()> {
        let mut st = self.state.lock().expect("resolution state");
        let alg = self.x.algebra().clone();
        while st.next <= n {
            let k = st.next;
            let xk = self.x.term(k)?;
            let prev = st.terms.get(&(k - 1)).cloned().unwrap_or_else(|| Module::zero(alg.clone()));
            // coker of d_I^{k-2}: I^{k-1} / im
            let into_prev = st.diffs.get(&(k - 2)).cloned().unwrap_or_else(|| Matrix::zeros(0, prev.dim()));
            // M^k as a quotient of X^k ⊕ I^{k-1}
            let sum = xk.direct_sum(&prev)?;
            let mut rels = Vec::new();
            for r in 0..into_prev.rows() {
                let mut v = vec![F::zero(); xk.dim()];
                v.extend_from_slice(into_prev.row(r));
                rels.push(v);
            }
            let dx = self.x.diff(k - 1)?;
            let phi_prev = st.phi.get(&(k - 1)).cloned().unwrap_or_else(|| Matrix::zeros(dx.rows(), prev.dim()));
            for r in 0..dx.rows() {
                let mut v = dx.row(r).to_vec();
                v.extend(phi_prev.row(r).iter().map(|c| -c.clone()));
                rels.push(v);
            }
            let rel_space = crate::exactla::span_basis(&Matrix::from_rows(&rels, sum.dim()));
            let (q, pi) = sum.quotient(&rel_space);
            let (e, iota) = injective_envelope(&q)?;
            let to_e = pi.matrix().matmul(iota.matrix());
            let phi_k = to_e.block(0, 0, xk.dim(), e.dim());
            let d_prev = to_e.block(xk.dim(), 0, prev.dim(), e.dim());
            st.terms.insert(k, e);
            st.phi.insert(k, phi_k);
            if k > self.lo {
                st.diffs.insert(k - 1, d_prev);
            }
            st.next += 1;
        }
        Ok(())
    }
}

impl<F: Field> ComplexSource<F> for RawResolution<F> {
    fn term(&self, n: i64) -> Result<Module<F>> {
        self.ensure(n)?;
        Ok(self.state.lock().expect("resolution state").terms[&n].clone())
    }

    fn diff(&self, n: i64) -> Result<Matrix<F>> {
        self.ensure(n + 1)?;
        Ok(self.state.lock().expect("resolution state").diffs[&n].clone())
    }
}

impl<F: Field> MapSource<F> for Arc<RawResolution<F>> {
    fn component(&self, n: i64) -> Result<Matrix<F>> {
        self.ensure(n)?;
        Ok(self.state.lock().expect("resolution state").phi[&n].clone())
    }
}

/// Raw resolution with its minimal part spliced in on `[lo, hi + 1]`.
struct Minimalized<F: Field> {
    raw: ChainComplex<F>,
    dec: MinimalDecomposition<F>,
    top: i64,
}

impl<F: Field> ComplexSource<F> for Minimalized<F> {
    fn term(&self, n: i64) -> Result<Module<F>> {
        if n <= self.top {
            self.dec.minimal.term(n)
        } else {
            self.raw.term(n)
        }
    }

    fn diff(&self, n: i64) -> Result<Matrix<F>> {
        match n {
            n if n < self.top => self.dec.minimal.diff(n),
            n if n == self.top => Ok(self.dec.minimal_inclusion(n).matmul(&self.raw.diff(n)?)),
            n => self.raw.diff(n),
        }
    }
}

/// Minimal injective resolution of a bounded complex.
pub fn resolve_complex<F: Field>(x: &ChainComplex<F>) -> Result<ComplexResolution<F>> {
    let (lo, hi) = match x.props().support {
        (Some(lo), Some(hi)) if lo <= hi => (lo, hi),
        (Some(_), Some(_)) => {
            let z = ChainComplex::zero(x.algebra().clone());
            return Ok(ComplexResolution { quasi_iso: ChainMap::zero(x, &z)?, complex: z });
        }
        _ => return Err(Error::InvalidComplex("only bounded complexes can be resolved".into())),
    };
    let raw_src = Arc::new(RawResolution {
        x: x.clone(),
        lo,
        state: Mutex::new(RawState { terms: BTreeMap::new(), diffs: BTreeMap::new(), phi: BTreeMap::new(), next: lo }),
    });
    let props = Props { support: (Some(lo), None), injective_terms: true, cohomology: Some((lo, hi)) };
    let raw = ChainComplex::from_source(x.algebra().clone(), raw_src.clone(), props);
    // contractible summands can only occur up to degree hi + 1
    let top = hi + 1;
    let dec = minimal_decomposition(&raw.window(lo, top)?, lo, top)?;
    let complex = ChainComplex::from_source(
        x.algebra().clone(),
        Arc::new(Minimalized { raw: raw.clone(), dec: dec.clone(), top }),
        props,
    );
    let phi = ChainMap::from_source(x.clone(), raw.clone(), Arc::new(raw_src))?;
    let proj_dec = dec;
    let quasi_iso = ChainMap::from_fn(x.clone(), complex.clone(), move |n| {
        if n > top {
            return phi.component(n);
        }
        Ok(phi.component(n)?.matmul(&proj_dec.minimal_projection(n)?))
    })?;
    Ok(ComplexResolution { complex, quasi_iso })
}
