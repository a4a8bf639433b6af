use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::algebra::ensure_same;
use crate::complexes::ChainComplex;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::modrep::ModuleHom;

/// Produces the components `f^n: X^n -> Y^n` of a chain map on demand.
pub trait MapSource<F: Field>: Send + Sync {
    fn component(&self, n: i64) -> Result<Matrix<F>>;
}

struct Table<F>(BTreeMap<i64, Matrix<F>>);

impl<F: Field> MapSource<F> for Table<F> {
    fn component(&self, n: i64) -> Result<Matrix<F>> {
        self.0.get(&n).cloned().ok_or(Error::DegreeUnavailable(n))
    }
}

struct FnSource<G>(G);

impl<F: Field, G: Fn(i64) -> Result<Matrix<F>> + Send + Sync> MapSource<F> for FnSource<G> {
    fn component(&self, n: i64) -> Result<Matrix<F>> {
        (self.0)(n)
    }
}

/// A degree-preserving map of complexes. Components in degrees where either side vanishes are
/// zero; other components come from the source and are memoized.
#[derive(Clone)]
pub struct ChainMap<F: Field> {
    source: ChainComplex<F>,
    target: ChainComplex<F>,
    comps: Arc<dyn MapSource<F>>,
    memo: Arc<Mutex<BTreeMap<i64, Matrix<F>>>>,
}

impl<F: Field> std::fmt::Debug for ChainMap<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ChainMap({:?} -> {:?})", self.source, self.target)
    }
}

impl<F: Field> ChainMap<F> {
    pub fn from_source(source: ChainComplex<F>, target: ChainComplex<F>, comps: Arc<dyn MapSource<F>>) -> Result<Self> {
        ensure_same(source.algebra(), target.algebra())?;
        Ok(ChainMap { source, target, comps, memo: Arc::new(Mutex::new(BTreeMap::new())) })
    }

    pub fn from_fn(
        source: ChainComplex<F>,
        target: ChainComplex<F>,
        f: impl Fn(i64) -> Result<Matrix<F>> + Send + Sync + 'static,
    ) -> Result<Self> {
        Self::from_source(source, target, Arc::new(FnSource(f)))
    }

    /// Components `comps[i]` in degree `lo + i`; other degrees are unavailable unless one side
    /// vanishes there.
    pub fn explicit(source: ChainComplex<F>, target: ChainComplex<F>, lo: i64, comps: Vec<Matrix<F>>) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (i, c) in comps.into_iter().enumerate() {
            let n = lo + i as i64;
            if c.shape() != (source.dim(n)?, target.dim(n)?) {
                return Err(Error::DimensionMismatch(format!("chain map component in degree {n}")));
            }
            table.insert(n, c);
        }
        Self::from_source(source, target, Arc::new(Table(table)))
    }

    pub fn identity(x: &ChainComplex<F>) -> Self {
        let x2 = x.clone();
        Self::from_fn(x.clone(), x.clone(), move |n| Ok(Matrix::identity(x2.dim(n)?))).expect("same algebra")
    }

    pub fn zero(x: &ChainComplex<F>, y: &ChainComplex<F>) -> Result<Self> {
        let (x2, y2) = (x.clone(), y.clone());
        Self::from_fn(x.clone(), y.clone(), move |n| Ok(Matrix::zeros(x2.dim(n)?, y2.dim(n)?)))
    }

    /// The map of complexes concentrated in degree `n` induced by a module map.
    pub fn concentrated(f: &ModuleHom<F>, n: i64) -> Self {
        let x = ChainComplex::concentrated(f.source(), n);
        let y = ChainComplex::concentrated(f.target(), n);
        Self::explicit(x, y, n, vec![f.matrix().clone()]).expect("shapes agree")
    }

    pub fn source(&self) -> &ChainComplex<F> {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex<F> {
        &self.target
    }

    pub fn component(&self, n: i64) -> Result<Matrix<F>> {
        let (r, c) = (self.source.dim(n)?, self.target.dim(n)?);
        if r == 0 || c == 0 {
            return Ok(Matrix::zeros(r, c));
        }
        if let Some(m) = self.memo.lock().expect("map cache").get(&n) {
            return Ok(m.clone());
        }
        let m = self.comps.component(n)?;
        if m.shape() != (r, c) {
            return Err(Error::InternalConsistency(format!("chain map component {n} has shape {:?}", m.shape())));
        }
        self.memo.lock().expect("map cache").insert(n, m.clone());
        Ok(m)
    }

    pub fn component_hom(&self, n: i64) -> Result<ModuleHom<F>> {
        Ok(ModuleHom::new_unchecked(self.source.term(n)?, self.target.term(n)?, self.component(n)?))
    }

    /// Checks `d_X f = f d_Y` and that each component is a module map, on degrees `[lo, hi]`.
    pub fn check(&self, lo: i64, hi: i64) -> Result<()> {
        for n in lo..=hi {
            let f = self.component(n)?;
            if !self.component_hom(n)?.is_intertwining() {
                return Err(Error::InvalidHom(format!("chain map component {n} is not a module map")));
            }
            let left = self.source.diff(n)?.matmul(&self.component(n + 1)?);
            let right = f.matmul(&self.target.diff(n)?);
            if left != right {
                return Err(Error::InvalidHom(format!("chain map does not commute with d in degree {n}")));
            }
        }
        Ok(())
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &ChainMap<F>) -> Result<ChainMap<F>> {
        let (f, g) = (self.clone(), g.clone());
        Self::from_fn(self.source.clone(), g.target.clone(), move |n| Ok(f.component(n)?.matmul(&g.component(n)?)))
    }

    pub fn add(&self, g: &ChainMap<F>) -> Result<ChainMap<F>> {
        let (f, g) = (self.clone(), g.clone());
        Self::from_fn(self.source.clone(), self.target.clone(), move |n| Ok(f.component(n)?.add(&g.component(n)?)))
    }

    pub fn sub(&self, g: &ChainMap<F>) -> Result<ChainMap<F>> {
        let (f, g) = (self.clone(), g.clone());
        Self::from_fn(self.source.clone(), self.target.clone(), move |n| Ok(f.component(n)?.sub(&g.component(n)?)))
    }

    pub fn scale(&self, s: F) -> ChainMap<F> {
        let f = self.clone();
        Self::from_fn(self.source.clone(), self.target.clone(), move |n| Ok(f.component(n)?.scale(&s))).expect("same algebra")
    }

    /// `Σ^k f`, with components `f^{n+k}`.
    pub fn shift(&self, k: i64) -> ChainMap<F> {
        let f = self.clone();
        Self::from_fn(self.source.shift(k), self.target.shift(k), move |n| f.component(n + k)).expect("same algebra")
    }

    pub fn is_zero_on(&self, lo: i64, hi: i64) -> Result<bool> {
        for n in lo..=hi {
            if !self.component(n)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Components `s^n: X^n -> Y^{n-1}` with `f - g = d s + s d` on `[lo, hi]`.
#[derive(Clone, Debug)]
pub struct Homotopy<F> {
    pub window: (i64, i64),
    pub components: BTreeMap<i64, Matrix<F>>,
}

impl<F: Field> Homotopy<F> {
    pub fn component(&self, n: i64, rows: usize, cols: usize) -> Matrix<F> {
        self.components.get(&n).cloned().unwrap_or_else(|| Matrix::zeros(rows, cols))
    }

    /// Verifies `(f - g)^n = d_X^n s^{n+1} + s^n d_Y^{n-1}` for `n` in the window.
    pub fn verify(&self, f: &ChainMap<F>, g: &ChainMap<F>) -> Result<bool> {
        let (x, y) = (f.source(), f.target());
        for n in self.window.0..=self.window.1 {
            let lhs = f.component(n)?.sub(&g.component(n)?);
            let s_next = self.component(n + 1, x.dim(n + 1)?, y.dim(n)?);
            let s_here = self.component(n, x.dim(n)?, y.dim(n - 1)?);
            let rhs = x.diff(n)?.matmul(&s_next).add(&s_here.matmul(&y.diff(n - 1)?));
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

struct Cone<F: Field> {
    f: ChainMap<F>,
}

impl<F: Field> crate::complexes::ComplexSource<F> for Cone<F> {
    fn term(&self, n: i64) -> Result<crate::modrep::Module<F>> {
        let (x, y) = (self.f.source(), self.f.target());
        x.term(n + 1)?.direct_sum(&y.term(n)?)
    }

    fn diff(&self, n: i64) -> Result<Matrix<F>> {
        let (x, y) = (self.f.source(), self.f.target());
        let (a, b) = (x.dim(n + 1)?, y.dim(n)?);
        let (c, d) = (x.dim(n + 2)?, y.dim(n + 1)?);
        let mut m = Matrix::zeros(a + b, c + d);
        m.set_block(0, 0, &x.diff(n + 1)?.neg());
        m.set_block(0, c, &self.f.component(n + 1)?);
        m.set_block(a, c, &y.diff(n)?);
        Ok(m)
    }
}

struct Cylinder<F: Field> {
    f: ChainMap<F>,
}

impl<F: Field> crate::complexes::ComplexSource<F> for Cylinder<F> {
    fn term(&self, n: i64) -> Result<crate::modrep::Module<F>> {
        let (x, y) = (self.f.source(), self.f.target());
        Ok(crate::modrep::Module::direct_sum_of(x.algebra(), &[x.term(n)?, x.term(n + 1)?, y.term(n)?]))
    }

    fn diff(&self, n: i64) -> Result<Matrix<F>> {
        let (x, y) = (self.f.source(), self.f.target());
        let (a0, a1, b0) = (x.dim(n)?, x.dim(n + 1)?, y.dim(n)?);
        let (c1, c2, d1) = (a1, x.dim(n + 2)?, y.dim(n + 1)?);
        let mut m = Matrix::zeros(a0 + a1 + b0, c1 + c2 + d1);
        m.set_block(0, 0, &x.diff(n)?);
        m.set_block(a0, 0, &Matrix::<F>::identity(a1).neg());
        m.set_block(a0, c1, &x.diff(n + 1)?.neg());
        m.set_block(a0, c1 + c2, &self.f.component(n + 1)?);
        m.set_block(a0 + a1, c1 + c2, &y.diff(n)?);
        Ok(m)
    }
}

fn union_support(a: (Option<i64>, Option<i64>), b: (Option<i64>, Option<i64>)) -> (Option<i64>, Option<i64>) {
    let lo = match (a.0, b.0) {
        (Some(x), Some(y)) => Some(x.min(y)),
        _ => None,
    };
    let hi = match (a.1, b.1) {
        (Some(x), Some(y)) => Some(x.max(y)),
        _ => None,
    };
    (lo, hi)
}

/// Mapping cone: `C^n = X^{n+1} ⊕ Y^n`, `d(x, y) = (−d x, f x + d y)`.
pub fn cone<F: Field>(f: &ChainMap<F>) -> ChainComplex<F> {
    let (px, py) = (f.source().props(), f.target().props());
    let sx = (px.support.0.map(|v| v - 1), px.support.1.map(|v| v - 1));
    let props = crate::complexes::Props {
        support: union_support(sx, py.support),
        injective_terms: px.injective_terms && py.injective_terms,
        cohomology: None,
    };
    ChainComplex::from_source(f.source().algebra().clone(), Arc::new(Cone { f: f.clone() }), props)
}

/// Mapping cylinder `X^n ⊕ X^{n+1} ⊕ Y^n`, homotopy equivalent to `Y`; `X` includes as the first
/// summand and the projection to the last two summands is a chain map onto `cone(f)`.
pub fn cylinder<F: Field>(f: &ChainMap<F>) -> ChainComplex<F> {
    let (px, py) = (f.source().props(), f.target().props());
    let sx = (px.support.0.map(|v| v - 1), px.support.1);
    let props = crate::complexes::Props {
        support: union_support(sx, py.support),
        injective_terms: px.injective_terms && py.injective_terms,
        cohomology: py.cohomology,
    };
    ChainComplex::from_source(f.source().algebra().clone(), Arc::new(Cylinder { f: f.clone() }), props)
}

/// The inclusions and projections relating `X`, `cyl(f)`, `cone(f)` and `Y`.
pub struct CylinderMaps<F: Field> {
    pub cylinder: ChainComplex<F>,
    pub cone: ChainComplex<F>,
    /// `X -> cyl(f)`.
    pub incl: ChainMap<F>,
    /// `cyl(f) -> cone(f)`.
    pub proj: ChainMap<F>,
    /// `cyl(f) -> Y`, a homotopy equivalence.
    pub collapse: ChainMap<F>,
}

pub fn cylinder_maps<F: Field>(f: &ChainMap<F>) -> Result<CylinderMaps<F>> {
    let cyl = cylinder(f);
    let cn = cone(f);
    let (x, y) = (f.source().clone(), f.target().clone());
    let (x1, y1) = (x.clone(), y.clone());
    let incl = ChainMap::from_fn(x.clone(), cyl.clone(), move |n| {
        let (a0, a1, b0) = (x1.dim(n)?, x1.dim(n + 1)?, y1.dim(n)?);
        let mut m = Matrix::zeros(a0, a0 + a1 + b0);
        m.set_block(0, 0, &Matrix::identity(a0));
        Ok(m)
    })?;
    let (x2, y2) = (x.clone(), y.clone());
    let proj = ChainMap::from_fn(cyl.clone(), cn.clone(), move |n| {
        let (a0, a1, b0) = (x2.dim(n)?, x2.dim(n + 1)?, y2.dim(n)?);
        let mut m = Matrix::zeros(a0 + a1 + b0, a1 + b0);
        m.set_block(a0, 0, &Matrix::identity(a1 + b0));
        Ok(m)
    })?;
    let (x3, y3, f3) = (x.clone(), y.clone(), f.clone());
    let collapse = ChainMap::from_fn(cyl.clone(), y.clone(), move |n| {
        let (a0, a1, b0) = (x3.dim(n)?, x3.dim(n + 1)?, y3.dim(n)?);
        let mut m = Matrix::zeros(a0 + a1 + b0, b0);
        m.set_block(0, 0, &f3.component(n)?);
        m.set_block(a0 + a1, 0, &Matrix::identity(b0));
        Ok(m)
    })?;
    Ok(CylinderMaps { cylinder: cyl, cone: cn, incl, proj, collapse })
}

/// The map `Z^n X -> Z^n Y` induced by `f`, on cocycle submodules.
pub fn induced_on_cocycles<F: Field>(f: &ChainMap<F>, n: i64) -> Result<ModuleHom<F>> {
    let (zx, ix) = f.source().cocycles(n)?;
    let (zy, iy) = f.target().cocycles(n)?;
    let img = ix.matrix().matmul(&f.component(n)?);
    if zy.dim() == 0 {
        return Ok(ModuleHom::zero(&zx, &zy));
    }
    let frame = crate::exactla::Frame::new(iy.matrix().clone()).expect("cocycle basis is independent");
    let m = frame
        .coords_matrix(&img)
        .ok_or_else(|| Error::InvalidHom(format!("chain map does not preserve cocycles in degree {n}")))?;
    Ok(ModuleHom::new_unchecked(zx, zy, m))
}
