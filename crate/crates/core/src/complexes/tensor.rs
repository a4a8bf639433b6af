//! Tensor products and internal Hom over a cocommutative Hopf algebra.

use std::sync::Arc;

use crate::algebra::{ensure_same, Algebra};
use crate::complexes::{ChainComplex, ComplexSource, Props};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::modrep::Module;

/// `M ⊗_k N` with `b_i` acting through `Δ(b_i)`.
pub fn tensor_modules<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<Module<F>> {
    ensure_same(m.algebra(), n.algebra())?;
    let a = m.algebra();
    let h = a.require_cocommutative_hopf()?;
    let dim = a.dim();
    let action = (0..dim)
        .map(|i| {
            let mut acc = Matrix::zeros(m.dim() * n.dim(), m.dim() * n.dim());
            for s in 0..dim {
                for t in 0..dim {
                    let c = &h.comul()[(i, s * dim + t)];
                    if !c.is_zero() {
                        acc.add_scaled(c, &m.act(s).kron(n.act(t)));
                    }
                }
            }
            acc
        })
        .collect();
    Module::new(a.clone(), action)
}

/// `Hom_k(M, N)` with `(f·a)(m) = Σ f(m·S(a₁))·a₂`; a map is stored row-major as a vector.
pub fn internal_hom_modules<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<Module<F>> {
    ensure_same(m.algebra(), n.algebra())?;
    let a = m.algebra();
    let h = a.require_cocommutative_hopf()?;
    let dim = a.dim();
    let size = m.dim() * n.dim();
    let s_rho: Vec<Matrix<F>> = (0..dim).map(|s| m.rho(h.antipode().row(s)).transpose()).collect();
    let action = (0..dim)
        .map(|i| {
            let mut acc = Matrix::zeros(size, size);
            for s in 0..dim {
                for t in 0..dim {
                    let c = &h.comul()[(i, s * dim + t)];
                    if !c.is_zero() {
                        acc.add_scaled(c, &s_rho[s].kron(n.act(t)));
                    }
                }
            }
            acc
        })
        .collect();
    Module::new(a.clone(), action)
}

/// The trivial module through the counit.
pub fn unit_module<F: Field>(a: &Arc<Algebra<F>>) -> Result<Module<F>> {
    let h = a.require_cocommutative_hopf()?;
    let action = h.counit().iter().map(|c| Matrix::from_fn(1, 1, |_, _| c.clone())).collect();
    Module::new(a.clone(), action)
}

fn overlap(px: &Props, py: &Props) -> Result<()> {
    let finite = (px.support.0.is_some() && py.support.0.is_some())
        || (px.support.1.is_some() && py.support.1.is_some())
        || px.is_bounded()
        || py.is_bounded();
    if finite {
        Ok(())
    } else {
        Err(Error::WindowExhausted("tensor product needs finitely many (p, q) per degree".into()))
    }
}

/// `p` range contributing to `⊕_{p+q=n} X^p ⊗ Y^q`.
fn p_range(px: &Props, py: &Props, n: i64) -> (i64, i64) {
    let mut lo = px.support.0.unwrap_or(i64::MIN / 4);
    let mut hi = px.support.1.unwrap_or(i64::MAX / 4);
    if let Some(b) = py.support.1 {
        lo = lo.max(n - b);
    }
    if let Some(a) = py.support.0 {
        hi = hi.min(n - a);
    }
    (lo, hi)
}

struct Tensor<F: Field> {
    x: ChainComplex<F>,
    y: ChainComplex<F>,
}

impl<F: Field> Tensor<F> {
    /// `(p, offset, dim)` of each summand `X^p ⊗ Y^{n-p}`.
    fn layout(&self, n: i64) -> Result<Vec<(i64, usize, usize)>> {
        let (lo, hi) = p_range(&self.x.props(), &self.y.props(), n);
        let mut out = Vec::new();
        let mut off = 0;
        for p in lo..=hi {
            let d = self.x.dim(p)? * self.y.dim(n - p)?;
            if d > 0 {
                out.push((p, off, d));
                off += d;
            }
        }
        Ok(out)
    }
}

impl<F: Field> ComplexSource<F> for Tensor<F> {
    fn term(&self, n: i64) -> Result<Module<F>> {
        let parts = self
            .layout(n)?
            .into_iter()
            .map(|(p, _, _)| tensor_modules(&self.x.term(p)?, &self.y.term(n - p)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Module::direct_sum_of(self.x.algebra(), &parts))
    }

    fn diff(&self, n: i64) -> Result<Matrix<F>> {
        let src = self.layout(n)?;
        let tgt = self.layout(n + 1)?;
        let rows = src.iter().map(|b| b.2).sum();
        let cols = tgt.iter().map(|b| b.2).sum();
        let mut d = Matrix::zeros(rows, cols);
        for &(p, off, _) in &src {
            let q = n - p;
            let (dxp, dyq) = (self.x.dim(p)?, self.y.dim(q)?);
            // dx ⊗ y lands in X^{p+1} ⊗ Y^q
            if let Some(&(_, o, _)) = tgt.iter().find(|b| b.0 == p + 1) {
                d.set_block(off, o, &self.x.diff(p)?.kron(&Matrix::identity(dyq)));
            }
            // (−1)^p x ⊗ dy lands in X^p ⊗ Y^{q+1}
            if let Some(&(_, o, _)) = tgt.iter().find(|b| b.0 == p) {
                let mut blk = Matrix::<F>::identity(dxp).kron(&self.y.diff(q)?);
                if p.rem_euclid(2) == 1 {
                    blk = blk.neg();
                }
                d.set_block(off, o, &blk);
            }
        }
        Ok(d)
    }
}

fn add_support(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    Some(a? + b?)
}

/// `X ⊗_k Y` with Koszul signs `d(x ⊗ y) = dx ⊗ y + (−1)^{|x|} x ⊗ dy`.
pub fn tensor_complex<F: Field>(x: &ChainComplex<F>, y: &ChainComplex<F>) -> Result<ChainComplex<F>> {
    ensure_same(x.algebra(), y.algebra())?;
    x.algebra().require_cocommutative_hopf()?;
    let (px, py) = (x.props(), y.props());
    overlap(&px, &py)?;
    let props = Props {
        support: (add_support(px.support.0, py.support.0), add_support(px.support.1, py.support.1)),
        // X^p ⊗ I is injective whenever I is, over a Hopf algebra
        injective_terms: px.injective_terms || py.injective_terms,
        cohomology: None,
    };
    Ok(ChainComplex::from_source(x.algebra().clone(), Arc::new(Tensor { x: x.clone(), y: y.clone() }), props))
}

struct InternalHom<F: Field> {
    y: ChainComplex<F>,
    z: ChainComplex<F>,
}

impl<F: Field> InternalHom<F> {
    fn layout(&self, n: i64) -> Result<Vec<(i64, usize, usize)>> {
        let (ys, zs) = (self.y.props().support, self.z.props().support);
        let mut lo = ys.0.expect("bounded");
        let mut hi = ys.1.expect("bounded");
        if let Some(a) = zs.0 {
            lo = lo.max(a - n);
        }
        if let Some(b) = zs.1 {
            hi = hi.min(b - n);
        }
        let mut out = Vec::new();
        let mut off = 0;
        for p in lo..=hi {
            let d = self.y.dim(p)? * self.z.dim(p + n)?;
            if d > 0 {
                out.push((p, off, d));
                off += d;
            }
        }
        Ok(out)
    }
}

impl<F: Field> ComplexSource<F> for InternalHom<F> {
    fn term(&self, n: i64) -> Result<Module<F>> {
        let parts = self
            .layout(n)?
            .into_iter()
            .map(|(p, _, _)| internal_hom_modules(&self.y.term(p)?, &self.z.term(p + n)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Module::direct_sum_of(self.y.algebra(), &parts))
    }

    fn diff(&self, n: i64) -> Result<Matrix<F>> {
        let src = self.layout(n)?;
        let tgt = self.layout(n + 1)?;
        let rows = src.iter().map(|b| b.2).sum();
        let cols = tgt.iter().map(|b| b.2).sum();
        let mut d = Matrix::zeros(rows, cols);
        let sign = if n.rem_euclid(2) == 0 { -F::one() } else { F::one() };
        for &(p, off, _) in &src {
            let (dy, dz) = (self.y.dim(p)?, self.z.dim(p + n)?);
            // f ↦ f d_Z stays in component p
            if let Some(&(_, o, _)) = tgt.iter().find(|b| b.0 == p) {
                d.set_block(off, o, &Matrix::<F>::identity(dy).kron(&self.z.diff(p + n)?));
            }
            // f ↦ −(−1)^n d_Y f lands in component p − 1
            if let Some(&(_, o, _)) = tgt.iter().find(|b| b.0 == p - 1) {
                let blk = self.y.diff(p - 1)?.transpose().kron(&Matrix::identity(dz)).scale(&sign);
                d.set_block(off, o, &blk);
            }
        }
        Ok(d)
    }
}

/// Internal Hom complex `Hom_k(Y, Z)` for bounded `Y`, with the Hom-complex differential.
pub fn internal_hom_complex<F: Field>(y: &ChainComplex<F>, z: &ChainComplex<F>) -> Result<ChainComplex<F>> {
    ensure_same(y.algebra(), z.algebra())?;
    y.algebra().require_cocommutative_hopf()?;
    let (py, pz) = (y.props(), z.props());
    if !py.is_bounded() {
        return Err(Error::WindowExhausted("internal Hom needs a bounded first argument".into()));
    }
    let props = Props {
        support: (
            pz.support.0.map(|a| a - py.support.1.unwrap()),
            pz.support.1.map(|b| b - py.support.0.unwrap()),
        ),
        injective_terms: false,
        cohomology: None,
    };
    Ok(ChainComplex::from_source(y.algebra().clone(), Arc::new(InternalHom { y: y.clone(), z: z.clone() }), props))
}
