use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::algebra::{ensure_same, Algebra};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::modrep::{Module, ModuleHom};

/// Produces the terms and differentials of a complex on demand. Implementations must be
/// deterministic: the same degree always yields the same data.
pub trait ComplexSource<F: Field>: Send + Sync {
    fn term(&self, n: i64) -> Result<Module<F>>;
    /// `d^n: X^n -> X^{n+1}` as a `dim X^n × dim X^{n+1}` matrix.
    fn diff(&self, n: i64) -> Result<Matrix<F>>;
}

/// Facts about a complex that constructions know and operations may rely on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Props {
    /// Terms vanish below `support.0` and above `support.1` (when given).
    pub support: (Option<i64>, Option<i64>),
    /// Every term is an injective module.
    pub injective_terms: bool,
    /// Cohomology vanishes outside `[lo, hi]`; `lo > hi` means acyclic, `None` unknown.
    pub cohomology: Option<(i64, i64)>,
}

impl Props {
    pub fn unknown(support: (Option<i64>, Option<i64>)) -> Self {
        Props { support, injective_terms: false, cohomology: None }
    }

    pub fn in_support(&self, n: i64) -> bool {
        self.support.0.map_or(true, |lo| n >= lo) && self.support.1.map_or(true, |hi| n <= hi)
    }

    pub fn is_bounded(&self) -> bool {
        self.support.0.is_some() && self.support.1.is_some()
    }

    pub fn is_acyclic(&self) -> bool {
        matches!(self.cohomology, Some((lo, hi)) if lo > hi)
    }

    /// Cohomology known to vanish in degree `n`.
    pub fn exact_at(&self, n: i64) -> bool {
        !self.in_support(n) || matches!(self.cohomology, Some((lo, hi)) if n < lo || n > hi)
    }

    fn shifted(&self, k: i64) -> Props {
        Props {
            support: (self.support.0.map(|x| x - k), self.support.1.map(|x| x - k)),
            injective_terms: self.injective_terms,
            cohomology: self.cohomology.map(|(lo, hi)| if lo > hi { (lo, hi) } else { (lo - k, hi - k) }),
        }
    }
}

/// A Z-graded cochain complex of right modules with lazily computed, memoized degrees.
#[derive(Clone)]
pub struct ChainComplex<F: Field> {
    algebra: Arc<Algebra<F>>,
    source: Arc<dyn ComplexSource<F>>,
    props: Props,
    terms: Arc<Mutex<BTreeMap<i64, Module<F>>>>,
    diffs: Arc<Mutex<BTreeMap<i64, Matrix<F>>>>,
}

impl<F: Field> std::fmt::Debug for ChainComplex<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ChainComplex({:?})", self.props)
    }
}

struct Explicit<F> {
    terms: BTreeMap<i64, Module<F>>,
    diffs: BTreeMap<i64, Matrix<F>>,
}

impl<F: Field> ComplexSource<F> for Explicit<F> {
    fn term(&self, n: i64) -> Result<Module<F>> {
        self.terms.get(&n).cloned().ok_or(Error::DegreeUnavailable(n))
    }

    fn diff(&self, n: i64) -> Result<Matrix<F>> {
        self.diffs.get(&n).cloned().ok_or(Error::DegreeUnavailable(n))
    }
}

impl<F: Field> ChainComplex<F> {
    pub fn from_source(algebra: Arc<Algebra<F>>, source: Arc<dyn ComplexSource<F>>, props: Props) -> Self {
        ChainComplex {
            algebra,
            source,
            props,
            terms: Arc::new(Mutex::new(BTreeMap::new())),
            diffs: Arc::new(Mutex::new(BTreeMap::new())),
        }
    }

    /// Complex with terms `terms[i]` in degree `lo + i` and `diffs[i]: X^{lo+i} -> X^{lo+i+1}`;
    /// zero outside. Validates module maps and `d∘d = 0`.
    pub fn explicit(algebra: Arc<Algebra<F>>, lo: i64, terms: Vec<Module<F>>, diffs: Vec<Matrix<F>>) -> Result<Self> {
        if !terms.is_empty() && diffs.len() + 1 != terms.len() {
            return Err(Error::InvalidComplex(format!("{} terms need {} differentials", terms.len(), terms.len() - 1)));
        }
        for t in &terms {
            ensure_same(&algebra, t.algebra())?;
        }
        let hi = lo + terms.len() as i64 - 1;
        let mut tm = BTreeMap::new();
        let mut dm = BTreeMap::new();
        for (i, t) in terms.iter().enumerate() {
            tm.insert(lo + i as i64, t.rebind(algebra.clone())?);
        }
        for (i, d) in diffs.into_iter().enumerate() {
            let (s, t) = (&terms[i], &terms[i + 1]);
            ModuleHom::new(s.clone(), t.clone(), d.clone())
                .map_err(|e| Error::InvalidComplex(format!("differential in degree {}: {e}", lo + i as i64)))?;
            dm.insert(lo + i as i64, d);
        }
        let support = if terms.is_empty() { (Some(1), Some(0)) } else { (Some(lo), Some(hi)) };
        let c = Self::from_source(algebra, Arc::new(Explicit { terms: tm, diffs: dm }), Props::unknown(support));
        c.check_d_squared(lo - 1, hi + 1)?;
        Ok(c)
    }

    pub fn zero(algebra: Arc<Algebra<F>>) -> Self {
        let mut p = Props::unknown((Some(1), Some(0)));
        p.injective_terms = true;
        p.cohomology = Some((1, 0));
        Self::from_source(algebra, Arc::new(Explicit { terms: BTreeMap::new(), diffs: BTreeMap::new() }), p)
    }

    /// The module `m` concentrated in degree `n`.
    pub fn concentrated(m: &Module<F>, n: i64) -> Self {
        let mut c = Self::explicit(m.algebra().clone(), n, vec![m.clone()], vec![]).expect("single term");
        c.props.cohomology = Some((n, n));
        c
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn props(&self) -> Props {
        self.props
    }

    /// Overrides the recorded properties; callers vouch for their truth.
    pub fn with_props(mut self, props: Props) -> Self {
        self.props = props;
        self
    }

    pub fn term(&self, n: i64) -> Result<Module<F>> {
        if !self.props.in_support(n) {
            return Ok(Module::zero(self.algebra.clone()));
        }
        if let Some(t) = self.terms.lock().expect("term cache").get(&n) {
            return Ok(t.clone());
        }
        let t = self.source.term(n)?;
        self.terms.lock().expect("term cache").insert(n, t.clone());
        Ok(t)
    }

    pub fn dim(&self, n: i64) -> Result<usize> {
        Ok(self.term(n)?.dim())
    }

    pub fn diff(&self, n: i64) -> Result<Matrix<F>> {
        if !self.props.in_support(n) || !self.props.in_support(n + 1) {
            return Ok(Matrix::zeros(self.dim(n)?, self.dim(n + 1)?));
        }
        if let Some(d) = self.diffs.lock().expect("diff cache").get(&n) {
            return Ok(d.clone());
        }
        let d = self.source.diff(n)?;
        self.diffs.lock().expect("diff cache").insert(n, d.clone());
        Ok(d)
    }

    pub fn diff_hom(&self, n: i64) -> Result<ModuleHom<F>> {
        Ok(ModuleHom::new_unchecked(self.term(n)?, self.term(n + 1)?, self.diff(n)?))
    }

    pub fn check_d_squared(&self, lo: i64, hi: i64) -> Result<()> {
        for n in lo..hi {
            if !self.diff(n)?.matmul(&self.diff(n + 1)?).is_zero() {
                return Err(Error::InvalidComplex(format!("d∘d ≠ 0 at degree {n}")));
            }
        }
        Ok(())
    }

    /// Cocycles `Z^n` as a row basis of `X^n`.
    pub fn cocycle_basis(&self, n: i64) -> Result<Matrix<F>> {
        Ok(self.diff(n)?.left_kernel())
    }

    /// `Z^n` as a submodule of `X^n`, with its inclusion.
    pub fn cocycles(&self, n: i64) -> Result<(Module<F>, ModuleHom<F>)> {
        self.term(n)?.submodule(&self.cocycle_basis(n)?)
    }

    /// `H^n = Z^n / B^n` with the projection from `Z^n`.
    pub fn cohomology(&self, n: i64) -> Result<(Module<F>, ModuleHom<F>)> {
        let (z, inc) = self.cocycles(n)?;
        let b = self.diff(n - 1)?;
        let frame = crate::exactla::Frame::new(inc.matrix().clone());
        let b_in_z = match frame {
            Some(f) => f.coords_matrix(&b.row_space()).ok_or_else(|| {
                Error::InvalidComplex(format!("image of d^{} is not inside the cocycles", n - 1))
            })?,
            None => Matrix::zeros(0, 0),
        };
        Ok(z.quotient(&b_in_z))
    }

    pub fn cohomology_dim(&self, n: i64) -> Result<usize> {
        let d = self.dim(n)?;
        let r_out = self.diff(n)?.rank();
        let r_in = self.diff(n - 1)?.rank();
        Ok(d - r_out - r_in)
    }

    pub fn is_acyclic(&self, lo: i64, hi: i64) -> Result<bool> {
        for n in lo..=hi {
            if self.cohomology_dim(n)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn dims(&self, lo: i64, hi: i64) -> Result<Vec<usize>> {
        (lo..=hi).map(|n| self.dim(n)).collect()
    }

    /// `Σ^k X`: `(Σ^k X)^n = X^{n+k}` with differential `(-1)^k d`.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        let props = self.props.shifted(k);
        Self::from_source(self.algebra.clone(), Arc::new(Shift { inner: self.clone(), k }), props)
    }

    /// Brutal truncation keeping degrees in `[lo, hi]` (either side optional).
    pub fn truncate(&self, lo: Option<i64>, hi: Option<i64>) -> Self {
        let s = self.props.support;
        let new_lo = match (s.0, lo) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        let new_hi = match (s.1, hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let props = Props { support: (new_lo, new_hi), injective_terms: self.props.injective_terms, cohomology: None };
        Self::from_source(self.algebra.clone(), Arc::new(Restrict { inner: self.clone() }), props)
    }

    /// `σ^{≥n}`: terms below `n` replaced by zero.
    pub fn truncate_geq(&self, n: i64) -> Self {
        self.truncate(Some(n), None)
    }

    pub fn truncate_leq(&self, n: i64) -> Self {
        self.truncate(None, Some(n))
    }

    /// Materializes degrees `[lo, hi]` into an explicit (brutally truncated) complex.
    pub fn window(&self, lo: i64, hi: i64) -> Result<Self> {
        let terms = (lo..=hi).map(|n| self.term(n)).collect::<Result<Vec<_>>>()?;
        let diffs = (lo..hi).map(|n| self.diff(n)).collect::<Result<Vec<_>>>()?;
        let mut c = Self::explicit(self.algebra.clone(), lo, terms, diffs)?;
        c.props.injective_terms = self.props.injective_terms;
        Ok(c)
    }

    pub fn direct_sum(parts: &[ChainComplex<F>]) -> Result<Self> {
        let algebra = parts.first().ok_or_else(|| Error::InvalidComplex("empty direct sum".into()))?.algebra.clone();
        for p in parts {
            ensure_same(&algebra, &p.algebra)?;
        }
        let lo = parts.iter().map(|p| p.props.support.0).try_fold(i64::MAX, |acc, x| x.map(|x| acc.min(x)));
        let hi = parts.iter().map(|p| p.props.support.1).try_fold(i64::MIN, |acc, x| x.map(|x| acc.max(x)));
        let cohomology = parts.iter().try_fold(None::<(i64, i64)>, |acc, p| {
            let (a, b) = p.props.cohomology?;
            Some(match acc {
                _ if a > b => acc,
                None => Some((a, b)),
                Some((c, d)) => Some((c.min(a), d.max(b))),
            })
        });
        let props = Props {
            support: (lo, hi),
            injective_terms: parts.iter().all(|p| p.props.injective_terms),
            cohomology: cohomology.map(|c| c.unwrap_or((1, 0))),
        };
        Ok(Self::from_source(algebra, Arc::new(Sum { parts: parts.to_vec() }), props))
    }
}

struct Shift<F: Field> {
    inner: ChainComplex<F>,
    k: i64,
}

impl<F: Field> ComplexSource<F> for Shift<F> {
    fn term(&self, n: i64) -> Result<Module<F>> {
        self.inner.term(n + self.k)
    }

    fn diff(&self, n: i64) -> Result<Matrix<F>> {
        let d = self.inner.diff(n + self.k)?;
        Ok(if self.k % 2 == 0 { d } else { d.neg() })
    }
}

struct Restrict<F: Field> {
    inner: ChainComplex<F>,
}

impl<F: Field> ComplexSource<F> for Restrict<F> {
    fn term(&self, n: i64) -> Result<Module<F>> {
        self.inner.term(n)
    }

    fn diff(&self, n: i64) -> Result<Matrix<F>> {
        self.inner.diff(n)
    }
}

struct Sum<F: Field> {
    parts: Vec<ChainComplex<F>>,
}

impl<F: Field> ComplexSource<F> for Sum<F> {
    fn term(&self, n: i64) -> Result<Module<F>> {
        let ts = self.parts.iter().map(|p| p.term(n)).collect::<Result<Vec<_>>>()?;
        Ok(Module::direct_sum_of(self.parts[0].algebra(), &ts))
    }

    fn diff(&self, n: i64) -> Result<Matrix<F>> {
        let ds = self.parts.iter().map(|p| p.diff(n)).collect::<Result<Vec<_>>>()?;
        let refs: Vec<&Matrix<F>> = ds.iter().collect();
        Ok(Matrix::block_diag(&refs))
    }
}
