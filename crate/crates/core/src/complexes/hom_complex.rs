//! The complex of vector spaces `Hom(X, Y)` with `Hom(X, Y)^m = ⊕_p Hom_Λ(X^p, Y^{p+m})`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::complexes::{ChainComplex, ChainMap, Homotopy};
use crate::error::{Error, Result};
use crate::exactla::{Field, Frame, Matrix, RowSpace};
use crate::modrep::{hom_basis, is_self_injective};

/// Which components `p` enter `Hom(X, Y)^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomWindow {
    /// Determined from a bounded argument; exact.
    Auto,
    /// `p` in `[lo, hi]` for every `m`; exact when `X` vanishes outside `[lo, hi]`.
    PRange(i64, i64),
    /// `Hom(σ^{≥a} X, σ^{≤b} Y)`: `p ≥ a` and `p + m ≤ b`.
    Truncated { a: i64, b: i64 },
}

struct HomSpace<F> {
    basis: Vec<Matrix<F>>,
    frame: Option<Frame<F>>,
}

pub struct HomComplex<F: Field> {
    x: ChainComplex<F>,
    y: ChainComplex<F>,
    window: HomWindow,
    spaces: Mutex<HashMap<(i64, i64), Arc<HomSpace<F>>>>,
}

impl<F: Field> HomComplex<F> {
    pub fn new(x: &ChainComplex<F>, y: &ChainComplex<F>, window: HomWindow) -> Result<Self> {
        crate::algebra::ensure_same(x.algebra(), y.algebra())?;
        if window == HomWindow::Auto && !(x.props().is_bounded() || y.props().is_bounded()) {
            return Err(Error::WindowExhausted("Hom complex of two unbounded complexes needs an explicit p-range".into()));
        }
        Ok(HomComplex { x: x.clone(), y: y.clone(), window, spaces: Mutex::new(HashMap::new()) })
    }

    pub fn window(&self) -> HomWindow {
        self.window
    }

    /// Inclusive range of `p` contributing to degree `m` (empty when `lo > hi`).
    pub fn p_range(&self, m: i64) -> (i64, i64) {
        let (xs, ys) = (self.x.props().support, self.y.props().support);
        let (mut lo, mut hi) = match self.window {
            HomWindow::PRange(lo, hi) => (lo, hi),
            HomWindow::Truncated { a, b } => (a, b - m),
            HomWindow::Auto => (i64::MIN / 4, i64::MAX / 4),
        };
        if let Some(a) = xs.0 {
            lo = lo.max(a);
        }
        if let Some(b) = xs.1 {
            hi = hi.min(b);
        }
        if let Some(a) = ys.0 {
            lo = lo.max(a - m);
        }
        if let Some(b) = ys.1 {
            hi = hi.min(b - m);
        }
        (lo, hi)
    }

    fn space(&self, p: i64, q: i64) -> Result<Arc<HomSpace<F>>> {
        if let Some(s) = self.spaces.lock().expect("hom cache").get(&(p, q)) {
            return Ok(s.clone());
        }
        let (xp, yq) = (self.x.term(p)?, self.y.term(q)?);
        let basis: Vec<Matrix<F>> = hom_basis(&xp, &yq)?.into_iter().map(|h| h.matrix().clone()).collect();
        let frame = if basis.is_empty() {
            None
        } else {
            let rows: Vec<Vec<F>> = basis.iter().map(|b| b.flatten()).collect();
            Frame::new(Matrix::from_rows(&rows, xp.dim() * yq.dim()))
        };
        let s = Arc::new(HomSpace { basis, frame });
        self.spaces.lock().expect("hom cache").insert((p, q), s.clone());
        Ok(s)
    }

    /// Contributing blocks in degree `m`: `(p, offset, dim Hom(X^p, Y^{p+m}))`.
    fn blocks(&self, m: i64) -> Result<Vec<(i64, usize, Arc<HomSpace<F>>)>> {
        let (lo, hi) = self.p_range(m);
        let mut out = Vec::new();
        let mut offset = 0;
        for p in lo..=hi {
            if self.x.dim(p)? == 0 || self.y.dim(p + m)? == 0 {
                continue;
            }
            let s = self.space(p, p + m)?;
            if s.basis.is_empty() {
                continue;
            }
            let len = s.basis.len();
            out.push((p, offset, s));
            offset += len;
        }
        Ok(out)
    }

    pub fn dim(&self, m: i64) -> Result<usize> {
        Ok(self.blocks(m)?.iter().map(|(_, _, s)| s.basis.len()).sum())
    }

    /// Expands a degree-`m` element into its components `p -> (X^p -> Y^{p+m})`.
    pub fn to_maps(&self, m: i64, v: &[F]) -> Result<BTreeMap<i64, Matrix<F>>> {
        let mut out = BTreeMap::new();
        for (p, off, s) in self.blocks(m)? {
            let mut acc = Matrix::zeros(self.x.dim(p)?, self.y.dim(p + m)?);
            for (k, b) in s.basis.iter().enumerate() {
                if !v[off + k].is_zero() {
                    acc.add_scaled(&v[off + k], b);
                }
            }
            out.insert(p, acc);
        }
        Ok(out)
    }

    /// Coordinates of a family of module maps; components outside the window are ignored.
    pub fn from_maps(&self, m: i64, maps: &BTreeMap<i64, Matrix<F>>) -> Result<Vec<F>> {
        let blocks = self.blocks(m)?;
        let total = blocks.iter().map(|(_, _, s)| s.basis.len()).sum();
        let mut v = vec![F::zero(); total];
        for (p, off, s) in blocks {
            let Some(f) = maps.get(&p) else { continue };
            let frame = s.frame.as_ref().expect("nonempty block");
            let c = frame
                .coords(&f.flatten())
                .ok_or_else(|| Error::InvalidHom(format!("component {p} is not a module map")))?;
            v[off..off + c.len()].clone_from_slice(&c);
        }
        Ok(v)
    }

    /// The degree-0 element of a chain map.
    pub fn chain_map_element(&self, f: &ChainMap<F>) -> Result<Vec<F>> {
        let (lo, hi) = self.p_range(0);
        let mut maps = BTreeMap::new();
        for (p, _, _) in self.blocks(0)? {
            if p >= lo && p <= hi {
                maps.insert(p, f.component(p)?);
            }
        }
        self.from_maps(0, &maps)
    }

    /// `d^m` as a `dim(m) × dim(m+1)` matrix: `(df)^p = f^p d_Y − (−1)^m d_X f^{p+1}`.
    pub fn differential(&self, m: i64) -> Result<Matrix<F>> {
        let src = self.blocks(m)?;
        let tgt = self.blocks(m + 1)?;
        let rows: usize = src.iter().map(|(_, _, s)| s.basis.len()).sum();
        let cols: usize = tgt.iter().map(|(_, _, s)| s.basis.len()).sum();
        let mut d: Matrix<F> = Matrix::zeros(rows, cols);
        let tgt_at: HashMap<i64, (usize, Arc<HomSpace<F>>)> = tgt.into_iter().map(|(p, o, s)| (p, (o, s))).collect();
        let sign = if m % 2 == 0 { -F::one() } else { F::one() };
        for (p, off, s) in &src {
            let post = self.y.diff(p + m)?;
            let pre = if tgt_at.contains_key(&(p - 1)) { Some(self.x.diff(p - 1)?) } else { None };
            for (k, f) in s.basis.iter().enumerate() {
                if let Some((o, t)) = tgt_at.get(p) {
                    let g = f.matmul(&post);
                    let c = t.frame.as_ref().expect("block").coords(&g.flatten()).ok_or_else(|| {
                        Error::InternalConsistency("composite with d_Y left the Hom space".into())
                    })?;
                    for (j, x) in c.into_iter().enumerate() {
                        d[(off + k, o + j)] = d[(off + k, o + j)].clone() + x;
                    }
                }
                if let (Some(pre), Some((o, t))) = (&pre, tgt_at.get(&(p - 1))) {
                    let g = pre.matmul(f).scale(&sign);
                    let c = t.frame.as_ref().expect("block").coords(&g.flatten()).ok_or_else(|| {
                        Error::InternalConsistency("composite with d_X left the Hom space".into())
                    })?;
                    for (j, x) in c.into_iter().enumerate() {
                        d[(off + k, o + j)] = d[(off + k, o + j)].clone() + x;
                    }
                }
            }
        }
        Ok(d)
    }

    pub fn cohomology_dim(&self, m: i64) -> Result<usize> {
        Ok(self.dim(m)? - self.differential(m)?.rank() - self.differential(m - 1)?.rank())
    }

    /// Cocycle representatives of a basis of `H^m`, with a frame for reading off classes.
    pub fn cohomology(&self, m: i64) -> Result<Cohomology<F>> {
        let dm = self.dim(m)?;
        let z = self.differential(m)?.left_kernel();
        let b = self.differential(m - 1)?.row_space();
        let mut space = RowSpace::from_matrix(&b);
        let mut stacked = b.row_vecs();
        let boundaries = stacked.len();
        let mut reps = Vec::new();
        for r in 0..z.rows() {
            if space.insert(z.row(r)) {
                stacked.push(z.row(r).to_vec());
                reps.push(z.row(r).to_vec());
            }
        }
        let frame = if stacked.is_empty() { None } else { Frame::new(Matrix::from_rows(&stacked, dm)) };
        Ok(Cohomology { degree: m, reps, boundaries, frame })
    }

    /// Some `s` of degree `m − 1` with `d s = v`, if any.
    pub fn preimage(&self, m: i64, v: &[F]) -> Result<Option<Vec<F>>> {
        let d = self.differential(m - 1)?;
        if d.rows() == 0 {
            return Ok(v.iter().all(|x| x.is_zero()).then(Vec::new));
        }
        Ok(d.solve_left(&Matrix::row_vector(v.to_vec()))?.map(|s| s.row(0).to_vec()))
    }

    /// The chain map `X -> Σ^m Y` represented by a degree-`m` cocycle, defined on the p-range.
    pub fn cocycle_to_chain_map(&self, m: i64, v: &[F]) -> Result<ChainMap<F>> {
        let maps = self.to_maps(m, v)?;
        let (lo, hi) = self.p_range(m);
        let target = self.y.shift(m);
        let (x, t) = (self.x.clone(), target.clone());
        ChainMap::from_fn(self.x.clone(), target, move |n| {
            if n < lo || n > hi {
                return Err(Error::DegreeUnavailable(n));
            }
            Ok(maps.get(&n).cloned().unwrap_or_else(|| Matrix::zeros(x.dim(n).unwrap_or(0), t.dim(n).unwrap_or(0))))
        })
    }
}

/// A basis of `H^m` of a Hom complex given by cocycle representatives.
pub struct Cohomology<F> {
    pub degree: i64,
    pub reps: Vec<Vec<F>>,
    boundaries: usize,
    frame: Option<Frame<F>>,
}

impl<F: Field> Cohomology<F> {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of the class of a cocycle in the basis `reps`.
    pub fn class_of(&self, v: &[F]) -> Option<Vec<F>> {
        match &self.frame {
            None => Some(Vec::new()),
            Some(f) => f.coords(v).map(|c| c[self.boundaries..].to_vec()),
        }
    }
}

/// Outcome of a null-homotopy test.
#[derive(Clone, Debug)]
pub enum NullHomotopy<F> {
    Witness(Homotopy<F>),
    /// Not null-homotopic; the window used is certified to decide the question.
    Refuted,
    /// No homotopy on the window, but the window does not certify a negative answer.
    WindowInsufficient(String),
}

impl<F> NullHomotopy<F> {
    pub fn is_witness(&self) -> bool {
        matches!(self, NullHomotopy::Witness(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, NullHomotopy::Refuted)
    }
}

/// A Hom-complex window whose `H^0` equals maps in the homotopy category, when the properties
/// recorded on `x` and `y` allow one:
/// - one side bounded: the finite exact range;
/// - `x` vanishing below `a`, exact above `a`, and `y` with injective terms: `[a, a + 1]`;
/// - both totally acyclic over a self-injective algebra: `[0, 1]`.
pub fn certified_window<F: Field>(x: &ChainComplex<F>, y: &ChainComplex<F>) -> Result<Option<HomWindow>> {
    let (px, py) = (x.props(), y.props());
    if px.is_bounded() || py.is_bounded() {
        return Ok(Some(HomWindow::Auto));
    }
    if let (Some(a), Some((lo, hi))) = (px.support.0, px.cohomology) {
        if py.injective_terms && (lo > hi || (lo >= a && hi <= a)) {
            return Ok(Some(HomWindow::Truncated { a, b: a + 1 }));
        }
    }
    if px.injective_terms && px.is_acyclic() && py.injective_terms && py.is_acyclic() && is_self_injective(x.algebra())? {
        return Ok(Some(HomWindow::Truncated { a: 0, b: 1 }));
    }
    Ok(None)
}

/// Decides whether `f` is null-homotopic. With `window = None` a certified window is chosen
/// from the recorded properties; a caller-supplied window `[a, b]` is used as a truncated
/// Hom complex and only certifies positive answers.
pub fn is_null_homotopic<F: Field>(f: &ChainMap<F>, window: Option<(i64, i64)>) -> Result<NullHomotopy<F>> {
    let (x, y) = (f.source(), f.target());
    let (hw, certified) = match window {
        Some((a, b)) => (HomWindow::Truncated { a, b }, false),
        None => match certified_window(x, y)? {
            Some(w) => (w, true),
            None => {
                return Ok(NullHomotopy::WindowInsufficient(
                    "no certified window for these complexes; supply one explicitly".into(),
                ))
            }
        },
    };
    let h = HomComplex::new(x, y, hw)?;
    let v = h.chain_map_element(f)?;
    match h.preimage(0, &v)? {
        Some(s) => {
            let components = h.to_maps(-1, &s)?;
            let (lo, hi) = h.p_range(0);
            let window = if lo <= hi { (lo, hi) } else { (0, -1) };
            Ok(NullHomotopy::Witness(Homotopy { window, components }))
        }
        None if certified => Ok(NullHomotopy::Refuted),
        None => Ok(NullHomotopy::WindowInsufficient(format!("no homotopy on the window {hw:?}"))),
    }
}

/// Whether `f` and `g` are homotopic (certified as for [`is_null_homotopic`]).
pub fn are_homotopic<F: Field>(f: &ChainMap<F>, g: &ChainMap<F>, window: Option<(i64, i64)>) -> Result<NullHomotopy<F>> {
    is_null_homotopic(&f.sub(g)?, window)
}

/// Acyclic on `[lo, hi]`, with `Hom(E, X)` and `Hom(X, E)` acyclic there too, for the
/// injective cogenerator `E`; every injective is a summand of a power of `E`.
pub fn is_totally_acyclic<F: Field>(x: &ChainComplex<F>, lo: i64, hi: i64) -> Result<bool> {
    if !x.is_acyclic(lo, hi)? {
        return Ok(false);
    }
    for n in lo..=hi {
        if !crate::modrep::is_injective(&x.term(n)?)? {
            return Ok(false);
        }
    }
    let e = ChainComplex::concentrated(&crate::modrep::Module::cogenerator(x.algebra().clone()), 0);
    let from_e = HomComplex::new(&e, x, HomWindow::Auto)?;
    let into_e = HomComplex::new(x, &e, HomWindow::Auto)?;
    for n in lo..=hi {
        if from_e.cohomology_dim(n)? != 0 || into_e.cohomology_dim(-n)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}
