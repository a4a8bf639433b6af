//! Splitting a bounded complex of injectives into a homotopically minimal part and a
//! contractible part.

use rand::Rng;

use crate::complexes::{ChainComplex, ChainMap, Props};
use crate::error::{Error, Result};
use crate::exactla::{Field, Frame, Matrix, RowSpace};
use crate::modrep::{essential_closure, is_injective, solve_hom, HomConstraints, Module, ModuleHom};

#[derive(Clone)]
pub struct MinimalDecomposition<F: Field> {
    pub window: (i64, i64),
    /// `X'`, with `Z^n X' -> X'^n` an injective envelope in every degree.
    pub minimal: ChainComplex<F>,
    /// `X''`, a direct sum of complexes `V --id--> V`.
    pub contractible: ChainComplex<F>,
    /// `X -> X' ⊕ X''`.
    pub to_sum: ChainMap<F>,
    /// `X' ⊕ X'' -> X`.
    pub from_sum: ChainMap<F>,
    /// Row bases of `X'^n` and `X''^n` inside `X^n`, indexed from `window.0`.
    pub minimal_bases: Vec<Matrix<F>>,
    pub contractible_bases: Vec<Matrix<F>>,
}

impl<F: Field> MinimalDecomposition<F> {
    /// `X' -> X` in degree `n`.
    pub fn minimal_inclusion(&self, n: i64) -> Matrix<F> {
        self.minimal_bases[(n - self.window.0) as usize].clone()
    }

    /// `X -> X'` in degree `n`.
    pub fn minimal_projection(&self, n: i64) -> Result<Matrix<F>> {
        let d = self.minimal_bases[(n - self.window.0) as usize].rows();
        Ok(self.to_sum.component(n)?.block(0, 0, self.to_sum.source().dim(n)?, d))
    }
}

/// Picks a solution: the particular one, or a random point of the affine solution space.
fn choose<F: Field, R: Rng>(m: &Module<F>, n: &Module<F>, c: &HomConstraints<F>, rng: &mut Option<R>) -> Result<Matrix<F>> {
    let sol = solve_hom(m, n, c)?.ok_or_else(|| Error::InternalConsistency("retraction onto an injective summand does not exist".into()))?;
    let mut x = sol.particular;
    if let Some(rng) = rng.as_mut() {
        for h in &sol.homogeneous {
            x.add_scaled(&F::sample(rng), h);
        }
    }
    Ok(x)
}

/// Whether `Z^n X -> X^n` is essential (hence an envelope, for injective terms) on `[lo, hi]`.
pub fn is_minimal<F: Field>(x: &ChainComplex<F>, lo: i64, hi: i64) -> Result<bool> {
    for n in lo..=hi {
        let z = RowSpace::from_matrix(&x.cocycle_basis(n)?);
        let soc = x.term(n)?.socle_basis()?;
        if !(0..soc.rows()).all(|r| z.contains(soc.row(r))) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn minimal_decomposition<F: Field>(x: &ChainComplex<F>, lo: i64, hi: i64) -> Result<MinimalDecomposition<F>> {
    decompose(x, lo, hi, None::<rand::rngs::ThreadRng>)
}

/// As [`minimal_decomposition`] but with randomly chosen complements, for testing uniqueness.
pub fn minimal_decomposition_random<F: Field, R: Rng>(x: &ChainComplex<F>, lo: i64, hi: i64, rng: R) -> Result<MinimalDecomposition<F>> {
    decompose(x, lo, hi, Some(rng))
}

fn decompose<F: Field, R: Rng>(x: &ChainComplex<F>, lo: i64, hi: i64, mut rng: Option<R>) -> Result<MinimalDecomposition<F>> {
    let s = x.props().support;
    if lo > hi || s.0.map_or(true, |a| a < lo) || s.1.map_or(true, |b| b > hi) {
        return Err(Error::InvalidComplex(format!("complex is not supported inside the window [{lo}, {hi}]")));
    }
    for n in lo..=hi {
        if !is_injective(&x.term(n)?)? {
            return Err(Error::NotInjective { degree: n });
        }
    }
    let len = (hi - lo + 1) as usize;
    // current row bases of the complement being processed, in original coordinates
    let mut cur: Vec<Matrix<F>> = (lo..=hi).map(|n| x.dim(n).map(Matrix::identity)).collect::<Result<_>>()?;
    let mut vs: Vec<Matrix<F>> = (lo..=hi).map(|n| x.dim(n).map(|d| Matrix::zeros(0, d))).collect::<Result<_>>()?;
    let mut ws = vs.clone();
    for i in 0..len {
        let n = lo + i as i64;
        let xn = x.term(n)?;
        let (cn, _) = xn.submodule(&cur[i])?;
        if i + 1 == len {
            break;
        }
        let (cn1, _) = x.term(n + 1)?.submodule(&cur[i + 1])?;
        let frame1 = Frame::new(cur[i + 1].clone());
        let img = cur[i].matmul(&x.diff(n)?);
        let dc = match &frame1 {
            Some(f) => f.coords_matrix(&img).ok_or_else(|| Error::InternalConsistency("differential left the complement".into()))?,
            None => Matrix::zeros(cur[i].rows(), 0),
        };
        let z = dc.left_kernel();
        let u = essential_closure(&cn, &z)?;
        if u.rows() == cn.dim() {
            continue;
        }
        let (um, _) = cn.submodule(&u)?;
        let r = choose(&cn, &um, &HomConstraints::images(u.clone(), Matrix::identity(u.rows())), &mut rng)?;
        let v = r.left_kernel();
        let w = v.matmul(&dc);
        let du = u.matmul(&dc);
        let (wm, _) = cn1.submodule(&w)?;
        let cons = Matrix::vstack(&[&w, &du]);
        let target = Matrix::vstack(&[&Matrix::identity(w.rows()), &Matrix::zeros(du.rows(), w.rows())]);
        let pi = choose(&cn1, &wm, &HomConstraints::images(cons, target), &mut rng)?;
        let keep = pi.left_kernel();
        vs[i] = v.matmul(&cur[i]);
        ws[i + 1] = w.matmul(&cur[i + 1]);
        cur[i + 1] = keep.matmul(&cur[i + 1]);
        cur[i] = u.matmul(&cur[i]);
    }

    let contractible_bases: Vec<Matrix<F>> = (0..len).map(|i| Matrix::vstack(&[&vs[i], &ws[i]])).collect();
    let minimal = sub_complex(x, lo, &cur)?;
    let contractible = sub_complex(x, lo, &contractible_bases)?;
    let minimal = minimal.with_props(Props { support: (Some(lo), Some(hi)), injective_terms: true, cohomology: None });
    let contractible =
        contractible.with_props(Props { support: (Some(lo), Some(hi)), injective_terms: true, cohomology: Some((1, 0)) });
    let sum = ChainComplex::direct_sum(&[minimal.clone(), contractible.clone()])?;
    let mut back = Vec::new();
    let mut forth = Vec::new();
    for i in 0..len {
        let p = Matrix::vstack(&[&cur[i], &contractible_bases[i]]);
        let inv = p.inverse().ok_or_else(|| Error::InternalConsistency(format!("summands do not span degree {}", lo + i as i64)))?;
        back.push(p);
        forth.push(inv);
    }
    let to_sum = ChainMap::explicit(x.clone(), sum.clone(), lo, forth)?;
    let from_sum = ChainMap::explicit(sum, x.clone(), lo, back)?;
    Ok(MinimalDecomposition {
        window: (lo, hi),
        minimal,
        contractible,
        to_sum,
        from_sum,
        minimal_bases: cur,
        contractible_bases,
    })
}

/// The subcomplex spanned degreewise by the rows of `bases` (which must be d-stable).
fn sub_complex<F: Field>(x: &ChainComplex<F>, lo: i64, bases: &[Matrix<F>]) -> Result<ChainComplex<F>> {
    let mut terms = Vec::new();
    for (i, b) in bases.iter().enumerate() {
        terms.push(x.term(lo + i as i64)?.submodule(b)?.0);
    }
    let mut diffs = Vec::new();
    for i in 0..bases.len().saturating_sub(1) {
        let img = bases[i].matmul(&x.diff(lo + i as i64)?);
        let d = match Frame::new(bases[i + 1].clone()) {
            Some(f) => f.coords_matrix(&img).ok_or_else(|| Error::InternalConsistency("summand is not a subcomplex".into()))?,
            None => Matrix::zeros(bases[i].rows(), 0),
        };
        diffs.push(d);
    }
    ChainComplex::explicit(x.algebra().clone(), lo, terms, diffs)
}

/// Degreewise `X' -> X -> Y'` for two decompositions of the same complex.
pub fn comparison<F: Field>(a: &MinimalDecomposition<F>, b: &MinimalDecomposition<F>, n: i64) -> Result<ModuleHom<F>> {
    let m = a.minimal_inclusion(n).matmul(&b.minimal_projection(n)?);
    Ok(ModuleHom::new_unchecked(a.minimal.term(n)?, b.minimal.term(n)?, m))
}
