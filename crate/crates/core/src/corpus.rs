//! Seeded generators for test corpora: random modules, short exact sequences and bounded
//! complexes. Everything is a deterministic function of the seed.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::complexes::ChainComplex;
use crate::error::Result;
use crate::exactla::{Field, Matrix};
use crate::modrep::{cosyzygy, injective_envelope, solve_hom, syzygy, HomConstraints, Module, ModuleHom, ShortExactSequence};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_rows<F: Field, R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix<F> {
    Matrix::from_fn(rows, cols, |_, _| F::sample(rng))
}

/// A subquotient of a small free module, of dimension in `1..=max_dim` when possible.
pub fn random_module<F: Field, R: Rng>(a: &Arc<Algebra<F>>, rng: &mut R, max_dim: usize) -> Result<Module<F>> {
    for _ in 0..32 {
        let ambient = if rng.gen_bool(0.5) {
            Module::free(a.clone(), rng.gen_range(1..=2))
        } else {
            Module::cogenerator(a.clone())
        };
        let g = rng.gen_range(1..=2);
        let gens = random_rows(rng, g, ambient.dim());
        let (sub, _) = ambient.generated(&gens);
        if sub.dim() == 0 {
            continue;
        }
        let m = if rng.gen_bool(0.5) {
            let rel = random_rows(rng, 1, sub.dim());
            let (_, inc) = sub.generated(&rel);
            sub.quotient(inc.matrix()).0
        } else {
            sub
        };
        if m.dim() > 0 && m.dim() <= max_dim {
            return Ok(m);
        }
    }
    Module::top(a.clone())
}

/// A fixed list of interesting modules followed by random ones, `count` in total.
pub fn module_corpus<F: Field>(a: &Arc<Algebra<F>>, count: usize, seed: u64) -> Result<Vec<Module<F>>> {
    let mut out = Vec::new();
    let top = Module::top(a.clone())?;
    out.push(top.clone());
    if let Ok(k) = Module::trivial(a.clone()) {
        if k != top {
            out.push(k);
        }
    }
    out.push(Module::regular(a.clone()));
    let (omega, _) = syzygy(&top)?;
    if omega.dim() > 0 {
        out.push(omega);
    }
    let (sigma, _) = cosyzygy(&top)?;
    if sigma.dim() > 0 {
        out.push(sigma);
    }
    out.push(top.direct_sum(&Module::regular(a.clone()))?);
    let mut r = rng(seed);
    while out.len() < count {
        out.push(random_module(a, &mut r, 8)?);
    }
    out.truncate(count);
    Ok(out)
}

/// `0 -> A -> M -> M/A -> 0` for a random module `M` and a random cyclic submodule `A`.
pub fn random_ses<F: Field, R: Rng>(a: &Arc<Algebra<F>>, rng: &mut R, max_dim: usize) -> Result<ShortExactSequence<F>> {
    let m = random_module(a, rng, max_dim)?;
    let g = rng.gen_range(1..=2);
    let gens = random_rows(rng, g, m.dim());
    let (_, inc) = m.generated(&gens);
    Ok(ShortExactSequence::from_inclusion(inc))
}

/// An injective module generated as the envelope of a random semisimple submodule of the
/// cogenerator; a finite sum of indecomposable injective summands of it.
pub fn random_injective_summand<F: Field, R: Rng>(a: &Arc<Algebra<F>>, rng: &mut R) -> Result<Module<F>> {
    let e = Module::cogenerator(a.clone());
    let soc = e.socle_basis()?;
    for _ in 0..16 {
        let c = random_rows::<F, R>(rng, 1, soc.rows());
        let v = c.matmul(&soc);
        if !v.is_zero() {
            let (s, _) = e.generated(&v);
            return Ok(injective_envelope(&s)?.0);
        }
    }
    Ok(e)
}

/// A random map `M -> N` killing the rows of `kill`: a random sub-combination of a basis of
/// such maps, so that non-generic ranks occur.
pub fn random_hom_killing<F: Field, R: Rng>(m: &Module<F>, n: &Module<F>, kill: &Matrix<F>, rng: &mut R) -> Result<Matrix<F>> {
    let cons = if kill.rows() == 0 {
        HomConstraints::none()
    } else {
        HomConstraints::images(kill.clone(), Matrix::zeros(kill.rows(), n.dim()))
    };
    let mut x = Matrix::zeros(m.dim(), n.dim());
    if let Some(sol) = solve_hom(m, n, &cons)? {
        let dense = rng.gen_bool(0.5);
        for h in &sol.homogeneous {
            if dense || rng.gen_bool(0.5) {
                x.add_scaled(&F::sample(rng), h);
            }
        }
    }
    Ok(x)
}

/// A complex with the given terms in degrees `lo..` and random differentials with `d∘d = 0`.
pub fn random_complex_on<F: Field, R: Rng>(a: &Arc<Algebra<F>>, lo: i64, terms: Vec<Module<F>>, rng: &mut R) -> Result<ChainComplex<F>> {
    let mut diffs: Vec<Matrix<F>> = Vec::new();
    for i in 0..terms.len().saturating_sub(1) {
        let kill = match diffs.last() {
            Some(d) => d.row_space(),
            None => Matrix::zeros(0, terms[i].dim()),
        };
        diffs.push(random_hom_killing(&terms[i], &terms[i + 1], &kill, rng)?);
    }
    ChainComplex::explicit(a.clone(), lo, terms, diffs)
}

/// A bounded complex of injectives on `[lo, lo + len)` with terms of dimension at most `max_dim`.
pub fn random_injective_complex<F: Field, R: Rng>(
    a: &Arc<Algebra<F>>,
    rng: &mut R,
    lo: i64,
    len: usize,
    max_dim: usize,
) -> Result<ChainComplex<F>> {
    let mut terms = Vec::new();
    for _ in 0..len {
        let mut t = Module::zero(a.clone());
        for _ in 0..rng.gen_range(0..=3) {
            let s = random_injective_summand(a, rng)?;
            if t.dim() + s.dim() <= max_dim {
                t = t.direct_sum(&s)?;
            }
        }
        terms.push(t);
    }
    let mut c = random_complex_on(a, lo, terms, rng)?;
    let mut p = c.props();
    p.injective_terms = true;
    c = c.with_props(p);
    Ok(c)
}

/// A bounded complex of random modules on `[lo, lo + len)`.
pub fn random_bounded_complex<F: Field, R: Rng>(
    a: &Arc<Algebra<F>>,
    rng: &mut R,
    lo: i64,
    len: usize,
    max_dim: usize,
) -> Result<ChainComplex<F>> {
    let terms = (0..len)
        .map(|_| if rng.gen_bool(0.2) { Ok(Module::zero(a.clone())) } else { random_module(a, rng, max_dim) })
        .collect::<Result<Vec<_>>>()?;
    random_complex_on(a, lo, terms, rng)
}

/// A random module map `M -> N`.
pub fn random_hom<F: Field, R: Rng>(m: &Module<F>, n: &Module<F>, rng: &mut R) -> Result<ModuleHom<F>> {
    let x = random_hom_killing(m, n, &Matrix::zeros(0, m.dim()), rng)?;
    Ok(ModuleHom::new_unchecked(m.clone(), n.clone(), x))
}
