//! Hom-spaces between modules.
//!
//! A homomorphism out of `M` is determined by the images of a set of module generators
//! ("seeds"). Spinning the seeds under the algebra generators gives a basis of `M` made of
//! words; every product that falls back into the span of earlier words is a relation, and
//! the relations are the only equations the seed images must satisfy. This keeps the
//! unknowns at `#seeds · dim N` instead of `dim M · dim N`.

use crate::algebra::ensure_same;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, RowSpace};
use crate::modrep::{Module, ModuleHom};

#[derive(Clone, Debug)]
pub(crate) struct Spin<F> {
    /// Seed number of each word.
    seed_of: Vec<usize>,
    /// `(parent word, generator)` for non-seed words.
    parent: Vec<Option<(usize, usize)>>,
    seeds: usize,
    /// Rows are the words.
    words: Matrix<F>,
    /// Inverse of `words`: row `a` holds the word coordinates of the standard vector `e_a`.
    inv: Matrix<F>,
    /// `(word, generator, word coordinates of word * generator)`.
    relations: Vec<(usize, usize, Vec<F>)>,
}

impl<F: Field> Spin<F> {
    pub(crate) fn compute(m: &Module<F>) -> Self {
        let d = m.dim();
        let gens = m.algebra().generators().to_vec();
        let mut space = RowSpace::new(d);
        let mut words: Vec<Vec<F>> = Vec::new();
        let mut seed_of = Vec::new();
        let mut parent = Vec::new();
        let mut pending = Vec::new();
        let mut seeds = 0;
        for a in 0..d {
            let mut e = vec![F::zero(); d];
            e[a] = F::one();
            if !space.insert(&e) {
                continue;
            }
            let s = seeds;
            seeds += 1;
            let mut q = words.len();
            words.push(e);
            seed_of.push(s);
            parent.push(None);
            while q < words.len() {
                for &g in &gens {
                    let v = m.act(g).apply(&words[q]);
                    if space.insert(&v) {
                        words.push(v);
                        seed_of.push(s);
                        parent.push(Some((q, g)));
                    } else {
                        pending.push((q, g));
                    }
                }
                q += 1;
            }
        }
        let words = Matrix::from_rows(&words, d);
        let inv = words.inverse().expect("spun words form a basis");
        let relations = pending
            .into_iter()
            .map(|(q, g)| {
                let v = m.act(g).apply(words.row(q));
                (q, g, inv.apply(&v))
            })
            .collect();
        Spin { seed_of, parent, seeds, words, inv, relations }
    }

    pub(crate) fn seeds(&self) -> usize {
        self.seeds
    }

    /// For each word, the matrix sending the image of its seed to the image of the word.
    fn word_maps(&self, n: &Module<F>) -> Vec<Matrix<F>> {
        let mut maps: Vec<Matrix<F>> = Vec::with_capacity(self.parent.len());
        for p in &self.parent {
            let w = match p {
                None => Matrix::identity(n.dim()),
                Some((q, g)) => maps[*q].matmul(n.act(*g)),
            };
            maps.push(w);
        }
        maps
    }
}

/// Affine solution set of a Hom problem: `particular + span(homogeneous)`.
#[derive(Clone, Debug)]
pub struct HomSolution<F> {
    pub particular: Matrix<F>,
    pub homogeneous: Vec<Matrix<F>>,
}

/// Linear constraints on an unknown homomorphism `X: M -> N`.
#[derive(Clone, Debug, Default)]
pub struct HomConstraints<F> {
    /// `A · X = T`: prescribed images of the rows of `A`.
    pub left: Vec<(Matrix<F>, Matrix<F>)>,
    /// `X · B = T`: prescribed composites with maps out of `N`.
    pub right: Vec<(Matrix<F>, Matrix<F>)>,
}

impl<F: Field> HomConstraints<F> {
    pub fn none() -> Self {
        HomConstraints { left: Vec::new(), right: Vec::new() }
    }

    pub fn images(a: Matrix<F>, t: Matrix<F>) -> Self {
        HomConstraints { left: vec![(a, t)], right: Vec::new() }
    }

    pub fn composite(b: Matrix<F>, t: Matrix<F>) -> Self {
        HomConstraints { left: Vec::new(), right: vec![(b, t)] }
    }
}

/// All module maps `X: M -> N` satisfying the constraints, or `None` if there are none.
pub fn solve_hom<F: Field>(
    m: &Module<F>,
    n: &Module<F>,
    constraints: &HomConstraints<F>,
) -> Result<Option<HomSolution<F>>> {
    ensure_same(m.algebra(), n.algebra())?;
    let (dm, dn) = (m.dim(), n.dim());
    for (a, t) in &constraints.left {
        if a.cols() != dm || t.cols() != dn || a.rows() != t.rows() {
            return Err(Error::DimensionMismatch("left hom constraint has wrong shape".into()));
        }
    }
    for (b, t) in &constraints.right {
        if b.rows() != dn || t.rows() != dm || b.cols() != t.cols() {
            return Err(Error::DimensionMismatch("right hom constraint has wrong shape".into()));
        }
    }
    if dm == 0 || dn == 0 {
        let mut ok = constraints.left.iter().all(|(_, t)| t.is_zero());
        ok &= constraints.right.iter().all(|(_, t)| t.is_zero());
        return Ok(ok.then(|| HomSolution { particular: Matrix::zeros(dm, dn), homogeneous: vec![] }));
    }
    let spin = m.spin();
    let s = spin.seeds();
    let maps = spin.word_maps(n);
    let unknowns = s * dn;

    // Each equation block is `U · E = R` with `U` the concatenated seed images.
    let mut blocks: Vec<(Matrix<F>, Matrix<F>)> = Vec::new();
    let combine = |coeffs: &[F]| -> Matrix<F> {
        let mut e = Matrix::zeros(unknowns, dn);
        for (l, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sd = spin.seed_of[l];
            let mut part = e.block(sd * dn, 0, dn, dn);
            part.add_scaled(c, &maps[l]);
            e.set_block(sd * dn, 0, &part);
        }
        e
    };

    for (a, t) in &constraints.left {
        for r in 0..a.rows() {
            let coeffs = spin.inv.apply(a.row(r));
            blocks.push((combine(&coeffs), Matrix::row_vector(t.row(r).to_vec())));
        }
    }
    for (b, t) in &constraints.right {
        let wt = spin.words.matmul(t);
        for (l, w) in maps.iter().enumerate() {
            let mut e = Matrix::zeros(unknowns, b.cols());
            e.set_block(spin.seed_of[l] * dn, 0, &w.matmul(b));
            blocks.push((e, Matrix::row_vector(wt.row(l).to_vec())));
        }
    }
    for (q, g, coeffs) in &spin.relations {
        let mut e = combine(coeffs).neg();
        let sd = spin.seed_of[*q];
        let mut part = e.block(sd * dn, 0, dn, dn);
        part = part.add(&maps[*q].matmul(n.act(*g)));
        e.set_block(sd * dn, 0, &part);
        blocks.push((e, Matrix::zeros(1, dn)));
    }

    let (u0, kernel) = if blocks.is_empty() {
        (Matrix::zeros(unknowns, 1), Matrix::identity(unknowns))
    } else {
        let es: Vec<&Matrix<F>> = blocks.iter().map(|b| &b.0).collect();
        let rs: Vec<&Matrix<F>> = blocks.iter().map(|b| &b.1).collect();
        let g = Matrix::hstack(&es);
        let r = Matrix::hstack(&rs);
        match g.transpose().solve_affine(&r.transpose())? {
            None => return Ok(None),
            Some(sol) => sol,
        }
    };

    let assemble = |u: &[F]| -> Matrix<F> {
        let mut fw = Matrix::zeros(dm, dn);
        for (l, w) in maps.iter().enumerate() {
            let sd = spin.seed_of[l];
            let img = w.apply(&u[sd * dn..(sd + 1) * dn]);
            fw.row_mut(l).clone_from_slice(&img);
        }
        spin.inv.matmul(&fw)
    };
    let particular = assemble(&u0.flatten());
    let kt = kernel.transpose();
    let homogeneous = (0..kt.rows()).map(|k| assemble(kt.row(k))).collect();
    Ok(Some(HomSolution { particular, homogeneous }))
}

/// Basis of `Hom(M, N)`.
pub fn hom_basis<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<Vec<ModuleHom<F>>> {
    let sol = solve_hom(m, n, &HomConstraints::none())?.expect("the zero map always exists");
    Ok(sol
        .homogeneous
        .into_iter()
        .map(|x| ModuleHom::new_unchecked(m.clone(), n.clone(), x))
        .collect())
}

pub fn hom_dim<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<usize> {
    Ok(solve_hom(m, n, &HomConstraints::none())?.expect("zero map").homogeneous.len())
}

/// A module map `X: M -> N` with the given constraints, if one exists.
pub fn find_hom<F: Field>(
    m: &Module<F>,
    n: &Module<F>,
    constraints: &HomConstraints<F>,
) -> Result<Option<ModuleHom<F>>> {
    Ok(solve_hom(m, n, constraints)?.map(|s| ModuleHom::new_unchecked(m.clone(), n.clone(), s.particular)))
}
