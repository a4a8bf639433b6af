//! Finite-dimensional associative algebras given by structure constants.

mod hopf;
mod presets;

use std::sync::{Arc, OnceLock};

pub use hopf::HopfDatum;
pub use presets::*;

use crate::error::{Error, Result};
use crate::exactla::{Field, Frame, Matrix, RowSpace};

/// Input description accepted by [`Algebra::new`].
#[derive(Clone, Debug)]
pub struct AlgebraSpec<F> {
    pub dim: usize,
    /// Products of basis elements: `(i, j, coefficients of b_i * b_j)`; omitted products are zero.
    pub mult: Vec<(usize, usize, Vec<F>)>,
    pub unit: Vec<F>,
    pub radical: Option<Vec<Vec<F>>>,
    pub hopf: Option<HopfDatum<F>>,
    pub labels: Option<Vec<String>>,
}

pub struct Algebra<F> {
    dim: usize,
    /// `table[(i * n + j) * n + k]` is the coefficient of `b_k` in `b_i * b_j`.
    table: Vec<F>,
    unit: Vec<F>,
    radical: Option<Matrix<F>>,
    hopf: Option<HopfDatum<F>>,
    labels: Option<Vec<String>>,
    generators: Vec<usize>,
    regular: Vec<Matrix<F>>,
    opposite: OnceLock<Arc<Algebra<F>>>,
    pub(crate) self_injective: OnceLock<bool>,
}

impl<F: Field> std::fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &F::name())
            .field("dim", &self.dim)
            .field("radical_dim", &self.radical.as_ref().map(|r| r.rows()))
            .field("hopf", &self.hopf.is_some())
            .finish()
    }
}

impl<F: Field> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.unit == other.unit && self.table == other.table
    }
}

impl<F: Field> Eq for Algebra<F> {}

impl<F: Field> Algebra<F> {
    /// Validates associativity, unit laws, the radical and any Hopf datum.
    pub fn new(spec: AlgebraSpec<F>) -> Result<Self> {
        let n = spec.dim;
        if spec.unit.len() != n {
            return Err(Error::DimensionMismatch(format!("unit has length {}, expected {n}", spec.unit.len())));
        }
        let mut table = vec![F::zero(); n * n * n];
        for (i, j, v) in spec.mult {
            if i >= n || j >= n || v.len() != n {
                return Err(Error::DimensionMismatch(format!("product entry ({i}, {j}) out of range")));
            }
            for (k, c) in v.into_iter().enumerate() {
                table[(i * n + j) * n + k] = c;
            }
        }
        Self::from_table(n, table, spec.unit, spec.radical, spec.hopf, spec.labels)
    }

    pub(crate) fn from_table(
        n: usize,
        table: Vec<F>,
        unit: Vec<F>,
        radical: Option<Vec<Vec<F>>>,
        hopf: Option<HopfDatum<F>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::DimensionMismatch(format!("{} labels for dimension {n}", l.len())));
            }
        }
        let mut a = Algebra {
            dim: n,
            table,
            unit,
            radical: None,
            hopf: None,
            labels,
            generators: Vec::new(),
            regular: Vec::new(),
            opposite: OnceLock::new(),
            self_injective: OnceLock::new(),
        };
        a.check_associative()?;
        a.check_unit()?;
        if let Some(rows) = radical {
            if rows.iter().any(|r| r.len() != n) {
                return Err(Error::DimensionMismatch("radical vector of wrong length".into()));
            }
            let m = Matrix::from_rows(&rows, n);
            if m.rank() != m.rows() {
                return Err(Error::RadicalNotIdeal("radical basis vectors are dependent".into()));
            }
            a.radical = Some(m);
            a.check_radical()?;
        }
        a.regular = (0..n).map(|i| a.right_mult_matrix(i)).collect();
        a.generators = a.find_generators();
        if let Some(h) = hopf {
            h.validate(&a)?;
            a.hopf = Some(h);
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn radical(&self) -> Option<&Matrix<F>> {
        self.radical.as_ref()
    }

    pub fn require_radical(&self) -> Result<&Matrix<F>> {
        self.radical.as_ref().ok_or(Error::MissingRadical)
    }

    pub fn hopf(&self) -> Option<&HopfDatum<F>> {
        self.hopf.as_ref()
    }

    /// The Hopf datum, required to be cocommutative.
    pub fn require_cocommutative_hopf(&self) -> Result<&HopfDatum<F>> {
        let h = self.hopf.as_ref().ok_or(Error::MissingHopf)?;
        if !h.is_cocommutative() {
            return Err(Error::NotCocommutative);
        }
        Ok(h)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("b{i}"),
        }
    }

    /// Basis indices generating the algebra (as a unital algebra).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn table(&self) -> &[F] {
        &self.table
    }

    #[inline]
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &F {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<F> {
        let n = self.dim;
        self.table[(i * n + j) * n..(i * n + j + 1) * n].to_vec()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[i] = F::one();
        v
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let c = a[i].clone() * b[j].clone();
                for k in 0..n {
                    let t = self.coeff(i, j, k);
                    if !t.is_zero() {
                        out[k] = out[k].clone() + c.clone() * t.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix of `x -> x * b_i` on row vectors, i.e. the regular right action.
    pub fn right_mult_matrix(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, l| self.coeff(k, i, l).clone())
    }

    /// Matrix of `x -> b_i * x`.
    pub fn left_mult_matrix(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, l| self.coeff(i, k, l).clone())
    }

    /// Action matrices of the regular right module.
    pub fn regular_action(&self) -> &[Matrix<F>] {
        &self.regular
    }

    /// The `n^2 x n` matrix sending `b_i (x) b_j` to `b_i * b_j`.
    pub fn mult_matrix(&self) -> Matrix<F> {
        let n = self.dim;
        Matrix::new(n * n, n, self.table.clone())
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let left = self.mul(&ij, &self.basis_vector(k));
                    let jk = self.basis_product(j, k);
                    let right = self.mul(&self.basis_vector(i), &jk);
                    if left != right {
                        return Err(Error::Associativity { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::UnitLaw(i));
            }
        }
        Ok(())
    }

    fn check_radical(&self) -> Result<()> {
        let rad = self.radical.as_ref().expect("radical set");
        let space = RowSpace::from_matrix(rad);
        for r in 0..rad.rows() {
            for i in 0..self.dim {
                let e = self.basis_vector(i);
                if !space.contains(&self.mul(rad.row(r), &e)) {
                    return Err(Error::RadicalNotIdeal(format!("radical vector {r} times b{i} leaves the radical")));
                }
                if !space.contains(&self.mul(&e, rad.row(r))) {
                    return Err(Error::RadicalNotIdeal(format!("b{i} times radical vector {r} leaves the radical")));
                }
            }
        }
        // N^(k+1) = N^k * N; nilpotent iff the chain hits zero within dim steps
        let mut power = rad.clone();
        for _ in 0..=self.dim {
            if power.rows() == 0 {
                return Ok(());
            }
            let mut next = RowSpace::new(self.dim);
            for p in 0..power.rows() {
                for r in 0..rad.rows() {
                    next.insert(&self.mul(power.row(p), rad.row(r)));
                }
            }
            power = next.basis();
        }
        Err(Error::RadicalNotNilpotent)
    }

    /// Greedy generating set: ascending basis indices not already in the generated subalgebra.
    fn find_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.generated(&gens);
        for i in 0..self.dim {
            if span.dim() == self.dim {
                break;
            }
            if !span.contains(&self.basis_vector(i)) {
                gens.push(i);
                span = self.generated(&gens);
            }
        }
        gens
    }

    fn generated(&self, gens: &[usize]) -> RowSpace<F> {
        let mut span = RowSpace::new(self.dim);
        let mut frontier = vec![self.unit.clone()];
        span.insert(&self.unit);
        while let Some(v) = frontier.pop() {
            for &g in gens {
                let w = self.regular[g].apply(&v);
                if span.insert(&w) {
                    frontier.push(w);
                }
            }
        }
        span
    }

    /// Opposite algebra `b_i o b_j = b_j b_i`, cached. The radical carries over, as does a
    /// cocommutative Hopf datum.
    pub fn opposite(&self) -> Arc<Algebra<F>> {
        self.opposite
            .get_or_init(|| {
                let n = self.dim;
                let table = Matrix::from_fn(n * n, n, |r, k| self.coeff(r % n, r / n, k).clone()).into_data();
                let radical = self.radical.as_ref().map(|r| r.row_vecs());
                let hopf = self.hopf.as_ref().filter(|h| h.is_cocommutative()).cloned();
                let labels = self.labels.clone();
                Arc::new(
                    Algebra::from_table(n, table, self.unit.clone(), radical, hopf, labels)
                        .expect("opposite of a valid algebra is valid"),
                )
            })
            .clone()
    }

    /// The linear form `a -> k` giving the trivial module: the counit when a Hopf datum is
    /// present, otherwise the projection onto `Λ/J` when that quotient is one-dimensional.
    pub fn augmentation(&self) -> Result<Vec<F>> {
        if let Some(h) = &self.hopf {
            return Ok(h.counit().to_vec());
        }
        let rad = self
            .radical
            .as_ref()
            .ok_or_else(|| Error::NoAugmentation("no Hopf datum and no radical".into()))?;
        if rad.rows() + 1 != self.dim {
            return Err(Error::NoAugmentation(format!(
                "Λ/J has dimension {}, not 1",
                self.dim - rad.rows()
            )));
        }
        let frame = Frame::new(Matrix::vstack(&[&Matrix::row_vector(self.unit.clone()), rad]))
            .expect("unit lies outside a nilpotent ideal");
        Ok((0..self.dim)
            .map(|i| frame.coords(&self.basis_vector(i)).expect("spans")[0].clone())
            .collect())
    }
}

/// True when both handles denote the same algebra.
pub fn same_algebra<F: Field>(a: &Arc<Algebra<F>>, b: &Arc<Algebra<F>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn ensure_same<F: Field>(a: &Arc<Algebra<F>>, b: &Arc<Algebra<F>>) -> Result<()> {
    if same_algebra(a, b) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}
