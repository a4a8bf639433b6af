//! Subspaces of `F^n` represented by row bases.

use crate::exactla::{Field, Matrix};

/// A subspace kept in reduced row echelon form, supporting incremental growth.
#[derive(Clone, Debug)]
pub struct RowSpace<F> {
    ambient: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(ambient: usize) -> Self {
        RowSpace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_matrix(m: &Matrix<F>) -> Self {
        let mut s = Self::new(m.cols());
        for i in 0..m.rows() {
            s.insert(m.row(i));
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> Matrix<F> {
        Matrix::from_rows(&self.rows, self.ambient)
    }

    /// Residue of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if !c.is_zero() {
                for (x, y) in w.iter_mut().zip(r) {
                    if !y.is_zero() {
                        *x = x.clone() - c.clone() * y.clone();
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero");
        for x in w.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in self.rows.iter_mut() {
            let c = r[p].clone();
            if !c.is_zero() {
                for (x, y) in r.iter_mut().zip(&w) {
                    *x = x.clone() - c.clone() * y.clone();
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, w);
        true
    }
}

/// A fixed (not necessarily echelon) basis of a subspace with a coordinate map.
#[derive(Clone, Debug)]
pub struct Frame<F> {
    basis: Matrix<F>,
    cols: Vec<usize>,
    inv: Matrix<F>,
}

impl<F: Field> Frame<F> {
    /// Returns `None` if the rows of `basis` are dependent.
    pub fn new(basis: Matrix<F>) -> Option<Self> {
        let (_, piv) = basis.rref();
        if piv.len() != basis.rows() {
            return None;
        }
        let sub = basis.select_cols(&piv);
        let inv = sub.inverse()?;
        Some(Frame { basis, cols: piv, inv })
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Coordinates of `v` in this basis, or `None` if `v` lies outside the span.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let restricted: Vec<F> = self.cols.iter().map(|&c| v[c].clone()).collect();
        let x = self.inv.apply(&restricted);
        if self.basis.apply(&x) == v {
            Some(x)
        } else {
            None
        }
    }

    /// Row-wise coordinates of every row of `m`.
    pub fn coords_matrix(&self, m: &Matrix<F>) -> Option<Matrix<F>> {
        let restricted = m.select_cols(&self.cols);
        let x = restricted.matmul(&self.inv);
        if x.matmul(&self.basis) == *m {
            Some(x)
        } else {
            None
        }
    }
}

/// Independent rows spanning the same space as the rows of `m`.
pub fn span_basis<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    m.row_space()
}

/// Standard basis vectors completing the row space of `sub` to all of `F^n`, chosen
/// in ascending index order.
pub fn complement<F: Field>(sub: &Matrix<F>) -> Matrix<F> {
    let n = sub.cols();
    let mut space = RowSpace::from_matrix(sub);
    let mut out = Vec::new();
    for i in 0..n {
        let mut e = vec![F::zero(); n];
        e[i] = F::one();
        if space.insert(&e) {
            out.push(e);
        }
    }
    Matrix::from_rows(&out, n)
}

/// Basis of the intersection of two row spaces.
pub fn intersect<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    assert_eq!(a.cols(), b.cols());
    let a = span_basis(a);
    let b = span_basis(b);
    if a.rows() == 0 || b.rows() == 0 {
        return Matrix::zeros(0, a.cols());
    }
    // x a = y b  <=>  (x, -y) [a; b] = 0
    let stacked = Matrix::vstack(&[&a, &b]);
    let k = stacked.left_kernel();
    let xs = k.block(0, 0, k.rows(), a.rows());
    span_basis(&xs.matmul(&a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Fp;

    type F3 = Fp<3>;

    #[test]
    fn rowspace_grows() {
        let mut s = RowSpace::<F3>::new(3);
        assert!(s.insert(&[F3::new(1), F3::new(2), F3::new(0)]));
        assert!(!s.insert(&[F3::new(2), F3::new(1), F3::new(0)]));
        assert!(s.insert(&[F3::new(0), F3::new(1), F3::new(1)]));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[F3::new(1), F3::new(0), F3::new(1)]));
    }

    #[test]
    fn frame_coordinates() {
        let b = Matrix::<F3>::from_i64(2, 3, &[1, 1, 0, 0, 1, 1]);
        let f = Frame::new(b.clone()).unwrap();
        let v = b.apply(&[F3::new(2), F3::new(1)]);
        assert_eq!(f.coords(&v).unwrap(), vec![F3::new(2), F3::new(1)]);
        assert!(f.coords(&[F3::new(1), F3::new(0), F3::new(0)]).is_none());
    }

    #[test]
    fn intersection_and_complement() {
        let a = Matrix::<F3>::from_i64(2, 3, &[1, 0, 0, 0, 1, 0]);
        let b = Matrix::<F3>::from_i64(2, 3, &[0, 1, 0, 0, 0, 1]);
        assert_eq!(intersect(&a, &b), Matrix::from_i64(1, 3, &[0, 1, 0]));
        assert_eq!(complement(&a), Matrix::from_i64(1, 3, &[0, 0, 1]));
    }
}
