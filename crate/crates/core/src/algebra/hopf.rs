use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};

/// Comultiplication, counit and antipode of a Hopf algebra structure.
///
/// Index `i * n + j` of `Λ ⊗ Λ` stands for `b_i ⊗ b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfDatum<F> {
    comul: Matrix<F>,
    counit: Vec<F>,
    antipode: Matrix<F>,
    cocommutative: bool,
}

/// Permutation matrix of `b_i ⊗ b_j -> b_j ⊗ b_i`.
pub fn swap_matrix<F: Field>(n: usize) -> Matrix<F> {
    let mut p = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            p[(i * n + j, j * n + i)] = F::one();
        }
    }
    p
}

impl<F: Field> HopfDatum<F> {
    pub fn new(comul: Matrix<F>, counit: Vec<F>, antipode: Matrix<F>) -> Result<Self> {
        let n = counit.len();
        if comul.shape() != (n, n * n) || antipode.shape() != (n, n) {
            return Err(Error::DimensionMismatch("Hopf datum shapes inconsistent".into()));
        }
        let cocommutative = comul.matmul(&swap_matrix(n)) == comul;
        Ok(HopfDatum { comul, counit, antipode, cocommutative })
    }

    pub fn comul(&self) -> &Matrix<F> {
        &self.comul
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix<F> {
        &self.antipode
    }

    pub fn is_cocommutative(&self) -> bool {
        self.cocommutative
    }

    /// Checks every Hopf axiom on basis elements.
    pub fn validate(&self, a: &Algebra<F>) -> Result<()> {
        let n = a.dim();
        if self.counit.len() != n {
            return Err(Error::DimensionMismatch("Hopf datum dimension differs from algebra".into()));
        }
        let id = Matrix::identity(n);
        let delta = &self.comul;
        let eps_col = Matrix::new(n, 1, self.counit.clone());

        let left = delta.matmul(&delta.kron(&id));
        let right = delta.matmul(&id.kron(delta));
        if left != right {
            return Err(Error::HopfAxiom("comultiplication is not coassociative".into()));
        }
        if delta.matmul(&eps_col.kron(&id)) != id || delta.matmul(&id.kron(&eps_col)) != id {
            return Err(Error::HopfAxiom("counit law fails".into()));
        }
        let m = a.mult_matrix();
        let ue = eps_col.matmul(&Matrix::row_vector(a.unit().to_vec()));
        if delta.matmul(&self.antipode.kron(&id)).matmul(&m) != ue
            || delta.matmul(&id.kron(&self.antipode)).matmul(&m) != ue
        {
            return Err(Error::HopfAxiom("antipode law fails".into()));
        }

        let eps_unit = dot(&self.counit, a.unit());
        if !eps_unit.is_one() {
            return Err(Error::HopfAxiom("counit of the unit is not 1".into()));
        }
        let unit2 = tensor_vec(a.unit(), a.unit());
        if delta.apply(a.unit()) != unit2 {
            return Err(Error::HopfAxiom("comultiplication does not preserve the unit".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let prod = a.basis_product(i, j);
                if dot(&self.counit, &prod) != self.counit[i].clone() * self.counit[j].clone() {
                    return Err(Error::HopfAxiom(format!("counit is not multiplicative on (b{i}, b{j})")));
                }
                let lhs = delta.apply(&prod);
                let rhs = tensor_mul(a, delta.row(i), delta.row(j));
                if lhs != rhs {
                    return Err(Error::HopfAxiom(format!(
                        "comultiplication is not multiplicative on (b{i}, b{j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub(crate) fn tensor_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.clone() * y.clone());
        }
    }
    out
}

/// Product in the algebra `Λ ⊗ Λ`.
fn tensor_mul<F: Field>(a: &Algebra<F>, x: &[F], y: &[F]) -> Vec<F> {
    let n = a.dim();
    let mut out = vec![F::zero(); n * n];
    for (p, xp) in x.iter().enumerate() {
        if xp.is_zero() {
            continue;
        }
        let (i1, i2) = (p / n, p % n);
        for (q, yq) in y.iter().enumerate() {
            if yq.is_zero() {
                continue;
            }
            let (j1, j2) = (q / n, q % n);
            let c = xp.clone() * yq.clone();
            let u = a.basis_product(i1, j1);
            let v = a.basis_product(i2, j2);
            for (k1, uk) in u.iter().enumerate() {
                if uk.is_zero() {
                    continue;
                }
                for (k2, vk) in v.iter().enumerate() {
                    if !vk.is_zero() {
                        let idx = k1 * n + k2;
                        out[idx] = out[idx].clone() + c.clone() * uk.clone() * vk.clone();
                    }
                }
            }
        }
    }
    out
}
