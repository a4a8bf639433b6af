use std::sync::{Arc, OnceLock};

use crate::algebra::{ensure_same, Algebra};
use crate::error::{Error, Result};
use crate::exactla::{complement, Field, Frame, Matrix, RowSpace};
use crate::modrep::hom::Spin;

/// Right module given by one action matrix per algebra basis element; `m * b_i` is the row
/// vector `m` times `action[i]`.
#[derive(Clone)]
pub struct Module<F> {
    algebra: Arc<Algebra<F>>,
    dim: usize,
    action: Arc<Vec<Matrix<F>>>,
    spin: Arc<OnceLock<Spin<F>>>,
}

impl<F: Field> std::fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Module(dim {} over algebra of dim {})", self.dim, self.algebra.dim())
    }
}

impl<F: Field> PartialEq for Module<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && (Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra)
            && (Arc::ptr_eq(&self.action, &other.action) || self.action == other.action)
    }
}

impl<F: Field> Eq for Module<F> {}

impl<F: Field> Module<F> {
    /// Validates shapes, the unit law and multiplicativity of the action.
    pub fn new(algebra: Arc<Algebra<F>>, action: Vec<Matrix<F>>) -> Result<Self> {
        let n = algebra.dim();
        if action.len() != n {
            return Err(Error::InvalidModule(format!("{} action matrices for an algebra of dimension {n}", action.len())));
        }
        let d = action.first().map(|m| m.rows()).unwrap_or(0);
        if action.iter().any(|m| m.shape() != (d, d)) {
            return Err(Error::InvalidModule("action matrices must be square of equal size".into()));
        }
        let m = Self::new_unchecked(algebra, d, action);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra<F>>, dim: usize, action: Vec<Matrix<F>>) -> Self {
        debug_assert_eq!(action.len(), algebra.dim());
        Module { algebra, dim, action: Arc::new(action), spin: Arc::new(OnceLock::new()) }
    }

    pub fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        let n = a.dim();
        if self.rho(a.unit()) != Matrix::identity(self.dim) {
            return Err(Error::InvalidModule("unit does not act as the identity".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].matmul(&self.action[j]);
                if lhs != self.rho(&a.basis_product(i, j)) {
                    return Err(Error::InvalidModule(format!("action is not multiplicative on (b{i}, b{j})")));
                }
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<Algebra<F>>) -> Self {
        let n = algebra.dim();
        Self::new_unchecked(algebra, 0, vec![Matrix::zeros(0, 0); n])
    }

    /// The regular right module `Λ_Λ`.
    pub fn regular(algebra: Arc<Algebra<F>>) -> Self {
        let action = algebra.regular_action().to_vec();
        let d = algebra.dim();
        Self::new_unchecked(algebra, d, action)
    }

    /// Direct sum of `r` copies of the regular module.
    pub fn free(algebra: Arc<Algebra<F>>, r: usize) -> Self {
        let reg = Self::regular(algebra.clone());
        Self::direct_sum_of(&algebra, &vec![reg; r])
    }

    /// One-dimensional module through the augmentation of the algebra.
    pub fn trivial(algebra: Arc<Algebra<F>>) -> Result<Self> {
        let eps = algebra.augmentation()?;
        let action = eps.into_iter().map(|e| Matrix::new(1, 1, vec![e])).collect();
        Ok(Self::new_unchecked(algebra, 1, action))
    }

    /// `Λ/J`, the top of the regular module.
    pub fn top(algebra: Arc<Algebra<F>>) -> Result<Self> {
        let rad = algebra.require_radical()?.clone();
        let reg = Self::regular(algebra);
        Ok(reg.quotient(&rad).0)
    }

    /// The injective cogenerator `D(Λ)` where `Λ` is the regular module of the opposite algebra.
    pub fn cogenerator(algebra: Arc<Algebra<F>>) -> Self {
        let op = algebra.opposite();
        let d = Self::regular(op).dual();
        d.rebind(algebra).expect("dual of the opposite regular module lives over the algebra")
    }

    /// Same module over an equal algebra handle.
    pub fn rebind(&self, algebra: Arc<Algebra<F>>) -> Result<Self> {
        if *algebra != *self.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Module { algebra, dim: self.dim, action: self.action.clone(), spin: self.spin.clone() })
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self) -> &[Matrix<F>] {
        &self.action
    }

    pub fn act(&self, i: usize) -> &Matrix<F> {
        &self.action[i]
    }

    /// Action matrix of an arbitrary algebra element given by coefficients.
    pub fn rho(&self, a: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, c) in a.iter().enumerate() {
            m.add_scaled(c, &self.action[i]);
        }
        m
    }

    pub(crate) fn spin(&self) -> &Spin<F> {
        self.spin.get_or_init(|| Spin::compute(self))
    }

    /// Smallest submodule containing the rows of `vectors`, as a row basis.
    pub fn closure(&self, vectors: &Matrix<F>) -> Matrix<F> {
        let mut space = RowSpace::new(self.dim);
        let mut frontier = Vec::new();
        for i in 0..vectors.rows() {
            if space.insert(vectors.row(i)) {
                frontier.push(vectors.row(i).to_vec());
            }
        }
        let gens = self.algebra.generators().to_vec();
        while let Some(v) = frontier.pop() {
            for &g in &gens {
                let w = self.action[g].apply(&v);
                if space.insert(&w) {
                    frontier.push(w);
                }
            }
        }
        space.basis()
    }

    pub fn is_submodule(&self, rows: &Matrix<F>) -> bool {
        let space = RowSpace::from_matrix(rows);
        self.algebra
            .generators()
            .iter()
            .all(|&g| (0..rows.rows()).all(|r| space.contains(&self.action[g].apply(rows.row(r)))))
    }

    /// Submodule with the given independent row basis (which must span a submodule), and its inclusion.
    pub fn submodule(&self, basis: &Matrix<F>) -> Result<(Module<F>, ModuleHom<F>)> {
        let frame = Frame::new(basis.clone())
            .ok_or_else(|| Error::InvalidModule("submodule basis is dependent".into()))?;
        let mut action = Vec::with_capacity(self.action.len());
        for rho in self.action.iter() {
            let img = basis.matmul(rho);
            let c = frame
                .coords_matrix(&img)
                .ok_or_else(|| Error::InvalidModule("rows do not span a submodule".into()))?;
            action.push(c);
        }
        let sub = Module::new_unchecked(self.algebra.clone(), basis.rows(), action);
        let inc = ModuleHom::new_unchecked(sub.clone(), self.clone(), basis.clone());
        Ok((sub, inc))
    }

    /// Submodule generated by the rows of `vectors`.
    pub fn generated(&self, vectors: &Matrix<F>) -> (Module<F>, ModuleHom<F>) {
        let b = self.closure(vectors);
        self.submodule(&b).expect("closure is a submodule")
    }

    /// Quotient by the submodule spanned by the rows of `sub` (assumed a submodule), with
    /// the projection. The quotient basis is the image of a standard-vector complement.
    pub fn quotient(&self, sub: &Matrix<F>) -> (Module<F>, ModuleHom<F>) {
        let s = crate::exactla::span_basis(sub);
        let c = complement(&s);
        let full = Matrix::vstack(&[&s, &c]);
        let inv = full.inverse().expect("basis plus complement is invertible");
        let proj = inv.block(0, s.rows(), self.dim, c.rows());
        let action = self.action.iter().map(|rho| c.matmul(rho).matmul(&proj)).collect();
        let q = Module::new_unchecked(self.algebra.clone(), c.rows(), action);
        let pi = ModuleHom::new_unchecked(self.clone(), q.clone(), proj);
        (q, pi)
    }

    pub fn direct_sum_of(algebra: &Arc<Algebra<F>>, parts: &[Module<F>]) -> Module<F> {
        let dim = parts.iter().map(|p| p.dim).sum();
        let action = (0..algebra.dim())
            .map(|i| {
                let blocks: Vec<&Matrix<F>> = parts.iter().map(|p| &p.action[i]).collect();
                Matrix::block_diag(&blocks)
            })
            .collect();
        Module::new_unchecked(algebra.clone(), dim, action)
    }

    pub fn direct_sum(&self, other: &Module<F>) -> Result<Module<F>> {
        ensure_same(&self.algebra, &other.algebra)?;
        Ok(Self::direct_sum_of(&self.algebra, &[self.clone(), other.clone()]))
    }

    /// `D(M) = Hom_k(M, k)` as a right module over the opposite algebra (action transposed).
    pub fn dual(&self) -> Module<F> {
        let op = self.algebra.opposite();
        let action = self.action.iter().map(|m| m.transpose()).collect();
        Module::new_unchecked(op, self.dim, action)
    }

    /// The submodule annihilated by the radical, as a row basis.
    pub fn socle_basis(&self) -> Result<Matrix<F>> {
        let rad = self.algebra.require_radical()?;
        if rad.rows() == 0 || self.dim == 0 {
            return Ok(Matrix::identity(self.dim));
        }
        let blocks: Vec<Matrix<F>> = (0..rad.rows()).map(|r| self.rho(rad.row(r))).collect();
        let refs: Vec<&Matrix<F>> = blocks.iter().collect();
        Ok(Matrix::hstack(&refs).left_kernel())
    }

    /// `M J`, the radical of the module, as a row basis.
    pub fn radical_basis(&self) -> Result<Matrix<F>> {
        let rad = self.algebra.require_radical()?;
        let mut space = RowSpace::new(self.dim);
        for r in 0..rad.rows() {
            let m = self.rho(rad.row(r));
            for i in 0..self.dim {
                space.insert(m.row(i));
            }
        }
        Ok(space.basis())
    }

    /// Isomorphic copy with basis changed by the invertible matrix `p` (new basis = rows of `p`).
    pub fn change_basis(&self, p: &Matrix<F>) -> (Module<F>, ModuleHom<F>) {
        let inv = p.inverse().expect("change of basis must be invertible");
        let action = self.action.iter().map(|rho| p.matmul(rho).matmul(&inv)).collect();
        let m = Module::new_unchecked(self.algebra.clone(), self.dim, action);
        let iso = ModuleHom::new_unchecked(m.clone(), self.clone(), p.clone());
        (m, iso)
    }
}

/// Module homomorphism given by a `dim source × dim target` matrix.
#[derive(Clone)]
pub struct ModuleHom<F> {
    source: Module<F>,
    target: Module<F>,
    matrix: Matrix<F>,
}

impl<F: Field> std::fmt::Debug for ModuleHom<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModuleHom({} -> {}) {:?}", self.source.dim(), self.target.dim(), self.matrix)
    }
}

impl<F: Field> PartialEq for ModuleHom<F> {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix && self.source == other.source && self.target == other.target
    }
}

impl<F: Field> Eq for ModuleHom<F> {}

impl<F: Field> ModuleHom<F> {
    pub fn new(source: Module<F>, target: Module<F>, matrix: Matrix<F>) -> Result<Self> {
        ensure_same(source.algebra(), target.algebra())?;
        if matrix.shape() != (source.dim(), target.dim()) {
            return Err(Error::InvalidHom(format!(
                "matrix is {:?}, expected {}x{}",
                matrix.shape(),
                source.dim(),
                target.dim()
            )));
        }
        let h = Self::new_unchecked(source, target, matrix);
        if !h.is_intertwining() {
            return Err(Error::InvalidHom("matrix does not commute with the action".into()));
        }
        Ok(h)
    }

    pub(crate) fn new_unchecked(source: Module<F>, target: Module<F>, matrix: Matrix<F>) -> Self {
        debug_assert_eq!(matrix.shape(), (source.dim(), target.dim()));
        ModuleHom { source, target, matrix }
    }

    pub fn is_intertwining(&self) -> bool {
        self.source.algebra().generators().iter().all(|&g| {
            self.source.act(g).matmul(&self.matrix) == self.matrix.matmul(self.target.act(g))
        })
    }

    pub fn identity(m: &Module<F>) -> Self {
        Self::new_unchecked(m.clone(), m.clone(), Matrix::identity(m.dim()))
    }

    pub fn zero(source: &Module<F>, target: &Module<F>) -> Self {
        Self::new_unchecked(source.clone(), target.clone(), Matrix::zeros(source.dim(), target.dim()))
    }

    pub fn source(&self) -> &Module<F> {
        &self.source
    }

    pub fn target(&self) -> &Module<F> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &ModuleHom<F>) -> Result<ModuleHom<F>> {
        if self.target.dim() != g.source.dim() {
            return Err(Error::DimensionMismatch("composition of incompatible homs".into()));
        }
        Ok(Self::new_unchecked(self.source.clone(), g.target.clone(), self.matrix.matmul(&g.matrix)))
    }

    pub fn add(&self, g: &ModuleHom<F>) -> ModuleHom<F> {
        Self::new_unchecked(self.source.clone(), self.target.clone(), self.matrix.add(&g.matrix))
    }

    pub fn sub(&self, g: &ModuleHom<F>) -> ModuleHom<F> {
        Self::new_unchecked(self.source.clone(), self.target.clone(), self.matrix.sub(&g.matrix))
    }

    pub fn scale(&self, s: &F) -> ModuleHom<F> {
        Self::new_unchecked(self.source.clone(), self.target.clone(), self.matrix.scale(s))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    pub fn kernel(&self) -> (Module<F>, ModuleHom<F>) {
        let k = self.matrix.left_kernel();
        self.source.submodule(&k).expect("kernel is a submodule")
    }

    pub fn image(&self) -> (Module<F>, ModuleHom<F>) {
        let b = self.matrix.row_space();
        self.target.submodule(&b).expect("image is a submodule")
    }

    pub fn cokernel(&self) -> (Module<F>, ModuleHom<F>) {
        self.target.quotient(&self.matrix)
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<ModuleHom<F>> {
        let inv = self.matrix.inverse()?;
        Some(Self::new_unchecked(self.target.clone(), self.source.clone(), inv))
    }

    /// The transpose as a map `D(target) -> D(source)` over the opposite algebra.
    pub fn dual(&self) -> ModuleHom<F> {
        Self::new_unchecked(self.target.dual(), self.source.dual(), self.matrix.transpose())
    }

    /// Re-labels source and target with equal modules (for example after rebinding the algebra).
    pub fn retarget(&self, source: &Module<F>, target: &Module<F>) -> ModuleHom<F> {
        assert_eq!(self.matrix.shape(), (source.dim(), target.dim()));
        Self::new_unchecked(source.clone(), target.clone(), self.matrix.clone())
    }
}

/// Exact sequence `0 -> left -> middle -> right -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence<F: Field> {
    pub inj: ModuleHom<F>,
    pub surj: ModuleHom<F>,
}

impl<F: Field> ShortExactSequence<F> {
    pub fn new(inj: ModuleHom<F>, surj: ModuleHom<F>) -> Result<Self> {
        if inj.target().dim() != surj.source().dim() {
            return Err(Error::DimensionMismatch("middle terms differ".into()));
        }
        let s = ShortExactSequence { inj, surj };
        if !s.is_exact() {
            return Err(Error::InvalidHom("sequence is not short exact".into()));
        }
        Ok(s)
    }

    pub fn left(&self) -> &Module<F> {
        self.inj.source()
    }

    pub fn middle(&self) -> &Module<F> {
        self.inj.target()
    }

    pub fn right(&self) -> &Module<F> {
        self.surj.target()
    }

    pub fn is_exact(&self) -> bool {
        self.inj.is_injective()
            && self.surj.is_surjective()
            && self.inj.matrix().matmul(self.surj.matrix()).is_zero()
            && self.left().dim() + self.right().dim() == self.middle().dim()
    }

    /// `0 -> A -> A ⊕ C -> C -> 0`.
    pub fn split(a: &Module<F>, c: &Module<F>) -> Result<Self> {
        let mid = a.direct_sum(c)?;
        let inj = Matrix::hstack(&[&Matrix::identity(a.dim()), &Matrix::zeros(a.dim(), c.dim())]);
        let surj = Matrix::vstack(&[&Matrix::zeros(a.dim(), c.dim()), &Matrix::identity(c.dim())]);
        Self::new(
            ModuleHom::new_unchecked(a.clone(), mid.clone(), inj),
            ModuleHom::new_unchecked(mid, c.clone(), surj),
        )
    }

    /// Sequence from a submodule inclusion: `0 -> S -> M -> M/S -> 0`.
    pub fn from_inclusion(inc: ModuleHom<F>) -> Self {
        let (_, pi) = inc.cokernel();
        ShortExactSequence { inj: inc, surj: pi }
    }
}
