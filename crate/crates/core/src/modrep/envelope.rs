//! Coinduced modules, injective envelopes, projective covers and (co)syzygies.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::exactla::{Field, Frame, Matrix, RowSpace};
use crate::modrep::hom::{find_hom, HomConstraints};
use crate::modrep::{Module, ModuleHom};

/// `C(M) = Hom_k(Λ, M)` with `(f·a)(b) = f(ab)`, and the embedding `m -> (a -> m·a)`.
///
/// The basis vector `j * dim M + c` is the function sending `b_j` to `e_c` and every other
/// basis element to zero.
pub fn coinduced<F: Field>(m: &Module<F>) -> (Module<F>, ModuleHom<F>) {
    let alg = m.algebra();
    let n = alg.dim();
    let d = m.dim();
    let action = (0..n)
        .map(|i| {
            let mut rho = Matrix::zeros(n * d, n * d);
            for k in 0..n {
                for j in 0..n {
                    let c = alg.coeff(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    for e in 0..d {
                        rho[(k * d + e, j * d + e)] = c.clone();
                    }
                }
            }
            rho
        })
        .collect();
    let c = Module::new_unchecked(alg.clone(), n * d, action);
    let mut emb = Matrix::zeros(d, n * d);
    for j in 0..n {
        emb.set_block(0, j * d, m.act(j));
    }
    let emb = ModuleHom::new_unchecked(m.clone(), c.clone(), emb);
    (c, emb)
}

/// Grows the submodule spanned by `sub` inside the injective module `inj` to a maximal
/// extension whose socle equals the socle of `sub`. The result (a row basis containing
/// `sub`'s span) is an injective envelope of `sub`.
///
/// Each round passes to `Q = inj / M'`, where the socle of `inj` maps onto a semisimple
/// `V ⊆ soc(Q)`. Submodules of `Q` meeting `V` trivially are exactly the essential
/// extensions of `M'`; a complement of `V` in `soc(Q)` is adjoined until `soc(Q) = V`.
pub fn essential_closure<F: Field>(inj: &Module<F>, sub: &Matrix<F>) -> Result<Matrix<F>> {
    let soc_i = inj.socle_basis()?;
    let mut current = inj.closure(sub);
    loop {
        if current.rows() == inj.dim() {
            return Ok(current);
        }
        let (q, pi) = inj.quotient(&current);
        let v_rows = crate::exactla::span_basis(&soc_i.matmul(pi.matrix()));
        let soc_q = q.socle_basis()?;
        if soc_q.rows() == v_rows.rows() {
            return Ok(current);
        }
        let (s_mod, s_inc) = q.submodule(&soc_q)?;
        let v_in_s = Frame::new(soc_q.clone())
            .and_then(|f| f.coords_matrix(&v_rows))
            .expect("image of the socle lies in the socle of the quotient");
        let (v_mod, _) = s_mod.submodule(&v_in_s)?;
        let retraction = find_hom(&s_mod, &v_mod, &HomConstraints::images(v_in_s.clone(), Matrix::identity(v_in_s.rows())))?
            .expect("semisimple modules admit retractions onto submodules");
        let w = retraction.matrix().left_kernel();
        // lift the complement back to inj and add it
        let w_in_q = w.matmul(s_inc.matrix());
        let lifts = lift_through_projection(&pi, &w_in_q);
        let mut space = RowSpace::from_matrix(&current);
        for r in 0..lifts.rows() {
            space.insert(lifts.row(r));
        }
        current = space.basis();
    }
}

/// Preimages under a quotient projection built by [`Module::quotient`].
fn lift_through_projection<F: Field>(pi: &ModuleHom<F>, rows: &Matrix<F>) -> Matrix<F> {
    pi.matrix().solve_left(rows).ok().flatten().expect("projection is surjective")
}

/// Injective envelope `ι: M -> E(M)`, realized inside the coinduced module.
pub fn injective_envelope<F: Field>(m: &Module<F>) -> Result<(Module<F>, ModuleHom<F>)> {
    m.algebra().require_radical()?;
    if m.dim() == 0 {
        return Ok((m.clone(), ModuleHom::identity(m)));
    }
    let (c, emb) = coinduced(m);
    let basis = essential_closure(&c, emb.matrix())?;
    let (e, _) = c.submodule(&basis)?;
    let frame = Frame::new(basis).expect("independent basis");
    let iota = frame.coords_matrix(emb.matrix()).expect("M lies in its envelope");
    Ok((e.clone(), ModuleHom::new_unchecked(m.clone(), e, iota)))
}

pub fn is_injective<F: Field>(m: &Module<F>) -> Result<bool> {
    Ok(injective_envelope(m)?.0.dim() == m.dim())
}

/// Whether the regular module is injective; cached on the algebra.
pub fn is_self_injective<F: Field>(a: &Arc<Algebra<F>>) -> Result<bool> {
    if let Some(&b) = a.self_injective.get() {
        return Ok(b);
    }
    let b = is_injective(&Module::regular(a.clone()))?;
    let _ = a.self_injective.set(b);
    Ok(b)
}

/// Projective cover `π: P(M) -> M`, the dual of the envelope of `D(M)`.
pub fn projective_cover<F: Field>(m: &Module<F>) -> Result<(Module<F>, ModuleHom<F>)> {
    m.algebra().require_radical()?;
    let (e, iota) = injective_envelope(&m.dual())?;
    let p = e.dual().rebind(m.algebra().clone())?;
    let pi = ModuleHom::new_unchecked(p.clone(), m.clone(), iota.matrix().transpose());
    Ok((p, pi))
}

pub fn is_projective<F: Field>(m: &Module<F>) -> Result<bool> {
    Ok(projective_cover(m)?.0.dim() == m.dim())
}

/// `ΣM = E(M)/M` with the projection from the envelope.
pub fn cosyzygy<F: Field>(m: &Module<F>) -> Result<(Module<F>, ModuleHom<F>)> {
    let (_, iota) = injective_envelope(m)?;
    Ok(iota.cokernel())
}

/// `ΩM = ker(P(M) -> M)` with its inclusion into the cover.
pub fn syzygy<F: Field>(m: &Module<F>) -> Result<(Module<F>, ModuleHom<F>)> {
    let (_, pi) = projective_cover(m)?;
    Ok(pi.kernel())
}

/// Iterated cosyzygy `Σ^n M` for `n >= 0`.
pub fn cosyzygy_n<F: Field>(m: &Module<F>, n: usize) -> Result<Module<F>> {
    let mut cur = m.clone();
    for _ in 0..n {
        cur = cosyzygy(&cur)?.0;
    }
    Ok(cur)
}

/// Iterated syzygy `Ω^n M` for `n >= 0`.
pub fn syzygy_n<F: Field>(m: &Module<F>, n: usize) -> Result<Module<F>> {
    let mut cur = m.clone();
    for _ in 0..n {
        cur = syzygy(&cur)?.0;
    }
    Ok(cur)
}
