use std::sync::Arc;

use tate_core::algebra::*;
use tate_core::exactla::RowSpace;
use tate_core::modrep::*;
use tate_core::{Matrix, F2};

fn dual2() -> Arc<Algebra<F2>> {
    Arc::new(dual_numbers())
}

fn kv4() -> Arc<Algebra<F2>> {
    Arc::new(klein_four_algebra())
}

/// Every `r x c` matrix over F2.
fn all_matrices(r: usize, c: usize) -> Vec<Matrix<F2>> {
    (0u32..1 << (r * c))
        .map(|bits| Matrix::from_fn(r, c, |i, j| F2::new(((bits >> (i * c + j)) & 1) as u64)))
        .collect()
}

fn intertwines(m: &Module<F2>, n: &Module<F2>, x: &Matrix<F2>) -> bool {
    (0..m.algebra().dim()).all(|i| m.act(i).matmul(x) == x.matmul(n.act(i)))
}

/// Dimension of Hom(M, N) by counting all intertwiners over F2.
fn brute_hom_dim(m: &Module<F2>, n: &Module<F2>) -> usize {
    let count = all_matrices(m.dim(), n.dim()).iter().filter(|x| intertwines(m, n, x)).count();
    count.trailing_zeros() as usize
}

#[test]
fn hom_dimensions_match_enumeration() {
    let a = dual2();
    let k = Module::trivial(a.clone()).unwrap();
    let lam = Module::regular(a.clone());
    assert_eq!(hom_dim(&k, &k).unwrap(), 1);
    assert_eq!(hom_dim(&k, &lam).unwrap(), 1);
    assert_eq!(brute_hom_dim(&k, &lam), 1);
    assert_eq!(hom_dim(&lam, &lam).unwrap(), 2);
    assert_eq!(hom_dim(&lam, &k).unwrap(), brute_hom_dim(&lam, &k));
    let kk = k.direct_sum(&k).unwrap();
    assert_eq!(hom_dim(&kk, &lam).unwrap(), brute_hom_dim(&kk, &lam));
    assert_eq!(hom_dim(&lam, &kk).unwrap(), 2);
}

#[test]
fn hom_from_free_module_has_dimension_of_target() {
    let a = kv4();
    let lam = Module::regular(a.clone());
    let k = Module::trivial(a.clone()).unwrap();
    let (omega, _) = syzygy(&k).unwrap();
    for m in [&lam, &k, &omega] {
        assert_eq!(hom_dim(&lam, m).unwrap(), m.dim());
    }
}

#[test]
fn hom_basis_elements_intertwine() {
    let a = kv4();
    let k = Module::trivial(a.clone()).unwrap();
    let (omega, _) = syzygy(&k).unwrap();
    for h in hom_basis(&omega, &Module::regular(a.clone())).unwrap() {
        assert!(h.is_intertwining());
    }
}

#[test]
fn kernel_of_t_action_is_trivial_module() {
    let a = dual2();
    let lam = Module::regular(a.clone());
    // t-multiplication from the left is a right-module endomorphism
    let t = ModuleHom::new(lam.clone(), lam.clone(), a.left_mult_matrix(1)).unwrap();
    let (ker, inc) = t.kernel();
    assert_eq!(ker.dim(), 1);
    assert_eq!(inc.matrix(), &Matrix::from_i64(1, 2, &[0, 1]));
    assert_eq!(ker.action(), Module::trivial(a).unwrap().action());
    let id = ModuleHom::identity(&lam);
    assert_eq!(id.kernel().0.dim(), 0);
    let z = ModuleHom::zero(&Module::zero(lam.algebra().clone()), &lam);
    assert_eq!(z.cokernel().0.dim(), 2);
}

#[test]
fn socles() {
    let a = dual2();
    let lam = Module::regular(a.clone());
    assert_eq!(lam.socle_basis().unwrap(), Matrix::from_i64(1, 2, &[0, 1]));
    let k = Module::trivial(a).unwrap();
    let kk = k.direct_sum(&k).unwrap();
    assert_eq!(kk.socle_basis().unwrap().rows(), 2);
    // regular module of F2[C2 x C2]: intersect the kernels of g - e and h - e
    let b = kv4();
    let reg = Module::regular(b.clone());
    let g = reg.act(1).sub(&Matrix::identity(4));
    let h = reg.act(2).sub(&Matrix::identity(4));
    let oracle = tate_core::exactla::intersect(&g.left_kernel(), &h.left_kernel());
    assert_eq!(oracle.rows(), 1);
    assert_eq!(reg.socle_basis().unwrap().row_space(), oracle.row_space());
}

#[test]
fn duality() {
    let a = kv4();
    let k = Module::trivial(a.clone()).unwrap();
    assert_eq!(k.dual().action(), k.action());
    let lam = Module::regular(a.clone());
    let e = Module::cogenerator(a.clone());
    assert_eq!(e.dim(), lam.dim());
    assert!(is_injective(&e).unwrap());
    let (omega, _) = syzygy(&k).unwrap();
    assert_eq!(omega.dual().dim(), omega.dim());
    let mods = [k.clone(), lam.clone(), omega.clone()];
    for m in &mods {
        for n in &mods {
            assert_eq!(hom_dim(m, n).unwrap(), hom_dim(&n.dual(), &m.dual()).unwrap());
        }
    }
}

#[test]
fn coinduced_trivial_is_regular() {
    let a = dual2();
    let k = Module::trivial(a.clone()).unwrap();
    let (c, emb) = coinduced(&k);
    assert_eq!(c.dim(), 2);
    c.validate().unwrap();
    assert!(emb.is_intertwining());
    let lam = Module::regular(a);
    let isos = all_matrices(2, 2)
        .into_iter()
        .filter(|x| x.inverse().is_some() && intertwines(&c, &lam, x))
        .count();
    assert!(isos > 0);
    assert_eq!(coinduced(&Module::zero(c.algebra().clone())).0.dim(), 0);
}

#[test]
fn envelope_of_trivial_module_over_dual_numbers() {
    let a = dual2();
    let k = Module::trivial(a.clone()).unwrap();
    let (e, iota) = injective_envelope(&k).unwrap();
    assert_eq!(e.dim(), 2);
    assert!(iota.is_injective() && iota.is_intertwining());
    // exhaustive oracle: largest submodule of C(k) containing k with socle inside k
    let (c, emb) = coinduced(&k);
    let image = RowSpace::from_matrix(emb.matrix());
    let mut best = 0;
    for s in all_matrices(2, 2) {
        let sub = s.row_space();
        if !c.is_submodule(&sub) {
            continue;
        }
        let span = RowSpace::from_matrix(&sub);
        if !(0..emb.matrix().rows()).all(|r| span.contains(emb.matrix().row(r))) {
            continue;
        }
        let (sm, inc) = c.submodule(&sub).unwrap();
        let soc = sm.socle_basis().unwrap().matmul(inc.matrix());
        if (0..soc.rows()).all(|r| image.contains(soc.row(r))) {
            best = best.max(sub.rows());
        }
    }
    assert_eq!(best, 2);

    let kk = k.direct_sum(&k).unwrap();
    assert_eq!(injective_envelope(&kk).unwrap().0.dim(), 4);
    let lam = Module::regular(a.clone());
    let (el, il) = injective_envelope(&lam).unwrap();
    assert_eq!(el.dim(), 2);
    assert!(il.is_iso());
}

#[test]
fn injectivity_tests() {
    let a = dual2();
    assert!(is_injective(&Module::regular(a.clone())).unwrap());
    assert!(!is_injective(&Module::trivial(a.clone()).unwrap()).unwrap());
    assert!(is_injective(&Module::zero(a)).unwrap());
    let t2 = Arc::new(upper_triangular_algebra::<F2>(2));
    let (e, _) = injective_envelope(&Module::regular(t2)).unwrap();
    assert!(e.dim() > 3);
}

#[test]
fn projective_covers() {
    let a = dual2();
    let k = Module::trivial(a.clone()).unwrap();
    let (p, pi) = projective_cover(&k).unwrap();
    assert_eq!(p.dim(), 2);
    assert!(pi.is_surjective() && pi.is_intertwining());
    let (omega, _) = syzygy(&k).unwrap();
    assert_eq!(omega.dim(), 1);
    let lam = Module::regular(a);
    assert_eq!(projective_cover(&lam).unwrap().0.dim(), 2);
    let b = kv4();
    let kb = Module::trivial(b).unwrap();
    assert_eq!(syzygy(&kb).unwrap().0.dim(), 3);
}

#[test]
fn stable_homs() {
    let a = dual2();
    let k = Module::trivial(a.clone()).unwrap();
    let lam = Module::regular(a.clone());
    assert_eq!(stable_hom(&k, &k).unwrap().dim(), 1);
    assert_eq!(stable_hom(&lam, &k).unwrap().dim(), 0);
    assert_eq!(stable_hom(&lam, &lam).unwrap().dim(), 0);
    let f = Arc::new(base_field::<F2>());
    let kf = Module::regular(f);
    assert_eq!(stable_hom(&kf, &kf).unwrap().dim(), 0);
    // adding injective summands does not change stable Hom
    let k_lam = k.direct_sum(&lam).unwrap();
    assert_eq!(stable_hom(&k_lam, &k).unwrap().dim(), 1);
    assert_eq!(stable_hom(&k, &k_lam).unwrap().dim(), 1);
}

#[test]
fn cosyzygies() {
    let a = dual2();
    let k = Module::trivial(a.clone()).unwrap();
    let (sk, _) = cosyzygy(&k).unwrap();
    assert_eq!(sk.action(), k.action());
    assert_eq!(cosyzygy(&Module::regular(a)).unwrap().0.dim(), 0);
}

#[test]
fn sigma_and_omega_are_stably_inverse() {
    let a = kv4();
    let k = Module::trivial(a.clone()).unwrap();
    let (omega, _) = syzygy(&k).unwrap();
    let (so, _) = cosyzygy(&omega).unwrap();
    // some map ΣΩk -> k is a stable isomorphism
    let sh = stable_hom(&so, &k).unwrap();
    assert_eq!(sh.dim(), 1);
    assert!(stable_inverse(&sh.reps[0]).unwrap().is_some());
    // but k is not stably isomorphic to Ωk
    let sk = stable_hom(&k, &omega).unwrap();
    for r in &sk.reps {
        assert!(stable_inverse(r).unwrap().is_none());
    }
}

#[test]
fn envelopes_are_essential_on_generated_modules() {
    let a = kv4();
    let lam = Module::regular(a.clone());
    let lam2 = lam.direct_sum(&lam).unwrap();
    let k = Module::trivial(a.clone()).unwrap();
    let mut mods = vec![k.clone(), syzygy(&k).unwrap().0, cosyzygy(&k).unwrap().0];
    let v = Matrix::<F2>::from_fn(1, 8, |_, j| F2::new([1, 0, 1, 1, 0, 1, 0, 0][j]));
    mods.push(lam2.generated(&v).0);
    for m in &mods {
        let (e, iota) = injective_envelope(m).unwrap();
        let soc_e = e.socle_basis().unwrap();
        let img = RowSpace::from_matrix(iota.matrix());
        assert!((0..soc_e.rows()).all(|r| img.contains(soc_e.row(r))));
        assert_eq!(soc_e.rows(), m.socle_basis().unwrap().rows());
        assert!(is_injective(&e).unwrap());
    }
}
