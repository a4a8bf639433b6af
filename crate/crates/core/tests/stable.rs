use std::sync::Arc;

use proptest::prelude::*;
use tate_core::algebra::*;
use tate_core::complexes::*;
use tate_core::corpus;
use tate_core::modrep::*;
use tate_core::resolutions::*;
use tate_core::stable::*;
use tate_core::{Field, Matrix, F2, F3, Q};

fn dual2() -> Arc<Algebra<F2>> {
    Arc::new(dual_numbers())
}

fn kv4() -> Arc<Algebra<F2>> {
    Arc::new(klein_four_algebra())
}

fn provider<F: tate_core::Field>(a: &Arc<Algebra<F>>) -> Provider<F> {
    detect_regime(a, DEFAULT_CUTOFF).unwrap()
}

/// `⋯ -t-> Λ -t-> Λ -t-> ⋯` written out by hand on `[lo, hi]`, and `dim H^n Hom(k, −)` of it
/// computed from raw Hom-spaces: `Hom(k, Λ)` is the socle and `t` kills it.
fn periodic_oracle(lo: i64, hi: i64) -> Vec<usize> {
    let a = dual2();
    let lam = Module::regular(a.clone());
    let k = Module::trivial(a.clone()).unwrap();
    let t = lam.act(1).clone();
    let hom = hom_basis(&k, &lam).unwrap();
    assert_eq!(hom.len(), 1);
    // d on Hom(k, Λ) is postcomposition with t
    let d_rank = hom.iter().filter(|f| !f.matrix().matmul(&t).is_zero()).count();
    (lo..=hi).map(|_| hom.len() - d_rank - d_rank).collect()
}

#[test]
fn tate_cohomology_of_k_over_dual_numbers_is_periodic() {
    let a = dual2();
    let p = provider(&a);
    let k = Module::trivial(a.clone()).unwrap();
    let ctx = TateContext::new(&k, &k, &p).unwrap();
    let oracle = periodic_oracle(-6, 6);
    for n in -6..=6 {
        let g = ctx.group(n).unwrap();
        assert_eq!(g.dim, oracle[(n + 6) as usize]);
        assert_eq!(g.dim, 1);
        assert_eq!(g.routes.len(), 4);
        assert!(g.routes.iter().all(|(_, d)| *d == 1));
    }
}

#[test]
fn tate_cohomology_vanishes_against_injectives() {
    let a = kv4();
    let p = provider(&a);
    let lam = Module::regular(a.clone());
    let k = Module::trivial(a.clone()).unwrap();
    for n in -2..=2 {
        assert_eq!(tate_cohomology(&lam, &k, n, &p).unwrap().dim, 0);
        assert_eq!(tate_cohomology(&k, &lam, n, &p).unwrap().dim, 0);
    }
}

#[test]
fn tate_cohomology_vanishes_in_finite_global_dimension() {
    let a: Arc<Algebra<F2>> = Arc::new(upper_triangular_algebra(2));
    let p = provider(&a);
    let mods = corpus::module_corpus(&a, 5, 3).unwrap();
    for m in &mods {
        for n in &mods {
            for d in -2..=2 {
                let g = tate_cohomology(m, n, d, &p).unwrap();
                assert_eq!(g.dim, 0);
                assert!(g.routes.iter().all(|(_, x)| *x == 0));
            }
        }
    }
}

#[test]
fn tate_cohomology_needs_a_supported_regime() {
    let a = dual2();
    let p = Provider { algebra: a.clone(), regime: Regime::Unsupported, cutoff: 1, global_dimension: None };
    let k = Module::trivial(a).unwrap();
    assert!(matches!(tate_cohomology(&k, &k, 0, &p), Err(tate_core::Error::UnsupportedAlgebra(_))));
}

#[test]
fn routes_agree_on_a_corpus() {
    for (a, count) in [(dual2(), 4), (kv4(), 4)] {
        let p = provider(&a);
        let mods = corpus::module_corpus(&a, count, 7).unwrap();
        for m in &mods {
            for n in &mods {
                let ctx = TateContext::new(m, n, &p).unwrap();
                for d in -2..=2 {
                    let g = ctx.group(d).unwrap();
                    assert!(g.routes.len() >= 3);
                }
            }
        }
    }
}

#[test]
fn route_three_matches_stable_hom() {
    let a = kv4();
    let p = provider(&a);
    let mods = corpus::module_corpus(&a, 6, 11).unwrap();
    for m in &mods {
        for n in &mods {
            let tm = complete_resolution(m, &p).unwrap();
            let tn = complete_resolution(n, &p).unwrap();
            let w = certified_window(&tm.complex, &tn.complex).unwrap().unwrap();
            let h = HomComplex::new(&tm.complex, &tn.complex, w).unwrap();
            assert_eq!(h.cohomology_dim(0).unwrap(), stable_hom(m, n).unwrap().dim());
        }
    }
}

#[test]
fn ext_groups() {
    let a = kv4();
    let k = Module::trivial(a.clone()).unwrap();
    for n in 0..5 {
        assert_eq!(ext_group(&k, &k, n).unwrap(), n as usize + 1);
    }
    let mut r = corpus::rng(5);
    for _ in 0..4 {
        let m = corpus::random_module(&a, &mut r, 6).unwrap();
        let b = corpus::random_module(&a, &mut r, 6).unwrap();
        assert_eq!(ext_group(&m, &b, 0).unwrap(), hom_dim(&m, &b).unwrap());
        for n in 1..3 {
            assert_eq!(ext_group(&Module::regular(a.clone()), &b, n).unwrap(), 0);
        }
    }
}

#[test]
fn comparison_map_is_invertible_in_positive_degrees() {
    for a in [dual2(), kv4()] {
        let p = provider(&a);
        let mods = corpus::module_corpus(&a, 5, 13).unwrap();
        for m in &mods {
            for b in &mods {
                let c0 = comparison_map(m, b, 0, &p).unwrap();
                assert_eq!(c0.rank(), stable_hom(m, b).unwrap().dim());
                for n in 1..=2 {
                    let c = comparison_map(m, b, n, &p).unwrap();
                    assert!(c.is_square());
                    assert_eq!(c.rank(), c.rows());
                }
            }
        }
    }
}

#[test]
fn comparison_map_small_cases() {
    let a = dual2();
    let p = provider(&a);
    let k = Module::trivial(a.clone()).unwrap();
    let c = comparison_map(&k, &k, 0, &p).unwrap();
    assert_eq!((c.rows(), c.cols(), c.rank()), (1, 1, 1));
    let lam = Module::regular(a.clone());
    let c = comparison_map(&k, &lam, 0, &p).unwrap();
    assert_eq!((c.rows(), c.cols()), (1, 0));
}

#[test]
fn replacement_over_self_injective_algebra_is_stably_the_module() {
    let a = kv4();
    let p = provider(&a);
    for m in corpus::module_corpus(&a, 6, 17).unwrap() {
        let t = gorenstein_replacement(&m, &p).unwrap();
        assert!(stable_inverse(&t.unit).unwrap().is_some());
        let k = Module::trivial(a.clone()).unwrap();
        assert!(t.check_adjunction(&k).unwrap());
        assert!(t.check_adjunction(&m).unwrap());
    }
    let t = gorenstein_replacement(&Module::regular(a.clone()), &p).unwrap();
    assert_eq!(stable_hom(&t.module, &t.module).unwrap().dim(), 0);
}

#[test]
fn replacement_in_finite_global_dimension_is_zero() {
    let a: Arc<Algebra<Q>> = Arc::new(upper_triangular_algebra(3));
    let p = provider(&a);
    for m in corpus::module_corpus(&a, 4, 19).unwrap() {
        assert_eq!(gorenstein_replacement(&m, &p).unwrap().module.dim(), 0);
    }
}

#[test]
fn replacement_preserves_tate_cohomology() {
    let a = dual2();
    let p = provider(&a);
    let mods = corpus::module_corpus(&a, 4, 23).unwrap();
    for m in &mods {
        let t = gorenstein_replacement(m, &p).unwrap().module;
        for b in &mods {
            for n in -2..=2 {
                assert_eq!(tate_cohomology(&t, b, n, &p).unwrap().dim, tate_cohomology(m, b, n, &p).unwrap().dim);
            }
        }
    }
}

#[test]
fn approximation_over_dual_numbers() {
    let a = dual2();
    let p = provider(&a);
    let k = Module::trivial(a.clone()).unwrap();
    let pair = approximation(&k, &p).unwrap();
    assert!(pair.certify(&p).unwrap().passed());
    // Y^A is A up to injective summands; X^A is injective
    assert!(is_injective(pair.x_upper()).unwrap());
    assert_eq!(stable_hom(pair.y_upper(), &k).unwrap().dim(), 1);
}

#[test]
fn approximation_in_finite_global_dimension_uses_the_envelope() {
    let a: Arc<Algebra<F2>> = Arc::new(upper_triangular_algebra(2));
    let p = provider(&a);
    for m in corpus::module_corpus(&a, 6, 29).unwrap() {
        let pair = approximation(&m, &p).unwrap();
        let (e, _) = injective_envelope(&m).unwrap();
        assert_eq!(pair.y_upper().dim(), e.dim());
        assert!(is_injective(pair.y_upper()).unwrap());
        assert_eq!(pair.x_upper().dim(), e.dim() - m.dim());
        assert_eq!(pair.y_lower().dim(), 0);
        assert_eq!(pair.x_lower().dim(), m.dim());
        assert!(pair.certify(&p).unwrap().passed());
    }
}

#[test]
fn approximation_of_an_injective_splits() {
    let a = kv4();
    let p = provider(&a);
    let lam = Module::regular(a.clone());
    let pair = approximation(&lam, &p).unwrap();
    assert!(pair.certify(&p).unwrap().passed());
    // Λ is injective and projective, so both sequences split and every member is injective
    for m in [pair.y_lower(), pair.x_lower(), pair.y_upper(), pair.x_upper()] {
        assert!(is_injective(m).unwrap());
    }
    assert_eq!(pair.y_upper().dim(), lam.dim() + pair.x_upper().dim());
}

#[test]
fn class_membership() {
    let a = dual2();
    let p = provider(&a);
    let k = Module::trivial(a.clone()).unwrap();
    assert!(xclass_member(&Module::regular(a.clone()), &p).unwrap());
    assert!(!xclass_member(&k, &p).unwrap());
    assert!(yclass_member(&k, &p).unwrap());
    let t2: Arc<Algebra<F2>> = Arc::new(upper_triangular_algebra(2));
    let p2 = provider(&t2);
    for m in corpus::module_corpus(&t2, 6, 31).unwrap() {
        assert!(xclass_member(&m, &p2).unwrap());
        assert_eq!(yclass_member(&m, &p2).unwrap(), is_injective(&m).unwrap());
    }
}

#[test]
fn x_and_y_meet_in_the_injectives() {
    let a = kv4();
    let p = provider(&a);
    for m in corpus::module_corpus(&a, 8, 37).unwrap() {
        let both = xclass_member(&m, &p).unwrap() && yclass_member(&m, &p).unwrap();
        assert_eq!(both, is_injective(&m).unwrap());
    }
}

#[test]
fn vanishing_criteria_agree() {
    for a in [dual2(), kv4()] {
        let p = provider(&a);
        let mods = corpus::module_corpus(&a, 5, 41).unwrap();
        for m in &mods {
            let r = vanishing_report(m, &p, &mods[..2], (-1, 1)).unwrap();
            assert!(r.passed(), "{}", r.to_json());
            assert_eq!(r.dims["member"], serde_json::json!(is_injective(m).unwrap()));
        }
    }
    let t2: Arc<Algebra<F2>> = Arc::new(upper_triangular_algebra(2));
    let p = provider(&t2);
    let e = Module::cogenerator(t2.clone());
    for m in corpus::module_corpus(&t2, 4, 43).unwrap() {
        assert!(vanishing_report(&m, &p, &[e.clone()], (-1, 1)).unwrap().passed());
    }
}

#[test]
fn les_of_k_in_dual_numbers() {
    let a = dual2();
    let p = provider(&a);
    let lam = Module::regular(a.clone());
    let soc = lam.socle_basis().unwrap();
    let (_, inc) = lam.submodule(&soc).unwrap();
    let s = ShortExactSequence::from_inclusion(inc);
    let k = Module::trivial(a.clone()).unwrap();
    let les = les_check(&s, &k, &p, (-3, 3)).unwrap();
    assert!(les.report.passed(), "{}", les.report.to_json());
    for seq in [&les.covariant, &les.contravariant] {
        // outer groups are one-dimensional, the middle one vanishes since Λ is injective
        for (i, d) in seq.dims.iter().enumerate() {
            assert_eq!(*d, if i % 3 == 1 { 0 } else { 1 });
        }
        assert!(connecting_ranks(seq).iter().all(|&r| r == 1));
    }
}

#[test]
fn les_of_split_sequence_has_zero_connecting_maps() {
    let a = kv4();
    let p = provider(&a);
    let mut r = corpus::rng(47);
    for _ in 0..3 {
        let x = corpus::random_module(&a, &mut r, 5).unwrap();
        let y = corpus::random_module(&a, &mut r, 5).unwrap();
        let c = corpus::random_module(&a, &mut r, 5).unwrap();
        let s = ShortExactSequence::split(&x, &y).unwrap();
        let les = les_check(&s, &c, &p, (-1, 1)).unwrap();
        assert!(les.report.passed());
        assert!(connecting_ranks(&les.covariant).iter().all(|&r| r == 0));
        assert!(connecting_ranks(&les.contravariant).iter().all(|&r| r == 0));
    }
}

#[test]
fn les_of_injectives_is_zero() {
    let a = dual2();
    let p = provider(&a);
    let lam = Module::regular(a.clone());
    let s = ShortExactSequence::split(&lam, &lam).unwrap();
    let les = les_check(&s, &Module::trivial(a.clone()).unwrap(), &p, (-2, 2)).unwrap();
    assert!(les.report.passed());
    assert!(les.covariant.dims.iter().chain(&les.contravariant.dims).all(|d| *d == 0));
}

#[test]
fn les_on_random_sequences() {
    let a = kv4();
    let p = provider(&a);
    let mut r = corpus::rng(53);
    for _ in 0..4 {
        let s = corpus::random_ses(&a, &mut r, 6).unwrap();
        let c = corpus::random_module(&a, &mut r, 4).unwrap();
        let les = les_check(&s, &c, &p, (-2, 2)).unwrap();
        assert!(les.report.passed(), "{}", les.report.to_json());
    }
}

#[test]
fn tate_ring_of_c2() {
    let a: Arc<Algebra<F2>> = Arc::new(cyclic_group_algebra(2).unwrap());
    let ring = tate_ring(&provider(&a), -4, 4).unwrap();
    assert_eq!(ring.dims, vec![1; 9]);
    assert!(ring.is_unital());
    assert!(ring.is_associative());
    for n in -4..=4 {
        assert!(ring.inverse(n, &[F2::from_i64(1)]).is_some());
    }
}

#[test]
fn tate_ring_of_rational_exterior_algebra() {
    let a: Arc<Algebra<Q>> = Arc::new(exterior_algebra(1));
    let ring = tate_ring(&provider(&a), -3, 3).unwrap();
    assert_eq!(ring.dims, vec![1; 7]);
    assert!(ring.is_unital() && ring.is_associative());
    let x = ring.inverse(1, &[Q::from_i64(1)]).unwrap();
    assert_eq!(ring.product(1, &[Q::from_i64(1)], -1, &x).unwrap(), ring.unit);
}

#[test]
fn tate_ring_of_klein_four() {
    let a = kv4();
    let ring = tate_ring(&provider(&a), -2, 2).unwrap();
    // dims of Êxt^n(k, k): n+1 above, |n| below, with Ĥ^{-1} dual to Ĥ^0
    assert_eq!(ring.dims, vec![2, 1, 1, 2, 3]);
    assert!(ring.is_unital() && ring.is_associative());
    // degree-one classes square-zero free polynomial ring: H^1·H^1 spans H^2
    let t = &ring.products[&(1, 1)];
    assert_eq!(t.rank(), 3);
}

#[test]
fn tate_ring_requires_self_injective() {
    let a: Arc<Algebra<F2>> = Arc::new(upper_triangular_algebra(2));
    assert!(tate_ring(&provider(&a), -1, 1).is_err());
}

#[test]
fn hopf_tensor_resolutions() {
    let a = kv4();
    let units = tensor_unit_resolutions(&a).unwrap();
    let k = Module::trivial(a.clone()).unwrap();
    let tk = stabilize_hopf(&k, &units).unwrap();
    assert_eq!(tk.complex.dims(-2, 2).unwrap(), units.tk.complex.dims(-2, 2).unwrap());
    assert_eq!(tk.complex.dims(-2, 2).unwrap(), vec![8, 4, 4, 8, 12]);
    let lam = Module::regular(a.clone());
    let tl = stabilize_hopf(&lam, &units).unwrap();
    let d = minimal_decomposition(&tl.complex.window(-2, 2).unwrap(), -2, 2).unwrap();
    assert_eq!(d.minimal.dims(-1, 1).unwrap(), vec![0, 0, 0]);
    for m in corpus::module_corpus(&a, 4, 59).unwrap() {
        let r = hopf_report(&m, &units, (-2, 2)).unwrap();
        assert!(r.passed(), "{}", r.to_json());
    }
}

#[test]
fn hopf_needs_a_hopf_datum() {
    let a: Arc<Algebra<F2>> = Arc::new(upper_triangular_algebra(2));
    assert!(matches!(tensor_unit_resolutions(&a), Err(tate_core::Error::MissingHopf)));
}

#[test]
fn report_json_shape() {
    let mut r = Report::new("demo", (-1, 1)).with_regime(Regime::SelfInjective);
    r.dim("x", 3);
    r.check("ok", true);
    r.check_with("bad", false, serde_json::json!([1]));
    let j = r.to_json();
    assert_eq!(j["window"], serde_json::json!([-1, 1]));
    assert_eq!(j["regime"], "SelfInjective");
    assert_eq!(j["checks"][1]["witness"], serde_json::json!([1]));
    assert!(j["checks"][0].get("witness").is_none());
    assert!(!r.passed());
    assert_eq!(r.failures().len(), 1);
}

#[test]
fn tate_over_f3_cyclic_group() {
    let a: Arc<Algebra<F3>> = Arc::new(cyclic_group_algebra(3).unwrap());
    let p = provider(&a);
    let k = Module::trivial(a.clone()).unwrap();
    for n in -3..=3 {
        assert_eq!(tate_cohomology(&k, &k, n, &p).unwrap().dim, 1);
    }
    let _ = Matrix::<F3>::identity(1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn routes_agree_on_random_pairs(seed in 0u64..10_000, n in -3i64..=3) {
        let a = kv4();
        let p = provider(&a);
        let mut r = corpus::rng(seed);
        let m = corpus::random_module(&a, &mut r, 6).unwrap();
        let b = corpus::random_module(&a, &mut r, 6).unwrap();
        let g = tate_cohomology(&m, &b, n, &p).unwrap();
        prop_assert_eq!(g.routes.len(), 4);
    }

    #[test]
    fn comparison_rank_equals_stable_hom(seed in 0u64..10_000) {
        let a = dual2();
        let p = provider(&a);
        let mut r = corpus::rng(seed);
        let m = corpus::random_module(&a, &mut r, 4).unwrap();
        let b = corpus::random_module(&a, &mut r, 4).unwrap();
        prop_assert_eq!(comparison_map(&m, &b, 0, &p).unwrap().rank(), stable_hom(&m, &b).unwrap().dim());
    }
}
