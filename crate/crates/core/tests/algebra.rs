use std::sync::Arc;

use tate_core::algebra::*;
use tate_core::exactla::Field;
use tate_core::modrep::is_self_injective;
use tate_core::{Error, Matrix, F2, F5, Q};

fn ints<F: Field>(v: &[i64]) -> Vec<F> {
    v.iter().map(|&x| F::from_i64(x)).collect()
}

/// Structure constants after the change of basis whose new basis vectors are the rows of `p`.
fn transported_table<F: Field>(a: &Algebra<F>, p: &Matrix<F>) -> Vec<F> {
    let n = a.dim();
    let inv = p.inverse().unwrap();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let prod = a.mul(p.row(i), p.row(j));
            out.extend(inv.apply(&prod));
        }
    }
    out
}

#[test]
fn base_field_is_one_dimensional() {
    let k = base_field::<F2>();
    assert_eq!(k.dim(), 1);
    assert_eq!(k.basis_product(0, 0), ints::<F2>(&[1]));
    assert_eq!(cyclic_group_algebra::<F5>(1).unwrap().dim(), 1);
    assert_eq!(exterior_algebra::<F2>(0).table(), base_field::<F2>().table());
    assert_eq!(upper_triangular_algebra::<F2>(1).table(), base_field::<F2>().table());
}

#[test]
fn dual_numbers_table() {
    let a = dual_numbers::<F2>();
    assert_eq!(a.dim(), 2);
    assert_eq!(a.basis_product(1, 1), ints::<F2>(&[0, 0]));
    assert_eq!(a.basis_product(0, 1), ints::<F2>(&[0, 1]));
    assert!(a.hopf().unwrap().is_cocommutative());
    assert!(dual_numbers::<Q>().hopf().is_none());
}

#[test]
fn mislabeled_unit_is_rejected() {
    // basis {1, t} with t*t = 1 but the unit given as t
    let spec = AlgebraSpec::<F2> {
        dim: 2,
        mult: vec![
            (0, 0, ints(&[1, 0])),
            (0, 1, ints(&[0, 1])),
            (1, 0, ints(&[0, 1])),
            (1, 1, ints(&[1, 0])),
        ],
        unit: ints(&[0, 1]),
        radical: None,
        hopf: None,
        labels: None,
    };
    assert!(matches!(Algebra::new(spec), Err(Error::UnitLaw(_))));
}

#[test]
fn nonassociative_table_reports_a_triple() {
    // b0 unit; b1*b1 = b2, b2*b1 = b1, b1*b2 = 0 breaks (b1 b1) b1 = b1 (b1 b1)
    let spec = AlgebraSpec::<F2> {
        dim: 3,
        mult: vec![
            (0, 0, ints(&[1, 0, 0])),
            (0, 1, ints(&[0, 1, 0])),
            (1, 0, ints(&[0, 1, 0])),
            (0, 2, ints(&[0, 0, 1])),
            (2, 0, ints(&[0, 0, 1])),
            (1, 1, ints(&[0, 0, 1])),
            (2, 1, ints(&[0, 1, 0])),
        ],
        unit: ints(&[1, 0, 0]),
        radical: None,
        hopf: None,
        labels: None,
    };
    assert!(matches!(Algebra::new(spec), Err(Error::Associativity { .. })));
}

#[test]
fn bad_radicals_are_rejected() {
    let base = |rad: Vec<Vec<F2>>| AlgebraSpec::<F2> {
        dim: 2,
        mult: vec![(0, 0, ints(&[1, 0])), (0, 1, ints(&[0, 1])), (1, 0, ints(&[0, 1]))],
        unit: ints(&[1, 0]),
        radical: Some(rad),
        hopf: None,
        labels: None,
    };
    assert!(Algebra::new(base(vec![ints(&[0, 1])])).is_ok());
    // the unit spans an ideal but is not nilpotent
    assert!(matches!(Algebra::new(base(vec![ints(&[1, 0])])), Err(Error::RadicalNotIdeal(_) | Error::RadicalNotNilpotent)));
    assert!(matches!(Algebra::new(base(vec![ints(&[1, 0]), ints(&[0, 1])])), Err(Error::RadicalNotNilpotent)));
}

#[test]
fn group_algebra_of_c2_is_dual_numbers() {
    let kc2 = cyclic_group_algebra::<F2>(2).unwrap();
    assert_eq!(kc2.dim(), 2);
    // new basis {e, t = g - e}
    let p = Matrix::<F2>::from_i64(2, 2, &[1, 0, -1, 1]);
    assert_eq!(transported_table(&kc2, &p), dual_numbers::<F2>().table());
}

#[test]
fn klein_four_radical_and_exterior_comparison() {
    let kv4 = klein_four_algebra::<F2>();
    assert_eq!(kv4.dim(), 4);
    assert_eq!(kv4.radical().unwrap().rows(), 3);
    // x = g - e, y = h - e, xy = (g - e)(h - e) = gh - g - h + e
    let p = Matrix::<F2>::from_i64(4, 4, &[1, 0, 0, 0, -1, 1, 0, 0, -1, 0, 1, 0, 1, -1, -1, 1]);
    assert_eq!(transported_table(&kv4, &p), exterior_algebra::<F2>(2).table());
}

#[test]
fn exterior_one_over_rationals_is_dual_numbers() {
    assert_eq!(exterior_algebra::<Q>(1).table(), dual_numbers::<Q>().table());
    let e3 = exterior_algebra::<Q>(3);
    assert_eq!(e3.dim(), 8);
    // x1 * x0 = -x0 x1
    assert_eq!(e3.basis_product(2, 1)[3], Q::from_i64(-1));
    assert!(exterior_algebra::<F2>(3).hopf().is_some());
}

#[test]
fn upper_triangular_counts() {
    let t2 = upper_triangular_algebra::<F2>(2);
    assert_eq!((t2.dim(), t2.radical().unwrap().rows()), (3, 1));
    let t3 = upper_triangular_algebra::<Q>(3);
    assert_eq!((t3.dim(), t3.radical().unwrap().rows()), (6, 3));
}

#[test]
fn opposite_is_an_involution() {
    let kv4 = klein_four_algebra::<F2>();
    assert_eq!(kv4.opposite().table(), kv4.table());
    let t3 = upper_triangular_algebra::<Q>(3);
    assert_eq!(t3.opposite().opposite().table(), t3.table());
}

#[test]
fn opposite_of_t2_is_isomorphic_via_transpose() {
    let t2 = upper_triangular_algebra::<F2>(2);
    let op = t2.opposite();
    assert_ne!(op.table(), t2.table());
    // basis e11, e12, e22; transpose followed by reversing the index order sends e_ij to e_(3-j)(3-i)
    let phi = Matrix::<F2>::from_i64(3, 3, &[0, 0, 1, 0, 1, 0, 1, 0, 0]);
    for i in 0..3 {
        for j in 0..3 {
            let lhs = phi.apply(&op.basis_product(i, j));
            let rhs = t2.mul(phi.row(i), phi.row(j));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn self_injectivity() {
    assert!(is_self_injective(&Arc::new(dual_numbers::<F2>())).unwrap());
    assert!(!is_self_injective(&Arc::new(upper_triangular_algebra::<F2>(2))).unwrap());
    assert!(is_self_injective(&Arc::new(base_field::<F5>())).unwrap());
    assert!(is_self_injective(&Arc::new(klein_four_algebra::<F2>())).unwrap());
}

#[test]
fn non_group_tables_are_rejected() {
    let t = vec![vec![0, 1], vec![1, 1]];
    assert!(matches!(group_algebra::<F2>(&t), Err(Error::NotAGroup(_))));
}

#[test]
fn presets_parse() {
    assert_eq!(preset::<F2>("k[t]/t^2").unwrap().dim(), 2);
    assert_eq!(preset::<F2>("kV4").unwrap().dim(), 4);
    assert_eq!(preset::<F2>("exterior(3)").unwrap().dim(), 8);
    assert_eq!(preset::<F2>("T3").unwrap().dim(), 6);
    assert_eq!(preset::<F5>("kC5").unwrap().dim(), 5);
    assert!(preset::<F2>("nonsense").is_err());
}

#[test]
fn p_group_radicals_have_codimension_one() {
    let a = cyclic_group_algebra::<tate_core::F3>(3).unwrap();
    assert_eq!(a.radical().unwrap().rows(), 2);
    // characteristic coprime to the order: semisimple
    let b = cyclic_group_algebra::<F2>(3).unwrap();
    assert_eq!(b.radical().unwrap().rows(), 0);
}
