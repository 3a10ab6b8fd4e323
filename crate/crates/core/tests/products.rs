mod common;

use cohom_core::products::{black_product, koszul_dual, triangle, white_product};
use cohom_core::{Error, Field, QuantumSpace, Rat, RatFunc, Subspace};
use common::*;
use proptest::prelude::*;

#[test]
fn dual_of_free_algebra() {
    let f = QuantumSpace::<Rat>::free(2, D);
    let d = koszul_dual(&f).unwrap();
    assert_eq!(d.hilbert(), vec![1, 2, 0, 0, 0]);
    assert_eq!(d.labels(), ["x1'".to_string(), "x2'".to_string()]);
}

#[test]
fn dual_plane_relations() {
    let q = q();
    let d = koszul_dual(&plane_q()).unwrap();
    assert_eq!(d.hilbert(), vec![1, 2, 1, 0, 0]);
    let one = RatFunc::one();
    let oracle = Subspace::from_rows(
        4,
        vec![
            vector(2, &[(one.clone(), &[0, 0])]),
            vector(2, &[(one.clone(), &[1, 1])]),
            vector(2, &[(one, &[0, 1]), (q.inv().unwrap(), &[1, 0])]),
        ],
    )
    .unwrap();
    assert_eq!(*d.ideal_component(2).unwrap(), oracle);
    assert_eq!(d.labels(), ["x'".to_string(), "y'".to_string()]);
}

#[test]
fn double_dual_is_identity() {
    let p = plane_q();
    let dd = koszul_dual(&koszul_dual(&p).unwrap()).unwrap();
    assert!(dd.same_filtration(&p).unwrap());
    assert_eq!(dd.labels(), p.labels());
}

#[test]
fn non_quadratic_input_rejected() {
    let labels = vec!["x".to_string(), "y".to_string()];
    let rel = vector::<Rat>(2, &[(Rat::one(), &[0, 1, 1])]);
    let a = QuantumSpace::from_presentation(labels, &[(3, rel)], 4).unwrap();
    assert_eq!(koszul_dual(&a).unwrap_err(), Error::NotQuadratic(3));
    assert_eq!(black_product(&a, &plane_2()).unwrap_err(), Error::NotQuadratic(3));
}

#[test]
fn end_of_plane_as_black_product() {
    for_both_fields();
}

fn check_end<F: Field>(q: &F) {
    let p = plane(q);
    let e = black_product(&koszul_dual(&p).unwrap(), &p).unwrap();
    assert_eq!(e.dim(2), 13);
    assert_eq!(*e.ideal_component(2).unwrap(), end_plane_oracle(q));
    assert_eq!(e.generator_degrees().unwrap(), vec![2]);
}

fn for_both_fields() {
    check_end(&q());
    check_end(&Rat::from_i64(2));
}

#[test]
fn black_with_free_factor_is_free() {
    let p = plane_2();
    let f = QuantumSpace::<Rat>::free(2, D);
    let b = black_product(&koszul_dual(&p).unwrap(), &f).unwrap();
    assert_eq!(b.hilbert(), vec![1, 4, 16, 64, 256]);
}

#[test]
fn triangle_with_unit_source_is_the_target() {
    let p = plane_q();
    let k = QuantumSpace::unit(D);
    let t = triangle(&k, &p).unwrap();
    assert!(t.same_filtration(&p).unwrap());
}

#[test]
fn triangle_into_free_is_free() {
    let p = plane_q();
    let f = QuantumSpace::<RatFunc>::free(2, D);
    assert_eq!(triangle(&p, &f).unwrap().hilbert(), vec![1, 4, 16, 64, 256]);
}

#[test]
fn triangle_of_planes_is_the_black_product() {
    let p = plane_q();
    let t = triangle(&p, &p).unwrap();
    let b = black_product(&koszul_dual(&p).unwrap(), &p).unwrap();
    assert_eq!(t.first_difference(&b).unwrap(), None);
    assert_eq!(t.labels()[1], "z2_1");
}

#[test]
fn unit_is_neutral_for_white_product() {
    let p = plane_q();
    let k = QuantumSpace::unit(D);
    for w in [white_product(&k, &p).unwrap(), white_product(&p, &k).unwrap()] {
        assert_eq!(w.hilbert(), p.hilbert());
        assert!(w.same_filtration(&p).unwrap());
    }
}

#[test]
fn white_product_is_associative() {
    // with big-endian pair letters both bracketings index the generators identically
    let a = QuantumSpace::quantum_plane(&Rat::from_i64(2), 3);
    let b = QuantumSpace::quantum_plane(&Rat::from_i64(3), 3);
    let c = QuantumSpace::<Rat>::free(2, 3);
    let left = white_product(&white_product(&a, &b).unwrap(), &c).unwrap();
    let right = white_product(&a, &white_product(&b, &c).unwrap()).unwrap();
    assert_eq!(left.first_difference(&right).unwrap(), None);
}

#[test]
fn cutoff_mismatch_rejected() {
    let a = QuantumSpace::<Rat>::free(2, 3);
    let b = QuantumSpace::<Rat>::free(2, 4);
    assert_eq!(white_product(&a, &b).unwrap_err(), Error::CutoffMismatch(3, 4));
}

fn quadratic(coeffs: &[Vec<i64>]) -> QuantumSpace<Rat> {
    let labels = vec!["x".to_string(), "y".to_string()];
    let rels: Vec<(usize, Vec<Rat>)> =
        coeffs.iter().filter(|r| r.iter().any(|&c| c != 0)).map(|r| (2, r.iter().map(|&c| Rat::from_i64(c)).collect())).collect();
    QuantumSpace::from_presentation(labels, &rels, 3).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn triangle_equals_dual_black(r1 in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 0..=2),
                                  r2 in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 0..=2)) {
        let a = quadratic(&r1);
        let b = quadratic(&r2);
        let t = triangle(&b, &a).unwrap();
        let k = black_product(&koszul_dual(&b).unwrap(), &a).unwrap();
        prop_assert_eq!(t.first_difference(&k).unwrap(), None);
    }

    #[test]
    fn double_koszul_dual(r1 in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 0..=3)) {
        let a = quadratic(&r1);
        let dd = koszul_dual(&koszul_dual(&a).unwrap()).unwrap();
        prop_assert!(dd.same_filtration(&a).unwrap());
    }
}
