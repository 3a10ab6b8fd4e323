mod common;

use std::sync::Arc;

use cohom_core::products::{white_product, white_product_explicit};
use cohom_core::qspace::GradedMap;
use cohom_core::{Error, Field, Matrix, QuantumSpace, Rat, RatFunc, Subspace};
use common::*;
use proptest::prelude::*;

#[test]
fn plane_hilbert_series() {
    assert_eq!(plane_q().hilbert(), vec![1, 2, 3, 4, 5]);
    assert_eq!(plane_2().hilbert(), vec![1, 2, 3, 4, 5]);
}

#[test]
fn plane_kernels_match_rewriting_oracle() {
    let p = plane_q();
    for d in 0..=D {
        assert_eq!(*p.ideal_component(d).unwrap(), plane_kernel_oracle(&q(), d), "degree {d}");
    }
    let p = plane_2();
    for d in 0..=D {
        assert_eq!(*p.ideal_component(d).unwrap(), plane_kernel_oracle(&Rat::from_i64(2), d), "degree {d}");
    }
}

#[test]
fn free_and_unit_spaces() {
    assert_eq!(QuantumSpace::<Rat>::free(2, 4).hilbert(), vec![1, 2, 4, 8, 16]);
    assert_eq!(QuantumSpace::<Rat>::free(3, 3).hilbert(), vec![1, 3, 9, 27]);
    let k = QuantumSpace::<Rat>::unit(4);
    assert_eq!(k.hilbert(), vec![1; 5]);
    assert_eq!(k.labels(), ["e".to_string()]);
}

#[test]
fn minimal_generators_of_plane() {
    let p = plane_q();
    assert_eq!(p.generators(2).unwrap().len(), 1);
    for d in 3..=D {
        assert!(p.generators(d).unwrap().is_empty());
    }
    assert_eq!(p.generator_degrees().unwrap(), vec![2]);
}

#[test]
fn presentation_errors() {
    let labels = vec!["x".to_string(), "y".to_string()];
    let r = |n: usize| vec![Rat::one(); n];
    assert_eq!(QuantumSpace::from_presentation(labels.clone(), &[(1, r(2))], 4).unwrap_err(), Error::DegreeTooLow(1));
    assert_eq!(QuantumSpace::from_presentation(labels.clone(), &[(5, r(32))], 4).unwrap_err(), Error::AboveCutoff { degree: 5, cutoff: 4 });
    assert_eq!(
        QuantumSpace::from_presentation(labels, &[(2, r(3))], 4).unwrap_err(),
        Error::DimensionMismatch { expected: 4, found: 3 }
    );
}

#[test]
fn cubic_relation_starts_in_degree_three() {
    // x y x - y x y: nothing in degree 2
    let labels = vec!["x".to_string(), "y".to_string()];
    let rel = vector::<Rat>(2, &[(Rat::one(), &[0, 1, 0]), (Rat::from_i64(-1), &[1, 0, 1])]);
    let a = QuantumSpace::from_presentation(labels, &[(3, rel)], 4).unwrap();
    // x r, y r, r x, r y are independent: each has a word the others lack
    assert_eq!(a.hilbert(), vec![1, 2, 4, 7, 12]);
    assert_eq!(a.generator_degrees().unwrap(), vec![3]);
}

#[test]
fn generated_subalgebra_of_one_generator() {
    let p = plane_q();
    let x = Subspace::from_rows(2, vec![vec![RatFunc::one(), RatFunc::zero()]]).unwrap();
    let g = p.generated(&x).unwrap();
    assert_eq!(g.hilbert(), vec![1, 1, 1, 1, 1]);
    assert_eq!(g.labels(), ["x".to_string()]);
    let everything = p.generated(&Subspace::full(2)).unwrap();
    assert!(everything.same_filtration(&p).unwrap());
}

#[test]
fn generated_inside_lazy_product() {
    // span of x⊗x and y⊗y inside plane(q) ∘ plane(q): relation (xx)(yy) = q^2 (yy)(xx)
    let p = plane_q();
    let w = white_product(&p, &p).unwrap();
    let gens = Subspace::from_rows(4, vec![vector(4, &[(RatFunc::one(), &[0])]), vector(4, &[(RatFunc::one(), &[3])])]).unwrap();
    let g = w.generated(&gens).unwrap();
    assert_eq!(g.hilbert(), vec![1, 2, 3, 4, 5]);
    let q2 = q().mul_ref(&q());
    assert!(g.same_filtration(&plane(&q2)).unwrap());
}

#[test]
fn lazy_white_product_matches_explicit() {
    let p = plane_q();
    let f = QuantumSpace::<RatFunc>::free(2, D);
    for (x, y) in [(&p, &p), (&p, &f), (&f, &p)] {
        let lazy = white_product(x, y).unwrap();
        let explicit = white_product_explicit(x, y).unwrap();
        assert_eq!(lazy.hilbert(), explicit.hilbert());
        assert!(lazy.same_filtration(&explicit).unwrap());
    }
    assert_eq!(white_product(&p, &p).unwrap().hilbert(), vec![1, 4, 9, 16, 25]);
}

#[test]
fn morphisms_between_planes() {
    let q = q();
    let p = Arc::new(plane(&q));
    // x -> y, y -> x maps plane(q) onto plane(q^-1)
    let swap = Matrix::from_rows(vec![vec![RatFunc::zero(), RatFunc::one()], vec![RatFunc::one(), RatFunc::zero()]]).unwrap();
    let inv_plane = Arc::new(plane(&q.inv().unwrap()));
    let ok = GradedMap::new(p.clone(), inv_plane, swap.clone()).unwrap().check_morphism().unwrap();
    assert!(ok.ok);
    let bad = GradedMap::new(p.clone(), p.clone(), swap).unwrap().check_morphism().unwrap();
    assert!(!bad.ok);
    assert_eq!(bad.failing_degree, Some(2));
    assert!(bad.witness.is_some());
    // diagonal scalings are endomorphisms
    let scale = GradedMap::new(p.clone(), p.clone(), diag(&[3, 5])).unwrap();
    assert!(scale.check_morphism().unwrap().ok);
    assert!(scale.check_morphism_exhaustive().unwrap().ok);
}

#[test]
fn projection_from_free_algebra() {
    let f = Arc::new(QuantumSpace::<Rat>::free(2, D));
    let p = Arc::new(plane_2());
    let id = Matrix::identity(2);
    assert!(GradedMap::new(f.clone(), p.clone(), id.clone()).unwrap().check_morphism().unwrap().ok);
    assert!(!GradedMap::new(p, f, id).unwrap().check_morphism().unwrap().ok);
}

#[test]
fn quotient_adds_relations() {
    let p = plane_2();
    let xx = vector::<Rat>(2, &[(Rat::one(), &[0, 0])]);
    let qt = p.quotient(&[(2, xx)]).unwrap();
    assert_eq!(qt.hilbert(), vec![1, 2, 2, 2, 2]);
}

fn arb_relations() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 0..=2)
}

fn space_from(rels: &[Vec<i64>]) -> QuantumSpace<Rat> {
    let labels = vec!["x".to_string(), "y".to_string()];
    let rels: Vec<(usize, Vec<Rat>)> =
        rels.iter().filter(|r| r.iter().any(|&c| c != 0)).map(|r| (2, r.iter().map(|&c| Rat::from_i64(c)).collect())).collect();
    QuantumSpace::from_presentation(labels, &rels, 3).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn white_product_dimensions_multiply(r1 in arb_relations(), r2 in arb_relations()) {
        let a = space_from(&r1);
        let b = space_from(&r2);
        let w = white_product(&a, &b).unwrap();
        let expected: Vec<usize> = a.hilbert().iter().zip(b.hilbert()).map(|(x, y)| x * y).collect();
        prop_assert_eq!(w.hilbert(), expected);
        prop_assert_eq!(w.to_explicit().unwrap().hilbert(), w.hilbert());
    }

    #[test]
    fn lazy_quotient_coordinates_agree(r1 in arb_relations(), r2 in arb_relations(), v in prop::collection::vec(-2i64..=2, 16)) {
        let a = space_from(&r1);
        let b = space_from(&r2);
        let lazy = white_product(&a, &b).unwrap();
        let explicit = white_product_explicit(&a, &b).unwrap();
        let v: Vec<Rat> = v.into_iter().map(Rat::from_i64).collect();
        prop_assert_eq!(lazy.contains(2, &v).unwrap(), explicit.contains(2, &v).unwrap());
    }

    #[test]
    fn kernels_are_ideal_closed(r1 in arb_relations()) {
        let a = space_from(&r1);
        prop_assert_eq!(a.check_ideal_closure().unwrap(), None);
    }
}
