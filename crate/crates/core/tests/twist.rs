mod common;

use cohom_core::tensorspace::{kron, pairing};
use cohom_core::twist::{build_omega, check_admissible, twist_space};
use cohom_core::{Error, Field, Matrix, Primitive, QuantumSpace, Rat, RatFunc};
use common::*;
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

#[test]
fn identity_sigma_gives_identity_blocks() {
    let t = Primitive::from_sigma(&Matrix::<Rat>::identity(2), D).unwrap();
    for d in 0..=D {
        assert!(t.block(d).unwrap().is_identity());
    }
    assert!(t.is_identity());
}

#[test]
fn diagonal_sigma_degree_two() {
    let t = Primitive::from_sigma(&diag::<Rat>(&[2, 3]), D).unwrap();
    let expected = Matrix::diagonal(&[rat(1, 2), rat(1, 3), rat(1, 2), rat(1, 3)]);
    assert_eq!(t.block(2).unwrap(), expected);
    assert!(t.block(1).unwrap().is_identity());
    assert_eq!(t.block(0).unwrap(), Matrix::identity(1));
}

#[test]
fn scalar_sigma() {
    let c = Rat::from_i64(3);
    let t = Primitive::from_sigma(&Matrix::scalar(2, &c), D).unwrap();
    for d in 0..=D {
        let e = -((d * d.saturating_sub(1) / 2) as i64);
        assert_eq!(t.block(d).unwrap(), Matrix::scalar(2usize.pow(d as u32), &c.pow_i(e).unwrap()));
    }
}

#[test]
fn singular_sigma_rejected() {
    let s = Matrix::from_rows(vec![vec![Rat::one(), Rat::one()], vec![Rat::one(), Rat::one()]]).unwrap();
    assert_eq!(Primitive::from_sigma(&s, D).unwrap_err(), Error::Singular);
}

#[test]
fn blocks_are_validated() {
    let good = vec![Matrix::<Rat>::identity(1), Matrix::identity(2), diag(&[1, 2, 3, 4])];
    assert!(Primitive::from_blocks(2, good).is_ok());
    let bad_unit = vec![Matrix::<Rat>::identity(1), diag(&[1, 2])];
    assert!(matches!(Primitive::from_blocks(2, bad_unit), Err(Error::BadPrimitive(_))));
    let bad_shape = vec![Matrix::<Rat>::identity(1), Matrix::identity(2), Matrix::identity(3)];
    assert!(matches!(Primitive::from_blocks(2, bad_shape), Err(Error::BadPrimitive(_))));
}

/// `id^{⊗r} ⊗ (σ^{-r})^{⊗s}`.
fn expected_coboundary(sigma: &Matrix<Rat>, r: usize, s: usize) -> Matrix<Rat> {
    let n = sigma.rows();
    let p = sigma.pow(-(r as i64)).unwrap();
    let mut factors = vec![Matrix::identity(n); r];
    factors.extend(std::iter::repeat_n(p, s));
    kron(&factors)
}

#[test]
fn coboundary_of_sigma_primitive() {
    let sigma = Matrix::from_rows(vec![vec![rat(2, 1), rat(1, 1)], vec![rat(0, 1), rat(3, 1)]]).unwrap();
    let t = Primitive::from_sigma(&sigma, D).unwrap();
    for r in 0..=D {
        for s in 0..=D - r {
            assert_eq!(t.coboundary(r, s).unwrap(), expected_coboundary(&sigma, r, s), "(r, s) = ({r}, {s})");
        }
    }
    assert!(t.coboundary(2, 0).unwrap().is_identity());
    assert!(t.coboundary(0, 3).unwrap().is_identity());
}

#[test]
fn twisted_plane_is_a_plane() {
    let q = q();
    for (s, t) in [(1, 2), (3, 5)] {
        let theta = Primitive::from_sigma(&diag(&[s, t]), D).unwrap();
        let twisted = twist_space(&plane(&q), &theta).unwrap();
        let target = plane(&q.mul_ref(&RatFunc::from_ratio(t, s).unwrap()));
        assert_eq!(twisted.first_difference(&target).unwrap(), None, "(s, t) = ({s}, {t})");
    }
}

#[test]
fn twist_round_trip_and_dimensions() {
    let p = plane_q();
    let theta = Primitive::from_sigma(&diag(&[2, 7]), D).unwrap();
    let t = twist_space(&p, &theta).unwrap();
    assert_eq!(t.hilbert(), p.hilbert());
    let back = twist_space(&t, &theta.invert().unwrap()).unwrap();
    assert!(back.same_filtration(&p).unwrap());
}

#[test]
fn scalar_twist_fixes_the_space() {
    let p = plane_q();
    let theta = Primitive::from_sigma(&Matrix::scalar(2, &RatFunc::from_i64(5)), D).unwrap();
    assert!(check_admissible(&p, &theta).unwrap().second());
    assert!(twist_space(&p, &theta).unwrap().same_filtration(&p).unwrap());
}

#[test]
fn admissibility_reports() {
    let f = QuantumSpace::<Rat>::free(2, D);
    let shear = Matrix::from_rows(vec![vec![rat(1, 1), rat(1, 1)], vec![rat(0, 1), rat(1, 1)]]).unwrap();
    let theta = Primitive::from_sigma(&shear, D).unwrap();
    assert!(check_admissible(&f, &theta).unwrap().second());

    let p = plane_2();
    let diagonal = Primitive::from_sigma(&diag(&[3, 5]), D).unwrap();
    assert!(check_admissible(&p, &diagonal).unwrap().second());

    // a shear does not preserve the relation line of the plane
    let rep = check_admissible(&p, &theta).unwrap();
    assert!(!rep.primal());
    let degree = rep.primal_failure.unwrap();
    assert_eq!(twist_space(&p, &theta).unwrap_err(), Error::NotAdmissible(degree));
    assert_eq!(rep.dual_failure, Some(degree));
}

#[test]
fn twisting_is_functorial() {
    let p = plane_q();
    let a = Primitive::from_sigma(&diag(&[2, 3]), D).unwrap();
    let b = Primitive::from_sigma(&diag(&[5, 1]), D).unwrap();
    let twice = twist_space(&twist_space(&p, &a).unwrap(), &b).unwrap();
    let once = twist_space(&p, &a.then(&b).unwrap()).unwrap();
    assert!(twice.same_filtration(&once).unwrap());
}

#[test]
fn omega_of_identities_is_identity() {
    let id = Primitive::<Rat>::identity(2, D);
    assert!(build_omega(&id, &id).unwrap().is_identity());
}

#[test]
fn omega_degree_one_one_block_is_diagonal() {
    // on z-words, ∂Θ_{1,1} scales z_{i1}^{j1} z_{i2}^{j2} by σ_B[j2] / σ_A[i2]
    let (sa, sb) = ([2i64, 3], [5i64, 7]);
    let ta = Primitive::from_sigma(&diag::<Rat>(&sa), D).unwrap();
    let tb = Primitive::from_sigma(&diag::<Rat>(&sb), D).unwrap();
    let omega = build_omega(&ta, &tb).unwrap();
    let block = omega.coboundary(1, 1).unwrap();
    let n = 8; // B₁*⊗A₁⊗B₁
    for w1 in 0..n {
        for w2 in 0..n {
            let (j2, i2) = (w2 / 4, (w2 / 2) % 2);
            let expected = Rat::new(sb[j2], sa[i2]);
            let idx = w1 * n + w2;
            assert_eq!(block.get(idx, idx), &expected);
        }
    }
    let off: usize = (0..64).map(|i| (0..64).filter(|&j| i != j && !block.get(i, j).is_zero()).count()).sum();
    assert_eq!(off, 0);
}

fn arb_sigma() -> impl Strategy<Value = Matrix<Rat>> {
    prop::collection::vec(-3i64..=3, 4)
        .prop_map(|v| Matrix::from_rows(vec![vec![Rat::from_i64(v[0]), Rat::from_i64(v[1])], vec![Rat::from_i64(v[2]), Rat::from_i64(v[3])]]).unwrap())
        .prop_filter("invertible", |m| m.is_invertible())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coboundary_identity_for_random_sigma(s in arb_sigma()) {
        let t = Primitive::from_sigma(&s, 3).unwrap();
        for r in 0..=3 {
            for k in 0..=3 - r {
                prop_assert_eq!(t.coboundary(r, k).unwrap(), expected_coboundary(&s, r, k));
            }
        }
    }

    #[test]
    fn inverse_and_join_laws(s in arb_sigma(), u in arb_sigma()) {
        let a = Primitive::from_sigma(&s, 3).unwrap();
        let b = Primitive::from_sigma(&u, 3).unwrap();
        let ii = a.invert().unwrap().invert().unwrap();
        let j1 = Primitive::join(&a.invert().unwrap(), &b.invert().unwrap());
        let j2 = Primitive::join(&a, &b).invert().unwrap();
        let d1 = Primitive::join(&a, &b).dualize().unwrap();
        let d2 = Primitive::join(&a.dualize().unwrap(), &b.dualize().unwrap());
        for d in 0..=2 {
            prop_assert_eq!(ii.block(d).unwrap(), a.block(d).unwrap());
            prop_assert_eq!(j1.block(d).unwrap(), j2.block(d).unwrap());
            prop_assert_eq!(d1.block(d).unwrap(), d2.block(d).unwrap());
            prop_assert!(a.block(d).unwrap().mul(&a.invert().unwrap().block(d).unwrap()).unwrap().is_identity());
        }
    }

    #[test]
    fn dual_primitive_preserves_pairing(s in arb_sigma(), f in prop::collection::vec(-3i64..=3, 8), x in prop::collection::vec(-3i64..=3, 8)) {
        let t = Primitive::from_sigma(&s, 3).unwrap();
        let dual = t.dualize().unwrap();
        let f: Vec<Rat> = f.into_iter().map(Rat::from_i64).collect();
        let x: Vec<Rat> = x.into_iter().map(Rat::from_i64).collect();
        let lhs = pairing(&dual.apply(3, &f).unwrap(), &t.apply(3, &x).unwrap()).unwrap();
        prop_assert_eq!(lhs, pairing(&f, &x).unwrap());
    }

    #[test]
    fn hilbert_invariant_under_diagonal_twist(s in 1i64..=6, t in 1i64..=6, c in 1i64..=5) {
        let p = QuantumSpace::quantum_plane(&Rat::from_i64(c), 4);
        let theta = Primitive::from_sigma(&diag(&[s, -t]), 4).unwrap();
        prop_assert_eq!(twist_space(&p, &theta).unwrap().hilbert(), p.hilbert());
    }
}
