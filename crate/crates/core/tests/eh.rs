use proptest::prelude::*;

use qkvf_core::eh::cg::{derivation_on_sym, derivation_on_sym_tensor_h};
use qkvf_core::eh::space::section_fiber;
use qkvf_core::eh::{cg_projectors, q_basis_endos, real_structure, tau, trace_map, wedge_identity,
    QuaternionicSpace};
use qkvf_core::exact::{Basis, GaussianRational, IndexedTensor, LinearMap, SpaceDescriptor};
use qkvf_core::quaternion::C2Vector;

fn g(a: i64, b: i64) -> GaussianRational {
    GaussianRational::from_parts(a, b)
}

fn small() -> impl Strategy<Value = (i64, i64)> {
    (-4i64..=4, -4i64..=4)
}

fn vec_from(vals: &[(i64, i64)]) -> Vec<GaussianRational> {
    vals.iter().map(|&(a, b)| g(a, b)).collect()
}

fn tensor_from(space: &SpaceDescriptor, vals: &[(i64, i64)]) -> IndexedTensor {
    let basis = Basis::new(space);
    let dense: Vec<GaussianRational> = (0..basis.len())
        .map(|i| {
            let (a, b) = vals[(i * 7 + 3) % vals.len()];
            g(a, b + (i % 3) as i64 - 1)
        })
        .collect();
    IndexedTensor::from_dense(&basis, &dense)
}

#[test]
fn omega_sharp_is_injective() {
    for n in 1..=3 {
        let e = QuaternionicSpace::standard(2 * n).unwrap();
        let rows = e.omega_sharp_matrix().to_rows();
        let map = LinearMap::from_rows(&rows, 2 * n);
        let (rank, kernel) = map.rank_and_kernel();
        assert_eq!((rank, kernel.len()), (2 * n, 0));
    }
}

#[test]
fn odd_dimension_rejected() {
    assert!(QuaternionicSpace::standard(3).is_err());
}

#[test]
fn cg_equivariance_under_q() {
    let frames = [C2Vector::new(g(1, 0), g(0, 0)), C2Vector::new(g(2, 1), g(-1, 3))];
    for u in &frames {
        let (i, j, k) = q_basis_endos(u).unwrap();
        for m in 1..=4 {
            let cg = cg_projectors(m).unwrap();
            for a in [&i, &j, &k] {
                let on_tensor = derivation_on_sym_tensor_h(a, m).unwrap();
                let on_plus = derivation_on_sym(a, m + 1).unwrap();
                let on_minus = derivation_on_sym(a, m - 1).unwrap();
                assert_eq!(
                    cg.p_plus.compose(&on_tensor).unwrap(),
                    on_plus.compose(&cg.p_plus).unwrap()
                );
                // Q ⊂ sl(H), so the contraction ω_H is invariant.
                assert_eq!(
                    cg.p_minus.compose(&on_tensor).unwrap(),
                    on_minus.compose(&cg.p_minus).unwrap()
                );
                assert_eq!(
                    on_tensor.compose(&cg.embed_minus).unwrap(),
                    cg.embed_minus.compose(&on_minus).unwrap()
                );
            }
        }
    }
}

#[test]
fn trace_inverse_symbolic_small_cases() {
    let tr = trace_map(1, 1).unwrap();
    let wid = wedge_identity(1, 1).unwrap();
    assert_eq!(tr.compose(&wid).unwrap().to_dense(), vec![vec![g(1, 0)]]);
    assert!(trace_map(1, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn omega_sharp_intertwines_j(n in 1usize..=3, v in prop::collection::vec(small(), 6)) {
        let e = QuaternionicSpace::standard(2 * n).unwrap();
        let x = vec_from(&v[..2 * n]);
        let lhs = e.omega_sharp(&e.apply_j(&x).unwrap()).unwrap();
        let rhs = e.apply_j_dual(&e.omega_sharp(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn compatibility_on_samples(n in 1usize..=3, v in prop::collection::vec(small(), 6)) {
        let e = QuaternionicSpace::standard(2 * n).unwrap();
        prop_assert!(e.check_compatibility(&[vec_from(&v[..2 * n])]).unwrap());
    }

    #[test]
    fn tau_squared(n in 1usize..=2, k in 0usize..=4, m in 0usize..=3, v in prop::collection::vec(small(), 8)) {
        prop_assume!(k <= 2 * n);
        let space = section_fiber(n, k, m);
        let x = tensor_from(&space, &v);
        let twice = tau(k, m, &tau(k, m, &x).unwrap()).unwrap();
        let sign: GaussianRational = if (k + m) % 2 == 0 { 1.into() } else { (-1).into() };
        prop_assert_eq!(twice, x.scale(&sign));
    }

    #[test]
    fn tau_is_antilinear(k in 0usize..=2, m in 0usize..=2, v in prop::collection::vec(small(), 8), c in small()) {
        let space = section_fiber(1, k, m);
        let x = tensor_from(&space, &v);
        let c = g(c.0, c.1);
        prop_assert_eq!(tau(k, m, &x.scale(&c)).unwrap(), tau(k, m, &x).unwrap().scale(&c.conj()));
    }

    #[test]
    fn real_structure_on_general_tensors(v in prop::collection::vec(small(), 8)) {
        let space = qkvf_core::eh::trace::ext_tensor_dual(2, 2);
        let x = tensor_from(&space, &v);
        // J acts on three legs in ∧²E ⊗ E*, so its square is −1.
        let twice = real_structure(&real_structure(&x).unwrap()).unwrap();
        prop_assert_eq!(twice, x.scale(&(-1).into()));
    }
}
