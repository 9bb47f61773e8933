//! The rescaled trace `∧^kE ⊗ E* → ∧^{k−1}E`, its right inverse
//! `α ↦ α∧id_E`, and the trace-free projector.

use crate::error::{check_range, Result};
use crate::exact::basis::sort_exterior;
use crate::exact::{BasisIndex, Factor, GaussianRational, IndexedTensor, LinearMap,
    SpaceDescriptor};

/// `∧^kE ⊗ E*`, `E = ℂ^{2n}`.
pub fn ext_tensor_dual(n: usize, k: usize) -> SpaceDescriptor {
    SpaceDescriptor::new(vec![Factor::exterior(2 * n, k), Factor::plain(2 * n)])
}

pub fn ext(n: usize, k: usize) -> SpaceDescriptor {
    SpaceDescriptor::new(vec![Factor::exterior(2 * n, k)])
}

/// `e_J ⊗ e^b ↦ (1/(2n−k+1)) Σ_p (−1)^{k−p} δ_{j_p b} e_{J∖j_p}`.
///
/// The `E*` leg is paired with the last exterior slot, after moving `e_{j_p}`
/// there (sign `(−1)^{k−p}`, `p` counted from 1).
pub fn trace_map(n: usize, k: usize) -> Result<LinearMap> {
    check_range("k", k, 1, 2 * n)?;
    let cod = ext(n, k - 1);
    let w = GaussianRational::ratio(1, (2 * n - k + 1) as i64);
    LinearMap::from_basis_images(&ext_tensor_dual(n, k), &cod, |b| {
        let (jset, bidx) = (b.part(0), b.part(1)[0]);
        let mut out = IndexedTensor::zero(&cod);
        if let Some(p) = jset.iter().position(|&j| j == bidx) {
            let mut rest = jset.to_vec();
            rest.remove(p);
            let sign = if (k - 1 - p) % 2 == 0 { 1 } else { -1 };
            out.add_term(BasisIndex::new(vec![rest]), &w * &GaussianRational::from(sign))?;
        }
        Ok(out)
    })
}

/// `α ↦ α∧id_E = Σ_b (α∧e_b) ⊗ e^b`.
pub fn wedge_identity(n: usize, k: usize) -> Result<LinearMap> {
    check_range("k", k, 1, 2 * n)?;
    let cod = ext_tensor_dual(n, k);
    LinearMap::from_basis_images(&ext(n, k - 1), &cod, |a| {
        let mut out = IndexedTensor::zero(&cod);
        for b in 0..2 * n {
            let mut idx = a.part(0).to_vec();
            idx.push(b);
            if let Some(s) = sort_exterior(&mut idx) {
                out.add_term(BasisIndex::new(vec![idx, vec![b]]), s.into())?;
            }
        }
        Ok(out)
    })
}

/// `X ↦ X − tr(X)∧id_E`.
pub fn tracefree_projector(n: usize, k: usize) -> Result<LinearMap> {
    let tr = trace_map(n, k)?;
    let wid = wedge_identity(n, k)?;
    LinearMap::identity(&ext_tensor_dual(n, k)).sub(&wid.compose(&tr)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eh::space::real_structure;
    use crate::exact::binomial;

    #[test]
    fn right_inverse_all_degrees() {
        for n in 1..=3 {
            for k in 1..=2 * n {
                let tr = trace_map(n, k).unwrap();
                let wid = wedge_identity(n, k).unwrap();
                assert_eq!(tr.compose(&wid).unwrap(), LinearMap::identity(&ext(n, k - 1)), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn identity_traces_to_one() {
        let id_e = wedge_identity(1, 1).unwrap();
        let one = IndexedTensor::basis_vector(&ext(1, 0), BasisIndex::new(vec![vec![]])).unwrap();
        let x = id_e.apply(&one).unwrap();
        assert_eq!(trace_map(1, 1).unwrap().apply(&x).unwrap(), one);
        assert!(tracefree_projector(1, 1).unwrap().apply(&x).unwrap().is_zero());
    }

    #[test]
    fn explicit_example() {
        let e1 = IndexedTensor::basis_vector(&ext(2, 1), BasisIndex::new(vec![vec![0]])).unwrap();
        let x = wedge_identity(2, 2).unwrap().apply(&e1).unwrap();
        assert_eq!(trace_map(2, 2).unwrap().apply(&x).unwrap(), e1);
    }

    #[test]
    fn top_degree_tracefree_part_vanishes() {
        for n in 1..=3 {
            assert!(tracefree_projector(n, 2 * n).unwrap().is_zero());
        }
        let (r, k) = trace_map(1, 2).unwrap().rank_and_kernel();
        assert_eq!((r, k.len()), (2, 0));
    }

    #[test]
    fn projector_properties() {
        for n in 1..=2 {
            for k in 1..=2 * n {
                let p = tracefree_projector(n, k).unwrap();
                assert_eq!(p.compose(&p).unwrap(), p);
                assert!(trace_map(n, k).unwrap().compose(&p).unwrap().is_zero());
                let dim = binomial(2 * n, k) * 2 * n;
                assert_eq!(p.rank(), dim - binomial(2 * n, k - 1));
            }
        }
        assert_eq!(tracefree_projector(2, 1).unwrap().rank(), 15);
    }

    #[test]
    fn trace_intertwines_real_structures() {
        for n in 1..=2 {
            for k in 1..=2 * n {
                let tr = trace_map(n, k).unwrap();
                let dom = crate::exact::Basis::new(&ext_tensor_dual(n, k));
                for (i, b) in dom.iter().enumerate() {
                    let c = GaussianRational::from_parts(i as i64 % 3 - 1, 2);
                    let x = IndexedTensor::from_terms(dom.space(), [(b.clone(), c)]).unwrap();
                    let lhs = tr.apply(&real_structure(&x).unwrap()).unwrap();
                    let rhs = real_structure(&tr.apply(&x).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
