//! Clebsch–Gordan split `S^mH ⊗ H ≅ S^{m+1}H ⊕ S^{m−1}H`.
//!
//! `S^mH` has the basis of symmetric products `u_I = u_{i₁}⋯u_{i_m}` (the
//! symmetrized tensors), indexed by weakly increasing `I`.

use num_traits::Zero;

use crate::error::{check_range, Result};
use crate::exact::{BasisIndex, Factor, GaussianRational, IndexedTensor, LinearMap,
    SpaceDescriptor};

pub fn sym_h(m: usize) -> SpaceDescriptor {
    SpaceDescriptor::new(vec![Factor::symmetric(2, m)])
}

pub fn sym_h_tensor_h(m: usize) -> SpaceDescriptor {
    SpaceDescriptor::new(vec![Factor::symmetric(2, m), Factor::plain(2)])
}

/// The three maps of the split, plus the inclusion of `S^{m+1}H` as
/// symmetric tensors so that `ι∘P₊ + E∘P₋ = id`.
#[derive(Clone, Debug)]
pub struct CgProjectors {
    pub m: usize,
    pub p_plus: LinearMap,
    pub p_minus: LinearMap,
    pub embed_minus: LinearMap,
    pub include_plus: LinearMap,
    /// Scale that makes `P₋∘E = id`.
    pub embed_scale: GaussianRational,
}

fn omega_h(a: usize, b: usize) -> i64 {
    match (a, b) {
        (0, 1) => 1,
        (1, 0) => -1,
        _ => 0,
    }
}

fn insert_sorted(idx: &[usize], t: usize) -> Vec<usize> {
    let mut v = idx.to_vec();
    let p = v.partition_point(|&x| x <= t);
    v.insert(p, t);
    v
}

fn remove_at(idx: &[usize], p: usize) -> Vec<usize> {
    let mut v = idx.to_vec();
    v.remove(p);
    v
}

/// `P₊(u_I ⊗ u_t) = u_{I∪t}`, the symmetrization.
pub fn p_plus(m: usize) -> Result<LinearMap> {
    let cod = sym_h(m + 1);
    LinearMap::from_basis_images(&sym_h_tensor_h(m), &cod, |b| {
        let idx = insert_sorted(b.part(0), b.part(1)[0]);
        IndexedTensor::basis_vector(&cod, BasisIndex::new(vec![idx]))
    })
}

/// `P₋(u_I ⊗ u_t) = Σ_p ω_H(u_{i_p}, u_t) u_{I∖i_p}`, contraction of one
/// symmetric slot against the new vector.
pub fn p_minus(m: usize) -> Result<LinearMap> {
    check_range("m", m, 1, usize::MAX)?;
    let cod = sym_h(m - 1);
    LinearMap::from_basis_images(&sym_h_tensor_h(m), &cod, |b| {
        let (idx, t) = (b.part(0), b.part(1)[0]);
        let mut out = IndexedTensor::zero(&cod);
        for p in 0..idx.len() {
            let w = omega_h(idx[p], t);
            if w != 0 {
                out.add_term(BasisIndex::new(vec![remove_at(idx, p)]), w.into())?;
            }
        }
        Ok(out)
    })
}

/// Unnormalized `E'(σ) = Σ_s (σ·u_s) ⊗ ũ_s` with the `ω_H`-dual basis
/// `ũ₁ = u₂`, `ũ₂ = −u₁`.
fn embed_unscaled(m: usize) -> Result<LinearMap> {
    let cod = sym_h_tensor_h(m);
    let dual = [(1usize, 1i64), (0usize, -1i64)];
    LinearMap::from_basis_images(&sym_h(m - 1), &cod, |b| {
        let mut out = IndexedTensor::zero(&cod);
        for (s, &(t, sign)) in dual.iter().enumerate() {
            let idx = insert_sorted(b.part(0), s);
            out.add_term(BasisIndex::new(vec![idx, vec![t]]), sign.into())?;
        }
        Ok(out)
    })
}

/// `ι(u_K) = (1/(m+1)) Σ_q u_{K∖k_q} ⊗ u_{k_q}`: the symmetric tensor of
/// degree `m+1` viewed in `S^mH ⊗ H`.
pub fn include_plus(m: usize) -> Result<LinearMap> {
    let cod = sym_h_tensor_h(m);
    let w = GaussianRational::ratio(1, m as i64 + 1);
    LinearMap::from_basis_images(&sym_h(m + 1), &cod, |b| {
        let k = b.part(0);
        let mut out = IndexedTensor::zero(&cod);
        for q in 0..k.len() {
            out.add_term(BasisIndex::new(vec![remove_at(k, q), vec![k[q]]]), w.clone())?;
        }
        Ok(out)
    })
}

pub fn cg_projectors(m: usize) -> Result<CgProjectors> {
    check_range("m", m, 1, usize::MAX)?;
    let pp = p_plus(m)?;
    let pm = p_minus(m)?;
    let raw = embed_unscaled(m)?;
    // P₋∘E' is a multiple of the identity by equivariance; read it off the
    // first basis vector and invert it.
    let comp = pm.compose(&raw)?;
    let c = comp.entry(0, 0);
    let embed_scale = c.inv().expect("nonzero Clebsch–Gordan constant");
    debug_assert!(comp.scale(&embed_scale) == LinearMap::identity(&sym_h(m - 1)));
    let embed_minus = raw.scale(&embed_scale);
    Ok(CgProjectors {
        m,
        p_plus: pp,
        p_minus: pm,
        embed_minus,
        include_plus: include_plus(m)?,
        embed_scale,
    })
}

/// A linear endomorphism of `H` acting on `S^mH` as a derivation.
pub fn derivation_on_sym(a: &crate::exact::Matrix, m: usize) -> Result<LinearMap> {
    let s = sym_h(m);
    LinearMap::from_basis_images(&s, &s, |b| {
        let idx = b.part(0);
        let mut out = IndexedTensor::zero(&s);
        for p in 0..idx.len() {
            for r in 0..2 {
                let c = &a[(r, idx[p])];
                if !c.is_zero() {
                    let new = insert_sorted(&remove_at(idx, p), r);
                    out.add_term(BasisIndex::new(vec![new]), c.clone())?;
                }
            }
        }
        Ok(out)
    })
}

/// The same derivation on `S^mH ⊗ H`.
pub fn derivation_on_sym_tensor_h(a: &crate::exact::Matrix, m: usize) -> Result<LinearMap> {
    let on_sym = derivation_on_sym(a, m)?;
    let h = SpaceDescriptor::plain(2);
    let mut on_h = LinearMap::from_rows(&a.to_rows(), 2);
    on_h = on_h.relabel(&h, &h)?;
    let left = on_sym.tensor_identity_right(&[Factor::plain(2)]);
    let right = on_h.tensor_identity_left(&[Factor::symmetric(2, m)]);
    left.add(&right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eh::space::QuaternionicSpace;

    #[test]
    fn contraction_matches_space() {
        let h = QuaternionicSpace::standard(2).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                let mut x = vec![GaussianRational::zero(); 2];
                let mut y = vec![GaussianRational::zero(); 2];
                x[a] = 1.into();
                y[b] = 1.into();
                assert_eq!(h.omega(&x, &y).unwrap(), GaussianRational::from(omega_h(a, b)));
            }
        }
    }

    #[test]
    fn m1_split() {
        let cg = cg_projectors(1).unwrap();
        assert_eq!(cg.p_plus.ncols(), 4);
        assert_eq!(cg.p_plus.rank() + cg.p_minus.rank(), 4);
        assert_eq!((cg.p_plus.nrows(), cg.p_minus.nrows()), (3, 1));
        // u ⊗ u ↦ u·u
        let s = sym_h_tensor_h(1);
        let uu = IndexedTensor::basis_vector(&s, BasisIndex::new(vec![vec![0], vec![0]])).unwrap();
        assert_eq!(
            cg.p_plus.apply(&uu).unwrap(),
            IndexedTensor::basis_vector(&sym_h(2), BasisIndex::new(vec![vec![0, 0]])).unwrap()
        );
        // u ⊗ ju − ju ⊗ u with ju = u₂ for the standard frame.
        let skew = IndexedTensor::from_terms(
            &s,
            [
                (BasisIndex::new(vec![vec![0], vec![1]]), 1.into()),
                (BasisIndex::new(vec![vec![1], vec![0]]), (-1).into()),
            ],
        )
        .unwrap();
        assert!(cg.p_plus.apply(&skew).unwrap().is_zero());
        let c = cg.p_minus.apply(&skew).unwrap();
        assert_eq!(c.len(), 1);
        assert!(!c.get(&BasisIndex::new(vec![vec![]])).is_zero());
    }

    #[test]
    fn resolution_of_identity() {
        for m in 1..=5 {
            let cg = cg_projectors(m).unwrap();
            let id = LinearMap::identity(&sym_h_tensor_h(m));
            let sum = cg
                .include_plus
                .compose(&cg.p_plus)
                .unwrap()
                .add(&cg.embed_minus.compose(&cg.p_minus).unwrap())
                .unwrap();
            assert_eq!(sum, id, "m = {m}");
            assert!(cg.p_plus.compose(&cg.embed_minus).unwrap().is_zero());
            assert_eq!(cg.p_minus.compose(&cg.embed_minus).unwrap(), LinearMap::identity(&sym_h(m - 1)));
            assert_eq!(cg.p_plus.compose(&cg.include_plus).unwrap(), LinearMap::identity(&sym_h(m + 1)));
            assert_eq!(cg.embed_scale, GaussianRational::ratio(1, m as i64 + 1));
        }
    }
}
