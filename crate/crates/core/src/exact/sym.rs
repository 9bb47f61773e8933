//! Symmetrization and antisymmetrization on plain tensor powers.

use num_traits::Zero;

use super::basis::{BasisIndex, FactorKind, SpaceDescriptor};
use super::scalar::GaussianRational;
use super::tensor::IndexedTensor;
use crate::error::{Error, Result};

fn check_plain_power(space: &SpaceDescriptor) -> Result<()> {
    let fs = space.factors();
    if fs.iter().any(|f| f.kind != FactorKind::Plain) {
        return Err(Error::DimensionMismatch(format!("{space} is not a plain tensor power")));
    }
    if fs.windows(2).any(|w| w[0].dim != w[1].dim) {
        return Err(Error::DimensionMismatch(format!("{space} has factors of unequal dimension")));
    }
    Ok(())
}

/// All permutations of `0..m` with their signs, in lexicographic order.
pub fn permutations(m: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let m = used.len();
        if cur.len() == m {
            let mut inv = 0;
            for i in 0..m {
                for j in i + 1..m {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for i in 0..m {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

fn average(t: &IndexedTensor, signed: bool) -> Result<IndexedTensor> {
    check_plain_power(t.space())?;
    let m = t.space().factors().len();
    let perms = permutations(m);
    let weight = GaussianRational::ratio(1, perms.len() as i64);
    let mut out = IndexedTensor::zero(t.space());
    for (idx, c) in t.iter() {
        for (p, s) in &perms {
            let moved = BasisIndex::new(p.iter().map(|&i| idx.part(i).to_vec()).collect());
            let mut v = c * &weight;
            if signed && *s < 0 {
                v = -v;
            }
            if !v.is_zero() {
                out.add_term_unchecked(moved, v);
            }
        }
    }
    Ok(out)
}

/// `(1/m!) Σ_σ σ·t` on `(ℂ^d)^{⊗m}`.
pub fn symmetrize(t: &IndexedTensor) -> Result<IndexedTensor> {
    average(t, false)
}

/// `(1/m!) Σ_σ sgn(σ) σ·t` on `(ℂ^d)^{⊗m}`.
pub fn antisymmetrize(t: &IndexedTensor) -> Result<IndexedTensor> {
    average(t, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::basis::Factor;
    use proptest::prelude::*;

    fn e(parts: &[usize]) -> BasisIndex {
        BasisIndex::new(parts.iter().map(|&i| vec![i]).collect())
    }

    fn power(d: usize, m: usize) -> SpaceDescriptor {
        SpaceDescriptor::new(vec![Factor::plain(d); m])
    }

    #[test]
    fn symmetrize_pair() {
        let s = power(2, 2);
        let t = IndexedTensor::basis_vector(&s, e(&[0, 1])).unwrap();
        let half = GaussianRational::ratio(1, 2);
        let want = IndexedTensor::from_terms(&s, [(e(&[0, 1]), half.clone()), (e(&[1, 0]), half)]).unwrap();
        assert_eq!(symmetrize(&t).unwrap(), want);
        let diag = IndexedTensor::basis_vector(&s, e(&[0, 0])).unwrap();
        assert!(antisymmetrize(&diag).unwrap().is_zero());
    }

    #[test]
    fn rejects_mixed_factors() {
        let s = SpaceDescriptor::new(vec![Factor::plain(2), Factor::plain(3)]);
        assert!(symmetrize(&IndexedTensor::zero(&s)).is_err());
        let s = SpaceDescriptor::new(vec![Factor::plain(2), Factor::exterior(2, 1)]);
        assert!(antisymmetrize(&IndexedTensor::zero(&s)).is_err());
    }

    fn random_tensor() -> impl Strategy<Value = IndexedTensor> {
        (2usize..4).prop_flat_map(|m| {
            proptest::collection::vec((proptest::collection::vec(0usize..3, m), -3i64..4, -3i64..4), 0..6)
                .prop_map(move |ts| {
                    let s = power(3, m);
                    let mut t = IndexedTensor::zero(&s);
                    for (idx, a, b) in ts {
                        t.add_term(e(&idx), GaussianRational::from_parts(a, b)).unwrap();
                    }
                    t
                })
        })
    }

    proptest! {
        #[test]
        fn projectors(t in random_tensor()) {
            let s = symmetrize(&t).unwrap();
            let a = antisymmetrize(&t).unwrap();
            prop_assert_eq!(symmetrize(&s).unwrap(), s.clone());
            prop_assert_eq!(antisymmetrize(&a).unwrap(), a.clone());
            prop_assert!(symmetrize(&a).unwrap().is_zero());
            prop_assert!(antisymmetrize(&s).unwrap().is_zero());
        }
    }
}
