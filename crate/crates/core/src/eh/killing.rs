//! The local basis `I, J, K` of `Q ⊂ End(H)` attached to a frame `{u, ju}`
//! and the Killing form identity on `Q*`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Matrix};
use crate::quaternion::{j0_map, C2Vector};

/// Frame matrix `P = [u | j₀u]` and its inverse, whose rows are the dual
/// frame `u*, (ju)*`.
fn frame(u: &C2Vector) -> Result<(Matrix, Matrix)> {
    let ju = j0_map(u);
    let p = Matrix::from_rows(vec![
        vec![u.alpha.clone(), ju.alpha.clone()],
        vec![u.beta.clone(), ju.beta.clone()],
    ]);
    let inv = p
        .inverse()
        .ok_or_else(|| Error::DegenerateFrame(format!("u = ({}, {})", u.alpha, u.beta)))?;
    Ok((p, inv))
}

/// `x ⊗ ξ` with `x` a column of `a` and `ξ` a row of `b`: the rank-one
/// endomorphism `v ↦ ξ(v)·x`.
fn outer(a: &Matrix, col: usize, b: &Matrix, row: usize) -> Matrix {
    let mut m = Matrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = &a[(i, col)] * &b[(row, j)];
        }
    }
    m
}

/// `I = i(u⊗u* − ju⊗(ju)*)`, `J = ju⊗u* − u⊗(ju)*`,
/// `K = i(ju⊗u* + u⊗(ju)*)` as matrices on `H = ℂ²`.
///
/// These satisfy `I² = J² = K² = −1` and `K = J·I` (equivalently
/// `I·J = −K`).
pub fn q_basis_endos(u: &C2Vector) -> Result<(Matrix, Matrix, Matrix)> {
    let (p, pinv) = frame(u)?;
    let i = GaussianRational::i();
    let uu = outer(&p, 0, &pinv, 0);
    let jj = outer(&p, 1, &pinv, 1);
    let ju_u = outer(&p, 1, &pinv, 0);
    let u_ju = outer(&p, 0, &pinv, 1);
    Ok((
        uu.sub(&jj).scale(&i),
        ju_u.sub(&u_ju),
        ju_u.add(&u_ju).scale(&i),
    ))
}

/// `I*, J*, K*` as elements of `H* ⊗ H`: entry `(a, b)` is the coefficient
/// of `u^a ⊗ u_b`. Built directly from the dual-frame formulas.
pub fn q_dual_basis(u: &C2Vector) -> Result<(Matrix, Matrix, Matrix)> {
    let (p, pinv) = frame(u)?;
    let i = GaussianRational::i();
    // ξ ⊗ x with ξ a row of P⁻¹ and x a column of P.
    let dual_outer = |row: usize, col: usize| {
        let mut m = Matrix::zeros(2, 2);
        for a in 0..2 {
            for b in 0..2 {
                m[(a, b)] = &pinv[(row, a)] * &p[(b, col)];
            }
        }
        m
    };
    let uu = dual_outer(0, 0);
    let jj = dual_outer(1, 1);
    let u_ju = dual_outer(0, 1);
    let ju_u = dual_outer(1, 0);
    Ok((
        uu.sub(&jj).scale(&i),
        u_ju.sub(&ju_u),
        u_ju.add(&ju_u).scale(&i),
    ))
}

/// Natural pairing of `H ⊗ H*` with `H* ⊗ H`: `⟨A, B⟩ = Σ_{ab} A_{ab} B_{ab}`.
pub fn pairing(a: &Matrix, b: &Matrix) -> GaussianRational {
    let mut s = GaussianRational::zero();
    for i in 0..2 {
        for j in 0..2 {
            s += &a[(i, j)] * &b[(i, j)];
        }
    }
    s
}

/// Express `x` in the basis `basis` of a 3-dimensional matrix space; `None`
/// if it is not in the span.
fn coordinates(x: &Matrix, basis: &[Matrix; 3]) -> Option<[GaussianRational; 3]> {
    // Solve the 4×3 system by picking an invertible 3×3 minor.
    let flat = |m: &Matrix| [m[(0, 0)].clone(), m[(0, 1)].clone(), m[(1, 0)].clone(), m[(1, 1)].clone()];
    let cols: Vec<[GaussianRational; 4]> = basis.iter().map(flat).collect();
    let rhs = flat(x);
    for skip in 0..4 {
        let rows: Vec<usize> = (0..4).filter(|&r| r != skip).collect();
        let a = Matrix::from_rows(rows.iter().map(|&r| cols.iter().map(|c| c[r].clone()).collect()).collect());
        if let Some(inv) = a.inverse() {
            let b: Vec<GaussianRational> = rows.iter().map(|&r| rhs[r].clone()).collect();
            let c = inv.apply(&b);
            let recon: Vec<GaussianRational> =
                (0..4).map(|r| (0..3).map(|k| &c[k] * &cols[k][r]).sum()).collect();
            if recon.as_slice() != rhs.as_slice() {
                return None;
            }
            return Some([c[0].clone(), c[1].clone(), c[2].clone()]);
        }
    }
    None
}

/// Result of the Killing form comparison for one frame.
#[derive(Clone, Debug)]
pub struct KillingCheck {
    /// `B(e_a, e_b) = tr(ad e_a ∘ ad e_b)` on the basis `I*, J*, K*`.
    pub gram: Matrix,
    /// `B` as an element of `End(H) ⊗ End(H)`, entry `(2a+b, 2c+d)`.
    pub computed: Matrix,
    /// `−2(I⊗I + J⊗J + K⊗K)` in the same layout.
    pub expected: Matrix,
}

impl KillingCheck {
    pub fn holds(&self) -> bool {
        self.computed == self.expected
    }
}

fn flat_tensor(x: &Matrix, y: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(4, 4);
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    m[(2 * a + b, 2 * c + d)] = &x[(a, b)] * &y[(c, d)];
                }
            }
        }
    }
    m
}

/// Compute the Killing form of `span{I*, J*, K*}` (as endomorphisms of
/// `H*`) from its structure constants, transport it to `Q ⊗ Q` through the
/// dual basis, and compare with `−2(I⊗I + J⊗J + K⊗K)`.
pub fn killing_form_check(u: &C2Vector) -> Result<KillingCheck> {
    let (i, j, k) = q_basis_endos(u)?;
    let (is, js, ks) = q_dual_basis(u)?;
    // As an endomorphism of H*, ξ⊗x acts by γ ↦ γ(x)ξ, i.e. the matrix with
    // entries (a, b) from the H*⊗H coefficients.
    let dual = [is, js, ks];
    let structure = |x: &Matrix, y: &Matrix| -> Result<[GaussianRational; 3]> {
        let c = x.mul(y).sub(&y.mul(x));
        coordinates(&c, &dual).ok_or_else(|| Error::DegenerateFrame("Q* not closed under brackets".into()))
    };
    let mut ad = Vec::with_capacity(3);
    for x in &dual {
        let mut m = Matrix::zeros(3, 3);
        for (col, y) in dual.iter().enumerate() {
            let c = structure(x, y)?;
            for (row, v) in c.into_iter().enumerate() {
                m[(row, col)] = v;
            }
        }
        ad.push(m);
    }
    let mut gram = Matrix::zeros(3, 3);
    for a in 0..3 {
        for b in 0..3 {
            gram[(a, b)] = ad[a].mul(&ad[b]).trace();
        }
    }
    // Dual basis of Q*: combinations of I, J, K with ⟨X_a, e_b⟩ = δ_ab.
    let q = [i, j, k];
    let mut g = Matrix::zeros(3, 3);
    for c in 0..3 {
        for b in 0..3 {
            g[(c, b)] = pairing(&q[c], &dual[b]);
        }
    }
    let lam = g
        .inverse()
        .ok_or_else(|| Error::DegenerateFrame("pairing of Q with Q* is singular".into()))?;
    let vee: Vec<Matrix> = (0..3)
        .map(|a| {
            (0..3).fold(Matrix::zeros(2, 2), |acc, c| acc.add(&q[c].scale(&lam[(a, c)])))
        })
        .collect();
    let mut computed = Matrix::zeros(4, 4);
    for a in 0..3 {
        for b in 0..3 {
            computed = computed.add(&flat_tensor(&vee[a], &vee[b]).scale(&gram[(a, b)]));
        }
    }
    let expected = q
        .iter()
        .fold(Matrix::zeros(4, 4), |acc, x| acc.add(&flat_tensor(x, x)))
        .scale(&GaussianRational::from(-2));
    Ok(KillingCheck {
        gram,
        computed,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_parts(a, b)
    }

    fn frames() -> Vec<C2Vector> {
        vec![
            C2Vector::new(g(1, 0), g(0, 0)),
            C2Vector::new(g(1, 0), g(1, 0)),
            C2Vector::new(g(2, 0), g(0, 1)),
            C2Vector::new(GaussianRational::from_ratios((1, 2), (-3, 4)), g(5, -1)),
        ]
    }

    #[test]
    fn standard_frame() {
        let (i, _, _) = q_basis_endos(&frames()[0]).unwrap();
        let mut want = Matrix::zeros(2, 2);
        want[(0, 0)] = g(0, 1);
        want[(1, 1)] = g(0, -1);
        assert_eq!(i, want);
    }

    #[test]
    fn quaternion_relations() {
        let minus = Matrix::identity(2).neg();
        for u in frames() {
            let (i, j, k) = q_basis_endos(&u).unwrap();
            assert_eq!(i.mul(&i), minus);
            assert_eq!(j.mul(&j), minus);
            assert_eq!(k.mul(&k), minus);
            assert_eq!(j.mul(&i), k);
            assert_eq!(i.mul(&j), k.neg());
        }
    }

    #[test]
    fn dual_basis_is_transpose() {
        for u in frames() {
            let (i, j, k) = q_basis_endos(&u).unwrap();
            let (is, js, ks) = q_dual_basis(&u).unwrap();
            assert_eq!(is, i.transpose());
            assert_eq!(js, j.transpose());
            assert_eq!(ks, k.transpose());
            assert_eq!(pairing(&i, &is), g(-2, 0));
            assert_eq!(pairing(&i, &js), g(0, 0));
        }
    }

    #[test]
    fn killing_identity() {
        for u in frames() {
            let c = killing_form_check(&u).unwrap();
            assert_eq!(c.gram, Matrix::identity(3).scale(&g(-8, 0)));
            assert!(c.holds());
        }
    }

    #[test]
    fn degenerate_frame() {
        assert!(q_basis_endos(&C2Vector::new(g(0, 0), g(0, 0))).is_err());
    }
}
