//! `S^mℍ`-valued functions on the fiber, the matrices `ρ_m`, the lift of a
//! degree `(m, 0)` polynomial and the real structure `τ̃`.
//!
//! A point of the fiber is `u₀*a` with `a = z + jw`. In left `ℂ`-coordinates
//! on `{1, j}` one has `a = z·1 + w̄·j` and `ja = −w·1 + z̄·j`.

use num_traits::Zero;

use crate::eh::space::{j_on_factor_index, section_fiber};
use crate::error::{Error, Result};
use crate::exact::{Basis, BasisIndex, Factor, GaussianRational, IndexedTensor, Poly,
    SpaceDescriptor};

use super::poly::{FiberPoly, NVARS, W, WB, Z, ZB};

/// Rows of `ρ_m` for a quaternion `Z + jW` with polynomial coordinates:
/// row `i` expands `(Z·1 + W̄·j)^{m−i} (−W·1 + Z̄·j)^i` in the commuting
/// symbols `1, j`, entry `i'` being the coefficient of `1^{m−i'} j^{i'}`.
fn rho_generic(z: &Poly, w: &Poly, zb: &Poly, wb: &Poly, m: usize) -> Vec<Vec<Poly>> {
    let nv = z.nvars();
    let a = [z.clone(), wb.clone()];
    let ja = [w.neg(), zb.clone()];
    let mul = |acc: &[Poly], f: &[Poly; 2]| -> Vec<Poly> {
        let mut out = vec![Poly::zero(nv); acc.len() + 1];
        for (d, c) in acc.iter().enumerate() {
            out[d].add_assign(&c.mul(&f[0]));
            out[d + 1].add_assign(&c.mul(&f[1]));
        }
        out
    };
    (0..=m)
        .map(|i| {
            let mut acc = vec![Poly::one(nv)];
            for _ in 0..m - i {
                acc = mul(&acc, &a);
            }
            for _ in 0..i {
                acc = mul(&acc, &ja);
            }
            acc
        })
        .collect()
}

fn fiber_vars() -> [Poly; 4] {
    [Z, W, ZB, WB].map(|v| Poly::var(NVARS, v))
}

/// `ρ_m(a)` as an `(m+1)×(m+1)` matrix of fiber polynomials: `ξ̃ ↦ ξ̃·ρ_m(a)`
/// in row-vector convention is `S^m` of right multiplication by `a`.
pub fn rho_m_matrix(m: usize) -> Vec<Vec<FiberPoly>> {
    let [z, w, zb, wb] = fiber_vars();
    rho_generic(&z, &w, &zb, &wb, m)
        .into_iter()
        .map(|row| row.into_iter().map(FiberPoly::from_poly).collect())
        .collect()
}

/// Coordinates of the product `ab` with `a = z + jw`, `b = z' + jw'`,
/// in eight variables `(z, w, z̄, w̄, z', w', z̄', w̄')`:
/// `ab = (zz' − w̄w') + j(z̄w' + wz')`.
fn product_coords() -> [Poly; 4] {
    let v = |i| Poly::var(8, i);
    let (z, w, zb, wb) = (v(0), v(1), v(2), v(3));
    let (z2, w2, zb2, wb2) = (v(4), v(5), v(6), v(7));
    let pz = z.mul(&z2).sub(&wb.mul(&w2));
    let pw = zb.mul(&w2).add(&w.mul(&z2));
    let pzb = zb.mul(&zb2).sub(&w.mul(&wb2));
    let pwb = z.mul(&wb2).add(&wb.mul(&zb2));
    [pz, pw, pzb, pwb]
}

fn embed8(p: &Poly, offset: usize) -> Poly {
    let images: Vec<Poly> = (0..NVARS).map(|i| Poly::var(8, i + offset)).collect();
    p.substitute(&images)
}

/// `ρ_m(ab) = ρ_m(a)·ρ_m(b)` as an identity of polynomials in two
/// independent quaternions.
pub fn rho_homomorphism_holds(m: usize) -> bool {
    let [pz, pw, pzb, pwb] = product_coords();
    let lhs = rho_generic(&pz, &pw, &pzb, &pwb, m);
    let [z, w, zb, wb] = fiber_vars();
    let base = rho_generic(&z, &w, &zb, &wb, m);
    let pa: Vec<Vec<Poly>> = base.iter().map(|r| r.iter().map(|p| embed8(p, 0)).collect()).collect();
    let pb: Vec<Vec<Poly>> = base.iter().map(|r| r.iter().map(|p| embed8(p, 4)).collect()).collect();
    (0..=m).all(|i| {
        (0..=m).all(|j| {
            let mut s = Poly::zero(8);
            for l in 0..=m {
                s.add_assign(&pa[i][l].mul(&pb[l][j]));
            }
            s == lhs[i][j]
        })
    })
}

/// `ξ̃ = Σ_i ξ̃_i 1^{m−i} j^i` with each `ξ̃_i` a `∧^kE`-valued fiber
/// function, stored densely over the basis of `∧^kE`, `E = ℂ^{2n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmHValuedFiberFn {
    n: usize,
    k: usize,
    m: usize,
    components: Vec<Vec<FiberPoly>>,
}

fn ext_space(n: usize, k: usize) -> SpaceDescriptor {
    SpaceDescriptor::new(vec![Factor::exterior(2 * n, k)])
}

impl SmHValuedFiberFn {
    pub fn new(n: usize, k: usize, components: Vec<Vec<FiberPoly>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::DimensionMismatch("need at least one component".into()));
        }
        let dim = ext_space(n, k).dim();
        if let Some(bad) = components.iter().find(|c| c.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "component of length {} for ∧^{k} of dimension {dim}",
                bad.len()
            )));
        }
        Ok(Self {
            n,
            k,
            m: components.len() - 1,
            components,
        })
    }

    /// Scalar-valued (`k = 0`) function.
    pub fn scalar(components: Vec<FiberPoly>) -> Result<Self> {
        Self::new(1, 0, components.into_iter().map(|c| vec![c]).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[Vec<FiberPoly>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &[FiberPoly] {
        &self.components[i]
    }

    fn map(&self, f: impl Fn(&FiberPoly) -> FiberPoly) -> Self {
        Self {
            components: self
                .components
                .iter()
                .map(|c| c.iter().map(&f).collect())
                .collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        self.map(|p| p.scale(c))
    }

    /// Pull back along right multiplication by a quaternion whose action on
    /// the coordinates `(z, w, z̄, w̄)` is `images`.
    pub fn pullback(&self, images: &[FiberPoly; 4]) -> Self {
        self.map(|p| p.substitute(images))
    }

    /// `J_E^k` on the coefficient leg combined with complex conjugation of
    /// the function: `Σ_J f_J e_J ↦ Σ_J conj(f_J) J_E(e_J)`.
    pub fn j_conj(&self) -> Self {
        let basis = Basis::new(&ext_space(self.n, self.k));
        let factor = Factor::exterior(2 * self.n, self.k);
        let components = self
            .components
            .iter()
            .map(|c| {
                let mut out = vec![FiberPoly::zero(); basis.len()];
                for (pos, f) in c.iter().enumerate() {
                    if f.is_zero() {
                        continue;
                    }
                    let idx = basis.get(pos);
                    let (s, new) = j_on_factor_index(&factor, idx.part(0));
                    let q = basis
                        .position(&BasisIndex::new(vec![new]))
                        .expect("J_E preserves the exterior basis");
                    out[q] = out[q].add(&f.conj().scale(&GaussianRational::from(s)));
                }
                out
            })
            .collect();
        Self {
            components,
            ..self.clone()
        }
    }

    /// Every component `i` has pure bidegree `(m−i, i)`.
    pub fn is_pure_type(&self) -> bool {
        let m = self.m as i64;
        self.components
            .iter()
            .enumerate()
            .all(|(i, c)| c.iter().all(|f| f.has_bidegree(m - i as i64, i as i64)))
    }
}

/// `R_j^*`: right multiplication by `j` sends `z + jw` to `−w̄ + jz̄`.
pub fn r_j_images() -> [FiberPoly; 4] {
    [
        FiberPoly::var(WB).neg(),
        FiberPoly::var(ZB),
        FiberPoly::var(W).neg(),
        FiberPoly::var(Z),
    ]
}

/// `R_{−1}^*`.
pub fn r_minus_one_images() -> [FiberPoly; 4] {
    [Z, W, ZB, WB].map(|v| FiberPoly::var(v).neg())
}

fn ensure_pure_holomorphic(n: usize, k: usize, m: usize, xi0: &[FiberPoly]) -> Result<()> {
    let dim = ext_space(n, k).dim();
    if xi0.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "expected {dim} coefficients for ∧^{k}, got {}",
            xi0.len()
        )));
    }
    if xi0.iter().all(|f| f.has_bidegree(m as i64, 0)) {
        Ok(())
    } else {
        Err(Error::NotPureBidegree(m, 0))
    }
}

/// The unique `ρ_m`-equivariant function with component 0 equal to `xi0`:
/// writing `xi0 = Σ_i c_i z^{m−i} w^i`, `ξ̃ = Σ_i (−1)^i c_i a^{m−i}(ja)^i`.
pub fn lift_reconstruct(n: usize, k: usize, m: usize, xi0: &[FiberPoly]) -> Result<SmHValuedFiberFn> {
    ensure_pure_holomorphic(n, k, m, xi0)?;
    let rho = rho_m_matrix(m);
    let mut components = vec![vec![FiberPoly::zero(); xi0.len()]; m + 1];
    for (pos, f) in xi0.iter().enumerate() {
        for i in 0..=m {
            // Pure (m,0) polynomials carry no r⁻², so the numerator is f.
            let c = f.numerator().coeff(&[(m - i) as u32, i as u32, 0, 0]);
            if c.is_zero() {
                continue;
            }
            let c = if i % 2 == 0 { c } else { -c };
            for (ip, comp) in components.iter_mut().enumerate() {
                comp[pos] = comp[pos].add(&rho[i][ip].scale(&c));
            }
        }
    }
    SmHValuedFiberFn::new(n, k, components)
}

/// Lift of a constant section value `ξ ∈ ∧^kE ⊗ S^mH`, read in the basis
/// `u^{m−i}(ju)^i`: the lift takes the value `ξ_i` on `1^{m−i}j^i` at `u₀*`,
/// so `c_i = (−1)^i ξ_i`.
pub fn lift_section(n: usize, k: usize, m: usize, xi: &IndexedTensor) -> Result<SmHValuedFiberFn> {
    let space = section_fiber(n, k, m);
    if xi.space() != &space {
        return Err(Error::DimensionMismatch(format!("expected {space}, got {}", xi.space())));
    }
    let basis = Basis::new(&ext_space(n, k));
    let mut xi0 = vec![FiberPoly::zero(); basis.len()];
    for (idx, c) in xi.iter() {
        let pos = basis
            .position(&BasisIndex::new(vec![idx.part(0).to_vec()]))
            .expect("exterior index");
        let i = idx.part(1).iter().filter(|&&t| t == 1).count();
        let sign = if i % 2 == 0 { c.clone() } else { -c.clone() };
        let mono = Poly::monomial(vec![(m - i) as u32, i as u32, 0, 0], sign);
        xi0[pos] = xi0[pos].add(&FiberPoly::from_poly(mono));
    }
    lift_reconstruct(n, k, m, &xi0)
}

/// `τ̃(ξ̃)_i = J_E^k conj(R_j^* ξ̃_i)`.
pub fn tau_tilde(xi: &SmHValuedFiberFn) -> SmHValuedFiberFn {
    xi.pullback(&r_j_images()).j_conj()
}

/// `ξ̃_i = (−1)^{m−i} J_E^k conj(ξ̃_{m−i})` for every `i`.
pub fn satisfies_reality_criterion(xi: &SmHValuedFiberFn) -> bool {
    let jc = xi.j_conj();
    let m = xi.m;
    (0..=m).all(|i| {
        let want: Vec<FiberPoly> = if (m - i) % 2 == 0 {
            jc.components[m - i].clone()
        } else {
            jc.components[m - i].iter().map(FiberPoly::neg).collect()
        };
        xi.components[i] == want
    })
}

/// `(R_b)^* ξ̃ = ξ̃·ρ_m(b)` as a polynomial identity in two independent
/// quaternions. Requires components without `r⁻²`.
pub fn equivariance_holds(xi: &SmHValuedFiberFn) -> bool {
    if xi
        .components
        .iter()
        .flatten()
        .any(|f| f.inv_r2_power() != 0)
    {
        return false;
    }
    let prod = product_coords();
    let [z, w, zb, wb] = fiber_vars();
    let rho: Vec<Vec<Poly>> = rho_generic(&z, &w, &zb, &wb, xi.m)
        .iter()
        .map(|r| r.iter().map(|p| embed8(p, 4)).collect())
        .collect();
    let dim = xi.components[0].len();
    (0..dim).all(|pos| {
        (0..=xi.m).all(|ip| {
            let lhs = xi.components[ip][pos].numerator().substitute(&prod);
            let mut rhs = Poly::zero(8);
            for i in 0..=xi.m {
                rhs.add_assign(&embed8(xi.components[i][pos].numerator(), 0).mul(&rho[i][ip]));
            }
            lhs == rhs
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(v: usize) -> FiberPoly {
        FiberPoly::var(v)
    }

    #[test]
    fn rho_small_cases() {
        assert_eq!(rho_m_matrix(0), vec![vec![FiberPoly::one()]]);
        assert_eq!(
            rho_m_matrix(1),
            vec![vec![fp(Z), fp(WB)], vec![fp(W).neg(), fp(ZB)]]
        );
        assert_eq!(rho_m_matrix(2)[0][0], fp(Z).pow(2));
    }

    #[test]
    fn rho_entry_bidegrees() {
        for m in 0..=4 {
            let rho = rho_m_matrix(m);
            for row in &rho {
                for (ip, p) in row.iter().enumerate() {
                    assert!(p.has_bidegree((m - ip) as i64, ip as i64));
                }
            }
        }
    }

    #[test]
    fn circle_subgroup_is_diagonal() {
        let at_w0 = [fp(Z), FiberPoly::zero(), fp(ZB), FiberPoly::zero()];
        for m in 0..=3 {
            let rho = rho_m_matrix(m);
            for i in 0..=m {
                for ip in 0..=m {
                    let want = if i == ip {
                        fp(Z).pow((m - i) as u32).mul(&fp(ZB).pow(i as u32))
                    } else {
                        FiberPoly::zero()
                    };
                    assert_eq!(rho[i][ip].substitute(&at_w0), want);
                }
            }
        }
    }

    #[test]
    fn lift_of_z() {
        let xi = lift_reconstruct(1, 0, 1, &[fp(Z)]).unwrap();
        assert_eq!(xi.components(), &[vec![fp(Z)], vec![fp(WB)]]);
        let one = lift_reconstruct(1, 0, 0, &[FiberPoly::one()]).unwrap();
        assert_eq!(one.components(), &[vec![FiberPoly::one()]]);
    }

    #[test]
    fn lift_rejects_mixed_type() {
        let err = lift_reconstruct(1, 0, 1, &[fp(ZB)]).unwrap_err();
        assert!(matches!(err, Error::NotPureBidegree(1, 0)));
    }

    #[test]
    fn rj_pullback_on_lifts() {
        // (R_j^*ξ̃)_i = (−1)^{m−i} ξ̃_{m−i}
        let xi = lift_reconstruct(1, 0, 2, &[fp(Z).mul(&fp(W)).add(&fp(W).pow(2))]).unwrap();
        let pulled = xi.pullback(&r_j_images());
        for i in 0..=2 {
            let want = if (2 - i) % 2 == 0 {
                xi.component(2 - i).to_vec()
            } else {
                xi.component(2 - i).iter().map(FiberPoly::neg).collect()
            };
            assert_eq!(pulled.component(i), want.as_slice());
        }
    }

    #[test]
    fn constant_real_function_is_fixed() {
        let c = SmHValuedFiberFn::scalar(vec![FiberPoly::constant(GaussianRational::from(3))]).unwrap();
        assert_eq!(tau_tilde(&c), c);
    }
}
