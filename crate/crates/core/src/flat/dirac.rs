//! `∇`, `𝔇`, `𝔇⁰` on the flat model and the quaternionic condition.

use num_traits::Zero;

use super::field::{monomial_factor, PolyField};
use crate::eh::space::section_fiber;
use crate::eh::{trace_map, tracefree_projector};
use crate::error::{check_range, Error, Result};
use crate::exact::{BasisIndex, Factor, GaussianRational, IndexedTensor, LinearMap, Matrix,
    SpaceDescriptor};
use crate::quaternion::{qmul, Quaternion};

/// `Φ(e_b ⊗ u_t)` as a complex vector in `ℝ^{4n} ⊗ ℂ`, stored in column
/// `2b + t` of a `4n × 4n` matrix.
///
/// `E = ℍⁿ` as a right module with `e_{2a} = 1`, `e_{2a+1} = j` in slot `a`,
/// `H = ℍ` as a left module with `u₀ = 1`, `u₁ = j`, and
/// `Φ(e⊗h) = ½(e·i·h + i·(e·h))`. Vectors fixed by `J_E ⊗ J_H` go to real
/// vectors; for example `Φ(e₀⊗u₀ + e₁⊗u₁) = ∂/∂x₂` (the `i`-coordinate).
pub fn identification_matrix(n: usize) -> Matrix {
    let dim = 4 * n;
    let mut m = Matrix::zeros(dim, dim);
    let half = GaussianRational::ratio(1, 2);
    let im = GaussianRational::i();
    let qe = [Quaternion::one(), Quaternion::j()];
    for a in 0..n {
        for (p, e) in qe.iter().enumerate() {
            for (t, h) in qe.iter().enumerate() {
                let with_i = qmul(&qmul(e, &Quaternion::i()), h).components();
                let plain = qmul(e, h).components();
                let col = 2 * (2 * a + p) + t;
                for c in 0..4 {
                    let v = GaussianRational::from(with_i[c].clone())
                        + &im * &GaussianRational::from(plain[c].clone());
                    m[(4 * a + c, col)] = &half * &v;
                }
            }
        }
    }
    m
}

/// `ω_{H*}♯(u^t) = sign · u_h`.
fn omega_dual_sharp(t: usize) -> (i64, usize) {
    if t == 0 {
        (-1, 1)
    } else {
        (1, 0)
    }
}

fn insert_sorted(idx: &[usize], t: usize) -> Vec<usize> {
    let mut v = idx.to_vec();
    let p = v.partition_point(|&x| x <= t);
    v.insert(p, t);
    v
}

fn section_params(s: &PolyField) -> Result<(usize, usize, usize)> {
    let fs = s.legs().factors();
    let bad = || Error::DimensionMismatch(format!("{} is not ∧^kE ⊗ S^mH", s.legs()));
    if fs.len() != 2 || fs[1].dim != 2 || fs[0].dim % 2 != 0 || s.nvars() != 2 * fs[0].dim {
        return Err(bad());
    }
    let k = match fs[0].kind {
        crate::exact::FactorKind::Exterior(k) => k,
        _ => return Err(bad()),
    };
    let m = match fs[1].kind {
        crate::exact::FactorKind::Symmetric(m) => m,
        _ => return Err(bad()),
    };
    Ok((fs[0].dim / 2, k, m))
}

/// `∇s` in `∧^kE ⊗ S^mH ⊗ E* ⊗ H*`, using `dx_μ = Σ Φ_{μ,(b,t)} e^b ⊗ u^t`.
pub fn nabla(s: &PolyField) -> Result<PolyField> {
    let (n, _, _) = section_params(s)?;
    let phi = identification_matrix(n);
    let mut legs = s.legs().factors().to_vec();
    legs.push(Factor::plain(2 * n));
    legs.push(Factor::plain(2));
    let mut out = PolyField::zero(&SpaceDescriptor::new(legs), s.nvars());
    for (idx, f) in s.iter() {
        for mu in 0..s.nvars() {
            let df = f.derivative(mu);
            if df.is_zero() {
                continue;
            }
            for col in 0..4 * n {
                let c = &phi[(mu, col)];
                if c.is_zero() {
                    continue;
                }
                let mut parts = idx.parts().to_vec();
                parts.push(vec![col / 2]);
                parts.push(vec![col % 2]);
                out.add_unchecked(BasisIndex::new(parts), &df.scale(c));
            }
        }
    }
    Ok(out)
}

/// `𝔇s`: `∇`, then `ω_{H*}♯` on the `H*` leg, then `P₊` into `S^{m+1}H`.
/// The result lives in `∧^kE ⊗ E* ⊗ S^{m+1}H`.
pub fn dirac_d(s: &PolyField) -> Result<PolyField> {
    let (n, k, m) = section_params(s)?;
    let grad = nabla(s)?;
    let legs = SpaceDescriptor::new(vec![
        Factor::exterior(2 * n, k),
        Factor::plain(2 * n),
        Factor::symmetric(2, m + 1),
    ]);
    let mut out = PolyField::zero(&legs, s.nvars());
    for (idx, f) in grad.iter() {
        let (sign, h) = omega_dual_sharp(idx.part(3)[0]);
        let parts = vec![idx.part(0).to_vec(), idx.part(2).to_vec(), insert_sorted(idx.part(1), h)];
        out.add_unchecked(BasisIndex::new(parts), &f.scale(&sign.into()));
    }
    Ok(out)
}

/// `𝔇⁰s`, the trace-free part of `𝔇s`.
pub fn dirac_d0(s: &PolyField) -> Result<PolyField> {
    let (n, k, _) = section_params(s)?;
    check_range("k", k, 1, 2 * n)?;
    dirac_d(s)?.apply_on_leading_legs(&tracefree_projector(n, k)?)
}

/// `tr ∘ 𝔇`, a section of `∧^{k−1}E ⊗ S^{m+1}H`.
pub fn trace_of_dirac(s: &PolyField) -> Result<PolyField> {
    let (n, k, _) = section_params(s)?;
    check_range("k", k, 1, 2 * n)?;
    dirac_d(s)?.apply_on_leading_legs(&trace_map(n, k)?)
}

/// `𝔇⁰X = 0` for `k < 2n`, or `𝔇_{∧^{2n−1}E} ∘ tr ∘ 𝔇(X) = 0` for
/// `k = 2n`.
pub fn is_quaternionic(x: &PolyField) -> Result<bool> {
    let (n, k, m) = section_params(x)?;
    if m != k {
        return Err(Error::DimensionMismatch(format!("k-vector fields need m = k, got k = {k}, m = {m}")));
    }
    check_range("k", k, 1, 2 * n)?;
    if k < 2 * n {
        Ok(dirac_d0(x)?.is_zero())
    } else {
        Ok(dirac_d(&trace_of_dirac(x)?)?.is_zero())
    }
}

/// Sections of `∧^kE ⊗ S^mH` with coefficients of degree `≤ d`.
pub fn section_space(n: usize, k: usize, m: usize, d: usize) -> SpaceDescriptor {
    let mut fs = section_fiber(n, k, m).factors().to_vec();
    fs.push(monomial_factor(4 * n, d));
    SpaceDescriptor::new(fs)
}

/// Matrix of `𝔇` from degree `≤ d` into degree `≤ d−1` (degree 0 when
/// `d = 0`, where the map vanishes).
pub fn dirac_operator(n: usize, k: usize, m: usize, d: usize) -> Result<LinearMap> {
    check_range("n", n, 1, usize::MAX)?;
    check_range("k", k, 0, 2 * n)?;
    let nv = 4 * n;
    let phi = identification_matrix(n);
    let dom = section_space(n, k, m, d);
    let cod = SpaceDescriptor::new(vec![
        Factor::exterior(2 * n, k),
        Factor::plain(2 * n),
        Factor::symmetric(2, m + 1),
        monomial_factor(nv, d.saturating_sub(1)),
    ]);
    LinearMap::from_basis_images(&dom, &cod, |b| {
        let mut out = IndexedTensor::zero(&cod);
        let mono = b.part(2);
        let mut v = 0;
        while v < mono.len() {
            let var = mono[v];
            let mult = mono[v..].iter().take_while(|&&x| x == var).count();
            if var > 0 {
                let mut rest = mono.to_vec();
                rest.remove(v);
                for col in 0..4 * n {
                    let c = &phi[(var - 1, col)];
                    if c.is_zero() {
                        continue;
                    }
                    let (sign, h) = omega_dual_sharp(col % 2);
                    let idx = BasisIndex::new(vec![
                        b.part(0).to_vec(),
                        vec![col / 2],
                        insert_sorted(b.part(1), h),
                        rest.clone(),
                    ]);
                    out.add_term(idx, c * &GaussianRational::from((mult as i64) * sign))?;
                }
            }
            v += mult;
        }
        Ok(out)
    })
}

/// The linear condition whose kernel is the space of quaternionic
/// `k`-vector fields of degree `≤ d`.
pub fn quaternionic_condition(n: usize, k: usize, d: usize) -> Result<LinearMap> {
    check_range("n", n, 1, usize::MAX)?;
    check_range("k", k, 1, 2 * n)?;
    let nv = 4 * n;
    let d1 = d.saturating_sub(1);
    let rest = [Factor::symmetric(2, k + 1), monomial_factor(nv, d1)];
    let dk = dirac_operator(n, k, k, d)?;
    if k < 2 * n {
        return tracefree_projector(n, k)?.tensor_identity_right(&rest).compose(&dk);
    }
    let tr = trace_map(n, k)?.tensor_identity_right(&rest);
    let second = dirac_operator(n, k - 1, k + 1, d1)?;
    second.compose(&tr.compose(&dk)?)
}

/// `dim_ℂ` of quaternionic `k`-vector fields on `ℍⁿ` with polynomial
/// coefficients of degree `≤ d`.
pub fn kernel_dimension(n: usize, k: usize, d: usize) -> Result<usize> {
    let a = quaternionic_condition(n, k, d)?;
    Ok(a.ncols() - a.rank())
}

/// A basis of the quaternionic fields counted by [`kernel_dimension`].
pub fn quaternionic_fields(n: usize, k: usize, d: usize) -> Result<Vec<PolyField>> {
    let (_, kernel) = quaternionic_condition(n, k, d)?.rank_and_kernel();
    kernel.iter().map(|t| PolyField::from_tensor(t, 4 * n)).collect()
}
