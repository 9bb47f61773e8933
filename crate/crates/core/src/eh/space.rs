//! Symplectic vector spaces with a compatible quaternionic structure.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::basis::sort_exterior;
use crate::exact::{Factor, FactorKind, GaussianRational, IndexedTensor, Matrix, BasisIndex,
    SpaceDescriptor};

/// An even-dimensional ℂ-vector space with a symplectic form `ω` and an
/// anti-linear `J`, applied as `v ↦ J·conj(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionicSpace {
    dim: usize,
    omega: Matrix,
    j: Matrix,
}

/// Block-diagonal copies of `b`.
fn block_diag(blocks: usize, b: &Matrix) -> Matrix {
    let s = b.rows();
    let mut m = Matrix::zeros(blocks * s, blocks * s);
    for a in 0..blocks {
        for i in 0..s {
            for j in 0..s {
                m[(a * s + i, a * s + j)] = b[(i, j)].clone();
            }
        }
    }
    m
}

impl QuaternionicSpace {
    /// `ω(e_{2a}, e_{2a+1}) = 1` and `J e_{2a} = e_{2a+1}`, `J e_{2a+1} =
    /// −e_{2a}` (0-based), i.e. `J` restricted to each block is `j₀`.
    pub fn standard(dim: usize) -> Result<Self> {
        if dim % 2 != 0 || dim == 0 {
            return Err(Error::DimensionMismatch(format!(
                "quaternionic space needs positive even dimension, got {dim}"
            )));
        }
        let omega = block_diag(dim / 2, &Matrix::from_ints(&[&[0, 1], &[-1, 0]]));
        let j = block_diag(dim / 2, &Matrix::from_ints(&[&[0, -1], &[1, 0]]));
        Ok(Self { dim, omega, j })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn omega_matrix(&self) -> &Matrix {
        &self.omega
    }

    pub fn j_matrix(&self) -> &Matrix {
        &self.j
    }

    fn check(&self, v: &[GaussianRational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a space of dimension {}",
                v.len(),
                self.dim
            )));
        }
        Ok(())
    }

    /// `ω(x, y) = xᵀ Ω y`.
    pub fn omega(&self, x: &[GaussianRational], y: &[GaussianRational]) -> Result<GaussianRational> {
        self.check(x)?;
        self.check(y)?;
        let oy = self.omega.apply(y);
        Ok(x.iter().zip(&oy).map(|(a, b)| a * b).sum())
    }

    pub fn apply_j(&self, v: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
        self.check(v)?;
        let c: Vec<_> = v.iter().map(GaussianRational::conj).collect();
        Ok(self.j.apply(&c))
    }

    /// `ω♯(v) = ω(·, v)`, as a coefficient vector on the dual basis.
    pub fn omega_sharp(&self, v: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
        self.check(v)?;
        Ok(self.omega.apply(v))
    }

    /// Matrix of `ω♯` from the basis to the dual basis.
    pub fn omega_sharp_matrix(&self) -> Matrix {
        self.omega.clone()
    }

    /// The induced structure on the dual, `J'(γ)(v) = −conj(γ(J v))`, which
    /// in coordinates is `γ ↦ −Jᵀ conj(γ)`.
    pub fn apply_j_dual(&self, gamma: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
        self.check(gamma)?;
        let c: Vec<_> = gamma.iter().map(GaussianRational::conj).collect();
        Ok(self.j.transpose().neg().apply(&c))
    }

    /// Checks `J² = −1`, `ω(Jξ, Jζ) = conj ω(ξ, ζ)` on basis pairs and
    /// `ω(ξ, Jξ) > 0` on basis vectors and on `samples`.
    pub fn check_compatibility(&self, samples: &[Vec<GaussianRational>]) -> Result<bool> {
        let basis: Vec<Vec<GaussianRational>> = (0..self.dim)
            .map(|i| {
                let mut v = vec![GaussianRational::zero(); self.dim];
                v[i] = GaussianRational::from(1);
                v
            })
            .collect();
        for x in &basis {
            let jj = self.apply_j(&self.apply_j(x)?)?;
            if jj.iter().zip(x).any(|(a, b)| a != &(-b)) {
                return Ok(false);
            }
            for y in &basis {
                let lhs = self.omega(&self.apply_j(x)?, &self.apply_j(y)?)?;
                if lhs != self.omega(x, y)?.conj() {
                    return Ok(false);
                }
            }
        }
        for x in basis.iter().chain(samples) {
            if x.iter().all(Zero::is_zero) {
                continue;
            }
            let g = self.omega(x, &self.apply_j(x)?)?;
            if !g.is_real() || !g.re().is_positive() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The pair `E = ℂ^{2n}`, `H = ℂ²` with their standard structures.
#[derive(Clone, Debug)]
pub struct EHContext {
    pub n: usize,
    pub e: QuaternionicSpace,
    pub h: QuaternionicSpace,
}

impl EHContext {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "n",
                value: 0,
                range: "[1, ∞)".into(),
            });
        }
        Ok(Self {
            n,
            e: QuaternionicSpace::standard(2 * n)?,
            h: QuaternionicSpace::standard(2)?,
        })
    }
}

/// `ω_{H*}♯ : H* → H`. Dualizing `ω_H♯` gives `−(ω_H♯)⁻¹`, which sends
/// `u¹ ↦ −u₂` and `u² ↦ u₁`.
pub fn omega_dual_sharp_h() -> Matrix {
    let h = QuaternionicSpace::standard(2).expect("dimension 2");
    h.omega_sharp_matrix().inverse().expect("ω♯ invertible").neg()
}

/// Image of one basis vector under the standard `J` (same block form on
/// vectors and covectors): `2a ↦ 2a+1`, `2a+1 ↦ −2a`.
fn j_on_basis(i: usize) -> (i64, usize) {
    if i % 2 == 0 {
        (1, i + 1)
    } else {
        (-1, i - 1)
    }
}

/// The standard `J` on a basis element of a single factor. Every factor
/// kind is mapped via the induced action on tensor powers; the result is a
/// single signed basis element because `J` is a signed permutation.
pub fn j_on_factor_index(f: &Factor, idx: &[usize]) -> (i64, Vec<usize>) {
    let mut sign = 1;
    let mut out: Vec<usize> = idx
        .iter()
        .map(|&i| {
            let (s, j) = j_on_basis(i);
            sign *= s;
            j
        })
        .collect();
    match f.kind {
        FactorKind::Plain => {}
        FactorKind::Symmetric(_) => out.sort_unstable(),
        FactorKind::Exterior(_) => {
            sign *= sort_exterior(&mut out).expect("J is injective on indices");
        }
    }
    (sign, out)
}

/// The anti-linear map that conjugates coefficients and applies the standard
/// `J` on every factor. On `∧^kE ⊗ S^mH` this is `τ`; on `∧^kE ⊗ E*` it is
/// `J_E^k ⊗ J_{E*}`.
pub fn real_structure(t: &IndexedTensor) -> Result<IndexedTensor> {
    let space = t.space();
    if space.factors().iter().any(|f| f.dim % 2 != 0) {
        return Err(Error::DimensionMismatch(format!(
            "{space} has an odd-dimensional factor"
        )));
    }
    let mut out = IndexedTensor::zero(space);
    for (idx, c) in t.iter() {
        let mut sign = 1;
        let mut parts = Vec::with_capacity(idx.parts().len());
        for (f, p) in space.factors().iter().zip(idx.parts()) {
            let (s, q) = j_on_factor_index(f, p);
            sign *= s;
            parts.push(q);
        }
        let v = if sign > 0 { c.conj() } else { -c.conj() };
        out.add_term_unchecked(BasisIndex::new(parts), v);
    }
    Ok(out)
}

/// `∧^kE ⊗ S^mH` for `E = ℂ^{2n}`.
pub fn section_fiber(n: usize, k: usize, m: usize) -> SpaceDescriptor {
    SpaceDescriptor::new(vec![Factor::exterior(2 * n, k), Factor::symmetric(2, m)])
}

/// `τ` on `∧^kE ⊗ S^mH`; `τ² = (−1)^{k+m}`.
pub fn tau(k: usize, m: usize, t: &IndexedTensor) -> Result<IndexedTensor> {
    let fs = t.space().factors();
    let ok = fs.len() == 2
        && fs[0].kind == FactorKind::Exterior(k)
        && fs[1] == Factor::symmetric(2, m);
    if !ok {
        return Err(Error::DimensionMismatch(format!(
            "tau({k}, {m}) applied to a tensor in {}",
            t.space()
        )));
    }
    real_structure(t)
}
