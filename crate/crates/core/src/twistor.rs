//! Holomorphic `k`-vector fields on `ℂP^{2n+1}` as `Ṽ_k / Ṽ_{k−1} ∧ v₀`.
//!
//! An element of `Ṽ_k` is stored by its coefficients in
//! `S^kℂ^N ⊗ ∧^k(ℂ^N)*`, `N = 2n + 2`: the basis element `(I, J)` stands for
//! `z_{i₁}⋯z_{i_k} ∂_{j₁}∧⋯∧∂_{j_k}`.

use num_traits::Zero;

use crate::eh::real_structure;
use crate::error::{check_range, Error, Result};
use crate::exact::basis::sort_exterior;
use crate::exact::elim::{Echelon, SparseRow};
use crate::exact::{binomial, Basis, BasisIndex, Factor, GaussianRational, IndexedTensor, LinearMap,
    Matrix, SpaceDescriptor};

/// `N = 2n + 2`, with `ℂ^N = ℍ^{n+1}`.
pub fn ambient_dim(n: usize) -> usize {
    2 * n + 2
}

pub fn vtilde_space(n: usize, k: usize) -> SpaceDescriptor {
    let big_n = ambient_dim(n);
    SpaceDescriptor::new(vec![Factor::symmetric(big_n, k), Factor::exterior(big_n, k)])
}

/// `C(N+k−1, k) · C(N, k)`.
pub fn vtilde_dim(n: usize, k: usize) -> usize {
    let big_n = ambient_dim(n);
    binomial(big_n + k - 1, k) * binomial(big_n, k)
}

/// A `GL(1, ℂ)`-invariant holomorphic `k`-vector field on `ℂ^N \ {0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantMultivector {
    n: usize,
    k: usize,
    coefficients: IndexedTensor,
}

impl InvariantMultivector {
    pub fn new(n: usize, k: usize, coefficients: IndexedTensor) -> Result<Self> {
        let want = vtilde_space(n, k);
        if coefficients.space() != &want {
            return Err(Error::DimensionMismatch(format!("{} is not {want}", coefficients.space())));
        }
        Ok(Self { n, k, coefficients })
    }

    pub fn zero(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            coefficients: IndexedTensor::zero(&vtilde_space(n, k)),
        }
    }

    /// `Σ z_l ∂_l`.
    pub fn euler(n: usize) -> Self {
        let mut v = Self::zero(n, 1);
        for l in 0..ambient_dim(n) {
            v.coefficients
                .add_term(BasisIndex::new(vec![vec![l], vec![l]]), 1.into())
                .expect("valid index");
        }
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coefficients(&self) -> &IndexedTensor {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_zero()
    }

    /// `Y ∧ v₀`.
    pub fn wedge_euler(&self) -> Result<Self> {
        let map = euler_wedge_map(self.n, self.k + 1)?;
        Ok(Self {
            n: self.n,
            k: self.k + 1,
            coefficients: map.apply(&self.coefficients)?,
        })
    }

    /// `τ̂`, induced by right multiplication by `j` on `ℍ^{n+1}`.
    pub fn tau_hat(&self) -> Self {
        Self {
            n: self.n,
            k: self.k,
            coefficients: tau_hat(&self.coefficients).expect("even ambient dimension"),
        }
    }
}

/// The Euler field `v₀ ∈ Ṽ₁`.
pub fn euler_field(n: usize) -> InvariantMultivector {
    InvariantMultivector::euler(n)
}

/// `τ̂` on coefficient tensors: the `j₀` block on every index, with
/// conjugated coefficients.
pub fn tau_hat(t: &IndexedTensor) -> Result<IndexedTensor> {
    real_structure(t)
}

/// `Y ↦ Y ∧ v₀` from `Ṽ_{k−1}` to `Ṽ_k`.
pub fn euler_wedge_map(n: usize, k: usize) -> Result<LinearMap> {
    let big_n = ambient_dim(n);
    check_range("k", k, 1, big_n)?;
    let dom = vtilde_space(n, k - 1);
    let cod = vtilde_space(n, k);
    LinearMap::from_basis_images(&dom, &cod, |b| {
        let mut out = IndexedTensor::zero(&cod);
        for l in 0..big_n {
            let mut lower = b.part(1).to_vec();
            lower.push(l);
            let Some(sign) = sort_exterior(&mut lower) else {
                continue;
            };
            let mut upper = b.part(0).to_vec();
            let p = upper.partition_point(|&x| x <= l);
            upper.insert(p, l);
            out.add_term(BasisIndex::new(vec![upper, lower]), sign.into())?;
        }
        Ok(out)
    })
}

/// `dim_ℂ Ṽ_k − rank(∧ v₀)`.
pub fn holo_dim(n: usize, k: usize) -> Result<usize> {
    check_range("k", k, 1, 2 * n + 1)?;
    Ok(vtilde_dim(n, k) - euler_wedge_map(n, k)?.rank())
}

/// `Σ_{i=1}^{k} (−1)^{k+i} C(2n+i+1, i) C(2n+2, i) + (−1)^k`.
pub fn closed_form_dim(n: usize, k: usize) -> Result<i128> {
    check_range("k", k, 1, usize::MAX)?;
    let sign = |e: usize| if e % 2 == 0 { 1i128 } else { -1 };
    let sum: i128 = (1..=k)
        .map(|i| sign(k + i) * (binomial(2 * n + i + 1, i) as i128) * (binomial(2 * n + 2, i) as i128))
        .sum();
    Ok(sum + sign(k))
}

/// Standard basis vectors of `Ṽ_k` at the non-pivot coordinates of the
/// Euler-wedge image; they map to a basis of the quotient.
pub fn quotient_representatives(n: usize, k: usize) -> Result<Vec<IndexedTensor>> {
    let map = euler_wedge_map(n, k)?;
    let pivots = map.image_echelon().pivots();
    let basis = Basis::new(map.codomain());
    (0..basis.len())
        .filter(|c| !pivots.contains(c))
        .map(|c| IndexedTensor::basis_vector(map.codomain(), basis.get(c).clone()))
        .collect()
}

/// `x ↦ (Re x, Im x)` as a vector of length `2·dim` with real entries.
fn real_embedding(t: &IndexedTensor, basis: &Basis) -> SparseRow {
    let d = basis.len();
    let mut re = Vec::new();
    let mut im = Vec::new();
    for (idx, c) in t.iter() {
        let p = basis.position(idx).expect("validated index");
        if !c.re().is_zero() {
            re.push((p, GaussianRational::new(c.re().clone(), Zero::zero())));
        }
        if !c.im().is_zero() {
            im.push((p + d, GaussianRational::new(c.im().clone(), Zero::zero())));
        }
    }
    re.sort_by_key(|e| e.0);
    im.sort_by_key(|e| e.0);
    re.extend(im);
    re
}

/// A real basis of the `τ̂`-fixed subspace of `Ṽ_k`, from the averages
/// `x + τ̂x` over `x = b, i·b`.
pub fn fixed_real_basis(n: usize, k: usize) -> Result<Vec<IndexedTensor>> {
    let space = vtilde_space(n, k);
    let basis = Basis::new(&space);
    let mut ech = Echelon::new(2 * basis.len());
    let mut out = Vec::new();
    for b in basis.iter() {
        for c in [GaussianRational::from(1), GaussianRational::i()] {
            let x = IndexedTensor::from_terms(&space, [(b.clone(), c)])?;
            let avg = x.add(&tau_hat(&x)?)?;
            if ech.insert(real_embedding(&avg, &basis)) {
                out.push(avg);
            }
        }
    }
    Ok(out)
}

/// Real dimension of the `τ̂`-fixed part of `Ṽ_k / Ṽ_{k−1} ∧ v₀`:
/// `rank(F + W) − rank(W)` in the real embedding, with `F` the fixed
/// subspace and `W` the Euler-wedge image.
pub fn real_form_dim(n: usize, k: usize) -> Result<usize> {
    check_range("k", k, 1, 2 * n + 1)?;
    let map = euler_wedge_map(n, k)?;
    let basis = Basis::new(map.codomain());
    let mut ech = Echelon::new(2 * basis.len());
    for j in 0..map.ncols() {
        let mut w = IndexedTensor::zero(map.codomain());
        for (row, c) in map.column(j) {
            w.add_term(basis.get(*row).clone(), c.clone())?;
        }
        ech.insert(real_embedding(&w, &basis));
        ech.insert(real_embedding(&w.scale(&GaussianRational::i()), &basis));
    }
    let rank_w = ech.rank();
    for f in fixed_real_basis(n, k)? {
        ech.insert(real_embedding(&f, &basis));
    }
    Ok(ech.rank() - rank_w)
}

/// `Y = Σ a_{ij} z_i ∂_j ∈ Ṽ₁` as the matrix `(a_{ij})`.
pub fn linear_field_matrix(y: &IndexedTensor) -> Result<Matrix> {
    let space = y.space();
    let fs = space.factors();
    if fs.len() != 2 || fs[0] != Factor::symmetric(fs[0].dim, 1) || fs[1] != Factor::exterior(fs[0].dim, 1)
    {
        return Err(Error::DimensionMismatch(format!("{space} is not a space of linear fields")));
    }
    let mut m = Matrix::zeros(fs[0].dim, fs[0].dim);
    for (idx, c) in y.iter() {
        m[(idx.part(0)[0], idx.part(1)[0])] = c.clone();
    }
    Ok(m)
}

fn matrix_field(n: usize, m: &Matrix) -> IndexedTensor {
    let space = vtilde_space(n, 1);
    let mut t = IndexedTensor::zero(&space);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            t.add_term(BasisIndex::new(vec![vec![i], vec![j]]), m[(i, j)].clone())
                .expect("valid index");
        }
    }
    t
}

/// The `τ̂`-fixed linear fields: real dimension, and whether the span is
/// closed under the commutator of coefficient matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedLinearFields {
    pub real_dim: usize,
    pub closed_under_bracket: bool,
}

pub fn fixed_linear_fields(n: usize) -> Result<FixedLinearFields> {
    let fixed = fixed_real_basis(n, 1)?;
    let mats: Vec<Matrix> = fixed.iter().map(linear_field_matrix).collect::<Result<_>>()?;
    let mut closed = true;
    'outer: for (a, ma) in mats.iter().enumerate() {
        for mb in &mats[a + 1..] {
            let c = matrix_field(n, &ma.mul(mb).sub(&mb.mul(ma)));
            if tau_hat(&c)? != c {
                closed = false;
                break 'outer;
            }
        }
    }
    Ok(FixedLinearFields {
        real_dim: fixed.len(),
        closed_under_bracket: closed,
    })
}
