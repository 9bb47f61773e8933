//! Polynomial sections of trivial bundles over `ℍⁿ = ℝ^{4n}`.

use std::collections::BTreeMap;

use crate::eh::space::j_on_factor_index;
use crate::error::{Error, Result};
use crate::exact::{Basis, BasisIndex, Factor, GaussianRational, IndexedTensor, LinearMap, Poly,
    SpaceDescriptor};

/// `Σ_idx f_idx(x) b_idx` with `b_idx` a basis element of the fiber `legs`
/// and `f_idx` a polynomial in `nvars` real coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyField {
    legs: SpaceDescriptor,
    nvars: usize,
    coeffs: BTreeMap<BasisIndex, Poly>,
}

/// A section of `∧^kE ⊗ S^mH`.
pub type PolySection = PolyField;

/// `Sym(N+1, d)`: monomials of degree `≤ d` in `N` variables, homogenized
/// by the extra variable `0`; real coordinate `x_μ` is index `μ + 1`.
pub fn monomial_factor(nvars: usize, d: usize) -> Factor {
    Factor::symmetric(nvars + 1, d)
}

fn exps_to_multiset(e: &[u32], d: usize) -> Option<Vec<usize>> {
    let total: usize = e.iter().map(|&x| x as usize).sum();
    if total > d {
        return None;
    }
    let mut out = vec![0; d - total];
    for (mu, &x) in e.iter().enumerate() {
        out.extend(std::iter::repeat_n(mu + 1, x as usize));
    }
    Some(out)
}

fn multiset_to_exps(m: &[usize], nvars: usize) -> Vec<u32> {
    let mut e = vec![0; nvars];
    for &v in m.iter().filter(|&&v| v > 0) {
        e[v - 1] += 1;
    }
    e
}

impl PolyField {
    pub fn zero(legs: &SpaceDescriptor, nvars: usize) -> Self {
        Self {
            legs: legs.clone(),
            nvars,
            coeffs: BTreeMap::new(),
        }
    }

    /// Zero section of `∧^kE ⊗ S^mH` over `ℍⁿ`.
    pub fn section(n: usize, k: usize, m: usize) -> Result<Self> {
        crate::error::check_range("k", k, 0, 2 * n)?;
        Ok(Self::zero(&crate::eh::space::section_fiber(n, k, m), 4 * n))
    }

    pub fn legs(&self) -> &SpaceDescriptor {
        &self.legs
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, idx: BasisIndex, f: Poly) -> Result<()> {
        if !self.legs.is_valid(&idx) {
            return Err(Error::InvalidIndex(format!("{idx:?} is not a basis index of {}", self.legs)));
        }
        if f.nvars() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "polynomial in {} variables for a field over ℝ^{}",
                f.nvars(),
                self.nvars
            )));
        }
        self.add_unchecked(idx, &f);
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, idx: BasisIndex, f: &Poly) {
        if f.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&idx) {
            Some(p) => {
                p.add_assign(f);
                if p.is_zero() {
                    self.coeffs.remove(&idx);
                }
            }
            None => {
                self.coeffs.insert(idx, f.clone());
            }
        }
    }

    pub fn coeff(&self, idx: &BasisIndex) -> Poly {
        self.coeffs.get(idx).cloned().unwrap_or_else(|| Poly::zero(self.nvars))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisIndex, &Poly)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.values().filter_map(Poly::degree).max()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.legs != o.legs || self.nvars != o.nvars {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.legs, o.legs)));
        }
        let mut out = self.clone();
        for (idx, f) in &o.coeffs {
            out.add_unchecked(idx.clone(), f);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        self.map_polys(|p| p.scale(c))
    }

    pub fn map_polys(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        let mut out = Self::zero(&self.legs, self.nvars);
        for (idx, p) in &self.coeffs {
            out.add_unchecked(idx.clone(), &f(p));
        }
        out
    }

    /// Standard `J` on every leg with conjugated coefficients; the
    /// coordinates are real, so conjugating a polynomial conjugates its
    /// coefficients.
    pub fn tau(&self) -> Self {
        let mut out = Self::zero(&self.legs, self.nvars);
        for (idx, p) in &self.coeffs {
            let mut sign = 1;
            let mut parts = Vec::with_capacity(idx.parts().len());
            for (f, part) in self.legs.factors().iter().zip(idx.parts()) {
                let (s, q) = j_on_factor_index(f, part);
                sign *= s;
                parts.push(q);
            }
            out.add_unchecked(BasisIndex::new(parts), &p.conj_coeffs().scale(&sign.into()));
        }
        out
    }

    /// Coefficient vector in `legs ⊗ Sym(N+1, d)`.
    pub fn to_tensor(&self, d: usize) -> Result<IndexedTensor> {
        let mut factors = self.legs.factors().to_vec();
        factors.push(monomial_factor(self.nvars, d));
        let space = SpaceDescriptor::new(factors);
        let mut out = IndexedTensor::zero(&space);
        for (idx, p) in &self.coeffs {
            for (e, c) in p.terms() {
                let ms = exps_to_multiset(e, d).ok_or(Error::OutOfRange {
                    what: "polynomial degree",
                    value: e.iter().sum::<u32>() as i64,
                    range: format!("0..={d}"),
                })?;
                let mut parts = idx.parts().to_vec();
                parts.push(ms);
                out.add_term(BasisIndex::new(parts), c.clone())?;
            }
        }
        Ok(out)
    }

    /// Inverse of [`PolyField::to_tensor`]: the last factor of the tensor's
    /// space must be a monomial factor.
    pub fn from_tensor(t: &IndexedTensor, nvars: usize) -> Result<Self> {
        let fs = t.space().factors();
        let last = fs.last().ok_or_else(|| Error::DimensionMismatch("empty space".into()))?;
        if last.dim != nvars + 1 {
            return Err(Error::DimensionMismatch(format!("{} is not a monomial factor", t.space())));
        }
        let legs = SpaceDescriptor::new(fs[..fs.len() - 1].to_vec());
        let mut out = Self::zero(&legs, nvars);
        for (idx, c) in t.iter() {
            let parts = idx.parts();
            let (head, ms) = parts.split_at(parts.len() - 1);
            let p = Poly::monomial(multiset_to_exps(&ms[0], nvars), c.clone());
            out.add_unchecked(BasisIndex::new(head.to_vec()), &p);
        }
        Ok(out)
    }

    /// Apply `map` to the first `map.domain().factors().len()` legs.
    pub fn apply_on_leading_legs(&self, map: &LinearMap) -> Result<Self> {
        let nlead = map.domain().factors().len();
        if self.legs.factors().get(..nlead) != Some(map.domain().factors()) {
            return Err(Error::DimensionMismatch(format!(
                "{} does not start with {}",
                self.legs,
                map.domain()
            )));
        }
        let dom = Basis::new(map.domain());
        let cod = Basis::new(map.codomain());
        let mut legs = map.codomain().factors().to_vec();
        legs.extend_from_slice(&self.legs.factors()[nlead..]);
        let mut out = Self::zero(&SpaceDescriptor::new(legs), self.nvars);
        for (idx, p) in &self.coeffs {
            let (head, tail) = idx.parts().split_at(nlead);
            let col = dom
                .position(&BasisIndex::new(head.to_vec()))
                .expect("valid leading index");
            for (row, c) in map.column(col) {
                let mut parts = cod.get(*row).parts().to_vec();
                parts.extend_from_slice(tail);
                out.add_unchecked(BasisIndex::new(parts), &p.scale(c));
            }
        }
        Ok(out)
    }
}
