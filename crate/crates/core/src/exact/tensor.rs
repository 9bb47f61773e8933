use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::basis::{BasisIndex, Basis, SpaceDescriptor};
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

/// A sparse vector in a tensor space, keyed by basis index.
///
/// Zero coefficients are never stored, so two tensors are equal iff their
/// maps are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct IndexedTensor {
    space: SpaceDescriptor,
    coeffs: BTreeMap<BasisIndex, GaussianRational>,
}

impl IndexedTensor {
    pub fn zero(space: &SpaceDescriptor) -> Self {
        Self {
            space: space.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_vector(space: &SpaceDescriptor, idx: BasisIndex) -> Result<Self> {
        let mut t = Self::zero(space);
        t.add_term(idx, GaussianRational::from(1))?;
        Ok(t)
    }

    pub fn from_terms<I>(space: &SpaceDescriptor, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BasisIndex, GaussianRational)>,
    {
        let mut t = Self::zero(space);
        for (idx, c) in terms {
            t.add_term(idx, c)?;
        }
        Ok(t)
    }

    /// Build from a dense coordinate vector in the enumeration order of
    /// `basis`.
    pub fn from_dense(basis: &Basis, values: &[GaussianRational]) -> Self {
        assert_eq!(basis.len(), values.len(), "dense vector has wrong length");
        let coeffs = basis
            .iter()
            .zip(values)
            .filter(|(_, v)| !v.is_zero())
            .map(|(b, v)| (b.clone(), v.clone()))
            .collect();
        Self {
            space: basis.space().clone(),
            coeffs,
        }
    }

    pub fn to_dense(&self, basis: &Basis) -> Vec<GaussianRational> {
        let mut out = vec![GaussianRational::zero(); basis.len()];
        for (idx, c) in &self.coeffs {
            let p = basis.position(idx).expect("index belongs to basis");
            out[p] = c.clone();
        }
        out
    }

    /// Accumulate `c` onto the coefficient at `idx`.
    pub fn add_term(&mut self, idx: BasisIndex, c: GaussianRational) -> Result<()> {
        if !self.space.is_valid(&idx) {
            return Err(Error::InvalidIndex(format!("{:?} for {}", idx.0, self.space)));
        }
        self.add_term_unchecked(idx, c);
        Ok(())
    }

    pub(crate) fn add_term_unchecked(&mut self, idx: BasisIndex, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn space(&self) -> &SpaceDescriptor {
        &self.space
    }

    pub fn get(&self, idx: &BasisIndex) -> GaussianRational {
        self.coeffs.get(idx).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisIndex, &GaussianRational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.space);
        }
        Self {
            space: self.space.clone(),
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Coefficientwise complex conjugate (the basis itself is left alone).
    pub fn conj(&self) -> Self {
        Self {
            space: self.space.clone(),
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v.conj())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term_unchecked(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term_unchecked(k.clone(), -v);
        }
        Ok(out)
    }

    /// `self ⊗ other` over the concatenated descriptor.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut factors = self.space.factors().to_vec();
        factors.extend_from_slice(other.space.factors());
        let space = SpaceDescriptor::new(factors);
        let mut out = Self::zero(&space);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                out.add_term_unchecked(a.join(b), x * y);
            }
        }
        out
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::DimensionMismatch(format!(
                "{} vs {}",
                self.space, other.space
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for IndexedTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexedTensor[{}]{{", self.space)?;
        for (i, (k, v)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}: {}", k.0, v)?;
        }
        write!(f, "}}")
    }
}
