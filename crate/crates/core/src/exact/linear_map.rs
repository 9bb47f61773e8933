use std::collections::BTreeMap;

use num_traits::Zero;

use super::basis::{Basis, BasisIndex, SpaceDescriptor};
use super::elim::{self, Echelon, Rref, SparseRow};
use super::scalar::GaussianRational;
use super::tensor::IndexedTensor;
use crate::error::{Error, Result};

/// A ℂ-linear map between two enumerated tensor spaces.
///
/// Stored by columns: column `j` is the image of the `j`-th domain basis
/// vector, as a sparse vector over codomain positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    domain: SpaceDescriptor,
    codomain: SpaceDescriptor,
    nrows: usize,
    columns: Vec<SparseRow>,
}

impl LinearMap {
    pub fn zero(domain: &SpaceDescriptor, codomain: &SpaceDescriptor) -> Self {
        Self {
            domain: domain.clone(),
            codomain: codomain.clone(),
            nrows: codomain.dim(),
            columns: vec![Vec::new(); domain.dim()],
        }
    }

    pub fn identity(space: &SpaceDescriptor) -> Self {
        let n = space.dim();
        Self {
            domain: space.clone(),
            codomain: space.clone(),
            nrows: n,
            columns: (0..n).map(|j| vec![(j, GaussianRational::from(1))]).collect(),
        }
    }

    /// Build a map from its action on basis vectors.
    pub fn from_basis_images<F>(
        domain: &SpaceDescriptor,
        codomain: &SpaceDescriptor,
        mut image: F,
    ) -> Result<Self>
    where
        F: FnMut(&BasisIndex) -> Result<IndexedTensor>,
    {
        let dom = Basis::new(domain);
        let cod = Basis::new(codomain);
        let mut columns = Vec::with_capacity(dom.len());
        for b in dom.iter() {
            let t = image(b)?;
            if t.space() != codomain {
                return Err(Error::DimensionMismatch(format!(
                    "image lies in {}, expected {}",
                    t.space(),
                    codomain
                )));
            }
            columns.push(column_of(&t, &cod));
        }
        Ok(Self {
            domain: domain.clone(),
            codomain: codomain.clone(),
            nrows: cod.len(),
            columns,
        })
    }

    /// Dense row-major matrix over bare `ℂ^cols → ℂ^rows`.
    pub fn from_rows(rows: &[Vec<GaussianRational>], ncols: usize) -> Self {
        let nrows = rows.len();
        let mut columns = vec![Vec::new(); ncols];
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), ncols, "ragged matrix");
            for (j, v) in r.iter().enumerate() {
                if !v.is_zero() {
                    columns[j].push((i, v.clone()));
                }
            }
        }
        Self {
            domain: SpaceDescriptor::plain(ncols),
            codomain: SpaceDescriptor::plain(nrows),
            nrows,
            columns,
        }
    }

    /// Same matrix, with the domain and codomain relabelled. Dimensions must
    /// agree.
    pub fn relabel(&self, domain: &SpaceDescriptor, codomain: &SpaceDescriptor) -> Result<Self> {
        if domain.dim() != self.ncols() || codomain.dim() != self.nrows {
            return Err(Error::DimensionMismatch(format!(
                "cannot relabel {}x{} as {} -> {}",
                self.nrows,
                self.ncols(),
                domain,
                codomain
            )));
        }
        Ok(Self {
            domain: domain.clone(),
            codomain: codomain.clone(),
            nrows: self.nrows,
            columns: self.columns.clone(),
        })
    }

    pub fn domain(&self) -> &SpaceDescriptor {
        &self.domain
    }

    pub fn codomain(&self) -> &SpaceDescriptor {
        &self.codomain
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &SparseRow {
        &self.columns[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> GaussianRational {
        self.columns[j]
            .binary_search_by_key(&i, |e| e.0)
            .map(|p| self.columns[j][p].1.clone())
            .unwrap_or_else(|_| GaussianRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Rows as sparse vectors over domain positions.
    pub fn rows(&self) -> Vec<SparseRow> {
        let mut rows = vec![Vec::new(); self.nrows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                rows[*i].push((j, v.clone()));
            }
        }
        rows
    }

    pub fn to_dense(&self) -> Vec<Vec<GaussianRational>> {
        self.rows().iter().map(|r| elim::densify(r, self.ncols())).collect()
    }

    pub fn transpose(&self) -> Self {
        Self {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            nrows: self.ncols(),
            columns: self.rows(),
        }
    }

    pub fn apply(&self, t: &IndexedTensor) -> Result<IndexedTensor> {
        if t.space() != &self.domain {
            return Err(Error::DimensionMismatch(format!(
                "argument in {}, map expects {}",
                t.space(),
                self.domain
            )));
        }
        let dom = Basis::new(&self.domain);
        let cod = Basis::new(&self.codomain);
        let mut acc: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        for (idx, c) in t.iter() {
            let j = dom.position(idx).expect("validated index");
            for (i, v) in &self.columns[j] {
                *acc.entry(*i).or_insert_with(GaussianRational::zero) += v * c;
            }
        }
        let mut out = IndexedTensor::zero(&self.codomain);
        for (i, v) in acc {
            out.add_term_unchecked(cod.get(i).clone(), v);
        }
        Ok(out)
    }

    /// Apply to a bare coordinate vector.
    pub fn apply_vec(&self, x: &SparseRow) -> SparseRow {
        let mut acc: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        for (j, c) in x {
            for (i, v) in &self.columns[*j] {
                *acc.entry(*i).or_insert_with(GaussianRational::zero) += v * c;
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if inner.codomain.dim() != self.ncols() {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.domain, self.codomain, inner.domain, inner.codomain
            )));
        }
        let columns = inner.columns.iter().map(|c| self.apply_vec(c)).collect();
        Ok(LinearMap {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            nrows: self.nrows,
            columns,
        })
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.combine(other, &GaussianRational::from(1))
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.combine(other, &GaussianRational::from(-1))
    }

    fn combine(&self, other: &LinearMap, c: &GaussianRational) -> Result<LinearMap> {
        if self.nrows != other.nrows || self.ncols() != other.ncols() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.nrows,
                self.ncols(),
                other.nrows,
                other.ncols()
            )));
        }
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| elim::axpy(a, c, b))
            .collect();
        Ok(LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            nrows: self.nrows,
            columns,
        })
    }

    pub fn scale(&self, c: &GaussianRational) -> LinearMap {
        let columns = self
            .columns
            .iter()
            .map(|col| elim::axpy(&Vec::new(), c, col))
            .collect();
        LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            nrows: self.nrows,
            columns,
        }
    }

    /// Stack maps with a common domain on top of each other
    /// (`x ↦ (A₁x, A₂x, …)`), over a bare codomain.
    pub fn vstack(maps: &[&LinearMap]) -> Result<LinearMap> {
        let first = maps.first().ok_or_else(|| Error::DimensionMismatch("empty stack".into()))?;
        let ncols = first.ncols();
        let mut columns = vec![Vec::new(); ncols];
        let mut offset = 0;
        for m in maps {
            if m.ncols() != ncols {
                return Err(Error::DimensionMismatch("vstack with unequal domains".into()));
            }
            for (j, col) in m.columns.iter().enumerate() {
                columns[j].extend(col.iter().map(|(i, v)| (i + offset, v.clone())));
            }
            offset += m.nrows;
        }
        Ok(LinearMap {
            domain: first.domain.clone(),
            codomain: SpaceDescriptor::plain(offset),
            nrows: offset,
            columns,
        })
    }

    /// `A ⊗ B` over the concatenated descriptors. In lexicographic order the
    /// position of `(a, b)` is `pos(a)·dim(B) + pos(b)`, so columns can be
    /// assembled without index lookups.
    pub fn kron(a: &LinearMap, b: &LinearMap) -> LinearMap {
        let concat = |x: &SpaceDescriptor, y: &SpaceDescriptor| {
            let mut f = x.factors().to_vec();
            f.extend_from_slice(y.factors());
            SpaceDescriptor::new(f)
        };
        let mut columns = Vec::with_capacity(a.ncols() * b.ncols());
        for ca in &a.columns {
            for cb in &b.columns {
                let mut col = Vec::with_capacity(ca.len() * cb.len());
                for (i, x) in ca {
                    for (k, y) in cb {
                        col.push((i * b.nrows + k, x * y));
                    }
                }
                columns.push(col);
            }
        }
        LinearMap {
            domain: concat(&a.domain, &b.domain),
            codomain: concat(&a.codomain, &b.codomain),
            nrows: a.nrows * b.nrows,
            columns,
        }
    }

    /// `self ⊗ id` on trailing factors.
    pub fn tensor_identity_right(&self, extra: &[super::basis::Factor]) -> LinearMap {
        LinearMap::kron(self, &LinearMap::identity(&SpaceDescriptor::new(extra.to_vec())))
    }

    /// `id ⊗ self` on leading factors.
    pub fn tensor_identity_left(&self, extra: &[super::basis::Factor]) -> LinearMap {
        LinearMap::kron(&LinearMap::identity(&SpaceDescriptor::new(extra.to_vec())), self)
    }

    /// Reduced row echelon form of the matrix.
    pub fn rref(&self) -> Rref {
        elim::rref(&self.rows(), self.ncols())
    }

    /// Rank, computed on whichever side is smaller.
    pub fn rank(&self) -> usize {
        if self.nrows < self.ncols() {
            elim::rref(&self.rows(), self.ncols()).rank()
        } else {
            let mut e = Echelon::new(self.nrows);
            for c in &self.columns {
                e.insert(c.clone());
            }
            e.rank()
        }
    }

    /// An echelon basis of the column space, for membership tests.
    pub fn image_echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.nrows);
        for c in &self.columns {
            e.insert(c.clone());
        }
        e
    }

    /// Rank and a kernel basis, reported as tensors in the domain.
    ///
    /// The kernel vectors come from the RREF with one vector per free column,
    /// so they only depend on the matrix and the basis order.
    pub fn rank_and_kernel(&self) -> (usize, Vec<IndexedTensor>) {
        let rr = self.rref();
        let dom = Basis::new(&self.domain);
        let kernel = rr
            .kernel()
            .iter()
            .map(|v| {
                let mut t = IndexedTensor::zero(&self.domain);
                for (j, c) in v {
                    t.add_term_unchecked(dom.get(*j).clone(), c.clone());
                }
                t
            })
            .collect();
        (rr.rank(), kernel)
    }
}

fn column_of(t: &IndexedTensor, cod: &Basis) -> SparseRow {
    let mut col: SparseRow = t
        .iter()
        .map(|(idx, c)| (cod.position(idx).expect("validated index"), c.clone()))
        .collect();
    col.sort_by_key(|e| e.0);
    col
}

/// Rank and kernel basis of a map; free function form.
pub fn rank_and_kernel(map: &LinearMap) -> (usize, Vec<IndexedTensor>) {
    map.rank_and_kernel()
}
