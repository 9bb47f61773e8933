//! Index sets of tensor spaces built from plain, symmetric and exterior
//! factors.
//!
//! Enumeration order is lexicographic: the first factor is most significant,
//! and inside a factor multi-indices are compared entry by entry. The order is
//! part of the public contract since kernel bases are reported in it.

use std::collections::HashMap;
use std::fmt;

/// How a single factor of a tensor space is built from `ℂ^dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    /// `ℂ^dim` itself; indices are single integers.
    Plain,
    /// `S^degree ℂ^dim`; weakly increasing multi-indices.
    Symmetric(usize),
    /// `∧^degree ℂ^dim`; strictly increasing multi-indices.
    Exterior(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub dim: usize,
    pub kind: FactorKind,
}

impl Factor {
    pub fn plain(dim: usize) -> Self {
        Self {
            dim,
            kind: FactorKind::Plain,
        }
    }

    pub fn symmetric(dim: usize, degree: usize) -> Self {
        Self {
            dim,
            kind: FactorKind::Symmetric(degree),
        }
    }

    pub fn exterior(dim: usize, degree: usize) -> Self {
        Self {
            dim,
            kind: FactorKind::Exterior(degree),
        }
    }

    /// Number of basis elements of this factor.
    pub fn size(&self) -> usize {
        match self.kind {
            FactorKind::Plain => self.dim,
            FactorKind::Symmetric(m) => {
                if self.dim == 0 {
                    usize::from(m == 0)
                } else {
                    binomial(self.dim + m - 1, m)
                }
            }
            FactorKind::Exterior(k) => binomial(self.dim, k),
        }
    }

    /// Length of the per-factor multi-index.
    pub fn arity(&self) -> usize {
        match self.kind {
            FactorKind::Plain => 1,
            FactorKind::Symmetric(m) => m,
            FactorKind::Exterior(k) => k,
        }
    }

    pub fn is_valid(&self, idx: &[usize]) -> bool {
        if idx.len() != self.arity() || idx.iter().any(|&i| i >= self.dim) {
            return false;
        }
        match self.kind {
            FactorKind::Plain => true,
            FactorKind::Symmetric(_) => idx.windows(2).all(|w| w[0] <= w[1]),
            FactorKind::Exterior(_) => idx.windows(2).all(|w| w[0] < w[1]),
        }
    }

    /// All multi-indices of this factor in lexicographic order.
    pub fn enumerate(&self) -> Vec<Vec<usize>> {
        match self.kind {
            FactorKind::Plain => (0..self.dim).map(|i| vec![i]).collect(),
            FactorKind::Symmetric(m) => multisets(self.dim, m),
            FactorKind::Exterior(k) => subsets(self.dim, k),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FactorKind::Plain => write!(f, "C^{}", self.dim),
            FactorKind::Symmetric(m) => write!(f, "S^{}C^{}", m, self.dim),
            FactorKind::Exterior(k) => write!(f, "Λ^{}C^{}", k, self.dim),
        }
    }
}

/// An ordered tensor product of factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceDescriptor {
    factors: Vec<Factor>,
}

impl SpaceDescriptor {
    pub fn new(factors: Vec<Factor>) -> Self {
        Self { factors }
    }

    /// A bare `ℂ^dim` (one plain factor), for maps that carry no tensor
    /// structure.
    pub fn plain(dim: usize) -> Self {
        Self::new(vec![Factor::plain(dim)])
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Closed-form dimension: product of the factor sizes.
    pub fn dim(&self) -> usize {
        self.factors.iter().map(Factor::size).product()
    }

    pub fn is_valid(&self, idx: &BasisIndex) -> bool {
        idx.0.len() == self.factors.len()
            && self
                .factors
                .iter()
                .zip(&idx.0)
                .all(|(f, i)| f.is_valid(i))
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "C");
        }
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "{fac}")?;
        }
        Ok(())
    }
}

/// One multi-index per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex(pub Vec<Vec<usize>>);

impl BasisIndex {
    pub fn new(parts: Vec<Vec<usize>>) -> Self {
        Self(parts)
    }

    pub fn part(&self, i: usize) -> &[usize] {
        &self.0[i]
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.0
    }

    /// Concatenate the factor lists of two indices.
    pub fn join(&self, other: &BasisIndex) -> BasisIndex {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        BasisIndex(v)
    }

    pub fn split_at(&self, at: usize) -> (BasisIndex, BasisIndex) {
        (
            BasisIndex(self.0[..at].to_vec()),
            BasisIndex(self.0[at..].to_vec()),
        )
    }
}

/// All basis indices of `space` in lexicographic order.
pub fn enumerate_basis(space: &SpaceDescriptor) -> Vec<BasisIndex> {
    let per_factor: Vec<Vec<Vec<usize>>> = space.factors.iter().map(Factor::enumerate).collect();
    let mut out = vec![BasisIndex(Vec::with_capacity(per_factor.len()))];
    for choices in &per_factor {
        let mut next = Vec::with_capacity(out.len() * choices.len());
        for prefix in &out {
            for c in choices {
                let mut p = prefix.0.clone();
                p.push(c.clone());
                next.push(BasisIndex(p));
            }
        }
        out = next;
    }
    out
}

/// An enumerated basis with position lookup.
#[derive(Clone, Debug)]
pub struct Basis {
    space: SpaceDescriptor,
    elements: Vec<BasisIndex>,
    positions: HashMap<BasisIndex, usize>,
}

impl Basis {
    pub fn new(space: &SpaceDescriptor) -> Self {
        let elements = enumerate_basis(space);
        let positions = elements
            .iter()
            .enumerate()
            .map(|(i, b)| (b.clone(), i))
            .collect();
        Self {
            space: space.clone(),
            elements,
            positions,
        }
    }

    pub fn space(&self) -> &SpaceDescriptor {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &BasisIndex {
        &self.elements[i]
    }

    pub fn position(&self, idx: &BasisIndex) -> Option<usize> {
        self.positions.get(idx).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &BasisIndex> {
        self.elements.iter()
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

fn multisets(dim: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(dim: usize, m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..dim {
            cur.push(i);
            rec(dim, m, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, m, 0, &mut Vec::with_capacity(m), &mut out);
    out
}

fn subsets(dim: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(dim: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..dim {
            cur.push(i);
            rec(dim, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= dim {
        rec(dim, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Sort `idx` in place and return the sign of the sorting permutation, or
/// `None` if two entries coincide (the wedge vanishes).
pub fn sort_exterior(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && idx[j - 1] == idx[j] {
            return None;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        assert_eq!(enumerate_basis(&SpaceDescriptor::new(vec![Factor::symmetric(2, 2)])).len(), 3);
        assert_eq!(enumerate_basis(&SpaceDescriptor::new(vec![Factor::exterior(4, 2)])).len(), 6);
        assert!(enumerate_basis(&SpaceDescriptor::new(vec![Factor::exterior(4, 5)])).is_empty());
    }

    #[test]
    fn lexicographic_order() {
        let b = enumerate_basis(&SpaceDescriptor::new(vec![Factor::exterior(3, 2), Factor::plain(2)]));
        let flat: Vec<_> = b.iter().map(|x| x.0.clone()).collect();
        assert_eq!(flat[0], vec![vec![0, 1], vec![0]]);
        assert_eq!(flat[1], vec![vec![0, 1], vec![1]]);
        assert_eq!(flat[2], vec![vec![0, 2], vec![0]]);
        let mut sorted = b.clone();
        sorted.sort();
        assert_eq!(sorted, b);
    }

    #[test]
    fn zero_degree_factors() {
        let s = SpaceDescriptor::new(vec![Factor::symmetric(4, 0), Factor::exterior(4, 0)]);
        assert_eq!(enumerate_basis(&s), vec![BasisIndex(vec![vec![], vec![]])]);
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn exterior_sort_sign() {
        let mut v = vec![2, 0, 1];
        assert_eq!(sort_exterior(&mut v), Some(1));
        assert_eq!(v, vec![0, 1, 2]);
        let mut v = vec![1, 0];
        assert_eq!(sort_exterior(&mut v), Some(-1));
        let mut v = vec![1, 0, 1];
        assert_eq!(sort_exterior(&mut v), None);
    }

    fn factor() -> impl Strategy<Value = Factor> {
        (0usize..6, 0usize..5, 0u8..3).prop_map(|(d, m, kind)| match kind {
            0 => Factor::plain(d),
            1 => Factor::symmetric(d, m),
            _ => Factor::exterior(d, m),
        })
    }

    proptest! {
        #[test]
        fn count_matches_closed_form(fs in proptest::collection::vec(factor(), 0..4)) {
            let s = SpaceDescriptor::new(fs);
            let b = enumerate_basis(&s);
            prop_assert_eq!(b.len(), s.dim());
            prop_assert!(b.iter().all(|i| s.is_valid(i)));
            prop_assert!(b.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
