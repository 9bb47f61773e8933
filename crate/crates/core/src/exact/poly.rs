//! Sparse multivariate polynomials over ℚ(i).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::scalar::GaussianRational;

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// A polynomial in a fixed number of commuting variables.
///
/// Terms are ordered lexicographically by exponent vector with variable 0
/// most significant, so the last term is the lex-leading one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: GaussianRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, GaussianRational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable {i} out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, GaussianRational::one())
    }

    pub fn monomial(exps: Monomial, c: GaussianRational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Monomial, c: GaussianRational) {
        assert_eq!(exps.len(), self.nvars, "monomial arity");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> GaussianRational {
        self.terms.get(exps).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// True when every monomial has total degree `d` (zero counts).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&GaussianRational::from(-1))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), -v);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Monomial = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative in variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                out.add_term(f, c * &GaussianRational::from(e[i] as i64));
            }
        }
        out
    }

    /// Conjugate scalar coefficients only.
    pub fn conj_coeffs(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.conj())).collect(),
        }
    }

    /// Rename variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] += x;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Substitute `images[i]` for variable `i`. The images may live in a
    /// different number of variables.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut cache: BTreeMap<(usize, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let p = cache.entry((i, x)).or_insert_with(|| images[i].pow(x));
                term = term.mul(p);
            }
            out.add_assign(&term);
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    ///
    /// Lex division by a single polynomial: the remainder is zero iff the
    /// division is exact, since a remainder term is never cancelled later.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (lm, lc) = d.leading_term()?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut q = Poly::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            if m.iter().zip(lm).any(|(a, b)| a < b) {
                return None;
            }
            let e: Monomial = m.iter().zip(lm).map(|(a, b)| a - b).collect();
            let t = Poly::monomial(e, c * &lc_inv);
            rem = rem.sub(&t.mul(d));
            q.add_assign(&t);
        }
        Some(q)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "·x{i}")?,
                    _ => write!(f, "·x{i}^{x}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly3() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3), -4i64..5, -2i64..3), 0..5).prop_map(
            |ts| {
                let mut p = Poly::zero(3);
                for ((a, b, c), re, im) in ts {
                    p.add_term(vec![a, b, c], GaussianRational::from_parts(re, im));
                }
                p
            },
        )
    }

    #[test]
    fn derivative_of_square() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.mul(&x).add(&x.mul(&y));
        assert_eq!(p.derivative(0), x.scale(&2.into()).add(&y));
    }

    proptest! {
        #[test]
        fn exact_division_recovers_factor(a in poly3(), b in poly3()) {
            prop_assume!(!b.is_zero());
            let p = a.mul(&b);
            prop_assert_eq!(p.div_exact(&b), Some(a));
        }

        #[test]
        fn leibniz(a in poly3(), b in poly3()) {
            let lhs = a.mul(&b).derivative(1);
            let rhs = a.derivative(1).mul(&b).add(&a.mul(&b.derivative(1)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
