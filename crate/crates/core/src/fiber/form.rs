//! Exterior forms in `dz, dw, dz̄, dw̄` with [`FiberPoly`] coefficients.

use std::collections::BTreeMap;
use std::fmt;

use super::poly::{FiberPoly, NVARS};
use crate::exact::GaussianRational;

/// Bit `v` of a mask stands for `dx_v`, in the variable order `z, w, z̄, w̄`.
pub type FormMask = u8;

/// Sign of `dx_A ∧ dx_B` relative to `dx_{A∪B}`, or `None` if they overlap.
fn wedge_sign(a: FormMask, b: FormMask) -> Option<i64> {
    if a & b != 0 {
        return None;
    }
    let mut inversions = 0u32;
    for v in 0..NVARS {
        if b & (1 << v) != 0 {
            inversions += (a >> (v + 1)).count_ones();
        }
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct FiberForm {
    terms: BTreeMap<FormMask, FiberPoly>,
}

impl FiberForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn function(f: FiberPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(0, f);
        out
    }

    /// `dx_v`.
    pub fn dx(v: usize) -> Self {
        let mut out = Self::zero();
        out.add_term(1 << v, FiberPoly::one());
        out
    }

    /// `f dx_v`.
    pub fn one_form(coeffs: [FiberPoly; 4]) -> Self {
        let mut out = Self::zero();
        for (v, c) in coeffs.into_iter().enumerate() {
            out.add_term(1 << v, c);
        }
        out
    }

    pub fn add_term(&mut self, mask: FormMask, c: FiberPoly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&mask) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(mask, sum);
        }
    }

    pub fn coeff(&self, mask: FormMask) -> FiberPoly {
        self.terms.get(&mask).cloned().unwrap_or_else(FiberPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FormMask, &FiberPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.count_ones() == degree)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&m, c) in &o.terms {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&GaussianRational::from(-1))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        self.map_coeffs(|p| p.scale(c))
    }

    pub fn mul_fn(&self, f: &FiberPoly) -> Self {
        self.map_coeffs(|p| p.mul(f))
    }

    fn map_coeffs(&self, f: impl Fn(&FiberPoly) -> FiberPoly) -> Self {
        let mut out = Self::zero();
        for (&m, c) in &self.terms {
            out.add_term(m, f(c));
        }
        out
    }

    pub fn wedge(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &o.terms {
                if let Some(s) = wedge_sign(a, b) {
                    out.add_term(a | b, ca.mul(cb).scale(&GaussianRational::from(s)));
                }
            }
        }
        out
    }

    /// Complex conjugation: conjugate coefficients and swap `dz ↔ dz̄`,
    /// `dw ↔ dw̄`, reordering the wedge.
    pub fn conj(&self) -> Self {
        const SWAP: [usize; 4] = [2, 3, 0, 1];
        let mut out = Self::zero();
        for (&m, c) in &self.terms {
            // Build the image wedge generator by generator, in order.
            let mut img = FiberForm::function(c.conj());
            for v in (0..NVARS).filter(|v| m & (1 << v) != 0) {
                img = img.wedge(&FiberForm::dx(SWAP[v]));
            }
            out = out.add(&img);
        }
        out
    }

    /// `d(f dx_A) = Σ_v ∂_v f dx_v ∧ dx_A`.
    pub fn d(&self) -> Self {
        let mut out = Self::zero();
        for (&m, c) in &self.terms {
            for v in 0..NVARS {
                let bit = 1u8 << v;
                if let Some(s) = wedge_sign(bit, m) {
                    out.add_term(bit | m, c.partial(v).scale(&GaussianRational::from(s)));
                }
            }
        }
        out
    }

    /// Contraction with the vector field `Σ_v X_v ∂_v`.
    pub fn interior(&self, x: &[FiberPoly; 4]) -> Self {
        let mut out = Self::zero();
        for (&m, c) in &self.terms {
            let mut pos = 0;
            for v in 0..NVARS {
                let bit = 1u8 << v;
                if m & bit == 0 {
                    continue;
                }
                let s = if pos % 2 == 0 { 1 } else { -1 };
                out.add_term(m & !bit, c.mul(&x[v]).scale(&GaussianRational::from(s)));
                pos += 1;
            }
        }
        out
    }
}

/// Exterior derivative on fiber forms.
pub fn exterior_derivative(f: &FiberForm) -> FiberForm {
    f.d()
}

impl fmt::Debug for FiberForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FiberForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["dz", "dw", "dz̄", "dw̄"];
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            let gens: Vec<&str> = (0..NVARS).filter(|v| m & (1 << v) != 0).map(|v| NAMES[v]).collect();
            if !gens.is_empty() {
                write!(f, " {}", gens.join("∧"))?;
            }
        }
        Ok(())
    }
}
