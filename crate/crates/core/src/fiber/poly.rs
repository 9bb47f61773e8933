//! Functions on the fiber: elements of `ℚ(i)[z, w, z̄, w̄][r⁻²]` with
//! `r² = zz̄ + ww̄`.

use std::fmt;

use crate::exact::{GaussianRational, Monomial, Poly};

pub const Z: usize = 0;
pub const W: usize = 1;
pub const ZB: usize = 2;
pub const WB: usize = 3;
pub const NVARS: usize = 4;

/// `r² = zz̄ + ww̄` as a polynomial.
pub fn r2_poly() -> Poly {
    let z = Poly::var(NVARS, Z).mul(&Poly::var(NVARS, ZB));
    let w = Poly::var(NVARS, W).mul(&Poly::var(NVARS, WB));
    z.add(&w)
}

/// `N · r^{−2s}`.
///
/// Normal form: if `s > 0` then `r²` does not divide `N`, and the zero
/// function has `s = 0`. Since `r²` is irreducible the normal form is unique,
/// so structural equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiberPoly {
    num: Poly,
    inv_r2: u32,
}

impl FiberPoly {
    pub fn new(num: Poly, inv_r2: u32) -> Self {
        assert_eq!(num.nvars(), NVARS, "fiber polynomials have four variables");
        let mut p = Self { num, inv_r2 };
        p.normalize();
        p
    }

    pub fn from_poly(num: Poly) -> Self {
        Self::new(num, 0)
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero(NVARS))
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one(NVARS))
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(Poly::constant(NVARS, c))
    }

    pub fn var(i: usize) -> Self {
        Self::from_poly(Poly::var(NVARS, i))
    }

    /// `r⁻²`.
    pub fn inv_r2() -> Self {
        Self::new(Poly::one(NVARS), 1)
    }

    pub fn r2() -> Self {
        Self::from_poly(r2_poly())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn inv_r2_power(&self) -> u32 {
        self.inv_r2
    }

    /// `(exponents of z, w, z̄, w̄; power of r⁻²) → coefficient`.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32, &GaussianRational)> {
        self.num.terms().map(move |(e, c)| (e, self.inv_r2, c))
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.inv_r2 = 0;
            return;
        }
        let r2 = r2_poly();
        while self.inv_r2 > 0 {
            match self.num.div_exact(&r2) {
                Some(q) => {
                    self.num = q;
                    self.inv_r2 -= 1;
                }
                None => break,
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn lift_to(&self, s: u32) -> Poly {
        debug_assert!(s >= self.inv_r2);
        self.num.mul(&r2_poly().pow(s - self.inv_r2))
    }

    pub fn add(&self, o: &Self) -> Self {
        let s = self.inv_r2.max(o.inv_r2);
        Self::new(self.lift_to(s).add(&o.lift_to(s)), s)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let s = self.inv_r2.max(o.inv_r2);
        Self::new(self.lift_to(s).sub(&o.lift_to(s)), s)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.inv_r2 + o.inv_r2)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.num.scale(c), self.inv_r2)
    }

    pub fn neg(&self) -> Self {
        self.scale(&GaussianRational::from(-1))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// The ring involution: `z ↔ z̄`, `w ↔ w̄`, scalars conjugated. It fixes
    /// `r²`, so the `r⁻²` power is unchanged.
    pub fn conj(&self) -> Self {
        Self::new(self.num.conj_coeffs().permute_vars(&[ZB, WB, Z, W]), self.inv_r2)
    }

    /// `∂f/∂v` treating the four variables as independent.
    pub fn partial(&self, v: usize) -> Self {
        let s = self.inv_r2;
        let dn = Self::new(self.num.derivative(v), s);
        if s == 0 {
            return dn;
        }
        let dr2 = r2_poly().derivative(v);
        let tail = Self::new(
            self.num.mul(&dr2).scale(&GaussianRational::from(s as i64)),
            s + 1,
        );
        dn.sub(&tail)
    }

    /// Substitute fiber polynomials for `z, w, z̄, w̄`. When `self` carries a
    /// power of `r⁻²`, the image of `r²` must be a scalar multiple of a power
    /// of `r²` (true for right multiplication by a quaternion).
    pub fn substitute(&self, images: &[FiberPoly; 4]) -> Self {
        let mut acc = FiberPoly::zero();
        for (e, c) in self.num.terms() {
            let mut t = FiberPoly::constant(c.clone());
            for (i, &x) in e.iter().enumerate() {
                t = t.mul(&images[i].pow(x));
            }
            acc = acc.add(&t);
        }
        if self.inv_r2 == 0 {
            return acc;
        }
        let r2_img = images[Z].mul(&images[ZB]).add(&images[W].mul(&images[WB]));
        let (k, unit) = r2_img
            .as_r2_power()
            .expect("image of r² must be a scalar multiple of a power of r²");
        let inv = FiberPoly::new(Poly::constant(NVARS, unit.inv().expect("nonzero")), k);
        acc.mul(&inv.pow(self.inv_r2))
    }

    /// If `self = u · r^{2k}` for a scalar `u`, return `(k, u)`.
    fn as_r2_power(&self) -> Option<(u32, GaussianRational)> {
        if self.inv_r2 != 0 {
            return None;
        }
        let d = self.num.degree()?;
        if d % 2 != 0 {
            return None;
        }
        let k = d / 2;
        let base = r2_poly().pow(k);
        let (lm, lc) = base.leading_term()?;
        let c = self.num.coeff(lm);
        let u = &c / lc;
        (self.num == base.scale(&u)).then_some((k, u))
    }

    /// `(holomorphic, anti-holomorphic)` degree when every term agrees.
    /// `r⁻²` counts as `(−1, −1)`.
    pub fn bidegree(&self) -> Option<(i64, i64)> {
        let mut out: Option<(i64, i64)> = None;
        for (e, _) in self.num.terms() {
            let h = (e[Z] + e[W]) as i64 - self.inv_r2 as i64;
            let a = (e[ZB] + e[WB]) as i64 - self.inv_r2 as i64;
            match out {
                None => out = Some((h, a)),
                Some(p) if p != (h, a) => return None,
                _ => {}
            }
        }
        out
    }

    pub fn has_bidegree(&self, h: i64, a: i64) -> bool {
        self.is_zero() || self.bidegree() == Some((h, a))
    }
}

impl fmt::Debug for FiberPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FiberPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["z", "w", "z̄", "w̄"];
        if self.num.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        write!(f, "(")?;
        for (e, c) in self.num.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "{}", NAMES[i])?,
                    _ => write!(f, "{}^{}", NAMES[i], x)?,
                }
            }
        }
        write!(f, ")")?;
        if self.inv_r2 > 0 {
            write!(f, "·r^-{}", 2 * self.inv_r2)?;
        }
        Ok(())
    }
}
