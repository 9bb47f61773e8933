//! The flat fiber connection forms `η₀, η₁` and their structure equations.

use super::form::FiberForm;
use super::poly::{FiberPoly, W, WB, Z, ZB};
use crate::exact::GaussianRational;

/// `η₀ = r⁻²(z̄dz + w̄dw)`, `η₁ = r⁻²(−w dz + z dw)`.
pub fn connection_forms() -> (FiberForm, FiberForm) {
    let r = FiberPoly::inv_r2();
    let v = FiberPoly::var;
    let eta0 = FiberForm::one_form([v(ZB).mul(&r), v(WB).mul(&r), FiberPoly::zero(), FiberPoly::zero()]);
    let eta1 = FiberForm::one_form([v(W).neg().mul(&r), v(Z).mul(&r), FiberPoly::zero(), FiberPoly::zero()]);
    (eta0, eta1)
}

/// A quaternion-valued form `a + jb` with complex forms `a, b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatForm {
    pub a: FiberForm,
    pub b: FiberForm,
}

impl QuatForm {
    pub fn new(a: FiberForm, b: FiberForm) -> Self {
        Self { a, b }
    }

    pub fn d(&self) -> Self {
        Self::new(self.a.d(), self.b.d())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.a.add(&o.a), self.b.add(&o.b))
    }

    /// `(a + jb)∧(c + jd) = (a∧c − b̄∧d) + j(ā∧d + b∧c)`, from `αj = jᾱ`.
    pub fn wedge(&self, o: &Self) -> Self {
        let re = self.a.wedge(&o.a).sub(&self.b.conj().wedge(&o.b));
        let jp = self.a.conj().wedge(&o.b).add(&self.b.wedge(&o.a));
        Self::new(re, jp)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

/// Fault injected into the identity harness to confirm it can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Replace `η₁` by `η₁ + dz̄` in the `dη₀` check only.
    PerturbEta1,
}

#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    /// `lhs − rhs`; zero when the identity holds.
    pub residual: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    pub checks: Vec<IdentityCheck>,
}

impl StructureReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub const STRUCTURE_CHECKS: [(&str, &str); 8] = [
    ("d_eta0", "dη₀ = −η₁∧η̄₁"),
    ("d_eta1", "dη₁ = η₀∧η₁ + η₁∧η̄₀"),
    ("d_r2", "dr² = r²(η₀ + η̄₀)"),
    ("d_r2_eta1", "d(r²η₁) = 2r²η₀∧η₁"),
    ("maurer_cartan", "dA + A∧A = 0, A = η₀ + jη₁"),
    ("dd_r2", "d(dr²) = 0"),
    ("eta0_euler", "η₀(z∂_z + w∂_w) = 1"),
    ("eta_type_10", "η₀, η₁ have no dz̄, dw̄ terms"),
];

fn form_check(name: &'static str, statement: &'static str, residual: FiberForm) -> IdentityCheck {
    IdentityCheck {
        name,
        statement,
        passed: residual.is_zero(),
        residual: residual.to_string(),
    }
}

pub fn verify_structure_equations() -> StructureReport {
    verify_structure_equations_with(None)
}

pub fn verify_structure_equations_with(fault: Option<Fault>) -> StructureReport {
    let (e0, e1) = connection_forms();
    let r2 = FiberPoly::r2();
    let r2f = FiberForm::function(r2.clone());
    let mut checks = Vec::new();
    let st = |i: usize| STRUCTURE_CHECKS[i];

    let e1_faulty = match fault {
        Some(Fault::PerturbEta1) => e1.add(&FiberForm::dx(ZB)),
        None => e1.clone(),
    };
    checks.push(form_check(
        st(0).0,
        st(0).1,
        e0.d().add(&e1_faulty.wedge(&e1_faulty.conj())),
    ));
    checks.push(form_check(
        st(1).0,
        st(1).1,
        e1.d().sub(&e0.wedge(&e1)).sub(&e1.wedge(&e0.conj())),
    ));
    checks.push(form_check(st(2).0, st(2).1, r2f.d().sub(&e0.add(&e0.conj()).mul_fn(&r2))));
    let two = GaussianRational::from(2);
    checks.push(form_check(
        st(3).0,
        st(3).1,
        e1.mul_fn(&r2).d().sub(&e0.wedge(&e1).mul_fn(&r2).scale(&two)),
    ));
    let a = QuatForm::new(e0.clone(), e1.clone());
    let mc = a.d().add(&a.wedge(&a));
    checks.push(IdentityCheck {
        name: st(4).0,
        statement: st(4).1,
        passed: mc.is_zero(),
        residual: if mc.is_zero() {
            "0".into()
        } else {
            format!("{} + j({})", mc.a, mc.b)
        },
    });
    checks.push(form_check(st(5).0, st(5).1, r2f.d().d()));
    let euler = [FiberPoly::var(Z), FiberPoly::var(W), FiberPoly::zero(), FiberPoly::zero()];
    checks.push(form_check(
        st(6).0,
        st(6).1,
        e0.interior(&euler).sub(&FiberForm::function(FiberPoly::one())),
    ));
    let antiholo = |f: &FiberForm| {
        let mut out = FiberForm::zero();
        for (&m, c) in f.terms() {
            if m & 0b1100 != 0 {
                out.add_term(m, c.clone());
            }
        }
        out
    };
    checks.push(form_check(st(7).0, st(7).1, antiholo(&e0).add(&antiholo(&e1))));
    StructureReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_coefficients() {
        let (e0, e1) = connection_forms();
        assert_eq!(e0.coeff(1 << Z), FiberPoly::var(ZB).mul(&FiberPoly::inv_r2()));
        assert_eq!(e1.coeff(1 << W), FiberPoly::var(Z).mul(&FiberPoly::inv_r2()));
    }

    #[test]
    fn all_identities_hold() {
        let report = verify_structure_equations();
        for c in &report.checks {
            assert!(c.passed, "{}: {}", c.name, c.residual);
        }
        assert_eq!(report.checks.len(), STRUCTURE_CHECKS.len());
    }

    #[test]
    fn injected_fault_fails_once() {
        let report = verify_structure_equations_with(Some(Fault::PerturbEta1));
        let failed: Vec<_> = report.failures().collect();
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].name, "d_eta0");
        assert_ne!(failed[0].residual, "0");
    }
}
