//! Exact identities checked by `qkvf identities`.

use qkvf_core::eh::space::section_fiber;
use qkvf_core::eh::{cg_projectors, killing_form_check, tau, trace_map, tracefree_projector,
    wedge_identity};
use qkvf_core::exact::{Basis, IndexedTensor, LinearMap, Poly};
use qkvf_core::fiber::poly::NVARS;
use qkvf_core::fiber::{equivariance_holds, lift_reconstruct, lift_section, rho_homomorphism_holds,
    rho_m_matrix, satisfies_reality_criterion, tau_tilde, verify_structure_equations_with, Fault,
    FiberPoly, STRUCTURE_CHECKS};
use qkvf_core::quaternion::C2Vector;
use qkvf_core::{GaussianRational, Result};

use crate::report::{Check, Status};

type Suite = fn() -> Result<Option<String>>;

/// Checks beyond the structure equations; each returns the first failing
/// case, if any.
const ALGEBRA: [(&str, &str, Suite); 10] = [
    ("rho_first_column", "p_{i0} = (−1)^i z^{m−i} w^i, m ≤ 4", rho_first_column),
    ("rho_homomorphism", "ρ_m(ab) = ρ_m(a)ρ_m(b), m ≤ 2", rho_homomorphism),
    ("lift_equivariance", "lift(ξ₀) restricts to ξ₀ and is ρ_m-equivariant, m ≤ 3", lift_equivariance),
    ("tau_squared", "τ² = (−1)^{k+m} on ∧^kE ⊗ S^mH, n ≤ 2, m ≤ 3", tau_squared),
    ("tau_tilde_criterion", "θ̃₁ = J_E conj θ̃₀ and τ̃θ̃ = θ̃ for real θ ∈ E⊗H", tau_tilde_criterion),
    ("trace_wedge_inverse", "tr(α ∧ id_E) = α, n ≤ 3, all k", trace_wedge_inverse),
    ("tracefree_projector", "P₀² = P₀ and tr∘P₀ = 0, n ≤ 3, all k", tracefree_idempotent),
    ("top_degree_tracefree", "(∧^{2n}E ⊗ E*)₀ = 0, n ≤ 3", top_degree_tracefree),
    ("cg_resolution", "ι₊P₊ + E₋P₋ = id on S^mH ⊗ H, m ≤ 5", cg_resolution),
    ("killing_form", "B = −2(I⊗I + J⊗J + K⊗K) for three frames", killing_form),
];

/// `(name, statement)` for every check, in run order.
pub fn catalogue() -> Vec<(&'static str, &'static str)> {
    STRUCTURE_CHECKS
        .iter()
        .copied()
        .chain(ALGEBRA.iter().map(|(n, s, _)| (*n, *s)))
        .collect()
}

/// Run every check; `inject_fault` perturbs `η₁` by `dz̄` in the `dη₀`
/// check.
pub fn run(inject_fault: bool) -> Vec<Check> {
    let fault = inject_fault.then_some(Fault::PerturbEta1);
    let mut out: Vec<Check> = verify_structure_equations_with(fault)
        .checks
        .into_iter()
        .map(|c| Check {
            name: c.name.into(),
            status: Status::from_bool(c.passed),
            expected: "0".into(),
            actual: c.residual,
        })
        .collect();
    for (name, _, suite) in ALGEBRA {
        let (status, actual) = match suite() {
            Ok(None) => (Status::Pass, "holds".to_string()),
            Ok(Some(case)) => (Status::Fail, format!("fails at {case}")),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        out.push(Check {
            name: name.into(),
            status,
            expected: "holds".into(),
            actual,
        });
    }
    out
}

fn g(a: i64, b: i64) -> GaussianRational {
    GaussianRational::from_parts(a, b)
}

/// The first `(n, k)` with `1 ≤ k ≤ 2n`, `n ≤ max_n`, where `ok` fails.
fn first_nk_failure(max_n: usize, ok: impl Fn(usize, usize) -> Result<bool>) -> Result<Option<String>> {
    for n in 1..=max_n {
        for k in 1..=2 * n {
            if !ok(n, k)? {
                return Ok(Some(format!("n={n} k={k}")));
            }
        }
    }
    Ok(None)
}

fn sample_tensor(space: &qkvf_core::exact::SpaceDescriptor) -> IndexedTensor {
    let basis = Basis::new(space);
    let dense: Vec<GaussianRational> =
        (0..basis.len()).map(|i| g((i % 5) as i64 - 2, (i % 3) as i64 - 1)).collect();
    IndexedTensor::from_dense(&basis, &dense)
}

fn rho_first_column() -> Result<Option<String>> {
    for m in 0..=4 {
        for (i, row) in rho_m_matrix(m).iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let want = FiberPoly::from_poly(Poly::monomial(vec![(m - i) as u32, i as u32, 0, 0], sign.into()));
            if row[0] != want {
                return Ok(Some(format!("m={m} i={i}")));
            }
        }
    }
    Ok(None)
}

fn rho_homomorphism() -> Result<Option<String>> {
    Ok((0..=2).find(|&m| !rho_homomorphism_holds(m)).map(|m| format!("m={m}")))
}

fn lift_equivariance() -> Result<Option<String>> {
    for m in 0..=3 {
        let mut p = Poly::zero(NVARS);
        for i in 0..=m {
            p.add_term(vec![(m - i) as u32, i as u32, 0, 0], g(i as i64 + 1, 1 - i as i64));
        }
        let xi0 = FiberPoly::from_poly(p);
        let xi = lift_reconstruct(1, 0, m, std::slice::from_ref(&xi0))?;
        if xi.component(0)[0] != xi0 || !equivariance_holds(&xi) {
            return Ok(Some(format!("m={m}")));
        }
    }
    Ok(None)
}

fn tau_squared() -> Result<Option<String>> {
    let cases = (1..=2).flat_map(|n| (0..=2 * n).flat_map(move |k| (0..=3).map(move |m| (n, k, m))));
    for (n, k, m) in cases {
        let x = sample_tensor(&section_fiber(n, k, m));
        let sign: GaussianRational = if (k + m) % 2 == 0 { 1.into() } else { (-1).into() };
        if tau(k, m, &tau(k, m, &x)?)? != x.scale(&sign) {
            return Ok(Some(format!("n={n} k={k} m={m}")));
        }
    }
    Ok(None)
}

fn tau_tilde_criterion() -> Result<Option<String>> {
    let space = section_fiber(1, 1, 1);
    let basis = Basis::new(&space);
    let cases = basis.iter().flat_map(|b| [(b.clone(), g(1, 0)), (b.clone(), g(0, 1))]);
    for (b, c) in cases {
        let x = IndexedTensor::from_terms(&space, [(b.clone(), c)])?;
        let real = x.add(&tau(1, 1, &x)?)?;
        let theta = lift_section(1, 1, 1, &real)?;
        let ok = theta.component(1) == theta.j_conj().component(0)
            && satisfies_reality_criterion(&theta)
            && tau_tilde(&theta) == theta;
        if !ok {
            return Ok(Some(format!("{b:?}")));
        }
    }
    Ok(None)
}

fn trace_wedge_inverse() -> Result<Option<String>> {
    first_nk_failure(3, |n, k| {
        let comp = trace_map(n, k)?.compose(&wedge_identity(n, k)?)?;
        Ok(comp == LinearMap::identity(comp.domain()))
    })
}

fn tracefree_idempotent() -> Result<Option<String>> {
    first_nk_failure(3, |n, k| {
        let p = tracefree_projector(n, k)?;
        Ok(p.compose(&p)? == p && trace_map(n, k)?.compose(&p)?.is_zero())
    })
}

fn top_degree_tracefree() -> Result<Option<String>> {
    for n in 1..=3 {
        if !tracefree_projector(n, 2 * n)?.is_zero() {
            return Ok(Some(format!("n={n}")));
        }
    }
    Ok(None)
}

fn cg_resolution() -> Result<Option<String>> {
    for m in 1..=5 {
        let cg = cg_projectors(m)?;
        let sum = cg.include_plus.compose(&cg.p_plus)?.add(&cg.embed_minus.compose(&cg.p_minus)?)?;
        if sum != LinearMap::identity(sum.domain()) {
            return Ok(Some(format!("m={m}")));
        }
    }
    Ok(None)
}

fn killing_form() -> Result<Option<String>> {
    let frames = [
        C2Vector::new(g(1, 0), g(0, 0)),
        C2Vector::new(g(2, 0), g(0, 1)),
        C2Vector::new(GaussianRational::from_ratios((1, 2), (-3, 4)), g(5, -1)),
    ];
    for (i, u) in frames.iter().enumerate() {
        if !killing_form_check(u)?.holds() {
            return Ok(Some(format!("frame {i}")));
        }
    }
    Ok(None)
}
