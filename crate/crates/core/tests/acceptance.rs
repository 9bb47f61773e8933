//! Acceptance criteria, one line each. All comparisons are exact; the only
//! pinned tolerances are the wall-clock bounds below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qkvf_core::eh::space::section_fiber;
use qkvf_core::eh::{cg_projectors, killing_form_check, tau, trace_map, tracefree_projector,
    wedge_identity};
use qkvf_core::exact::{binomial, Basis, GaussianRational, IndexedTensor, LinearMap, Poly};
use qkvf_core::fiber::poly::NVARS;
use qkvf_core::fiber::{equivariance_holds, lift_reconstruct, lift_section, rho_m_matrix,
    satisfies_reality_criterion, tau_tilde, verify_structure_equations, FiberPoly};
use qkvf_core::flat::{is_quaternionic, kernel_dimension, PolyField};
use qkvf_core::quaternion::C2Vector;
use qkvf_core::twistor::{closed_form_dim, euler_wedge_map, holo_dim, real_form_dim, vtilde_dim};

/// Exact integer and rational comparisons: no slack.
const TOLERANCE: i64 = 0;
const FAST: Duration = Duration::from_secs(1);
const SWEEP: Duration = Duration::from_secs(300);
const SUITE: Duration = Duration::from_secs(300);

/// Oracle fixtures for the flat model, computed by the real-coordinate
/// normalizer count in `tests/flat.rs` and the second-order argument for
/// `k = 2`.
const FLAT_KERNEL_1_1_1: usize = 11;
const FLAT_KERNEL_1_2_1: usize = 15;

fn g(a: i64, b: i64) -> GaussianRational {
    GaussianRational::from_parts(a, b)
}

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn exact_eq<T: PartialEq + std::fmt::Debug>(what: &str, want: T, got: T) -> Outcome {
    ensure(want == got, || format!("{what}: expected {want:?}, got {got:?}"))
}

fn sample(space: &qkvf_core::exact::SpaceDescriptor) -> IndexedTensor {
    let basis = Basis::new(space);
    let dense: Vec<GaussianRational> =
        (0..basis.len()).map(|i| g((i % 7) as i64 - 3, (i % 4) as i64 - 1)).collect();
    IndexedTensor::from_dense(&basis, &dense)
}

fn c1() -> Outcome {
    exact_eq("holo_dim(1,1)", 15, holo_dim(1, 1).map_err(|e| e.to_string())?)?;
    exact_eq("real_form_dim(1,1)", 15, real_form_dim(1, 1).map_err(|e| e.to_string())?)
}

fn c2() -> Outcome {
    exact_eq("vtilde_dim(1,2)", 60, vtilde_dim(1, 2))?;
    exact_eq("rank", 15, euler_wedge_map(1, 2).map_err(|e| e.to_string())?.rank())?;
    exact_eq("holo_dim(1,2)", 45, holo_dim(1, 2).map_err(|e| e.to_string())?)?;
    exact_eq("closed_form_dim(1,2)", 45, closed_form_dim(1, 2).map_err(|e| e.to_string())?)
}

fn c3() -> Outcome {
    for n in 1..=2 {
        for k in 1..=3 {
            let brute = holo_dim(n, k).map_err(|e| e.to_string())? as i128;
            let formula = closed_form_dim(n, k).map_err(|e| e.to_string())?;
            exact_eq(&format!("n={n} k={k}"), formula, brute)?;
        }
    }
    Ok(())
}

fn c4() -> Outcome {
    let report = verify_structure_equations();
    for c in &report.checks {
        ensure(c.passed && c.residual == "0", || format!("{}: residual {}", c.name, c.residual))?;
    }
    Ok(())
}

fn c5() -> Outcome {
    for m in 0..=4 {
        for (i, row) in rho_m_matrix(m).iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let want = FiberPoly::from_poly(Poly::monomial(vec![(m - i) as u32, i as u32, 0, 0], sign.into()));
            exact_eq(&format!("p_{{{i}0}}, m={m}"), &want, &row[0])?;
        }
    }
    for m in 0..=3 {
        let mut p = Poly::zero(NVARS);
        for i in 0..=m {
            p.add_term(vec![(m - i) as u32, i as u32, 0, 0], g(2 * i as i64 - 1, i as i64 + 1));
        }
        let xi0 = FiberPoly::from_poly(p);
        let xi = lift_reconstruct(1, 0, m, std::slice::from_ref(&xi0)).map_err(|e| e.to_string())?;
        exact_eq(&format!("round trip m={m}"), &xi0, &xi.component(0)[0])?;
        ensure(equivariance_holds(&xi), || format!("equivariance m={m}"))?;
    }
    Ok(())
}

fn c6() -> Outcome {
    let err = |e: qkvf_core::Error| e.to_string();
    for n in 1..=3 {
        for k in 1..=2 * n {
            let comp = trace_map(n, k).map_err(err)?.compose(&wedge_identity(n, k).map_err(err)?).map_err(err)?;
            ensure(comp == LinearMap::identity(comp.domain()), || format!("tr∘wedge n={n} k={k}"))?;
            let p = tracefree_projector(n, k).map_err(err)?;
            ensure(p.compose(&p).map_err(err)? == p, || format!("P₀² n={n} k={k}"))?;
            ensure(trace_map(n, k).map_err(err)?.compose(&p).map_err(err)?.is_zero(), || {
                format!("tr∘P₀ n={n} k={k}")
            })?;
        }
        ensure(tracefree_projector(n, 2 * n).map_err(err)?.is_zero(), || format!("top degree n={n}"))?;
    }
    for m in 1..=5 {
        let cg = cg_projectors(m).map_err(err)?;
        let sum = cg
            .include_plus
            .compose(&cg.p_plus)
            .map_err(err)?
            .add(&cg.embed_minus.compose(&cg.p_minus).map_err(err)?)
            .map_err(err)?;
        ensure(sum == LinearMap::identity(sum.domain()), || format!("CG m={m}"))?;
    }
    Ok(())
}

fn c7() -> Outcome {
    let err = |e: qkvf_core::Error| e.to_string();
    for n in 1..=2 {
        for k in 0..=2 * n {
            for m in 0..=3 {
                let x = sample(&section_fiber(n, k, m));
                let sign: GaussianRational = if (k + m) % 2 == 0 { 1.into() } else { (-1).into() };
                let twice = tau(k, m, &tau(k, m, &x).map_err(err)?).map_err(err)?;
                ensure(twice == x.scale(&sign), || format!("τ² n={n} k={k} m={m}"))?;
            }
        }
    }
    for k in 0..=2 {
        for m in 0..=3 {
            if (k + m) % 2 != 0 {
                continue;
            }
            let x = sample(&section_fiber(1, k, m));
            let fixed = x.add(&tau(k, m, &x).map_err(err)?).map_err(err)?;
            let lifted = lift_section(1, k, m, &fixed).map_err(err)?;
            ensure(satisfies_reality_criterion(&lifted), || format!("criterion k={k} m={m}"))?;
            ensure(tau_tilde(&lifted) == lifted, || format!("τ̃ invariance k={k} m={m}"))?;
        }
    }
    let space = section_fiber(1, 1, 1);
    for b in Basis::new(&space).iter() {
        for c in [g(1, 0), g(0, 1)] {
            let x = IndexedTensor::from_terms(&space, [(b.clone(), c)]).map_err(err)?;
            let theta = lift_section(1, 1, 1, &x.add(&tau(1, 1, &x).map_err(err)?).map_err(err)?).map_err(err)?;
            ensure(theta.component(1) == theta.j_conj().component(0), || format!("θ̃₁ at {b:?}"))?;
        }
    }
    Ok(())
}

fn c8() -> Outcome {
    let err = |e: qkvf_core::Error| e.to_string();
    for n in 1..=2 {
        for k in 1..=2 * n {
            exact_eq(
                &format!("kernel_dimension({n},{k},0)"),
                binomial(2 * n, k) * (k + 1),
                kernel_dimension(n, k, 0).map_err(err)?,
            )?;
            let mut x = PolyField::section(n, k, k).map_err(err)?;
            for (i, idx) in Basis::new(&section_fiber(n, k, k)).iter().enumerate() {
                x.add_term(idx.clone(), Poly::constant(4 * n, g(i as i64 + 1, 1 - i as i64)))
                    .map_err(err)?;
            }
            ensure(is_quaternionic(&x).map_err(err)?, || format!("constant field n={n} k={k}"))?;
        }
    }
    exact_eq("kernel_dimension(1,1,1)", FLAT_KERNEL_1_1_1, kernel_dimension(1, 1, 1).map_err(err)?)?;
    exact_eq("kernel_dimension(1,2,1)", FLAT_KERNEL_1_2_1, kernel_dimension(1, 2, 1).map_err(err)?)
}

fn c9() -> Outcome {
    let frames = [
        C2Vector::new(g(1, 0), g(0, 0)),
        C2Vector::new(g(1, 0), g(1, 0)),
        C2Vector::new(GaussianRational::from_ratios((1, 2), (-3, 4)), g(5, -1)),
    ];
    for (i, u) in frames.iter().enumerate() {
        let c = killing_form_check(u).map_err(|e| e.to_string())?;
        ensure(c.holds(), || format!("frame {i}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("holo_dim(1,1) = real_form_dim(1,1) = 15", FAST, c1),
        ("vtilde_dim(1,2) − rank = 60 − 15 = 45 = closed_form_dim(1,2)", FAST, c2),
        ("holo_dim = closed_form_dim for n ≤ 2, k ≤ 3", SWEEP, c3),
        ("structure equations hold with zero residual", SUITE, c4),
        ("ρ_m first column (m ≤ 4), lift round trip and equivariance (m ≤ 3)", SUITE, c5),
        ("trace, trace-free projector and Clebsch–Gordan algebra", SUITE, c6),
        ("τ², τ̃ reality criterion, θ̃₁ = J_E conj θ̃₀", SUITE, c7),
        ("flat model: constants, d = 0 baseline, oracle fixtures", SUITE, c8),
        ("Killing form B = −2(I⊗I + J⊗J + K⊗K) on three frames", SUITE, c9),
    ];
    println!("acceptance (tolerance {TOLERANCE}, exact arithmetic)");
    let mut failed = 0;
    for (i, (what, bound, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let verdict = match (&result, took <= *bound) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over the {bound:?} bound)"),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {}: {verdict}  {what}  [{took:.2?} ≤ {bound:?}]", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
