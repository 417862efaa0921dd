//! Acceptance suite: one test per criterion, every check exact (tolerance
//! zero), one PASS/FAIL line per criterion on stdout.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use common::{brute_force_kernel_dim, ds_oracle, p, xs_oracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sympdirac::fischer::{coeff_c, decompose, lowering_identity_check, project_casimir, project_explicit};
use sympdirac::kernel::{monogenic_basis, TruncatedSlice};
use sympdirac::ops::{apply_ds, apply_gamma, apply_xs, clifford_apply, CliffordGen, OperatorExpr};
use sympdirac::verify::{
    bracket_compatibility, random_homogeneous, random_spoly, run_verify, VerifyConfig,
};
use sympdirac::weights::{casimir_eigenvalue, infinitesimal_character_check};
use sympdirac::{Scalar, ScalarMode, SPoly};

const SEED: u64 = 0x5D1A;

fn finish(num: u32, name: &str, failures: Vec<String>) {
    println!(
        "criterion {:2} ({}): {}",
        num,
        name,
        if failures.is_empty() { "PASS" } else { "FAIL" }
    );
    assert!(failures.is_empty(), "criterion {}: {:?}", num, failures);
}

fn xs_power(q: &SPoly, times: usize) -> SPoly {
    let mut acc = q.clone();
    for _ in 0..times {
        acc = apply_xs(&acc);
    }
    acc
}

fn ds_power(q: &SPoly, times: usize) -> SPoly {
    let mut acc = q.clone();
    for _ in 0..times {
        acc = apply_ds(&acc);
    }
    acc
}

#[test]
fn criterion_01_sl2_relations() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    for n in 1..=3usize {
        let cartan = OperatorExpr::euler_plus_n(n);
        for _ in 0..100 {
            let q = random_spoly(&mut rng, n, 4, 4, 6, ScalarMode::Gaussian);
            // The production operators and the raw exponent oracles must
            // agree before the relations mean anything.
            if apply_ds(&q) != ds_oracle(&q) {
                failures.push(format!("D_s oracle mismatch on {}", q));
            }
            if apply_xs(&q) != xs_oracle(&q) {
                failures.push(format!("X_s oracle mismatch on {}", q));
            }
            let h = cartan.apply(&q).unwrap();
            if apply_ds(&h) - cartan.apply(&apply_ds(&q)).unwrap() != apply_ds(&q) {
                failures.push(format!("[E+n, D_s] != -D_s on {}", q));
            }
            if cartan.apply(&apply_xs(&q)).unwrap() - apply_xs(&h) != apply_xs(&q) {
                failures.push(format!("[E+n, X_s] != X_s on {}", q));
            }
            if apply_ds(&apply_xs(&q)) - apply_xs(&apply_ds(&q)) != h {
                failures.push(format!("[D_s, X_s] != E+n on {}", q));
            }
            if failures.len() > 3 {
                break;
            }
        }
    }
    finish(1, "sl2 relations", failures);
}

#[test]
fn criterion_02_clifford_and_casimir_commutation() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    for n in 1..=3usize {
        for _ in 0..100 {
            let q = random_spoly(&mut rng, n, 4, 4, 6, ScalarMode::Gaussian);
            let e = |j: usize, q: &SPoly| clifford_apply(CliffordGen::E, j, q).unwrap();
            let f = |j: usize, q: &SPoly| clifford_apply(CliffordGen::F, j, q).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    if e(i, &e(j, &q)) != e(j, &e(i, &q)) {
                        failures.push(format!("e{} e{} != e{} e{} on {}", i, j, j, i, q));
                    }
                    if f(i, &f(j, &q)) != f(j, &f(i, &q)) {
                        failures.push(format!("f{} f{} != f{} f{} on {}", i, j, j, i, q));
                    }
                    let delta = if i == j { q.clone() } else { SPoly::zero(n) };
                    if e(i, &f(j, &q)) - f(j, &e(i, &q)) != delta {
                        failures.push(format!(
                            "e{} f{} - f{} e{} != delta on {}",
                            i, j, j, i, q
                        ));
                    }
                }
            }
            if apply_gamma(&apply_xs(&q)) != apply_xs(&apply_gamma(&q)) {
                failures.push(format!("[Gamma, X_s] != 0 on {}", q));
            }
            if apply_gamma(&apply_ds(&q)) != apply_ds(&apply_gamma(&q)) {
                failures.push(format!("[Gamma, D_s] != 0 on {}", q));
            }
            if failures.len() > 3 {
                break;
            }
        }
    }
    finish(2, "Clifford relations and Casimir commutation", failures);
}

/// Nonzero monogenic components (ell, m) from the decomposition of a seed.
fn monogenics(seed_poly: &SPoly) -> Vec<(usize, SPoly)> {
    decompose(seed_poly)
        .unwrap()
        .components
        .into_iter()
        .filter(|c| !c.m.is_zero())
        .map(|c| (c.ell, c.m))
        .collect()
}

#[test]
fn criterion_03_lowering_identities() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    for n in 1..=3usize {
        for _ in 0..4 {
            let deg = rng.gen_range(0..=3u32);
            let seed_poly = random_homogeneous(&mut rng, n, deg, 3, 4, ScalarMode::Gaussian);
            for (ell, m) in monogenics(&seed_poly) {
                if ell > 3 {
                    continue;
                }
                for k in 0..=4usize {
                    match lowering_identity_check(&m, ell, k) {
                        Ok(check) if check.holds => {}
                        other => failures.push(format!(
                            "lowering identity failed for k = {} on {}: {:?}",
                            k,
                            m,
                            other.map(|c| c.holds)
                        )),
                    }
                    let lifted = xs_power(&m, k);
                    for j in 0..=k {
                        let lhs = ds_power(&lifted, j);
                        let rhs = xs_power(&m, k - j).scale(&coeff_c(j, k, ell, n));
                        if lhs != rhs {
                            failures.push(format!(
                                "iterated law failed at j = {}, k = {} on {}",
                                j, k, m
                            ));
                        }
                    }
                }
            }
        }
    }
    finish(3, "monogenic lowering identities", failures);
}

fn projector_family(rng: &mut ChaCha8Rng) -> Vec<(usize, usize, SPoly)> {
    let mut family = Vec::new();
    for n in 1..=3usize {
        for k in 0..=5usize {
            for _ in 0..2 {
                let q = random_homogeneous(rng, n, k as u32, 5, 5, ScalarMode::Gaussian);
                family.push((n, k, q));
            }
        }
    }
    family
}

#[test]
fn criterion_04_projector_suite() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    for (n, k, q) in projector_family(&mut rng) {
        let parts: Vec<SPoly> = (0..=k)
            .map(|i| project_explicit(&q, k, i).unwrap())
            .collect();
        let mut sum = SPoly::zero(n);
        for part in &parts {
            sum = sum + part;
        }
        if sum != q {
            failures.push(format!("partition of unity failed on {}", q));
        }
        for (i, part) in parts.iter().enumerate() {
            for i2 in 0..=k {
                let again = project_explicit(part, k, i2).unwrap();
                let expect = if i2 == i { part.clone() } else { SPoly::zero(n) };
                if again != expect {
                    failures.push(format!("pi_{} pi_{} failed on {}", i2, i, q));
                }
            }
        }
        for comp in decompose(&q).unwrap().components {
            if !apply_ds(&comp.m).is_zero() {
                failures.push(format!(
                    "extracted part ell = {} not monogenic on {}",
                    comp.ell, q
                ));
            }
        }
        if !failures.is_empty() {
            break;
        }
    }
    finish(4, "projector suite", failures);
}

#[test]
fn criterion_05_dual_construction_oracle() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    for (_n, k, q) in projector_family(&mut rng) {
        for ell in 0..=k {
            let casimir = project_casimir(&q, k, ell).unwrap();
            let explicit = project_explicit(&q, k, k - ell).unwrap();
            if casimir != explicit {
                failures.push(format!(
                    "Casimir and explicit projectors disagree at ell = {} on {}",
                    ell, q
                ));
            }
        }
        if !failures.is_empty() {
            break;
        }
    }
    finish(5, "dual projector construction", failures);
}

#[test]
fn criterion_06_casimir_eigenvalue_law() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    for n in 1..=3usize {
        for k in 0..=4usize {
            for _ in 0..2 {
                let q = random_homogeneous(&mut rng, n, k as u32, 4, 5, ScalarMode::Gaussian);
                let result = decompose(&q).unwrap();
                for comp in &result.components {
                    let eig = Scalar::real(casimir_eigenvalue(comp.ell, n));
                    // Both the monogenic itself and its lifted summand are
                    // eigenvectors with the degree-ell eigenvalue.
                    if apply_gamma(&comp.m) != comp.m.scale(&eig) {
                        failures.push(format!("m_{} not an eigenvector on {}", comp.ell, q));
                    }
                    let summand = xs_power(&comp.m, result.k - comp.ell);
                    if apply_gamma(&summand) != summand.scale(&eig) {
                        failures.push(format!(
                            "X_s^{} m_{} not an eigenvector on {}",
                            result.k - comp.ell,
                            comp.ell,
                            q
                        ));
                    }
                }
            }
        }
    }
    finish(6, "Casimir eigenvalue law", failures);
}

#[test]
fn criterion_07_kernel_window() {
    let mut failures = Vec::new();
    for n in 1..=2usize {
        for k in 0..=3usize {
            for d in 0..=4usize {
                let basis = monogenic_basis(n, k, d, None);
                for v in &basis.vectors {
                    if !apply_ds(v).is_zero() || !ds_oracle(v).is_zero() {
                        failures.push(format!(
                            "kernel vector not annihilated at n={} k={} d={}: {}",
                            n, k, d, v
                        ));
                    }
                }
                let slice = TruncatedSlice::new(n, k, d);
                let expected = brute_force_kernel_dim(n, slice.basis());
                if basis.dimension() != expected {
                    failures.push(format!(
                        "kernel dimension {} != brute force {} at n={} k={} d={}",
                        basis.dimension(),
                        expected,
                        n,
                        k,
                        d
                    ));
                }
            }
        }
    }
    // Documented small cases.
    for d in 0..=4usize {
        if monogenic_basis(1, 0, d, None).dimension() != d + 1 {
            failures.push(format!("dim at n=1 k=0 d={} is not {}", d, d + 1));
        }
    }
    for (d, expect) in [(0usize, 1usize), (1, 1), (2, 2)] {
        if monogenic_basis(1, 1, d, None).dimension() != expect {
            failures.push(format!("dim at n=1 k=1 d={} is not {}", d, expect));
        }
    }
    let b = monogenic_basis(1, 1, 2, None);
    if b.vectors != vec![p("x2", 1), p("x1 - 1/2x2 q1^2", 1)] {
        failures.push("documented basis {x2, x1 - x2 q1^2/2} not reproduced".into());
    }
    finish(7, "kernel window vs brute force", failures);
}

#[test]
fn criterion_08_infinitesimal_character() {
    let mut failures = Vec::new();
    for n in 1..=4usize {
        let check = infinitesimal_character_check(n, 20, 20);
        if !check.ok {
            failures.push(format!(
                "norm collision at {:?} for n = {}",
                check.counterexample, n
            ));
        }
    }
    finish(8, "infinitesimal character separation", failures);
}

#[test]
fn criterion_09_bracket_compatibility() {
    let mut failures = Vec::new();
    for n in 1..=2usize {
        let report = bracket_compatibility(n, SEED);
        println!(
            "  finding (n = {}): {} of {} generator pairs deviate under the as-displayed \
             mixed metaplectic images; every deviation equals the normal-ordering defect",
            n,
            report.as_stated_mismatches.len(),
            report.pairs
        );
        for (u, v) in report.as_stated_mismatches.iter().take(4) {
            println!("    e.g. pair ({}; {})", u, v);
        }
        if !report.as_stated_defect_explained {
            failures.push(format!(
                "unexplained deviation in as-displayed images at n = {}",
                n
            ));
        }
        if !report.normal_ordered_all_match {
            failures.push(format!(
                "normal-ordered images broke the bracket correspondence at n = {}",
                n
            ));
        }
    }
    finish(9, "matrix/operator bracket compatibility", failures);
}

#[test]
fn criterion_10_determinism_and_format() {
    let mut failures = Vec::new();
    let cfg = VerifyConfig {
        ns: vec![1, 2],
        max_base_degree: 3,
        max_spinor_degree: 3,
        samples: 25,
        seed: SEED,
        mode: ScalarMode::Gaussian,
        sabotage_xs_sign: false,
    };
    let first = run_verify(&cfg).render_text();
    let second = run_verify(&cfg).render_text();
    if first != second {
        failures.push("seeded verification reports differ between runs".into());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=3usize);
        let q = random_spoly(&mut rng, n, 4, 4, 6, ScalarMode::Gaussian);
        let text = sympdirac::textio::serialize(&q);
        match sympdirac::textio::parse(&text, n) {
            Ok(back) if back == q => {}
            Ok(_) => failures.push(format!("round trip changed value for {}", text)),
            Err(e) => failures.push(format!("round trip failed to parse {}: {}", text, e)),
        }
        if failures.len() > 3 {
            break;
        }
    }

    // Junk inputs must be rejected with a positioned error, never a panic.
    let alphabet: Vec<char> = "xq123 +-*/^i()&.eN\n".chars().collect();
    for _ in 0..1000 {
        let len = rng.gen_range(0..18usize);
        let junk: String = (0..len)
            .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
            .collect();
        let _ = sympdirac::textio::parse(&junk, 2);
    }
    finish(10, "determinism and text format", failures);
}
