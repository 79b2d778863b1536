//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::time::{Duration, Instant};

use groupdet::detlab::{self, DEFAULT_SYMBOLIC_LIMIT};
use groupdet::reps::fourier_transform;
use groupdet::ring::Ring;
use groupdet::verify::{self, CheckId, CheckResult, Mode, RunConfig, Status};
use groupdet::{AlgebraElement, CycloNumber, GroupContext};

const ABELIAN_SMALL: &[&str] = &[
    "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "C2xC3", "C7", "C8", "C2xC4", "C2xC2xC2",
];
const NONABELIAN_SMALL: &[&str] = &["D3", "D4", "Q2"];
const NONABELIAN_LARGE: &[&str] = &["D5", "D6", "D7", "D8", "Q3", "Q4", "Q5"];
const TRIALS: u64 = 20;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ctx(spec: &str) -> GroupContext {
    GroupContext::parse(spec).unwrap()
}

fn point(c: &GroupContext, seed: u64) -> Vec<CycloNumber> {
    verify::random_assignment(c, seed, verify::default_bound(c))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn expect_status(r: &CheckResult, want: Status) -> Result<(), String> {
    ensure(r.status == want, || {
        format!(
            "{} on {}: {:?}, wanted {:?} ({:?} {:?})",
            r.id.as_str(),
            r.group,
            r.status,
            want,
            r.reason,
            r.witness
        )
    })
}

fn symbolic() -> RunConfig {
    RunConfig {
        mode: Mode::Symbolic,
        ..RunConfig::default()
    }
}

/// Frobenius agreement: Θ(G) equals the product over representations as polynomials.
fn frobenius() -> Outcome {
    let groups: Vec<&str> = ABELIAN_SMALL
        .iter()
        .chain(NONABELIAN_SMALL)
        .copied()
        .collect();
    for spec in &groups {
        let c = ctx(spec);
        let theta = detlab::symbolic_det(&c, DEFAULT_SYMBOLIC_LIMIT).map_err(|e| e.to_string())?;
        ensure(detlab::frobenius_theta(&c, &c.symbols()) == theta, || {
            format!("{spec}: Frobenius product differs")
        })?;
    }
    Ok(format!(
        "{} groups, exact polynomial equality",
        groups.len()
    ))
}

/// Circulant form over ⟨a⟩.
fn circulant() -> Outcome {
    for spec in NONABELIAN_SMALL {
        let c = ctx(spec);
        let theta = detlab::symbolic_det(&c, DEFAULT_SYMBOLIC_LIMIT).map_err(|e| e.to_string())?;
        let circ = detlab::circulant_theta(&c, &c.symbols()).map_err(|e| e.to_string())?;
        ensure(circ == theta, || format!("{spec}: symbolic mismatch"))?;
    }
    for spec in NONABELIAN_LARGE {
        let c = ctx(spec);
        for t in 0..TRIALS {
            let p = point(&c, t);
            let circ = detlab::circulant_theta(&c, &p).map_err(|e| e.to_string())?;
            ensure(circ == detlab::numeric_det_at(&c, &p), || {
                format!("{spec}: mismatch at trial {t}")
            })?;
        }
    }
    Ok(format!(
        "symbolic on {}, {TRIALS} points each on {}",
        NONABELIAN_SMALL.join(" "),
        NONABELIAN_LARGE.join(" ")
    ))
}

fn product_is_theta_e<R: Ring>(prod: &AlgebraElement<R>, theta: &R, identity: usize) -> bool {
    prod.coeffs().iter().enumerate().all(|(g, c)| {
        if g == identity {
            c == theta
        } else {
            c.is_zero()
        }
    })
}

/// The group-algebra product of the factors is Θ(G)e.
fn factorization() -> Outcome {
    for spec in ABELIAN_SMALL.iter().chain(NONABELIAN_SMALL) {
        let c = ctx(spec);
        let theta = detlab::symbolic_det(&c, DEFAULT_SYMBOLIC_LIMIT).map_err(|e| e.to_string())?;
        let prod = detlab::theta_e_product(&c, &c.symbols()).map_err(|e| e.to_string())?;
        ensure(
            product_is_theta_e(&prod, &theta, c.group.identity()),
            || format!("{spec}: symbolic product is not Θ(G)e"),
        )?;
    }
    for spec in NONABELIAN_LARGE.iter().chain(&["C2xC6", "C12"]) {
        let c = ctx(spec);
        for t in 0..TRIALS {
            let p = point(&c, t);
            let prod = detlab::theta_e_product(&c, &p).map_err(|e| e.to_string())?;
            let theta = detlab::numeric_det_at(&c, &p);
            ensure(
                product_is_theta_e(&prod, &theta, c.group.identity()),
                || format!("{spec}: product is not Θ(G)e at trial {t}"),
            )?;
        }
    }
    Ok("symbolic for order ≤ 8, randomized above".into())
}

/// Two-sided inverses from the factorization formulas.
fn inverses() -> Outcome {
    let mut groups: Vec<&str> = ABELIAN_SMALL.to_vec();
    groups.extend(NONABELIAN_SMALL);
    groups.extend(NONABELIAN_LARGE);
    let mut count = 0;
    for spec in &groups {
        let c = ctx(spec);
        let e = AlgebraElement::basis(&c.group, &c.field, c.group.identity());
        let mut seed = 0;
        for _ in 0..TRIALS {
            let (p, inv) = loop {
                let p = point(&c, seed);
                seed += 1;
                if let Ok(inv) = detlab::inverse_element(&c, &p) {
                    break (p, inv);
                }
            };
            let alpha = AlgebraElement::from_coeffs(&c.group, p).unwrap();
            ensure(alpha.convolve(&inv).unwrap() == e, || {
                format!("{spec}: α·α⁻¹ ≠ e")
            })?;
            ensure(inv.convolve(&alpha).unwrap() == e, || {
                format!("{spec}: α⁻¹·α ≠ e")
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} nonsingular elements over {} groups",
        groups.len()
    ))
}

/// Structure of the coefficients A_h.
fn a_structure() -> Outcome {
    let cfg = symbolic();
    let ids = [
        CheckId::L5_1_1,
        CheckId::L5_1_2,
        CheckId::L5_1_3,
        CheckId::L5_1_4,
    ];
    let groups = ["D3", "D4", "D5", "D6", "D7", "D8", "Q2", "Q3", "Q4", "Q5"];
    for spec in groups {
        let c = ctx(spec);
        for id in ids {
            let r = verify::run_check(id, &c, &cfg).map_err(|e| e.to_string())?;
            expect_status(&r, Status::Pass)?;
            ensure(r.mode == "symbolic", || {
                format!("{id} on {spec} ran {}", r.mode)
            })?;
        }
    }
    Ok(format!(
        "{} checks symbolic on D3–D8, Q2–Q5",
        ids.len() * groups.len()
    ))
}

/// Commutator identities, closed-form coefficients and nonvanishing witnesses.
fn commutators() -> Outcome {
    let cfg = symbolic();
    let always = [
        CheckId::T6_2_3,
        CheckId::PAIRING,
        CheckId::L6_2_1,
        CheckId::L6_2_2,
    ];
    let where_defined = [
        CheckId::T6_2_4,
        CheckId::T6_2_13,
        CheckId::L6_2_5,
        CheckId::L6_2_6,
        CheckId::L6_2_7,
        CheckId::L6_2_8,
        CheckId::L6_2_9,
        CheckId::L6_2_10,
        CheckId::L6_2_11,
    ];
    let mut passes = 0;
    for spec in ["D3", "D4", "D5", "D6", "Q2", "Q3", "Q4"] {
        let c = ctx(spec);
        let defined = c.reps.has_four_linear();
        for id in always {
            expect_status(
                &verify::run_check(id, &c, &cfg).map_err(|e| e.to_string())?,
                Status::Pass,
            )?;
            passes += 1;
        }
        for id in where_defined {
            let r = verify::run_check(id, &c, &cfg).map_err(|e| e.to_string())?;
            expect_status(
                &r,
                if defined {
                    Status::Pass
                } else {
                    Status::Skipped
                },
            )?;
            if defined {
                ensure(r.mode == "symbolic", || {
                    format!("{id} on {spec} ran {}", r.mode)
                })?;
                passes += 1;
            }
        }
    }
    let cfg = RunConfig {
        mode: Mode::Randomized,
        ..RunConfig::default()
    };
    for spec in ["D4", "Q2"] {
        let c = ctx(spec);
        let r = verify::run_check(CheckId::NONVANISH, &c, &cfg).map_err(|e| e.to_string())?;
        expect_status(&r, Status::Pass)?;
        let w = r.witness.unwrap_or_default();
        for label in ["[α₁, α₃]", "[α₁, α₄]", "[α₂, α₄]"] {
            ensure(w[label]["value"].as_str().is_some_and(|v| v != "0"), || {
                format!("{spec}: no witness for {label}")
            })?;
        }
    }
    Ok(format!("{passes} symbolic passes, witnesses on D4 and Q2"))
}

/// The Fourier transform is multiplicative on random pairs.
fn fourier() -> Outcome {
    const PAIRS: u64 = 50;
    for spec in ["C6", "D3", "D4", "Q2"] {
        let c = ctx(spec);
        for t in 0..PAIRS {
            let f = AlgebraElement::from_coeffs(&c.group, point(&c, 2 * t)).unwrap();
            let h = AlgebraElement::from_coeffs(&c.group, point(&c, 2 * t + 1)).unwrap();
            let lhs =
                fourier_transform(&c.reps, &f.convolve(&h).unwrap()).map_err(|e| e.to_string())?;
            let rhs = fourier_transform(&c.reps, &f)
                .and_then(|a| Ok(a.mul(&fourier_transform(&c.reps, &h)?)))
                .map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("{spec}: pair {t} differs"))?;
        }
        let cfg = RunConfig {
            mode: Mode::Randomized,
            trials: PAIRS as usize,
            ..RunConfig::default()
        };
        expect_status(
            &verify::run_check(CheckId::T3_1_2, &c, &cfg).map_err(|e| e.to_string())?,
            Status::Pass,
        )?;
    }
    Ok(format!("{PAIRS} pairs each on C6 D3 D4 Q2"))
}

/// The x_g reading of the rotation product fails while the A_g reading holds.
fn reading() -> Outcome {
    let c = ctx("D3");
    let cfg = symbolic();
    let a_reading = verify::run_check(CheckId::T5_2_3, &c, &cfg).map_err(|e| e.to_string())?;
    expect_status(&a_reading, Status::Pass)?;
    ensure(a_reading.mode == "symbolic", || {
        "A_g reading not symbolic".into()
    })?;

    let r = verify::run_check(CheckId::T5_2_3_READING, &c, &cfg).map_err(|e| e.to_string())?;
    expect_status(&r, Status::Pass)?;
    let w = r.witness.clone().unwrap_or_default();
    ensure(w["x_reading"] == "refuted", || format!("witness {w}"))?;
    let cex = &w["x_reading_counterexample"]["assignment"];
    let values: Vec<i64> = (0..c.order())
        .map(|g| cex[c.group.name(g)].as_i64().unwrap_or(0))
        .collect();
    let p = c.point(&values);
    let x_product = detlab::rotation_product(&c, &p).map_err(|e| e.to_string())?;
    let theta = detlab::numeric_det_at(&c, &p);
    ensure(
        !product_is_theta_e(&x_product, &theta, c.group.identity()),
        || "recorded counterexample does not refute the x_g reading".into(),
    )?;
    ensure(
        serde_json::to_string(&r).unwrap().contains("refuted"),
        || "outcome not recorded in the result".into(),
    )?;
    Ok("A_g reading symbolic pass, x_g reading refuted on D3".into())
}

/// Equal seeds give byte-identical serialized results.
fn determinism() -> Outcome {
    let c = ctx("D4");
    let cfg = RunConfig {
        seed: 7,
        ..RunConfig::default()
    };
    let render = || {
        let results = verify::run_all(&c, &cfg);
        let theta = detlab::symbolic_det(&c, DEFAULT_SYMBOLIC_LIMIT).unwrap();
        serde_json::to_string_pretty(&serde_json::json!({
            "results": results,
            "theta": theta.to_text(&c.vars),
        }))
        .unwrap()
    };
    let (a, b) = (render(), render());
    ensure(a == b, || "two runs differ".into())?;
    Ok(format!("{} bytes identical across runs", a.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("Frobenius agreement", frobenius),
        ("circulant form", circulant),
        ("group-algebra factorization", factorization),
        ("inverse formulas", inverses),
        ("A_h structure", a_structure),
        ("commutator calculus", commutators),
        ("Fourier isomorphism", fourier),
        ("reading adjudication", reading),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed: Duration = start.elapsed();
        match outcome {
            Ok(detail) => println!(
                "criterion {}: PASS {name} [{:.1}s] {detail}",
                i + 1,
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "criterion {}: FAIL {name} [{:.1}s] {why}",
                    i + 1,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
