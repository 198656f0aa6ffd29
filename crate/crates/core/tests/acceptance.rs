//! Acceptance suite: one PASS/FAIL line per criterion.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use qgt_core::dck::{height_check, maxcomm_certificate, verify_lt_theorem};
use qgt_core::galois::{embed_check, sample_points, stabilizer_m, PhiForm};
use qgt_core::gl2gwa::{fiber_gl2, module_action_check, sample_characters, CharacterKind};
use qgt_core::gtsub::{
    commute_check, d_gen, derive_constant_table, hc_closed_form, hc_product_formula, hc_project,
    jacobian_witness, z_poly,
};
use qgt_core::uq::engine_soundness;

type Outcome = Result<(bool, String), Box<dyn std::error::Error>>;

const SEED: u64 = 20240917;

fn engine() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for n in [2, 3] {
        let rep = engine_soundness(n, 1000, 1000, SEED + n as u64)?;
        ok &= rep.passes() && rep.triples >= 1000 && rep.monomials >= 1000;
        details.push(format!(
            "N={n}: {} triples ({} failures), {} monomials ({} failures)",
            rep.triples, rep.associativity_failures, rep.monomials, rep.idempotence_failures
        ));
    }
    Ok((ok, details.join("; ")))
}

fn commutativity() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for n in 1..=4 {
        let recs = commute_check(n)?;
        let bad = recs.iter().filter(|r| !r.commutes).count();
        ok &= bad == 0;
        details.push(format!("N={n}: {} pairs, {bad} nonzero", recs.len()));
    }
    Ok((ok, details.join("; ")))
}

fn leading_terms() -> Outcome {
    let mut details = Vec::new();
    let rep = verify_lt_theorem(4)?;
    let ok = rep.all_match() && rep.pairs.len() == 10;
    details.push(format!(
        "r<=4: {}/{} pairs match",
        rep.pairs.iter().filter(|p| p.matches).count(),
        rep.pairs.len()
    ));
    // r = 5 is optional; a mismatch there still fails the criterion
    let start = Instant::now();
    let rep5 = verify_lt_theorem(5)?;
    let ok5 = rep5.all_match();
    details.push(format!(
        "r=5: {}/{} pairs match in {:.1}s",
        rep5.pairs.iter().filter(|p| p.matches).count(),
        rep5.pairs.len(),
        start.elapsed().as_secs_f64()
    ));
    Ok((ok && ok5, details.join("; ")))
}

fn heights() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for r in 1..=7 {
        for s in 0..=r {
            let rec = height_check(r, s);
            checked += 1;
            if !rec.holds() {
                failures.push(format!(
                    "(r={r}, s={s}): max {} vs {}",
                    rec.max_height, rec.expected
                ));
            }
        }
    }
    Ok((
        failures.is_empty(),
        format!("{checked} (r, s) pairs; failures: {failures:?}"),
    ))
}

fn harish_chandra() -> Outcome {
    let n = 4;
    let mut ok = true;
    let mut details = Vec::new();
    for r in 1..=4 {
        let z = z_poly(n, r)?;
        let product = hc_product_formula(n, r)?;
        let table = derive_constant_table(n, r)?;
        let mut level_ok = true;
        for s in 0..=r {
            let hz = hc_project(&z.coeffs[s], r)?
                .to_k_laurent()
                .ok_or("hc image is not K-only")?;
            level_ok &= hz == product[s];
            let hd = hc_project(&d_gen(n, r, s)?.value, r)?
                .to_k_laurent()
                .ok_or("hc image is not K-only")?;
            level_ok &= hd == hc_closed_form(n, r, s, &table)?;
        }
        let jac = jacobian_witness(n, r)?;
        level_ok &= !jac.is_zero();
        ok &= level_ok;
        details.push(format!(
            "r={r}: {}",
            if level_ok { "ok" } else { "mismatch" }
        ));
    }
    Ok((ok, details.join("; ")))
}

fn galois_embedding() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for n in [2, 3] {
        let rep = embed_check(n, PhiForm::Balanced, true)?;
        ok &= rep.all_pass();
        details.push(format!(
            "N={n}: {} relations, {} invariance, {} conjugation, {} gamma checks, {}",
            rep.relations.len(),
            rep.invariance.len(),
            rep.conjugation.len(),
            rep.gamma.len(),
            if rep.all_pass() {
                "all pass"
            } else {
                "failures"
            }
        ));
    }
    Ok((ok, details.join("; ")))
}

fn stabilizers() -> Outcome {
    let mut total = 0;
    let mut trivial = 0;
    for n in [2, 3] {
        for p in sample_points(n, 100, SEED + n as u64) {
            total += 1;
            if stabilizer_m(n, &p)?.is_trivial() {
                trivial += 1;
            }
        }
    }
    Ok((
        total >= 100 && trivial == total,
        format!("{trivial}/{total} trivial"),
    ))
}

fn maximal_commutativity() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for d in [1, 2] {
        let cert = maxcomm_certificate(d)?;
        ok &= cert.holds;
        details.push(format!(
            "D={d}: span {}, kernel {}, gamma {}",
            cert.span_dim, cert.kernel_dim, cert.gamma_dim
        ));
    }
    Ok((ok, details.join("; ")))
}

fn gl2_fibers() -> Outcome {
    let samples = sample_characters(24, SEED)?;
    let mut problems = Vec::new();
    let mut modules_checked = 0;
    for (i, s) in samples.iter().enumerate() {
        let rep = fiber_gl2(&s.character)?;
        if !(1..=2).contains(&rep.count) {
            problems.push(format!("#{i}: count {}", rep.count));
        }
        if s.kind == CharacterKind::Generic && rep.count != 1 {
            problems.push(format!("#{i}: generic count {}", rep.count));
        }
        if rep.breaks != s.planted_breaks {
            problems.push(format!(
                "#{i}: breaks {:?} vs planted {:?}",
                rep.breaks, s.planted_breaks
            ));
        }
        for m in &rep.orbit_modules {
            let check = module_action_check(&s.character, m, 5)?;
            modules_checked += 1;
            let anchored = m.support_window.contains(0);
            let good = check.relations_ok
                && check.gamma_eigen_ok
                && check.max_weight_dim <= 2
                && check.contains_character == anchored;
            if !good {
                problems.push(format!("#{i}: module {:?}: {:?}", m.kind, check.failures));
            }
        }
    }
    Ok((
        problems.is_empty() && samples.len() >= 20,
        format!(
            "{} characters, {modules_checked} modules; problems: {problems:?}",
            samples.len()
        ),
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("PBW engine soundness", engine),
        (
            "commutativity of the Gelfand-Tsetlin subalgebra",
            commutativity,
        ),
        ("leading terms of d_rs", leading_terms),
        ("heights and derangements", heights),
        ("Harish-Chandra images and Jacobian witness", harish_chandra),
        ("Galois embedding", galois_embedding),
        ("stabilizer triviality", stabilizers),
        ("maximal commutativity certificate", maximal_commutativity),
        ("gl_2 fibers and weight modules", gl2_fibers),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f));
        let (pass, detail) = match outcome {
            Ok(Ok(r)) => r,
            Ok(Err(e)) => (false, format!("error: {e}")),
            Err(_) => (false, "panicked".to_string()),
        };
        all &= pass;
        println!(
            "{} {}. {name} ({:.1}s): {detail}",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
