//! Exit criteria, one test each. Every test prints a single
//! `criterion N name: PASS|FAIL (...)` line and asserts exact equality.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use cbs_core::classify::{classify, domain_overlap};
use cbs_core::crystal::{flotw_set, kleshchev_set, uglov_set};
use cbs_core::multicharge::{alpha_bound_detail, fractional_margin, Separation};
use cbs_core::symbol::{b_sequence, compare_llm, shifted_symbol};
use cbs_core::verify::{run, Suite, VerifyConfig};
use cbs_core::{Dominance, Exec, Multicharge, Multipartition, Perm, Rational, WeightSequence};

fn mp(s: &str) -> Multipartition {
    s.parse().unwrap()
}

fn mc(s: &str) -> Multicharge {
    s.parse().unwrap()
}

fn ws(s: &str) -> WeightSequence {
    s.parse().unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Runs `body`, prints the criterion line, then fails on a wrong result or
/// a blown time budget.
fn criterion(id: u32, name: &str, budget: Duration, body: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (ok, detail) = match &outcome {
        Ok(d) if elapsed <= budget => (true, d.clone()),
        Ok(d) => (false, format!("{d}; over budget {budget:?}")),
        Err(d) => (false, d.clone()),
    };
    // straight to the handle so the line survives libtest's capture
    let _ = writeln!(
        std::io::stderr(),
        "criterion {id} {name}: {} ({detail}; {elapsed:.2?})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {id} {name}: {detail}");
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn suite(s: Suite, max_n: usize, max_l: usize, e_list: &[i64]) -> Result<String, String> {
    let cfg = VerifyConfig { max_n, max_l, e_list: e_list.to_vec(), exec: Exec::default() };
    let report = run(s, &cfg).map_err(|e| e.to_string())?;
    if report.passed() && report.checks > 0 {
        Ok(format!("{} checks, {} skipped, 0 counterexamples", report.checks, report.skipped))
    } else {
        Err(report.to_string())
    }
}

#[test]
fn c01_symbol_golden() {
    criterion(1, "symbol-golden", Duration::from_millis(1), || {
        let sym = shifted_symbol(&mp("1.1|-|2"), &ws("1/2,2,-1"), 3).map_err(|e| e.to_string())?;
        let rows: Vec<Vec<Rational>> = sym.rows().to_vec();
        expect(
            "rows",
            rows,
            vec![
                vec![q(1, 2), q(5, 2), q(7, 2)],
                vec![q(0, 1), q(1, 1), q(2, 1), q(3, 1), q(4, 1)],
                vec![q(0, 1), q(3, 1)],
            ],
        )?;
        expect("display", sym.to_string(), "0 3\n0 1 2 3 4\n1/2 5/2 7/2".to_string())?;
        Ok("3 rows".into())
    });
}

#[test]
fn c02_flotw_golden() {
    criterion(2, "flotw-golden", Duration::from_millis(10), || {
        let got = flotw_set(&mc("0,0,2"), 4, 3).map_err(|e| e.to_string())?;
        let want: BTreeSet<Multipartition> = [
            "3|-|-", "2|1|-", "1|1|1", "1.1|1|-", "2.1|-|-", "2|-|1", "1|-|2", "1.1|-|1", "1|-|1.1", "-|-|2.1",
            "-|-|3",
        ]
        .iter()
        .map(|s| mp(s))
        .collect();
        expect("set", &got, &want)?;
        Ok(format!("{} multipartitions", got.len()))
    });
}

#[test]
fn c03_lemma_vectors() {
    criterion(3, "lemma-vectors", Duration::from_millis(10), || {
        let m = ws("10/3,7,5");
        let lam = mp("4.1|4.4.3.2.2.2.1|4.4.4.2.1");
        let mu = mp("4.2|4.3.2.2.2.2.2|5.4.4.1.1");
        expect("ranks", (lam.rank(), mu.rank()), (38, 38))?;
        let t = q(1, 3);
        let ints = |v: &[i64]| v.iter().map(|&x| Rational::from_integer(x)).collect::<Vec<_>>();
        let thirds = |v: Vec<Rational>, at: &[usize]| {
            let mut v = v;
            for &i in at {
                v[i] += t;
            }
            v
        };
        let want_lam = thirds(ints(&[11, 10, 9, 8, 8, 7, 7, 6, 5, 4, 4, 3, 2, 2, 1, 0, 0, 0]), &[5, 11, 14, 15]);
        let want_mu = thirds(ints(&[11, 10, 9, 8, 7, 7, 7, 6, 5, 4, 4, 3, 3, 2, 1, 0, 0, 0]), &[4, 9, 14, 15]);
        expect("b(λ)", b_sequence(&lam, &m, 1).map_err(|e| e.to_string())?, want_lam)?;
        expect("b(μ)", b_sequence(&mu, &m, 1).map_err(|e| e.to_string())?, want_mu)?;
        expect("verdict", compare_llm(&lam, &mu, &m).map_err(|e| e.to_string())?, Dominance::Less)?;
        let bound = alpha_bound_detail(&lam, &mu, &m).map_err(|e| e.to_string())?;
        expect("separation", bound.separation, Separation::FirstDifference { index: 5, gap: q(2, 3) })?;
        expect("β", fractional_margin(&m), q(1, 3))?;
        Ok("p = 5, δ = 2/3".into())
    });
}

#[test]
fn c04_classification_goldens() {
    let budget = Duration::from_secs(1);
    criterion(4, "classification-regular", budget, || {
        let (r, s) = (mc("1,0"), mc("1,0"));
        for n in 0..=4 {
            let c = classify(&ws("1,-1"), &r, 4, n).map_err(|e| e.to_string())?;
            expect("regular", (c.regular, c.singular), (true, false))?;
            expect("adapted charge", &c.adapted_charge, &s)?;
            expect("σ", c.adapted_permutation.clone(), Some(Perm::identity(2)))?;
            expect("basic set", c.basic_set, Some(uglov_set(&s, 4, n).map_err(|e| e.to_string())?))?;
        }
        Ok("s = (1,0), σ = id".into())
    });
    criterion(4, "classification-singular", budget, || {
        let c = classify(&ws("0,-1"), &mc("1,0"), 3, 4).map_err(|e| e.to_string())?;
        expect("class", c.class_name(), "singular")?;
        expect("hyperplanes", c.hyperplanes.clone(), vec![(1, 2)])?;
        expect("basic set", c.basic_set.is_none(), true)?;
        Ok("no basic set".into())
    });
    criterion(4, "classification-asymptotic", budget, || {
        let c = classify(&ws("5,0"), &mc("5,0"), 3, 2).map_err(|e| e.to_string())?;
        expect("class", c.class_name(), "asymptotic")?;
        expect("π", c.reordering_permutation.clone(), Some(Perm::identity(2)))?;
        let k = kleshchev_set(&mc("5,0"), &Perm::identity(2), 3, 2).map_err(|e| e.to_string())?;
        expect("basic set", c.basic_set, Some(k))?;
        Ok("π = id".into())
    });
}

#[test]
fn c05_domain_overlap() {
    criterion(5, "domain-overlap", Duration::from_secs(1), || {
        let rep = domain_overlap(&mc("1,0"), &mc("0,1"), &ws("1,-1"), 4, 4).map_err(|e| e.to_string())?;
        expect("domains", (rep.in_domain_r, rep.in_domain_s), (true, true))?;
        for (n, same) in &rep.agreement {
            if *n >= 2 && *same {
                return Err(format!("Φ agree at n = {n}"));
            }
        }
        Ok("Φ_s(n) ≠ Φ_r(n) for n = 2, 3, 4".into())
    });
}

#[test]
fn c06_stabilization_bounds() {
    criterion(6, "stabilization-bounds", Duration::from_secs(120), || {
        suite(Suite::StabilizationBounds, 4, 2, &[2, 3])
    });
}

#[test]
fn c07_rotation_isomorphism() {
    criterion(7, "rotation-isomorphism", Duration::from_secs(60), || {
        suite(Suite::RotationIsomorphism, 3, 3, &[2, 3])
    });
}

// Known red: the stated bound admits counterexamples; see
// `perturbation-certified` for the corrected bound.
#[test]
fn c08_perturbation_lemma() {
    criterion(8, "perturbation-lemma", Duration::from_secs(300), || suite(Suite::PerturbationLemma, 3, 3, &[]));
}

#[test]
fn c09_a_compatibility() {
    criterion(9, "a-compatibility", Duration::from_secs(60), || suite(Suite::ACompatibility, 4, 2, &[]));
}

#[test]
fn c10_flotw_uglov() {
    criterion(10, "flotw-uglov", Duration::from_secs(120), || suite(Suite::FlotwUglov, 4, 3, &[2, 3, 4]));
}
