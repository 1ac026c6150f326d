//! Exhaustive property suites over small ranks, levels and moduli.
//!
//! Every suite enumerates its finite search space, counts the individual
//! checks it performs and records a readable witness for each failure.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::classify::classify;
use crate::crystal::{
    crystal_generate, flotw_set, kleshchev_set, uglov_set, CrystalSpec,
};
use crate::dominance::{dominance_compare, Dominance};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::multicharge::{
    adapted_multicharge, alpha_bound, alpha_bound_certified, hyperplane_witnesses, in_domain, in_p, offsets, perturb, Multicharge,
    Perturbation,
};
use crate::multipartition::{enumerate_multipartitions, enumerate_partitions, Multipartition};
use crate::perm::Perm;
use crate::symbol::{a_invariant, b_sequence, compare_llm, compare_llm_at, minimal_symbol_size, WeightSequence};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    DominanceOrder,
    SymbolSizeIndependence,
    ACompatibility,
    PerturbationLemma,
    PerturbationCertified,
    FlotwUglov,
    StabilizationBounds,
    RotationIsomorphism,
    OverlapCoherence,
    SingularDisagreement,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::DominanceOrder,
        Suite::SymbolSizeIndependence,
        Suite::ACompatibility,
        Suite::PerturbationLemma,
        Suite::PerturbationCertified,
        Suite::FlotwUglov,
        Suite::StabilizationBounds,
        Suite::RotationIsomorphism,
        Suite::OverlapCoherence,
        Suite::SingularDisagreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::DominanceOrder => "dominance-order",
            Suite::SymbolSizeIndependence => "symbol-size-independence",
            Suite::ACompatibility => "a-compatibility",
            Suite::PerturbationLemma => "perturbation-lemma",
            Suite::PerturbationCertified => "perturbation-certified",
            Suite::FlotwUglov => "flotw-uglov",
            Suite::StabilizationBounds => "stabilization-bounds",
            Suite::RotationIsomorphism => "rotation-isomorphism",
            Suite::OverlapCoherence => "overlap-coherence",
            Suite::SingularDisagreement => "singular-disagreement",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Scale of a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub max_l: usize,
    pub e_list: Vec<i64>,
    pub exec: Exec,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: 3, max_l: 2, e_list: vec![2, 3], exec: Exec::default() }
    }
}

/// Witnesses kept per report; the failure count is always exact.
pub const MAX_WITNESSES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub checks: u64,
    /// Cases outside the hypotheses of the property (reported, not failed).
    pub skipped: u64,
    pub failures: u64,
    pub witnesses: Vec<String>,
}

impl Report {
    fn new(suite: Suite) -> Self {
        Report { suite, checks: 0, skipped: 0, failures: 0, witnesses: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(witness());
        }
    }

    fn fail(&mut self, witness: String) {
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.skipped += other.skipped;
        self.failures += other.failures;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({} checks, {} skipped, {} counterexamples)",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" },
            self.checks,
            self.skipped,
            self.failures
        )?;
        for w in &self.witnesses {
            write!(f, "\n  counterexample: {w}")?;
        }
        Ok(())
    }
}

/// The 12-point coordinate grid for weight sequences: integers, halves and
/// thirds and a quarter, on both sides of zero.
pub fn weight_grid() -> Vec<Rational> {
    [(-2, 1), (-3, 2), (-1, 1), (-1, 3), (0, 1), (1, 4), (1, 2), (2, 3), (1, 1), (4, 3), (5, 2), (3, 1)]
        .into_iter()
        .map(|(p, q)| Rational::new(p, q))
        .collect()
}

/// All of `G^l` for the coordinate grid `G`.
pub fn weight_sequences(l: usize) -> Vec<WeightSequence> {
    let grid = weight_grid();
    let mut out: Vec<Vec<Rational>> = vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|v| {
                grid.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(WeightSequence::new).collect()
}

/// The fundamental domain `1 ≤ r_1 ≤ … ≤ r_l ≤ e`.
pub fn fundamental_charges(l: usize, e: i64) -> Vec<Multicharge> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|v| {
                let lo = v.last().copied().unwrap_or(1);
                (lo..=e).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Multicharge::new).collect()
}

/// Three fixed charges per level for the rotation check.
pub fn sample_charges(l: usize) -> Vec<Multicharge> {
    let mixed = [3, -1, 2, 0, 5, -4];
    vec![
        Multicharge::new(vec![0; l]),
        Multicharge::new((0..l as i64).collect()),
        Multicharge::new(mixed[..l].to_vec()),
    ]
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Result<Report> {
    match suite {
        Suite::DominanceOrder => dominance_order(cfg),
        Suite::SymbolSizeIndependence => symbol_size_independence(cfg),
        Suite::ACompatibility => a_compatibility(cfg),
        Suite::PerturbationLemma => perturbation_lemma(cfg, false),
        Suite::PerturbationCertified => perturbation_lemma(cfg, true),
        Suite::FlotwUglov => flotw_uglov(cfg),
        Suite::StabilizationBounds => stabilization_bounds(cfg),
        Suite::RotationIsomorphism => rotation_isomorphism(cfg),
        Suite::OverlapCoherence => overlap_coherence(cfg),
        Suite::SingularDisagreement => singular_disagreement(cfg),
    }
}

/// Runs a per-weight-sequence job over `G^l` for every `l ≤ max_l`, in
/// parallel per `cfg.exec`, and folds the partial reports.
fn over_grid<F>(suite: Suite, cfg: &VerifyConfig, job: F) -> Result<Report>
where
    F: Fn(usize, &WeightSequence) -> Result<Report> + Sync + Send,
{
    let mut report = Report::new(suite);
    for l in 1..=cfg.max_l {
        let ms = weight_sequences(l);
        for part in cfg.exec.map(&ms, |m| job(l, m)) {
            report.merge(part?);
        }
    }
    Ok(report)
}

fn to_rationals(p: &[usize]) -> Vec<Rational> {
    p.iter().map(|&x| Rational::from_integer(x as i64)).collect()
}

/// Dominance on partitions is a partial order, and so is `≪_m` on
/// multipartitions of equal rank.
fn dominance_order(cfg: &VerifyConfig) -> Result<Report> {
    let mut report = Report::new(Suite::DominanceOrder);
    for n in 0..=cfg.max_n {
        let ps: Vec<Vec<Rational>> = enumerate_partitions(n).iter().map(|p| to_rationals(p.parts())).collect();
        let k = ps.len();
        let mut table = vec![vec![Dominance::Equal; k]; k];
        for a in 0..k {
            for b in 0..k {
                table[a][b] = dominance_compare(&ps[a], &ps[b])?;
            }
        }
        partial_order_checks(&mut report, &table, |a| format!("partitions of {n}, index {a}"));
    }
    let part = over_grid(Suite::DominanceOrder, cfg, |l, m| {
        let mut report = Report::new(Suite::DominanceOrder);
        for n in 0..=cfg.max_n.min(3) {
            let lams = enumerate_multipartitions(l, n);
            let k = lams.len();
            let mut table = vec![vec![Dominance::Equal; k]; k];
            for a in 0..k {
                for b in 0..k {
                    table[a][b] = compare_llm(&lams[a], &lams[b], m)?;
                }
            }
            partial_order_checks(&mut report, &table, |a| format!("m = ({m}), λ = {}", lams[a]));
        }
        Ok(report)
    })?;
    report.merge(part);
    Ok(report)
}

/// Reflexivity, antisymmetry and transitivity of a verdict table, where
/// `Less` means "strictly below".
fn partial_order_checks(report: &mut Report, t: &[Vec<Dominance>], label: impl Fn(usize) -> String) {
    let k = t.len();
    for a in 0..k {
        report.check(t[a][a] == Dominance::Equal, || format!("not reflexive at {}", label(a)));
        for b in 0..k {
            report.check(t[a][b] == t[b][a].reverse(), || {
                format!("verdicts not mirrored between {} and {}", label(a), label(b))
            });
            if a != b {
                report.check(t[a][b] != Dominance::Equal || t[a][b] == t[b][a], || {
                    format!("Equal between distinct {} and {}", label(a), label(b))
                });
            }
            if t[a][b] != Dominance::Less {
                continue;
            }
            for c in 0..k {
                if t[b][c] == Dominance::Less {
                    report.check(t[a][c] == Dominance::Less, || {
                        format!("not transitive: {} < {} < {}", label(a), label(b), label(c))
                    });
                }
            }
        }
    }
}

/// `compare_llm` and the `a`-invariant do not depend on the symbol size.
fn symbol_size_independence(cfg: &VerifyConfig) -> Result<Report> {
    over_grid(Suite::SymbolSizeIndependence, cfg, |l, m| {
        let mut report = Report::new(Suite::SymbolSizeIndependence);
        let one = Rational::from_integer(1);
        for n in 0..=cfg.max_n {
            let lams = enumerate_multipartitions(l, n);
            for (a, lam) in lams.iter().enumerate() {
                let p = minimal_symbol_size(lam, m);
                let base = a_invariant(lam, m, p, one)?;
                for extra in 1..=2 {
                    let other = a_invariant(lam, m, p + extra, one)?;
                    report.check(other == base, || format!("a({lam}) at m = ({m}) changes at size {}", p + extra));
                }
                for mu in &lams[a + 1..] {
                    let p = minimal_symbol_size(lam, m).max(minimal_symbol_size(mu, m));
                    let verdict = compare_llm_at(lam, mu, m, p)?;
                    for extra in 1..=2 {
                        let v = compare_llm_at(lam, mu, m, p + extra)?;
                        report.check(v == verdict, || {
                            format!("{lam} vs {mu} at m = ({m}): {verdict:?} at size {p}, {v:?} at size {}", p + extra)
                        });
                    }
                }
            }
        }
        Ok(report)
    })
}

/// `λ ≪_m μ`, `λ ≠ μ` implies `a(λ) < a(μ)`.
fn a_compatibility(cfg: &VerifyConfig) -> Result<Report> {
    over_grid(Suite::ACompatibility, cfg, |l, m| {
        let mut report = Report::new(Suite::ACompatibility);
        let one = Rational::from_integer(1);
        for n in 0..=cfg.max_n {
            let lams = enumerate_multipartitions(l, n);
            let size = lams.iter().map(|x| minimal_symbol_size(x, m)).max().unwrap_or(1);
            let bs: Vec<Vec<Rational>> = lams.iter().map(|x| b_sequence(x, m, size)).collect::<Result<_>>()?;
            let a: Vec<Rational> = lams.iter().map(|x| a_invariant(x, m, size, one)).collect::<Result<_>>()?;
            for i in 0..lams.len() {
                for j in 0..lams.len() {
                    if i != j && dominance_compare(&bs[i], &bs[j])? == Dominance::Greater {
                        report.check(a[i] < a[j], || {
                            format!("{} ≪ {} at m = ({m}) but a = {} vs {}", lams[i], lams[j], a[i], a[j])
                        });
                    }
                }
            }
        }
        Ok(report)
    })
}

fn subsets(l: usize) -> Vec<Vec<usize>> {
    (0u32..1 << l).map(|bits| (1..=l).filter(|i| bits >> (i - 1) & 1 == 1).collect()).collect()
}

/// With `ε = α_{λ,μ}/2` and every `I`, the perturbation `m^[ε,I]` never
/// reverses a strict relation and never makes an incomparable pair comparable.
/// Distinct pairs with identical b-sequences have no `α` and are skipped.
///
/// `certified` swaps in [`alpha_bound_certified`] and additionally ranges
/// over every coefficient permutation `ρ`.
fn perturbation_lemma(cfg: &VerifyConfig, certified: bool) -> Result<Report> {
    let suite = if certified { Suite::PerturbationCertified } else { Suite::PerturbationLemma };
    over_grid(suite, cfg, |l, m| {
        let mut report = Report::new(suite);
        let two = Rational::from_integer(2);
        let sets = subsets(l);
        let rhos = if certified { Perm::all(l) } else { vec![Perm::identity(l)] };
        for n in 1..=cfg.max_n {
            let lams = enumerate_multipartitions(l, n);
            for (a, lam) in lams.iter().enumerate() {
                for mu in &lams[a + 1..] {
                    let verdict = compare_llm(lam, mu, m)?;
                    let bound = if certified { alpha_bound_certified(lam, mu, m) } else { alpha_bound(lam, mu, m) };
                    let alpha = match bound {
                        Ok(x) => x,
                        Err(Error::EqualBSequences) => {
                            report.skipped += 1;
                            continue;
                        }
                        Err(err) => return Err(err),
                    };
                    let eps = alpha / two;
                    for set in &sets {
                        for rho in &rhos {
                            let pert = Perturbation::new(eps, set.clone(), rho.clone())?;
                            let mp = perturb(m, &pert);
                            let v = compare_llm(lam, mu, &mp)?;
                            let ok = match verdict {
                                Dominance::Less => v != Dominance::Greater,
                                Dominance::Greater => v != Dominance::Less,
                                _ => v == Dominance::Incomparable,
                            };
                            report.check(ok, || {
                                format!(
                                    "λ = {lam}, μ = {mu}, m = ({m}), α = {alpha}, I = {set:?}, ρ = {rho}: \
                                     {verdict:?} became {v:?} at m' = ({mp})"
                                )
                            });
                        }
                    }
                }
            }
        }
        Ok(report)
    })
}

/// `Ψ_r(n) = Φ_r(n)` on the fundamental domain.
fn flotw_uglov(cfg: &VerifyConfig) -> Result<Report> {
    let mut report = Report::new(Suite::FlotwUglov);
    for l in 1..=cfg.max_l {
        for &e in &cfg.e_list {
            let charges = fundamental_charges(l, e);
            let parts = cfg.exec.map(&charges, |r| -> Result<Report> {
                let mut report = Report::new(Suite::FlotwUglov);
                let graph = crystal_generate(&CrystalSpec::uglov(r, e)?, cfg.max_n, Exec::Sequential);
                for n in 0..=cfg.max_n {
                    let phi: BTreeSet<_> = graph.vertices(n).iter().cloned().collect();
                    let psi = flotw_set(r, e, n)?;
                    report.check(phi == psi, || set_witness(&format!("r = {r}, e = {e}, n = {n}"), &psi, &phi));
                }
                Ok(report)
            });
            for p in parts {
                report.merge(p?);
            }
        }
    }
    Ok(report)
}

fn set_witness(head: &str, left: &BTreeSet<Multipartition>, right: &BTreeSet<Multipartition>) -> String {
    let only_left: Vec<String> = left.difference(right).map(|x| x.to_string()).collect();
    let only_right: Vec<String> = right.difference(left).map(|x| x.to_string()).collect();
    format!("{head}: only in first [{}], only in second [{}]", only_left.join(" "), only_right.join(" "))
}

/// Uglov crystals agree with (π-twisted) Kleshchev crystals at every rank
/// `m ≤ n` once `s` meets the separation bounds: `s_i - s_j ≥ n-e+1` for
/// `i < j` (plain order), and `π(i) < π(j) ⇒ s_i - s_j ≥ n+1` (every `π`).
///
/// Translating `s` by `(e, …, e)` changes nothing, so `s_1` ranges over
/// `0..e` and the other coordinates over a window of width `2(n+1+2e)`
/// around it, which covers every residue pattern beyond the bound.
fn stabilization_bounds(cfg: &VerifyConfig) -> Result<Report> {
    let mut report = Report::new(Suite::StabilizationBounds);
    for l in 2..=cfg.max_l.max(2) {
        for &e in &cfg.e_list {
            for n in 0..=cfg.max_n {
                let width = (n as i64) + 1 + 2 * e;
                let mut charges: Vec<Vec<i64>> = (0..e).map(|s1| vec![s1]).collect();
                for _ in 1..l {
                    charges = charges
                        .into_iter()
                        .flat_map(|v| {
                            let s1 = v[0];
                            (s1 - width..=s1 + width).map(move |x| {
                                let mut w = v.clone();
                                w.push(x);
                                w
                            })
                        })
                        .collect();
                }
                let mut cases: Vec<(Multicharge, Perm)> = Vec::new();
                for c in charges {
                    let s = Multicharge::new(c);
                    let v = s.values();
                    let plain = (0..l).all(|i| (i + 1..l).all(|j| v[i] - v[j] >= n as i64 - e + 1));
                    if plain {
                        cases.push((s.clone(), Perm::identity(l)));
                    }
                    for pi in Perm::all(l) {
                        let ok = (1..=l).all(|i| {
                            (1..=l).all(|j| pi.image(i) >= pi.image(j) || v[i - 1] - v[j - 1] >= n as i64 + 1)
                        });
                        if ok && !(plain && pi.is_identity()) {
                            cases.push((s.clone(), pi));
                        }
                    }
                }
                let parts = cfg.exec.map(&cases, |(s, pi)| -> Result<Report> {
                    let mut report = Report::new(Suite::StabilizationBounds);
                    let ug = crystal_generate(&CrystalSpec::uglov(s, e)?, n, Exec::Sequential);
                    let kl = crystal_generate(&CrystalSpec::kleshchev(s, pi, e)?, n, Exec::Sequential);
                    for k in 0..=n {
                        report.check(ug.vertices(k) == kl.vertices(k), || {
                            let a: BTreeSet<_> = ug.vertices(k).iter().cloned().collect();
                            let b: BTreeSet<_> = kl.vertices(k).iter().cloned().collect();
                            set_witness(&format!("s = {s}, π = {pi}, e = {e}, bound rank {n}, rank {k}"), &a, &b)
                        });
                    }
                    Ok(report)
                });
                for p in parts {
                    report.merge(p?);
                }
            }
        }
    }
    Ok(report)
}

/// `Φ_{(s_1,…,s_{l-1},s_l+e)}(n) = {λ^{σ₀} : λ ∈ Φ_{(s_l,s_1,…,s_{l-1})}(n)}`,
/// `σ₀ = (1 2 … l)`.
fn rotation_isomorphism(cfg: &VerifyConfig) -> Result<Report> {
    let mut report = Report::new(Suite::RotationIsomorphism);
    for l in 2..=cfg.max_l.max(2) {
        let sigma0 = Perm::cycle(l);
        for &e in &cfg.e_list {
            for s in sample_charges(l) {
                let v = s.values();
                let mut shifted = v.to_vec();
                shifted[l - 1] += e;
                let shifted = Multicharge::new(shifted);
                let mut rotated = vec![v[l - 1]];
                rotated.extend_from_slice(&v[..l - 1]);
                let rotated = Multicharge::new(rotated);
                let lhs = crystal_generate(&CrystalSpec::uglov(&shifted, e)?, cfg.max_n, cfg.exec);
                let rhs = crystal_generate(&CrystalSpec::uglov(&rotated, e)?, cfg.max_n, cfg.exec);
                for n in 0..=cfg.max_n {
                    let a: BTreeSet<_> = lhs.vertices(n).iter().cloned().collect();
                    let b: BTreeSet<_> = rhs.vertices(n).iter().map(|x| x.twist(&sigma0)).collect();
                    report.check(a == b, || set_witness(&format!("s = {s}, e = {e}, n = {n}"), &a, &b));
                }
            }
        }
    }
    Ok(report)
}

/// For every grid `m` and fundamental-domain charge `r`:
/// - regular and asymptotic at once ⇒ `σ(Φ_{s^{σ⁻¹}}(n)) = 𝒦^π_{𝒞_e}(n)`;
/// - regular and `m ∈ 𝒟_ŝ` for some `ŝ ≡ r (mod e)` ⇒ the basic set is `Φ_ŝ(n)`;
/// - a basic set is present exactly when `m` is not singular, and its size
///   is `|Φ_r(n)|` regardless of `m`.
fn overlap_coherence(cfg: &VerifyConfig) -> Result<Report> {
    let mut report = Report::new(Suite::OverlapCoherence);
    for l in 1..=cfg.max_l {
        let ms = weight_sequences(l);
        for &e in &cfg.e_list {
            for r in fundamental_charges(l, e) {
                for n in 0..=cfg.max_n {
                    let size = uglov_set(&r, e, n)?.len();
                    let parts = cfg.exec.map(&ms, |m| overlap_case(m, &r, e, n, size));
                    for p in parts {
                        report.merge(p?);
                    }
                }
            }
        }
    }
    Ok(report)
}

fn overlap_case(m: &WeightSequence, r: &Multicharge, e: i64, n: usize, size: usize) -> Result<Report> {
    let mut report = Report::new(Suite::OverlapCoherence);
    let c = classify(m, r, e, n)?;
    let head = || format!("m = ({m}), r = {r}, e = {e}, n = {n}, class {}", c.class_name());
    report.check(c.singular == c.basic_set.is_none(), || format!("{}: basic set presence", head()));
    report.check(c.singular == (!c.regular && !c.asymptotic), || format!("{}: trichotomy", head()));
    if let Some(set) = &c.basic_set {
        report.check(set.len() == size, || format!("{}: {} elements, expected {size}", head(), set.len()));
    }
    if c.regular && c.asymptotic {
        let pi = c.reordering_permutation.as_ref().expect("asymptotic charges have a reordering");
        let k = kleshchev_set(&c.adapted_charge, pi, e, n)?;
        let set = c.basic_set.as_ref().expect("regular");
        report.check(*set == k, || set_witness(&head(), set, &k));
    }
    if c.regular {
        let l = r.level();
        let mut shifts: Vec<Vec<i64>> = vec![Vec::new()];
        for _ in 0..l {
            shifts = shifts
                .into_iter()
                .flat_map(|v| {
                    (-1..=1).map(move |k| {
                        let mut w = v.clone();
                        w.push(k);
                        w
                    })
                })
                .collect();
        }
        let s = &c.adapted_charge;
        for k in shifts {
            let hat = Multicharge::new(s.values().iter().zip(&k).map(|(x, d)| x + d * e).collect());
            if in_domain(m, &hat, e)? {
                let phi = uglov_set(&hat, e, n)?;
                let set = c.basic_set.as_ref().expect("regular");
                report.check(*set == phi, || set_witness(&format!("{}, ŝ = {hat}", head()), set, &phi));
            }
        }
    }
    Ok(report)
}

/// A step small enough that every `m^[ε,I,ρ]` is regular with the same
/// adapted charge as `m`: below `1/(2l)` of the distance from each `v_i`
/// to the lower edge `-e/2` and of each non-zero `v_i - v_j` to `eℤ`.
pub fn regularizing_epsilon(m: &WeightSequence, s: &Multicharge, e: i64) -> Rational {
    let v = offsets(m, s);
    let eq = Rational::from_integer(e);
    let half = eq / Rational::from_integer(2);
    let mut gaps: Vec<Rational> = v.iter().map(|&x| x + half).collect();
    for i in 0..v.len() {
        for j in 0..v.len() {
            let d = v[i] - v[j];
            let r = d - (d / eq).floor() * eq;
            if !r.is_zero() {
                gaps.push(r);
            }
        }
    }
    let min = gaps.into_iter().filter(|g| *g > Rational::zero()).min().unwrap_or(Rational::from_integer(1));
    min / Rational::from_integer(2 * v.len() as i64)
}

/// For singular `m`, the basic sets at `m^[ε,I,id]` and `m^[ε,I,(ij)]` differ
/// for some witness pair `(i,j)`, with `I` the union of witness pairs.
/// Runs the cited example `(m, r, e, n) = ((0,-1), (1,0), 3, 4)` and then the
/// grid sweep over fundamental-domain charges.
fn singular_disagreement(cfg: &VerifyConfig) -> Result<Report> {
    let mut report = Report::new(Suite::SingularDisagreement);
    let example = WeightSequence::from_integers(&[0, -1]);
    report.merge(singular_case(&example, &Multicharge::new(vec![1, 0]), 3, 4, true)?);
    for l in 2..=cfg.max_l.max(2) {
        let ms = weight_sequences(l);
        for &e in &cfg.e_list {
            for r in fundamental_charges(l, e) {
                for n in 0..=cfg.max_n {
                    let parts = cfg.exec.map(&ms, |m| singular_case(m, &r, e, n, false));
                    for p in parts {
                        report.merge(p?);
                    }
                }
            }
        }
    }
    Ok(report)
}

fn singular_case(m: &WeightSequence, r: &Multicharge, e: i64, n: usize, required: bool) -> Result<Report> {
    let mut report = Report::new(Suite::SingularDisagreement);
    if !in_p(m, r, e)? {
        return Ok(report);
    }
    let c = classify(m, r, e, n)?;
    let head = format!("m = ({m}), r = {r}, e = {e}, n = {n}");
    if required {
        report.check(c.singular, || format!("{head}: expected singular, got {}", c.class_name()));
    }
    if !c.singular {
        return Ok(report);
    }
    let l = r.level();
    let s = adapted_multicharge(m, r, e)?;
    let eps = regularizing_epsilon(m, &s, e);
    let witnesses = hyperplane_witnesses(m, r, e)?;
    let set: Vec<usize> = witnesses.iter().flat_map(|&(i, j)| [i, j]).collect::<BTreeSet<_>>().into_iter().collect();
    let perturbed = |rho: Perm| -> Result<(WeightSequence, Option<BTreeSet<Multipartition>>)> {
        let mp = perturb(m, &Perturbation::new(eps, set.clone(), rho)?);
        let cp = classify(&mp, r, e, n)?;
        Ok((mp, cp.basic_set.filter(|_| cp.regular && cp.adapted_charge == s)))
    };
    let (m_id, base) = perturbed(Perm::identity(l))?;
    let Some(base) = base else {
        report.fail(format!("{head}: m' = ({m_id}) is not a regular perturbation with adapted charge {s}"));
        return Ok(report);
    };
    let mut differs = false;
    for &(i, j) in &witnesses {
        let (m_ij, other) = perturbed(Perm::transposition(l, i, j))?;
        let Some(other) = other else {
            report.fail(format!("{head}: m' = ({m_ij}) is not a regular perturbation with adapted charge {s}"));
            return Ok(report);
        };
        differs |= other != base;
    }
    report.check(differs, || format!("{head}: ε = {eps}, all witness transpositions give the same basic set"));
    Ok(report)
}
