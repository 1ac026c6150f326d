//! Multicharges, the extended affine symmetric group action on `ℤˡ`, the
//! hyperplane family `𝒫`, adapted charges and permutations, perturbations of
//! weight sequences and the explicit perturbation bound `α_{λ,μ}`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::dominance::Dominance;
use crate::error::{Error, Result};
use crate::multipartition::Multipartition;
use crate::perm::Perm;
use crate::symbol::{b_sequence, common_size, compare_llm, WeightSequence};
use crate::Rational;

pub(crate) fn check_modulus(e: i64) -> Result<()> {
    if e < 2 {
        return Err(Error::InvalidModulus(e));
    }
    Ok(())
}

/// An integer `l`-tuple `(r_1, …, r_l)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multicharge(Vec<i64>);

impl Multicharge {
    pub fn new(values: Vec<i64>) -> Self {
        assert!(!values.is_empty(), "a multicharge has at least one entry");
        Multicharge(values)
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// `r_c`, 1-based.
    pub fn get(&self, c: usize) -> i64 {
        self.0[c - 1]
    }

    /// `r^σ = (r_{σ(1)}, …, r_{σ(l)})`.
    pub fn twist(&self, sigma: &Perm) -> Multicharge {
        Multicharge(sigma.twist(&self.0))
    }

    /// Coordinates reduced into `0..e`.
    pub fn residues(&self, e: i64) -> Multicharge {
        Multicharge(self.0.iter().map(|r| r.rem_euclid(e)).collect())
    }

    pub fn has_ties(&self) -> bool {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.windows(2).any(|w| w[0] == w[1])
    }

    /// Membership in `𝒮_e^l`: `0 ≤ r_j - r_i < e` for all `i < j`.
    pub fn in_strip(&self, e: i64) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &ri)| self.0[i + 1..].iter().all(|&rj| rj - ri >= 0 && rj - ri < e))
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Multicharge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("`{x}` is not an integer in charge `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Multicharge::new(values))
    }
}

/// Generators of the extended affine symmetric group, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// `σ_i`, swapping coordinates `i` and `i+1`.
    Sigma(usize),
    /// `y_i`, adding `e` to coordinate `i`.
    Y(usize),
}

/// Applies the word `g_1 g_2 … g_k` to `r`; the rightmost generator acts first.
pub fn act(word: &[Generator], r: &Multicharge, e: i64) -> Result<Multicharge> {
    check_modulus(e)?;
    let l = r.level();
    let mut values = r.0.clone();
    for g in word.iter().rev() {
        match *g {
            Generator::Sigma(i) if i >= 1 && i < l => values.swap(i - 1, i),
            Generator::Y(i) if i >= 1 && i <= l => values[i - 1] += e,
            Generator::Sigma(index) | Generator::Y(index) => {
                return Err(Error::GeneratorOutOfRange { index, level: l })
            }
        }
    }
    Ok(Multicharge(values))
}

/// The orbit representative with `1 ≤ r_1 ≤ … ≤ r_l ≤ e`.
pub fn fundamental_rep(r: &Multicharge, e: i64) -> Result<Multicharge> {
    check_modulus(e)?;
    let mut v: Vec<i64> = r.0.iter().map(|x| (x - 1).rem_euclid(e) + 1).collect();
    v.sort_unstable();
    Ok(Multicharge(v))
}

/// `s ∈ 𝒞_e(r)`: coordinatewise congruent modulo `e`.
pub fn same_class_ce(r: &Multicharge, s: &Multicharge, e: i64) -> bool {
    r.level() == s.level() && r.residues(e) == s.residues(e)
}

/// `s ∈ 𝒞(r)`: congruent modulo `e` after permuting coordinates.
pub fn same_class_c(r: &Multicharge, s: &Multicharge, e: i64) -> bool {
    if r.level() != s.level() {
        return false;
    }
    let mut a = r.residues(e).0;
    let mut b = s.residues(e).0;
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

fn check_lengths(m: &WeightSequence, r: &Multicharge) -> Result<()> {
    if m.level() != r.level() {
        return Err(Error::LevelMismatch { expected: r.level(), found: m.level() });
    }
    Ok(())
}

fn divisible_by(x: Rational, e: i64) -> bool {
    x.is_integer() && x.to_integer().rem_euclid(e) == 0
}

/// `v = s - m`.
pub fn offsets(m: &WeightSequence, s: &Multicharge) -> Vec<Rational> {
    s.0.iter()
        .zip(m.values())
        .map(|(&si, &mi)| Rational::from_integer(si) - mi)
        .collect()
}

/// The index pairs `i < j` (1-based) with `(r_i - m_i) - (r_j - m_j) ∈ eℤ`.
/// `m ∈ 𝒫` iff the result is nonempty.
pub fn hyperplane_witnesses(m: &WeightSequence, r: &Multicharge, e: i64) -> Result<Vec<(usize, usize)>> {
    check_modulus(e)?;
    check_lengths(m, r)?;
    let v = offsets(m, r);
    let l = v.len();
    let mut out = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            if divisible_by(v[i] - v[j], e) {
                out.push((i + 1, j + 1));
            }
        }
    }
    Ok(out)
}

pub fn in_p(m: &WeightSequence, r: &Multicharge, e: i64) -> Result<bool> {
    Ok(!hyperplane_witnesses(m, r, e)?.is_empty())
}

/// The `s ≡ r (mod e)` with every `v_i = s_i - m_i` in `(-e/2, e/2]`.
///
/// The closed ball of radius `e/2` is made half-open; on the boundary the
/// convention is `v_i = +e/2`.
pub fn adapted_multicharge(m: &WeightSequence, r: &Multicharge, e: i64) -> Result<Multicharge> {
    check_modulus(e)?;
    check_lengths(m, r)?;
    let eq = Rational::from_integer(e);
    let half = eq / Rational::from_integer(2);
    let values = offsets(m, r)
        .into_iter()
        .zip(&r.0)
        .map(|(x, &ri)| {
            // smallest k with x + k e > -e/2
            let k = ((-half - x) / eq).floor().to_integer() + 1;
            ri + k * e
        })
        .collect();
    Ok(Multicharge(values))
}

/// `m ∈ 𝒟_s`: with `v = s - m`, `0 < v_j - v_i < e` for all `i < j`.
pub fn in_domain(m: &WeightSequence, s: &Multicharge, e: i64) -> Result<bool> {
    check_modulus(e)?;
    check_lengths(m, s)?;
    let v = offsets(m, s);
    let eq = Rational::from_integer(e);
    Ok(v.iter().enumerate().all(|(i, &vi)| {
        v[i + 1..].iter().all(|&vj| vj - vi > Rational::zero() && vj - vi < eq)
    }))
}

/// The `m`-adapted permutation `σ = τ⁻¹`, where `τ` is the unique permutation
/// with `0 < v_{τ(j)} - v_{τ(i)} < e` for `i < j`.
pub fn adapted_permutation(m: &WeightSequence, s: &Multicharge, e: i64) -> Result<Perm> {
    check_modulus(e)?;
    check_lengths(m, s)?;
    let v = offsets(m, s);
    let mut order: Vec<usize> = (0..v.len()).collect();
    order.sort_by(|&a, &b| v[a].cmp(&v[b]));
    let distinct = order.windows(2).all(|w| v[w[0]] < v[w[1]]);
    let spread_ok = v[order[v.len() - 1]] - v[order[0]] < Rational::from_integer(e);
    if !distinct || !spread_ok {
        return Err(Error::NoAdaptedPermutation);
    }
    let tau = Perm::from_one_line(&order.iter().map(|x| x + 1).collect::<Vec<_>>())?;
    Ok(tau.inverse())
}

/// The `π` with `π(i) < π(j) ⇒ s_i > s_j`; `None` when coordinates tie.
pub fn reordering_permutation(s: &Multicharge) -> Option<Perm> {
    if s.has_ties() {
        return None;
    }
    let images: Vec<usize> = s
        .0
        .iter()
        .map(|&si| 1 + s.0.iter().filter(|&&sj| sj > si).count())
        .collect();
    Perm::from_one_line(&images).ok()
}

/// The perturbation `m ↦ m^[ε,I,ρ]`: coordinate `i ∈ I` becomes `m_i + ρ(i)ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perturbation {
    pub epsilon: Rational,
    /// 1-based indices.
    pub indices: Vec<usize>,
    pub rho: Perm,
}

impl Perturbation {
    pub fn new(epsilon: Rational, indices: Vec<usize>, rho: Perm) -> Result<Self> {
        if epsilon <= Rational::zero() {
            return Err(Error::NonPositiveEpsilon);
        }
        if indices.iter().any(|&i| i == 0 || i > rho.len()) {
            return Err(Error::InvalidPermutation(rho.len()));
        }
        Ok(Perturbation { epsilon, indices, rho })
    }

    /// `ρ = id`.
    pub fn plain(epsilon: Rational, indices: Vec<usize>, l: usize) -> Result<Self> {
        Self::new(epsilon, indices, Perm::identity(l))
    }
}

pub fn perturb(m: &WeightSequence, pert: &Perturbation) -> WeightSequence {
    assert_eq!(m.level(), pert.rho.len(), "perturbation of the wrong level");
    let values = m
        .values()
        .iter()
        .enumerate()
        .map(|(k, &mk)| {
            let i = k + 1;
            if pert.indices.contains(&i) {
                mk + pert.epsilon * Rational::from_integer(pert.rho.image(i) as i64)
            } else {
                mk
            }
        })
        .collect();
    WeightSequence::new(values)
}

/// `β`: the least distance from a non-integral `m_i` to an integer, or 1
/// when every `m_i` is integral.
pub fn fractional_margin(m: &WeightSequence) -> Rational {
    m.values()
        .iter()
        .filter(|x| !x.is_integer())
        .map(|&x| {
            let f = x.fract();
            let f = if f < Rational::zero() { f + Rational::one() } else { f };
            f.min(Rational::one() - f)
        })
        .min()
        .unwrap_or_else(Rational::one)
}

/// Where two b-sequences separate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Separation {
    /// The pair is strictly comparable; the lower of the two in `≪_m` has
    /// the strictly larger b-entry at `index` (1-based), by `gap`.
    FirstDifference { index: usize, gap: Rational },
    /// The pair is incomparable. At `first_index` the prefix sums of `λ`
    /// first exceed those of `μ`, at `second_index` they first fall below.
    Crossing {
        first_index: usize,
        first_gap: Rational,
        second_index: usize,
        second_gap: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaBound {
    pub value: Rational,
    pub beta: Rational,
    pub separation: Separation,
}

/// The explicit bound `α_{λ,μ}` below which perturbing `m` cannot reverse
/// `≪_m` between `λ` and `μ` nor make an incomparable pair comparable.
///
/// Comparable pairs: `min(β, δ/p)` with `p` the first index where the
/// b-sequences differ and `δ` the gap there. Incomparable pairs:
/// `min(β, δ₁/p₁, δ₂/p₂)` from the two first crossings of prefix sums.
/// `μ ≪_m λ` is handled by symmetry.
pub fn alpha_bound_detail(lambda: &Multipartition, mu: &Multipartition, m: &WeightSequence) -> Result<AlphaBound> {
    let verdict = compare_llm(lambda, mu, m)?;
    let beta = fractional_margin(m);
    let size = common_size(lambda, mu, m);
    let bl = b_sequence(lambda, m, size)?;
    let bm = b_sequence(mu, m, size)?;
    let (separation, value) = match verdict {
        Dominance::Equal => return Err(Error::EqualInputs),
        Dominance::Less | Dominance::Greater => {
            let (lower, upper) = if verdict == Dominance::Less { (&bl, &bm) } else { (&bm, &bl) };
            let k = lower
                .iter()
                .zip(upper.iter())
                .position(|(a, b)| a != b)
                .expect("strictly comparable b-sequences differ");
            let gap = lower[k] - upper[k];
            let index = k + 1;
            let value = beta.min(gap / Rational::from_integer(index as i64));
            (Separation::FirstDifference { index, gap }, value)
        }
        Dominance::Incomparable => {
            let (mut sl, mut sm) = (Rational::zero(), Rational::zero());
            let (mut first, mut second) = (None, None);
            for (k, (a, b)) in bl.iter().zip(bm.iter()).enumerate() {
                sl += a;
                sm += b;
                if first.is_none() && sl > sm {
                    first = Some((k + 1, *a - *b));
                }
                if second.is_none() && sl < sm {
                    second = Some((k + 1, *b - *a));
                }
            }
            match (first, second) {
                (Some((p1, d1)), Some((p2, d2))) => {
                    let value = beta
                        .min(d1 / Rational::from_integer(p1 as i64))
                        .min(d2 / Rational::from_integer(p2 as i64));
                    (
                        Separation::Crossing {
                            first_index: p1,
                            first_gap: d1,
                            second_index: p2,
                            second_gap: d2,
                        },
                        value,
                    )
                }
                _ => return Err(Error::EqualBSequences),
            }
        }
    };
    Ok(AlphaBound { value, beta, separation })
}

pub fn alpha_bound(lambda: &Multipartition, mu: &Multipartition, m: &WeightSequence) -> Result<Rational> {
    Ok(alpha_bound_detail(lambda, mu, m)?.value)
}

/// A perturbation bound with a complete proof, valid for every `m^[ε,I,ρ]`.
///
/// Every row of the symbol moves by at most `lε` and, below `β/l`, no `m_i`
/// crosses an integer, so the symbol size and entry count are unchanged.
/// Each prefix sum `S_k` of a b-sequence then moves within `[0, klε]`, and a
/// prefix gap `G_k = S_k(λ) - S_k(μ) > 0` survives while `klε < G_k`. The
/// bound is `min(β, max_k G_k/k) / l` for strictly comparable pairs (gaps of
/// the lower one) and the smaller of the two such values for incomparable
/// pairs.
pub fn alpha_bound_certified(lambda: &Multipartition, mu: &Multipartition, m: &WeightSequence) -> Result<Rational> {
    let verdict = compare_llm(lambda, mu, m)?;
    if verdict == Dominance::Equal {
        return Err(Error::EqualInputs);
    }
    let size = common_size(lambda, mu, m);
    let bl = b_sequence(lambda, m, size)?;
    let bm = b_sequence(mu, m, size)?;
    // best gap/k in each direction
    let (mut up, mut down) = (Rational::zero(), Rational::zero());
    let mut diff = Rational::zero();
    for (k, (a, b)) in bl.iter().zip(bm.iter()).enumerate() {
        diff += *a - *b;
        let scaled = diff / Rational::from_integer(k as i64 + 1);
        up = up.max(scaled);
        down = down.max(-scaled);
    }
    let gap = match verdict {
        Dominance::Less => up,
        Dominance::Greater => down,
        _ if up.is_zero() => return Err(Error::EqualBSequences),
        _ => up.min(down),
    };
    Ok(fractional_margin(m).min(gap) / Rational::from_integer(m.level() as i64))
}
