//! Shifted `m`-symbols, their b-sequences, the `a`-invariant and the order `≪_m`.
//!
//! Row `j` of the symbol of size `p` holds `λ^j_i - i + p + m_j` for
//! `i = 1..=p + ⌊m_j⌋`. The b-sequence lists all entries in decreasing order,
//! and `λ ≪_m μ` (strictly) when the b-sequence of `λ` strictly dominates that of `μ`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::dominance::{dominance_compare, Dominance};
use crate::error::{Error, Result};
use crate::multipartition::Multipartition;
use crate::perm::Perm;
use crate::Rational;

/// A weight sequence `m = (m_1, …, m_l)` of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightSequence(Vec<Rational>);

impl WeightSequence {
    pub fn new(values: Vec<Rational>) -> Self {
        assert!(!values.is_empty(), "a weight sequence has at least one entry");
        WeightSequence(values)
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&x| Rational::from_integer(x)).collect())
    }

    pub fn zeros(l: usize) -> Self {
        Self::new(vec![Rational::zero(); l])
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    /// `m_j`, 1-based.
    pub fn get(&self, j: usize) -> Rational {
        self.0[j - 1]
    }

    /// `m^σ = (m_{σ(1)}, …, m_{σ(l)})`.
    pub fn twist(&self, sigma: &Perm) -> WeightSequence {
        WeightSequence(sigma.twist(&self.0))
    }
}

impl fmt::Display for WeightSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for WeightSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|x| parse_rational(x.trim()))
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightSequence::new(values))
    }
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("`{s}` is not a rational (expected p/q or an integer)"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => s.parse::<i64>().map(Rational::from_integer).map_err(|_| bad()),
    }
}

fn floor_i64(x: Rational) -> i64 {
    x.floor().to_integer()
}

fn check_level(lambda: &Multipartition, m: &WeightSequence) -> Result<()> {
    if lambda.level() != m.level() {
        return Err(Error::LevelMismatch { expected: m.level(), found: lambda.level() });
    }
    Ok(())
}

/// Smallest `p ≥ 1` with `p + ⌊m_j⌋ ≥ 1 + h^j` for every component `j`,
/// where `h^j` is the number of nonzero parts of `λ^j`.
pub fn minimal_symbol_size(lambda: &Multipartition, m: &WeightSequence) -> usize {
    lambda
        .components()
        .iter()
        .zip(m.values())
        .map(|(part, &mj)| 1 + part.len() as i64 - floor_i64(mj))
        .fold(1, i64::max) as usize
}

/// A shifted `m`-symbol. `rows()[j-1]` is row `j` (printed `j`-th from the
/// bottom), stored left to right in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedSymbol {
    size: usize,
    rows: Vec<Vec<Rational>>,
}

impl ShiftedSymbol {
    pub fn new(lambda: &Multipartition, m: &WeightSequence, size: usize) -> Result<Self> {
        check_level(lambda, m)?;
        let minimum = minimal_symbol_size(lambda, m);
        if size < minimum {
            return Err(Error::SymbolTooSmall { size, minimum });
        }
        let p = size as i64;
        let rows = lambda
            .components()
            .iter()
            .zip(m.values())
            .map(|(part, &mj)| {
                let len = (p + floor_i64(mj)) as usize;
                (1..=len)
                    .rev()
                    .map(|i| Rational::from_integer(part.part(i) as i64 - i as i64 + p) + mj)
                    .collect()
            })
            .collect();
        Ok(ShiftedSymbol { size, rows })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn entry_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// All entries in weakly decreasing order.
    pub fn b_sequence(&self) -> Vec<Rational> {
        let mut all: Vec<Rational> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable_by(|a, b| b.cmp(a));
        all
    }
}

impl fmt::Display for ShiftedSymbol {
    /// Rows top to bottom, so the last printed line is component 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().rev().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn shifted_symbol(lambda: &Multipartition, m: &WeightSequence, size: usize) -> Result<ShiftedSymbol> {
    ShiftedSymbol::new(lambda, m, size)
}

pub fn b_sequence(lambda: &Multipartition, m: &WeightSequence, size: usize) -> Result<Vec<Rational>> {
    Ok(ShiftedSymbol::new(lambda, m, size)?.b_sequence())
}

/// `n_m(λ) = Σ (i-1) · fb^i(λ)` at symbol size `size`.
pub fn n_statistic(lambda: &Multipartition, m: &WeightSequence, size: usize) -> Result<Rational> {
    Ok(weighted_sum(&b_sequence(lambda, m, size)?))
}

fn weighted_sum(b: &[Rational]) -> Rational {
    b.iter()
        .enumerate()
        .map(|(i, &x)| x * Rational::from_integer(i as i64))
        .sum()
}

/// `a^m(λ) = t · (n_m(λ) - n_m(∅))`, both statistics taken at the same size.
pub fn a_invariant(lambda: &Multipartition, m: &WeightSequence, size: usize, t: Rational) -> Result<Rational> {
    let empty = Multipartition::empty(lambda.level());
    Ok(t * (n_statistic(lambda, m, size)? - n_statistic(&empty, m, size)?))
}

/// `a^m(λ)` with `t = 1` at the minimal admissible size.
pub fn a_value(lambda: &Multipartition, m: &WeightSequence) -> Result<Rational> {
    check_level(lambda, m)?;
    a_invariant(lambda, m, minimal_symbol_size(lambda, m), Rational::one())
}

/// Symbol size used to compare two multipartitions: the larger minimal size.
pub fn common_size(lambda: &Multipartition, mu: &Multipartition, m: &WeightSequence) -> usize {
    minimal_symbol_size(lambda, m).max(minimal_symbol_size(mu, m))
}

fn check_comparable(lambda: &Multipartition, mu: &Multipartition, m: &WeightSequence) -> Result<()> {
    check_level(lambda, m)?;
    check_level(mu, m)?;
    if lambda.rank() != mu.rank() {
        return Err(Error::RankMismatch { left: lambda.rank(), right: mu.rank() });
    }
    Ok(())
}

/// `≪_m` at an explicit symbol size. `Less` means `λ ≪_m μ` with `λ ≠ μ`.
pub fn compare_llm_at(
    lambda: &Multipartition,
    mu: &Multipartition,
    m: &WeightSequence,
    size: usize,
) -> Result<Dominance> {
    check_comparable(lambda, mu, m)?;
    if lambda == mu {
        return Ok(Dominance::Equal);
    }
    let verdict = dominance_compare(&b_sequence(lambda, m, size)?, &b_sequence(mu, m, size)?)?;
    // Dominating b-sequence means smaller in ≪_m. Distinct multipartitions
    // can share a b-sequence; they are then incomparable.
    Ok(match verdict {
        Dominance::Greater => Dominance::Less,
        Dominance::Less => Dominance::Greater,
        Dominance::Equal | Dominance::Incomparable => Dominance::Incomparable,
    })
}

/// `≪_m` at the common minimal size.
pub fn compare_llm(lambda: &Multipartition, mu: &Multipartition, m: &WeightSequence) -> Result<Dominance> {
    check_comparable(lambda, mu, m)?;
    compare_llm_at(lambda, mu, m, common_size(lambda, mu, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartition::enumerate_multipartitions;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d)
    }

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    #[test]
    fn minimal_sizes() {
        assert_eq!(minimal_symbol_size(&Multipartition::empty(2), &WeightSequence::zeros(2)), 1);
        let m: WeightSequence = "1/2,2,-1".parse().unwrap();
        assert_eq!(minimal_symbol_size(&mp("1.1|-|2"), &m), 3);
        assert_eq!(minimal_symbol_size(&mp("1"), &WeightSequence::from_integers(&[-5])), 7);
    }

    #[test]
    fn symbol_of_worked_example() {
        let m: WeightSequence = "1/2,2,-1".parse().unwrap();
        let sym = shifted_symbol(&mp("1.1|-|2"), &m, 3).unwrap();
        assert_eq!(sym.rows()[0], vec![q(1, 2), q(5, 2), q(7, 2)]);
        assert_eq!(sym.rows()[1], ints(&[0, 1, 2, 3, 4]));
        assert_eq!(sym.rows()[2], ints(&[0, 3]));
        assert_eq!(sym.to_string(), "0 3\n0 1 2 3 4\n1/2 5/2 7/2");
        assert_eq!(sym.entry_count(), 3 * 3 + 2 - 1);
        assert!(matches!(
            shifted_symbol(&mp("1.1|-|2"), &m, 2),
            Err(Error::SymbolTooSmall { size: 2, minimum: 3 })
        ));
    }

    #[test]
    fn empty_symbol() {
        let sym = shifted_symbol(&Multipartition::empty(3), &WeightSequence::zeros(3), 1).unwrap();
        assert!(sym.rows().iter().all(|r| r == &ints(&[0])));
        assert_eq!(
            b_sequence(&Multipartition::empty(2), &WeightSequence::zeros(2), 2).unwrap(),
            ints(&[1, 1, 0, 0])
        );
    }

    #[test]
    fn a_invariant_small_cases() {
        let m = WeightSequence::zeros(1);
        assert_eq!(a_invariant(&Multipartition::empty(1), &m, 3, Rational::one()).unwrap(), Rational::zero());
        // symbols (2,0) and (1,0): both n-statistics vanish
        assert_eq!(a_invariant(&mp("1"), &m, 2, Rational::one()).unwrap(), Rational::zero());
        // (1,1) at p=3: (3,2,0) vs (2,1,0): 2 - 1
        assert_eq!(a_invariant(&mp("1.1"), &m, 3, Rational::one()).unwrap(), Rational::one());
        assert_eq!(a_invariant(&mp("1.1"), &m, 3, q(5, 2)).unwrap(), q(5, 2));
    }

    #[test]
    fn a_invariant_is_size_independent() {
        let m: WeightSequence = "1/2,-3/2".parse().unwrap();
        for lam in enumerate_multipartitions(2, 4) {
            let p = minimal_symbol_size(&lam, &m);
            let a0 = a_invariant(&lam, &m, p, Rational::one()).unwrap();
            for extra in 1..4 {
                assert_eq!(a_invariant(&lam, &m, p + extra, Rational::one()).unwrap(), a0);
            }
        }
    }

    #[test]
    fn level_one_orientation() {
        let m = WeightSequence::zeros(1);
        assert_eq!(compare_llm_at(&mp("2.1"), &mp("1.1.1"), &m, 4).unwrap(), Dominance::Less);
        assert_eq!(compare_llm_at(&mp("1.1.1"), &mp("2.1"), &m, 4).unwrap(), Dominance::Greater);
        assert_eq!(compare_llm(&mp("2.1"), &mp("2.1"), &m).unwrap(), Dominance::Equal);
    }

    #[test]
    fn rejects_mismatches() {
        let m = WeightSequence::zeros(2);
        assert!(matches!(compare_llm(&mp("1|-"), &mp("2|-"), &m), Err(Error::RankMismatch { .. })));
        assert!(matches!(compare_llm(&mp("1"), &mp("1"), &m), Err(Error::LevelMismatch { .. })));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("10/3").unwrap(), q(10, 3));
        assert_eq!(parse_rational("-1").unwrap(), q(-1, 1));
        assert_eq!(parse_rational("4/-2").unwrap(), q(-2, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!("1,,2".parse::<WeightSequence>().is_err());
    }
}
