//! Dominance order on finite sequences of exact rationals.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::Rational;

/// Outcome of comparing two elements of a partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

impl Dominance {
    pub fn reverse(self) -> Self {
        match self {
            Dominance::Greater => Dominance::Less,
            Dominance::Less => Dominance::Greater,
            other => other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Dominance::Greater => "Greater",
            Dominance::Less => "Less",
            Dominance::Equal => "Equal",
            Dominance::Incomparable => "Incomparable",
        }
    }
}

/// Compares `alpha` and `beta` by prefix sums, padding the shorter one with zeros.
///
/// `Greater` means every prefix sum of `alpha` is at least the matching prefix
/// sum of `beta` and the sequences differ.
pub fn dominance_compare(alpha: &[Rational], beta: &[Rational]) -> Result<Dominance> {
    let total_a: Rational = alpha.iter().sum();
    let total_b: Rational = beta.iter().sum();
    if total_a != total_b {
        return Err(Error::TotalMismatch {
            left: total_a.to_string(),
            right: total_b.to_string(),
        });
    }
    let len = alpha.len().max(beta.len());
    let zero = Rational::zero();
    let (mut sa, mut sb) = (Rational::zero(), Rational::zero());
    let (mut some_greater, mut some_less, mut differ) = (false, false, false);
    for k in 0..len {
        let a = alpha.get(k).unwrap_or(&zero);
        let b = beta.get(k).unwrap_or(&zero);
        differ |= a != b;
        sa += a;
        sb += b;
        if sa > sb {
            some_greater = true;
        } else if sa < sb {
            some_less = true;
        }
    }
    Ok(match (differ, some_greater, some_less) {
        (false, _, _) => Dominance::Equal,
        (true, true, true) => Dominance::Incomparable,
        (true, _, true) => Dominance::Less,
        // Sequences that differ always have some strictly different prefix sum.
        (true, _, false) => Dominance::Greater,
    })
}
