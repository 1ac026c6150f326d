//! Permutations of `1..=l` in one-line notation, and the right action on
//! `l`-tuples: `x^σ = (x_{σ(1)}, …, x_{σ(l)})`.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `1..=l`. Images are stored 0-based; the public API is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(l: usize) -> Self {
        Perm((0..l).collect())
    }

    /// Builds a permutation from one-line notation, e.g. `[2, 3, 1]` for `1↦2, 2↦3, 3↦1`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let l = images.len();
        let mut seen = vec![false; l];
        let mut zero_based = Vec::with_capacity(l);
        for &x in images {
            if x == 0 || x > l || seen[x - 1] {
                return Err(Error::InvalidPermutation(l));
            }
            seen[x - 1] = true;
            zero_based.push(x - 1);
        }
        Ok(Perm(zero_based))
    }

    /// The transposition exchanging `i` and `j` (1-based).
    pub fn transposition(l: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(l);
        p.0.swap(i - 1, j - 1);
        p
    }

    /// The cycle `1 ↦ 2 ↦ … ↦ l ↦ 1`.
    pub fn cycle(l: usize) -> Self {
        Perm((0..l).map(|i| (i + 1) % l).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Image of `i` (1-based in, 1-based out).
    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// Function composition: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    /// One-line notation, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    /// The right action on tuples: entry `i` of the result is `items[σ(i)]`.
    ///
    /// It is a right action: `twist(twist(x, τ), σ) == twist(x, τ ∘ σ)`.
    pub fn twist<T: Clone>(&self, items: &[T]) -> Vec<T> {
        assert_eq!(items.len(), self.len(), "twisting a tuple of the wrong length");
        self.0.iter().map(|&j| items[j].clone()).collect()
    }

    /// All permutations of `1..=l` in lexicographic order of one-line notation.
    pub fn all(l: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(l);
        let mut used = vec![false; l];
        fn rec(l: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if current.len() == l {
                out.push(Perm(current.clone()));
                return;
            }
            for x in 0..l {
                if !used[x] {
                    used[x] = true;
                    current.push(x);
                    rec(l, current, used, out);
                    current.pop();
                    used[x] = false;
                }
            }
        }
        rec(l, &mut current, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_one_line(&[1, 1]).is_err());
        assert!(Perm::from_one_line(&[0, 1]).is_err());
        assert!(Perm::from_one_line(&[1, 3]).is_err());
        assert!(Perm::from_one_line(&[2, 3, 1]).is_ok());
    }

    #[test]
    fn twist_is_a_right_action() {
        let x = vec!['a', 'b', 'c'];
        for s in Perm::all(3) {
            for t in Perm::all(3) {
                assert_eq!(s.twist(&t.twist(&x)), t.compose(&s).twist(&x));
            }
        }
    }

    #[test]
    fn cycle_rotates_left() {
        assert_eq!(Perm::cycle(3).twist(&[1, 2, 3]), vec![2, 3, 1]);
        assert_eq!(Perm::cycle(3).inverse().twist(&[1, 2, 3]), vec![3, 1, 2]);
    }

    #[test]
    fn inverse_round_trip() {
        for p in Perm::all(4) {
            assert!(p.compose(&p.inverse()).is_identity());
        }
        assert_eq!(Perm::all(3).len(), 6);
    }
}
