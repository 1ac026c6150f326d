//! Partitions, `l`-multipartitions, their nodes and residues.
//!
//! Text format: components separated by `|`, parts by `.`, and an empty
//! component written `-`, e.g. `4.1|4.4.3.2.2.2.1|-`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::multicharge::Multicharge;
use crate::perm::Perm;

/// An integer partition, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part (1-based); zero beyond the stored length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().sum()
    }

    fn with_part(&self, row: usize, value: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.push(value);
        } else {
            parts[row - 1] = value;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }
}

// Canonical order: larger rank first, then reverse-lexicographic on parts.
// `enumerate_partitions` and `enumerate_multipartitions` list in ascending order.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .rank()
            .cmp(&self.rank())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        if s.is_empty() {
            return Err(Error::Parse("empty component (write `-` for the empty partition)".into()));
        }
        let parts = s
            .split('.')
            .map(|p| {
                p.parse::<usize>()
                    .ok()
                    .filter(|&x| x > 0)
                    .ok_or_else(|| Error::Parse(format!("bad part `{p}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A node `(a, b, c)`: row `a`, column `b`, component `c`, all 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Node { row, col, comp }
    }

    /// `b - a + r_c`, the charged content of the node.
    pub fn content(&self, charge: &Multicharge) -> i64 {
        self.col as i64 - self.row as i64 + charge.get(self.comp)
    }

    /// `r_c + b - a mod e`, in `0..e`.
    pub fn residue(&self, charge: &Multicharge, e: i64) -> i64 {
        self.content(charge).rem_euclid(e)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

/// An `l`-multipartition `(λ¹, …, λˡ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "a multipartition has at least one component");
        Multipartition { components }
    }

    pub fn empty(l: usize) -> Self {
        Self::new(vec![Partition::empty(); l])
    }

    /// Convenience constructor from raw parts; panics on invalid input.
    pub fn from_parts(components: &[&[usize]]) -> Self {
        Self::new(
            components
                .iter()
                .map(|c| Partition::new(c.to_vec()).expect("weakly decreasing parts"))
                .collect(),
        )
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Partition::rank).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `c`, 1-based.
    pub fn component(&self, c: usize) -> &Partition {
        &self.components[c - 1]
    }

    pub fn contains(&self, node: &Node) -> bool {
        node.comp >= 1
            && node.comp <= self.level()
            && node.row >= 1
            && node.col >= 1
            && node.col <= self.component(node.comp).part(node.row)
    }

    /// All nodes of the Young diagram, by component then row then column.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.rank());
        for (c, part) in self.components.iter().enumerate() {
            for (a, &len) in part.parts().iter().enumerate() {
                out.extend((1..=len).map(|b| Node::new(a + 1, b, c + 1)));
            }
        }
        out
    }

    /// Nodes whose addition yields a multipartition, by component then row.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (c, part) in self.components.iter().enumerate() {
            for a in 1..=part.len() + 1 {
                if a == 1 || part.part(a - 1) > part.part(a) {
                    out.push(Node::new(a, part.part(a) + 1, c + 1));
                }
            }
        }
        out
    }

    /// Nodes whose removal yields a multipartition, by component then row.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (c, part) in self.components.iter().enumerate() {
            for a in 1..=part.len() {
                if part.part(a) > part.part(a + 1) {
                    out.push(Node::new(a, part.part(a), c + 1));
                }
            }
        }
        out
    }

    /// Adds an addable node. Panics if the node is not addable.
    pub fn add_node(&self, node: &Node) -> Multipartition {
        let part = self.component(node.comp);
        assert!(
            node.col == part.part(node.row) + 1 && (node.row == 1 || part.part(node.row - 1) >= node.col),
            "node {node} is not addable"
        );
        let mut components = self.components.clone();
        components[node.comp - 1] = part.with_part(node.row, node.col);
        Multipartition { components }
    }

    /// Removes a removable node. Panics if the node is not removable.
    pub fn remove_node(&self, node: &Node) -> Multipartition {
        let part = self.component(node.comp);
        assert!(
            node.col == part.part(node.row) && part.part(node.row + 1) < node.col,
            "node {node} is not removable"
        );
        let mut components = self.components.clone();
        components[node.comp - 1] = part.with_part(node.row, node.col - 1);
        Multipartition { components }
    }

    /// `λ^σ = (λ^{σ(1)}, …, λ^{σ(l)})`.
    pub fn twist(&self, sigma: &Perm) -> Multipartition {
        Multipartition { components: sigma.twist(&self.components) }
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", comps.join("|"))
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let components = s.split('|').map(str::parse).collect::<Result<Vec<Partition>>>()?;
        Ok(Multipartition { components })
    }
}

/// All partitions of `n`, in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All `l`-multipartitions of `n`: compositions of `n` with the first
/// component largest first, each expanded over reverse-lex partitions.
pub fn enumerate_multipartitions(l: usize, n: usize) -> Vec<Multipartition> {
    assert!(l >= 1, "level must be positive");
    let by_size: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();
    let mut out = Vec::new();
    let mut current: Vec<Partition> = Vec::with_capacity(l);
    fn rec(
        l: usize,
        remaining: usize,
        by_size: &[Vec<Partition>],
        current: &mut Vec<Partition>,
        out: &mut Vec<Multipartition>,
    ) {
        if current.len() == l - 1 {
            for p in &by_size[remaining] {
                current.push(p.clone());
                out.push(Multipartition { components: current.clone() });
                current.pop();
            }
            return;
        }
        for size in (0..=remaining).rev() {
            for p in &by_size[size] {
                current.push(p.clone());
                rec(l, remaining - size, by_size, current, out);
                current.pop();
            }
        }
    }
    rec(l, n, &by_size, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    /// Independent count: p(n) by the classic recurrence over largest part.
    fn partition_count(n: usize) -> usize {
        let mut table = vec![vec![0usize; n + 1]; n + 1];
        for k in 0..=n {
            table[0][k] = 1;
        }
        for m in 1..=n {
            for k in 1..=n {
                table[m][k] = table[m][k - 1] + if k <= m { table[m - k][k] } else { 0 };
            }
        }
        table[n][n]
    }

    fn multipartition_count(l: usize, n: usize) -> usize {
        // convolution of partition counts over compositions of n
        let mut counts = vec![0usize; n + 1];
        counts[0] = 1;
        for _ in 0..l {
            let mut next = vec![0usize; n + 1];
            for (a, &ca) in counts.iter().enumerate() {
                for b in 0..=n - a {
                    next[a + b] += ca * partition_count(b);
                }
            }
            counts = next;
        }
        counts[n]
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        let three: Vec<String> = enumerate_partitions(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(three, vec!["3", "2.1", "1.1.1"]);
    }

    #[test]
    fn multipartition_counts_match_convolution() {
        assert_eq!(enumerate_multipartitions(3, 0), vec![Multipartition::empty(3)]);
        assert_eq!(enumerate_multipartitions(3, 3).len(), 22);
        assert_eq!(enumerate_multipartitions(1, 3).len(), 3);
        for l in 1..=3 {
            for n in 0..=6 {
                let list = enumerate_multipartitions(l, n);
                assert_eq!(list.len(), multipartition_count(l, n), "l={l} n={n}");
                assert!(list.windows(2).all(|w| w[0] < w[1]), "canonical order l={l} n={n}");
                assert!(list.iter().all(|m| m.rank() == n && m.level() == l));
            }
        }
    }

    #[test]
    fn addable_and_removable_examples() {
        assert_eq!(mp("2").removable_nodes(), vec![Node::new(1, 2, 1)]);
        assert_eq!(mp("-|-").addable_nodes(), vec![Node::new(1, 1, 1), Node::new(1, 1, 2)]);
        assert_eq!(mp("2").addable_nodes(), vec![Node::new(1, 3, 1), Node::new(2, 1, 1)]);
    }

    #[test]
    fn addable_removable_duality() {
        for l in 1..=3 {
            for n in 0..=4 {
                for lam in enumerate_multipartitions(l, n) {
                    for g in lam.removable_nodes() {
                        let smaller = lam.remove_node(&g);
                        assert!(smaller.addable_nodes().contains(&g));
                        assert_eq!(smaller.add_node(&g), lam);
                    }
                    for g in lam.addable_nodes() {
                        let bigger = lam.add_node(&g);
                        assert!(bigger.removable_nodes().contains(&g));
                        assert_eq!(bigger.rank(), n + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn residues() {
        let r01 = Multicharge::new(vec![0, 1]);
        let r0 = Multicharge::new(vec![0]);
        assert_eq!(Node::new(1, 1, 1).residue(&r01, 2), 0);
        assert_eq!(Node::new(1, 2, 1).residue(&r0, 2), 1);
        assert_eq!(Node::new(2, 1, 2).residue(&r01, 2), 0);
        assert_eq!(Node::new(3, 1, 1).residue(&r0, 3), 1);
    }

    #[test]
    fn twists() {
        let swap = Perm::from_one_line(&[2, 1]).unwrap();
        assert_eq!(mp("1|-").twist(&swap), mp("-|1"));
        let lam = mp("2.1|-|3");
        assert_eq!(lam.twist(&Perm::identity(3)), lam);
        for s in Perm::all(3) {
            assert_eq!(lam.twist(&s).twist(&s.inverse()), lam);
            for t in Perm::all(3) {
                assert_eq!(lam.twist(&t).twist(&s), lam.twist(&t.compose(&s)));
            }
        }
    }

    #[test]
    fn text_format() {
        let lam = mp("4.1|4.4.3.2.2.2.1|4.4.4.2.1");
        assert_eq!(lam.rank(), 38);
        assert_eq!(lam.to_string(), "4.1|4.4.3.2.2.2.1|4.4.4.2.1");
        assert_eq!(mp("1.1|-|2").to_string(), "1.1|-|2");
        assert!("1.2|-".parse::<Multipartition>().is_err());
        assert!("1||2".parse::<Multipartition>().is_err());
        assert!("a".parse::<Multipartition>().is_err());
        assert!("1.0".parse::<Multipartition>().is_err());
    }

    #[test]
    fn partition_accessors() {
        let p = Partition::new(vec![3, 1, 0, 0]).unwrap();
        assert_eq!(p.parts(), &[3, 1]);
        assert_eq!(p.part(1), 3);
        assert_eq!(p.part(7), 0);
        assert_eq!(p.rank(), 4);
    }
}
