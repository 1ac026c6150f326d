//! Node orders on Fock spaces of level `l`, good nodes, crystal graphs and
//! the sets of Uglov, twisted Uglov, (π-twisted) Kleshchev and FLOTW
//! multipartitions.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::multicharge::{check_modulus, reordering_permutation, Multicharge};
use crate::multipartition::{enumerate_multipartitions, Multipartition, Node};
use crate::perm::Perm;

/// Which strict order on `i`-nodes drives the crystal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeOrder {
    /// Key `b - a + s_c`; equal keys put the larger component first.
    Uglov,
    /// Key `b - a + s_c`; equal keys broken by `σ(c) > σ(c')`.
    TwistedUglov(Perm),
    /// `γ ≺ γ'` iff `π(c') < π(c)`, or `c = c'` and `a' < a`.
    Kleshchev(Perm),
}

/// A node order together with the charge and modulus fixing residues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalSpec {
    order: NodeOrder,
    charge: Multicharge,
    e: i64,
}

impl CrystalSpec {
    pub fn uglov(s: &Multicharge, e: i64) -> Result<Self> {
        check_modulus(e)?;
        Ok(CrystalSpec { order: NodeOrder::Uglov, charge: s.clone(), e })
    }

    /// The order `≺^σ` on the twisted Fock space of charge `s`.
    pub fn twisted_uglov(s: &Multicharge, sigma: &Perm, e: i64) -> Result<Self> {
        check_modulus(e)?;
        check_perm(sigma, s.level())?;
        Ok(CrystalSpec { order: NodeOrder::TwistedUglov(sigma.clone()), charge: s.clone(), e })
    }

    /// The π-twisted Kleshchev order; only `r mod e` is retained.
    pub fn kleshchev(r: &Multicharge, pi: &Perm, e: i64) -> Result<Self> {
        check_modulus(e)?;
        check_perm(pi, r.level())?;
        Ok(CrystalSpec { order: NodeOrder::Kleshchev(pi.clone()), charge: r.residues(e), e })
    }

    pub fn order(&self) -> &NodeOrder {
        &self.order
    }

    pub fn charge(&self) -> &Multicharge {
        &self.charge
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn level(&self) -> usize {
        self.charge.level()
    }

    pub fn residue(&self, node: &Node) -> i64 {
        node.residue(&self.charge, self.e)
    }
}

fn check_perm(p: &Perm, l: usize) -> Result<()> {
    if p.len() != l {
        return Err(Error::LevelMismatch { expected: l, found: p.len() });
    }
    Ok(())
}

/// Strict comparison of two distinct nodes under `spec`.
///
/// Panics when the order cannot separate them, which never happens for two
/// addable or removable nodes of one multipartition.
pub fn node_compare(spec: &CrystalSpec, g: &Node, h: &Node) -> Ordering {
    let ord = match &spec.order {
        NodeOrder::Uglov => g
            .content(&spec.charge)
            .cmp(&h.content(&spec.charge))
            .then(h.comp.cmp(&g.comp)),
        NodeOrder::TwistedUglov(sigma) => g
            .content(&spec.charge)
            .cmp(&h.content(&spec.charge))
            .then(sigma.image(h.comp).cmp(&sigma.image(g.comp))),
        NodeOrder::Kleshchev(pi) => pi.image(h.comp).cmp(&pi.image(g.comp)).then(h.row.cmp(&g.row)),
    };
    assert!(ord != Ordering::Equal || g == h, "node order cannot separate {g} and {h}");
    ord
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    R,
}

/// The `i`-word of `λ`: its addable (`A`) and removable (`R`) `i`-nodes in
/// increasing order.
pub fn i_word(lambda: &Multipartition, i: i64, spec: &CrystalSpec) -> Vec<(Letter, Node)> {
    let mut word: Vec<(Letter, Node)> = lambda
        .addable_nodes()
        .into_iter()
        .map(|n| (Letter::A, n))
        .chain(lambda.removable_nodes().into_iter().map(|n| (Letter::R, n)))
        .filter(|(_, n)| spec.residue(n) == i)
        .collect();
    word.sort_by(|x, y| node_compare(spec, &x.1, &y.1));
    word
}

pub fn word_string(word: &[(Letter, Node)]) -> String {
    word.iter().map(|(l, _)| if *l == Letter::A { 'A' } else { 'R' }).collect()
}

/// Positions of the letters that survive the deletion of all `RA` factors:
/// first the surviving `A`s, then the surviving `R`s.
fn surviving(word: &[Letter]) -> (Vec<usize>, Vec<usize>) {
    let mut a_left = Vec::new();
    let mut r_stack = Vec::new();
    for (k, l) in word.iter().enumerate() {
        match l {
            Letter::R => r_stack.push(k),
            Letter::A => {
                if r_stack.pop().is_none() {
                    a_left.push(k);
                }
            }
        }
    }
    (a_left, r_stack)
}

/// `(α, β)` with `A^α R^β` the reduced form of `w`.
pub fn reduce_word(word: &[Letter]) -> (usize, usize) {
    let (a, r) = surviving(word);
    (a.len(), r.len())
}

/// The rightmost surviving addable `i`-node.
pub fn good_addable(lambda: &Multipartition, i: i64, spec: &CrystalSpec) -> Option<Node> {
    let word = i_word(lambda, i, spec);
    let letters: Vec<Letter> = word.iter().map(|x| x.0).collect();
    surviving(&letters).0.last().map(|&k| word[k].1)
}

/// The leftmost surviving removable `i`-node.
pub fn good_removable(lambda: &Multipartition, i: i64, spec: &CrystalSpec) -> Option<Node> {
    let word = i_word(lambda, i, spec);
    let letters: Vec<Letter> = word.iter().map(|x| x.0).collect();
    surviving(&letters).1.first().map(|&k| word[k].1)
}

/// All good addable nodes of `λ`, one per residue that has one.
fn good_addables(lambda: &Multipartition, spec: &CrystalSpec) -> Vec<(i64, Node)> {
    let mut by_residue: BTreeMap<i64, Vec<(Letter, Node)>> = BTreeMap::new();
    for n in lambda.addable_nodes() {
        by_residue.entry(spec.residue(&n)).or_default().push((Letter::A, n));
    }
    for n in lambda.removable_nodes() {
        let i = spec.residue(&n);
        if let Some(w) = by_residue.get_mut(&i) {
            w.push((Letter::R, n));
        }
    }
    let mut out = Vec::new();
    for (i, mut word) in by_residue {
        word.sort_by(|x, y| node_compare(spec, &x.1, &y.1));
        let letters: Vec<Letter> = word.iter().map(|x| x.0).collect();
        if let Some(&k) = surviving(&letters).0.last() {
            out.push((i, word[k].1));
        }
    }
    out
}

/// The part of the crystal graph reachable from `∅` in ranks `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    /// `levels[k]` holds the vertices of rank `k`, sorted.
    pub levels: Vec<Vec<Multipartition>>,
    /// `(μ, λ, i)`: `λ` is `μ` plus its good addable `i`-node. Sorted.
    pub edges: Vec<(Multipartition, Multipartition, i64)>,
}

impl CrystalGraph {
    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn vertices(&self, k: usize) -> &[Multipartition] {
        &self.levels[k]
    }

    pub fn top(&self) -> BTreeSet<Multipartition> {
        self.levels[self.rank()].iter().cloned().collect()
    }

    /// Graphviz rendering; vertices are labelled by their text format.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for level in &self.levels {
            for v in level {
                let _ = writeln!(out, "  \"{v}\";");
            }
        }
        for (from, to, i) in &self.edges {
            let _ = writeln!(out, "  \"{from}\" -> \"{to}\" [label=\"{i}\"];");
        }
        out.push_str("}\n");
        out
    }
}

/// Breadth-first closure from the empty multipartition under good-addable
/// moves. Each frontier is processed with `exec`; the result does not depend
/// on the schedule.
pub fn crystal_generate(spec: &CrystalSpec, n: usize, exec: Exec) -> CrystalGraph {
    let mut levels = vec![vec![Multipartition::empty(spec.level())]];
    let mut edges = Vec::new();
    for _ in 0..n {
        let frontier = levels.last().expect("nonempty");
        let moves = exec.flat_map(frontier, |mu| {
            good_addables(mu, spec)
                .into_iter()
                .map(|(i, node)| (mu.clone(), mu.add_node(&node), i))
                .collect()
        });
        let next: BTreeSet<Multipartition> = moves.iter().map(|(_, l, _)| l.clone()).collect();
        edges.extend(moves);
        levels.push(next.into_iter().collect());
    }
    edges.sort();
    CrystalGraph { levels, edges }
}

fn top_set(spec: &CrystalSpec, n: usize) -> BTreeSet<Multipartition> {
    crystal_generate(spec, n, Exec::default()).top()
}

/// `Φ_s(n)`.
pub fn uglov_set(s: &Multicharge, e: i64, n: usize) -> Result<BTreeSet<Multipartition>> {
    Ok(top_set(&CrystalSpec::uglov(s, e)?, n))
}

/// `𝒦^π_{𝒞_e}(n)` for the class of `r`.
pub fn kleshchev_set(r: &Multicharge, pi: &Perm, e: i64, n: usize) -> Result<BTreeSet<Multipartition>> {
    Ok(top_set(&CrystalSpec::kleshchev(r, pi, e)?, n))
}

/// `σ(Φ_{s^{σ⁻¹}}(n)) = {λ^σ : λ ∈ Φ_{s^{σ⁻¹}}(n)}`.
pub fn twisted_uglov_set(s: &Multicharge, sigma: &Perm, e: i64, n: usize) -> Result<BTreeSet<Multipartition>> {
    check_perm(sigma, s.level())?;
    let base = uglov_set(&s.twist(&sigma.inverse()), e, n)?;
    Ok(base.iter().map(|l| l.twist(sigma)).collect())
}

/// FLOTW membership for `r ∈ 𝒮_e^l`.
pub fn flotw_member(lambda: &Multipartition, r: &Multicharge, e: i64) -> Result<bool> {
    check_modulus(e)?;
    if lambda.level() != r.level() {
        return Err(Error::LevelMismatch { expected: r.level(), found: lambda.level() });
    }
    if !r.in_strip(e) {
        return Err(Error::ChargeOutsideStrip(format!("{r} with e = {e}")));
    }
    let l = r.level();
    let rows = lambda.components().iter().map(|p| p.len()).max().unwrap_or(0);
    for j in 1..=l {
        let (next, shift) = if j < l {
            (j + 1, r.get(j + 1) - r.get(j))
        } else {
            (1, e + r.get(1) - r.get(l))
        };
        let shift = shift as usize;
        for i in 1..=rows {
            if lambda.component(j).part(i) < lambda.component(next).part(i + shift) {
                return Ok(false);
            }
        }
    }
    let mut residues: BTreeMap<usize, BTreeSet<i64>> = BTreeMap::new();
    for (c, part) in lambda.components().iter().enumerate() {
        for (a, &p) in part.parts().iter().enumerate() {
            residues.entry(p).or_default().insert(Node::new(a + 1, p, c + 1).residue(r, e));
        }
    }
    Ok(residues.values().all(|set| set.len() < e as usize))
}

/// `Ψ_r(n)`, in the canonical multipartition order.
pub fn flotw_set(r: &Multicharge, e: i64, n: usize) -> Result<BTreeSet<Multipartition>> {
    let mut out = BTreeSet::new();
    for lambda in enumerate_multipartitions(r.level(), n) {
        if flotw_member(&lambda, r, e)? {
            out.insert(lambda);
        }
    }
    Ok(out)
}

/// `(N^≺_i(λ, μ), N^≻_i(λ, μ))` for `[μ] = [λ] ∪ {γ}`, `γ` an `i`-node.
pub fn n_statistics(lambda: &Multipartition, mu: &Multipartition, i: i64, spec: &CrystalSpec) -> Result<(i64, i64)> {
    let gamma = lambda
        .addable_nodes()
        .into_iter()
        .find(|g| spec.residue(g) == i && lambda.add_node(g) == *mu)
        .ok_or(Error::NotSingleNodeExtension { residue: i })?;
    let (mut below, mut above) = (0i64, 0i64);
    let addable = lambda.addable_nodes().into_iter().filter(|g| *g != gamma).map(|g| (g, 1));
    let removable = mu.removable_nodes().into_iter().filter(|g| *g != gamma).map(|g| (g, -1));
    for (g, sign) in addable.chain(removable) {
        if spec.residue(&g) != i {
            continue;
        }
        match node_compare(spec, &g, &gamma) {
            Ordering::Less => below += sign,
            _ => above += sign,
        }
    }
    Ok((below, above))
}

/// `N_i(λ)`: addable minus removable `i`-nodes.
pub fn n_i(lambda: &Multipartition, r: &Multicharge, e: i64, i: i64) -> i64 {
    let count = |nodes: Vec<Node>| nodes.iter().filter(|g| g.residue(r, e) == i).count() as i64;
    count(lambda.addable_nodes()) - count(lambda.removable_nodes())
}

/// `N_∂(λ)`: the number of `0`-nodes.
pub fn n_zero_nodes(lambda: &Multipartition, r: &Multicharge, e: i64) -> i64 {
    lambda.nodes().iter().filter(|g| g.residue(r, e) == 0).count() as i64
}

/// Whether `Φ_s(n) = 𝒦^π_{𝒞_e}(n)` for the reordering permutation `π` of `s`.
pub fn matches_kleshchev(s: &Multicharge, e: i64, n: usize) -> Result<(bool, Option<Perm>)> {
    let Some(pi) = reordering_permutation(s) else {
        return Ok((false, None));
    };
    let same = uglov_set(s, e, n)? == kleshchev_set(s, &pi, e, n)?;
    Ok((same, Some(pi)))
}

/// Asymptoticity of `s` at rank `n`: there is a `π` with
/// `σ(Φ_{s^{σ⁻¹}}(n)) = 𝒦^π_{𝒞_e}(n)` for every `σ`.
///
/// The reordering permutation of `s` is tried first and is the `π` returned
/// whenever it works; other permutations only matter at small ranks (at
/// `n = 0` every charge is asymptotic, ties included). A failing answer
/// carries the reordering permutation when `s` has no ties.
///
/// The `σ = id` instance alone is [`matches_kleshchev`]; it is strictly
/// weaker (for `s = (1,0)`, `e = 3` it holds up to `n = 5` while the twist
/// by `(12)` already differs at `n = 2`).
pub fn is_asymptotic(s: &Multicharge, e: i64, n: usize) -> Result<(bool, Option<Perm>)> {
    let reordering = reordering_permutation(s);
    let mut twisted = Perm::all(s.level()).into_iter().map(|sigma| twisted_uglov_set(s, &sigma, e, n));
    let first = twisted.next().expect("at least the identity")?;
    for other in twisted {
        if other? != first {
            return Ok((false, reordering));
        }
    }
    let candidates = reordering.iter().cloned().chain(Perm::all(s.level()));
    for pi in candidates {
        if kleshchev_set(s, &pi, e, n)? == first {
            return Ok((true, Some(pi)));
        }
    }
    Ok((false, reordering))
}
