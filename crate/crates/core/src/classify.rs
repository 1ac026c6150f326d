//! The regular / asymptotic / singular trichotomy for `(m, r, e, n)` and the
//! canonical basic set it prescribes.

use std::collections::BTreeSet;

use crate::crystal::{is_asymptotic, kleshchev_set, twisted_uglov_set, uglov_set};
use crate::error::Result;
use crate::multicharge::{adapted_multicharge, adapted_permutation, hyperplane_witnesses, in_domain, Multicharge};
use crate::multipartition::Multipartition;
use crate::perm::Perm;
use crate::symbol::WeightSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// `m ∉ 𝒫`.
    pub regular: bool,
    /// The adapted charge is asymptotic at rank `n`.
    pub asymptotic: bool,
    /// `m ∈ 𝒫` and the adapted charge is not asymptotic.
    pub singular: bool,
    pub adapted_charge: Multicharge,
    /// The hyperplanes `𝒫_{i,j}` containing `m`, as 1-based pairs.
    pub hyperplanes: Vec<(usize, usize)>,
    /// Present when `m` is regular.
    pub adapted_permutation: Option<Perm>,
    /// Present when the adapted charge is asymptotic.
    pub reordering_permutation: Option<Perm>,
    /// Absent exactly when `m` is singular.
    pub basic_set: Option<BTreeSet<Multipartition>>,
}

impl Classification {
    pub fn class_name(&self) -> &'static str {
        match (self.regular, self.asymptotic) {
            (true, true) => "regular+asymptotic",
            (true, false) => "regular",
            (false, true) => "asymptotic",
            (false, false) => "singular",
        }
    }
}

/// Classifies `m` for `(H, r)` at rank `n` and computes the canonical basic
/// set with respect to `≪_m` when one exists:
/// `σ(Φ_{s^{σ⁻¹}}(n))` for regular `m`, `𝒦^π_{𝒞_e}(n)` for asymptotic
/// `m ∈ 𝒫`, none for singular `m`.
pub fn classify(m: &WeightSequence, r: &Multicharge, e: i64, n: usize) -> Result<Classification> {
    let s = adapted_multicharge(m, r, e)?;
    let hyperplanes = hyperplane_witnesses(m, r, e)?;
    let (asymptotic, pi) = is_asymptotic(&s, e, n)?;
    let pi = pi.filter(|_| asymptotic);
    let mut out = Classification {
        regular: hyperplanes.is_empty(),
        asymptotic,
        singular: false,
        adapted_charge: s.clone(),
        hyperplanes,
        adapted_permutation: None,
        reordering_permutation: pi.clone(),
        basic_set: None,
    };
    if out.regular {
        let sigma = adapted_permutation(m, &s, e)?;
        out.basic_set = Some(twisted_uglov_set(&s, &sigma, e, n)?);
        out.adapted_permutation = Some(sigma);
    } else if let Some(pi) = pi {
        out.basic_set = Some(kleshchev_set(&s, &pi, e, n)?);
    } else {
        out.singular = true;
    }
    Ok(out)
}

pub fn basic_set(m: &WeightSequence, r: &Multicharge, e: i64, n: usize) -> Result<Option<BTreeSet<Multipartition>>> {
    Ok(classify(m, r, e, n)?.basic_set)
}

/// Two charges of one class `𝒞_e` whose domains both contain `m`, and
/// whether their Uglov sets agree rank by rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainOverlap {
    pub in_domain_r: bool,
    pub in_domain_s: bool,
    /// `(n, Φ_r(n) == Φ_s(n))` for `n = 0..=max_n`.
    pub agreement: Vec<(usize, bool)>,
}

pub fn domain_overlap(
    r: &Multicharge,
    s: &Multicharge,
    m: &WeightSequence,
    e: i64,
    max_n: usize,
) -> Result<DomainOverlap> {
    let agreement = (0..=max_n)
        .map(|n| Ok((n, uglov_set(r, e, n)? == uglov_set(s, e, n)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DomainOverlap { in_domain_r: in_domain(m, r, e)?, in_domain_s: in_domain(m, s, e)?, agreement })
}
