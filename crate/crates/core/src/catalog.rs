//! Canonical curves cut out by ample divisors.
//!
//! A complete-intersection curve with dualizing sheaf `O(1,1)` has
//! `c = m + n − 1` generators of bidegree `(aᵢ, bᵢ)`, all `aᵢ, bᵢ ≥ 1`,
//! with `Σaᵢ = m + 2` and `Σbᵢ = n + 2`.

use std::collections::BTreeSet;

use crate::cispec::CiSpec;
use crate::combinat::{AmbientSpace, Bidegree};
use crate::koszul::genus_of_curve;
use crate::scalar::ExactInt;
use crate::tower::hilbert_scheme_dimension;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry<T> {
    pub spec: CiSpec,
    pub genus: T,
    pub hilbert_dim: T,
    pub moduli_dim: T,
    pub stabilizer_finite: bool,
}

/// All ordered tuples of `parts` positive integers summing to `total`.
fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..=total - (parts as i64 - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every canonical ample ACM profile on `space`, annotated, sorted by
/// genus and then by bidegree list.
pub fn enumerate_canonical<T: ExactInt>(space: AmbientSpace) -> Vec<Entry<T>> {
    let (m, n) = (i64::from(space.m()), i64::from(space.n()));
    let c = (m + n - 1) as usize;
    let a_parts = compositions(m + 2, c);
    let b_parts = compositions(n + 2, c);

    let mut multisets: BTreeSet<Vec<Bidegree>> = BTreeSet::new();
    for a in &a_parts {
        for b in &b_parts {
            let mut list: Vec<Bidegree> = a.iter().zip(b).map(|(&x, &y)| Bidegree::new(x, y)).collect();
            list.sort();
            multisets.insert(list);
        }
    }

    let mut entries: Vec<Entry<T>> = multisets
        .into_iter()
        .filter_map(|list| CiSpec::new(space, list).ok())
        .filter(CiSpec::is_acm)
        .map(|spec| {
            let genus = genus_of_curve::<T>(&spec).expect("canonical profile is a curve").genus;
            let tower = hilbert_scheme_dimension::<T>(&spec).expect("ACM profile has a tower");
            Entry {
                genus,
                hilbert_dim: tower.hilbert_dim,
                moduli_dim: tower.moduli_dim,
                stabilizer_finite: tower.stabilizer_finite,
                spec,
            }
        })
        .collect();
    entries.sort_by(|x, y| {
        x.genus
            .cmp(&y.genus)
            .then_with(|| x.spec.bidegrees().cmp(y.spec.bidegrees()))
    });
    entries
}

/// On a square ambient, keep one entry per pair related by swapping the
/// factors: the one whose bidegree list is smaller. Other ambients are
/// returned unchanged.
pub fn merge_swap_equivalent<T>(entries: Vec<Entry<T>>) -> Vec<Entry<T>> {
    let mut seen: BTreeSet<Vec<Bidegree>> = BTreeSet::new();
    entries
        .into_iter()
        .filter(|e| {
            let space = e.spec.space();
            if space.m() != space.n() {
                return true;
            }
            let own = e.spec.bidegrees().to_vec();
            let other = e.spec.swapped().bidegrees().to_vec();
            let key = own.min(other);
            seen.insert(key)
        })
        .collect()
}
