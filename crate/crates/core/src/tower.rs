//! Hilbert-scheme dimension as an iterated Grassmannian bundle, and the
//! moduli dimension after dividing by `PGL(m+1) × PGL(n+1)`.
//!
//! Level `r` chooses an `m_r`-dimensional space of forms of bidegree
//! `(α_r, β_r)` modulo the ideal of the previous levels. Its fiber is the
//! Grassmannian `Gr(m_r, e_r)` where
//!
//! ```text
//! e_r = h0(O(α_r, β_r)) − h0(I_{Y_{r−1}}(α_r, β_r))
//! ```
//!
//! so it contributes `m_r (e_r − m_r)` to the total.

use crate::cispec::{CiSpec, Group};
use crate::combinat::{h0_dim, AmbientSpace, Bidegree};
use crate::error::{Error, Result};
use crate::koszul::koszul_ideal_h0;
use crate::scalar::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level<T> {
    pub bidegree: Bidegree,
    pub multiplicity: u32,
    /// `h0(X, O(α_r, β_r))`.
    pub ambient_sections: T,
    /// `h0(X, I_{Y_{r−1}}(α_r, β_r))`.
    pub kernel_dim: T,
    /// `e_r`, the rank of the bundle of forms restricted to `Y_{r−1}`.
    pub rank: T,
    pub fiber_dim: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tower<T> {
    pub levels: Vec<Level<T>>,
    pub hilbert_dim: T,
    /// `m² + 2m + n² + 2n`.
    pub group_dim: T,
    pub moduli_dim: T,
    pub stabilizer_finite: bool,
}

/// `dim PGL(m+1) × PGL(n+1)`.
pub fn group_dimension<T: ExactInt>(space: AmbientSpace) -> T {
    let (m, n) = (i64::from(space.m()), i64::from(space.n()));
    T::from_int(m * m + 2 * m + n * n + 2 * n)
}

/// Finite automorphisms: `Σaᵢ − m − 1 = Σbᵢ − n − 1 > 0`.
pub fn stabilizer_is_finite(spec: &CiSpec) -> bool {
    let w = spec.dualizing_bidegree();
    w.a == w.b && w.a > 0
}

/// The tower over the lexicographically ordered groups.
pub fn hilbert_scheme_dimension<T: ExactInt>(spec: &CiSpec) -> Result<Tower<T>> {
    spec.require_acm()?;
    build(spec, &spec.group().groups)
}

/// The tower over a caller-chosen order of the distinct bidegrees.
///
/// The order must be a linear extension of the componentwise partial order:
/// no bidegree may come after one it divides, otherwise later forms could
/// be absorbed into earlier ones and the count overshoots.
pub fn hilbert_scheme_dimension_in_order<T: ExactInt>(spec: &CiSpec, order: &[Bidegree]) -> Result<Tower<T>> {
    spec.require_acm()?;
    let groups = spec.group().groups;
    if order.len() != groups.len() {
        return Err(Error::NotAGroupPermutation);
    }
    let mut ordered = Vec::with_capacity(groups.len());
    for (i, &d) in order.iter().enumerate() {
        if order[..i].contains(&d) {
            return Err(Error::NotAGroupPermutation);
        }
        let g = groups
            .iter()
            .find(|g| g.bidegree == d)
            .ok_or(Error::NotAGroupPermutation)?;
        ordered.push(*g);
    }
    for (i, earlier) in ordered.iter().enumerate() {
        for later in &ordered[i + 1..] {
            if later.bidegree.divides(earlier.bidegree) {
                return Err(Error::InadmissibleOrder {
                    earlier: earlier.bidegree,
                    later: later.bidegree,
                });
            }
        }
    }
    build(spec, &ordered)
}

fn build<T: ExactInt>(spec: &CiSpec, groups: &[Group]) -> Result<Tower<T>> {
    let space = spec.space();
    let mut previous: Vec<Bidegree> = Vec::new();
    let mut levels = Vec::with_capacity(groups.len());
    let mut hilbert_dim = T::zero();
    for (r, g) in groups.iter().enumerate() {
        let ambient_sections = h0_dim::<T>(space, g.bidegree);
        let kernel_dim = koszul_ideal_h0::<T>(space, &previous, g.bidegree);
        let rank = ambient_sections.clone() - kernel_dim.clone();
        let mult = T::from_int(i64::from(g.multiplicity));
        if rank < mult {
            return Err(Error::InfeasibleLevel {
                level: r + 1,
                bidegree: g.bidegree,
                rank: rank.to_string(),
                multiplicity: g.multiplicity,
            });
        }
        let fiber_dim = mult.clone() * (rank.clone() - mult);
        hilbert_dim = hilbert_dim + fiber_dim.clone();
        levels.push(Level {
            bidegree: g.bidegree,
            multiplicity: g.multiplicity,
            ambient_sections,
            kernel_dim,
            rank,
            fiber_dim,
        });
        previous.extend(std::iter::repeat_n(g.bidegree, g.multiplicity as usize));
    }
    let group_dim = group_dimension::<T>(space);
    Ok(Tower {
        levels,
        moduli_dim: hilbert_dim.clone() - group_dim.clone(),
        hilbert_dim,
        group_dim,
        stabilizer_finite: stabilizer_is_finite(spec),
    })
}

/// `dim H − dim G`.
pub fn moduli_dimension<T: ExactInt>(spec: &CiSpec) -> Result<T> {
    hilbert_scheme_dimension::<T>(spec).map(|t| t.moduli_dim)
}
