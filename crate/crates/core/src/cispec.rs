//! Complete-intersection specs and the purely combinatorial criteria on
//! their generator bidegrees.

use std::fmt;

use crate::combinat::{AmbientSpace, Bidegree};
use crate::error::{Error, Result};
use crate::koszul;
use crate::Int;

/// Generator bidegrees of a complete intersection in `P^m × P^n`.
///
/// The list is kept sorted lexicographically, so every predicate below is
/// independent of the order the generators were given in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CiSpec {
    space: AmbientSpace,
    bidegrees: Vec<Bidegree>,
}

/// Which family of inequalities a spec violates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AcmViolation {
    /// `Σ max(aᵢ − bᵢ, 0)` exceeds `m`.
    FirstFactorExcess { excess: i64, bound: u32 },
    /// `Σ max(bᵢ − aᵢ, 0)` exceeds `n`.
    SecondFactorExcess { excess: i64, bound: u32 },
    /// An ordering condition fails for `subset` against the generator
    /// `gamma` outside it. `clause` is 1 for the `a`-side inequality and 2
    /// for the `b`-side one.
    Ordering {
        subset: Vec<Bidegree>,
        gamma: Bidegree,
        clause: u8,
    },
}

impl fmt::Display for AcmViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AcmViolation::FirstFactorExcess { excess, bound } => write!(
                f,
                "regular-sequence criterion fails: sum of positive (a_i - b_i) is {excess} > m = {bound}"
            ),
            AcmViolation::SecondFactorExcess { excess, bound } => write!(
                f,
                "regular-sequence criterion fails: sum of positive (b_i - a_i) is {excess} > n = {bound}"
            ),
            AcmViolation::Ordering { subset, gamma, clause } => {
                let list = subset.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
                write!(f, "ordering condition {clause} fails for subset [{list}] against {gamma}")
            }
        }
    }
}

/// A distinct bidegree and how many generators share it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Group {
    pub bidegree: Bidegree,
    pub multiplicity: u32,
}

/// Generators grouped by distinct bidegree, in increasing lexicographic
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupedSpec {
    pub groups: Vec<Group>,
}

impl GroupedSpec {
    pub fn total_multiplicity(&self) -> u32 {
        self.groups.iter().map(|g| g.multiplicity).sum()
    }
}

impl CiSpec {
    /// Validates and canonicalizes a list of generator bidegrees.
    pub fn new(space: AmbientSpace, bidegrees: impl IntoIterator<Item = Bidegree>) -> Result<Self> {
        let mut bidegrees: Vec<Bidegree> = bidegrees.into_iter().collect();
        let max = space.dim() - 1;
        let c = bidegrees.len();
        if c == 0 || c > max as usize {
            return Err(Error::Codimension {
                c,
                m: space.m(),
                n: space.n(),
                max,
            });
        }
        for (i, &d) in bidegrees.iter().enumerate() {
            if !d.is_effective() {
                return Err(Error::NegativeEntry { index: i + 1, bidegree: d });
            }
            if d.a + d.b < 2 {
                return Err(Error::DegreeTooSmall { index: i + 1, bidegree: d });
            }
        }
        bidegrees.sort();
        Ok(Self { space, bidegrees })
    }

    /// Convenience constructor from raw dimensions and pairs.
    pub fn from_pairs(m: u32, n: u32, pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(AmbientSpace::new(m, n)?, pairs.iter().copied().map(Bidegree::from))
    }

    pub fn space(&self) -> AmbientSpace {
        self.space
    }

    pub fn bidegrees(&self) -> &[Bidegree] {
        &self.bidegrees
    }

    /// Number of generators `c`.
    pub fn codim(&self) -> usize {
        self.bidegrees.len()
    }

    /// Expected dimension `m + n − c`.
    pub fn dim(&self) -> usize {
        self.space.dim() as usize - self.codim()
    }

    /// `(Σaᵢ, Σbᵢ)`.
    pub fn total(&self) -> Bidegree {
        self.bidegrees.iter().sum()
    }

    /// The same spec on `P^n × P^m` with every bidegree reversed.
    pub fn swapped(&self) -> Self {
        let mut bidegrees: Vec<Bidegree> = self.bidegrees.iter().map(|d| d.swapped()).collect();
        bidegrees.sort();
        Self {
            space: self.space.swapped(),
            bidegrees,
        }
    }

    /// Run-length groups of the sorted generator list.
    pub fn group(&self) -> GroupedSpec {
        let mut groups: Vec<Group> = Vec::new();
        for &d in &self.bidegrees {
            match groups.last_mut() {
                Some(g) if g.bidegree == d => g.multiplicity += 1,
                _ => groups.push(Group {
                    bidegree: d,
                    multiplicity: 1,
                }),
            }
        }
        GroupedSpec { groups }
    }

    /// `(Σ max(aᵢ − bᵢ, 0), Σ max(bᵢ − aᵢ, 0))`.
    pub fn positive_excesses(&self) -> (i64, i64) {
        self.bidegrees.iter().fold((0, 0), |(x, y), d| {
            (x + (d.a - d.b).max(0), y + (d.b - d.a).max(0))
        })
    }

    /// The first failed regular-sequence inequality, if any.
    ///
    /// Every subset sum of `aᵢ − bᵢ` is bounded by the sum of its positive
    /// terms, so checking that extremal subset covers all of them.
    pub fn regular_sequence_violation(&self) -> Option<AcmViolation> {
        let (first, second) = self.positive_excesses();
        if first > i64::from(self.space.m()) {
            return Some(AcmViolation::FirstFactorExcess {
                excess: first,
                bound: self.space.m(),
            });
        }
        if second > i64::from(self.space.n()) {
            return Some(AcmViolation::SecondFactorExcess {
                excess: second,
                bound: self.space.n(),
            });
        }
        None
    }

    pub fn is_regular_sequence_criterion(&self) -> bool {
        self.regular_sequence_violation().is_none()
    }

    /// Set when the regular-sequence criterion is evaluated outside the
    /// range where it is known to be an equivalence: a factor `P^1` whose
    /// twist dominates the other one in some generator.
    pub fn regular_sequence_hypothesis_warning(&self) -> bool {
        (self.space.m() == 1 && self.bidegrees.iter().any(|d| d.a > d.b))
            || (self.space.n() == 1 && self.bidegrees.iter().any(|d| d.b > d.a))
    }

    /// The first failed ordering condition, found by brute force over every
    /// nonempty subset and every generator outside it.
    pub fn acm_order_violation(&self) -> Option<AcmViolation> {
        let c = self.codim();
        let m = i64::from(self.space.m());
        let n = i64::from(self.space.n());
        for mask in 1u64..(1u64 << c) {
            let mut sum = Bidegree::default();
            for (i, &d) in self.bidegrees.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    sum = sum + d;
                }
            }
            for (g, &gamma) in self.bidegrees.iter().enumerate() {
                if mask & (1 << g) != 0 {
                    continue;
                }
                let clause = if !(sum.a < gamma.a + m + 1 || gamma.b < sum.b) {
                    1
                } else if !(sum.b < gamma.b + n + 1 || gamma.a < sum.a) {
                    2
                } else {
                    continue;
                };
                let subset = (0..c)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.bidegrees[i])
                    .collect();
                return Some(AcmViolation::Ordering { subset, gamma, clause });
            }
        }
        None
    }

    pub fn is_acm_order(&self) -> bool {
        self.acm_order_violation().is_none()
    }

    /// Regular-sequence criterion first, then the ordering conditions.
    pub fn acm_violation(&self) -> Option<AcmViolation> {
        self.regular_sequence_violation()
            .or_else(|| self.acm_order_violation())
    }

    pub fn is_acm(&self) -> bool {
        self.acm_violation().is_none()
    }

    pub(crate) fn require_acm(&self) -> Result<()> {
        match self.acm_violation() {
            Some(v) => Err(Error::NotAcm(v)),
            None => Ok(()),
        }
    }

    pub(crate) fn require_regular_sequence(&self) -> Result<()> {
        match self.regular_sequence_violation() {
            Some(v) => Err(Error::NotAcm(v)),
            None => Ok(()),
        }
    }

    /// Twist of the dualizing sheaf: `(Σaᵢ − m − 1, Σbᵢ − n − 1)`.
    pub fn dualizing_bidegree(&self) -> Bidegree {
        self.total() - Bidegree::new(i64::from(self.space.m()) + 1, i64::from(self.space.n()) + 1)
    }

    /// A curve cut out by ample divisors whose dualizing sheaf is `O(1,1)`.
    pub fn is_canonical_ample(&self) -> bool {
        let total = self.total();
        self.codim() + 1 == self.space.dim() as usize
            && self.bidegrees.iter().all(|d| d.a >= 1 && d.b >= 1)
            && total.a == i64::from(self.space.m()) + 2
            && total.b == i64::from(self.space.n()) + 2
    }
}

impl fmt::Display for CiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = self.bidegrees.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        write!(f, "[{list}] in {}", self.space)
    }
}

/// Bidegrees of hypersurfaces whose Hilbert polynomial equals that of a
/// hypersurface of bidegree `d`.
///
/// Always contains `d`. The only other candidate is `(b + m − n, a)` (for
/// `a ≥ b`); it is kept when it is effective, differs from `d`, and its
/// Hilbert polynomial actually agrees.
pub fn hypersurface_hp_ambiguity(space: AmbientSpace, d: Bidegree) -> Result<Vec<Bidegree>> {
    if !d.is_effective() || d.a + d.b < 2 {
        return Err(Error::InvalidHypersurface(d));
    }
    if d.a < d.b {
        let swapped = hypersurface_hp_ambiguity(space.swapped(), d.swapped())?;
        return Ok(swapped.into_iter().map(Bidegree::swapped).collect());
    }
    let mut out = vec![d];
    let candidate = Bidegree::new(d.b + i64::from(space.m()) - i64::from(space.n()), d.a);
    if candidate.is_effective() && candidate != d {
        let target = koszul::koszul_polynomial::<Int>(space, &[d]);
        if koszul::koszul_polynomial::<Int>(space, &[candidate]) == target {
            out.push(candidate);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(m: u32, n: u32, pairs: &[(i64, i64)]) -> CiSpec {
        CiSpec::from_pairs(m, n, pairs).unwrap()
    }

    fn bd(list: &[(i64, i64)]) -> Vec<Bidegree> {
        list.iter().copied().map(Bidegree::from).collect()
    }

    /// Subset enumeration of the regular-sequence inequalities, as stated.
    fn regular_by_subsets(s: &CiSpec) -> bool {
        let c = s.codim();
        let (m, n) = (i64::from(s.space().m()), i64::from(s.space().n()));
        (1u64..(1 << c)).all(|mask| {
            let sum: Bidegree = (0..c).filter(|i| mask & (1 << i) != 0).map(|i| s.bidegrees()[i]).sum();
            sum.a - sum.b < m + 1 && sum.b - sum.a < n + 1
        })
    }

    #[test]
    fn make_spec_sorts() {
        assert_eq!(spec(1, 2, &[(3, 3), (1, 1)]).bidegrees(), bd(&[(1, 1), (3, 3)]));
    }

    #[test]
    fn make_spec_rejections() {
        assert!(matches!(
            CiSpec::from_pairs(1, 2, &[(1, 1), (1, 2), (2, 1)]),
            Err(Error::Codimension { c: 3, max: 2, .. })
        ));
        assert!(matches!(CiSpec::from_pairs(1, 2, &[]), Err(Error::Codimension { c: 0, .. })));
        assert!(matches!(
            CiSpec::from_pairs(1, 2, &[(1, 1), (-1, 3)]),
            Err(Error::NegativeEntry { index: 2, .. })
        ));
        assert!(matches!(
            CiSpec::from_pairs(2, 2, &[(1, 0)]),
            Err(Error::DegreeTooSmall { index: 1, .. })
        ));
        assert!(matches!(CiSpec::from_pairs(0, 2, &[(1, 1)]), Err(Error::InvalidAmbient { .. })));
        assert!(CiSpec::from_pairs(1, 1, &[(2, 0)]).is_ok());
    }

    #[test]
    fn grouping() {
        let g = spec(2, 2, &[(1, 1), (2, 2), (1, 1)]).group();
        assert_eq!(
            g.groups,
            vec![
                Group { bidegree: Bidegree::new(1, 1), multiplicity: 2 },
                Group { bidegree: Bidegree::new(2, 2), multiplicity: 1 },
            ]
        );
        assert_eq!(spec(2, 2, &[(1, 1), (1, 2), (2, 1)]).group().groups.len(), 3);
        let g = spec(1, 3, &[(1, 2), (1, 2)]).group();
        assert_eq!(g.groups, vec![Group { bidegree: Bidegree::new(1, 2), multiplicity: 2 }]);
        assert_eq!(g.total_multiplicity(), 2);
    }

    #[test]
    fn regular_sequence_examples() {
        assert!(!spec(1, 1, &[(2, 0)]).is_regular_sequence_criterion());
        assert!(spec(1, 2, &[(1, 1), (3, 3)]).is_regular_sequence_criterion());
        assert!(spec(1, 2, &[(3, 2), (0, 2)]).is_regular_sequence_criterion());
        assert_eq!(
            spec(1, 1, &[(2, 0)]).regular_sequence_violation(),
            Some(AcmViolation::FirstFactorExcess { excess: 2, bound: 1 })
        );
    }

    #[test]
    fn hypothesis_warning() {
        assert!(spec(1, 2, &[(3, 2), (0, 2)]).regular_sequence_hypothesis_warning());
        assert!(!spec(1, 2, &[(2, 2), (1, 2)]).regular_sequence_hypothesis_warning());
        assert!(!spec(2, 2, &[(1, 1), (1, 2), (2, 1)]).regular_sequence_hypothesis_warning());
    }

    #[test]
    fn acm_order_examples() {
        assert!(!spec(1, 2, &[(3, 2), (0, 2)]).is_acm_order());
        assert!(spec(1, 2, &[(2, 2), (1, 2)]).is_acm_order());
        assert!(spec(3, 3, &[(5, 0)]).is_acm_order());
        match spec(1, 2, &[(3, 2), (0, 2)]).acm_order_violation() {
            Some(AcmViolation::Ordering { subset, gamma, clause }) => {
                assert_eq!(subset, bd(&[(3, 2)]));
                assert_eq!(gamma, Bidegree::new(0, 2));
                assert_eq!(clause, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn acm_examples() {
        assert!(spec(1, 2, &[(1, 1), (3, 3)]).is_acm());
        assert!(!spec(1, 2, &[(3, 2), (0, 2)]).is_acm());
        assert!(!spec(1, 1, &[(2, 0)]).is_acm());
    }

    #[test]
    fn dualizing_examples() {
        assert_eq!(spec(1, 2, &[(1, 1), (3, 3)]).dualizing_bidegree(), Bidegree::new(2, 1));
        assert_eq!(spec(2, 2, &[(1, 1), (1, 2), (2, 1)]).dualizing_bidegree(), Bidegree::new(1, 1));
        assert_eq!(spec(1, 1, &[(3, 3)]).dualizing_bidegree(), Bidegree::new(1, 1));
    }

    #[test]
    fn canonical_ample_examples() {
        assert!(spec(2, 2, &[(1, 1), (1, 2), (2, 1)]).is_canonical_ample());
        assert!(!spec(1, 2, &[(1, 1), (3, 3)]).is_canonical_ample());
        assert!(spec(2, 2, &[(1, 1), (1, 1), (2, 2)]).is_canonical_ample());
        // Not ample: a (0,2) divisor.
        assert!(!spec(1, 4, &[(1, 1), (1, 1), (0, 2), (1, 2)]).is_canonical_ample());
        // Right sums but a surface, not a curve.
        assert!(!spec(2, 2, &[(2, 2), (2, 2)]).is_canonical_ample());
    }

    #[test]
    fn hypersurface_examples() {
        let s = AmbientSpace::new(1, 2).unwrap();
        assert_eq!(hypersurface_hp_ambiguity(s, Bidegree::new(3, 3)).unwrap(), bd(&[(3, 3)]));
        assert_eq!(hypersurface_hp_ambiguity(s, Bidegree::new(2, 1)).unwrap(), bd(&[(2, 1), (0, 2)]));
        assert_eq!(hypersurface_hp_ambiguity(s, Bidegree::new(3, 1)).unwrap(), bd(&[(3, 1)]));
        // a < b goes through the swap.
        assert_eq!(
            hypersurface_hp_ambiguity(s.swapped(), Bidegree::new(1, 2)).unwrap(),
            bd(&[(1, 2), (2, 0)])
        );
        assert!(hypersurface_hp_ambiguity(s, Bidegree::new(1, 0)).is_err());
        assert!(hypersurface_hp_ambiguity(s, Bidegree::new(-1, 4)).is_err());
    }

    #[test]
    fn hypersurface_equal_factors_pairs_with_transpose() {
        let s = AmbientSpace::new(2, 2).unwrap();
        assert_eq!(hypersurface_hp_ambiguity(s, Bidegree::new(3, 1)).unwrap(), bd(&[(3, 1), (1, 3)]));
    }

    fn arb_spec() -> impl Strategy<Value = CiSpec> {
        (1u32..4, 1u32..4)
            .prop_flat_map(|(m, n)| {
                let max = (m + n - 1) as usize;
                (
                    Just(m),
                    Just(n),
                    prop::collection::vec((0i64..5, 0i64..5), 1..=max.min(6)),
                )
            })
            .prop_filter_map("a + b >= 2", |(m, n, pairs)| CiSpec::from_pairs(m, n, &pairs).ok())
    }

    proptest! {
        #[test]
        fn closed_form_matches_subsets(s in arb_spec()) {
            prop_assert_eq!(s.is_regular_sequence_criterion(), regular_by_subsets(&s));
        }

        #[test]
        fn predicates_ignore_input_order(s in arb_spec(), seed in any::<u64>()) {
            let mut pairs: Vec<Bidegree> = s.bidegrees().to_vec();
            // deterministic shuffle
            let len = pairs.len();
            for i in (1..len).rev() {
                let j = (seed.rotate_left(i as u32) % (i as u64 + 1)) as usize;
                pairs.swap(i, j);
            }
            let t = CiSpec::new(s.space(), pairs).unwrap();
            prop_assert_eq!(&t, &s);
            prop_assert_eq!(t.is_acm(), s.is_acm());
            prop_assert_eq!(t.is_acm_order(), s.is_acm_order());
            prop_assert_eq!(t.is_regular_sequence_criterion(), s.is_regular_sequence_criterion());
            prop_assert_eq!(t.is_canonical_ample(), s.is_canonical_ample());
            prop_assert_eq!(t.dualizing_bidegree(), s.dualizing_bidegree());
        }

        #[test]
        fn swap_symmetry(s in arb_spec()) {
            let w = s.swapped();
            prop_assert_eq!(w.is_acm(), s.is_acm());
            prop_assert_eq!(w.is_acm_order(), s.is_acm_order());
            prop_assert_eq!(w.is_regular_sequence_criterion(), s.is_regular_sequence_criterion());
            prop_assert_eq!(w.is_canonical_ample(), s.is_canonical_ample());
            prop_assert_eq!(w.dualizing_bidegree(), s.dualizing_bidegree().swapped());
            // The two inequality families trade places.
            let (x, y) = s.positive_excesses();
            prop_assert_eq!(w.positive_excesses(), (y, x));
        }

        #[test]
        fn hypersurface_pairs_share_polynomial(m in 1u32..5, n in 1u32..5, a in 0i64..8, b in 0i64..8) {
            prop_assume!(a + b >= 2);
            let s = AmbientSpace::new(m, n).unwrap();
            let d = Bidegree::new(a, b);
            let out = hypersurface_hp_ambiguity(s, d).unwrap();
            prop_assert_eq!(out[0], d);
            prop_assert!(out.len() <= 2);
            let p = koszul::koszul_polynomial::<Int>(s, &[d]);
            for &e in &out {
                prop_assert_eq!(&koszul::koszul_polynomial::<Int>(s, &[e]), &p);
            }
            // Stated exclusions for a >= b.
            if a >= b && (a == b || (m < n && a - b > 0 && a - b != i64::from(m))) {
                prop_assert_eq!(out.len(), 1);
            }
        }
    }
}
