//! Graded pieces of the ideal, Hilbert functions and Hilbert polynomials by
//! inclusion–exclusion over the Koszul complex.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::cispec::CiSpec;
use crate::combinat::{binomial_polynomial, h0_dim, AmbientSpace, Bidegree};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::ExactInt;

/// Signed counts of subset sums: for each `(A, B)` the number of even-size
/// subsets minus the number of odd-size subsets with that bidegree sum.
fn signed_subset_sums(gens: &[Bidegree]) -> BTreeMap<Bidegree, i64> {
    let mut sums: BTreeMap<Bidegree, i64> = BTreeMap::new();
    sums.insert(Bidegree::default(), 1);
    for &g in gens {
        let mut next = sums.clone();
        for (&d, &count) in &sums {
            *next.entry(d + g).or_insert(0) -= count;
        }
        next.retain(|_, v| *v != 0);
        sums = next;
    }
    sums
}

/// Koszul count of `dim H^0(I(twist))` with no ACM check.
pub(crate) fn koszul_ideal_h0<T: ExactInt>(space: AmbientSpace, gens: &[Bidegree], twist: Bidegree) -> T {
    // The empty subset contributes h0(twist) with sign +, the ideal is what
    // the nonempty subsets remove from it.
    signed_subset_sums(gens)
        .into_iter()
        .filter(|(d, _)| *d != Bidegree::default())
        .fold(T::zero(), |acc, (d, count)| {
            acc - T::from_int(count) * h0_dim::<T>(space, twist - d)
        })
}

/// `Σ_S (−1)^{|S|} binomial(m + t − A_S, m) · binomial(n + t − B_S, n)`.
pub(crate) fn koszul_polynomial<T: ExactInt>(space: AmbientSpace, gens: &[Bidegree]) -> Polynomial<Ratio<T>> {
    let m = i64::from(space.m());
    let n = i64::from(space.n());
    signed_subset_sums(gens)
        .into_iter()
        .fold(Polynomial::zero(), |acc, (d, count)| {
            let term = &binomial_polynomial::<T>(space.m(), &T::from_int(m - d.a))
                * &binomial_polynomial::<T>(space.n(), &T::from_int(n - d.b));
            &acc + &term.scale(&Ratio::from_integer(T::from_int(count)))
        })
}

/// `dim H^0(X, I(twist))` for the ideal of generic forms of the given
/// bidegrees.
///
/// The generators must form an ACM spec; an empty prefix is the zero ideal.
pub fn ideal_h0<T: ExactInt>(space: AmbientSpace, prefix: &[Bidegree], twist: Bidegree) -> Result<T> {
    if prefix.is_empty() {
        return Ok(T::zero());
    }
    let spec = CiSpec::new(space, prefix.iter().copied())?;
    spec.require_acm()?;
    Ok(koszul_ideal_h0(space, spec.bidegrees(), twist))
}

/// `h^0(O_Y(d))` on the diagonal twist `(d, d)`.
pub fn hilbert_function<T: ExactInt>(spec: &CiSpec, d: i64) -> Result<T> {
    spec.require_acm()?;
    let twist = Bidegree::diagonal(d);
    Ok(h0_dim::<T>(spec.space(), twist) - koszul_ideal_h0::<T>(spec.space(), spec.bidegrees(), twist))
}

/// Hilbert polynomial of the complete intersection under the Segre
/// embedding, in the variable `t`.
///
/// Needs only the regular-sequence criterion: the alternating sum is the
/// Euler characteristic of the Koszul resolution and does not depend on the
/// ordering conditions.
pub fn hilbert_polynomial<T: ExactInt>(spec: &CiSpec) -> Result<Polynomial<Ratio<T>>> {
    spec.require_regular_sequence()?;
    let p = koszul_polynomial::<T>(spec.space(), spec.bidegrees());
    for x in 0..=i64::from(spec.space().dim()) + 2 {
        let v = p.eval(&Ratio::from_integer(T::from_int(x)));
        assert!(v.is_integer(), "Hilbert polynomial {p:?} is not integral at {x}");
    }
    Ok(p)
}

/// Genus of a one-dimensional complete intersection, read off
/// `p(t) = D·t + 1 − g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveGenus<T> {
    pub genus: T,
    /// Degree `D` under the Segre embedding.
    pub degree: T,
    /// Dualizing bidegree is `(1,1)`.
    pub canonical: bool,
    /// `D = 2g − 2`. Always true when `canonical` is.
    pub degree_is_2g_minus_2: bool,
}

pub fn genus_of_curve<T: ExactInt>(spec: &CiSpec) -> Result<CurveGenus<T>> {
    let p = hilbert_polynomial::<T>(spec)?;
    if p.degree() != Some(1) {
        return Err(Error::NotACurve(p.degree().unwrap_or(0)));
    }
    let degree = p.coeff(1);
    let constant = p.coeff(0);
    assert!(degree.is_integer() && constant.is_integer());
    let (degree, constant) = (degree.to_integer(), constant.to_integer());
    let genus = T::one() - constant;
    let two = T::from_int(2);
    Ok(CurveGenus {
        degree_is_2g_minus_2: degree == two.clone() * genus.clone() - two,
        canonical: spec.dualizing_bidegree() == Bidegree::new(1, 1),
        degree,
        genus,
    })
}

/// Smallest `d` from which the Hilbert function is guaranteed to agree
/// with the polynomial: `Σaᵢ + Σbᵢ`.
pub fn stabilization_bound(spec: &CiSpec) -> i64 {
    let total = spec.total();
    total.a + total.b
}

/// Compares the Hilbert function with the Hilbert polynomial on
/// `d_min..=d_max`.
pub fn hilbert_function_consistency<T: ExactInt>(spec: &CiSpec, d_min: i64, d_max: i64) -> Result<bool> {
    let bound = stabilization_bound(spec);
    if d_min < bound {
        return Err(Error::BelowStabilization { d_min, bound });
    }
    let p = hilbert_polynomial::<T>(spec)?;
    for d in d_min..=d_max {
        let hf = hilbert_function::<T>(spec, d)?;
        if Ratio::from_integer(hf) != p.eval(&Ratio::from_integer(T::from_int(d))) {
            return Ok(false);
        }
    }
    Ok(true)
}
