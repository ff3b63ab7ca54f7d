//! Binomials, section counts and line-bundle cohomology on `P^m × P^n`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Neg, Sub};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::ExactInt;

/// The product `P^m × P^n`, both factors of dimension at least one.
///
/// No ordering between `m` and `n` is assumed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AmbientSpace {
    m: u32,
    n: u32,
}

impl AmbientSpace {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidAmbient { m, n });
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `m + n`, the dimension of the product.
    pub fn dim(&self) -> u32 {
        self.m + self.n
    }

    /// `P^n × P^m`.
    pub fn swapped(&self) -> Self {
        Self { m: self.n, n: self.m }
    }
}

impl fmt::Display for AmbientSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P^{} x P^{}", self.m, self.n)
    }
}

/// A twist `(a, b)`. Ordered lexicographically, `a` first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bidegree {
    pub a: i64,
    pub b: i64,
}

impl Bidegree {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn swapped(self) -> Self {
        Self { a: self.b, b: self.a }
    }

    /// Both entries nonnegative.
    pub fn is_effective(self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    /// Componentwise `self <= other`.
    pub fn divides(self, other: Bidegree) -> bool {
        self.a <= other.a && self.b <= other.b
    }

    /// The diagonal twist `(d, d)`.
    pub const fn diagonal(d: i64) -> Self {
        Self { a: d, b: d }
    }
}

impl From<(i64, i64)> for Bidegree {
    fn from((a, b): (i64, i64)) -> Self {
        Self { a, b }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Bidegree {
    type Output = Bidegree;
    fn neg(self) -> Bidegree {
        Bidegree::new(-self.a, -self.b)
    }
}

impl Sum for Bidegree {
    fn sum<I: Iterator<Item = Bidegree>>(iter: I) -> Bidegree {
        iter.fold(Bidegree::default(), Add::add)
    }
}

impl<'a> Sum<&'a Bidegree> for Bidegree {
    fn sum<I: Iterator<Item = &'a Bidegree>>(iter: I) -> Bidegree {
        iter.copied().sum()
    }
}

/// Generalized binomial `x (x-1) ⋯ (x-k+1) / k!`, exact for any integer `x`.
pub fn binomial<T: ExactInt>(x: &T, k: u32) -> T {
    let mut acc = T::one();
    let mut factor = x.clone();
    for i in 1..=k {
        // acc * factor is i times the previous generalized binomial, so the
        // division is exact.
        acc = acc * factor.clone() / T::from_int(i64::from(i));
        if acc.is_zero() {
            break;
        }
        factor = factor - T::one();
    }
    acc
}

/// `dim H^0(X, O(a,b))`: zero unless both twists are nonnegative.
pub fn h0_dim<T: ExactInt>(space: AmbientSpace, d: Bidegree) -> T {
    if !d.is_effective() {
        return T::zero();
    }
    let m = i64::from(space.m);
    let n = i64::from(space.n);
    binomial(&T::from_int(m + d.a), space.m) * binomial(&T::from_int(n + d.b), space.n)
}

/// The single nonzero cohomology group of `O(e)` on `P^k`, as `(index, dim)`.
fn projective_space_cohomology<T: ExactInt>(k: u32, e: i64) -> Option<(u32, T)> {
    let ki = i64::from(k);
    if e >= 0 {
        Some((0, binomial(&T::from_int(ki + e), k)))
    } else if e <= -ki - 1 {
        Some((k, binomial(&T::from_int(-e - 1), k)))
    } else {
        None
    }
}

/// Dimensions `h^0 … h^{m+n}` of a line bundle on `P^m × P^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cohomology<T> {
    dims: Vec<T>,
}

impl<T: ExactInt> Cohomology<T> {
    pub fn dims(&self) -> &[T] {
        &self.dims
    }

    /// `h^i`, zero beyond the top degree.
    pub fn h(&self, i: usize) -> T {
        self.dims.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn euler_characteristic(&self) -> T {
        self.dims
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (i, h)| {
                if i % 2 == 0 {
                    acc + h.clone()
                } else {
                    acc - h.clone()
                }
            })
    }

    pub fn into_dims(self) -> Vec<T> {
        self.dims
    }
}

/// All cohomology of `O_X(a,b)` through the Künneth formula.
///
/// When `m = n` the two middle contributions land on the same index and
/// add up.
pub fn line_bundle_cohomology<T: ExactInt>(space: AmbientSpace, d: Bidegree) -> Cohomology<T> {
    let mut dims = vec![T::zero(); space.dim() as usize + 1];
    if let (Some((r, hr)), Some((s, hs))) = (
        projective_space_cohomology::<T>(space.m, d.a),
        projective_space_cohomology::<T>(space.n, d.b),
    ) {
        let i = (r + s) as usize;
        dims[i] = dims[i].clone() + hr * hs;
    }
    Cohomology { dims }
}

pub fn euler_characteristic<T: ExactInt>(space: AmbientSpace, d: Bidegree) -> T {
    line_bundle_cohomology::<T>(space, d).euler_characteristic()
}

/// `binomial(t + shift, k)` as a polynomial in `t`.
pub fn binomial_polynomial<T: ExactInt>(k: u32, shift: &T) -> Polynomial<Ratio<T>> {
    let mut acc = Polynomial::constant(Ratio::from_integer(T::one()));
    let mut root = shift.clone();
    for i in 1..=k {
        let linear = Polynomial::new(vec![Ratio::from_integer(root.clone()), Ratio::from_integer(T::one())]);
        acc = &acc * &linear;
        acc = acc.scale(&Ratio::new(T::one(), T::from_int(i64::from(i))));
        root = root - T::one();
    }
    acc
}
