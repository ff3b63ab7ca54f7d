//! Dense univariate polynomials in `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Num, Signed, Zero};

/// A polynomial stored by ascending power, without trailing zeros.
///
/// The zero polynomial has an empty coefficient list and no degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Clone + Zero> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients by ascending power of `t`.
    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> F {
        self.coeffs.get(power).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading_coefficient(&self) -> Option<&F> {
        self.coeffs.last()
    }
}

impl<F: Clone + Num> Polynomial<F> {
    /// The monomial `t`.
    pub fn t() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|v| v.clone() * c.clone()).collect())
    }
}

impl<F: Clone + Num> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<F: Clone + Num> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<F: Clone + Num> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<F: Clone + Num + Neg<Output = F>> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::new(self.coeffs.iter().cloned().map(Neg::neg).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<F: Clone + Num> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Renders like `2t^2 + 3t + 1` or `10t - 5`. Non-integral coefficients
/// are parenthesized: `(5/2)t^2`.
impl<F: Clone + Num + Signed + fmt::Display> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;

            let magnitude = c.abs();
            let text = magnitude.to_string();
            let show_coeff = power == 0 || !magnitude.is_one();
            if show_coeff {
                if text.contains('/') && power > 0 {
                    write!(f, "({text})")?;
                } else {
                    f.write_str(&text)?;
                }
            }
            match power {
                0 => {}
                1 => f.write_str("t")?,
                p => write!(f, "t^{p}")?,
            }
        }
        Ok(())
    }
}
