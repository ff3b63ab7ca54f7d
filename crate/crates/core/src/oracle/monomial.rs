//! Monomial bases of bigraded pieces of `k[x_0..x_m, y_0..y_n]`.

use std::collections::HashMap;

use crate::combinat::{AmbientSpace, Bidegree};
use crate::error::{Error, Result};

/// All monomials of one bidegree, as exponent vectors of length
/// `m + 1 + n + 1` (the `x` exponents followed by the `y` exponents).
///
/// Ordered lexicographically with the highest power of `x_0` first.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    space: AmbientSpace,
    bidegree: Bidegree,
    exponents: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

/// Exponent vectors of length `vars` summing to `deg`, lex-descending.
fn compositions(vars: usize, deg: u32) -> Vec<Vec<u32>> {
    if vars == 1 {
        return vec![vec![deg]];
    }
    let mut out = Vec::new();
    for first in (0..=deg).rev() {
        for mut rest in compositions(vars - 1, deg - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl MonomialBasis {
    pub fn new(space: AmbientSpace, bidegree: Bidegree) -> Result<Self> {
        if !bidegree.is_effective() {
            return Err(Error::NegativeBidegree(bidegree));
        }
        let xs = compositions(space.m() as usize + 1, bidegree.a as u32);
        let ys = compositions(space.n() as usize + 1, bidegree.b as u32);
        let exponents: Vec<Vec<u32>> = xs
            .iter()
            .flat_map(|x| ys.iter().map(move |y| x.iter().chain(y).copied().collect()))
            .collect();
        let index = exponents.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        Ok(Self {
            space,
            bidegree,
            exponents,
            index,
        })
    }

    pub fn space(&self) -> AmbientSpace {
        self.space
    }

    pub fn bidegree(&self) -> Bidegree {
        self.bidegree
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn position(&self, exponent: &[u32]) -> Option<usize> {
        self.index.get(exponent).copied()
    }
}

pub fn monomial_basis(space: AmbientSpace, d: Bidegree) -> Result<MonomialBasis> {
    MonomialBasis::new(space, d)
}
