//! Brute-force check of the Koszul dimension counts.
//!
//! Random dense forms of the generator bidegrees are drawn over a prime
//! field, every product `Fᵢ·μ` with a monomial `μ` of the complementary
//! bidegree is expanded into the monomial basis of the target twist, and
//! the rank of those columns is the dimension of the ideal's graded piece
//! for that sample. Generic forms attain the Koszul count; an unlucky draw
//! can only lose rank.

mod field;
mod monomial;
mod rank;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use field::{is_prime, PrimeField};
pub use monomial::{monomial_basis, MonomialBasis};
pub use rank::{rank_of, SparseEchelon, SparseVec};

use crate::cispec::CiSpec;
use crate::combinat::{AmbientSpace, Bidegree};
use crate::error::{Error, Result};
use crate::koszul::koszul_ideal_h0;
use crate::Int;

pub const DEFAULT_PRIME: u64 = 32003;
pub const DEFAULT_TRIALS: u32 = 3;

/// A random form, coefficients indexed by its [`MonomialBasis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSample {
    pub bidegree: Bidegree,
    pub coefficients: Vec<u64>,
    pub seed: u64,
    /// Position of the generator in the list, used as the stream id.
    pub ordinal: u64,
}

/// Draws every coefficient uniformly from `Z/p`, zero included.
///
/// The stream depends only on `(seed, prime, bidegree, ordinal)`.
pub fn sample_form(basis: &MonomialBasis, field: PrimeField, seed: u64, ordinal: u64) -> FormSample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(ordinal);
    let coefficients = (0..basis.len())
        .map(|_| rng.random_range(0..field.modulus()))
        .collect();
    FormSample {
        bidegree: basis.bidegree(),
        coefficients,
        seed,
        ordinal,
    }
}

/// Coefficient vector of `form · μ` in `target`.
fn product_column(form: &FormSample, form_basis: &MonomialBasis, mu: &[u32], target: &MonomialBasis) -> SparseVec {
    let mut col: SparseVec = form
        .coefficients
        .iter()
        .zip(form_basis.exponents())
        .filter(|(c, _)| **c != 0)
        .map(|(&c, e)| {
            let product: Vec<u32> = e.iter().zip(mu).map(|(x, y)| x + y).collect();
            let row = target
                .position(&product)
                .expect("product of monomials lies in the target bidegree");
            (row as u32, c)
        })
        .collect();
    col.sort_unstable_by_key(|&(i, _)| i);
    col
}

/// Columns `Fᵢ·μ` for all generators and all complementary monomials.
/// Generators with a non-effective complement contribute nothing.
fn ideal_columns(
    space: AmbientSpace,
    generators: &[Bidegree],
    twist: Bidegree,
    field: PrimeField,
    seed: u64,
) -> Result<(MonomialBasis, Vec<SparseVec>)> {
    let target = monomial_basis(space, twist)?;
    let mut columns = Vec::new();
    for (ordinal, &g) in generators.iter().enumerate() {
        let rest = twist - g;
        if !rest.is_effective() {
            continue;
        }
        let form_basis = monomial_basis(space, g)?;
        let form = sample_form(&form_basis, field, seed, ordinal as u64);
        let multipliers = monomial_basis(space, rest)?;
        for mu in multipliers.exponents() {
            columns.push(product_column(&form, &form_basis, mu, &target));
        }
    }
    Ok((target, columns))
}

/// Rank of the multiplication map onto the twist-`twist` piece for one
/// random sample of the generators.
pub fn ideal_dim_bruteforce(
    space: AmbientSpace,
    generators: &[Bidegree],
    twist: Bidegree,
    prime: u64,
    seed: u64,
) -> Result<usize> {
    let field = PrimeField::new(prime)?;
    if !twist.is_effective() {
        return Err(Error::NegativeBidegree(twist));
    }
    let (target, columns) = ideal_columns(space, generators, twist, field, seed)?;
    Ok(rank_of(field, target.len(), &columns))
}

/// Seed used by trial `k` of a run seeded with `seed`.
pub fn trial_seed(seed: u64, trial: u32) -> u64 {
    seed.wrapping_add(u64::from(trial))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRow {
    /// Diagonal twist `(d, d)`.
    pub d: i64,
    pub predicted: Int,
    /// Rank per trial, in trial order.
    pub observed: Vec<usize>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub prime: u64,
    pub seed: u64,
    pub trials: u32,
    pub rows: Vec<OracleRow>,
}

impl OracleReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// A row passes when no trial exceeds the prediction and at least one
/// trial meets it.
pub fn row_verdict(predicted: &Int, observed: &[usize]) -> bool {
    let observed: Vec<Int> = observed.iter().map(|&r| Int::from(r)).collect();
    observed.iter().all(|r| r <= predicted) && observed.iter().any(|r| r == predicted)
}

/// Compares the Koszul count of `H^0(I_Y(d,d))` against sampled ranks for
/// `d = 0..=d_max`.
pub fn verify_spec(spec: &CiSpec, d_max: i64, prime: u64, seed: u64, trials: u32) -> Result<OracleReport> {
    spec.require_acm()?;
    let field = PrimeField::new(prime)?;
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let space = spec.space();
    let jobs: Vec<(i64, u32)> = (0..=d_max)
        .flat_map(|d| (0..trials).map(move |t| (d, t)))
        .collect();
    let ranks: Vec<usize> = jobs
        .par_iter()
        .map(|&(d, t)| {
            let (target, columns) =
                ideal_columns(space, spec.bidegrees(), Bidegree::diagonal(d), field, trial_seed(seed, t))?;
            Ok(rank_of(field, target.len(), &columns))
        })
        .collect::<Result<_>>()?;
    let rows = (0..=d_max)
        .zip(ranks.chunks(trials as usize))
        .map(|(d, observed)| {
            let predicted = koszul_ideal_h0::<Int>(space, spec.bidegrees(), Bidegree::diagonal(d));
            OracleRow {
                d,
                pass: row_verdict(&predicted, observed),
                predicted,
                observed: observed.to_vec(),
            }
        })
        .collect();
    Ok(OracleReport {
        prime,
        seed,
        trials,
        rows,
    })
}
