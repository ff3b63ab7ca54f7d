use thiserror::Error;

use crate::cispec::AcmViolation;
use crate::combinat::Bidegree;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimensions must be at least 1, got m = {m}, n = {n}")]
    InvalidAmbient { m: u32, n: u32 },

    #[error("{c} generators given, but a complete intersection in P^{m} x P^{n} needs between 1 and {max}")]
    Codimension { c: usize, m: u32, n: u32, max: u32 },

    #[error("generator {index} has bidegree {bidegree} with a negative entry")]
    NegativeEntry { index: usize, bidegree: Bidegree },

    #[error("generator {index} has bidegree {bidegree}, but a + b must be at least 2")]
    DegreeTooSmall { index: usize, bidegree: Bidegree },

    #[error("bidegree {0} has a negative entry")]
    NegativeBidegree(Bidegree),

    #[error("bidegree {0} is not a hypersurface bidegree (needs a, b >= 0 and a + b >= 2)")]
    InvalidHypersurface(Bidegree),

    #[error("not ACM: {0}")]
    NotAcm(AcmViolation),

    #[error("tower level {level} of bidegree {bidegree} is infeasible: rank {rank} < multiplicity {multiplicity}")]
    InfeasibleLevel {
        level: usize,
        bidegree: Bidegree,
        rank: String,
        multiplicity: u32,
    },

    #[error("group order must list each distinct bidegree of the spec exactly once")]
    NotAGroupPermutation,

    #[error("group order places {earlier} before {later}, but {later} <= {earlier} componentwise")]
    InadmissibleOrder { earlier: Bidegree, later: Bidegree },

    #[error("not a curve: the Hilbert polynomial has degree {0}")]
    NotACurve(usize),

    #[error("d_min = {d_min} is below the stabilization bound {bound}")]
    BelowStabilization { d_min: i64, bound: i64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {0} is outside the supported range [2^13, 2^32)")]
    PrimeOutOfRange(u64),

    #[error("at least one trial is required")]
    NoTrials,
}

impl Error {
    /// True for errors caused by a spec failing a mathematical criterion, as
    /// opposed to malformed input.
    pub fn is_criterion_violation(&self) -> bool {
        matches!(self, Error::NotAcm(_) | Error::InfeasibleLevel { .. })
    }
}
