//! Incremental row echelon form of sparse vectors over a prime field.

use super::field::PrimeField;

/// Sparse vector: `(row, value)` with distinct rows and nonzero values.
pub type SparseVec = Vec<(u32, u64)>;

/// Echelon basis of the span of the vectors inserted so far.
///
/// Pivots are keyed by their leading (smallest) index and stored sparse
/// with leading coefficient one.
#[derive(Debug, Clone)]
pub struct SparseEchelon {
    field: PrimeField,
    pivots: Vec<Option<SparseVec>>,
    rank: usize,
}

impl SparseEchelon {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        Self {
            field,
            pivots: vec![None; dim],
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduces `v` against the current pivots. Returns true when it was
    /// independent and became a new pivot.
    pub fn insert(&mut self, v: &[(u32, u64)]) -> bool {
        let Some(start) = v.iter().map(|&(i, _)| i as usize).min() else {
            return false;
        };
        let f = self.field;
        let mut work = vec![0u64; self.pivots.len()];
        for &(i, x) in v {
            work[i as usize] = f.add(work[i as usize], x % f.modulus());
        }
        for lead in start..work.len() {
            let c = work[lead];
            if c == 0 {
                continue;
            }
            match &self.pivots[lead] {
                Some(pivot) => {
                    for &(j, y) in pivot {
                        let j = j as usize;
                        work[j] = f.sub(work[j], f.mul(c, y));
                    }
                }
                None => {
                    let inv = f.inv(c);
                    let pivot: SparseVec = (lead..work.len())
                        .filter(|&j| work[j] != 0)
                        .map(|j| (j as u32, f.mul(work[j], inv)))
                        .collect();
                    self.pivots[lead] = Some(pivot);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }
}

/// Rank of the span of `columns`, each of length `dim`.
pub fn rank_of(field: PrimeField, dim: usize, columns: &[SparseVec]) -> usize {
    let mut ech = SparseEchelon::new(field, dim);
    for c in columns {
        ech.insert(c);
        if ech.rank() == dim {
            break;
        }
    }
    ech.rank()
}
