//! Exact rank computations over GF(p) on sparse vectors.

use std::collections::HashMap;

use crate::field::Fp;

/// Sparse vector: `(index, value)` pairs, indices strictly increasing, values nonzero.
pub type SparseVec = Vec<(usize, u32)>;

/// Incremental row echelon form keyed by leading index. Each stored pivot row
/// has leading coefficient one.
pub struct Echelon {
    field: Fp,
    pivots: HashMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(field: Fp) -> Self {
        Echelon {
            field,
            pivots: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// `a - c * b` for sparse vectors.
    fn axpy(&self, a: &[(usize, u32)], c: u32, b: &[(usize, u32)]) -> SparseVec {
        let f = self.field;
        let neg = f.neg(c);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, f.mul(neg, b[j].1)));
                j += 1;
            } else {
                let v = f.add(a[i].1, f.mul(neg, b[j].1));
                if v != 0 {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    /// Adds a vector; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        while let Some(&(lead, c)) = v.first() {
            match self.pivots.get(&lead) {
                Some(row) => v = self.axpy(&v, c, row),
                None => {
                    if c != 1 {
                        let inv = self.field.inv(c);
                        for e in v.iter_mut() {
                            e.1 = self.field.mul(e.1, inv);
                        }
                    }
                    self.pivots.insert(lead, v);
                    return true;
                }
            }
        }
        false
    }
}

/// Rank of the span of `vectors`.
pub fn rank(field: Fp, vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut ech = Echelon::new(field);
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

/// Builds a sparse vector from unsorted entries, summing duplicates.
pub fn sparse_from_entries(field: Fp, mut entries: Vec<(usize, u32)>) -> SparseVec {
    entries.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = field.add(last.1, v),
            _ => out.push((i, v)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Plain dense Gaussian elimination, used as an oracle.
    fn dense_rank(field: Fp, mut rows: Vec<Vec<u32>>) -> usize {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = field.inv(rows[rank][c]);
            for r in 0..rows.len() {
                if r != rank && rows[r][c] != 0 {
                    let factor = field.mul(rows[r][c], inv);
                    for k in 0..cols {
                        let sub = field.mul(factor, rows[rank][k]);
                        rows[r][k] = field.sub(rows[r][k], sub);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_ranks() {
        let f = Fp::new(7).unwrap();
        assert_eq!(rank(f, vec![vec![(0, 1), (1, 2)], vec![(0, 2), (1, 4)]]), 1);
        assert_eq!(rank(f, vec![vec![(0, 1)], vec![(1, 1)], vec![]]), 2);
        assert_eq!(sparse_from_entries(f, vec![(2, 3), (0, 1), (2, 4)]), vec![(0, 1)]);
    }

    proptest! {
        #[test]
        fn sparse_rank_matches_dense(
            rows in prop::collection::vec(prop::collection::vec(0u32..5, 6), 0..8)
        ) {
            let f = Fp::new(5).unwrap();
            let sparse: Vec<SparseVec> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, &v)| (i, v)).collect())
                .collect();
            prop_assert_eq!(rank(f, sparse), dense_rank(f, rows));
        }
    }
}
