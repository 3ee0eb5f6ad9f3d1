use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::{BettiError, BettiTable};
use crate::field::Fp;
use crate::linalg::{rank, SparseVec};
use crate::poly::MonomialIdeal;

/// Faces of a complex grouped by size; `faces[0]` is `[∅]` unless the
/// complex is the void complex.
fn homology_of_faces(faces: &[Vec<u64>], field: Fp) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let index: Vec<HashMap<u64, usize>> = faces
        .iter()
        .map(|level| level.iter().enumerate().map(|(k, &f)| (f, k)).collect())
        .collect();
    // ranks[s] is the rank of the boundary from faces of size s to size s - 1.
    let mut ranks = vec![0usize; faces.len() + 1];
    for s in 1..faces.len() {
        let rows = faces[s].iter().map(|&face| {
            let mut v: SparseVec = Vec::with_capacity(s);
            let mut sign = 1u32;
            let mut bits = face;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                bits ^= b;
                v.push((index[s - 1][&(face ^ b)], sign));
                sign = if sign == 1 { field.neg(1) } else { 1 };
            }
            v.sort_unstable_by_key(|e| e.0);
            v
        });
        ranks[s] = rank(field, rows);
    }
    (0..faces.len())
        .map(|s| faces[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}

/// Dimensions of `H̃_k` for `k = -1, 0, 1, ...` (entry `k + 1`) of the
/// complex generated by `facets` (vertex bitmasks). The void complex (no
/// facets) has no homology and yields an empty vector.
pub fn reduced_homology_ranks(facets: &[u64], field: Fp) -> Vec<usize> {
    let mut seen: HashSet<u64> = HashSet::new();
    let mut stack: Vec<u64> = facets.to_vec();
    while let Some(f) = stack.pop() {
        if seen.insert(f) {
            let mut bits = f;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                bits ^= b;
                if !seen.contains(&(f ^ b)) {
                    stack.push(f ^ b);
                }
            }
        }
    }
    let mut faces: Vec<Vec<u64>> = Vec::new();
    for f in seen {
        let s = f.count_ones() as usize;
        if faces.len() <= s {
            faces.resize(s + 1, Vec::new());
        }
        faces[s].push(f);
    }
    for level in &mut faces {
        level.sort_unstable();
    }
    homology_of_faces(&faces, field)
}

/// Faces of the Stanley–Reisner complex restricted to `w`: subsets of `w`
/// containing no generator.
fn restricted_faces(gens: &[u64], w: u64) -> Vec<Vec<u64>> {
    let inside: Vec<u64> = gens.iter().copied().filter(|&g| g & !w == 0).collect();
    let verts: Vec<u64> = (0..64).filter(|b| w >> b & 1 == 1).map(|b| 1u64 << b).collect();
    let mut faces: Vec<Vec<u64>> = vec![vec![0]];
    fn grow(
        face: u64,
        start: usize,
        verts: &[u64],
        inside: &[u64],
        faces: &mut Vec<Vec<u64>>,
    ) {
        for k in start..verts.len() {
            let next = face | verts[k];
            if inside.iter().any(|&g| g & verts[k] != 0 && g & !next == 0) {
                continue;
            }
            let s = next.count_ones() as usize;
            if faces.len() <= s {
                faces.push(Vec::new());
            }
            faces[s].push(next);
            grow(next, k + 1, verts, inside, faces);
        }
    }
    grow(0, 0, &verts, &inside, &mut faces);
    faces
}

fn squarefree_masks(ideal: &MonomialIdeal) -> Result<Vec<u64>, BettiError> {
    if ideal.nvars() > 63 {
        return Err(BettiError::TooManyVariables(ideal.nvars()));
    }
    ideal
        .generators()
        .iter()
        .map(|g| {
            if g.is_squarefree() {
                Ok(g.support())
            } else {
                Err(BettiError::NotSquarefree(format!("{:?}", g.exps())))
            }
        })
        .collect()
}

fn hochster_sum(
    nvars: usize,
    gens: &[u64],
    subsets: Vec<u64>,
    field: Fp,
) -> BettiTable {
    let contributions: Vec<(usize, Vec<usize>)> = subsets
        .par_iter()
        .map(|&w| {
            let faces = restricted_faces(gens, w);
            (w.count_ones() as usize, homology_of_faces(&faces, field))
        })
        .collect();
    let mut table = BettiTable::new(nvars, field.characteristic());
    for (j, h) in contributions {
        // h[s] is H̃_{s-1}; it contributes to β_{i,j} with j - i - 1 = s - 1.
        for (s, &dim) in h.iter().enumerate() {
            if dim > 0 && s <= j {
                table.add(j - s, j, dim as u64);
            }
        }
    }
    table
}

/// `β_{i,j}(S/I) = Σ_{|W|=j} dim H̃_{j-i-1}(Δ_W)`, summing only over `W` that
/// are unions of generator supports; any other restriction is a cone.
pub fn betti_squarefree_hochster(ideal: &MonomialIdeal, field: Fp) -> Result<BettiTable, BettiError> {
    let gens = squarefree_masks(ideal)?;
    let mut lattice: HashSet<u64> = HashSet::from([0]);
    for &g in &gens {
        let extra: Vec<u64> = lattice.iter().map(|&w| w | g).collect();
        lattice.extend(extra);
    }
    let mut subsets: Vec<u64> = lattice.into_iter().collect();
    subsets.sort_unstable();
    Ok(hochster_sum(ideal.nvars(), &gens, subsets, field))
}

/// The same sum over every subset of the variables.
pub fn betti_squarefree_hochster_unrestricted(
    ideal: &MonomialIdeal,
    field: Fp,
) -> Result<BettiTable, BettiError> {
    let gens = squarefree_masks(ideal)?;
    if ideal.nvars() > 24 {
        return Err(BettiError::TooManyVariables(ideal.nvars()));
    }
    let subsets: Vec<u64> = (0..1u64 << ideal.nvars()).collect();
    Ok(hochster_sum(ideal.nvars(), &gens, subsets, field))
}
