//! Smith normal form for integer matrices.
//!
//! Used to normalize user-supplied relation matrices into invariant factors;
//! the symbolic abelian engine itself works on a fixed invariant-factor
//! representation and does not need this reduction internally.

/// Diagonalizes an integer matrix by row/column operations and returns the
/// nonzero diagonal entries `d1 | d2 | ...` as a divisibility chain.
///
/// Pivoting rule: the entry of smallest nonzero absolute value in the
/// remaining submatrix.
#[allow(clippy::needless_range_loop)] // in-place row/column elimination
pub fn smith_normal_form(matrix: &[Vec<i64>]) -> Vec<u64> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| v as i128).collect())
        .collect();

    let mut diag: Vec<i128> = Vec::new();
    let mut t = 0usize;
    while t < rows.min(cols) {
        // Smallest nonzero |entry| in the submatrix at (t.., t..).
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && pivot.is_none_or(|(pi, pj)| m[i][j].abs() < m[pi][pj].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in &mut m {
            row.swap(t, pj);
        }

        let mut clean = true;
        for i in t + 1..rows {
            let q = m[i][t].div_euclid(m[t][t]);
            if q != 0 {
                for j in t..cols {
                    m[i][j] -= q * m[t][j];
                }
            }
            if m[i][t] != 0 {
                clean = false;
            }
        }
        for j in t + 1..cols {
            let q = m[t][j].div_euclid(m[t][t]);
            if q != 0 {
                for row in m.iter_mut() {
                    row[j] -= q * row[t];
                }
            }
            if m[t][j] != 0 {
                clean = false;
            }
        }
        if !clean {
            // Remainders survive; repeat with a smaller pivot.
            continue;
        }

        // Enforce divisibility into the rest of the submatrix: if some entry
        // is not divisible by the pivot, fold its row in and re-reduce.
        let d = m[t][t];
        let mut fixed = true;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if m[i][j] % d != 0 {
                    for col in t..cols {
                        let add = m[i][col];
                        m[t][col] += add;
                    }
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }

        diag.push(d.abs());
        t += 1;
    }

    diag.iter().map(|&d| d as u64).collect()
}

/// Presents the abelian group `Z^generators / <relation rows>` by its
/// torsion invariant factors (each `>= 2`, each dividing the next) and its
/// free rank.
pub fn invariant_factors(generators: usize, relations: &[Vec<i64>]) -> (Vec<u64>, usize) {
    for row in relations {
        assert_eq!(row.len(), generators, "relation arity mismatch");
    }
    let diag = smith_normal_form(relations);
    let torsion: Vec<u64> = diag.iter().copied().filter(|&d| d > 1).collect();
    let rank_drop = diag.iter().filter(|&&d| d != 0).count();
    (torsion, generators - rank_drop)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::gcd_u64;

    #[test]
    fn diagonal_chain_for_known_matrix() {
        // Classic example: [[2,4,4],[-6,6,12],[10,-4,-16]] has SNF diag (2,6,12).
        let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        assert_eq!(smith_normal_form(&m), vec![2, 6, 12]);
    }

    #[test]
    fn identity_and_zero() {
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(smith_normal_form(&id), vec![1, 1]);
        let zero = vec![vec![0, 0], vec![0, 0]];
        assert_eq!(smith_normal_form(&zero), Vec::<u64>::new());
    }

    #[test]
    fn presentation_of_z6() {
        // Z^2 / <(2,0),(0,3)> = Z/2 + Z/3 = Z/6.
        let (torsion, rank) = invariant_factors(2, &[vec![2, 0], vec![0, 3]]);
        assert_eq!(rank, 0);
        assert_eq!(torsion.iter().product::<u64>(), 6);
        for w in torsion.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
    }

    #[test]
    fn free_rank_survives() {
        let (torsion, rank) = invariant_factors(3, &[vec![0, 2, 0]]);
        assert_eq!(torsion, vec![2]);
        assert_eq!(rank, 2);
    }

    #[test]
    fn chain_property_on_pseudorandom_matrices() {
        let mut state = 0x853c49e6748fea9bu64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 21) as i64 - 10
        };
        for _ in 0..300 {
            let rows = 1 + (next().unsigned_abs() as usize % 4);
            let cols = 1 + (next().unsigned_abs() as usize % 4);
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| next()).collect())
                .collect();
            let diag = smith_normal_form(&m);
            for w in diag.windows(2) {
                assert_eq!(w[1] % w[0], 0, "chain broken for {m:?}: {diag:?}");
            }
            // gcd of all entries equals d1 when the matrix is nonzero.
            let g = m
                .iter()
                .flatten()
                .fold(0u64, |acc, &v| gcd_u64(acc, v.unsigned_abs()));
            if g != 0 {
                assert_eq!(diag[0], g, "first factor must be the gcd for {m:?}");
            }
        }
    }

    #[test]
    fn determinant_up_to_sign_for_square_nonsingular() {
        // det [[4,2],[2,4]] = 12; SNF diag product must be 12.
        let m = vec![vec![4, 2], vec![2, 4]];
        let diag = smith_normal_form(&m);
        assert_eq!(diag.iter().product::<u64>(), 12);
        assert_eq!(diag, vec![2, 6]);
    }
}
