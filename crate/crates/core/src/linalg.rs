//! Exact dense elimination used by the kernel solver.
//!
//! Fraction-free (Bareiss) forward elimination with first-nonzero pivoting
//! in column order: every division is by a previous pivot and is exact, so
//! integer input stays integer and the result is deterministic regardless
//! of entry magnitudes.

// Indexed loops throughout: elimination reads the pivot row while writing
// other rows of the same matrix.
#![allow(clippy::needless_range_loop)]

use crate::scalar::Scalar;

pub(crate) struct Echelon {
    pub mat: Vec<Vec<Scalar>>,
    /// `(row, col)` of each pivot, in elimination order.
    pub pivots: Vec<(usize, usize)>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub(crate) fn echelon(mut mat: Vec<Vec<Scalar>>) -> Echelon {
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev_pivot = Scalar::one();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        let found = (pivot_row..rows).find(|&r| !mat[r][col].is_zero());
        let Some(r) = found else { continue };
        mat.swap(pivot_row, r);
        let pivot = mat[pivot_row][col].clone();
        for i in (pivot_row + 1)..rows {
            if mat[i][col].is_zero() {
                // Bareiss still rescales untouched rows to keep the
                // divisibility invariant.
                for j in (col + 1)..cols {
                    if !mat[i][j].is_zero() {
                        mat[i][j] = &(&mat[i][j] * &pivot) / &prev_pivot;
                    }
                }
                continue;
            }
            let lead = mat[i][col].clone();
            for j in (col + 1)..cols {
                let v = &(&mat[i][j] * &pivot) - &(&lead * &mat[pivot_row][j]);
                mat[i][j] = &v / &prev_pivot;
            }
            mat[i][col] = Scalar::zero();
        }
        prev_pivot = pivot;
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }
    Echelon { mat, pivots }
}

pub(crate) fn rank(mat: Vec<Vec<Scalar>>) -> usize {
    echelon(mat).rank()
}

/// Nullspace basis from the echelon form: one vector per free column, in
/// column order, each normalized so its first nonzero coordinate is 1.
/// `cols` is passed explicitly so a matrix with no rows (every vector in
/// the kernel) still reports the right dimension.
pub(crate) fn nullspace(mat: Vec<Vec<Scalar>>, cols: usize) -> Vec<Vec<Scalar>> {
    debug_assert!(mat.iter().all(|row| row.len() == cols));
    let ech = echelon(mat);
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let mut is_pivot = vec![false; cols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for &(r, c) in ech.pivots.iter().rev() {
            let mut acc = Scalar::zero();
            for j in (c + 1)..cols {
                if v[j].is_zero() || ech.mat[r][j].is_zero() {
                    continue;
                }
                acc += &(&ech.mat[r][j] * &v[j]);
            }
            if !acc.is_zero() {
                v[c] = -&(&acc / &ech.mat[r][c]);
            }
        }
        if let Some(lead) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[lead].inv();
            for x in v.iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn rank_of_singular_matrix() {
        let m = vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(0), s(1), s(1)],
        ];
        assert_eq!(rank(m), 2);
    }

    #[test]
    fn nullspace_vectors_annihilate() {
        let m = vec![vec![s(1), s(2), s(3)], vec![s(0), s(1), s(1)]];
        let ns = nullspace(m.clone(), 3);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let mut acc = Scalar::zero();
            for (a, b) in row.iter().zip(&ns[0]) {
                acc += &(a * b);
            }
            assert!(acc.is_zero());
        }
        // Leading coefficient normalized to one.
        let lead = ns[0].iter().find(|x| !x.is_zero()).unwrap();
        assert!(lead.is_one());
    }

    #[test]
    fn rank_nullity_adds_up() {
        let m = vec![
            vec![s(0), s(0), s(2), s(-1)],
            vec![s(0), s(0), s(4), s(-2)],
            vec![s(1), s(0), s(0), s(0)],
        ];
        let cols = m[0].len();
        let r = rank(m.clone());
        assert_eq!(nullspace(m, cols).len(), cols - r);
    }

    #[test]
    fn zero_rows_and_columns() {
        let m = vec![vec![Scalar::zero(); 3]; 2];
        assert_eq!(rank(m.clone()), 0);
        assert_eq!(nullspace(m, 3).len(), 3);
        let empty: Vec<Vec<Scalar>> = vec![];
        assert_eq!(nullspace(empty, 4).len(), 4);
    }
}
