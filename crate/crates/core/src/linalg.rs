//! Exact Gaussian elimination over the rationals.

use crate::rational::Rational;

/// Row-reduces `rows` in place and returns the rank.
fn eliminate(rows: &mut [Vec<Rational>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip().expect("pivot is nonzero");
        for x in &mut rows[rank][col..] {
            *x *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &(&factor * p);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut rows = rows.to_vec();
    eliminate(&mut rows)
}

/// Unique solution of the square system `matrix * x = rhs`, if any.
pub fn solve<const N: usize>(matrix: &[[Rational; N]; N], rhs: &[Rational; N]) -> Option<[Rational; N]> {
    let mut rows: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| row.iter().cloned().chain(std::iter::once(b.clone())).collect())
        .collect();
    // Pivots only in the coefficient columns: a pivot in the augmented column
    // means the system is singular (inconsistent) and rank < N anyway.
    let coeff_rank = {
        let coeffs: Vec<Vec<Rational>> = matrix.iter().map(|r| r.to_vec()).collect();
        rank(&coeffs)
    };
    if coeff_rank < N {
        return None;
    }
    eliminate(&mut rows);
    Some(std::array::from_fn(|i| rows[i][N].clone()))
}
