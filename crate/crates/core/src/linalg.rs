//! Exact dense row reduction over a coefficient field.

use crate::arith::Field;

/// Reduces `rows` to reduced row echelon form in place and returns the rank.
/// Pivot selection is deterministic (first nonzero entry per column, scanning
/// rows top down), so the echelon form is canonical for a given row order.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = match (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        for entry in rows[rank].iter_mut() {
            *entry = entry.mul(&inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (dst, src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *dst = dst.sub(&factor.mul(src));
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rank
}

/// Rank of a matrix, consuming it.
pub fn rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    rref(&mut rows)
}
