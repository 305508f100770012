//! Exact rank by Gaussian elimination over a field.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// Rank of a dense row-major matrix, choosing in each column the nonzero
/// pivot of least `cost`.
pub fn rank_by<F, K, C>(mut rows: Vec<Vec<F>>, cost: C) -> usize
where
    F: Clone + Num,
    K: Ord,
    C: Fn(&F) -> K,
{
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    for r in &mut rows {
        r.resize(ncols, F::zero());
    }
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let pivot = (rank..rows.len()).filter(|&i| !rows[i][col].is_zero()).min_by_key(|&i| cost(&rows[i][col]));
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let (top, below) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        let inv = F::one() / prow[col].clone();
        for row in below.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone() * inv.clone();
            for k in col..ncols {
                if !prow[k].is_zero() {
                    row[k] = row[k].clone() - factor.clone() * prow[k].clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Exact rank over the rationals; pivots with the smallest height
/// `max(|numerator|, denominator)` keep intermediate entries small.
pub fn rational_rank<T>(rows: Vec<Vec<Ratio<T>>>) -> usize
where
    T: Clone + Integer + Signed,
{
    rank_by(rows, |r: &Ratio<T>| {
        let n = r.numer().abs();
        let d = r.denom().abs();
        if n > d {
            n
        } else {
            d
        }
    })
}
