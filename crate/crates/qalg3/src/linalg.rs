//! Exact linear solving over the rationals by Gaussian elimination.

use num_traits::Zero;

use crate::rational::Rat;

/// Outcome of an exact linear solve of `M x = b`.
#[derive(Debug, Clone)]
pub enum SolveOutcome {
    Solved(Solution),
    /// The system is inconsistent. `combo` is a row combination lambda with
    /// `lambda^T M = 0` but `lambda^T b != 0` — a certificate of
    /// infeasibility.
    Inconsistent { combo: Vec<Rat> },
}

#[derive(Debug, Clone)]
pub struct Solution {
    /// Particular solution with every free variable set to zero.
    pub particular: Vec<Rat>,
    /// Dimension of the solution space (number of free variables).
    pub freedom: usize,
    /// Columns that carried pivots.
    pub pivot_cols: Vec<usize>,
}

/// Solve `M x = b` exactly. `rows` holds the matrix row-major; all rows must
/// have `n_cols` entries.
pub fn solve_exact(mut rows: Vec<Vec<Rat>>, mut rhs: Vec<Rat>, n_cols: usize) -> SolveOutcome {
    let n_rows = rows.len();
    assert_eq!(rhs.len(), n_rows);
    // track row operations so an inconsistent row yields a certificate
    let mut ops: Vec<Vec<Rat>> = (0..n_rows)
        .map(|i| {
            let mut e = vec![Rat::zero(); n_rows];
            e[i] = Rat::from_integer(1.into());
            e
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..n_cols {
        let Some(p) = (r..n_rows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        ops.swap(r, p);
        let inv = rows[r][col].clone().recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        rhs[r] *= &inv;
        for v in ops[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..n_rows {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            for c in 0..n_cols {
                let sub = &rows[r][c] * &f;
                rows[i][c] -= sub;
            }
            let sub = &rhs[r] * &f;
            rhs[i] -= sub;
            for c in 0..n_rows {
                let sub = &ops[r][c] * &f;
                ops[i][c] -= sub;
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == n_rows {
            break;
        }
    }

    // inconsistency: a cleared row with nonzero rhs
    for i in r..n_rows {
        if !rhs[i].is_zero() {
            return SolveOutcome::Inconsistent {
                combo: ops[i].clone(),
            };
        }
    }

    let mut particular = vec![Rat::zero(); n_cols];
    for (row, &col) in pivot_cols.iter().enumerate() {
        particular[col] = rhs[row].clone();
    }
    SolveOutcome::Solved(Solution {
        particular,
        freedom: n_cols - pivot_cols.len(),
        pivot_cols,
    })
}
