//! Dense two-phase simplex for the small minimax approximation programs.
//!
//! Solves `min c.x  s.t.  A x <= b, x >= 0`. Bland's rule throughout, so
//! the pivot sequence is deterministic and never cycles. Problem sizes
//! here stay under ~130 x 130.

const EPS: f64 = 1e-11;

pub struct Solution {
    pub objective: f64,
    pub x: Vec<f64>,
}

/// Returns `None` when the program is infeasible or unbounded.
pub fn solve_min(c: &[f64], a: &[Vec<f64>], b: &[f64]) -> Option<Solution> {
    let m = a.len();
    let n = c.len();
    assert_eq!(b.len(), m);

    // columns: n structural, m slacks, up to m artificials, then rhs
    let mut artificial_of_row: Vec<Option<usize>> = vec![None; m];
    let mut n_art = 0;
    for (i, &bi) in b.iter().enumerate() {
        if bi < 0.0 {
            artificial_of_row[i] = Some(n_art);
            n_art += 1;
        }
    }
    let total = n + m + n_art;
    let mut tab = vec![vec![0.0f64; total + 1]; m + 1];
    let mut basis = vec![0usize; m];

    for i in 0..m {
        let flip = if b[i] < 0.0 { -1.0 } else { 1.0 };
        for j in 0..n {
            tab[i][j] = flip * a[i][j];
        }
        tab[i][n + i] = flip; // slack
        tab[i][total] = flip * b[i];
        if let Some(k) = artificial_of_row[i] {
            tab[i][n + m + k] = 1.0;
            basis[i] = n + m + k;
        } else {
            basis[i] = n + i;
        }
    }

    if n_art > 0 {
        // phase 1: minimize the sum of artificials
        let obj_row = m;
        for j in 0..=total {
            tab[obj_row][j] = 0.0;
        }
        for j in 0..n_art {
            tab[obj_row][n + m + j] = 1.0;
        }
        // price out the artificial basis
        for i in 0..m {
            if artificial_of_row[i].is_some() {
                for j in 0..=total {
                    tab[obj_row][j] -= tab[i][j];
                }
            }
        }
        pivot_until_optimal(&mut tab, &mut basis, total)?;
        if tab[m][total].abs() > 1e-7 {
            return None; // infeasible
        }
        // drive any artificial still in the basis out of it
        for i in 0..m {
            if basis[i] >= n + m {
                if let Some(j) = (0..n + m).find(|&j| tab[i][j].abs() > EPS) {
                    pivot(&mut tab, &mut basis, i, j);
                }
            }
        }
    }

    // phase 2: original objective over structural + slack columns
    let obj_row = m;
    for j in 0..=total {
        tab[obj_row][j] = 0.0;
    }
    for (j, &cj) in c.iter().enumerate() {
        tab[obj_row][j] = cj;
    }
    for i in 0..m {
        let bj = basis[i];
        if bj >= n + m {
            continue;
        }
        let coef = tab[obj_row][bj];
        if coef.abs() > EPS {
            for j in 0..=total {
                tab[obj_row][j] -= coef * tab[i][j];
            }
        }
    }
    // artificial columns are no longer eligible
    for row in tab.iter_mut() {
        for j in n + m..total {
            row[j] = 0.0;
        }
    }
    pivot_until_optimal(&mut tab, &mut basis, n + m)?;

    let mut x = vec![0.0f64; n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = tab[i][total];
        }
    }
    Some(Solution {
        objective: -tab[m][total],
        x,
    })
}

fn pivot_until_optimal(
    tab: &mut [Vec<f64>],
    basis: &mut [usize],
    eligible_cols: usize,
) -> Option<()> {
    let m = tab.len() - 1;
    let total = tab[0].len() - 1;
    loop {
        // Bland: smallest-index column with negative reduced cost
        let Some(col) = (0..eligible_cols).find(|&j| tab[m][j] < -EPS) else {
            return Some(());
        };
        let mut row: Option<usize> = None;
        let mut best = f64::INFINITY;
        for i in 0..m {
            if tab[i][col] > EPS {
                let ratio = tab[i][total] / tab[i][col];
                if ratio < best - EPS || (ratio < best + EPS && row.is_some_and(|r| basis[i] < basis[r]))
                {
                    best = ratio;
                    row = Some(i);
                } else if row.is_none() {
                    best = ratio;
                    row = Some(i);
                }
            }
        }
        let row = row?; // None: unbounded
        pivot(tab, basis, row, col);
    }
}

fn pivot(tab: &mut [Vec<f64>], basis: &mut [usize], row: usize, col: usize) {
    let total = tab[0].len() - 1;
    let p = tab[row][col];
    for j in 0..=total {
        tab[row][j] /= p;
    }
    for i in 0..tab.len() {
        if i != row {
            let factor = tab[i][col];
            if factor.abs() > 0.0 {
                for j in 0..=total {
                    tab[i][j] -= factor * tab[row][j];
                }
            }
        }
    }
    basis[row] = col;
}
