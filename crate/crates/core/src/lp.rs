//! Dense two-phase simplex for the small feasibility problems that arise in
//! cone computations. Bland's rule keeps it finite and deterministic.

use nalgebra::DMatrix;

const PIVOT_TOL: f64 = 1e-12;
const COST_TOL: f64 = 1e-10;
const FEAS_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Optimal { x: Vec<f64>, value: f64 },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// Constraint rows followed by the reduced-cost row; last column is the
    /// right-hand side (negated objective in the cost row).
    t: DMatrix<f64>,
    basis: Vec<usize>,
}

impl Tableau {
    fn rows(&self) -> usize {
        self.basis.len()
    }

    fn rhs(&self) -> usize {
        self.t.ncols() - 1
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.t[(row, col)];
        let width = self.t.ncols();
        for j in 0..width {
            self.t[(row, j)] /= p;
        }
        for i in 0..self.t.nrows() {
            if i == row {
                continue;
            }
            let f = self.t[(i, col)];
            if f != 0.0 {
                for j in 0..width {
                    let delta = f * self.t[(row, j)];
                    self.t[(i, j)] -= delta;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Minimizes over columns `0..allowed`. Returns false when unbounded.
    fn run(&mut self, allowed: usize) -> bool {
        let m = self.rows();
        let rhs = self.rhs();
        loop {
            let Some(col) = (0..allowed).find(|&j| self.t[(m, j)] < -COST_TOL) else {
                return true;
            };
            let mut best: Option<(f64, usize, usize)> = None;
            for i in 0..m {
                let a = self.t[(i, col)];
                if a > PIVOT_TOL {
                    let ratio = self.t[(i, rhs)] / a;
                    let better = match best {
                        None => true,
                        Some((r, _, b)) => {
                            ratio < r - PIVOT_TOL || (ratio <= r + PIVOT_TOL && self.basis[i] < b)
                        }
                    };
                    if better {
                        best = Some((ratio, i, self.basis[i]));
                    }
                }
            }
            match best {
                Some((_, row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }
}

/// Maximizes `c . x` subject to `a x = b`, `x >= 0`.
pub fn maximize(c: &[f64], a: &DMatrix<f64>, b: &[f64]) -> Outcome {
    let (m, n) = a.shape();
    assert_eq!(c.len(), n, "objective length");
    assert_eq!(b.len(), m, "rhs length");
    let width = n + m + 1;
    let mut t = DMatrix::zeros(m + 1, width);
    for i in 0..m {
        let sign = if b[i] < 0.0 { -1.0 } else { 1.0 };
        for j in 0..n {
            t[(i, j)] = sign * a[(i, j)];
        }
        t[(i, n + i)] = 1.0;
        t[(i, width - 1)] = sign * b[i];
    }
    // Phase one: minimize the sum of artificials.
    for j in 0..width {
        if j >= n && j < n + m {
            continue;
        }
        let col_sum: f64 = (0..m).map(|i| t[(i, j)]).sum();
        t[(m, j)] = -col_sum;
    }
    let mut tab = Tableau {
        t,
        basis: (n..n + m).collect(),
    };
    tab.run(n + m);
    if -tab.t[(m, width - 1)] > FEAS_TOL {
        return Outcome::Infeasible;
    }
    // Drive artificials out of the basis where possible.
    for i in 0..m {
        if tab.basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| tab.t[(i, j)].abs() > 1e-9) {
                tab.pivot(i, j);
            }
        }
    }
    // Phase two: minimize -c over the original columns.
    let cost = |j: usize| if j < n { -c[j] } else { 0.0 };
    for j in 0..width - 1 {
        let reduced: f64 = cost(j)
            - (0..m)
                .map(|i| cost(tab.basis[i]) * tab.t[(i, j)])
                .sum::<f64>();
        tab.t[(m, j)] = reduced;
    }
    let z: f64 = (0..m)
        .map(|i| cost(tab.basis[i]) * tab.t[(i, width - 1)])
        .sum();
    tab.t[(m, width - 1)] = -z;
    if !tab.run(n) {
        return Outcome::Unbounded;
    }
    let mut x = vec![0.0; n];
    for i in 0..m {
        if tab.basis[i] < n {
            x[tab.basis[i]] = tab.t[(i, width - 1)].max(0.0);
        }
    }
    let value = c.iter().zip(&x).map(|(ci, xi)| ci * xi).sum();
    Outcome::Optimal { x, value }
}

/// Some `x >= 0` with `a x = b`, if one exists.
pub fn feasible_point(a: &DMatrix<f64>, b: &[f64]) -> Option<Vec<f64>> {
    match maximize(&vec![0.0; a.ncols()], a, b) {
        Outcome::Optimal { x, .. } => Some(x),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_problem() {
        // max 3x + 5y st x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
        let a = DMatrix::from_row_slice(
            3,
            5,
            &[
                1.0, 0.0, 1.0, 0.0, 0.0, //
                0.0, 2.0, 0.0, 1.0, 0.0, //
                3.0, 2.0, 0.0, 0.0, 1.0,
            ],
        );
        match maximize(&[3.0, 5.0, 0.0, 0.0, 0.0], &a, &[4.0, 12.0, 18.0]) {
            Outcome::Optimal { x, value } => {
                assert!((value - 36.0).abs() < 1e-9);
                assert!((x[0] - 2.0).abs() < 1e-9 && (x[1] - 6.0).abs() < 1e-9);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        // x + y = -1 with x, y >= 0
        let a = DMatrix::from_row_slice(1, 2, &[1.0, 1.0]);
        assert_eq!(maximize(&[1.0, 0.0], &a, &[-1.0]), Outcome::Infeasible);
        // x - y = 0, maximize x
        let a = DMatrix::from_row_slice(1, 2, &[1.0, -1.0]);
        assert_eq!(maximize(&[1.0, 0.0], &a, &[0.0]), Outcome::Unbounded);
    }

    #[test]
    fn redundant_rows() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 2.0, 2.0]);
        let x = feasible_point(&a, &[1.0, 2.0]).unwrap();
        assert!((x[0] + x[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example; Bland's rule terminates.
        let a = DMatrix::from_row_slice(
            3,
            7,
            &[
                0.25, -60.0, -0.04, 9.0, 1.0, 0.0, 0.0, //
                0.5, -90.0, -0.02, 3.0, 0.0, 1.0, 0.0, //
                0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0,
            ],
        );
        let c = [0.75, -150.0, 0.02, -6.0, 0.0, 0.0, 0.0];
        match maximize(&c, &a, &[0.0, 0.0, 1.0]) {
            Outcome::Optimal { value, .. } => assert!((value - 0.05).abs() < 1e-9),
            other => panic!("{other:?}"),
        }
    }
}
