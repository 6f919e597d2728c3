use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{basis_count_bound, LpOutcome, OptimalSolution, StandardFormLp};
use crate::error::SolverError;
use crate::scalar::Scalar;

/// Dense tableau over the sign-normalised system `A' x = b'`, `b' >= 0`,
/// augmented with one artificial column for every row that lacks a usable
/// unit column.
struct Tableau {
    rows: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    basis: Vec<usize>,
    /// Reduced costs `c_B B^-1 A_j - c_j`; the current basis is optimal when
    /// none of the eligible entries is negative.
    reduced: Vec<BigRational>,
    value: BigRational,
    /// Columns `0..num_structural` are the LP's own variables.
    num_structural: usize,
    pivots: usize,
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn price(&mut self, cost: &[BigRational]) {
        let mut reduced: Vec<BigRational> = cost.iter().map(|c| -c).collect();
        let mut value = BigRational::zero();
        for (r, &bv) in self.basis.iter().enumerate() {
            let cb = &cost[bv];
            if cb.is_zero() {
                continue;
            }
            for (j, z) in reduced.iter_mut().enumerate() {
                let t = &self.rows[r][j];
                if !t.is_zero() {
                    *z += cb * t;
                }
            }
            value += cb * &self.rhs[r];
        }
        self.reduced = reduced;
        self.value = value;
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let piv = self.rows[r][e].clone();
        if !piv.is_one() {
            let inv = piv.recip();
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            self.rhs[r] *= &inv;
        }
        let pivot_row: Vec<(usize, BigRational)> = self.rows[r]
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x.clone()))
            .collect();
        let pivot_rhs = self.rhs[r].clone();

        for i in 0..self.rows.len() {
            if i == r || self.rows[i][e].is_zero() {
                continue;
            }
            let f = self.rows[i][e].clone();
            let row = &mut self.rows[i];
            for (j, p) in &pivot_row {
                row[*j] -= &f * p;
            }
            if !pivot_rhs.is_zero() {
                self.rhs[i] -= &f * &pivot_rhs;
            }
        }
        if !self.reduced[e].is_zero() {
            let f = self.reduced[e].clone();
            for (j, p) in &pivot_row {
                self.reduced[*j] -= &f * p;
            }
            self.value -= &f * &pivot_rhs;
        }
        self.basis[r] = e;
        self.pivots += 1;
    }

    /// Runs primal simplex with Bland's rule. Only columns below `eligible`
    /// may enter the basis.
    fn optimize(&mut self, eligible: usize, phase: u8, cap: u128) -> Result<PhaseEnd, SolverError> {
        let mut count: u128 = 0;
        loop {
            let Some(e) = (0..eligible).find(|&j| self.reduced[j].is_negative()) else {
                return Ok(PhaseEnd::Optimal);
            };
            let mut leave: Option<(usize, BigRational)> = None;
            for r in 0..self.rows.len() {
                let t = &self.rows[r][e];
                if !t.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / t;
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return Ok(PhaseEnd::Unbounded);
            };
            if count >= cap {
                return Err(SolverError::IterationLimit { phase, cap });
            }
            self.pivot(r, e);
            count += 1;
        }
    }
}

/// Solves `lp` exactly.
///
/// Phase I maximises minus the sum of the artificial variables; a negative
/// optimum means the LP is infeasible. Artificial variables left basic at
/// zero are pivoted out where possible; rows where that is impossible are
/// linearly dependent on the others and are frozen for phase II. Phase II
/// then optimises the real objective from the feasible basis.
pub fn solve(lp: &StandardFormLp) -> Result<LpOutcome, SolverError> {
    lp.validate()?;
    let m = lp.num_rows();
    let q = lp.num_cols();

    // Sign-normalise so every right-hand side is non-negative.
    let flip: Vec<bool> = lp.b.iter().map(Scalar::is_negative).collect();
    let signed = |r: usize, x: &Scalar| -> BigRational {
        if flip[r] {
            -&x.0
        } else {
            x.0.clone()
        }
    };

    // Any structural column equal to e_r can start basic in row r.
    let mut start_col: Vec<Option<usize>> = vec![None; m];
    for j in 0..q {
        let mut unit_row = None;
        let mut is_unit = true;
        for r in 0..m {
            let x = &lp.a[r][j];
            if x.is_zero() {
                continue;
            }
            if unit_row.is_none() && signed(r, x).is_one() {
                unit_row = Some(r);
            } else {
                is_unit = false;
                break;
            }
        }
        if let (true, Some(r)) = (is_unit, unit_row) {
            if start_col[r].is_none() {
                start_col[r] = Some(j);
            }
        }
    }

    let artificial_rows: Vec<usize> = (0..m).filter(|&r| start_col[r].is_none()).collect();
    let width = q + artificial_rows.len();
    // identity[r]: the column that is e_r in the normalised system.
    let mut identity = vec![0usize; m];
    let mut rows = Vec::with_capacity(m);
    for r in 0..m {
        let mut row: Vec<BigRational> = Vec::with_capacity(width);
        row.extend(lp.a[r].iter().map(|x| signed(r, x)));
        row.resize(width, BigRational::zero());
        rows.push(row);
    }
    let mut basis = vec![0usize; m];
    for (t, &r) in artificial_rows.iter().enumerate() {
        rows[r][q + t] = BigRational::one();
        identity[r] = q + t;
        basis[r] = q + t;
    }
    for r in 0..m {
        if let Some(j) = start_col[r] {
            identity[r] = j;
            basis[r] = j;
        }
    }
    let rhs: Vec<BigRational> = (0..m).map(|r| signed(r, &lp.b[r])).collect();

    let mut tab = Tableau {
        rows,
        rhs,
        basis,
        reduced: Vec::new(),
        value: BigRational::zero(),
        num_structural: q,
        pivots: 0,
    };
    let cap = basis_count_bound(width, m);

    if !artificial_rows.is_empty() {
        let mut cost = vec![BigRational::zero(); width];
        for c in cost.iter_mut().skip(q) {
            *c = -BigRational::one();
        }
        tab.price(&cost);
        tab.optimize(q, 1, cap)?;
        if tab.value.is_negative() {
            return Ok(LpOutcome::Infeasible);
        }
        for r in 0..m {
            if tab.basis[r] < q {
                continue;
            }
            if let Some(j) = (0..q).find(|&j| !tab.rows[r][j].is_zero()) {
                tab.pivot(r, j);
            }
        }
    }

    let mut cost = vec![BigRational::zero(); width];
    for (dst, c) in cost.iter_mut().zip(&lp.c) {
        *dst = c.0.clone();
    }
    tab.price(&cost);
    if let PhaseEnd::Unbounded = tab.optimize(q, 2, cap)? {
        return Ok(LpOutcome::Unbounded);
    }

    let mut solution = vec![Scalar::zero(); q];
    let mut basic_cols = Vec::with_capacity(m);
    for (r, &bv) in tab.basis.iter().enumerate() {
        if bv < tab.num_structural {
            solution[bv] = Scalar(tab.rhs[r].clone());
            basic_cols.push(bv);
        }
    }
    basic_cols.sort_unstable();
    let duals = (0..m)
        .map(|r| {
            let j = identity[r];
            let y = &tab.reduced[j] + &cost[j];
            Scalar(if flip[r] { -y } else { y })
        })
        .collect();
    let value = Scalar(tab.value.clone()) + &lp.objective_constant;
    Ok(LpOutcome::Optimal(OptimalSolution {
        value,
        solution,
        basis: basic_cols,
        duals,
        pivots: tab.pivots,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::{check_certificate, check_dual_certificate, LpStatus};

    fn lp(a: &[&[i64]], b: &[i64], c: &[i64]) -> StandardFormLp {
        StandardFormLp::from_integers(a, b, c, 0).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_integer(x)).collect()
    }

    #[test]
    fn unit_simplex() {
        let p = lp(&[&[1, 1]], &[1], &[1, 0]);
        let out = solve(&p).unwrap();
        let sol = out.optimal().unwrap();
        assert_eq!(sol.value, 1);
        assert_eq!(sol.solution, ints(&[1, 0]));
        assert_eq!(sol.basis, vec![0]);
        assert!(check_certificate(&p, &out));
        assert!(check_dual_certificate(&p, &out));
    }

    #[test]
    fn negative_rhs_is_infeasible() {
        assert_eq!(solve(&lp(&[&[1, 1]], &[-1], &[1, 0])).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn ray_is_unbounded() {
        assert_eq!(
            solve(&lp(&[&[1, -1]], &[0], &[1, 0])).unwrap().status(),
            LpStatus::Unbounded
        );
    }

    #[test]
    fn redundant_rows_are_frozen() {
        // second row is twice the first; third is zero = zero.
        let p = lp(&[&[1, 1, 1], &[2, 2, 2], &[0, 0, 0]], &[3, 6, 0], &[1, 2, 0]);
        let out = solve(&p).unwrap();
        assert_eq!(out.value().unwrap(), &Scalar::from_integer(6));
        assert!(check_certificate(&p, &out));
        assert!(check_dual_certificate(&p, &out));
        assert_eq!(out.optimal().unwrap().basis, vec![1]);
    }

    #[test]
    fn inconsistent_rows_are_infeasible() {
        let p = lp(&[&[1, 1], &[2, 2]], &[1, 3], &[1, 0]);
        assert_eq!(solve(&p).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn deterministic_basis() {
        let p = lp(&[&[1, 1, 1, 0], &[1, -1, 0, 1]], &[4, 0], &[1, 1, 0, 0]);
        let first = solve(&p).unwrap();
        for _ in 0..5 {
            assert_eq!(solve(&p).unwrap(), first);
        }
    }
}
