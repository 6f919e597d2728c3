//! Exact linear programming.
//!
//! Problems are stated in standard form
//!
//! ```text
//! maximize   objective_constant + c . x
//! subject to A x = b,  x >= 0
//! ```
//!
//! and solved by a two-phase primal simplex over exact rationals with Bland's
//! least-index rule, so every run terminates and is fully deterministic.

mod inequality;
mod simplex;

pub use inequality::{from_inequalities, FreeVariableMap, InequalitySystem};
pub use simplex::solve;

use crate::error::SolverError;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardFormLp {
    pub a: Vec<Vec<Scalar>>,
    pub b: Vec<Scalar>,
    pub c: Vec<Scalar>,
    pub objective_constant: Scalar,
}

impl StandardFormLp {
    pub fn new(
        a: Vec<Vec<Scalar>>,
        b: Vec<Scalar>,
        c: Vec<Scalar>,
        objective_constant: Scalar,
    ) -> Result<Self, SolverError> {
        let lp = StandardFormLp {
            a,
            b,
            c,
            objective_constant,
        };
        lp.validate()?;
        Ok(lp)
    }

    /// Convenience constructor for tests and examples.
    pub fn from_integers(a: &[&[i64]], b: &[i64], c: &[i64], objective_constant: i64) -> Result<Self, SolverError> {
        let row = |r: &[i64]| r.iter().map(|&x| Scalar::from_integer(x)).collect::<Vec<_>>();
        StandardFormLp::new(
            a.iter().map(|r| row(r)).collect(),
            row(b),
            row(c),
            Scalar::from_integer(objective_constant),
        )
    }

    pub fn num_rows(&self) -> usize {
        self.a.len()
    }

    pub fn num_cols(&self) -> usize {
        self.c.len()
    }

    pub fn validate(&self) -> Result<(), SolverError> {
        let m = self.a.len();
        let q = self.c.len();
        if m == 0 {
            return Err(SolverError::Shape("no constraint rows".into()));
        }
        if q == 0 {
            return Err(SolverError::Shape("no variables".into()));
        }
        if self.b.len() != m {
            return Err(SolverError::Shape(format!(
                "{} rows but right-hand side has length {}",
                m,
                self.b.len()
            )));
        }
        if let Some((i, row)) = self.a.iter().enumerate().find(|(_, row)| row.len() != q) {
            return Err(SolverError::Shape(format!(
                "row {} has {} entries, expected {}",
                i,
                row.len(),
                q
            )));
        }
        Ok(())
    }

    /// `objective_constant + c . x`.
    pub fn objective_at(&self, x: &[Scalar]) -> Scalar {
        let dot: Scalar = self.c.iter().zip(x).map(|(c, x)| c * x).sum();
        dot + &self.objective_constant
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalSolution {
    pub value: Scalar,
    pub solution: Vec<Scalar>,
    /// Basic columns of the final tableau, ascending. Columns basic in rows
    /// found to be linearly dependent are not listed.
    pub basis: Vec<usize>,
    /// An optimal dual vector `y`: `A^T y >= c` and
    /// `objective_constant + b . y = value`.
    pub duals: Vec<Scalar>,
    pub pivots: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(OptimalSolution),
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn status(&self) -> LpStatus {
        match self {
            LpOutcome::Optimal(_) => LpStatus::Optimal,
            LpOutcome::Infeasible => LpStatus::Infeasible,
            LpOutcome::Unbounded => LpStatus::Unbounded,
        }
    }

    pub fn optimal(&self) -> Option<&OptimalSolution> {
        match self {
            LpOutcome::Optimal(sol) => Some(sol),
            _ => None,
        }
    }

    pub fn value(&self) -> Option<&Scalar> {
        self.optimal().map(|s| &s.value)
    }

    pub fn solution(&self) -> Option<&[Scalar]> {
        self.optimal().map(|s| s.solution.as_slice())
    }
}

/// Re-verifies an optimal outcome without trusting the solver: `A x = b`,
/// `x >= 0` and the reported value, all checked exactly. Non-optimal
/// outcomes and shape mismatches yield `false`.
pub fn check_certificate(lp: &StandardFormLp, outcome: &LpOutcome) -> bool {
    let Some(sol) = outcome.optimal() else {
        return false;
    };
    if lp.validate().is_err() || sol.solution.len() != lp.num_cols() {
        return false;
    }
    if sol.solution.iter().any(Scalar::is_negative) {
        return false;
    }
    let rows_hold = lp.a.iter().zip(&lp.b).all(|(row, rhs)| {
        let lhs: Scalar = row.iter().zip(&sol.solution).map(|(a, x)| a * x).sum();
        &lhs == rhs
    });
    rows_hold && lp.objective_at(&sol.solution) == sol.value
}

/// Weak-duality check of the dual vector carried by an optimal outcome:
/// `A^T y >= c` and `objective_constant + b . y` equal to the reported value.
pub fn check_dual_certificate(lp: &StandardFormLp, outcome: &LpOutcome) -> bool {
    let Some(sol) = outcome.optimal() else {
        return false;
    };
    if lp.validate().is_err() || sol.duals.len() != lp.num_rows() {
        return false;
    }
    let feasible = (0..lp.num_cols()).all(|j| {
        let col: Scalar = lp.a.iter().zip(&sol.duals).map(|(row, y)| &row[j] * y).sum();
        col >= lp.c[j]
    });
    let bound: Scalar = lp.b.iter().zip(&sol.duals).map(|(b, y)| b * y).sum::<Scalar>() + &lp.objective_constant;
    feasible && bound == sol.value
}

/// `C(q, m)` saturated to `u128`: an upper bound on the number of distinct
/// bases, hence on the pivots of a non-cycling simplex phase.
pub(crate) fn basis_count_bound(q: usize, m: usize) -> u128 {
    let m = m.min(q);
    let k = m.min(q - m);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (q - i) / (i + 1) stays integral at every step.
        match acc.checked_mul((q - i) as u128) {
            Some(x) => acc = x / (i as u128 + 1),
            None => return u128::MAX,
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_errors() {
        assert!(StandardFormLp::from_integers(&[], &[], &[1], 0).is_err());
        assert!(StandardFormLp::from_integers(&[&[1, 1]], &[1], &[], 0).is_err());
        assert!(StandardFormLp::from_integers(&[&[1, 1]], &[1, 2], &[1, 0], 0).is_err());
        assert!(StandardFormLp::from_integers(&[&[1, 1], &[1]], &[1, 2], &[1, 0], 0).is_err());
        assert!(StandardFormLp::from_integers(&[&[1, 1]], &[1], &[1, 0], 0).is_ok());
    }

    #[test]
    fn binomial_bound() {
        assert_eq!(basis_count_bound(5, 2), 10);
        assert_eq!(basis_count_bound(40, 5), 658_008);
        assert_eq!(basis_count_bound(3, 3), 1);
        assert_eq!(basis_count_bound(3, 5), 1);
        assert_eq!(basis_count_bound(400, 200), u128::MAX);
    }

    #[test]
    fn certificate_rejects_perturbed_solution() {
        let lp = StandardFormLp::from_integers(&[&[1, 1]], &[1], &[1, 0], 0).unwrap();
        let out = solve(&lp).unwrap();
        assert!(check_certificate(&lp, &out));
        assert!(check_dual_certificate(&lp, &out));
        let mut bad = out.clone();
        if let LpOutcome::Optimal(sol) = &mut bad {
            sol.solution = vec![Scalar::one(), Scalar::new(1, 2)];
        }
        assert!(!check_certificate(&lp, &bad));
        assert!(!check_certificate(&lp, &LpOutcome::Infeasible));
    }
}
