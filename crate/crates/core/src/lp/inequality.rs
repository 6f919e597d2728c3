use super::StandardFormLp;
use crate::error::SolverError;
use crate::scalar::Scalar;

/// `maximize objective . y  subject to  G y <= h`, with `y` free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalitySystem {
    pub g: Vec<Vec<Scalar>>,
    pub h: Vec<Scalar>,
    pub objective: Vec<Scalar>,
}

/// Column layout of the standard form produced by [`from_inequalities`]:
/// `[y+ (p columns), y- (p columns), slack (m columns)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeVariableMap {
    pub num_free: usize,
    pub num_rows: usize,
}

impl FreeVariableMap {
    /// Recovers `y = y+ - y-` from a standard-form solution.
    pub fn recover(&self, x: &[Scalar]) -> Vec<Scalar> {
        (0..self.num_free).map(|t| &x[t] - &x[self.num_free + t]).collect()
    }

    pub fn slack(&self, x: &[Scalar], row: usize) -> Scalar {
        x[2 * self.num_free + row].clone()
    }
}

/// Splits every free variable into a difference of two non-negative ones and
/// adds one slack per inequality. Row duals of the result are the
/// inequality multipliers: `y >= 0` with `G^T y = objective`.
pub fn from_inequalities(sys: &InequalitySystem) -> Result<(StandardFormLp, FreeVariableMap), SolverError> {
    let m = sys.g.len();
    let p = sys.objective.len();
    if sys.h.len() != m {
        return Err(SolverError::Shape(format!(
            "{} inequality rows but {} bounds",
            m,
            sys.h.len()
        )));
    }
    if let Some((i, row)) = sys.g.iter().enumerate().find(|(_, row)| row.len() != p) {
        return Err(SolverError::Shape(format!(
            "inequality row {} has {} entries, expected {}",
            i,
            row.len(),
            p
        )));
    }
    let width = 2 * p + m;
    let a = sys
        .g
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut out = Vec::with_capacity(width);
            out.extend(row.iter().cloned());
            out.extend(row.iter().map(|x| -x));
            out.resize(width, Scalar::zero());
            out[2 * p + r] = Scalar::one();
            out
        })
        .collect();
    let mut c = Vec::with_capacity(width);
    c.extend(sys.objective.iter().cloned());
    c.extend(sys.objective.iter().map(|x| -x));
    c.resize(width, Scalar::zero());
    let lp = StandardFormLp::new(a, sys.h.clone(), c, Scalar::zero())?;
    Ok((
        lp,
        FreeVariableMap {
            num_free: p,
            num_rows: m,
        },
    ))
}
