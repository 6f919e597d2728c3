//! Extreme-point test by strict separation.
//!
//! For a point `p` of a cloud, look for an affine functional
//! `x -> <gamma, x> - offset` that is `<= 0` on every other cloud point and
//! as large as possible (capped at 1) on `p`. The optimum is 1 when `p` is a
//! vertex of the hull of the cloud and 0 otherwise.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::lp::{from_inequalities, solve, InequalitySystem, LpOutcome};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CloudCertificate {
    /// `<gamma, p_idx> - offset = f* > 0` and `<gamma, p_j> - offset <= 0`
    /// for every other point.
    Separating { gamma: Vec<Scalar>, offset: Scalar },
    /// Convex weights over the cloud, zero at the tested index, whose
    /// combination reproduces the tested point.
    ConvexCombination { weights: Vec<Scalar> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CloudVerdict {
    pub index: usize,
    pub extreme: bool,
    pub f_star: Scalar,
    pub certificate: CloudCertificate,
}

pub(crate) fn validate_cloud(cloud: &[Point]) -> Result<usize> {
    let dim = cloud.first().ok_or(Error::Empty)?.dim();
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if let Some(p) = cloud.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        });
    }
    Ok(dim)
}

/// The separation LP for `cloud[idx]`, one inequality per cloud point in
/// cloud order, over the free variables `(gamma, offset)`.
pub fn separation_system(cloud: &[Point], idx: usize) -> InequalitySystem {
    let g = cloud
        .iter()
        .map(|p| {
            let mut row: Vec<Scalar> = p.coords().to_vec();
            row.push(-Scalar::one());
            row
        })
        .collect();
    let h = (0..cloud.len())
        .map(|j| if j == idx { Scalar::one() } else { Scalar::zero() })
        .collect();
    let mut objective: Vec<Scalar> = cloud[idx].coords().to_vec();
    objective.push(-Scalar::one());
    InequalitySystem { g, h, objective }
}

/// Decides whether `cloud[idx]` is a vertex of the convex hull of `cloud`.
///
/// A coordinate-equal copy of the tested point elsewhere in the cloud makes
/// strict separation impossible, so such a point is reported as not extreme.
pub fn is_vertex_by_separation(cloud: &[Point], idx: usize) -> Result<CloudVerdict> {
    validate_cloud(cloud)?;
    if idx >= cloud.len() {
        return Err(Error::IndexOutOfRange {
            index: idx,
            len: cloud.len(),
        });
    }
    let sys = separation_system(cloud, idx);
    let (lp, map) = from_inequalities(&sys)?;
    let sol = match solve(&lp)? {
        LpOutcome::Optimal(sol) => sol,
        other => {
            // gamma = 0, offset = 0 is always feasible and the idx row caps the objective.
            return Err(Error::Internal(format!(
                "separation LP for point {idx} returned {:?}",
                other.status()
            )));
        }
    };
    let f_star = sol.value.clone();
    if f_star.is_positive() {
        let mut y = map.recover(&sol.solution);
        let offset = y.pop().expect("offset variable");
        Ok(CloudVerdict {
            index: idx,
            extreme: true,
            f_star,
            certificate: CloudCertificate::Separating { gamma: y, offset },
        })
    } else if f_star.is_zero() {
        Ok(CloudVerdict {
            index: idx,
            extreme: false,
            f_star,
            certificate: CloudCertificate::ConvexCombination { weights: sol.duals },
        })
    } else {
        Err(Error::Internal(format!("separation optimum {f_star} is negative")))
    }
}

/// Re-checks a cloud verdict arithmetically, without the solver.
pub fn verify_cloud_verdict(cloud: &[Point], verdict: &CloudVerdict) -> bool {
    let idx = verdict.index;
    let Some(target) = cloud.get(idx) else {
        return false;
    };
    match &verdict.certificate {
        CloudCertificate::Separating { gamma, offset } => {
            if !verdict.extreme || !verdict.f_star.is_positive() || gamma.len() != target.dim() {
                return false;
            }
            let eval = |p: &Point| p.dot(gamma) - offset;
            eval(target) == verdict.f_star
                && cloud
                    .iter()
                    .enumerate()
                    .all(|(j, p)| j == idx || !eval(p).is_positive())
        }
        CloudCertificate::ConvexCombination { weights } => {
            if verdict.extreme || !verdict.f_star.is_zero() || weights.len() != cloud.len() {
                return false;
            }
            if !weights[idx].is_zero() || weights.iter().any(Scalar::is_negative) {
                return false;
            }
            if weights.iter().sum::<Scalar>() != Scalar::one() {
                return false;
            }
            (0..target.dim()).all(|t| {
                let combo: Scalar = cloud.iter().zip(weights).map(|(p, w)| &p[t] * w).sum();
                combo == target[t]
            })
        }
    }
}

/// The extreme points of a cloud, in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremePoints {
    pub kept: Vec<Point>,
    pub indices: Vec<usize>,
    pub verdicts: Vec<CloudVerdict>,
}

/// Removes every point that is not a vertex of the hull of the cloud.
pub fn extreme_points(cloud: &[Point]) -> Result<ExtremePoints> {
    validate_cloud(cloud)?;
    let verdicts = (0..cloud.len())
        .map(|i| is_vertex_by_separation(cloud, i))
        .collect::<Result<Vec<_>>>()?;
    let indices: Vec<usize> = verdicts.iter().filter(|v| v.extreme).map(|v| v.index).collect();
    let kept = indices.iter().map(|&i| cloud[i].clone()).collect();
    Ok(ExtremePoints {
        kept,
        indices,
        verdicts,
    })
}
