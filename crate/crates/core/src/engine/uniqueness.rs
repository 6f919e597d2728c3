//! Vertex test by uniqueness of the decomposition `c = a_u + b_v`.
//!
//! The weights `(alpha, beta) >= 0` with `sum alpha = sum beta = 1` and
//! `sum alpha_i a_i + sum beta_j b_j = a_u + b_v` always admit the trivial
//! solution `alpha = e_u, beta = e_v`. Maximising `2 - alpha_u - beta_v`
//! over them gives 0 exactly when that solution is the only one, i.e. when
//! `a_u + b_v` is a vertex of `A + B`.

use crate::engine::verdict::{Certificate, Decomposition, Method, PairVerdict};
use crate::error::{Error, Result};
use crate::geometry::{point_add, CandidatePair, VPolytope};
use crate::lp::{solve, LpOutcome, StandardFormLp};
use crate::scalar::Scalar;

/// The weight system for a fixed `(A, B)`. Only the right-hand side and the
/// objective depend on the tested pair.
#[derive(Clone, Debug)]
pub struct UniquenessSystem<'a> {
    a: &'a VPolytope,
    b: &'a VPolytope,
    matrix: Vec<Vec<Scalar>>,
}

impl<'a> UniquenessSystem<'a> {
    pub fn new(a: &'a VPolytope, b: &'a VPolytope) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                found: b.dim(),
            });
        }
        let (n, k, l) = (a.dim(), a.len(), b.len());
        let mut matrix = vec![Vec::with_capacity(k + l); n + 2];
        for (t, row) in matrix.iter_mut().take(n).enumerate() {
            row.extend(a.points().iter().map(|p| p[t].clone()));
            row.extend(b.points().iter().map(|p| p[t].clone()));
        }
        matrix[n] = (0..k + l)
            .map(|j| if j < k { Scalar::one() } else { Scalar::zero() })
            .collect();
        matrix[n + 1] = (0..k + l)
            .map(|j| if j < k { Scalar::zero() } else { Scalar::one() })
            .collect();
        Ok(UniquenessSystem { a, b, matrix })
    }

    pub fn lp_for(&self, u: usize, v: usize) -> Result<StandardFormLp> {
        let (k, l) = (self.a.len(), self.b.len());
        if u >= k {
            return Err(Error::IndexOutOfRange { index: u, len: k });
        }
        if v >= l {
            return Err(Error::IndexOutOfRange { index: v, len: l });
        }
        let sum = point_add(&self.a.points()[u], &self.b.points()[v])?;
        let mut rhs = sum.into_coords();
        rhs.push(Scalar::one());
        rhs.push(Scalar::one());
        let mut c = vec![Scalar::zero(); k + l];
        c[u] = -Scalar::one();
        c[k + v] = -Scalar::one();
        Ok(StandardFormLp::new(
            self.matrix.clone(),
            rhs,
            c,
            Scalar::from_integer(2),
        )?)
    }

    pub fn classify(&self, u: usize, v: usize) -> Result<PairVerdict> {
        let lp = self.lp_for(u, v)?;
        let sol = match solve(&lp)? {
            LpOutcome::Optimal(sol) => sol,
            other => {
                return Err(Error::Internal(format!(
                    "uniqueness LP for pair ({u}, {v}) returned {:?}; it is feasible and bounded by construction",
                    other.status()
                )))
            }
        };
        let f_star = sol.value;
        if f_star.is_negative() || f_star > 2 {
            return Err(Error::Internal(format!("uniqueness optimum {f_star} outside [0, 2]")));
        }
        let k = self.a.len();
        let mut alpha = sol.solution;
        let beta = alpha.split_off(k);
        let optimum = Decomposition { alpha, beta };
        let is_vertex = f_star.is_zero();
        let certificate = if is_vertex {
            Certificate::UniqueDecomposition { dual: sol.duals }
        } else {
            Certificate::AlternativeDecomposition(optimum.clone())
        };
        let sum = lp.b[..self.a.dim()].to_vec().into();
        Ok(PairVerdict {
            pair: CandidatePair { u, v, sum },
            method: Method::Uniqueness,
            is_vertex,
            f_star,
            certificate,
            optimum: Some(optimum),
        })
    }
}

/// Classifies the single candidate `a_u + b_v`.
pub fn is_vertex_by_uniqueness(a: &VPolytope, b: &VPolytope, u: usize, v: usize) -> Result<PairVerdict> {
    UniquenessSystem::new(a, b)?.classify(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::check_certificate;

    fn square() -> VPolytope {
        VPolytope::from_integer_rows(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]).unwrap()
    }

    fn segments() -> (VPolytope, VPolytope) {
        (
            VPolytope::from_integer_rows(&[&[0, 0], &[1, 0]]).unwrap(),
            VPolytope::from_integer_rows(&[&[0, 0], &[2, 0]]).unwrap(),
        )
    }

    #[test]
    fn doubled_square_corner() {
        let sq = square();
        let v = is_vertex_by_uniqueness(&sq, &sq, 0, 0).unwrap();
        assert!(v.is_vertex);
        assert_eq!(v.f_star, 0);
        assert!(matches!(v.certificate, Certificate::UniqueDecomposition { .. }));
        assert!(v.verify(&sq, &sq));
    }

    #[test]
    fn segment_interior_pair() {
        let (a, b) = segments();
        let v = is_vertex_by_uniqueness(&a, &b, 1, 0).unwrap();
        assert!(!v.is_vertex);
        assert_eq!(v.f_star, Scalar::new(3, 2));
        let expected = Decomposition {
            alpha: vec![Scalar::one(), Scalar::zero()],
            beta: vec![Scalar::new(1, 2), Scalar::new(1, 2)],
        };
        assert_eq!(v.certificate, Certificate::AlternativeDecomposition(expected));
        assert!(v.verify(&a, &b));
    }

    #[test]
    fn segment_origin_pair() {
        let (a, b) = segments();
        let v = is_vertex_by_uniqueness(&a, &b, 0, 0).unwrap();
        assert!(v.is_vertex);
        assert_eq!(v.f_star, 0);
        assert!(v.verify(&a, &b));
    }

    #[test]
    fn every_lp_certificate_checks() {
        let (a, b) = segments();
        let sys = UniquenessSystem::new(&a, &b).unwrap();
        for u in 0..2 {
            for v in 0..2 {
                let lp = sys.lp_for(u, v).unwrap();
                assert!(check_certificate(&lp, &solve(&lp).unwrap()));
            }
        }
    }

    #[test]
    fn tampered_verdicts_fail() {
        let (a, b) = segments();
        let mut v = is_vertex_by_uniqueness(&a, &b, 1, 0).unwrap();
        v.f_star = Scalar::one();
        assert!(!v.verify(&a, &b));

        let mut w = is_vertex_by_uniqueness(&a, &b, 0, 0).unwrap();
        if let Certificate::UniqueDecomposition { dual } = &mut w.certificate {
            dual[2] = &dual[2] + Scalar::one();
        }
        assert!(!w.verify(&a, &b));
    }

    #[test]
    fn index_and_dimension_errors() {
        let (a, b) = segments();
        assert!(matches!(
            is_vertex_by_uniqueness(&a, &b, 2, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
        let line = VPolytope::from_integer_rows(&[&[0]]).unwrap();
        assert!(matches!(
            is_vertex_by_uniqueness(&a, &line, 0, 0),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
