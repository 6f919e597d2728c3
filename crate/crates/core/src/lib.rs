//! Exact vertex enumeration for Minkowski sums of V-polytopes.
//!
//! Given `A = conv(a_1..a_k)` and `B = conv(b_1..b_l)` in any dimension, every
//! vertex of `C = A + B` is some `a_u + b_v`. This crate classifies each of
//! the `k * l` candidates with one small linear program, solved exactly by a
//! built-in two-phase simplex, and attaches a certificate to every verdict.
//!
//! ```
//! use minkowski_core::{minkowski_sum, Method, VPolytope};
//!
//! let a = VPolytope::from_integer_rows(&[&[0, 0], &[1, 0]]).unwrap();
//! let b = VPolytope::from_integer_rows(&[&[0, 0], &[2, 0]]).unwrap();
//! let c = minkowski_sum(&a, &b, Method::Uniqueness).unwrap();
//! assert_eq!(c.vertices(), VPolytope::from_integer_rows(&[&[0, 0], &[3, 0]]).unwrap().points());
//! ```

pub mod engine;
pub mod error;
pub mod geometry;
pub mod io;
pub mod lp;
pub mod scalar;

pub use engine::{
    classify_pair, convex_hull_2d, extreme_points, is_vertex_by_separation, is_vertex_by_uniqueness, minkowski_sum,
    minkowski_sum_with, Certificate, Method, MinkowskiSumResult, PairVerdict, SumOptions,
};
pub use error::{Error, Result};
pub use geometry::{candidate_sums, point_add, CandidatePair, Point, VPolytope};
pub use scalar::Scalar;
