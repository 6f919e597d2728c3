//! Points, V-polytopes and the candidate sums `a_u + b_v`.

use std::collections::HashMap;
use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| Scalar::from_integer(c)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![Scalar::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    pub fn dot(&self, other: &[Scalar]) -> Scalar {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, factor: &Scalar) -> Point {
        Point(self.0.iter().map(|c| c * factor).collect())
    }

    pub fn sub(&self, other: &Point) -> Result<Point> {
        check_dims(self.dim(), other.dim())?;
        Ok(Point(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }
}

impl Index<usize> for Point {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<Vec<Scalar>> for Point {
    fn from(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Coordinate-wise exact sum of two points of equal dimension.
pub fn point_add(p: &Point, q: &Point) -> Result<Point> {
    check_dims(p.dim(), q.dim())?;
    Ok(Point(p.0.iter().zip(&q.0).map(|(a, b)| a + b).collect()))
}

/// A polytope given as the convex hull of a finite, duplicate-free point list.
///
/// The points need not be extreme; see [`crate::engine::extreme_points`] for
/// reducing a list to the vertices of its hull.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VPolytope {
    dim: usize,
    points: Vec<Point>,
}

impl VPolytope {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if points.is_empty() {
            return Err(Error::Empty);
        }
        let mut seen: HashMap<&Point, usize> = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            check_dims(dim, p.dim())?;
            if let Some(&first) = seen.get(p) {
                return Err(Error::DuplicatePoint { first, second: i });
            }
            seen.insert(p, i);
        }
        Ok(VPolytope { dim, points })
    }

    /// Infers the dimension from the first point.
    pub fn from_points(points: Vec<Point>) -> Result<Self> {
        let dim = points.first().ok_or(Error::Empty)?.dim();
        VPolytope::new(dim, points)
    }

    pub fn from_integer_rows(rows: &[&[i64]]) -> Result<Self> {
        VPolytope::from_points(rows.iter().map(|r| Point::from_integers(r)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn translate(&self, t: &Point) -> Result<VPolytope> {
        let points = self.points.iter().map(|p| point_add(p, t)).collect::<Result<_>>()?;
        VPolytope::new(self.dim, points)
    }

    pub fn scale(&self, factor: &Scalar) -> Result<VPolytope> {
        VPolytope::new(self.dim, self.points.iter().map(|p| p.scale(factor)).collect())
    }
}

/// One candidate `a_u + b_v` of the Minkowski sum.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CandidatePair {
    pub u: usize,
    pub v: usize,
    pub sum: Point,
}

/// All `k * l` sums in row-major order (`u` outer, `v` inner). Coinciding
/// sums from distinct pairs are all kept.
pub fn candidate_sums(a: &VPolytope, b: &VPolytope) -> Result<Vec<CandidatePair>> {
    check_dims(a.dim(), b.dim())?;
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (u, pa) in a.points().iter().enumerate() {
        for (v, pb) in b.points().iter().enumerate() {
            out.push(CandidatePair {
                u,
                v,
                sum: point_add(pa, pb)?,
            });
        }
    }
    Ok(out)
}
