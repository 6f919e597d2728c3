//! Planar convex hull by Andrew's monotone chain, over exact rationals.
//!
//! Used as an LP-free reference for the vertex sets computed elsewhere.

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::scalar::Scalar;

fn cross(o: &Point, a: &Point, b: &Point) -> Scalar {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Hull vertices in counter-clockwise order starting from the
/// lexicographically smallest point. Collinear boundary points are dropped;
/// a collinear cloud yields its two endpoints.
pub fn convex_hull_2d(cloud: &[Point]) -> Result<Vec<Point>> {
    if let Some(p) = cloud.iter().find(|p| p.dim() != 2) {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: p.dim(),
        });
    }
    let mut pts: Vec<&Point> = cloud.iter().collect();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return Ok(pts.into_iter().cloned().collect());
    }

    let mut hull: Vec<&Point> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && !cross(hull[hull.len() - 2], hull[hull.len() - 1], p).is_positive() {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && !cross(hull[hull.len() - 2], hull[hull.len() - 1], p).is_positive() {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    Ok(hull.into_iter().cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(rows: &[&[i64]]) -> Vec<Point> {
        rows.iter().map(|r| Point::from_integers(r)).collect()
    }

    #[test]
    fn collinear() {
        assert_eq!(
            convex_hull_2d(&pts(&[&[0, 0], &[1, 0], &[2, 0]])).unwrap(),
            pts(&[&[0, 0], &[2, 0]])
        );
        assert_eq!(
            convex_hull_2d(&pts(&[&[2, 2], &[1, 1], &[0, 0], &[1, 1]])).unwrap(),
            pts(&[&[0, 0], &[2, 2]])
        );
    }

    #[test]
    fn triangle_ccw() {
        assert_eq!(
            convex_hull_2d(&pts(&[&[0, 1], &[1, 0], &[0, 0]])).unwrap(),
            pts(&[&[0, 0], &[1, 0], &[0, 1]])
        );
    }

    #[test]
    fn single_point_and_duplicates() {
        assert_eq!(convex_hull_2d(&pts(&[&[3, 4]])).unwrap(), pts(&[&[3, 4]]));
        assert_eq!(convex_hull_2d(&pts(&[&[3, 4], &[3, 4]])).unwrap(), pts(&[&[3, 4]]));
        assert!(convex_hull_2d(&[]).unwrap().is_empty());
    }

    #[test]
    fn drops_edge_midpoints() {
        let cloud = pts(&[
            &[0, 0],
            &[1, 0],
            &[2, 0],
            &[2, 1],
            &[2, 2],
            &[1, 2],
            &[0, 2],
            &[0, 1],
            &[1, 1],
        ]);
        assert_eq!(
            convex_hull_2d(&cloud).unwrap(),
            pts(&[&[0, 0], &[2, 0], &[2, 2], &[0, 2]])
        );
    }

    #[test]
    fn octagon_from_diamond_plus_square() {
        let diamond = pts(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]);
        let square = pts(&[&[1, 1], &[-1, 1], &[-1, -1], &[1, -1]]);
        let sums: Vec<Point> = diamond
            .iter()
            .flat_map(|a| square.iter().map(move |b| crate::geometry::point_add(a, b).unwrap()))
            .collect();
        let hull = convex_hull_2d(&sums).unwrap();
        assert_eq!(
            hull,
            pts(&[
                &[-2, -1],
                &[-1, -2],
                &[1, -2],
                &[2, -1],
                &[2, 1],
                &[1, 2],
                &[-1, 2],
                &[-2, 1]
            ])
        );
    }

    #[test]
    fn rejects_non_planar() {
        assert!(convex_hull_2d(&pts(&[&[0, 0, 0]])).is_err());
    }
}
