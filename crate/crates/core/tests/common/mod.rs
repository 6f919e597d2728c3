#![allow(dead_code)]

pub mod lp_cases;

use std::collections::BTreeSet;

use minkowski_core::{extreme_points, Point, Scalar, VPolytope};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p / q` with `|p| <= 16` and `1 <= q <= 8`.
pub fn small_rational(rng: &mut impl Rng) -> Scalar {
    Scalar::new(rng.gen_range(-16..=16), rng.gen_range(1..=8))
}

pub fn random_cloud(rng: &mut impl Rng, dim: usize, size: usize) -> Vec<Point> {
    let set: BTreeSet<Point> = (0..size)
        .map(|_| Point::new((0..dim).map(|_| small_rational(rng)).collect()))
        .collect();
    set.into_iter().collect()
}

/// Hull of a random cloud, reduced to its extreme points, with a vertex
/// count in `min..=max`.
pub fn random_polytope(
    rng: &mut impl Rng,
    dim: usize,
    min: usize,
    max: usize,
    cloud_size: std::ops::RangeInclusive<usize>,
) -> VPolytope {
    loop {
        let size = rng.gen_range(cloud_size.clone());
        let cloud = random_cloud(rng, dim, size);
        let kept = extreme_points(&cloud).unwrap().kept;
        if (min..=max).contains(&kept.len()) {
            return VPolytope::new(dim, kept).unwrap();
        }
    }
}

/// Convex polygon with 3 to 10 vertices.
pub fn random_polygon(rng: &mut impl Rng) -> VPolytope {
    random_polytope(rng, 2, 3, 10, 4..=18)
}

pub fn polygon_pairs(seed: u64, count: usize) -> Vec<(VPolytope, VPolytope)> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| (random_polygon(&mut r), random_polygon(&mut r)))
        .collect()
}

/// Pairs in dimension 3 and 4 with at most 8 vertices each.
pub fn higher_dim_pairs(seed: u64, count: usize) -> Vec<(VPolytope, VPolytope)> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let dim = 3 + i % 2;
            let a = random_polytope(&mut r, dim, 1, 8, 1..=8);
            let b = random_polytope(&mut r, dim, 1, 8, 1..=8);
            (a, b)
        })
        .collect()
}

pub fn random_point(rng: &mut impl Rng, dim: usize) -> Point {
    Point::new((0..dim).map(|_| small_rational(rng)).collect())
}

pub fn as_set(points: &[Point]) -> BTreeSet<Point> {
    points.iter().cloned().collect()
}

pub fn poly(rows: &[&[i64]]) -> VPolytope {
    VPolytope::from_integer_rows(rows).unwrap()
}
