//! Compare LP-based vertex enumeration with a planar convex hull on random
//! polygons.
//!
//!     cargo run --release --example hull_oracle -- 100

use std::collections::BTreeSet;

use minkowski_core::{candidate_sums, convex_hull_2d, extreme_points, minkowski_sum, Method, Point, Scalar, VPolytope};
use rand::{Rng, SeedableRng};

fn random_polygon(rng: &mut impl Rng) -> VPolytope {
    let cloud: BTreeSet<Point> = (0..rng.gen_range(4..14))
        .map(|_| {
            Point::new(
                (0..2)
                    .map(|_| Scalar::new(rng.gen_range(-16..=16), rng.gen_range(1..=8)))
                    .collect(),
            )
        })
        .collect();
    let cloud: Vec<Point> = cloud.into_iter().collect();
    VPolytope::new(2, extreme_points(&cloud).unwrap().kept).unwrap()
}

fn main() {
    let trials: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut agree = 0;
    for _ in 0..trials {
        let (a, b) = (random_polygon(&mut rng), random_polygon(&mut rng));
        let sums: Vec<Point> = candidate_sums(&a, &b).unwrap().into_iter().map(|c| c.sum).collect();
        let hull: BTreeSet<Point> = convex_hull_2d(&sums).unwrap().into_iter().collect();
        let lp: BTreeSet<Point> = minkowski_sum(&a, &b, Method::Uniqueness)
            .unwrap()
            .vertices()
            .iter()
            .cloned()
            .collect();
        if hull == lp {
            agree += 1;
        } else {
            println!("mismatch for\n  A = {:?}\n  B = {:?}", a.points(), b.points());
        }
    }
    println!("{agree}/{trials} instances agree with the monotone-chain hull");
}
