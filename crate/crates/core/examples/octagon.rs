//! Sum of a diamond and a square: 16 candidate sums, 8 of them vertices.
//!
//!     cargo run --example octagon

use minkowski_core::{minkowski_sum, Method, VPolytope};

fn main() -> minkowski_core::Result<()> {
    let diamond = VPolytope::from_integer_rows(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]])?;
    let square = VPolytope::from_integer_rows(&[&[1, 1], &[-1, 1], &[-1, -1], &[1, -1]])?;

    let sum = minkowski_sum(&diamond, &square, Method::Uniqueness)?;
    println!("{} candidates, {} vertices", sum.candidates(), sum.accepted());
    for (vertex, (u, v)) in sum.vertices().iter().zip(&sum.decomposition) {
        println!("  {vertex} = {} + {}", diamond.points()[*u], square.points()[*v]);
    }
    for verdict in sum.verdicts.iter().filter(|v| !v.is_vertex) {
        println!("  rejected {} with f* = {}", verdict.pair.sum, verdict.f_star);
    }
    Ok(())
}
