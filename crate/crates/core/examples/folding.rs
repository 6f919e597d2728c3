//! Sums of more than two polytopes by folding, in R^3, with both methods.
//!
//!     cargo run --example folding

use minkowski_core::{minkowski_sum, Method, VPolytope};

fn main() -> minkowski_core::Result<()> {
    let segment_x = VPolytope::from_integer_rows(&[&[0, 0, 0], &[1, 0, 0]])?;
    let segment_y = VPolytope::from_integer_rows(&[&[0, 0, 0], &[0, 1, 0]])?;
    let segment_z = VPolytope::from_integer_rows(&[&[0, 0, 0], &[0, 0, 1]])?;

    // Three segments along the axes sum to the unit cube.
    let square = minkowski_sum(&segment_x, &segment_y, Method::Uniqueness)?.polytope;
    let cube = minkowski_sum(&square, &segment_z, Method::Uniqueness)?;
    println!("cube has {} vertices: {:?}", cube.accepted(), cube.vertices());

    let skew = VPolytope::from_integer_rows(&[&[1, 1, 1], &[-1, 0, 2], &[0, -1, 0], &[2, 2, -1]])?;
    let by_uniqueness = minkowski_sum(&cube.polytope, &skew, Method::Uniqueness)?;
    let by_separation = minkowski_sum(&cube.polytope, &skew, Method::Separation)?;
    println!(
        "cube + tetrahedron: {} of {} candidates are vertices (methods agree: {})",
        by_uniqueness.accepted(),
        by_uniqueness.candidates(),
        by_uniqueness.vertices() == by_separation.vertices()
    );
    Ok(())
}
