//! Reduce a point cloud to the vertices of its hull before summing.
//!
//!     cargo run --example extreme_filter

use minkowski_core::engine::CloudCertificate;
use minkowski_core::{extreme_points, Point};

fn main() -> minkowski_core::Result<()> {
    let cloud: Vec<Point> = [
        [0, 0, 0],
        [2, 0, 0],
        [0, 2, 0],
        [0, 0, 2],
        [1, 1, 0],
        [0, 0, 1],
        [1, 1, 1],
    ]
    .iter()
    .map(|p| Point::from_integers(p))
    .collect();
    let filtered = extreme_points(&cloud)?;
    println!("kept {:?}", filtered.kept);
    for v in &filtered.verdicts {
        match &v.certificate {
            CloudCertificate::Separating { gamma, offset } => {
                println!(
                    "  {} is a vertex: <{gamma:?}, x> <= {offset} holds for every other point",
                    cloud[v.index]
                );
            }
            CloudCertificate::ConvexCombination { weights } => {
                let parts: Vec<String> = weights
                    .iter()
                    .enumerate()
                    .filter(|(_, w)| !w.is_zero())
                    .map(|(j, w)| format!("{w}*{}", cloud[j]))
                    .collect();
                println!("  {} = {}", cloud[v.index], parts.join(" + "));
            }
        }
    }
    Ok(())
}
