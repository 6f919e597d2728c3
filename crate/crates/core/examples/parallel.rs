//! Classify the 400 candidates of two 20-vertex polytopes in R^3 with a
//! varying number of workers. The report is identical for every worker count.
//!
//!     cargo run --release --example parallel

use std::time::Instant;

use minkowski_core::io::{emit_report, ReportFormat};
use minkowski_core::{minkowski_sum_with, Method, Point, Scalar, SumOptions, VPolytope};

fn moment_curve(offset: i64, twist: bool) -> VPolytope {
    let points = (0..20)
        .map(|i| {
            let t = Scalar::new(offset + 3 * i, 4);
            let (t2, t3) = (&t * &t, &t * &t * &t);
            Point::new(if twist { vec![t3, t, t2] } else { vec![t, t2, t3] })
        })
        .collect();
    VPolytope::new(3, points).unwrap()
}

fn main() {
    let (a, b) = (moment_curve(-29, false), moment_curve(-31, true));
    let mut reference = None;
    for jobs in [1, 2, 4] {
        let start = Instant::now();
        let result = minkowski_sum_with(
            &a,
            &b,
            SumOptions {
                method: Method::Uniqueness,
                jobs,
            },
        )
        .unwrap();
        let elapsed = start.elapsed();
        let text = emit_report(&result, ReportFormat::Text).unwrap();
        let same = reference.get_or_insert_with(|| text.clone()) == &text;
        println!(
            "jobs={jobs}: {} vertices in {elapsed:.2?}, identical output: {same}",
            result.accepted()
        );
    }
}
