//! Read polytopes in the plain and structured formats and write reports.
//!
//!     cargo run --example file_formats

use minkowski_core::io::{emit_report, parse_polytope, write_plain, write_structured, ReportFormat};
use minkowski_core::{minkowski_sum, Method};

const TRIANGLE: &str = "\
# a triangle with decimal and fractional coordinates
2 3
0 0
0.5 0
0 1/3
";

const SQUARE: &str = r#"{"dim": 2, "points": [[0, 0], ["1", 0], [1, 1], [0, "1"]]}"#;

fn main() -> minkowski_core::Result<()> {
    let triangle = parse_polytope(TRIANGLE)?;
    let square = parse_polytope(SQUARE)?;
    print!("{}", write_plain(&triangle));
    print!("{}", write_structured(&square));

    let sum = minkowski_sum(&triangle, &square, Method::Uniqueness)?;
    print!("{}", emit_report(&sum, ReportFormat::Text)?);
    let json = emit_report(&sum, ReportFormat::Structured)?;
    print!("{json}");
    assert_eq!(parse_polytope(&json)?, sum.polytope);

    match parse_polytope("2 2\n0 0\n0 0\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
