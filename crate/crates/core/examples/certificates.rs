//! Classify single candidates with both LPs and re-check their certificates.
//!
//!     cargo run --example certificates

use minkowski_core::{classify_pair, Certificate, Method, VPolytope};

fn main() -> minkowski_core::Result<()> {
    let a = VPolytope::from_integer_rows(&[&[0, 0], &[1, 0]])?;
    let b = VPolytope::from_integer_rows(&[&[0, 0], &[2, 0]])?;

    for (u, v) in [(0, 0), (1, 0), (1, 1)] {
        for method in [Method::Uniqueness, Method::Separation] {
            let verdict = classify_pair(&a, &b, u, v, method)?;
            let kind = match &verdict.certificate {
                Certificate::SeparatingHyperplane { gamma, gamma_uv } => {
                    format!("hyperplane gamma={gamma:?} gamma_uv={gamma_uv}")
                }
                Certificate::AlternativeDecomposition(d) => format!("alpha={:?} beta={:?}", d.alpha, d.beta),
                Certificate::UniqueDecomposition { dual } => format!("unique, dual bound {dual:?}"),
            };
            println!(
                "a_{u} + b_{v} = {}  [{method}] vertex={} f*={}  {kind}  verified={}",
                verdict.pair.sum,
                verdict.is_vertex,
                verdict.f_star,
                verdict.verify(&a, &b)
            );
        }
    }
    Ok(())
}
