//! Report formatting for sums, single verdicts and point lists.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;

use super::format::{write_row, write_structured_fields};
use crate::engine::{Certificate, CloudCertificate, CloudVerdict, Method, MinkowskiSumResult, PairVerdict};
use crate::error::{Error, Result};
use crate::geometry::{Point, VPolytope};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReportFormat {
    #[default]
    Text,
    Structured,
}

impl FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "structured" | "json" => Ok(ReportFormat::Structured),
            other => Err(format!("unknown format {other:?} (expected text or structured)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumStats {
    pub k: usize,
    pub l: usize,
    pub candidates: usize,
    pub accepted: usize,
    pub method: Method,
    /// Wall time of the classification. Left out of reports unless set, so
    /// that default output is reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "as_millis")]
    pub elapsed: Option<Duration>,
}

fn as_millis<S: serde::Serializer>(d: &Option<Duration>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.map(|d| d.as_secs_f64() * 1e3).unwrap_or_default())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumReport {
    pub dim: usize,
    #[serde(rename = "points")]
    pub vertices: Vec<Point>,
    pub decompositions: Vec<(usize, usize)>,
    pub stats: SumStats,
}

impl SumReport {
    pub fn new(result: &MinkowskiSumResult, elapsed: Option<Duration>) -> Result<Self> {
        if result.vertices().is_empty() {
            return Err(Error::Internal("sum result has no vertices".into()));
        }
        if result.vertices().len() != result.decomposition.len() {
            return Err(Error::Internal(
                "vertex and decomposition lists differ in length".into(),
            ));
        }
        Ok(SumReport {
            dim: result.polytope.dim(),
            vertices: result.vertices().to_vec(),
            decompositions: result.decomposition.clone(),
            stats: SumStats {
                k: result.k,
                l: result.l,
                candidates: result.candidates(),
                accepted: result.accepted(),
                method: result.method,
                elapsed,
            },
        })
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Structured => {
                let mut out = String::from("{\n");
                write_structured_fields(&mut out, self.dim, &self.vertices);
                out.push_str(",\n  \"decompositions\": ");
                out.push_str(&serde_json::to_string(&self.decompositions).expect("pairs serialise"));
                out.push_str(",\n  \"stats\": ");
                out.push_str(&serde_json::to_string(&self.stats).expect("stats serialise"));
                out.push_str("\n}\n");
                out
            }
            ReportFormat::Text => {
                let mut out = String::new();
                out.push_str("# vertices\n");
                writeln!(out, "{} {}", self.dim, self.vertices.len()).unwrap();
                for p in &self.vertices {
                    write_row(&mut out, p);
                }
                out.push_str("# decompositions (u v, 0-based)\n");
                for (u, v) in &self.decompositions {
                    writeln!(out, "{u} {v}").unwrap();
                }
                out.push_str("# stats\n");
                let s = &self.stats;
                write!(
                    out,
                    "k={} l={} candidates={} accepted={} method={}",
                    s.k, s.l, s.candidates, s.accepted, s.method
                )
                .unwrap();
                if let Some(d) = s.elapsed {
                    write!(out, " elapsed_ms={:.3}", d.as_secs_f64() * 1e3).unwrap();
                }
                out.push('\n');
                out
            }
        }
    }
}

/// Renders a sum result deterministically (no timing information).
pub fn emit_report(result: &MinkowskiSumResult, format: ReportFormat) -> Result<String> {
    Ok(SumReport::new(result, None)?.render(format))
}

fn join(values: &[Scalar]) -> String {
    values.iter().map(Scalar::to_string).collect::<Vec<_>>().join(" ")
}

/// One verdict with its certificate.
pub fn emit_verdict(verdict: &PairVerdict, format: ReportFormat) -> String {
    if format == ReportFormat::Structured {
        let mut s = serde_json::to_string_pretty(verdict).expect("verdict serialises");
        s.push('\n');
        return s;
    }
    let mut out = String::new();
    writeln!(out, "pair u={} v={}", verdict.pair.u, verdict.pair.v).unwrap();
    writeln!(out, "sum {}", join(verdict.pair.sum.coords())).unwrap();
    writeln!(out, "method {}", verdict.method).unwrap();
    writeln!(out, "f* = {}", verdict.f_star).unwrap();
    writeln!(out, "vertex {}", if verdict.is_vertex { "yes" } else { "no" }).unwrap();
    match &verdict.certificate {
        Certificate::SeparatingHyperplane { gamma, gamma_uv } => {
            writeln!(out, "certificate separating-hyperplane").unwrap();
            writeln!(out, "gamma {}", join(gamma)).unwrap();
            writeln!(out, "gamma_uv {gamma_uv}").unwrap();
        }
        Certificate::AlternativeDecomposition(d) => {
            writeln!(out, "certificate alternative-decomposition").unwrap();
            writeln!(out, "alpha {}", join(&d.alpha)).unwrap();
            writeln!(out, "beta {}", join(&d.beta)).unwrap();
        }
        Certificate::UniqueDecomposition { dual } => {
            writeln!(out, "certificate unique-decomposition").unwrap();
            writeln!(out, "dual {}", join(dual)).unwrap();
        }
    }
    out
}

/// The extreme-point filter's output: kept points in plain polytope format,
/// followed by one comment line per input point.
pub fn emit_extreme(cloud: &[Point], kept: &[Point], verdicts: &[CloudVerdict], format: ReportFormat) -> String {
    let dim = cloud.first().map(Point::dim).unwrap_or(0);
    if format == ReportFormat::Structured {
        let value = serde_json::json!({ "dim": dim, "points": kept, "verdicts": verdicts });
        let mut s = serde_json::to_string_pretty(&value).expect("verdicts serialise");
        s.push('\n');
        return s;
    }
    let mut out = String::new();
    writeln!(out, "{} {}", dim, kept.len()).unwrap();
    for p in kept {
        write_row(&mut out, p);
    }
    for v in verdicts {
        let kind = match v.certificate {
            CloudCertificate::Separating { .. } => "separated",
            CloudCertificate::ConvexCombination { .. } => "combination",
        };
        writeln!(
            out,
            "# point {} extreme={} f*={} {}",
            v.index, v.extreme, v.f_star, kind
        )
        .unwrap();
    }
    out
}

/// A point list in plain polytope format.
pub fn emit_points(dim: usize, points: &[Point], format: ReportFormat) -> String {
    if format == ReportFormat::Structured {
        return super::format::write_structured(
            &VPolytope::new(dim, points.to_vec()).expect("hull points are distinct"),
        );
    }
    let mut out = String::new();
    writeln!(out, "{} {}", dim, points.len()).unwrap();
    for p in points {
        write_row(&mut out, p);
    }
    out
}
