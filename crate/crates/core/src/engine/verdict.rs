use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::geometry::{CandidatePair, VPolytope};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// One LP per candidate over the whole cloud of `k * l` sums.
    Separation,
    /// One `(n + 2) x (k + l)` LP per candidate on the decomposition weights.
    #[default]
    Uniqueness,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Separation => "separation",
            Method::Uniqueness => "uniqueness",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "separation" => Ok(Method::Separation),
            "uniqueness" => Ok(Method::Uniqueness),
            other => Err(format!("unknown method {other:?} (expected separation or uniqueness)")),
        }
    }
}

/// Convex weights on the points of `A` and of `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub alpha: Vec<Scalar>,
    pub beta: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `<gamma, a_u + b_v> - gamma_uv = f* > 0`, and `<= 0` at every other
    /// candidate sum.
    SeparatingHyperplane { gamma: Vec<Scalar>, gamma_uv: Scalar },
    /// A second way of writing `a_u + b_v` as (convex combination of `A`) +
    /// (convex combination of `B`).
    AlternativeDecomposition(Decomposition),
    /// The decomposition `alpha = e_u`, `beta = e_v` is the only one. `dual`
    /// is a vector `y` over the `n + 2` rows of the weight system bounding
    /// `2 - alpha_u - beta_v` above by 0 for every feasible `(alpha, beta)`.
    UniqueDecomposition { dual: Vec<Scalar> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub pair: CandidatePair,
    pub method: Method,
    pub is_vertex: bool,
    pub f_star: Scalar,
    pub certificate: Certificate,
    /// The maximiser returned by the uniqueness LP. Absent for separation.
    pub optimum: Option<Decomposition>,
}

impl PairVerdict {
    /// Re-verifies the verdict with exact arithmetic against the operands,
    /// independently of the LP solver.
    pub fn verify(&self, a: &VPolytope, b: &VPolytope) -> bool {
        let (u, v) = (self.pair.u, self.pair.v);
        if a.dim() != b.dim() || u >= a.len() || v >= b.len() {
            return false;
        }
        let Ok(sum) = crate::geometry::point_add(&a.points()[u], &b.points()[v]) else {
            return false;
        };
        if sum != self.pair.sum {
            return false;
        }
        let classification_ok = match self.method {
            Method::Separation => {
                self.is_vertex == self.f_star.is_positive() && (self.is_vertex || self.f_star.is_zero())
            }
            Method::Uniqueness => self.is_vertex == self.f_star.is_zero() && !self.f_star.is_negative(),
        };
        if !classification_ok {
            return false;
        }
        if let Some(opt) = &self.optimum {
            if self.method != Method::Uniqueness || !decomposes(a, b, u, v, opt) {
                return false;
            }
            if objective(opt, u, v) != self.f_star {
                return false;
            }
        }
        match (&self.certificate, self.is_vertex) {
            (Certificate::SeparatingHyperplane { gamma, gamma_uv }, true) => {
                self.method == Method::Separation && separates(a, b, u, v, gamma, gamma_uv, &self.f_star)
            }
            (Certificate::AlternativeDecomposition(d), false) => {
                if !decomposes(a, b, u, v, d) {
                    return false;
                }
                let gap = objective(d, u, v);
                match self.method {
                    Method::Uniqueness => gap == self.f_star && gap.is_positive(),
                    Method::Separation => gap.is_positive(),
                }
            }
            (Certificate::UniqueDecomposition { dual }, true) => {
                self.method == Method::Uniqueness && bounds_gap_by_zero(a, b, u, v, dual)
            }
            _ => false,
        }
    }
}

fn objective(d: &Decomposition, u: usize, v: usize) -> Scalar {
    Scalar::from_integer(2) - &d.alpha[u] - &d.beta[v]
}

fn decomposes(a: &VPolytope, b: &VPolytope, u: usize, v: usize, d: &Decomposition) -> bool {
    if d.alpha.len() != a.len() || d.beta.len() != b.len() {
        return false;
    }
    if d.alpha.iter().chain(&d.beta).any(Scalar::is_negative) {
        return false;
    }
    if d.alpha.iter().sum::<Scalar>() != Scalar::one() || d.beta.iter().sum::<Scalar>() != Scalar::one() {
        return false;
    }
    (0..a.dim()).all(|t| {
        let lhs: Scalar = a.points().iter().zip(&d.alpha).map(|(p, w)| &p[t] * w).sum::<Scalar>()
            + b.points().iter().zip(&d.beta).map(|(p, w)| &p[t] * w).sum::<Scalar>();
        lhs == &a.points()[u][t] + &b.points()[v][t]
    })
}

fn separates(
    a: &VPolytope,
    b: &VPolytope,
    u: usize,
    v: usize,
    gamma: &[Scalar],
    gamma_uv: &Scalar,
    f_star: &Scalar,
) -> bool {
    if gamma.len() != a.dim() || !f_star.is_positive() {
        return false;
    }
    // <gamma, a_i + b_j> - gamma_uv = <gamma, a_i> + <gamma, b_j> - gamma_uv
    let ga: Vec<Scalar> = a.points().iter().map(|p| p.dot(gamma)).collect();
    let gb: Vec<Scalar> = b.points().iter().map(|p| p.dot(gamma)).collect();
    for (i, x) in ga.iter().enumerate() {
        for (j, y) in gb.iter().enumerate() {
            let val = x + y - gamma_uv;
            if (i, j) == (u, v) {
                if &val != f_star {
                    return false;
                }
            } else if val.is_positive() {
                return false;
            }
        }
    }
    true
}

/// Weak duality for `max 2 - alpha_u - beta_v` over the weight system: the
/// dual `y = (y_coord, y_a, y_b)` must satisfy `<y_coord, a_i> + y_a >= -[i = u]`
/// and `<y_coord, b_j> + y_b >= -[j = v]`, and `2 + <y_coord, a_u + b_v> +
/// y_a + y_b` must vanish.
fn bounds_gap_by_zero(a: &VPolytope, b: &VPolytope, u: usize, v: usize, dual: &[Scalar]) -> bool {
    let n = a.dim();
    if dual.len() != n + 2 {
        return false;
    }
    let (y, rest) = dual.split_at(n);
    let (ya, yb) = (&rest[0], &rest[1]);
    let minus_one = -Scalar::one();
    let cost = |hit: bool| if hit { minus_one.clone() } else { Scalar::zero() };
    let a_ok = a
        .points()
        .iter()
        .enumerate()
        .all(|(i, p)| p.dot(y) + ya >= cost(i == u));
    let b_ok = b
        .points()
        .iter()
        .enumerate()
        .all(|(j, p)| p.dot(y) + yb >= cost(j == v));
    let bound = Scalar::from_integer(2) + a.points()[u].dot(y) + b.points()[v].dot(y) + ya + yb;
    a_ok && b_ok && bound.is_zero()
}
