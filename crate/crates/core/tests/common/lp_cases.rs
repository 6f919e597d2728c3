//! Hand-solved LP instances with expected values worked out by hand.

use minkowski_core::lp::StandardFormLp;
use minkowski_core::Scalar;

pub enum Expect {
    Optimal {
        value: Scalar,
        solution: Option<Vec<Scalar>>,
    },
    Infeasible,
    Unbounded,
}

pub struct LpCase {
    pub name: &'static str,
    pub lp: StandardFormLp,
    pub expect: Expect,
}

fn q(text: &str) -> Scalar {
    text.parse().unwrap()
}

fn row(texts: &[&str]) -> Vec<Scalar> {
    texts.iter().map(|t| q(t)).collect()
}

fn lp(a: &[&[&str]], b: &[&str], c: &[&str], constant: &str) -> StandardFormLp {
    StandardFormLp::new(a.iter().map(|r| row(r)).collect(), row(b), row(c), q(constant)).unwrap()
}

fn optimal(value: &str, solution: Option<&[&str]>) -> Expect {
    Expect::Optimal {
        value: q(value),
        solution: solution.map(row),
    }
}

pub fn cases() -> Vec<LpCase> {
    vec![
        LpCase {
            name: "unit simplex",
            lp: lp(&[&["1", "1"]], &["1"], &["1", "0"], "0"),
            expect: optimal("1", Some(&["1", "0"])),
        },
        LpCase {
            name: "negative rhs with nonnegative variables",
            lp: lp(&[&["1", "1"]], &["-1"], &["1", "0"], "0"),
            expect: Expect::Infeasible,
        },
        LpCase {
            name: "ray (t, t)",
            lp: lp(&[&["1", "-1"]], &["0"], &["1", "0"], "0"),
            expect: Expect::Unbounded,
        },
        LpCase {
            name: "minimisation as negated maximisation",
            lp: lp(&[&["1", "2"]], &["4"], &["-1", "-1"], "0"),
            expect: optimal("-2", Some(&["0", "2"])),
        },
        LpCase {
            name: "textbook product mix with slacks",
            lp: lp(
                &[
                    &["1", "0", "1", "0", "0"],
                    &["0", "2", "0", "1", "0"],
                    &["3", "2", "0", "0", "1"],
                ],
                &["4", "12", "18"],
                &["3", "5", "0", "0", "0"],
                "0",
            ),
            expect: optimal("36", Some(&["2", "6", "2", "0", "0"])),
        },
        LpCase {
            // Cycles under largest-coefficient pricing without an anti-cycling rule.
            name: "degenerate cycling instance",
            lp: lp(
                &[
                    &["1", "0", "0", "1/4", "-8", "-1", "9"],
                    &["0", "1", "0", "1/2", "-12", "-1/2", "3"],
                    &["0", "0", "1", "0", "0", "1", "0"],
                ],
                &["0", "0", "1"],
                &["0", "0", "0", "3/4", "-20", "1/2", "-6"],
                "0",
            ),
            expect: optimal("5/4", Some(&["3/4", "0", "0", "1", "0", "1", "0"])),
        },
        LpCase {
            name: "degenerate start at zero rhs",
            lp: lp(
                &[&["1", "-1", "1", "0"], &["1", "0", "0", "1"]],
                &["0", "1"],
                &["1", "0", "0", "0"],
                "0",
            ),
            expect: optimal("1", None),
        },
        LpCase {
            name: "duplicated row (rank deficient)",
            lp: lp(
                &[&["1", "1", "1"], &["2", "2", "2"]],
                &["3", "6"],
                &["1", "2", "0"],
                "0",
            ),
            expect: optimal("6", Some(&["0", "3", "0"])),
        },
        LpCase {
            name: "zero row (rank deficient)",
            lp: lp(&[&["0", "0"], &["1", "1"]], &["0", "1"], &["0", "1"], "0"),
            expect: optimal("1", Some(&["0", "1"])),
        },
        LpCase {
            name: "inconsistent parallel rows",
            lp: lp(&[&["1", "1"], &["1", "1"]], &["1", "2"], &["1", "0"], "0"),
            expect: Expect::Infeasible,
        },
        LpCase {
            name: "negative rhs, feasible",
            lp: lp(&[&["-1", "-1"]], &["-2"], &["-1", "0"], "0"),
            expect: optimal("0", Some(&["0", "2"])),
        },
        LpCase {
            name: "objective constant",
            lp: lp(&[&["1", "1"]], &["3"], &["1", "-1"], "5"),
            expect: optimal("8", Some(&["3", "0"])),
        },
        LpCase {
            name: "unbounded after phase one",
            lp: lp(&[&["1", "-1"]], &["1"], &["0", "1"], "0"),
            expect: Expect::Unbounded,
        },
        LpCase {
            name: "infeasible pair of rows",
            lp: lp(
                &[&["1", "1", "0"], &["1", "0", "-1"]],
                &["1", "2"],
                &["1", "0", "0"],
                "0",
            ),
            expect: Expect::Infeasible,
        },
        LpCase {
            name: "zero objective",
            lp: lp(&[&["1", "1"]], &["1"], &["0", "0"], "0"),
            expect: optimal("0", None),
        },
        LpCase {
            name: "fractional vertex",
            lp: lp(
                &[&["2", "1", "1", "0"], &["1", "3", "0", "1"]],
                &["4", "6"],
                &["1", "1", "0", "0"],
                "0",
            ),
            expect: optimal("14/5", Some(&["6/5", "8/5", "0", "0"])),
        },
        LpCase {
            name: "Klee-Minty cube, n = 3",
            lp: lp(
                &[
                    &["1", "0", "0", "1", "0", "0"],
                    &["4", "1", "0", "0", "1", "0"],
                    &["8", "4", "1", "0", "0", "1"],
                ],
                &["5", "25", "125"],
                &["4", "2", "1", "0", "0", "0"],
                "0",
            ),
            expect: optimal("125", Some(&["0", "0", "125", "5", "25", "0"])),
        },
        LpCase {
            name: "single scaled variable",
            lp: lp(&[&["3"]], &["6"], &["-1"], "0"),
            expect: optimal("-2", Some(&["2"])),
        },
        LpCase {
            name: "negated duplicate rows",
            lp: lp(&[&["1", "1"], &["-1", "-1"]], &["2", "-2"], &["1", "0"], "0"),
            expect: optimal("2", Some(&["2", "0"])),
        },
        LpCase {
            name: "decomposition weights of two collinear segments",
            lp: lp(
                &[
                    &["0", "1", "0", "2"],
                    &["0", "0", "0", "0"],
                    &["1", "1", "0", "0"],
                    &["0", "0", "1", "1"],
                ],
                &["1", "0", "1", "1"],
                &["0", "-1", "-1", "0"],
                "2",
            ),
            expect: optimal("3/2", Some(&["1", "0", "1/2", "1/2"])),
        },
        LpCase {
            name: "ratio-test ties",
            lp: lp(
                &[
                    &["1", "0", "0", "1", "0", "0"],
                    &["0", "1", "0", "0", "1", "0"],
                    &["1", "1", "1", "0", "0", "1"],
                ],
                &["1", "1", "2"],
                &["1", "1", "1", "0", "0", "0"],
                "0",
            ),
            expect: optimal("2", None),
        },
    ]
}
