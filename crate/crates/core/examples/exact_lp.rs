//! The exact two-phase simplex on its own.
//!
//!     cargo run --example exact_lp

use minkowski_core::lp::{
    check_certificate, check_dual_certificate, from_inequalities, solve, InequalitySystem, LpOutcome, StandardFormLp,
};
use minkowski_core::Scalar;

fn main() {
    // maximise x + y  s.t.  2x + y <= 4,  x + 3y <= 6 (slacks written out).
    let lp = StandardFormLp::from_integers(&[&[2, 1, 1, 0], &[1, 3, 0, 1]], &[4, 6], &[1, 1, 0, 0], 0).unwrap();
    match solve(&lp).unwrap() {
        out @ LpOutcome::Optimal(_) => {
            let sol = out.optimal().unwrap();
            println!(
                "value {} at {:?}, basis {:?}, duals {:?}",
                sol.value, sol.solution, sol.basis, sol.duals
            );
            println!(
                "primal ok {}, dual ok {}",
                check_certificate(&lp, &out),
                check_dual_certificate(&lp, &out)
            );
        }
        other => println!("{:?}", other.status()),
    }

    // Free variables and <= rows: maximise y subject to y <= 1/3.
    let sys = InequalitySystem {
        g: vec![vec![Scalar::one()]],
        h: vec![Scalar::new(1, 3)],
        objective: vec![Scalar::one()],
    };
    let (std_lp, map) = from_inequalities(&sys).unwrap();
    let out = solve(&std_lp).unwrap();
    println!("y* = {:?}", map.recover(out.solution().unwrap()));

    let infeasible = StandardFormLp::from_integers(&[&[1, 1]], &[-1], &[1, 0], 0).unwrap();
    let unbounded = StandardFormLp::from_integers(&[&[1, -1]], &[0], &[1, 0], 0).unwrap();
    println!(
        "{:?} / {:?}",
        solve(&infeasible).unwrap().status(),
        solve(&unbounded).unwrap().status()
    );
}
