//! Feedback vertex set through the edge-subdivision reduction.
//!
//! Subdividing every edge makes the original vertices pairwise
//! non-adjacent, so an FVS of `g` is an IFVS of the subdivided graph and
//! the budget carries over unchanged.

use ifvs::graph::named;
use ifvs::{solve_fvs, subdivide, Decision, SolverOptions};

fn main() {
    let g = named::petersen();
    let (sub, map) = subdivide(&g);
    println!("Petersen: n={} m={}; subdivided: n={} m={}", g.n(), g.m(), sub.n(), sub.m());
    println!("edge (0,1) became vertex {:?}", map.edge_vertex(0, 1));

    let opts = SolverOptions::default();
    for k in 2..=3 {
        let out = solve_fvs(&g, k, &opts);
        print!("k={k}: {}", out.decision.as_str());
        if out.decision == Decision::Yes {
            let cert = out.certificate.unwrap();
            assert!(g.is_fvs(&cert));
            print!(" {:?}", cert);
        }
        println!();
    }

    let k5 = named::complete(5);
    let out = solve_fvs(&k5, 3, &opts);
    println!("K_5, k=3: {} {:?}", out.decision.as_str(), out.certificate.unwrap());
}
