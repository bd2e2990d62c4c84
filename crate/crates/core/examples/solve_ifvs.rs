//! Decide IFVS on a few named graphs, or on a file given as argument.
//!
//!     cargo run --example solve_ifvs
//!     cargo run --example solve_ifvs -- graph.txt 3

use ifvs::graph::named;
use ifvs::io::{parse, Format};
use ifvs::{solve_ifvs, Decision, Graph, SolverOptions};

fn report(name: &str, g: &Graph, k: usize) {
    let out = solve_ifvs(g, k, &SolverOptions::default());
    match out.decision {
        Decision::Yes => {
            let cert = out.certificate.unwrap();
            assert!(g.is_ifvs(&cert));
            println!("{name:<22} k={k}: yes, {:?}", cert);
        }
        other => println!("{name:<22} k={k}: {}", other.as_str()),
    }
    println!(
        "{:<22}      {} candidates, {} DP cells, {} fallbacks",
        "", out.stats.candidates, out.stats.dp_cells, out.stats.fallbacks
    );
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let Some(path) = args.first() {
        let text = std::fs::read_to_string(path).expect("readable input");
        let g = parse(&text, Format::Auto).expect("valid graph");
        let k = args.get(1).map_or(3, |k| k.parse().expect("integer k"));
        report(path, &g, k);
        return;
    }
    report("path P_6", &named::path(6), 0);
    report("cycle C_4", &named::cycle(4), 1);
    report("cycle C_4", &named::cycle(4), 0);
    report("two triangles", &named::disjoint_union(&named::cycle(3), &named::cycle(3)), 2);
    report("Petersen", &named::petersen(), 3);
    report("K_4", &named::complete(4), 5);
}
