//! Differential run of the solver against the brute-force oracle on
//! seeded random graphs.
//!
//!     cargo run --release --example oracle_check -- [graphs] [max_n]

use ifvs::generate::generate;
use ifvs::oracle::{brute_min_ifvs, check_ifvs};
use ifvs::{solve_ifvs, Decision, SolverOptions};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().unwrap()).collect();
    let graphs = args.first().copied().unwrap_or(300);
    let max_n = args.get(1).copied().unwrap_or(12);
    let opts = SolverOptions::default();
    let (mut agree, mut absent, mut fallbacks) = (0, 0, 0);
    for seed in 0..graphs as u64 {
        let n = 1 + seed as usize % max_n;
        let m = (seed as usize * 7 % (2 * n + 1)).min(n * (n - 1) / 2);
        let g = generate(n, m, seed).unwrap();
        let truth = brute_min_ifvs(&g).unwrap().map(|c| c.len());
        let k = truth.unwrap_or(n);
        let out = solve_ifvs(&g, k, &opts);
        fallbacks += out.stats.fallbacks;
        let ok = match (out.decision, truth) {
            (Decision::Yes, Some(t)) => {
                let c = out.certificate.unwrap().to_vec();
                c.len() == t && check_ifvs(&g, &c)
            }
            (Decision::Absent, None) => {
                absent += 1;
                true
            }
            _ => false,
        };
        assert!(ok, "disagreement on seed {seed}: {g:?}");
        agree += 1;
    }
    println!("{agree}/{graphs} agree ({absent} without any IFVS), {fallbacks} fallback activations");
}
