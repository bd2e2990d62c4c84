//! Growth of the IFVS decision procedure in n at a fixed budget k.
//!
//! Instances are random trees with a few extra edges, so the optimum stays
//! small while n doubles. Prints bench CSV rows plus the median time per n.
//!
//!     cargo run --release --example scaling -- [k] [extra_edges] [n0]

use ifvs::bench::{measure, write_records, Family};
use ifvs::SolverOptions;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let k = args.first().copied().unwrap_or(4);
    let extra = args.get(1).copied().unwrap_or(3);
    let n0 = args.get(2).copied().unwrap_or(100);
    let opts = SolverOptions::default();

    let mut records = Vec::new();
    let mut medians = Vec::new();
    for n in [n0, 2 * n0, 4 * n0] {
        let mut times = Vec::new();
        for seed in 0..5 {
            let g = Family::Tree.generate(n, n - 1 + extra, seed).unwrap();
            let rec = measure(&g, k, &opts);
            times.push(rec.wall_ms);
            records.push(rec);
        }
        times.sort_by(f64::total_cmp);
        medians.push((n, times[2]));
    }
    write_records(&records, std::io::stdout()).unwrap();
    for w in medians.windows(2) {
        eprintln!(
            "n {} -> {}: median {:.1} ms -> {:.1} ms (x{:.2})",
            w[0].0,
            w[1].0,
            w[0].1,
            w[1].1,
            w[1].1 / w[0].1
        );
    }
}
