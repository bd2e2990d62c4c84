//! The extension step on its own: a minimum IFVS from any feedback vertex
//! set, with the DP tables and the soundness gate made visible.

use ifvs::extension::{min_ifvs_given_fvs, Gate};
use ifvs::graph::{named, Graph, VertexSet};

fn main() {
    // C_4 with F = {0}: the trace shows the binarized forest, every
    // candidate S ⊆ F and the full M / P tables.
    let c4 = named::cycle(4);
    let out = min_ifvs_given_fvs(&c4, &VertexSet::from_iter_in(4, [0]), true).unwrap();
    print!("{}", out.trace.unwrap());
    println!("minimum IFVS of C_4: {:?}\n", out.certificate.unwrap());

    // The same cycle labelled 0-2-1-3 with F = {0, 1}. For S = {} each of
    // the single-vertex trees {2} and {3} links both components, and the
    // per-tree DP happily keeps both. The witness fails validation and the
    // exact search takes over.
    let g = Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
    let out = min_ifvs_given_fvs(&g, &VertexSet::from_iter_in(4, [0, 1]), false).unwrap();
    for c in &out.candidates {
        println!(
            "S mask {:#04b}: l={} dp={} gate={:?}",
            c.mask, c.components, c.dp_cost, c.gate
        );
        if let Gate::Fallback(found) = c.gate {
            println!("    exact search found an extension of size {found:?}");
        }
    }
    println!("minimum IFVS: {:?} ({} fallback)", out.certificate.unwrap(), out.stats.fallbacks);
}
