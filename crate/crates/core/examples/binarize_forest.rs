//! Root the forest G - F and make it binary with white stand-in nodes.

use ifvs::forest::{binarize, root_forest};
use ifvs::graph::{named, Graph, VertexSet};

fn main() {
    // A star with five leaves: the centre gets a path of four white nodes.
    let star = named::star(5);
    let h = binarize(&root_forest(&star, &VertexSet::new(star.n())).unwrap());
    println!("star K_1,5: {} black, {} white", h.black_count(), h.white_count());
    print!("{}", h.dump());

    // A wheel minus its hub is a cycle; with F = {hub, 1} what remains is a path.
    let wheel = Graph::from_edges(
        7,
        (1..7).map(|v| (0, v)).chain((1..7).map(|v| (v, v % 6 + 1))),
    )
    .unwrap();
    let f = VertexSet::from_iter_in(7, [0, 1]);
    let rooted = root_forest(&wheel, &f).unwrap();
    println!("\nwheel W_6 - {{0, 1}}: roots {:?}", rooted.roots());
    let h = binarize(&rooted);
    print!("{}", h.dump());
    assert_eq!(h.contract(7), rooted);
}
