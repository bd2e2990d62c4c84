//! Reading and writing the two supported text formats.

use ifvs::io::{detect, parse, to_dimacs, to_edge_list, Format};

fn main() {
    let edge_list = "4 4\n0 1\n1 2\n2 3\n3 0\n";
    let dimacs = "c the same 4-cycle\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
    let a = parse(edge_list, Format::Auto).unwrap();
    let b = parse(dimacs, Format::Auto).unwrap();
    println!("detected: {:?} / {:?}", detect(edge_list), detect(dimacs));
    assert_eq!(a, b);
    print!("edge list:\n{}DIMACS:\n{}", to_edge_list(&a), to_dimacs(&a));

    match parse("3 2\n0 1\n1 1\n", Format::Edgelist) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
