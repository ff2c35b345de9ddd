//! Reading and writing the two supported graph encodings.

use dsl_spectra::{encode_graph6, format_edgelist, parse_edgelist, parse_graph6, Graph};

fn main() -> dsl_spectra::Result<()> {
    // edge list: `n m` header, one `u v` pair per line
    let text = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    let g = parse_edgelist(text)?;
    println!(
        "parsed C5: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );
    print!("round trip:\n{}", format_edgelist(&g));

    // graph6 short form
    let g6 = encode_graph6(&g)?;
    println!("graph6: {g6}");
    let back = parse_graph6(&g6)?;
    assert_eq!(back.edges(), g.edges());

    // known encodings
    for (s, name) in [("Bw", "K3"), ("Dhc", "C5"), ("@", "K1")] {
        let g = parse_graph6(s)?;
        println!(
            "{s:>4} decodes to {name}: n = {}, m = {}",
            g.vertex_count(),
            g.edge_count()
        );
    }

    // parse errors carry a location
    match parse_edgelist("3 2\n0 1\n0 9\n") {
        Err(e) => println!("bad endpoint: {e}"),
        Ok(_) => unreachable!(),
    }
    match parse_graph6("B") {
        Err(e) => println!("truncated graph6: {e}"),
        Ok(_) => unreachable!(),
    }

    let k62 = Graph::complete(62)?;
    let s = encode_graph6(&k62)?;
    println!("K62 encodes to {} characters", s.len());
    Ok(())
}
