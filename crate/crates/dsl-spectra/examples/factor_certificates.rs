//! Factors into single edges and cycles, with certificates either way.
//!
//! A graph on `n` vertices has a spanning subgraph whose components are
//! edges and cycles exactly when its fractional matching number reaches
//! `n/2`. When one exists we print explicit factor edges; when it does
//! not, we print a vertex set whose removal isolates too many vertices.

use dsl_spectra::{find_factor_backtracking, has_k2ck_factor, Graph, DEFAULT_FACTOR_CAP};

fn report(name: &str, g: &Graph) -> dsl_spectra::Result<()> {
    let (has, witness) = has_k2ck_factor(g);
    println!("{name}: factor = {}", if has { "yes" } else { "no" });
    if has {
        if let Some(edges) = find_factor_backtracking(g, DEFAULT_FACTOR_CAP)? {
            let items: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            println!("  edges: {}", items.join(" "));
        }
    } else if let Some(w) = witness {
        println!(
            "  witness: deleting {:?} isolates |S| + {} vertices",
            w.set, w.deficiency
        );
    }
    Ok(())
}

fn main() -> dsl_spectra::Result<()> {
    report("C7", &Graph::cycle(7)?)?;
    report("K4", &Graph::complete(4)?)?;
    report("P4", &Graph::path(4)?)?;
    // stars fail: removing the center isolates every leaf
    report("K_{1,3}", &Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])?)?;
    // two triangles sharing nothing still factor (each is a cycle)
    let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])?;
    report("2 x K3", &two_triangles)?;
    Ok(())
}
