//! Distance matrix, transmissions, and the full spectrum of `Q = Tr + D`.

use dsl_spectra::{distance_matrix, dsl_matrix, transmissions, Graph, DEFAULT_TOL};

fn main() -> dsl_spectra::Result<()> {
    let g = Graph::path(5)?;
    println!(
        "P5, {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );

    let d = distance_matrix(&g)?;
    println!("distance matrix:");
    for i in 0..d.order() {
        let row: Vec<String> = (0..d.order()).map(|j| d.get(i, j).to_string()).collect();
        println!("  {}", row.join(" "));
    }

    let tr = transmissions(&g)?;
    println!(
        "transmissions: {:?}  (max {}, min {})",
        tr.values(),
        tr.max(),
        tr.min()
    );

    let q = dsl_matrix(&g)?;
    let spectrum = q.full_spectrum(DEFAULT_TOL)?;
    let values: Vec<String> = spectrum
        .values()
        .iter()
        .map(|v| format!("{v:.6}"))
        .collect();
    println!("Q spectrum (descending): [{}]", values.join(", "));
    println!("spectral radius: {:.6}", spectrum.radius());

    // row sums of Q sandwich the radius
    let sums: Vec<i64> = (0..q.order()).map(|i| q.row_sum(i)).collect();
    println!("Q row sums: {sums:?}");
    Ok(())
}
