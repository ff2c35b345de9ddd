//! Spectral radius of the distance signless Laplacian.
//!
//! Builds a few small graphs and prints the largest eigenvalue of
//! `Q = Tr + D`. For complete graphs the value is exactly `2n - 2`,
//! which makes a handy sanity check.

use dsl_spectra::{eta, Graph};

fn main() -> dsl_spectra::Result<()> {
    let examples = [
        ("K4", Graph::complete(4)?),
        ("C5", Graph::cycle(5)?),
        ("P6", Graph::path(6)?),
        (
            "star K_{1,3}",
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])?,
        ),
    ];
    for (name, g) in &examples {
        println!("eta({name}) = {:.6}", eta(g)?);
    }

    // exact values for complete graphs
    for n in 2..=10 {
        let v = eta(&Graph::complete(n)?)?;
        let exact = (2 * n - 2) as f64;
        println!(
            "eta(K{n}) = {v:.12}  (exact {exact}, error {:.1e})",
            (v - exact).abs()
        );
    }
    Ok(())
}
