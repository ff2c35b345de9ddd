//! Fractional matching numbers two ways, plus an optimal weight
//! assignment.
//!
//! The fast path matches the bipartite double cover; the brute path
//! maximizes the deficiency `i(G - S) - |S|` over all vertex subsets.
//! Both land on the same half-integer.

use dsl_spectra::{
    fractional_matching_number_brute, fractional_matching_number_fast, max_deficiency_brute,
    optimal_fractional_matching, Graph, DEFAULT_BRUTE_CAP,
};

fn main() -> dsl_spectra::Result<()> {
    let examples = [
        ("C5", Graph::cycle(5)?),
        ("K4", Graph::complete(4)?),
        (
            "star K_{1,3}",
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])?,
        ),
        ("P6", Graph::path(6)?),
    ];
    for (name, g) in &examples {
        let fast = fractional_matching_number_fast(g);
        let brute = fractional_matching_number_brute(g, DEFAULT_BRUTE_CAP)?;
        println!("mu_f({name}) = {fast}  (brute agrees: {})", fast == brute);

        let witness = max_deficiency_brute(g, DEFAULT_BRUTE_CAP)?;
        println!(
            "  worst set {:?} leaves deficiency {}",
            witness.set, witness.deficiency
        );

        let m = optimal_fractional_matching(g);
        let weights: Vec<String> = m
            .weights
            .iter()
            .map(|(u, v, w)| format!("{u}-{v}:{w}"))
            .collect();
        println!(
            "  optimal weights [{}] sum to {}",
            weights.join(" "),
            m.value
        );
        assert!(m.is_valid_for(g));
    }
    Ok(())
}
