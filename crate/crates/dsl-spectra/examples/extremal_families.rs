//! The two-parameter join family and the balanced complete split graph.
//!
//! Members look like `K_s` joined to a disjoint union of a clique and an
//! independent set. Their distance matrices have an equitable partition
//! with at most three blocks, so the spectral radius drops out of a tiny
//! quotient matrix. We print both computations side by side.

use dsl_spectra::{
    build_family, build_ghat, family_eta_pair, family_partition, family_quotient, ghat_eta_pair,
    FamilyParams,
};

fn main() -> dsl_spectra::Result<()> {
    let n = 12;
    let k = 1;
    println!("family members on n = {n} vertices, surplus k = {k}:");
    for s in 1..=(n - k) / 2 {
        let p = FamilyParams::new(n, s, k)?;
        let g = build_family(&p);
        let pair = family_eta_pair(n, s, k)?;
        println!(
            "  s = {s}: clique {} + join {} + independent {}  ({} edges)  eta = {:.6} (quotient) / {:.6} (direct)",
            p.clique_size(),
            p.join_size(),
            p.independent_size(),
            g.edge_count(),
            pair.eta_quotient,
            pair.eta_direct,
        );
    }

    // the quotient really is equitable
    let p = FamilyParams::new(n, 3, k)?;
    let q = family_quotient(&p)?;
    println!(
        "closed-form quotient at s = 3, coefficients {:?}",
        q.char_poly_coeffs()?
    );
    println!(
        "blocks {:?} from {:?}",
        q.block_sizes(),
        family_partition(&p)
    );

    // balanced complete split graph: the odd and even cases
    for n in [9, 10] {
        let g = build_ghat(n)?;
        let pair = ghat_eta_pair(n)?;
        println!(
            "ghat({n}): {} edges, eta = {:.6} (quotient) / {:.6} (direct)",
            g.edge_count(),
            pair.eta_quotient,
            pair.eta_direct,
        );
    }
    Ok(())
}
