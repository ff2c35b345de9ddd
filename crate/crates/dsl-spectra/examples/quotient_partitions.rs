//! Quotient matrices of the distance signless Laplacian under a vertex
//! partition.
//!
//! When the partition is equitable (each vertex sees constant total
//! distance into every block), the quotient's eigenvalues are a subset of
//! the full spectrum and the largest ones agree. This example shows both
//! an equitable partition and one that is not.

use dsl_spectra::{dsl_matrix, eta, quotient_matrix, Graph, Partition, DEFAULT_TOL};

fn show(g: &Graph, spec: &str) -> dsl_spectra::Result<()> {
    let p = Partition::parse(spec)?;
    let m = dsl_matrix(g)?;
    let q = quotient_matrix(&m, &p)?;
    println!("partition {spec}: equitable = {}", q.equitable());
    for i in 0..q.order() {
        let row: Vec<String> = (0..q.order())
            .map(|j| format!("{:6.2}", q.get(i, j)))
            .collect();
        println!("  [{}]", row.join(" "));
    }
    if let Ok(coeffs) = q.char_poly_coeffs() {
        println!("  char poly coeffs (monic, descending): {coeffs:?}");
    }
    println!(
        "  largest quotient eigenvalue: {:.6}",
        q.largest_eigenvalue()
    );
    println!("  full-matrix eta:             {:.6}", eta(g)?);
    Ok(())
}

fn main() -> dsl_spectra::Result<()> {
    // star: center vs leaves is equitable
    let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])?;
    show(&star, "0|1,2,3")?;

    // path: ends vs middle is equitable, a lopsided split is not
    let p3 = Graph::path(3)?;
    show(&p3, "0,2|1")?;
    show(&p3, "0|1,2")?;

    // all eigenvalues of an equitable quotient appear in the full spectrum
    let m = dsl_matrix(&star)?;
    let q = quotient_matrix(&m, &Partition::parse("0|1,2,3")?)?;
    let full = m.full_spectrum(DEFAULT_TOL)?;
    for qv in q.eigenvalues() {
        let nearest = full
            .values()
            .iter()
            .map(|v| (v - qv).abs())
            .fold(f64::INFINITY, f64::min);
        println!("quotient eigenvalue {qv:.6} is {nearest:.2e} from the full spectrum");
    }
    Ok(())
}
