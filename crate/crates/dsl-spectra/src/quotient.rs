//! Vertex partitions and quotient matrices of the distance signless
//! Laplacian.
//!
//! For a partition with blocks `N_1, ..., N_k`, entry `(i, j)` of the
//! quotient is the average over `u` in `N_i` of the `Q`-row sum into `N_j`.
//! A partition is equitable when every such row sum is constant on its
//! block; equitability is decided in exact integer arithmetic since `Q` has
//! integer entries. For an equitable partition the quotient's eigenvalues
//! are a subset of the full spectrum and the largest ones coincide, which is
//! what makes the closed-form family computations cheap.

use crate::distance::DslMatrix;
use crate::eigen::SymMatrix;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// An ordered list of pairwise-disjoint, nonempty vertex blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<VertexSet>,
}

impl Partition {
    /// Requires every block nonempty and the blocks pairwise disjoint.
    /// Whether the blocks cover a particular vertex set is checked when the
    /// partition meets a matrix.
    pub fn new(blocks: Vec<VertexSet>) -> Result<Partition> {
        if blocks.is_empty() {
            return Err(Error::InvalidPartition("no blocks given".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for v in b.iter() {
                if !seen.insert(v) {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in more than one block"
                    )));
                }
            }
        }
        Ok(Partition { blocks })
    }

    /// Parses the textual form `0|1,2,3`: blocks split by `|`, labels by `,`.
    pub fn parse(spec: &str) -> Result<Partition> {
        let mut blocks = Vec::new();
        for (i, part) in spec.split('|').enumerate() {
            let mut labels = Vec::new();
            for tok in part.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(Error::InvalidPartition(format!(
                        "block {i} has an empty label"
                    )));
                }
                let v: usize = tok.parse().map_err(|_| {
                    Error::InvalidPartition(format!("block {i}: bad label {tok:?}"))
                })?;
                labels.push(v);
            }
            let set = VertexSet::new(labels.iter().copied());
            if set.len() != labels.len() {
                return Err(Error::InvalidPartition(format!(
                    "block {i} repeats a label"
                )));
            }
            blocks.push(set);
        }
        Partition::new(blocks)
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Checks that the blocks cover `0..n` exactly.
    pub fn check_covers(&self, n: usize) -> Result<()> {
        let total: usize = self.blocks.iter().map(|b| b.len()).sum();
        if total != n {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {total} vertices, matrix has {n}"
            )));
        }
        if let Some(v) = self.blocks.iter().flat_map(|b| b.iter()).find(|&v| v >= n) {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} out of range for order {n}"
            )));
        }
        Ok(())
    }
}

/// Quotient of a matrix under a partition, with block sizes and the
/// equitability verdict recorded at construction.
#[derive(Clone, Debug)]
pub struct QuotientMatrix {
    k: usize,
    entries: Vec<f64>,
    block_sizes: Vec<usize>,
    equitable: bool,
}

/// Averaged block-sum quotient of the distance signless Laplacian.
pub fn quotient_matrix(m: &DslMatrix, p: &Partition) -> Result<QuotientMatrix> {
    p.check_covers(m.order())?;
    let k = p.block_count();
    let mut entries = vec![0.0; k * k];
    let mut equitable = true;
    for (i, bi) in p.blocks().iter().enumerate() {
        for (j, bj) in p.blocks().iter().enumerate() {
            let mut total: i64 = 0;
            let mut first: Option<i64> = None;
            for u in bi.iter() {
                let row_sum: i64 = bj.iter().map(|v| m.get(u, v)).sum();
                total += row_sum;
                match first {
                    None => first = Some(row_sum),
                    Some(f) if f != row_sum => equitable = false,
                    _ => {}
                }
            }
            entries[i * k + j] = total as f64 / bi.len() as f64;
        }
    }
    Ok(QuotientMatrix {
        k,
        entries,
        block_sizes: p.blocks().iter().map(|b| b.len()).collect(),
        equitable,
    })
}

/// True when every block has constant row sums into every block.
pub fn is_equitable(m: &DslMatrix, p: &Partition) -> Result<bool> {
    Ok(quotient_matrix(m, p)?.equitable)
}

impl QuotientMatrix {
    /// Direct constructor for closed-form quotients.
    pub fn from_parts(
        rows: &[Vec<f64>],
        block_sizes: Vec<usize>,
        equitable: bool,
    ) -> Result<QuotientMatrix> {
        let k = rows.len();
        if k == 0 || rows.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidMatrix("quotient must be square".into()));
        }
        if block_sizes.len() != k || block_sizes.contains(&0) {
            return Err(Error::InvalidMatrix(
                "need one positive block size per block".into(),
            ));
        }
        let mut entries = Vec::with_capacity(k * k);
        for r in rows {
            entries.extend_from_slice(r);
        }
        Ok(QuotientMatrix {
            k,
            entries,
            block_sizes,
            equitable,
        })
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.k + j]
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn equitable(&self) -> bool {
        self.equitable
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        self.entries[i * self.k..(i + 1) * self.k].iter().sum()
    }

    /// Monic characteristic polynomial coefficients, highest power first.
    /// Only orders up to 3 are supported; larger quotients go through the
    /// dense eigensolver instead.
    pub fn char_poly_coeffs(&self) -> Result<Vec<f64>> {
        let e = |i: usize, j: usize| self.get(i, j);
        match self.k {
            1 => Ok(vec![1.0, -e(0, 0)]),
            2 => {
                let tr = e(0, 0) + e(1, 1);
                let det = e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
                Ok(vec![1.0, -tr, det])
            }
            3 => {
                let tr = e(0, 0) + e(1, 1) + e(2, 2);
                let minors = (e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0))
                    + (e(0, 0) * e(2, 2) - e(0, 2) * e(2, 0))
                    + (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1));
                let det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
                    - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
                    + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
                Ok(vec![1.0, -tr, minors, -det])
            }
            k => Err(Error::UnsupportedOrder(format!(
                "characteristic polynomial is closed-form only up to order 3, got {k}"
            ))),
        }
    }

    /// Largest eigenvalue. Orders up to 3 use the characteristic polynomial
    /// (bisection inside the row-sum bracket, Newton from above as backstop);
    /// larger orders symmetrize with the block sizes and run Jacobi.
    pub fn largest_eigenvalue(&self) -> f64 {
        match self.k {
            1 => self.get(0, 0),
            2 | 3 => {
                let coeffs = self.char_poly_coeffs().expect("order <= 3");
                let lo = (0..self.k)
                    .map(|i| self.row_sum(i))
                    .fold(f64::INFINITY, f64::min)
                    - 1.0;
                let hi = (0..self.k)
                    .map(|i| self.row_sum(i))
                    .fold(f64::NEG_INFINITY, f64::max)
                    + 1.0;
                largest_real_root(&coeffs, lo, hi)
            }
            _ => self
                .symmetrized()
                .full_spectrum(1e-12)
                .expect("tol fixed")
                .radius(),
        }
    }

    /// All eigenvalues, descending. Exact for equitable quotients, whose
    /// spectra are real; a slightly negative quadratic discriminant from
    /// roundoff is clamped to zero.
    pub fn eigenvalues(&self) -> Vec<f64> {
        match self.k {
            1 => vec![self.get(0, 0)],
            2 => {
                let c = self.char_poly_coeffs().expect("order 2");
                quadratic_roots(c[1], c[2])
            }
            3 => {
                let c = self.char_poly_coeffs().expect("order 3");
                let theta = self.largest_eigenvalue();
                // deflate: x^3 + c1 x^2 + c2 x + c3 = (x - theta)(x^2 + bx + cc)
                let b = c[1] + theta;
                let cc = c[2] + theta * b;
                let mut values = quadratic_roots(b, cc);
                values.push(theta);
                values.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
                values
            }
            _ => self
                .symmetrized()
                .full_spectrum(1e-12)
                .expect("tol fixed")
                .values()
                .to_vec(),
        }
    }

    /// Similarity transform `D B D^{-1}` with `D = diag(sqrt(block size))`,
    /// which is symmetric whenever `B` is the quotient of a symmetric matrix.
    fn symmetrized(&self) -> SymMatrix {
        let k = self.k;
        let mut data = vec![0.0; k * k];
        for i in 0..k {
            for j in 0..k {
                let scale = (self.block_sizes[i] as f64 / self.block_sizes[j] as f64).sqrt();
                data[i * k + j] = self.entries[i * k + j] * scale;
            }
        }
        // wash out roundoff so the eigensolver sees exact symmetry
        for i in 0..k {
            for j in (i + 1)..k {
                let avg = 0.5 * (data[i * k + j] + data[j * k + i]);
                data[i * k + j] = avg;
                data[j * k + i] = avg;
            }
        }
        SymMatrix::from_raw(k, data)
    }
}

/// Roots of `x^2 + bx + c`, descending, discriminant clamped at zero.
fn quadratic_roots(b: f64, c: f64) -> Vec<f64> {
    let disc = (b * b - 4.0 * c).max(0.0);
    let r = disc.sqrt();
    vec![(-b + r) / 2.0, (-b - r) / 2.0]
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

fn horner_derivative(coeffs: &[f64], x: f64) -> f64 {
    let n = coeffs.len() - 1;
    coeffs[..n]
        .iter()
        .enumerate()
        .fold(0.0, |acc, (i, &c)| acc * x + c * (n - i) as f64)
}

/// Largest real root of a monic polynomial whose roots lie below `hi`.
///
/// Bisection runs on `[lo, hi]` when that bracket straddles a sign change;
/// Newton from `hi` is monotone whenever the largest root is real and sits
/// at or above the top critical point, which holds for every all-real-root
/// polynomial. The larger of the two converged answers wins, guarding the
/// rare bracket that straddles a smaller root.
fn largest_real_root(coeffs: &[f64], lo: f64, hi: f64) -> f64 {
    let mut best = f64::NEG_INFINITY;

    // Newton from above
    let mut x = hi;
    for _ in 0..200 {
        let p = horner(coeffs, x);
        let dp = horner_derivative(coeffs, x);
        if dp == 0.0 {
            break;
        }
        let next = x - p / dp;
        if (next - x).abs() < 1e-13 {
            x = next;
            break;
        }
        x = next;
    }
    if horner(coeffs, x).abs() < 1e-6 {
        best = x;
    }

    // bisection when the bracket is valid
    if horner(coeffs, lo) < 0.0 && horner(coeffs, hi) > 0.0 {
        let (mut a, mut b) = (lo, hi);
        for _ in 0..200 {
            if b - a <= 1e-12 {
                break;
            }
            let mid = 0.5 * (a + b);
            if horner(coeffs, mid) > 0.0 {
                b = mid;
            } else {
                a = mid;
            }
        }
        let r = 0.5 * (a + b);
        if r > best {
            best = r;
        }
    }

    best
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::dsl_matrix;
    use crate::graph::Graph;

    fn star4_dsl() -> DslMatrix {
        dsl_matrix(&Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()).unwrap()
    }

    #[test]
    fn parse_and_validate_partitions() {
        let p = Partition::parse("0|1,2,3").unwrap();
        assert_eq!(p.block_count(), 2);
        assert_eq!(p.blocks()[1].as_slice(), &[1, 2, 3]);
        assert!(Partition::parse("0|1,1").is_err(), "repeat inside block");
        assert!(Partition::parse("0|0,1").is_err(), "repeat across blocks");
        assert!(Partition::parse("0||1").is_err(), "empty block");
        assert!(Partition::parse("0|x").is_err(), "bad label");
        let p = Partition::parse("0|1").unwrap();
        assert!(p.check_covers(3).is_err(), "misses vertex 2");
        let p = Partition::parse("0|1,4").unwrap();
        assert!(p.check_covers(3).is_err(), "label out of range");
    }

    #[test]
    fn star_center_leaf_partition_is_equitable() {
        let q = star4_dsl();
        let p = Partition::parse("0|1,2,3").unwrap();
        let b = quotient_matrix(&q, &p).unwrap();
        assert!(b.equitable());
        assert_eq!(b.get(0, 0), 3.0);
        assert_eq!(b.get(0, 1), 3.0);
        assert_eq!(b.get(1, 0), 1.0);
        assert_eq!(b.get(1, 1), 9.0);
        let coeffs = b.char_poly_coeffs().unwrap();
        assert_eq!(coeffs, vec![1.0, -12.0, 24.0]);
        let theta = b.largest_eigenvalue();
        assert!((theta - (6.0 + 2.0 * 3.0_f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn path3_partitions() {
        let q = dsl_matrix(&Graph::path(3).unwrap()).unwrap();
        // ends vs middle is equitable: [[5,1],[2,2]]
        let p = Partition::parse("0,2|1").unwrap();
        let b = quotient_matrix(&q, &p).unwrap();
        assert!(b.equitable());
        assert_eq!(b.get(0, 0), 5.0);
        assert_eq!(b.get(0, 1), 1.0);
        assert_eq!(b.get(1, 0), 2.0);
        assert_eq!(b.get(1, 1), 2.0);
        let exact = (7.0 + 17.0_f64.sqrt()) / 2.0;
        assert!((b.largest_eigenvalue() - exact).abs() < 1e-10);
        // first vertex vs rest is not equitable
        let p = Partition::parse("0|1,2").unwrap();
        assert!(!is_equitable(&q, &p).unwrap());
    }

    #[test]
    fn single_block_quotient_is_average_row_sum() {
        let q = star4_dsl();
        let p = Partition::parse("0,1,2,3").unwrap();
        let b = quotient_matrix(&q, &p).unwrap();
        assert_eq!(b.order(), 1);
        // row sums are 6, 10, 10, 10; not constant, so not equitable
        assert!(!b.equitable());
        assert_eq!(b.get(0, 0), 9.0);
        assert_eq!(b.largest_eigenvalue(), 9.0);
    }

    #[test]
    fn cubic_char_poly_and_largest_root() {
        // three-block quotient with characteristic polynomial
        // x^3 - 20x^2 + 107x - 172, largest root 12.5825756949558...
        let b = QuotientMatrix::from_parts(
            &[
                vec![7.0, 1.0, 4.0],
                vec![2.0, 4.0, 2.0],
                vec![4.0, 1.0, 9.0],
            ],
            vec![2, 1, 2],
            true,
        )
        .unwrap();
        let c = b.char_poly_coeffs().unwrap();
        assert_eq!(c, vec![1.0, -20.0, 107.0, -172.0]);
        let theta = b.largest_eigenvalue();
        assert!((theta - 12.58257569495584).abs() < 1e-9, "got {theta}");
        let values = b.eigenvalues();
        assert!((values[1] - 4.0).abs() < 1e-9);
        assert!((values[2] - 3.417424305044159).abs() < 1e-9);
    }

    #[test]
    fn quadratic_with_exact_integer_roots() {
        // [[5,3],[2,10]]: x^2 - 15x + 44 = (x-11)(x-4)
        let b = QuotientMatrix::from_parts(&[vec![5.0, 3.0], vec![2.0, 10.0]], vec![2, 3], true)
            .unwrap();
        assert_eq!(b.char_poly_coeffs().unwrap(), vec![1.0, -15.0, 44.0]);
        assert!((b.largest_eigenvalue() - 11.0).abs() < 1e-10);
        let values = b.eigenvalues();
        assert!((values[0] - 11.0).abs() < 1e-10);
        assert!((values[1] - 4.0).abs() < 1e-10);
    }

    #[test]
    fn char_poly_rejects_large_orders() {
        let rows: Vec<Vec<f64>> = (0..4)
            .map(|i| (0..4).map(|j| if i == j { 2.0 } else { 1.0 }).collect())
            .collect();
        let b = QuotientMatrix::from_parts(&rows, vec![1; 4], true).unwrap();
        assert!(matches!(
            b.char_poly_coeffs(),
            Err(Error::UnsupportedOrder(_))
        ));
        // but the eigensolver path still works: J + I on 4 has largest 5
        assert!((b.largest_eigenvalue() - 5.0).abs() < 1e-9);
    }

    #[test]
    fn symmetrized_path_matches_poly_path() {
        // the order-4 eigensolver path and the order-3 polynomial path agree
        // on a padded version of the same matrix (extra diagonal block)
        let b3 = QuotientMatrix::from_parts(
            &[
                vec![7.0, 1.0, 4.0],
                vec![2.0, 4.0, 2.0],
                vec![4.0, 1.0, 9.0],
            ],
            vec![2, 1, 2],
            true,
        )
        .unwrap();
        let spectrum3 = b3.eigenvalues();
        let b4 = QuotientMatrix::from_parts(
            &[
                vec![7.0, 1.0, 4.0, 0.0],
                vec![2.0, 4.0, 2.0, 0.0],
                vec![4.0, 1.0, 9.0, 0.0],
                vec![0.0, 0.0, 0.0, 1.0],
            ],
            vec![2, 1, 2, 1],
            true,
        )
        .unwrap();
        let spectrum4 = b4.eigenvalues();
        for v in &spectrum3 {
            assert!(
                spectrum4.iter().any(|w| (w - v).abs() < 1e-8),
                "missing {v} in {spectrum4:?}"
            );
        }
    }
}
