//! Dense symmetric eigensolvers.
//!
//! Two methods sit behind one dispatch: cyclic Jacobi diagonalization for
//! matrices of order at most [`JACOBI_MAX_ORDER`], and a shifted power
//! iteration for the dominant eigenvalue of anything larger. The shift (the
//! maximum row sum) makes the dominant eigenvalue of the shifted matrix
//! strictly largest in modulus for the nonnegative matrices this crate feeds
//! in, so the iteration cannot stall on a symmetric +/- eigenvalue pair.

use crate::error::{Error, Result};

/// Default convergence tolerance used by the higher-level spectral routines.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Largest order solved by full Jacobi diagonalization inside
/// [`SymMatrix::spectral_radius`]; above it the power iteration takes over.
pub const JACOBI_MAX_ORDER: usize = 64;

const MAX_SWEEPS: usize = 64;
const MAX_POWER_ITERS: usize = 500_000;

/// A dense real symmetric matrix.
#[derive(Clone, Debug)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

/// Real eigenvalues sorted in descending order.
#[derive(Clone, Debug)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Largest eigenvalue. For the nonnegative matrices this crate works
    /// with, this equals the spectral radius.
    pub fn radius(&self) -> f64 {
        self.values[0]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl SymMatrix {
    /// Validates squareness and symmetry (max asymmetry 1e-12).
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<SymMatrix> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("matrix must be nonempty".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix("matrix must be square".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate().skip(i + 1) {
                if (v - rows[j][i]).abs() > 1e-12 {
                    return Err(Error::InvalidMatrix(format!(
                        "asymmetric at ({i}, {j}): {v} vs {}",
                        rows[j][i]
                    )));
                }
            }
        }
        // store the exactly-symmetrized entries so downstream math sees a
        // perfectly symmetric matrix
        let data = (0..n)
            .flat_map(|i| (0..n).map(move |j| 0.5 * (rows[i][j] + rows[j][i])))
            .collect();
        Ok(SymMatrix { n, data })
    }

    /// Internal constructor for data already known to be symmetric.
    pub(crate) fn from_raw(n: usize, data: Vec<f64>) -> SymMatrix {
        debug_assert_eq!(data.len(), n * n);
        SymMatrix { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    fn max_abs_row_sum(&self) -> f64 {
        (0..self.n)
            .map(|i| {
                self.data[i * self.n..(i + 1) * self.n]
                    .iter()
                    .map(|x| x.abs())
                    .sum::<f64>()
            })
            .fold(0.0, f64::max)
    }

    /// Largest eigenvalue, dispatching on order: full Jacobi up to
    /// [`JACOBI_MAX_ORDER`], shifted power iteration beyond.
    pub fn spectral_radius(&self, tol: f64) -> Result<f64> {
        check_tol(tol)?;
        if self.n <= JACOBI_MAX_ORDER {
            Ok(self.jacobi_eigenvalues()[0])
        } else {
            Ok(self.power_iteration_radius(tol))
        }
    }

    /// All eigenvalues by cyclic Jacobi, descending.
    pub fn full_spectrum(&self, tol: f64) -> Result<Spectrum> {
        check_tol(tol)?;
        Ok(Spectrum {
            values: self.jacobi_eigenvalues(),
        })
    }

    // -----------------------------------------------------------------------
    // Jacobi
    // -----------------------------------------------------------------------

    /// Cyclic-by-row Jacobi rotations until the off-diagonal mass is at the
    /// level of roundoff. Quadratic convergence makes the sweep cap generous.
    fn jacobi_eigenvalues(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = self.data.clone();
        if n == 1 {
            return vec![a[0]];
        }
        let fro: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
        if fro == 0.0 {
            return vec![0.0; n];
        }
        let stop = fro * 1e-15;
        for _ in 0..MAX_SWEEPS {
            let mut off_sq = 0.0;
            for p in 0..n {
                for q in (p + 1)..n {
                    off_sq += 2.0 * a[p * n + q] * a[p * n + q];
                }
            }
            if off_sq.sqrt() <= stop {
                break;
            }
            for p in 0..(n - 1) {
                for q in (p + 1)..n {
                    let apq = a[p * n + q];
                    if apq == 0.0 {
                        continue;
                    }
                    let app = a[p * n + p];
                    let aqq = a[q * n + q];
                    let theta = (aqq - app) / (2.0 * apq);
                    // smaller-magnitude tangent root keeps the rotation stable
                    let t = if theta >= 0.0 {
                        1.0 / (theta + (1.0 + theta * theta).sqrt())
                    } else {
                        1.0 / (theta - (1.0 + theta * theta).sqrt())
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    for i in 0..n {
                        if i == p || i == q {
                            continue;
                        }
                        let aip = a[i * n + p];
                        let aiq = a[i * n + q];
                        a[i * n + p] = c * aip - s * aiq;
                        a[p * n + i] = a[i * n + p];
                        a[i * n + q] = s * aip + c * aiq;
                        a[q * n + i] = a[i * n + q];
                    }
                    a[p * n + p] = app - t * apq;
                    a[q * n + q] = aqq + t * apq;
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                }
            }
        }
        let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
        values.sort_by(|x, y| y.partial_cmp(x).expect("diagonal stays finite"));
        values
    }

    // -----------------------------------------------------------------------
    // power iteration
    // -----------------------------------------------------------------------

    /// Power iteration on `A + sigma*I` with `sigma` = max row sum, starting
    /// from the all-ones vector. Converged when the Rayleigh quotient moved
    /// less than `tol` and the residual is below `sqrt(tol)` times the
    /// row-sum bound on `||A||_2`.
    fn power_iteration_radius(&self, tol: f64) -> f64 {
        let n = self.n;
        let scale = self.max_abs_row_sum();
        if scale == 0.0 {
            return 0.0;
        }
        let sigma = scale;
        let mut v = vec![1.0 / (n as f64).sqrt(); n];
        let mut w = vec![0.0; n];
        let mut rho_prev = f64::INFINITY;
        let mut rho = 0.0;
        for _ in 0..MAX_POWER_ITERS {
            for (i, wi) in w.iter_mut().enumerate() {
                let row = &self.data[i * n..(i + 1) * n];
                *wi = row.iter().zip(&v).map(|(a, x)| a * x).sum();
            }
            rho = v.iter().zip(&w).map(|(x, y)| x * y).sum();
            let residual: f64 = w
                .iter()
                .zip(&v)
                .map(|(wi, vi)| {
                    let r = wi - rho * vi;
                    r * r
                })
                .sum::<f64>()
                .sqrt();
            if (rho - rho_prev).abs() < tol && residual <= tol.sqrt() * scale {
                return rho;
            }
            rho_prev = rho;
            let mut norm_sq = 0.0;
            for i in 0..n {
                w[i] += sigma * v[i];
                norm_sq += w[i] * w[i];
            }
            let norm = norm_sq.sqrt();
            for i in 0..n {
                v[i] = w[i] / norm;
            }
        }
        rho
    }
}

fn check_tol(tol: f64) -> Result<()> {
    // NaN fails both comparisons and is rejected too
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------
