//! Command-line front end.
//!
//! One thin binary wraps the library: every subcommand parses its input,
//! calls one library entry point, and prints text (default), CSV (tabular
//! commands), or JSON lines. Exit codes: 0 success, 1 domain error
//! (disconnected graph, bad parameters, parse failure), 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::distance::{distance_matrix, dsl_matrix, eta};
use crate::eigen::DEFAULT_TOL;
use crate::error::Error;
use crate::extremal::{
    build_family, build_ghat, family_eta_pair, ghat_eta_pair, reproduce_table1, verify_theorem1,
    verify_theorem2, FamilyParams, TableRow, TheoremReport,
};
use crate::format::{encode_graph6, GraphFormat, GraphInput, GraphSource};
use crate::graph::Graph;
use crate::matching::{
    find_factor_backtracking, fractional_matching_number_brute, fractional_matching_number_fast,
    has_k2ck_factor, DEFAULT_BRUTE_CAP, DEFAULT_FACTOR_CAP,
};
use crate::quotient::{quotient_matrix, Partition};

#[derive(Parser)]
#[command(
    name = "dsl-spectra",
    version,
    about = "Distance signless Laplacian spectra, fractional matchings, and factor certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Decimal places for printed floats (text and CSV output)
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=12))]
    precision: u8,
    /// Output encoding
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MufMethod {
    /// Maximum matching of the bipartite double cover.
    Fast,
    /// Exhaustive deficiency maximization (small graphs only).
    Brute,
}

/// Graph input: exactly one source.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphArgs {
    /// Path to an edge-list file: `n m` header, then `u v` per line
    #[arg(long, value_name = "PATH")]
    edgelist: Option<PathBuf>,
    /// Inline graph6 string (short form, order up to 62)
    #[arg(long, value_name = "G6")]
    g6: Option<String>,
}

impl GraphArgs {
    fn load(&self) -> Result<Graph, Error> {
        let input = match (&self.edgelist, &self.g6) {
            (Some(path), None) => GraphInput {
                source: GraphSource::Path(path.clone()),
                format: GraphFormat::EdgeList,
            },
            (None, Some(s)) => GraphInput {
                source: GraphSource::Inline(s.clone()),
                format: GraphFormat::Graph6,
            },
            _ => unreachable!("clap enforces exactly one source"),
        };
        input.parse()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius of the distance signless Laplacian
    Eta(GraphArgs),
    /// Full distance signless Laplacian spectrum, descending
    Spectrum(GraphArgs),
    /// All-pairs distance matrix
    Distance(GraphArgs),
    /// Fractional matching number, as a reduced fraction
    Muf {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long, value_enum, default_value_t = MufMethod::Fast)]
        method: MufMethod,
        /// Order cap for the brute method
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        cap: usize,
    },
    /// Decide whether a factor of single edges and cycles exists
    Factor {
        #[command(flatten)]
        input: GraphArgs,
        /// Order cap for the explicit backtracking search
        #[arg(long, default_value_t = DEFAULT_FACTOR_CAP)]
        cap: usize,
    },
    /// Quotient of the distance signless Laplacian under a partition
    Quotient {
        #[command(flatten)]
        input: GraphArgs,
        /// Blocks separated by `|`, labels by `,` (e.g. `0|1,2,3`)
        #[arg(long, value_name = "SPEC")]
        partition: String,
    },
    /// Build one family member and report its radius both ways
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Build the balanced complete split graph and report its radius
    Ghat {
        #[arg(long)]
        n: usize,
    },
    /// Recompute the published spectral-radius table (orders 4 through 36)
    Table1 {
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 36)]
        n_max: usize,
    },
    /// Verify the arbitrary-surplus spectral threshold statement
    #[command(name = "verify-theorem1")]
    VerifyTheorem1 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Verify the surplus-one spectral threshold statement
    #[command(name = "verify-theorem2")]
    VerifyTheorem2 {
        #[arg(long)]
        n: usize,
    },
}

enum CmdError {
    Domain(Error),
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError::Domain(e)
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError::Io(e)
    }
}

/// Runs the command line given by `args` (first element is the program
/// name), writing results to `out` and diagnostics to `err`. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(CmdError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(CmdError::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        // downstream closed the pipe; not our error
        Err(CmdError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(CmdError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CmdError> {
    let prec = cli.precision as usize;
    let fmt = cli.format;
    // CSV only makes sense for the tabular command
    if fmt == OutputFormat::Csv && !matches!(cli.command, Command::Table1 { .. }) {
        return Err(CmdError::Usage(
            "--format csv is only supported for table1".into(),
        ));
    }
    match &cli.command {
        Command::Eta(input) => {
            let g = input.load()?;
            let value = eta(&g)?;
            match fmt {
                OutputFormat::Json => writeln!(out, "{}", json!({ "eta": value }))?,
                _ => writeln!(out, "eta = {value:.prec$}")?,
            }
        }
        Command::Spectrum(input) => {
            let g = input.load()?;
            let spectrum = dsl_matrix(&g)?.full_spectrum(DEFAULT_TOL)?;
            match fmt {
                OutputFormat::Json => {
                    writeln!(out, "{}", json!({ "eigenvalues": spectrum.values() }))?
                }
                _ => {
                    let items: Vec<String> = spectrum
                        .values()
                        .iter()
                        .map(|v| format!("{v:.prec$}"))
                        .collect();
                    writeln!(out, "spectrum = [{}]", items.join(", "))?;
                }
            }
        }
        Command::Distance(input) => {
            let g = input.load()?;
            let d = distance_matrix(&g)?;
            let n = d.order();
            match fmt {
                OutputFormat::Json => {
                    let rows: Vec<Vec<u32>> = (0..n)
                        .map(|i| (0..n).map(|j| d.get(i, j)).collect())
                        .collect();
                    writeln!(out, "{}", json!({ "distances": rows }))?;
                }
                _ => {
                    for i in 0..n {
                        let row: Vec<String> = (0..n).map(|j| d.get(i, j).to_string()).collect();
                        writeln!(out, "{}", row.join(" "))?;
                    }
                }
            }
        }
        Command::Muf { input, method, cap } => {
            let g = input.load()?;
            let value = match method {
                MufMethod::Fast => fractional_matching_number_fast(&g),
                MufMethod::Brute => fractional_matching_number_brute(&g, *cap)?,
            };
            match fmt {
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    json!({ "mu_f": value.to_string(), "halves": value.halves() })
                )?,
                _ => writeln!(out, "mu_f = {value}")?,
            }
        }
        Command::Factor { input, cap } => {
            let g = input.load()?;
            let (has, witness) = has_k2ck_factor(&g);
            let edges = if has && g.vertex_count() <= *cap {
                find_factor_backtracking(&g, *cap)?
            } else {
                None
            };
            match fmt {
                OutputFormat::Json => {
                    writeln!(
                        out,
                        "{}",
                        json!({
                            "factor": has,
                            "edges": edges,
                            "witness": witness.as_ref().map(|w| w.set.as_slice().to_vec()),
                            "deficiency": witness.as_ref().map(|w| w.deficiency),
                        })
                    )?;
                }
                _ => {
                    writeln!(out, "factor = {}", if has { "yes" } else { "no" })?;
                    if let Some(edges) = &edges {
                        let items: Vec<String> =
                            edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                        writeln!(out, "edges = {}", items.join(" "))?;
                    } else if has {
                        writeln!(
                            out,
                            "edges = (omitted: order above the backtracking cap {cap})"
                        )?;
                    }
                    if let Some(w) = &witness {
                        writeln!(out, "witness = {:?}", w.set)?;
                        writeln!(out, "deficiency = {}", w.deficiency)?;
                    }
                }
            }
        }
        Command::Quotient { input, partition } => {
            let g = input.load()?;
            let p = Partition::parse(partition)?;
            let m = dsl_matrix(&g)?;
            let q = quotient_matrix(&m, &p)?;
            let k = q.order();
            let coeffs = q.char_poly_coeffs().ok();
            match fmt {
                OutputFormat::Json => {
                    let rows: Vec<Vec<f64>> = (0..k)
                        .map(|i| (0..k).map(|j| q.get(i, j)).collect())
                        .collect();
                    writeln!(
                        out,
                        "{}",
                        json!({
                            "equitable": q.equitable(),
                            "entries": rows,
                            "block_sizes": q.block_sizes(),
                            "largest_eigenvalue": q.largest_eigenvalue(),
                            "char_poly_coeffs": coeffs,
                        })
                    )?;
                }
                _ => {
                    writeln!(out, "equitable = {}", q.equitable())?;
                    writeln!(out, "quotient =")?;
                    for i in 0..k {
                        let row: Vec<String> =
                            (0..k).map(|j| format!("{:.prec$}", q.get(i, j))).collect();
                        writeln!(out, "  {}", row.join(" "))?;
                    }
                    if let Some(c) = coeffs {
                        let items: Vec<String> = c.iter().map(|v| format!("{v:.prec$}")).collect();
                        writeln!(out, "char_poly_coeffs = [{}]", items.join(", "))?;
                    }
                    writeln!(
                        out,
                        "largest_eigenvalue = {:.prec$}",
                        q.largest_eigenvalue()
                    )?;
                }
            }
        }
        Command::Family { n, s, k } => {
            let params = FamilyParams::new(*n, *s, *k)?;
            let g = build_family(&params);
            let pair = family_eta_pair(*n, *s, *k)?;
            let meta = [
                ("n", *n),
                ("s", *s),
                ("k", *k),
                ("clique", params.clique_size()),
            ];
            print_member(
                out,
                fmt,
                prec,
                &g,
                pair.eta_direct,
                pair.eta_quotient,
                &meta,
            )?;
        }
        Command::Ghat { n } => {
            let g = build_ghat(*n)?;
            let pair = ghat_eta_pair(*n)?;
            let clique = if *n % 2 == 1 {
                (*n - 1) / 2
            } else {
                *n / 2 - 1
            };
            let meta = [("n", *n), ("clique", clique)];
            print_member(
                out,
                fmt,
                prec,
                &g,
                pair.eta_direct,
                pair.eta_quotient,
                &meta,
            )?;
        }
        Command::Table1 { n_min, n_max } => {
            let rows = reproduce_table1(*n_min, *n_max)?;
            print_table(out, fmt, prec, &rows)?;
        }
        Command::VerifyTheorem1 { n, k } => {
            let report = verify_theorem1(*n, *k)?;
            print_report(out, fmt, prec, &report)?;
        }
        Command::VerifyTheorem2 { n } => {
            let report = verify_theorem2(*n)?;
            print_report(out, fmt, prec, &report)?;
        }
    }
    Ok(())
}

fn print_member(
    out: &mut dyn Write,
    fmt: OutputFormat,
    prec: usize,
    g: &Graph,
    eta_direct: f64,
    eta_quotient: f64,
    meta: &[(&str, usize)],
) -> Result<(), CmdError> {
    let g6 = encode_graph6(g).ok();
    match fmt {
        OutputFormat::Json => {
            let mut obj = serde_json::Map::new();
            for (key, value) in meta {
                obj.insert((*key).into(), json!(value));
            }
            obj.insert("vertices".into(), json!(g.vertex_count()));
            obj.insert("edges".into(), json!(g.edge_count()));
            obj.insert("graph6".into(), json!(g6));
            obj.insert("eta_direct".into(), json!(eta_direct));
            obj.insert("eta_quotient".into(), json!(eta_quotient));
            writeln!(out, "{}", serde_json::Value::Object(obj))?;
        }
        _ => {
            let items: Vec<String> = meta.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            writeln!(out, "{}", items.join(", "))?;
            writeln!(
                out,
                "vertices = {}, edges = {}",
                g.vertex_count(),
                g.edge_count()
            )?;
            if let Some(g6) = g6 {
                writeln!(out, "graph6 = {g6}")?;
            }
            writeln!(out, "eta_direct = {eta_direct:.prec$}")?;
            writeln!(out, "eta_quotient = {eta_quotient:.prec$}")?;
        }
    }
    Ok(())
}

fn print_table(
    out: &mut dyn Write,
    fmt: OutputFormat,
    prec: usize,
    rows: &[TableRow],
) -> Result<(), CmdError> {
    match fmt {
        OutputFormat::Json => {
            for row in rows {
                writeln!(out, "{}", serde_json::to_string(row).expect("serializable"))?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "n,s,eta_direct,eta_quotient,paper_value,abs_diff")?;
            for row in rows {
                for e in &row.entries {
                    let s = e.s.map_or_else(|| "ghat".to_string(), |s| s.to_string());
                    writeln!(
                        out,
                        "{},{},{:.prec$},{:.prec$},{:.2},{:.prec$}",
                        row.n,
                        s,
                        e.eta_direct,
                        e.eta_quotient,
                        e.published,
                        e.abs_diff()
                    )?;
                }
            }
        }
        OutputFormat::Text => {
            for row in rows {
                for e in &row.entries {
                    let s = e.s.map_or_else(|| "ghat".to_string(), |s| s.to_string());
                    writeln!(
                        out,
                        "n={} s={} eta_direct={:.prec$} eta_quotient={:.prec$} published={:.2} abs_diff={:.prec$}",
                        row.n,
                        s,
                        e.eta_direct,
                        e.eta_quotient,
                        e.published,
                        e.abs_diff()
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn verdict_str(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "pass",
        Some(false) => "FAIL",
        None => "skipped",
    }
}

fn print_report(
    out: &mut dyn Write,
    fmt: OutputFormat,
    prec: usize,
    r: &TheoremReport,
) -> Result<(), CmdError> {
    if fmt == OutputFormat::Json {
        writeln!(out, "{}", serde_json::to_string(r).expect("serializable"))?;
        return Ok(());
    }
    writeln!(out, "statement = {}, n = {}, k = {}", r.statement, r.n, r.k)?;
    writeln!(out, "hypothesis_met = {}", r.hypothesis_met)?;
    if let Some(note) = &r.note {
        writeln!(out, "note = {note}")?;
    }
    writeln!(out, "mu_f = {}", r.mu_f)?;
    writeln!(
        out,
        "witness = {:?}, deficiency = {}",
        r.witness.set, r.witness.deficiency
    )?;
    for e in &r.entries {
        writeln!(
            out,
            "s={} quotient={:.prec$} direct={:.prec$}",
            e.s.expect("family entries carry s"),
            e.eta_quotient,
            e.eta_direct
        )?;
    }
    if let Some(g) = &r.ghat {
        writeln!(
            out,
            "ghat quotient={:.prec$} direct={:.prec$}",
            g.eta_quotient, g.eta_direct
        )?;
    }
    writeln!(out, "verdict_a = {}", verdict_str(Some(r.verdict_a)))?;
    writeln!(out, "verdict_b = {}", verdict_str(r.verdict_b))?;
    writeln!(out, "verdict_c = {}", verdict_str(r.verdict_c))?;
    for c in &r.checks {
        writeln!(
            out,
            "check {} (n={}, s={}, k={}): printed_at_root = {:.prec$}{}",
            c.which,
            c.n,
            c.s,
            c.k,
            c.printed_value,
            if c.flagged() { "  [FLAGGED]" } else { "" }
        )?;
    }
    Ok(())
}
