//! Command-line front end. [`run`] parses arguments, executes one subcommand
//! and returns the process exit code: 0 when every check passes, 1 when some
//! check fails, 2 for usage errors and unreadable or malformed input.

mod formats;
mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

pub use formats::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, MAX_GRAPH6_ORDER};
pub use report::{render_certificate, render_enum_report, CertificateDocument, Num, SCHEMA_VERSION};

use crate::certificates::{audit, DEFAULT_AUDIT_TOL};
use crate::enumeration::{exhaustive_audit, random_graph};
use crate::families::{make, remark_lambda, Family, FamilySpec};
use crate::graph::Graph;
use crate::resistance::{resistance_matrix, resistance_variational_oracle};
use crate::spectra::{algebraic_connectivity, laplacian_spectrum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lapspread", version, about = "Laplacian spectra and certificates for lambda(G) + lambda(complement) >= 1")]
struct Cli {
    /// Tolerance for every certificate check.
    #[arg(long, global = true, default_value_t = DEFAULT_AUDIT_TOL)]
    tol: f64,
    /// Seed for random graphs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certify every graph in a file.
    Audit {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Write one JSON certificate per line to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Audit all graphs of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Allow orders 9 and 10.
        #[arg(long)]
        long: bool,
        /// Write equality cases as graph6 lines to this file.
        #[arg(long)]
        equality_out: Option<PathBuf>,
    },
    /// Laplacian eigenvalues as CSV.
    Spectrum {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Effective resistance between two vertices, with an independent cross-check.
    Resistance {
        file: PathBuf,
        #[arg(long, value_parser = parse_pair)]
        pair: (usize, usize),
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Build a named graph.
    Family {
        #[arg(long)]
        name: Family,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        audit: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Sample G(n, p) graphs from --seed onward.
    Random {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        audit: bool,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected r,s")?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.to_string(),
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the command line in `args` (program name first) against stdout and
/// stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], writing to the given streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    if !(cli.tol.is_finite() && cli.tol >= 0.0) {
        let _ = writeln!(err, "error: --tol must be a finite non-negative number");
        return EXIT_USAGE;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker threads: {e}");
            return EXIT_USAGE;
        }
    };
    let (mut buf, mut notes) = (Vec::new(), Vec::new());
    let result = pool.install(|| dispatch(&cli, &mut buf, &mut notes));
    let _ = out.write_all(&buf);
    let _ = err.write_all(&notes);
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut Vec<u8>, err: &mut Vec<u8>) -> Outcome {
    match &cli.command {
        Command::Audit { file, format, json } => cmd_audit(cli.tol, file, *format, json.as_deref(), out),
        Command::Enumerate {
            order,
            long,
            equality_out,
        } => cmd_enumerate(cli.tol, *order, *long, equality_out.as_deref(), out, err),
        Command::Spectrum { file, format } => cmd_spectrum(file, *format, out),
        Command::Resistance { file, pair, format } => cmd_resistance(cli.tol, file, *format, *pair, out),
        Command::Family {
            name,
            order,
            audit,
            json,
        } => cmd_family(cli.tol, *name, *order, *audit, json.as_deref(), out),
        Command::Random { order, p, count, audit } => cmd_random(cli.tol, cli.seed, *order, *p, *count, *audit, out),
    }
}

/// Graphs in `file` with the exact text each was read from.
fn read_graphs(file: &Path, format: Format) -> Result<Vec<(Graph, String)>, Failure> {
    let text = fs::read_to_string(file).map_err(|e| usage(format!("cannot read {}: {e}", file.display())))?;
    match format {
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(k, l)| {
                parse_graph6(l)
                    .map(|g| (g, l.trim().to_string()))
                    .map_err(|e| usage(format!("{}:{}: {e}", file.display(), k + 1)))
            })
            .collect(),
        Format::Edges => {
            let g = parse_edge_list(&text).map_err(|e| usage(format!("{}: {e}", file.display())))?;
            Ok(vec![(g, text)])
        }
    }
}

fn format_name(format: Format) -> &'static str {
    match format {
        Format::Graph6 => "graph6",
        Format::Edges => "edges",
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn cmd_audit(tol: f64, file: &Path, format: Format, json: Option<&Path>, out: &mut Vec<u8>) -> Outcome {
    let graphs = read_graphs(file, format)?;
    if let Some((g, _)) = graphs.iter().find(|(g, _)| g.order() < 2) {
        return Err(usage(format!("audits need order >= 2, got a graph of order {}", g.order())));
    }
    let certs: Vec<_> = graphs.par_iter().map(|(g, _)| audit(g, tol)).collect();
    let mut docs = String::new();
    let mut failed = 0;
    for (k, ((g, text), cert)) in graphs.iter().zip(certs).enumerate() {
        let cert = cert.map_err(|e| Failure {
            code: EXIT_FAIL,
            msg: format!("graph {k}: {e}"),
        })?;
        let label = match format {
            Format::Graph6 => text.clone(),
            Format::Edges => format!("order {}", g.order()),
        };
        let verdict = if cert.passed() { "pass" } else { "FAIL" };
        failed += !cert.passed() as usize;
        let _ = writeln!(out, "[{k}] {label}: {verdict}");
        let _ = out.write_all(render_certificate(&cert).as_bytes());
        if json.is_some() {
            docs.push_str(&CertificateDocument::new(g, format_name(format), text.clone(), &cert).to_json());
            docs.push('\n');
        }
    }
    let _ = writeln!(out, "{} graphs audited, {failed} failed", graphs.len());
    if let Some(path) = json {
        write_file(path, &docs)?;
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_enumerate(tol: f64, order: usize, long: bool, equality_out: Option<&Path>, out: &mut Vec<u8>, err: &mut Vec<u8>) -> Outcome {
    let report = exhaustive_audit(order, long, tol).map_err(usage)?;
    let _ = write!(out, "order {order}: {}", render_enum_report(&report));
    let _ = writeln!(err, "elapsed {:.3}s", report.elapsed.as_secs_f64());
    if let Some(path) = equality_out {
        let mut lines = String::new();
        for code in &report.equality {
            lines.push_str(&emit_graph6(&code.to_graph()).map_err(usage)?);
            lines.push('\n');
        }
        write_file(path, &lines)?;
    }
    let consistent = report.structural == report.equality.len();
    Ok(if report.violations.is_empty() && consistent {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}

fn cmd_spectrum(file: &Path, format: Format, out: &mut Vec<u8>) -> Outcome {
    let graphs = read_graphs(file, format)?;
    for (k, (g, _)) in graphs.iter().enumerate() {
        let s = laplacian_spectrum(g).map_err(|e| Failure {
            code: EXIT_FAIL,
            msg: format!("graph {k}: {e}"),
        })?;
        if k > 0 {
            let _ = writeln!(out);
        }
        let _ = writeln!(out, "index,eigenvalue");
        for (i, v) in s.eigenvalues().iter().enumerate() {
            let _ = writeln!(out, "{},{:.16e}", i + 1, v);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_resistance(tol: f64, file: &Path, format: Format, (r, s): (usize, usize), out: &mut Vec<u8>) -> Outcome {
    let graphs = read_graphs(file, format)?;
    let mut worst: f64 = 0.0;
    for (k, (g, _)) in graphs.iter().enumerate() {
        let n = g.order();
        if r >= n || s >= n || r == s {
            return Err(usage(format!("graph {k}: pair {r},{s} invalid for order {n}")));
        }
        let m = resistance_matrix(g).map_err(|e| usage(format!("graph {k}: {e}")))?;
        let oracle = resistance_variational_oracle(g, r, s).map_err(|e| usage(format!("graph {k}: {e}")))?;
        let value = m.get(r, s);
        let diff = (value - oracle).abs();
        worst = worst.max(diff);
        let _ = writeln!(
            out,
            "[{k}] R({r},{s}) = {value:.15}, variational = {oracle:.15}, difference = {diff:.3e}"
        );
    }
    Ok(if worst <= tol { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_family(tol: f64, family: Family, order: usize, do_audit: bool, json: Option<&Path>, out: &mut Vec<u8>) -> Outcome {
    let g = make(FamilySpec::new(family, order)).map_err(usage)?;
    let _ = writeln!(out, "{family} of order {order}, {} edges", g.edge_count());
    if order <= MAX_GRAPH6_ORDER {
        let _ = writeln!(out, "graph6 {}", emit_graph6(&g).map_err(usage)?);
    }
    if order >= 2 {
        let lambda = algebraic_connectivity(&g).map_err(usage)?.lambda2;
        let lambda_bar = algebraic_connectivity(&g.complement()).map_err(usage)?.lambda2;
        let _ = writeln!(out, "lambda = {lambda:.15}, lambda_bar = {lambda_bar:.15}");
        if family == Family::Remark {
            let _ = writeln!(out, "closed form = {:.15}", remark_lambda(order).map_err(usage)?);
        }
    }
    if !do_audit {
        return Ok(EXIT_OK);
    }
    let cert = audit(&g, tol).map_err(usage)?;
    let _ = out.write_all(render_certificate(&cert).as_bytes());
    if let Some(path) = json {
        let text = emit_graph6(&g).unwrap_or_else(|_| emit_edge_list(&g));
        let doc = CertificateDocument::new(&g, "family", text, &cert);
        write_file(path, &(doc.to_json() + "\n"))?;
    }
    Ok(if cert.passed() { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_random(tol: f64, seed: u64, order: usize, p: f64, count: usize, do_audit: bool, out: &mut Vec<u8>) -> Outcome {
    let graphs: Vec<Graph> = (0..count as u64)
        .map(|k| random_graph(order, p, seed.wrapping_add(k)))
        .collect::<Result<_, _>>()
        .map_err(usage)?;
    let _ = writeln!(out, "G({order}, {p}) from seed {seed}, ChaCha8 generator");
    if do_audit && order < 2 {
        return Err(usage("audits need order >= 2"));
    }
    let certs: Vec<_> = if do_audit {
        graphs.par_iter().map(|g| Some(audit(g, tol))).collect()
    } else {
        graphs.iter().map(|_| None).collect()
    };
    let mut failed = 0;
    for (k, (g, cert)) in graphs.iter().zip(certs).enumerate() {
        let line = emit_graph6(g).map_err(usage)?;
        match cert {
            None => {
                let _ = writeln!(out, "{line}");
            }
            Some(cert) => {
                let cert = cert.map_err(|e| Failure {
                    code: EXIT_FAIL,
                    msg: format!("graph {k}: {e}"),
                })?;
                failed += !cert.passed() as usize;
                let _ = writeln!(
                    out,
                    "{line} {} sum = {:.15} {}",
                    cert.case.as_str(),
                    cert.sum,
                    if cert.passed() { "pass" } else { "FAIL" }
                );
            }
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAIL })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(std::iter::once("lapspread").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn help_and_usage() {
        assert_eq!(call(&["--help"]).0, EXIT_OK);
        assert_eq!(call(&["--bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["resistance", "x", "--pair", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["audit", "/nonexistent/file.g6"]).0, EXIT_USAGE);
    }

    #[test]
    fn family_remark() {
        let (code, out, _) = call(&["family", "--name", "remark", "--order", "10", "--audit"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("lambda = 0.876894"), "{out}");
    }

    #[test]
    fn pair_parser() {
        assert_eq!(parse_pair("0,3"), Ok((0, 3)));
        assert!(parse_pair("0;3").is_err());
    }
}
