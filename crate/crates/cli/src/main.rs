//! `crown-turan`: command-line access to crown detection, the constructive
//! edge bounds and the extremal search.
//!
//! Exit status: 0 on success, 1 when the checked property fails (a crown is
//! missing where one was asked for, or a bound is violated), 2 on input or
//! usage errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use crown_turan::proof::{decompose, Conclusion, WeightScheme};
use crown_turan::search::{bounds_table, exact_max_edges_with, random_crown_free, SearchOptions};
use crown_turan::{
    find_crown_exhaustive, parse_graph, write_graph, CrownCertificate, LinearThreeGraph,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "crown-turan", version, about = "Crown-free linear 3-graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a graph file and report its size and degrees.
    Validate {
        /// Graph file, or `-` for stdin.
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Look for a crown; exits 1 if none is found.
    FindCrown {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Exhaustive)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Check the edge bound of a crown-free graph.
    VerifyTheorem {
        path: PathBuf,
        #[arg(long, value_parser = parse_scheme)]
        theorem: WeightScheme,
        #[arg(long)]
        json: bool,
    },
    /// Run the constructive bound argument and report its outcome.
    Decompose {
        path: PathBuf,
        #[arg(long, value_parser = parse_scheme)]
        scheme: WeightScheme,
        /// Write the step-by-step trace as JSON to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Largest crown-free graph on `n` vertices.
    Search {
        #[arg(long)]
        n: usize,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        single_thread: bool,
    },
    /// Table of the known bounds for a range of `n`.
    Bounds {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long)]
        json: bool,
    },
    /// Random crown-free graph in the text format.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        target_edges: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exhaustive,
    Constructive,
}

fn parse_scheme(s: &str) -> Result<WeightScheme, String> {
    s.parse::<u8>()
        .ok()
        .and_then(WeightScheme::from_number)
        .ok_or_else(|| format!("expected 1 or 2, got `{s}`"))
}

fn read_graph(path: &PathBuf) -> Result<LinearThreeGraph> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_graph(&text).with_context(|| format!("invalid graph in {}", path.display()))
}

fn bound_text(scheme: WeightScheme) -> &'static str {
    match scheme {
        WeightScheme::Theorem1 => "3(n - s)/2",
        WeightScheme::Theorem2 => "10(n - s)/7",
    }
}

/// Prints one line of JSON; a closed stdout is not an error.
fn print_json(value: &serde_json::Value) {
    let _ = writeln!(io::stdout(), "{value}");
}

fn certificate_text(cert: &CrownCertificate) -> String {
    let pendants: Vec<String> = cert
        .pendants
        .iter()
        .map(|p| format!("{} at {}", p.edge, p.attach))
        .collect();
    format!("central {}, pendants {}", cert.central, pendants.join(", "))
}

fn exit(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn validate(path: &PathBuf, as_json: bool) -> Result<ExitCode> {
    let g = read_graph(path)?;
    let max = g.degrees().into_iter().max().unwrap_or(0);
    let mut histogram = vec![0usize; max + 1];
    for d in g.degrees() {
        histogram[d] += 1;
    }
    let s = g.high_degree_count();
    if as_json {
        print_json(&json!({
            "valid": true,
            "n": g.n(),
            "m": g.edge_count(),
            "s": s,
            "degree_histogram": histogram,
        }));
    } else {
        println!("valid, n={} m={} s={s}", g.n(), g.edge_count());
        let cells: Vec<String> = histogram
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(d, c)| format!("{d}:{c}"))
            .collect();
        println!("degrees {}", cells.join(" "));
    }
    Ok(ExitCode::SUCCESS)
}

fn find_crown(path: &PathBuf, method: Method, as_json: bool) -> Result<ExitCode> {
    let g = read_graph(path)?;
    let (cert, note) = match method {
        Method::Exhaustive => (find_crown_exhaustive(&g), "no crown"),
        Method::Constructive => {
            let out = decompose(&g, WeightScheme::Theorem1)?;
            (
                out.certificate().copied(),
                "no crown constructed: the edge count is within 3(n - s)/2",
            )
        }
    };
    if as_json {
        print_json(&serde_json::to_value(cert)?);
    } else {
        match &cert {
            Some(c) => println!("crown: {}", certificate_text(c)),
            None => println!("{note}"),
        }
    }
    Ok(exit(cert.is_some()))
}

fn verify_theorem(path: &PathBuf, scheme: WeightScheme, as_json: bool) -> Result<ExitCode> {
    let g = read_graph(path)?;
    let (n, m, s) = (g.n(), g.edge_count(), g.high_degree_count());
    if scheme == WeightScheme::Theorem2 && s > 2 {
        bail!("theorem 2 needs at most 2 vertices of degree >= 6, this graph has {s}");
    }
    if let Some(cert) = find_crown_exhaustive(&g) {
        if as_json {
            print_json(&json!({"crown_free": false, "certificate": cert}));
        } else {
            println!("not crown-free; the bound does not apply");
            println!("crown: {}", certificate_text(&cert));
        }
        return Ok(ExitCode::SUCCESS);
    }
    let bound = scheme.edge_bound(n, s);
    let holds = !scheme.exceeds_bound(m, n, s);
    let margin = bound - num::rational::Ratio::from_integer(m as i64);
    if as_json {
        print_json(&json!({
            "crown_free": true,
            "theorem": scheme.number(),
            "n": n,
            "m": m,
            "s": s,
            "bound": bound.to_string(),
            "margin": margin.to_string(),
            "holds": holds,
        }));
    } else if holds {
        println!(
            "holds: m <= {} with n={n} m={m} s={s}, bound {bound}, margin {margin}",
            bound_text(scheme)
        );
    } else {
        println!(
            "VIOLATED: crown-free graph with m={m} > {} = {bound} (n={n} s={s})",
            bound_text(scheme)
        );
    }
    Ok(exit(holds))
}

fn run_decompose(
    path: &PathBuf,
    scheme: WeightScheme,
    trace: Option<&PathBuf>,
    as_json: bool,
) -> Result<ExitCode> {
    let g = read_graph(path)?;
    let out = decompose(&g, scheme)?;
    if let Some(file) = trace {
        let text = serde_json::to_string_pretty(&out.trace_json())?;
        fs::write(file, text + "\n").with_context(|| format!("writing {}", file.display()))?;
    }
    if as_json {
        print_json(&json!({
            "scheme": scheme,
            "peels": out.trace.len(),
            "conclusion": out.conclusion,
        }));
        return Ok(ExitCode::SUCCESS);
    }
    for step in &out.trace {
        println!(
            "peel {}: light edge {} with degrees {:?}, removed {} vertices and {} edges",
            step.step,
            step.light_edge,
            step.degrees,
            step.peeled_vertices.len(),
            step.removed_edges.len()
        );
    }
    match &out.conclusion {
        Conclusion::Crown {
            branch,
            light_edge,
            certificate,
            ..
        } => println!(
            "crown via branch {branch} at light edge {light_edge}: {}",
            certificate_text(certificate)
        ),
        Conclusion::BoundSatisfied {
            vertices,
            edges,
            high_degree,
        } => println!(
            "bound satisfied: m={edges} <= {} with n={vertices} s={high_degree}",
            bound_text(scheme)
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn search(n: usize, time_limit: Option<f64>, seed: u64, single_thread: bool) -> Result<ExitCode> {
    let time_limit = match time_limit {
        Some(t) if !(t.is_finite() && t >= 0.0) => {
            bail!("--time-limit must be a non-negative number")
        }
        t => t.map(Duration::from_secs_f64),
    };
    let options = SearchOptions {
        time_limit,
        seed,
        single_thread,
    };
    let result = exact_max_edges_with(n, &options)?;
    let mut value = serde_json::to_value(&result)?;
    value
        .as_object_mut()
        .expect("search result is an object")
        .insert("witness_text".into(), json!(write_graph(&result.witness)));
    print_json(&value);
    Ok(ExitCode::SUCCESS)
}

fn bounds(from: u64, to: u64, as_json: bool) -> Result<ExitCode> {
    if from > to {
        bail!("--from {from} is larger than --to {to}");
    }
    let rows = bounds_table(from, to)?;
    if as_json {
        print_json(&serde_json::to_value(&rows)?);
        return Ok(ExitCode::SUCCESS);
    }
    println!(
        "{:>6} {:>8} {:>10} {:>8} {:>10}",
        "n", "lower", "3(n-3)/2", "2n", "<5n/3"
    );
    for r in rows {
        println!(
            "{:>6} {:>8} {:>10} {:>8} {:>10}",
            r.n, r.lower, r.corollary, r.two_n, r.below_five_thirds
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Validate { path, json } => validate(&path, json),
        Command::FindCrown { path, method, json } => find_crown(&path, method, json),
        Command::VerifyTheorem {
            path,
            theorem,
            json,
        } => verify_theorem(&path, theorem, json),
        Command::Decompose {
            path,
            scheme,
            trace,
            json,
        } => run_decompose(&path, scheme, trace.as_ref(), json),
        Command::Search {
            n,
            time_limit,
            seed,
            single_thread,
        } => search(n, time_limit, seed, single_thread),
        Command::Bounds { from, to, json } => bounds(from, to, json),
        Command::Gen {
            n,
            seed,
            target_edges,
        } => {
            print!("{}", write_graph(&random_crown_free(n, seed, target_edges)));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
