//! `ramsey`: bounds, constructions, arrow decisions and certificates for
//! size-Ramsey questions about uniform hypergraph paths.

mod commands;
mod config;
mod store;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pathramsey::monosearch::DEFAULT_NODE_BUDGET;

use commands::{BoundsArgs, ColorArgs, ExactKind, Run};
use config::RunConfig;

#[derive(Parser)]
#[command(name = "ramsey", version, about = "Size-Ramsey workbench for uniform hypergraph paths")]
struct Cli {
    /// Worker threads for arrow searches.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Seed for randomized heuristics.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Search nodes per arrow decision; 0 for unlimited.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: u64,
    /// Certificate directory.
    #[arg(long, global = true, env = "RAMSEY_OUT", default_value = "ramsey-out")]
    out: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bound report for P_n^(k,l) with r colors.
    Bounds {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long = "l")]
        ell: usize,
        #[arg(long)]
        n: Option<usize>,
        /// Lower bound for the size-Ramsey number of the link path.
        #[arg(long)]
        d_hat: Option<u64>,
        /// Link-family combinator input as `label,link,family`.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Runs a construction and writes a verified avoidance certificate.
    Color {
        /// afl, hierarchy, composite, star-arb, loose or design.
        construction: String,
        /// Host hypergraph JSON.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Built-in design; see `fixtures`.
        #[arg(long)]
        fixture: Option<String>,
        /// Design JSON with `N`, `clique_order`, `cliques`.
        #[arg(long)]
        design: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long = "l")]
        ell: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n_prime: Option<usize>,
        #[arg(long)]
        d_hat: Option<usize>,
        #[arg(long, default_value = "afl")]
        base_oracle: String,
        #[arg(long, default_value = "exhaustive")]
        link_oracle: String,
    },
    /// Decides whether every r-coloring of the host has a monochromatic target.
    Arrow {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        r: usize,
        /// `path:k,l,n` or `cycle_geq:k,min`.
        #[arg(long)]
        target: String,
    },
    /// Exact Ramsey or size-Ramsey number within a range.
    Exact {
        #[arg(value_enum)]
        kind: ExactKind,
        #[arg(long)]
        target: String,
        #[arg(long)]
        r: usize,
        /// Largest complete host order tried (ramsey).
        #[arg(long)]
        max_n: Option<usize>,
        /// Largest host edge count tried (size-ramsey).
        #[arg(long)]
        max_edges: Option<usize>,
    },
    /// Re-checks a certificate file.
    Verify { file: PathBuf },
    /// Lists built-in designs.
    Fixtures,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let config = RunConfig {
        node_budget: cli.node_budget,
        threads: cli.threads,
        seed: cli.seed,
        out_dir: cli.out,
        ..RunConfig::default()
    };
    let mut run = Run::new(&argv, &config);
    let result = match cli.command {
        Command::Bounds { r, k, ell, n, d_hat, family, json } => commands::cmd_bounds(&BoundsArgs {
            r,
            k,
            ell,
            n,
            d_hat,
            family,
            json,
        }),
        Command::Color {
            construction,
            input,
            fixture,
            design,
            r,
            k,
            ell,
            n,
            m,
            n_prime,
            d_hat,
            base_oracle,
            link_oracle,
        } => commands::cmd_color(
            &mut run,
            &ColorArgs {
                construction,
                input,
                fixture,
                design,
                r,
                k,
                ell,
                n,
                m,
                n_prime,
                d_hat,
                base_oracle,
                link_oracle,
            },
        ),
        Command::Arrow { host, r, target } => commands::cmd_arrow(&mut run, &host, r, &target),
        Command::Exact {
            kind,
            target,
            r,
            max_n,
            max_edges,
        } => {
            let max = match kind {
                ExactKind::Ramsey => max_n.ok_or("--max-n"),
                ExactKind::SizeRamsey => max_edges.ok_or("--max-edges"),
            };
            match max {
                Ok(max) => commands::cmd_exact(&mut run, kind, &target, r, max),
                Err(flag) => Err(commands::Failure::input(format!("missing {flag}"))),
            }
        }
        Command::Verify { file } => commands::cmd_verify(&config, &file),
        Command::Fixtures => commands::cmd_fixtures(),
    };
    match result {
        Ok(status) => status.into(),
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.status.into()
        }
    }
}

