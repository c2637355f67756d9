//! `genus`: genus polynomials of linear graph families.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use genus_core::certify::{certify, CertifyOptions};
use genus_core::fascia::{build_rotagraph, doubly_hex_spec, FamilySpec};
use genus_core::rotation::{genus_distribution_bruteforce, BruteForce, DEFAULT_BUDGET};
use genus_core::transfer::{GenusEngine, Method};
use genus_core::Error;

#[derive(Parser, Debug)]
#[command(name = "genus", version, about = "Genus polynomials of fasciagraph and rotagraph families")]
struct Cli {
    /// Worker threads for exhaustive enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Largest number of rotation systems brute force may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Family stanza file; the doubly hexagonal chain when omitted.
    #[arg(long, global = true)]
    family: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    Transfer,
    TransferReduced,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Brute => Method::Brute,
            MethodArg::Transfer => Method::Transfer,
            MethodArg::TransferReduced => Method::TransferReduced,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Genus polynomial of the chain of length n.
    Genus {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::TransferReduced)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also print the split by boundary type (transfer method only).
        #[arg(long)]
        stratified: bool,
    },
    /// Genus polynomials for n = 1..max-n.
    Table {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the verification suite for the doubly hexagonal chain.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_brute_n: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Print the derived transfer matrix and initial vector.
    DeriveQ {
        /// Print the matrix over lumped types.
        #[arg(long)]
        reduced: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Genus polynomial of the closed ring of n copies, by brute force.
    Rotagraph {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn limits(cli: &Cli) -> BruteForce {
    let mut b = BruteForce { budget: cli.budget, ..BruteForce::default() };
    if let Some(t) = cli.threads {
        b.threads = t.max(1);
    }
    b
}

fn family(cli: &Cli) -> Result<FamilySpec, String> {
    match &cli.family {
        None => Ok(doubly_hex_spec()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            FamilySpec::parse(&text).map_err(|e| e.to_string())
        }
    }
}

enum Failure {
    Budget(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Other(other.to_string()),
        }
    }
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Other(s)
    }
}

fn json_line(v: &serde_json::Value) -> String {
    serde_json::to_string(v).expect("json values serialize")
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    let bf = limits(cli);
    match &cli.command {
        Command::Genus { n, method, format, stratified } => {
            if *n == 0 {
                return Err(Failure::Other("--n must be at least 1".into()));
            }
            let spec = family(cli)?;
            let method = Method::from(*method);
            if *stratified && method == Method::Brute {
                return Err(Failure::Other("--stratified needs a transfer method".into()));
            }
            let (poly, strat) = if method == Method::Brute {
                (genus_core::transfer::genus_polynomial_with(&spec, *n, method, &bf)?, None)
            } else {
                let engine = GenusEngine::new(spec)?;
                let poly = engine.genus_polynomial(*n, method, &bf)?;
                let strat = if *stratified { Some(engine.stratified(*n)?) } else { None };
                (poly, strat)
            };
            match format {
                Format::Text => {
                    println!("{}", poly.render('x'));
                    if let Some(s) = strat {
                        for (name, p) in s.types.iter().zip(s.entries.iter()) {
                            println!("{name}: {}", p.compact('Y'));
                        }
                    }
                }
                Format::Json => {
                    let v = match &strat {
                        Some(s) => output::stratified_json(*n, s),
                        None => output::poly_json(*n, &poly),
                    };
                    println!("{}", json_line(&v));
                }
                Format::Latex => println!("${}$", output::latex_poly(&poly)),
            }
        }
        Command::Table { max_n, format } => {
            if *max_n == 0 {
                return Err(Failure::Other("--max-n must be at least 1".into()));
            }
            let engine = GenusEngine::new(family(cli)?)?;
            let rows = engine.genus_polynomials(*max_n)?;
            match format {
                Format::Text => {
                    for (i, p) in rows.iter().enumerate() {
                        println!("{}\t{}", i + 1, p.render('x'));
                    }
                }
                Format::Json => {
                    let v: Vec<_> = rows.iter().enumerate().map(|(i, p)| output::poly_json(i + 1, p)).collect();
                    println!("{}", json_line(&serde_json::Value::Array(v)));
                }
                Format::Latex => println!("{}", output::latex_table(&rows)),
            }
        }
        Command::Verify { max_brute_n, inject_fault } => {
            if cli.family.is_some() {
                return Err(Failure::Other("verify checks the built-in doubly hexagonal chain only".into()));
            }
            let opts = CertifyOptions { max_brute_n: *max_brute_n, limits: bf, inject_fault: *inject_fault };
            let report = certify(&opts)?;
            println!("{report}");
            return Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::DeriveQ { reduced, format } => {
            let engine = GenusEngine::new(family(cli)?)?;
            let (matrix, initial) = if *reduced {
                let l = engine.lumping();
                let m = genus_core::transfer::TransferMatrix { types: l.names.clone(), q: l.matrix.clone() };
                (m, l.initial.entries().to_vec())
            } else {
                (engine.matrix().clone(), engine.initial().entries.entries().to_vec())
            };
            match format {
                Format::Text => println!("{}", output::matrix_text(&matrix, &initial)),
                Format::Json => println!("{}", json_line(&output::matrix_json(&matrix, &initial))),
                Format::Latex => println!("{}", output::matrix_latex(&matrix)),
            }
        }
        Command::Rotagraph { n, format } => {
            let graph = build_rotagraph(&family(cli)?, *n)?;
            let poly = genus_distribution_bruteforce(&graph, &bf)?.into_poly();
            match format {
                Format::Text => println!("{}", poly.render('x')),
                Format::Json => println!("{}", json_line(&output::poly_json(*n, &poly))),
                Format::Latex => println!("${}$", output::latex_poly(&poly)),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
