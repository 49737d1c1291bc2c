//! Command-line front end.
//!
//! JSON goes to stdout, human-readable progress to stderr. Exit codes:
//! 0 success, 2 domain error (bad arguments), 3 internal consistency
//! failure (an identity the library guarantees was violated, i.e. a bug).

mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use akempic::enumerate::{self, CountMode};
use akempic::ivec::{self, IndexVector};
use akempic::tri;
use akempic::Error;

#[derive(Parser)]
#[command(
    name = "akempic",
    version,
    about = "Plane triangulations with all vertices of degree 3 or 6"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate counts over a range of n.
    Count {
        /// Single value `7` or inclusive range `1..60`.
        #[arg(long = "n")]
        range: String,
        /// Which count to tabulate.
        #[arg(long)]
        what: What,
        /// formula, partition, or both with a match flag. Defaults to
        /// formula (partition for histogram, which has no formula mode).
        #[arg(long)]
        mode: Option<Mode>,
        /// Output format.
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Orbit, mirror orbit, code and flags of one index-vector.
    Orbit { k: u64, m: u64, s: u64 },
    /// Build the triangulation of an index-vector and export its rotation
    /// system as JSON.
    Build {
        k: u64,
        m: u64,
        s: u64,
        /// Output path for the graph JSON.
        #[arg(short, long = "out")]
        out: PathBuf,
    },
    /// Run the invariant suites up to a bound.
    Verify {
        #[arg(long = "max-n")]
        max_n: u64,
        /// Comma-separated subset of arith,graph,kempe. Defaults to all.
        #[arg(long, value_delimiter = ',')]
        suites: Option<Vec<Suite>>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    D,
    A,
    Symmetric,
    Histogram,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Formula,
    Partition,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Arith,
    Graph,
    Kempe,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Count {
            range,
            what,
            mode,
            format,
        } => cmd_count(&range, what, mode, format),
        Command::Orbit { k, m, s } => cmd_orbit(k, m, s),
        Command::Build { k, m, s, out } => cmd_build(k, m, s, &out),
        Command::Verify { max_n, suites } => {
            let suites = suites.unwrap_or_else(|| vec![Suite::Arith, Suite::Graph, Suite::Kempe]);
            verify::cmd_verify(max_n, &suites)
        }
    }
}

/// `a..b` inclusive, or a single value.
fn parse_range(text: &str) -> Result<(u64, u64), Error> {
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| Error::domain(format!("bad integer '{s}' in range")))
    };
    if let Some((lo, hi)) = text.split_once("..") {
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo > hi {
            return Err(Error::domain(format!("empty range {lo}..{hi}")));
        }
        Ok((lo, hi))
    } else {
        let n = parse(text)?;
        Ok((n, n))
    }
}

fn cmd_count(range: &str, what: What, mode: Option<Mode>, format: Format) -> Result<(), Error> {
    let (lo, hi) = parse_range(range)?;
    if lo == 0 {
        return Err(Error::domain("counts are defined for n >= 1"));
    }
    let mode = match (what, mode) {
        (What::Histogram, None | Some(Mode::Partition)) => Mode::Partition,
        (What::Histogram, _) => {
            return Err(Error::domain(
                "histogram has no formula mode; use --mode partition",
            ))
        }
        (_, Some(m)) => m,
        (_, None) => Mode::Formula,
    };
    if what == What::A {
        if let Some(bad) = (lo..=hi).find(|n| n % 2 == 0) {
            return Err(Error::domain(format!(
                "a-count requires odd n, range contains {bad}"
            )));
        }
    }
    let key = match what {
        What::D => "d",
        What::A => "a",
        What::Symmetric => "symmetric",
        What::Histogram => "histogram",
    };
    let count = |n: u64, m: CountMode| -> Result<u64, Error> {
        match what {
            What::D => enumerate::d_count(n, m),
            What::A => enumerate::a_count(n, m),
            What::Symmetric => enumerate::symmetric_count(n, m),
            What::Histogram => unreachable!("histogram handled separately"),
        }
    };
    let mut rows = Vec::new();
    for n in lo..=hi {
        let row = if what == What::Histogram {
            let h = enumerate::order_histogram(n)?;
            json!({ "n": n, key: h })
        } else {
            match mode {
                Mode::Formula => json!({ "n": n, key: count(n, CountMode::Formula)? }),
                Mode::Partition => json!({ "n": n, key: count(n, CountMode::Partition)? }),
                Mode::Both => {
                    let formula = count(n, CountMode::Formula)?;
                    let partition = count(n, CountMode::Partition)?;
                    json!({
                        "n": n,
                        "formula": formula,
                        "partition": partition,
                        "match": formula == partition,
                    })
                }
            }
        };
        rows.push(row);
    }
    eprintln!("count: {} rows for n = {lo}..{hi}", rows.len());
    match format {
        Format::Json => println!("{}", Value::Array(rows)),
        Format::Csv => print_csv(what, mode, key, &rows),
    }
    Ok(())
}

fn print_csv(what: What, mode: Mode, key: &str, rows: &[Value]) {
    match (what, mode) {
        (What::Histogram, _) => {
            println!("n,order1,order2,order3,order6");
            for row in rows {
                let h = &row[key];
                println!("{},{},{},{},{}", row["n"], h["1"], h["2"], h["3"], h["6"]);
            }
        }
        (_, Mode::Both) => {
            println!("n,formula,partition,match");
            for row in rows {
                println!(
                    "{},{},{},{}",
                    row["n"], row["formula"], row["partition"], row["match"]
                );
            }
        }
        _ => {
            println!("n,{key}");
            for row in rows {
                println!("{},{}", row["n"], row[key]);
            }
        }
    }
}

fn checked_vector(k: u64, m: u64, s: u64) -> Result<IndexVector, Error> {
    let v = IndexVector::new(k, m, s)?;
    if !ivec::is_proper(v, v.product())? {
        let form = ivec::improper_form(v).unwrap_or("unknown");
        return Err(Error::domain(format!("improper: {form}")));
    }
    Ok(v)
}

fn cmd_orbit(k: u64, m: u64, s: u64) -> Result<(), Error> {
    let v = checked_vector(k, m, s)?;
    let orbit = ivec::orbit(v)?;
    let mirror_orbit = ivec::orbit(ivec::mirror(v))?;
    let code = ivec::code(v)?;
    let symmetric = ivec::is_symmetric(v)?;
    let akempic = ivec::is_akempic_arith(v)?;
    eprintln!(
        "orbit of {v}: order {}, code order {}",
        orbit.len(),
        code.len()
    );
    println!(
        "{}",
        json!({
            "orbit": orbit,
            "mirror_orbit": mirror_orbit,
            "code": code,
            "symmetric": symmetric,
            "akempic": akempic,
        })
    );
    Ok(())
}

fn cmd_build(k: u64, m: u64, s: u64, out: &std::path::Path) -> Result<(), Error> {
    let v = checked_vector(k, m, s)?;
    let g = tri::build(v)?;
    let orbit = tri::index_vectors_from_graph(&g)?;
    std::fs::write(out, g.to_json_string())
        .map_err(|e| Error::domain(format!("cannot write {}: {e}", out.display())))?;
    eprintln!(
        "built {v}: {} vertices, written to {}",
        g.vertex_count(),
        out.display()
    );
    println!(
        "{}",
        json!({
            "vertices": g.vertex_count(),
            "index_vectors": orbit,
        })
    );
    Ok(())
}
