//! `extower`: verification suites, root systems, bracket tables and structure-constant export.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use extower::algebras::Algebra;
use extower::exact::GaussRat;
use extower::roots::is_positive;
use extower::verify::{dynkin_of, root_system, run, Options, Suite};

const ALGEBRAS: [&str; 4] = ["f4r", "e6r", "e7r", "e8r"];

#[derive(Parser)]
#[command(
    name = "extower",
    version,
    about = "Exact exceptional Lie algebras f4 ⊂ e6 ⊂ e7 ⊂ e8 over Q(i)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        /// Check the Jacobi identity on every ordered e8 basis triple.
        #[arg(long)]
        deep: bool,
    },
    /// Print the root system, Cartan matrix and Dynkin diagram.
    Roots {
        #[arg(long, value_parser = PossibleValuesParser::new(ALGEBRAS))]
        algebra: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write structure constants as JSON.
    Export {
        #[arg(long, value_parser = PossibleValuesParser::new(ALGEBRAS))]
        algebra: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the bracket table in basis names.
    Table {
        #[arg(long, value_parser = PossibleValuesParser::new(ALGEBRAS))]
        algebra: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

/// Returns whether every check passed.
fn execute(cmd: Command) -> Result<bool, String> {
    match cmd {
        Command::Verify { suite, json, deep } => {
            let suite: Suite = suite.parse().map_err(|e: extower::Error| e.to_string())?;
            let report = run(suite, &Options { deep });
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
                );
            } else {
                println!("{report}");
            }
            Ok(report.passed())
        }
        Command::Roots { algebra, format } => {
            let alg = parse_algebra(&algebra)?;
            match format {
                Format::Text => print!("{}", roots_text(alg)?),
                Format::Json => println!("{}", roots_json(alg)?),
            }
            Ok(true)
        }
        Command::Export { algebra, out } => {
            let alg = parse_algebra(&algebra)?;
            let text = serde_json::to_string(alg.data()).map_err(|e| e.to_string())?;
            fs::write(&out, text).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
            Ok(true)
        }
        Command::Table { algebra } => {
            print!("{}", table(parse_algebra(&algebra)?));
            Ok(true)
        }
    }
}

fn parse_algebra(s: &str) -> Result<Algebra, String> {
    s.parse().map_err(|e: extower::Error| e.to_string())
}

fn fmt_values(v: &[GaussRat]) -> String {
    format!(
        "({})",
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn roots_text(alg: Algebra) -> Result<String, String> {
    let rs = root_system(alg)?;
    let (cm, diagram) = dynkin_of(alg)?;
    let simple = rs.simple_roots().map_err(|e| e.to_string())?;
    let mut s = format!("{alg}: {} roots, type {}\n", rs.roots.len(), diagram.label);
    s += &format!(
        "dim {}, rank {}, generic coefficients {}\n",
        rs.dim,
        rs.rank,
        fmt_values(&alg.generic_coefficients())
    );
    s += "values are α(Hⱼ) on the Cartan generators\n";
    s += "simple roots:\n";
    for (k, a) in simple.iter().enumerate() {
        s += &format!("  a{} = {}\n", k + 1, fmt_values(a));
    }
    s += "Cartan matrix:\n";
    for row in &cm {
        s += &format!(
            "  [{}]\n",
            row.iter()
                .map(|x| format!("{x:>2}"))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    s += &format!("diagram: {}\n", diagram.ascii);
    s += "positive roots:\n";
    for r in rs.positive() {
        s += &format!("  {}\n", fmt_values(&r.values));
    }
    Ok(s)
}

fn roots_json(alg: Algebra) -> Result<String, String> {
    let rs = root_system(alg)?;
    let (cm, diagram) = dynkin_of(alg)?;
    let simple = rs.simple_roots().map_err(|e| e.to_string())?;
    let roots: Vec<_> = rs
        .roots
        .iter()
        .map(|r| json!({ "values": r.values, "vector": r.vector, "positive": is_positive(&r.values) }))
        .collect();
    let v = json!({
        "algebra": alg.name(),
        "dim": rs.dim,
        "rank": rs.rank,
        "type": diagram.label,
        "cartan_generators": alg.cartan_generators(),
        "generic_coefficients": alg.generic_coefficients(),
        "root_count": rs.roots.len(),
        "roots": roots,
        "simple_roots": simple,
        "cartan_matrix": cm,
        "diagram": diagram,
    });
    serde_json::to_string_pretty(&v).map_err(|e| e.to_string())
}

fn table(alg: Algebra) -> String {
    let d = alg.data();
    let n = d.dim();
    let cells: Vec<Vec<String>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| d.expansion(&d.basis_bracket(i, j)))
                .collect()
        })
        .collect();
    let head = "[row, col]".to_string();
    let w0 = d
        .basis
        .iter()
        .map(|b| b.chars().count())
        .chain([head.chars().count()])
        .max()
        .unwrap_or(0);
    let widths: Vec<usize> = (0..n)
        .map(|j| {
            cells
                .iter()
                .map(|r| r[j].chars().count())
                .chain([d.basis[j].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w.saturating_sub(s.chars().count())));
    let mut out = pad(&head, w0);
    for (j, b) in d.basis.iter().enumerate() {
        out += &format!(" | {}", pad(b, widths[j]));
    }
    out += "\n";
    for (i, row) in cells.iter().enumerate() {
        out += &pad(&d.basis[i], w0);
        for (j, c) in row.iter().enumerate() {
            out += &format!(" | {}", pad(c, widths[j]));
        }
        out += "\n";
    }
    out
}
