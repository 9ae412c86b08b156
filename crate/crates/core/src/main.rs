use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use cohint::cli::{
    catalog_emit, parse_input, render_json, render_text, run, Command, Flags, CATALOG_KEYS,
};
use cohint::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// BPS spaces, DT invariants and integrality checks for weakly symmetric representations.
#[derive(Parser, Debug)]
#[command(name = "cohint", version)]
struct Args {
    /// One of: validate, strata, bps, verify, molien, catalog
    command: String,
    /// Input document (JSON)
    #[arg(long, conflicts_with = "catalog")]
    input: Option<PathBuf>,
    /// Catalog key, e.g. gl2-cotangent or sl2-irrep:5
    #[arg(long)]
    catalog: Option<String>,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    group_cap: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Restrict the BPS section to one orbit
    #[arg(long)]
    orbit: Option<usize>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(args: &Args) -> Result<(String, i32), Error> {
    let command: Command = args.command.parse()?;
    if command == Command::Catalog && args.input.is_none() {
        return match &args.catalog {
            Some(key) => {
                let doc = catalog_emit(key)?;
                let json = serde_json::to_string_pretty(&doc).expect("document serializes");
                Ok((json + "\n", 0))
            }
            None => Ok((CATALOG_KEYS.join("\n") + "\n", 0)),
        };
    }
    let doc = match (&args.input, &args.catalog) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
            parse_input(&text)?
        }
        (None, Some(key)) => catalog_emit(key)?,
        (None, None) => return Err(Error::input("one of --input or --catalog is required")),
    };
    let flags = Flags {
        max_degree: args.max_degree,
        group_cap: args.group_cap,
        orbit: args.orbit,
    };
    let (report, code) = run(command, &doc, &flags)?;
    let out = match args.format {
        Format::Json => render_json(&report) + "\n",
        Format::Text => render_text(&report),
    };
    Ok((out, code))
}
