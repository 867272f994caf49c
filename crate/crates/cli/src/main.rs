//! `metacover`: root systems, the finite group M, c-functions and c-factors
//! of the metaplectic cover from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

mod commands;
mod output;
mod parse;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{Failure, TableArgs, TableOutput};
use metacover::verify::DEFAULT_SEED;
use output::OutputRecord;

#[derive(Parser, Debug)]
#[command(name = "metacover", version, about = "Metaplectic covers of split real groups and their c-functions")]
struct Cli {
    /// Emit a JSON record instead of text (or CSV for `table`).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Roots, Cartan matrix, Weyl group order and metaplectic classification.
    Rootsys {
        /// Type and rank, e.g. B2.
        #[arg(value_name = "TYPE")]
        type_name: String,
    },
    /// Order, center, genuine central characters and pseudospherical dimension of M.
    Mgroup {
        #[arg(value_name = "TYPE")]
        type_name: String,
    },
    /// Closed-form c_{n/2}(s) for SL(2), optionally against the quadrature oracle.
    Cfun {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Complex number such as 1, 0.5+2i or -i.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long)]
        oracle: bool,
    },
    /// c(w, s) along a reduced word, with the factor trace.
    Cfactor {
        #[arg(long = "type", value_name = "TYPE")]
        type_name: String,
        /// One-based reduced word ("1 2 1", "e", or "longest").
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Comma-separated complex coordinates, one per simple root.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// Evaluate every reduced word of the same element.
        #[arg(long)]
        all_words: bool,
    },
    /// Run property suites: rootsys, torus, kubota, cfun, intertwine or all.
    Verify {
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Tabulate c(w, s) over a grid; CSV unless --json.
    Table {
        #[arg(long = "type", value_name = "TYPE")]
        type_name: String,
        #[arg(long, default_value = "longest", allow_hyphen_values = true)]
        word: String,
        /// start:stop:count per coordinate for Re(s), comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        re: String,
        /// Same for Im(s); defaults to 0 in every coordinate.
        #[arg(long, allow_hyphen_values = true)]
        im: Option<String>,
    },
}

fn emit(record: &OutputRecord, json: bool) {
    if json {
        print!("{}", record.to_json());
    } else {
        print!("{}", record.to_text());
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let json = cli.json;
    let record = match cli.command {
        Command::Rootsys { type_name } => commands::rootsys(&type_name)?,
        Command::Mgroup { type_name } => commands::mgroup(&type_name)?,
        Command::Cfun { n, s, oracle } => commands::cfun(n, &s, oracle)?,
        Command::Cfactor {
            type_name,
            word,
            s,
            all_words,
        } => commands::cfactor(&type_name, &word, &s, all_words)?,
        Command::Verify { suite, seed } => {
            let (record, passed) = commands::verify(&suite, seed)?;
            emit(&record, json);
            return Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Table {
            type_name,
            word,
            re,
            im,
        } => {
            let args = TableArgs {
                type_name: &type_name,
                word: &word,
                re: &re,
                im: im.as_deref(),
                json,
            };
            match commands::table(&args)? {
                TableOutput::Csv(text) => {
                    print!("{text}");
                    return Ok(ExitCode::SUCCESS);
                }
                TableOutput::Record(r) => r,
            }
        }
    };
    emit(&record, json);
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
