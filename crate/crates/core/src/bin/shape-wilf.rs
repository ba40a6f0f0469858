use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use shape_wilf::bijection::{trace, Theorem};
use shape_wilf::enumerate::{enumerate_fillings, ContentSpec, CountCache, CountRecord, Counter};
use shape_wilf::harness::{
    check_equivalence, reproduce_table, scan_conjecture1, scan_conjecture2, ScanReport,
};
use shape_wilf::{Composition, Error, FerrersShape, Filling, PatternSet, Word};

/// Pattern-avoiding words and 0-1 fillings of Ferrers shapes.
///
/// Exit status: 0 on success, 1 when a verification finds a mismatch,
/// 2 on a usage error.
#[derive(Parser)]
#[command(name = "shape-wilf", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Out::Text)]
    out: Out,
    /// Worker threads (default: all cores)
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    /// JSON-lines file of previously computed counts, extended in place
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Out {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Count avoiding fillings of a shape
    Count {
        /// Row lengths from the bottom, e.g. 5,5,4
        #[arg(long)]
        shape: FerrersShape,
        /// Row contents a_1,...,a_m, or `unconstrained`, or `positive-rows`
        #[arg(long, default_value = "unconstrained")]
        content: ContentSpec,
        /// Forbidden patterns joined by `+`, e.g. 231+221
        #[arg(long)]
        patterns: PatternSet,
    },
    /// Count avoiding words of length n over m letters
    CountWords {
        #[arg(short = 'n', long)]
        length: usize,
        #[arg(short = 'm', long)]
        alphabet: usize,
        #[arg(long)]
        patterns: PatternSet,
    },
    /// List avoiding fillings, one column-to-row vector per line
    Enumerate {
        #[arg(long)]
        shape: FerrersShape,
        #[arg(long, default_value = "unconstrained")]
        content: ContentSpec,
        #[arg(long)]
        patterns: PatternSet,
        /// Stop after this many fillings
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Apply a band bijection and print every intermediate object as JSON
    Bijection {
        /// 11 for {231,221} -> {312,212}, 12 for {231,121} -> {312,211}
        #[arg(long)]
        theorem: Theorem,
        #[arg(long)]
        shape: FerrersShape,
        #[arg(long)]
        content: Composition,
        /// Row of the 1 in each column, e.g. 1,4,6,5,2,1,3,2,3,3
        #[arg(long)]
        filling: String,
        /// Map from the 312 side back to the 231 side
        #[arg(long)]
        inverse: bool,
    },
    /// Recompute a published table (1 to 4)
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        id: u8,
    },
    /// Compare two pattern sets on every shape and positive row content
    CheckEquiv {
        #[arg(long)]
        patterns: PatternSet,
        #[arg(long)]
        versus: PatternSet,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u16).range(1..))]
        max_cols: u16,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u16).range(1..))]
        max_rows: u16,
    },
    /// Test |W(231)| <= |W(312)| on every shape within bounds
    ScanConj1 {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u16).range(1..))]
        max_cols: u16,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u16).range(1..))]
        max_rows: u16,
        /// `positive-rows` or `unconstrained`
        #[arg(long, default_value = "positive-rows")]
        content: ContentSpec,
    },
    /// Look for lengths and alphabets where 231+beta and 312+beta differ
    ScanConj2 {
        /// Permutation beta; `-` for the empty word
        #[arg(long, value_parser = parse_beta)]
        beta: Word,
        #[arg(long, default_value_t = 8)]
        max_length: usize,
        #[arg(long, default_value_t = 5)]
        max_alphabet: usize,
    },
}

fn parse_beta(s: &str) -> Result<Word, Error> {
    if s.trim() == "-" {
        Ok(Word::empty())
    } else {
        s.parse()
    }
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TheoremViolation(msg) => {
                eprintln!("verification failed: {msg}");
                Failure::Mismatch
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(usize::from(jobs))
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = cli.global.out;
    let counter = match &cli.global.cache {
        Some(path) => Counter::with_cache(CountCache::open(path)?),
        None => Counter::new(),
    };
    match cli.command {
        Command::Count {
            shape,
            content,
            patterns,
        } => {
            let rec = counter.record(&shape, &content, &patterns)?;
            print_record(&rec, out)?;
        }
        Command::CountWords {
            length,
            alphabet,
            patterns,
        } => {
            if length == 0 || alphabet == 0 {
                return Err(Failure::Usage(
                    "length and alphabet must be at least 1".into(),
                ));
            }
            let rect = FerrersShape::rectangle(alphabet, length)?;
            let rec = counter.record(&rect, &ContentSpec::Unconstrained, &patterns)?;
            print_record(&rec, out)?;
        }
        Command::Enumerate {
            shape,
            content,
            patterns,
            limit,
        } => {
            let iter = enumerate_fillings(&shape, &content, &patterns)?;
            let fillings: Vec<Filling> = iter.take(limit.unwrap_or(usize::MAX)).collect();
            match out {
                Out::Json => println!("{}", to_json(&fillings)?),
                Out::Text | Out::Csv => {
                    for f in &fillings {
                        println!("{}", join(f.col_to_row()));
                    }
                }
            }
        }
        Command::Bijection {
            theorem,
            shape,
            content,
            filling,
            inverse,
        } => {
            let t = Filling::parse(shape, &filling)?;
            let tr = trace(theorem, inverse, &t, &content)?;
            println!("{}", to_json(&tr)?);
        }
        Command::Table { id } => {
            let report = reproduce_table(usize::from(id), &counter)?;
            return print_report(&report, out, true);
        }
        Command::CheckEquiv {
            patterns,
            versus,
            max_cols,
            max_rows,
        } => {
            let report = check_equivalence(
                &patterns,
                &versus,
                usize::from(max_cols),
                usize::from(max_rows),
                &counter,
            )?;
            return print_report(&report, out, true);
        }
        Command::ScanConj1 {
            max_cols,
            max_rows,
            content,
        } => {
            let report = scan_conjecture1(
                usize::from(max_cols),
                usize::from(max_rows),
                &content,
                &counter,
            )?;
            return print_report(&report, out, false);
        }
        Command::ScanConj2 {
            beta,
            max_length,
            max_alphabet,
        } => {
            let report = scan_conjecture2(&beta, max_length, max_alphabet, &counter)?;
            return print_report(&report, out, false);
        }
    }
    Ok(())
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map_err(|e| Failure::from(Error::from(e)))
}

fn print_record(rec: &CountRecord, out: Out) -> Result<(), Failure> {
    match out {
        Out::Text => println!("{}", rec.count),
        Out::Json => println!("{}", to_json(rec)?),
        Out::Csv => {
            println!("shape,content,patterns,count");
            println!(
                "\"{}\",\"{}\",{},{}",
                rec.shape, rec.content, rec.patterns, rec.count
            );
        }
    }
    Ok(())
}

/// Conjecture scans only report; tables and equivalence checks fail on a
/// mismatch.
fn print_report(report: &ScanReport, out: Out, strict: bool) -> Result<(), Failure> {
    match out {
        Out::Text => print!("{}", report.to_text()),
        Out::Json => println!("{}", report.to_json()?),
        Out::Csv => print!("{}", report.to_csv()?),
    }
    if strict && report.verdict.is_negative() {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}
