//! `hilb2`: monomial ideals, edge ideals, tangent spaces and charts on
//! multigraded Hilbert schemes of the plane.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod corpus;
mod input;

use commands::{Failure, Outcome, Report};

#[derive(Parser, Debug)]
#[command(name = "hilb2", version, about = "Multigraded Hilbert schemes of points in the plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct Output {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the monomial ideals with a given Hilbert function.
    Enumerate(commands::Plain),
    /// Classify the arrows of a monomial ideal.
    Arrows(commands::Plain),
    /// The edge ideal of a positive significant arrow.
    Edge(commands::EdgeArgs),
    /// The poset of monomial ideals with a given Hilbert function.
    Poset(commands::PosetArgs),
    /// The lex-most ideal.
    Lexmost(commands::Verified),
    /// A chain of edge degenerations from an ideal to the lex-most one.
    Chain(commands::Verified),
    /// Tangent-space equations and dimensions.
    Tangent(commands::TangentArgs),
    /// The chart around the lex-most point.
    Chart(commands::ChartArgs),
    /// Split off the gcd of an ideal and classify the principal factor.
    Factor(commands::Plain),
    /// Check every worked example and the derived sweeps.
    VerifyPaper(VerifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Read corpus entries from this directory instead of the built-in copy.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Only run the corpus entries, not the sweeps.
    #[arg(long)]
    corpus_only: bool,
    #[arg(long, env = "HILB2_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(serde::Serialize, serde::Deserialize, Debug, PartialEq, Eq)]
struct VerifyLine {
    name: String,
    passed: bool,
    failures: Vec<commands::Check>,
}

fn verify_paper(a: &VerifyArgs) -> Outcome {
    let entries = corpus::load(a.corpus.as_deref()).map_err(Failure::Input)?;
    let mut lines = Vec::new();
    for (file, e) in &entries {
        let checks = e.run()?;
        lines.push(VerifyLine {
            name: format!("{} [{}]", e.name(), file),
            passed: checks.iter().all(|c| c.passed),
            failures: checks.into_iter().filter(|c| !c.passed).collect(),
        });
    }
    if !a.corpus_only {
        for s in corpus::SWEEPS {
            let checks = (s.run)(a.seed)?;
            lines.push(VerifyLine {
                name: format!("{} ({} cases)", s.name, checks.len()),
                passed: checks.iter().all(|c| c.passed),
                failures: checks.into_iter().filter(|c| !c.passed).collect(),
            });
        }
    }
    let mut text = String::new();
    for l in &lines {
        text.push_str(if l.passed { "PASS " } else { "FAIL " });
        text.push_str(&l.name);
        text.push('\n');
        for c in &l.failures {
            text.push_str(&format!("  {}: {}\n", c.name, c.detail.as_deref().unwrap_or("failed")));
        }
    }
    let passed = lines.iter().all(|l| l.passed);
    let json = serde_json::to_string_pretty(&lines).expect("lines serialize") + "\n";
    Ok(Report { text, json, passed })
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Enumerate(a) => commands::enumerate(a),
        Command::Arrows(a) => commands::arrows(a),
        Command::Edge(a) => commands::edge(a),
        Command::Poset(a) => commands::poset(a),
        Command::Lexmost(a) => commands::lexmost(a),
        Command::Chain(a) => commands::chain(a),
        Command::Tangent(a) => commands::tangent(a),
        Command::Chart(a) => commands::chart(a),
        Command::Factor(a) => commands::factor(a),
        Command::VerifyPaper(a) => verify_paper(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let body = if cli.output.json { &report.json } else { &report.text };
    let written = match &cli.output.output {
        Some(path) => fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
