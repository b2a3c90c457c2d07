use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use wordbialg::character::Character;
use wordbialg_cli::cache::Cache;
use wordbialg_cli::commands::{cmd_check, cmd_classes, cmd_psi};
use wordbialg_cli::conjectures::{cmd_conjectures, Conjecture};
use wordbialg_cli::spec::DEFAULT_CAP;
use wordbialg_cli::suites::{cmd_verify, Suite};
use wordbialg_cli::{exit_code, ExperimentSpec, Format, Report};

/// Word relations, their classes and their images in quasi-symmetric functions.
#[derive(Parser, Debug)]
#[command(name = "wordbialg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Built-in relation name or JSON presentation file.
    #[arg(long, global = true)]
    relation: Option<String>,
    /// Closure alphabet [n].
    #[arg(long, global = true)]
    alphabet: Option<u8>,
    /// Word length bound.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Truncation degree of images.
    #[arg(long, global = true)]
    degree: Option<usize>,
    /// Extra closure length for inhomogeneous relations.
    #[arg(long, global = true)]
    headroom: Option<usize>,
    /// Character: le, ge, lt, gt, or a convolution such as gt-le.
    #[arg(long, global = true)]
    character: Option<Character>,
    #[arg(long, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Allow packed lengths up to 9.
    #[arg(long, global = true)]
    extended: bool,
    /// Largest closure universe, in words.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u128,
    /// Worker threads; all cores when absent.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory for cached per-length results.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Seed for pseudorandom inputs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count and list equivalence classes.
    Classes,
    /// Classify a relation at bounded scale.
    Check,
    /// Image of a word, or of its class under --relation.
    Psi { word: String },
    /// Bounded counterexample search.
    Conjectures { which: Conjecture },
    /// Run a verification suite.
    Verify { suite: Suite },
}

fn spec_from(name: &str, c: &Common, max_len: usize, character: Character, headroom: usize) -> ExperimentSpec {
    ExperimentSpec {
        command: name.into(),
        relation: c.relation.clone(),
        alphabet: c.alphabet,
        max_len: c.max_len.unwrap_or(max_len),
        headroom: c.headroom.unwrap_or(headroom),
        degree: c.degree,
        character: c.character.unwrap_or(character),
        format: c.format,
        extended: c.extended,
        cap: c.cap,
        seed: c.seed,
    }
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    let c = &cli.common;
    let cache = Cache::new(c.cache_dir.as_deref());
    // partial results go to stderr as they finish
    let mut progress = |line: &str| {
        eprintln!("{line}");
    };
    match &cli.command {
        Command::Classes => cmd_classes(&spec_from("classes", c, 7, Character::LE, 2), &cache, &mut progress),
        Command::Check => cmd_check(&spec_from("check", c, 6, Character::LE, 2)),
        Command::Psi { word } => cmd_psi(&spec_from("psi", c, word.chars().count(), Character::LE, 2), word),
        Command::Conjectures { which } => {
            let spec = spec_from("conjectures", c, which.default_len(), Character::PEAK, 1);
            cmd_conjectures(*which, &spec, &cache, &mut progress)
        }
        Command::Verify { suite } => cmd_verify(*suite, c.seed),
    }
}

fn main() -> ExitCode {
    // usage errors exit with 1; 2 is reserved for property failures
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(j) = cli.common.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = out.write_all(report.render(cli.common.format).as_bytes());
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
