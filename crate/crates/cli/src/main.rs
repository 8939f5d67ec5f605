use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use toricmot::input::{Format, InputSpec, Mode, SeriesKind};
use toricmot::render::render;
use toricmot::{run, CliError, Command};

#[derive(Parser)]
#[command(name = "toricmot", version, about = "Motivic Poincare series of affine toric varieties")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Rational form of the local (or global) series with strata, faces and pole sets.
    Compute(Opts),
    /// Stratum table, q-values and candidate poles only.
    Strata(Opts),
    /// Brute-force expansion, independent of the rational reconstruction.
    Oracle(Opts),
    /// Whether the arithmetic and geometric series agree by the vertex criterion.
    CheckNicaise(Opts),
}

#[derive(Args)]
struct Opts {
    /// JSON or TOML input document.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    series: Option<SeriesKind>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Assert that the semigroup is saturated.
    #[arg(long)]
    normal: bool,
    /// Also expand the series to this power of T.
    #[arg(long, value_name = "N")]
    expand: Option<u32>,
    /// Extra orders checked during reconstruction.
    #[arg(long, value_name = "G")]
    guard: Option<u32>,
    /// Write the JSON report here ("-" for standard output instead of text).
    #[arg(long, value_name = "OUT")]
    json: Option<PathBuf>,
}

fn load(opts: &Opts) -> Result<InputSpec, CliError> {
    let path = opts.input.display().to_string();
    let text =
        std::fs::read_to_string(&opts.input).map_err(|e| CliError::Read { path: path.clone(), message: e.to_string() })?;
    let mut spec = InputSpec::parse(&text, Format::guess(&path, &text), &path)?;
    if let Some(s) = opts.series {
        spec.series = s;
    }
    if let Some(m) = opts.mode {
        spec.mode = m;
    }
    spec.normal |= opts.normal;
    if opts.expand.is_some() {
        spec.expand = opts.expand;
    }
    if let Some(g) = opts.guard {
        spec.smax_guard = g;
    }
    Ok(spec)
}

fn execute(command: Command, opts: &Opts) -> Result<(), CliError> {
    let doc = run(command, load(opts)?)?;
    match &opts.json {
        Some(p) if p.as_os_str() == "-" => print!("{}", doc.to_json()),
        Some(p) => {
            std::fs::write(p, doc.to_json())
                .map_err(|e| CliError::Write { path: p.display().to_string(), message: e.to_string() })?;
            print!("{}", render(&doc));
        }
        None => print!("{}", render(&doc)),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(4) } else { ExitCode::SUCCESS };
        }
    };
    let (command, opts) = match &cli.command {
        Sub::Compute(o) => (Command::Compute, o),
        Sub::Strata(o) => (Command::Strata, o),
        Sub::Oracle(o) => (Command::Oracle, o),
        Sub::CheckNicaise(o) => (Command::CheckNicaise, o),
    };
    match execute(command, opts) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("toricmot: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
