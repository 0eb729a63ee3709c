//! `simplegames`: analyze, dualize, reduce and enumerate simple games.
//!
//! Exit status: 0 on success, 1 when `--assert` fails or the oracle
//! disagrees, 2 on bad input.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use simplegames::analysis::{self, AnalyzeOptions, Mode};
use simplegames::census::{self, Filter, LongCensusOptions, Property};
use simplegames::oracle::OracleLimit;
use simplegames::{duality, families, io as gameio, reduction, regular, Hypergraph};

#[derive(Parser)]
#[command(name = "simplegames", version, about = "Structural analysis of simple games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Simple,
    Regular,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Kv,
}

#[derive(Subcommand)]
enum Command {
    /// Decide every property of the game in FILE ("-" for stdin).
    Analyze {
        file: PathBuf,
        /// simple: rows are minimal winners; regular: shift-minimal winners.
        #[arg(long, value_enum, default_value = "simple")]
        mode: ModeArg,
        #[arg(long)]
        emit_dual: bool,
        #[arg(long)]
        emit_shift_kernel: bool,
        /// Search for a non-weightedness certificate.
        #[arg(long)]
        certify: bool,
        /// Exit with status 1 unless this property expression holds,
        /// e.g. "regular & !weighted".
        #[arg(long, value_name = "EXPR")]
        assert: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Minimize the rows instead of rejecting a non-antichain.
        #[arg(long)]
        raw: bool,
        /// Largest ground set for exhaustive expansion in regular mode.
        #[arg(long, default_value_t = simplegames::oracle::DEFAULT_ORACLE_LIMIT)]
        oracle_limit: usize,
    },
    /// Print the minimal transversals of the kernel in FILE.
    Dual {
        file: PathBuf,
        #[arg(long)]
        raw: bool,
    },
    /// Embed the game in FILE into a regular game on twice as many players.
    Reduce {
        file: PathBuf,
        /// Drop shift-dominated rows from the output.
        #[arg(long)]
        minimize: bool,
    },
    /// Enumerate kernels over N players and count those matching a filter.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all", value_name = "EXPR")]
        filter: String,
        /// Only print the counts.
        #[arg(long)]
        count_only: bool,
        /// Beyond six players: count regular decisive games and the majority
        /// games among them. Can take hours at nine players.
        #[arg(long)]
        allow_long_running: bool,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Skip the weightedness test in long runs.
        #[arg(long)]
        no_majority: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Print a named instance.
    Family {
        name: String,
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Cross-check the fast procedures against exhaustive scans.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = simplegames::oracle::DEFAULT_ORACLE_LIMIT)]
        limit: usize,
    },
}

/// Input problems exit with 2; everything else that goes wrong is a bug.
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.into())
    }
}

fn read_game(path: &PathBuf) -> anyhow::Result<Hypergraph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    gameio::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode, InputError> {
    match cli.command {
        Command::Analyze {
            file,
            mode,
            emit_dual,
            emit_shift_kernel,
            certify,
            assert,
            format,
            raw,
            oracle_limit,
        } => {
            let check: Option<Filter> = assert.as_deref().map(str::parse).transpose()?;
            let rows = read_game(&file)?;
            let opts = AnalyzeOptions {
                mode: match mode {
                    ModeArg::Simple => Mode::Simple,
                    ModeArg::Regular => Mode::Regular,
                },
                certify,
                emit_dual,
                emit_shift_kernel,
                raw,
                oracle_limit: OracleLimit(oracle_limit),
                ..AnalyzeOptions::default()
            };
            let report = analysis::analyze(&rows, &opts)?;
            let text = match format {
                Format::Table => report.to_table(),
                Format::Kv => report.to_kv(),
            };
            out.write_all(text.as_bytes())?;
            if let Some(f) = check {
                if !f.eval(&mut |p: Property| report.verdict(p)) {
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Dual { file, raw } => {
            let rows = read_game(&file)?;
            let kernel = if raw { rows.minimize() } else { rows };
            let dual = match regular::find_regular_order(&kernel)? {
                Some(order) => regular::linear_transversal_kernel(&kernel, &order)?,
                None => duality::transversal_kernel(&kernel),
            };
            out.write_all(gameio::serialize(&dual).as_bytes())?;
        }
        Command::Reduce { file, minimize } => {
            let kernel = read_game(&file)?;
            let reduced = if minimize {
                reduction::reduce_game_minimized(&kernel).into_hypergraph()
            } else {
                reduction::reduce_game(&kernel)
            };
            out.write_all(gameio::serialize(&reduced).as_bytes())?;
        }
        Command::Enumerate {
            n,
            filter,
            count_only,
            allow_long_running,
            checkpoint,
            no_majority,
            threads,
        } => {
            let filter: Filter = filter.parse()?;
            if n > census::MAX_CENSUS_PLAYERS {
                if !allow_long_running {
                    return Err(simplegames::Error::GroundSetTooLarge {
                        n,
                        limit: census::MAX_CENSUS_PLAYERS,
                    }
                    .into());
                }
                let wanted: Filter = "regular & decisive".parse()?;
                if filter != Filter::All && filter != wanted {
                    return Err(anyhow!("beyond {} players only `regular & decisive` can be enumerated", census::MAX_CENSUS_PLAYERS).into());
                }
                let mut opts = LongCensusOptions {
                    with_majority: !no_majority,
                    checkpoint,
                    ..LongCensusOptions::default()
                };
                if let Some(t) = threads {
                    opts.threads = t;
                }
                let counts = census::regular_decisive_census(n, &opts)?;
                out.write_all(counts.to_kv(n).as_bytes())?;
            } else {
                let mut err = None;
                let counts = census::census(n, &filter, |h| {
                    if !count_only && err.is_none() {
                        let rows: Vec<String> = h.iter().map(|x| x.to_string()).collect();
                        err = writeln!(out, "kernel={}", rows.join(",")).err();
                    }
                })?;
                if let Some(e) = err {
                    return Err(e.into());
                }
                out.write_all(counts.to_kv().as_bytes())?;
            }
        }
        Command::Family { name, m } => {
            let h = families::family(&name, m)?;
            out.write_all(gameio::serialize(&h).as_bytes())?;
        }
        Command::Oracle { file, limit } => {
            let kernel = read_game(&file)?;
            let checks = analysis::oracle_cross_check(&kernel, OracleLimit(limit))?;
            let mut agree = true;
            for c in &checks {
                let tag = if c.agrees() { "ok" } else { "MISMATCH" };
                writeln!(out, "{:<10} fast={:<5} brute={:<5} {tag}", c.property, c.fast, c.brute)?;
                agree &= c.agrees();
            }
            if !agree {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => code,
        Err(InputError(e)) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
