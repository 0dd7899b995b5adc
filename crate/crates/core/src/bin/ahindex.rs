use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ahindex::analytics::{CorrelationMethod, RankMetric};
use ahindex::cli::{self, CliError, InputFormat, OutputFormat, RunConfig};
use ahindex::indices::RatioDefinition;
use ahindex::ingest::AuthorDelimiter;
use ahindex::population::PopulationConfig;
use ahindex::synth::SynthConfig;
use ahindex::{BombPolicy, ProfilePolicy, SelfCitationPolicy};

#[derive(Parser)]
#[command(
    name = "ahindex",
    version,
    about = "H-index and aH-index analytics over citation corpora"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an input corpus and write a canonical snapshot.
    Ingest {
        #[command(flatten)]
        input: InputArgs,
        /// Snapshot path (canonical JSON lines).
        #[arg(long)]
        snapshot: PathBuf,
    },
    /// Per-author indicators.
    Report {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Top authors by h or x·h.
    Rank {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = MetricArg::H)]
        metric: MetricArg,
        #[arg(long, default_value_t = 20)]
        top: usize,
    },
    /// Correlation of x·h with h per h-threshold.
    Correlate {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_delimiter = ',', default_values_t = [8u32, 20, 30])]
        thresholds: Vec<u32>,
        #[arg(long)]
        spearman: bool,
    },
    /// Citing papers that cite at least k works of one author.
    Detect {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value_t = 10)]
        k: u32,
    },
    /// Distribution series for plotting h and a.
    Plotdata {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Generate a seeded synthetic corpus.
    Gen {
        #[arg(long, default_value_t = 1_000)]
        papers: usize,
        #[arg(long, default_value_t = 300)]
        authors: usize,
        #[arg(long, default_value_t = 5_000)]
        citations: usize,
        #[arg(long, default_value_t = 0)]
        bombs: usize,
        #[arg(long, default_value_t = 20)]
        bomb_size: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Canonical)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Input corpus path.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Canonical)]
    format: FormatArg,
    /// Separator between names on `#@` lines.
    #[arg(long, value_enum, default_value_t = DelimiterArg::Auto)]
    author_delimiter: DelimiterArg,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Minimum h for the authors used to estimate r.
    #[arg(long, default_value_t = 8)]
    h_threshold: u32,
    /// Fixed correction coefficient instead of estimating it.
    #[arg(long)]
    r: Option<f64>,
    #[arg(long, value_enum, default_value_t = RatioArg::MeanOfRatios)]
    ratio: RatioArg,
    /// Drop citing papers that cite at least K works of the evaluated author.
    #[arg(long, value_name = "K")]
    exclude_bombs: Option<u32>,
    /// Drop citing papers co-authored by the evaluated author.
    #[arg(long)]
    exclude_self_citations: bool,
    #[arg(long, value_enum, default_value_t = OutputArg::Csv)]
    output: OutputArg,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Arnet,
    Canonical,
}

#[derive(Clone, Copy, ValueEnum)]
enum DelimiterArg {
    Auto,
    Comma,
    Semicolon,
}

#[derive(Clone, Copy, ValueEnum)]
enum RatioArg {
    MeanOfRatios,
    RatioOfMeans,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputArg {
    Table,
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    H,
    Corrected,
}

impl From<FormatArg> for InputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Arnet => InputFormat::Arnet,
            FormatArg::Canonical => InputFormat::Canonical,
        }
    }
}

impl InputArgs {
    fn config(&self) -> RunConfig {
        let mut config = RunConfig::new(&self.input);
        config.format = self.format.into();
        config.author_delimiter = match self.author_delimiter {
            DelimiterArg::Auto => AuthorDelimiter::Auto,
            DelimiterArg::Comma => AuthorDelimiter::Comma,
            DelimiterArg::Semicolon => AuthorDelimiter::Semicolon,
        };
        config
    }
}

impl RunArgs {
    fn config(&self) -> RunConfig {
        let mut config = self.input.config();
        config.population = PopulationConfig {
            h_threshold: self.h_threshold,
            r_override: self.r,
            policy: ProfilePolicy {
                bombs: self.exclude_bombs.map_or(BombPolicy::Include, BombPolicy::Exclude),
                self_citations: if self.exclude_self_citations {
                    SelfCitationPolicy::Exclude
                } else {
                    SelfCitationPolicy::Include
                },
            },
            ratio: match self.ratio {
                RatioArg::MeanOfRatios => RatioDefinition::MeanOfRatios,
                RatioArg::RatioOfMeans => RatioDefinition::RatioOfMeans,
            },
        };
        config.output = match self.output {
            OutputArg::Table => OutputFormat::Table,
            OutputArg::Csv => OutputFormat::Csv,
            OutputArg::Jsonl => OutputFormat::Jsonl,
        };
        config
    }

    fn sink(&self) -> Result<Box<dyn Write>, CliError> {
        open_sink(self.out.as_ref())
    }
}

fn open_sink(path: Option<&PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|source| CliError::Io {
            context: format!("cannot create {}", p.display()),
            source,
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Ingest { input, snapshot } => {
            let report = cli::cmd_ingest(&input.config(), &snapshot)?;
            cli::write_ingest_summary(&report, io::stdout().lock()).map_err(|source| CliError::Io {
                context: "writing summary".into(),
                source,
            })?;
            for w in &report.parse_warnings {
                eprintln!("warning: line {}: {}", w.line, w.message);
            }
            Ok(())
        }
        Command::Report { run } => cli::cmd_report(&run.config(), run.sink()?),
        Command::Rank { run, metric, top } => {
            let metric = match metric {
                MetricArg::H => RankMetric::H,
                MetricArg::Corrected => RankMetric::Corrected,
            };
            cli::cmd_rank(&run.config(), metric, top, run.sink()?)
        }
        Command::Correlate {
            run,
            thresholds,
            spearman,
        } => {
            let method = if spearman {
                CorrelationMethod::Spearman
            } else {
                CorrelationMethod::Pearson
            };
            cli::cmd_correlate(&run.config(), &thresholds, method, run.sink()?)
        }
        Command::Detect { run, k } => cli::cmd_detect(&run.config(), k, run.sink()?),
        Command::Plotdata { run, out_dir } => {
            for path in cli::cmd_plotdata(&run.config(), &out_dir)? {
                eprintln!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::Gen {
            papers,
            authors,
            citations,
            bombs,
            bomb_size,
            seed,
            format,
            out,
        } => {
            let synth = SynthConfig {
                papers,
                authors,
                citations,
                bombs,
                bomb_size,
                seed,
                ..SynthConfig::default()
            };
            let ledger = cli::cmd_gen(&synth, format.into(), open_sink(out.as_ref())?)?;
            eprintln!("edges: {ledger}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
