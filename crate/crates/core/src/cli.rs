//! Command implementations behind the `ahindex` binary.
//!
//! Every command writes to a caller-supplied writer or directory so the same
//! code paths are exercised by the tests and the binary. Outputs carry no
//! timestamps; identical inputs give byte-identical files.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde_json::{Map, Value};
use thiserror::Error;

use crate::analytics::{
    correlation_by_threshold, detect_citation_bombs, distribution_series, rank_authors, CorrelationMethod, OrderBy,
    RankMetric,
};
use crate::error::{AnalyticsError, IndexError, IngestError};
use crate::ingest::{
    parse_arnet, parse_canonical, write_arnet, write_canonical, ArnetOptions, AuthorDelimiter, IngestReport,
};
use crate::model::{BombPolicy, Corpus, IndexReport, SelfCitationPolicy};
use crate::population::{evaluate_population, Population, PopulationConfig};
use crate::synth::{generate, SynthConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Analytics(#[from] AnalyticsError),
    #[error("output: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 1 for usage errors, 2 for data and I/O errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            _ => 2,
        }
    }
}

fn io_err(context: impl Into<String>) -> impl FnOnce(io::Error) -> CliError {
    let context = context.into();
    move |source| CliError::Io { context, source }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InputFormat {
    Arnet,
    #[default]
    Canonical,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    #[default]
    Csv,
    Jsonl,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub input: PathBuf,
    pub format: InputFormat,
    pub author_delimiter: AuthorDelimiter,
    pub population: PopulationConfig,
    pub output: OutputFormat,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>) -> Self {
        RunConfig {
            input: input.into(),
            format: InputFormat::Canonical,
            author_delimiter: AuthorDelimiter::Auto,
            population: PopulationConfig::default(),
            output: OutputFormat::Csv,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if let Some(r) = self.population.r_override {
            if !(r.is_finite() && r > 0.0) {
                return Err(CliError::Usage(format!("--r must be positive, got {r}")));
            }
        }
        if let BombPolicy::Exclude(0) = self.population.policy.bombs {
            return Err(CliError::Usage("bomb threshold must be positive".into()));
        }
        Ok(())
    }
}

pub fn load_corpus(config: &RunConfig) -> Result<(Corpus, IngestReport), CliError> {
    let file = File::open(&config.input).map_err(io_err(format!("cannot open {}", config.input.display())))?;
    let reader = BufReader::new(file);
    let parsed = match config.format {
        InputFormat::Arnet => parse_arnet(
            reader,
            ArnetOptions {
                author_delimiter: config.author_delimiter,
            },
        )?,
        InputFormat::Canonical => parse_canonical(reader)?,
    };
    Ok(parsed)
}

fn evaluate(config: &RunConfig) -> Result<(Corpus, Population), CliError> {
    config.validate()?;
    let (corpus, _) = load_corpus(config)?;
    let population = evaluate_population(&corpus, &config.population)?;
    Ok((corpus, population))
}

/// One output value.
#[derive(Clone, Debug)]
enum Cell {
    Text(String),
    Int(u64),
    Real(Option<f64>),
}

impl Cell {
    fn delimited(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Real(Some(v)) => format!("{v:.4}"),
            Cell::Real(None) => String::new(),
        }
    }

    fn display(&self) -> String {
        match self {
            Cell::Real(None) => "-".to_string(),
            other => other.delimited(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(i) => Value::from(*i),
            Cell::Real(Some(v)) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Real(None) => Value::Null,
        }
    }
}

struct Table {
    /// Lines written before the column header, prefixed with `# `.
    preamble: Vec<String>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn write<W: Write>(&self, format: OutputFormat, mut out: W) -> Result<(), CliError> {
        let ctx = "writing output";
        match format {
            OutputFormat::Csv => {
                for line in &self.preamble {
                    writeln!(out, "# {line}").map_err(io_err(ctx))?;
                }
                let mut w = csv::Writer::from_writer(&mut out);
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::delimited))?;
                }
                w.flush().map_err(io_err(ctx))?;
            }
            OutputFormat::Table => {
                for line in &self.preamble {
                    writeln!(out, "# {line}").map_err(io_err(ctx))?;
                }
                let rendered: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|row| row.iter().map(Cell::display).collect())
                    .collect();
                let widths: Vec<usize> = self
                    .columns
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        rendered
                            .iter()
                            .map(|r| r[i].chars().count())
                            .chain([c.len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: Vec<String>| -> String {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                writeln!(out, "{}", line(self.columns.iter().map(|c| c.to_string()).collect())).map_err(io_err(ctx))?;
                for row in rendered {
                    writeln!(out, "{}", line(row)).map_err(io_err(ctx))?;
                }
            }
            OutputFormat::Jsonl => {
                for row in &self.rows {
                    let obj: Map<String, Value> = self
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| (c.to_string(), v.json()))
                        .collect();
                    serde_json::to_writer(&mut out, &obj).map_err(|e| io_err(ctx)(e.into()))?;
                    writeln!(out).map_err(io_err(ctx))?;
                }
            }
        }
        out.flush().map_err(io_err(ctx))
    }
}

fn context_preamble(population: &Population, config: &PopulationConfig) -> Vec<String> {
    let r = population.context.r();
    let source = match population.coefficient {
        Some(c) => format!(
            "estimated from population {} with h >= {} ({:?})",
            c.population, config.h_threshold, config.ratio
        ),
        None => "set explicitly".to_string(),
    };
    let bombs = match config.policy.bombs {
        BombPolicy::Include => "include".to_string(),
        BombPolicy::Exclude(k) => format!("exclude(k={k})"),
    };
    let self_cites = match config.policy.self_citations {
        SelfCitationPolicy::Include => "include",
        SelfCitationPolicy::Exclude => "exclude",
    };
    vec![
        format!("r = {r:.4} {source}"),
        format!("bomb_policy = {bombs}, self_citations = {self_cites}"),
    ]
}

/// Parses the input and writes a canonical snapshot to `snapshot`.
pub fn cmd_ingest(config: &RunConfig, snapshot: &Path) -> Result<IngestReport, CliError> {
    let (corpus, report) = load_corpus(config)?;
    let file = File::create(snapshot).map_err(io_err(format!("cannot create {}", snapshot.display())))?;
    write_canonical(&corpus, BufWriter::new(file)).map_err(io_err("writing snapshot"))?;
    Ok(report)
}

/// Human-readable ingest summary.
pub fn write_ingest_summary<W: Write>(report: &IngestReport, mut out: W) -> io::Result<()> {
    writeln!(out, "papers_read: {}", report.papers_read)?;
    writeln!(out, "papers_kept: {}", report.papers_kept)?;
    writeln!(out, "malformed_records: {}", report.malformed_records)?;
    writeln!(out, "duplicate_paper_ids: {}", report.duplicate_paper_ids)?;
    writeln!(out, "dangling_refs_dropped: {}", report.dangling_refs_dropped)?;
    writeln!(out, "duplicate_refs_collapsed: {}", report.duplicate_refs_collapsed)?;
    writeln!(out, "self_refs_dropped: {}", report.self_refs_dropped)?;
    writeln!(out, "empty_author_lists: {}", report.empty_author_lists)?;
    writeln!(out, "parse_warnings: {}", report.parse_warnings.len())?;
    Ok(())
}

fn report_row(r: &IndexReport) -> Vec<Cell> {
    vec![
        Cell::Text(r.author.to_string()),
        Cell::Int(r.h.into()),
        Cell::Int(r.a.into()),
        Cell::Int(r.publication_count as u64),
        Cell::Int(r.citer_count as u64),
        Cell::Int(r.total_citations),
        Cell::Real(Some(r.n)),
        Cell::Real(r.x),
        Cell::Real(r.corrected),
    ]
}

const REPORT_COLUMNS: [&str; 9] = [
    "author",
    "h",
    "a",
    "publications",
    "citers",
    "total_citations",
    "n",
    "x",
    "corrected",
];

/// Per-author indicator table, ordered by author key.
pub fn cmd_report<W: Write>(config: &RunConfig, out: W) -> Result<(), CliError> {
    let (_, population) = evaluate(config)?;
    Table {
        preamble: context_preamble(&population, &config.population),
        columns: REPORT_COLUMNS.to_vec(),
        rows: population.reports.iter().map(report_row).collect(),
    }
    .write(config.output, out)
}

/// Top `top_k` authors by `metric`.
pub fn cmd_rank<W: Write>(config: &RunConfig, metric: RankMetric, top_k: usize, out: W) -> Result<(), CliError> {
    let (_, population) = evaluate(config)?;
    let ranked = rank_authors(&population.reports, metric, top_k);
    let mut columns = vec!["rank"];
    columns.extend(REPORT_COLUMNS);
    Table {
        preamble: context_preamble(&population, &config.population),
        columns,
        rows: ranked
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = vec![Cell::Int(i as u64 + 1)];
                row.extend(report_row(r));
                row
            })
            .collect(),
    }
    .write(config.output, out)
}

/// Correlation of `x·h` with `h` per h-threshold.
pub fn cmd_correlate<W: Write>(
    config: &RunConfig,
    thresholds: &[u32],
    method: CorrelationMethod,
    out: W,
) -> Result<(), CliError> {
    let (_, population) = evaluate(config)?;
    let rows = correlation_by_threshold(&population.reports, thresholds, method);
    let mut preamble = context_preamble(&population, &config.population);
    preamble.push(format!("method = {method:?}"));
    Table {
        preamble,
        columns: vec!["h_threshold", "population", "correlation"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    Cell::Int(r.h_threshold.into()),
                    Cell::Int(r.population as u64),
                    Cell::Real(r.value),
                ]
            })
            .collect(),
    }
    .write(config.output, out)
}

/// Citation-bomb findings at threshold `k`.
pub fn cmd_detect<W: Write>(config: &RunConfig, k: u32, out: W) -> Result<(), CliError> {
    config.validate()?;
    let (corpus, _) = load_corpus(config)?;
    let findings = detect_citation_bombs(&corpus, k)?;
    Table {
        preamble: Vec::new(),
        columns: vec![
            "citing_paper",
            "target_author",
            "distinct_targets_cited",
            "citing_author_count",
        ],
        rows: findings
            .iter()
            .map(|f| {
                vec![
                    Cell::Text(f.citing_paper.to_string()),
                    Cell::Text(f.target_author.to_string()),
                    Cell::Int(f.distinct_targets_cited.into()),
                    Cell::Int(f.citing_author_count as u64),
                ]
            })
            .collect(),
    }
    .write(config.output, out)
}

pub const PLOT_BY_H: &str = "distribution_by_h.csv";
pub const PLOT_BY_A: &str = "distribution_by_a.csv";

/// Writes `distribution_by_h.csv` and `distribution_by_a.csv` into `out_dir`
/// with columns `rank,h,a,author`. Always comma-delimited.
pub fn cmd_plotdata(config: &RunConfig, out_dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let (_, population) = evaluate(config)?;
    std::fs::create_dir_all(out_dir).map_err(io_err(format!("cannot create {}", out_dir.display())))?;
    let mut written = Vec::new();
    for (name, order) in [(PLOT_BY_H, OrderBy::H), (PLOT_BY_A, OrderBy::A)] {
        let path = out_dir.join(name);
        let file = File::create(&path).map_err(io_err(format!("cannot create {}", path.display())))?;
        Table {
            preamble: Vec::new(),
            columns: vec!["rank", "h", "a", "author"],
            rows: distribution_series(&population.reports, order)
                .into_iter()
                .map(|p| {
                    vec![
                        Cell::Int(p.rank as u64),
                        Cell::Int(p.h.into()),
                        Cell::Int(p.a.into()),
                        Cell::Text(p.author.to_string()),
                    ]
                })
                .collect(),
        }
        .write(OutputFormat::Csv, BufWriter::new(file))?;
        written.push(path);
    }
    Ok(written)
}

/// Writes a synthetic corpus and returns its edge ledger.
pub fn cmd_gen<W: Write>(synth: &SynthConfig, format: InputFormat, out: W) -> Result<usize, CliError> {
    let generated = generate(synth);
    let ledger = generated.edge_ledger;
    let corpus = generated.into_corpus();
    match format {
        InputFormat::Arnet => write_arnet(&corpus, out),
        InputFormat::Canonical => write_canonical(&corpus, out),
    }
    .map_err(io_err("writing corpus"))?;
    Ok(ledger)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), 1);
        let io = CliError::Io {
            context: "x".into(),
            source: io::Error::other("boom"),
        };
        assert_eq!(io.exit_code(), 2);
        assert_eq!(
            CliError::Index(IndexError::PopulationEmpty { h_threshold: 8 }).exit_code(),
            2
        );
    }

    #[test]
    fn cells_render_four_decimals() {
        assert_eq!(Cell::Real(Some(20.328)).delimited(), "20.3280");
        assert_eq!(Cell::Real(None).delimited(), "");
        assert_eq!(Cell::Real(None).display(), "-");
    }

    #[test]
    fn validate_rejects_bad_r() {
        let mut config = RunConfig::new("x");
        config.population.r_override = Some(-1.0);
        assert_eq!(config.validate().unwrap_err().exit_code(), 1);
    }

    #[test]
    fn missing_input_is_a_data_error() {
        let config = RunConfig::new("/nonexistent/definitely/missing.jsonl");
        let err = cmd_report(&config, io::sink()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
