//! Parsers for the ArnetMiner citation dump and the canonical JSON-lines
//! snapshot format.
//!
//! Both parsers are single-pass and never fail on a bad record: the record is
//! skipped and the reason is recorded in the [`IngestReport`]. Only a failure
//! of the underlying stream (including invalid UTF-8) aborts a parse.

use std::collections::HashSet;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::IngestError;
use crate::model::{AuthorKey, Corpus, Paper, PaperId};

/// Tally of everything read, kept and discarded during one parse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IngestReport {
    pub papers_read: usize,
    pub papers_kept: usize,
    pub malformed_records: usize,
    pub duplicate_paper_ids: usize,
    pub dangling_refs_dropped: usize,
    pub duplicate_refs_collapsed: usize,
    pub self_refs_dropped: usize,
    pub empty_author_lists: usize,
    pub parse_warnings: Vec<ParseWarning>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParseWarning {
    pub line: usize,
    pub message: String,
}

impl IngestReport {
    fn warn(&mut self, line: usize, message: impl Into<String>) {
        self.parse_warnings.push(ParseWarning {
            line,
            message: message.into(),
        });
    }
}

/// Trims, collapses internal whitespace runs to one space and case-folds.
///
/// Returns `None` when nothing is left.
pub fn normalize_author(raw: &str) -> Option<AuthorKey> {
    let mut out = String::with_capacity(raw.len());
    for word in raw.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.extend(word.chars().flat_map(char::to_lowercase));
    }
    AuthorKey::new(out).ok()
}

/// Separator between names on an `#@` line.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AuthorDelimiter {
    /// `;` if the line contains one, `,` otherwise.
    #[default]
    Auto,
    Comma,
    Semicolon,
}

impl AuthorDelimiter {
    fn split<'a>(self, line: &'a str) -> Box<dyn Iterator<Item = &'a str> + 'a> {
        let sep = match self {
            AuthorDelimiter::Comma => ',',
            AuthorDelimiter::Semicolon => ';',
            AuthorDelimiter::Auto if line.contains(';') => ';',
            AuthorDelimiter::Auto => ',',
        };
        Box::new(line.split(sep))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ArnetOptions {
    pub author_delimiter: AuthorDelimiter,
}

/// Fields of one record before validation.
#[derive(Default)]
struct RawRecord {
    line: usize,
    id: Option<String>,
    title: String,
    authors: Vec<String>,
    year: Option<String>,
    venue: Option<String>,
    references: Vec<String>,
}

/// Shared validation and bookkeeping for both input formats.
#[derive(Default)]
struct RecordSink {
    report: IngestReport,
    seen: HashSet<PaperId>,
    papers: Vec<Paper>,
}

impl RecordSink {
    fn malformed(&mut self, line: usize, message: impl Into<String>) {
        self.report.papers_read += 1;
        self.report.malformed_records += 1;
        self.report.warn(line, message);
    }

    fn accept(&mut self, raw: RawRecord) {
        self.report.papers_read += 1;
        let line = raw.line;

        let id = match raw.id.as_deref().map(str::trim).map(PaperId::new) {
            Some(Ok(id)) => id,
            _ => {
                self.report.malformed_records += 1;
                self.report.warn(line, "record has no paper id; skipped");
                return;
            }
        };
        if self.seen.contains(&id) {
            self.report.duplicate_paper_ids += 1;
            self.report
                .warn(line, format!("duplicate paper id {id}; later record skipped"));
            return;
        }

        let mut authors: Vec<AuthorKey> = Vec::with_capacity(raw.authors.len());
        for name in &raw.authors {
            match normalize_author(name) {
                Some(key) if authors.contains(&key) => {
                    self.report
                        .warn(line, format!("author {key} listed twice in {id}; kept once"));
                }
                Some(key) => authors.push(key),
                None => self.report.warn(line, format!("empty author name in {id}; omitted")),
            }
        }

        let year = match raw.year.as_deref().map(str::trim) {
            None | Some("") => None,
            Some(text) => match text.parse::<i32>() {
                Ok(y) => Some(y),
                Err(_) => {
                    self.report
                        .warn(line, format!("unparsable year {text:?} in {id}; ignored"));
                    None
                }
            },
        };
        let venue = raw.venue.map(|v| v.trim().to_string()).filter(|v| !v.is_empty());

        let mut references = std::collections::BTreeSet::new();
        for reference in &raw.references {
            let Ok(target) = PaperId::new(reference.trim()) else {
                self.report.warn(line, format!("empty reference in {id}; ignored"));
                continue;
            };
            if target == id {
                self.report.self_refs_dropped += 1;
                self.report.warn(line, format!("{id} references itself; edge dropped"));
                continue;
            }
            if !references.insert(target) {
                self.report.duplicate_refs_collapsed += 1;
            }
        }

        let paper = Paper::new(id.clone(), raw.title.trim(), authors, year, venue, references)
            .expect("self references were filtered above");
        self.seen.insert(id);
        self.papers.push(paper);
    }

    fn finish(mut self) -> (Corpus, IngestReport) {
        let (corpus, stats) = Corpus::assemble(self.papers);
        debug_assert_eq!(stats.duplicate_paper_ids, 0);
        self.report.dangling_refs_dropped = stats.dangling_refs_dropped;
        self.report.papers_kept = corpus.paper_count();
        self.report.empty_author_lists = corpus.papers().values().filter(|p| p.authors.is_empty()).count();
        (corpus, self.report)
    }
}

/// Markers that are recognised but whose content is not stored.
const IGNORED_MARKERS: &[&str] = &["#!", "#citation", "#arnetid", "#o"];

/// Parses the ArnetMiner blank-line-separated text format.
///
/// Recognised markers: `#*` title, `#@` authors, `#t` year, `#c` venue,
/// `#index` id, `#%` reference (repeatable). `#!` abstracts are skipped.
pub fn parse_arnet<R: BufRead>(mut reader: R, options: ArnetOptions) -> Result<(Corpus, IngestReport), IngestError> {
    let mut sink = RecordSink::default();
    let mut current: Option<RawRecord> = None;
    let mut buf = String::new();
    let mut line_no = 0usize;

    loop {
        buf.clear();
        let read = reader.read_line(&mut buf).map_err(|source| IngestError::Io {
            line: line_no + 1,
            source,
        })?;
        if read == 0 {
            break;
        }
        line_no += 1;
        let line = buf.trim_end_matches(['\n', '\r']);

        if line.trim().is_empty() {
            if let Some(record) = current.take() {
                sink.accept(record);
            }
            continue;
        }

        if !line.starts_with('#') {
            sink.report
                .warn(line_no, format!("unrecognised line {:?}; ignored", truncate(line)));
            continue;
        }

        let record = current.get_or_insert_with(|| RawRecord {
            line: line_no,
            ..RawRecord::default()
        });

        if let Some(rest) = line.strip_prefix("#index") {
            if record.id.is_some() {
                sink.report.warn(line_no, "second #index in one record; first kept");
            } else {
                record.id = Some(rest.to_string());
            }
        } else if IGNORED_MARKERS.iter().any(|m| line.starts_with(m)) {
            // parsed past, never stored
        } else if let Some(rest) = line.strip_prefix("#*") {
            record.title = rest.trim().to_string();
        } else if let Some(rest) = line.strip_prefix("#@") {
            record.authors = options.author_delimiter.split(rest).map(str::to_string).collect();
        } else if let Some(rest) = line.strip_prefix("#t") {
            record.year = Some(rest.to_string());
        } else if let Some(rest) = line.strip_prefix("#c") {
            record.venue = Some(rest.to_string());
        } else if let Some(rest) = line.strip_prefix("#%") {
            record.references.push(rest.to_string());
        } else {
            sink.report
                .warn(line_no, format!("unknown marker in {:?}; ignored", truncate(line)));
        }
    }
    if let Some(record) = current.take() {
        sink.accept(record);
    }
    Ok(sink.finish())
}

fn truncate(line: &str) -> &str {
    match line.char_indices().nth(40) {
        Some((idx, _)) => &line[..idx],
        None => line,
    }
}

/// One line of the canonical snapshot format.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CanonicalRecord {
    id: String,
    title: String,
    authors: Vec<String>,
    year: Option<i32>,
    venue: Option<String>,
    references: Vec<String>,
}

/// Parses the canonical JSON-lines format. Blank lines are ignored.
pub fn parse_canonical<R: BufRead>(mut reader: R) -> Result<(Corpus, IngestReport), IngestError> {
    let mut sink = RecordSink::default();
    let mut buf = String::new();
    let mut line_no = 0usize;
    loop {
        buf.clear();
        let read = reader.read_line(&mut buf).map_err(|source| IngestError::Io {
            line: line_no + 1,
            source,
        })?;
        if read == 0 {
            break;
        }
        line_no += 1;
        let line = buf.trim();
        if line.is_empty() {
            continue;
        }
        match serde_json::from_str::<CanonicalRecord>(line) {
            Ok(rec) => sink.accept(RawRecord {
                line: line_no,
                id: Some(rec.id),
                title: rec.title,
                authors: rec.authors,
                year: rec.year.map(|y| y.to_string()),
                venue: rec.venue,
                references: rec.references,
            }),
            Err(err) => sink.malformed(line_no, format!("schema violation: {err}")),
        }
    }
    Ok(sink.finish())
}

/// Writes a corpus in canonical form: one record per line, ordered by id.
pub fn write_canonical<W: Write>(corpus: &Corpus, mut writer: W) -> std::io::Result<()> {
    for paper in corpus.papers().values() {
        let record = CanonicalRecord {
            id: paper.id.as_str().to_string(),
            title: paper.title.clone(),
            authors: paper.authors.iter().map(|a| a.as_str().to_string()).collect(),
            year: paper.year,
            venue: paper.venue.clone(),
            references: paper.references.iter().map(|r| r.as_str().to_string()).collect(),
        };
        serde_json::to_writer(&mut writer, &record)?;
        writer.write_all(b"\n")?;
    }
    writer.flush()
}

/// Writes a corpus in the ArnetMiner text format.
///
/// Authors are joined with `", "`; keys containing a comma would not survive
/// a round trip under the comma delimiter.
pub fn write_arnet<W: Write>(corpus: &Corpus, mut writer: W) -> std::io::Result<()> {
    for paper in corpus.papers().values() {
        writeln!(writer, "#*{}", paper.title)?;
        let names: Vec<&str> = paper.authors.iter().map(AuthorKey::as_str).collect();
        writeln!(writer, "#@{}", names.join(", "))?;
        if let Some(year) = paper.year {
            writeln!(writer, "#t{year}")?;
        }
        if let Some(venue) = &paper.venue {
            writeln!(writer, "#c{venue}")?;
        }
        writeln!(writer, "#index{}", paper.id)?;
        for reference in &paper.references {
            writeln!(writer, "#%{reference}")?;
        }
        writeln!(writer)?;
    }
    writer.flush()
}
