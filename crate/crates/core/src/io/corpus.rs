//! Streaming corpus readers for graph6 files and plain edge lists.
//!
//! Edge-list files hold any number of graphs. Each graph is a header line
//! `n m` followed by `m` lines `u v`. A metadata line of the form
//! `# chi=<int> orientable=<bool> genus=<int>` (any subset of the keys) before
//! a header attaches surface information to that graph. Other lines starting
//! with `#` are comments.

use std::fs::File;
use std::io::{BufRead, BufReader, Lines};
use std::path::Path;
use std::str::FromStr;

use log::warn;

use crate::error::{Error, Result};
use crate::graph::{EmbeddingInfo, Graph};
use crate::io::graph6::parse_graph6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edge_list" => Ok(Format::EdgeList),
            other => Err(Error::Io(format!("unknown corpus format `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusRecord {
    pub graph: Graph,
    /// `L<line>` where `<line>` is the record's first line in the file.
    pub id: String,
    pub embedding: Option<EmbeddingInfo>,
    pub source_line: usize,
}

impl CorpusRecord {
    pub fn new(graph: Graph, id: impl Into<String>, embedding: Option<EmbeddingInfo>, source_line: usize) -> Self {
        CorpusRecord {
            graph,
            id: id.into(),
            embedding,
            source_line,
        }
    }
}

/// Iterator over the records of a corpus, in file order.
///
/// In strict mode the first malformed record yields an error and ends the
/// stream; in lenient mode it is logged and skipped.
pub struct CorpusReader<R> {
    lines: Lines<R>,
    format: Format,
    lenient: bool,
    line_no: usize,
    finished: bool,
}

pub fn read_corpus<R: BufRead>(reader: R, format: Format, lenient: bool) -> CorpusReader<R> {
    CorpusReader {
        lines: reader.lines(),
        format,
        lenient,
        line_no: 0,
        finished: false,
    }
}

pub fn load_corpus(path: impl AsRef<Path>, format: Format, lenient: bool) -> Result<CorpusReader<BufReader<File>>> {
    let file = File::open(path.as_ref()).map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    Ok(read_corpus(BufReader::new(file), format, lenient))
}

enum Step {
    Record(CorpusRecord),
    Eof,
}

fn corpus_err(line: usize, message: impl Into<String>) -> Error {
    Error::Corpus {
        line,
        message: message.into(),
    }
}

impl<R: BufRead> CorpusReader<R> {
    fn next_line(&mut self) -> Result<Option<String>> {
        match self.lines.next() {
            None => Ok(None),
            Some(Err(e)) => Err(corpus_err(self.line_no + 1, e.to_string())),
            Some(Ok(mut s)) => {
                self.line_no += 1;
                if s.ends_with('\r') {
                    s.pop();
                }
                Ok(Some(s))
            }
        }
    }

    fn next_graph6(&mut self) -> Result<Step> {
        loop {
            let Some(line) = self.next_line()? else {
                return Ok(Step::Eof);
            };
            let body = line.strip_prefix(">>graph6<<").unwrap_or(&line);
            if body.is_empty() {
                continue;
            }
            let graph = parse_graph6(body.as_bytes()).map_err(|e| corpus_err(self.line_no, e.to_string()))?;
            let id = format!("L{}", self.line_no);
            return Ok(Step::Record(CorpusRecord::new(graph, id, None, self.line_no)));
        }
    }

    fn next_edge_list(&mut self) -> Result<Step> {
        let mut meta: Option<EmbeddingInfo> = None;
        let (header_line, n, m) = loop {
            let Some(line) = self.next_line()? else {
                return Ok(Step::Eof);
            };
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(comment) = trimmed.strip_prefix('#') {
                if let Some(info) = parse_metadata(comment).map_err(|m| corpus_err(self.line_no, m))? {
                    meta = Some(info);
                }
                continue;
            }
            let (n, m) = parse_pair(trimmed).map_err(|msg| corpus_err(self.line_no, format!("bad header: {msg}")))?;
            break (self.line_no, n, m);
        };
        let mut edges = Vec::with_capacity(m);
        let mut failure = None;
        while edges.len() < m {
            let Some(line) = self.next_line()? else {
                return Err(corpus_err(self.line_no, format!("expected {m} edges, file ended after {}", edges.len())));
            };
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            match parse_pair(trimmed) {
                Ok(pair) => edges.push(pair),
                Err(msg) => {
                    // Keep consuming the block so the next header stays aligned.
                    failure.get_or_insert_with(|| corpus_err(self.line_no, format!("bad edge: {msg}")));
                    edges.push((0, 0));
                }
            }
        }
        if let Some(e) = failure {
            return Err(e);
        }
        let graph = Graph::new(n, &edges).map_err(|e| corpus_err(header_line, e.to_string()))?;
        let id = format!("L{header_line}");
        Ok(Step::Record(CorpusRecord::new(graph, id, meta, header_line)))
    }
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let mut parts = s.split_whitespace();
    let mut field = || -> std::result::Result<usize, String> {
        let tok = parts.next().ok_or_else(|| format!("expected two integers in `{s}`"))?;
        tok.parse().map_err(|_| format!("`{tok}` is not a nonnegative integer"))
    };
    let pair = (field()?, field()?);
    if parts.next().is_some() {
        return Err(format!("trailing tokens in `{s}`"));
    }
    Ok(pair)
}

/// Parses the text after `#`. Returns `None` for ordinary comments.
fn parse_metadata(comment: &str) -> std::result::Result<Option<EmbeddingInfo>, String> {
    let (mut chi, mut orientable, mut genus) = (None, None, None);
    let mut any = false;
    for token in comment.split_whitespace() {
        let Some((key, value)) = token.split_once('=') else {
            continue;
        };
        let bad = || format!("bad value `{value}` for `{key}`");
        match key {
            "chi" => chi = Some(value.parse::<i64>().map_err(|_| bad())?),
            "orientable" => orientable = Some(value.parse::<bool>().map_err(|_| bad())?),
            "genus" => genus = Some(value.parse::<u32>().map_err(|_| bad())?),
            _ => continue,
        }
        any = true;
    }
    if !any {
        return Ok(None);
    }
    EmbeddingInfo::from_parts(orientable, genus, chi)
        .map(Some)
        .map_err(|e| e.to_string())
}

impl<R: BufRead> Iterator for CorpusReader<R> {
    type Item = Result<CorpusRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.finished {
            let step = match self.format {
                Format::Graph6 => self.next_graph6(),
                Format::EdgeList => self.next_edge_list(),
            };
            match step {
                Ok(Step::Record(r)) => return Some(Ok(r)),
                Ok(Step::Eof) => self.finished = true,
                Err(e) if self.lenient && matches!(e, Error::Corpus { .. }) => {
                    warn!("skipping malformed record: {e}");
                }
                Err(e) => {
                    self.finished = true;
                    return Some(Err(e));
                }
            }
        }
        None
    }
}
