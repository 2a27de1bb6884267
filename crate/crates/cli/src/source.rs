//! Where graphs come from: a corpus file, named generators or exhaustive
//! enumeration. Every source yields records in a fixed order.

use std::fs::File;
use std::io::{self, BufRead, BufReader};

use roman_bondage::io::{read_corpus, Family, Format};
use roman_bondage::{enumerate_small_graphs, EmbeddingInfo, Graph};

use crate::CliError;

pub struct Item {
    pub id: String,
    pub graph: Graph,
    pub embedding: Option<EmbeddingInfo>,
}

pub enum Source {
    File { path: String, format: Format, strict: bool },
    Generated(Vec<Family>),
    Exhaustive { n: usize, connected: bool },
}

pub type Items = Box<dyn Iterator<Item = Result<Item, CliError>> + Send>;

impl Source {
    pub fn open(self) -> Result<Items, CliError> {
        match self {
            Source::File { path, format, strict } => {
                let reader: Box<dyn BufRead + Send> = if path == "-" {
                    Box::new(BufReader::new(io::stdin()))
                } else {
                    let file = File::open(&path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
                    Box::new(BufReader::new(file))
                };
                Ok(Box::new(read_corpus(reader, format, !strict).map(|r| {
                    r.map(|rec| Item {
                        id: rec.id,
                        graph: rec.graph,
                        embedding: rec.embedding,
                    })
                    .map_err(|e| CliError::Io(e.to_string()))
                })))
            }
            Source::Generated(families) => Ok(Box::new(families.into_iter().map(|f| {
                let (graph, emb) = f.build();
                Ok(Item {
                    id: f.to_string(),
                    graph,
                    embedding: emb.is_declared().then_some(emb),
                })
            }))),
            Source::Exhaustive { n, connected } => {
                let graphs = enumerate_small_graphs(n, connected).map_err(|e| CliError::Usage(e.to_string()))?;
                Ok(Box::new(graphs.enumerate().map(move |(i, graph)| {
                    Ok(Item {
                        id: format!("X{n}:{i}"),
                        graph,
                        embedding: None,
                    })
                })))
            }
        }
    }
}
