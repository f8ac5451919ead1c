//! Line-oriented graph input: graph6, or a JSON graph when the line starts
//! with `{`. Blank lines and `#` comments are skipped.

use std::io::BufRead;

use thiserror::Error;
use zforce_core::{Graph, GraphError};

use crate::graph6::{self, Graph6Error};
use crate::json::GraphJson;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error("line {line}: invalid JSON graph: {source}")]
    Json {
        line: usize,
        source: serde_json::Error,
    },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("read failed: {0}")]
    Io(#[from] std::io::Error),
}

/// Parses one non-empty line; `line` is only used in errors.
pub fn parse_graph_line(text: &str, line: usize) -> Result<Graph, InputError> {
    let text = text.trim();
    if text.starts_with('{') {
        let dto: GraphJson =
            serde_json::from_str(text).map_err(|source| InputError::Json { line, source })?;
        dto.to_graph()
            .map_err(|source| InputError::Graph { line, source })
    } else {
        graph6::decode(text).map_err(|source| InputError::Graph6 { line, source })
    }
}

/// Iterator over the graphs of a reader, one per line.
pub struct GraphReader<R> {
    lines: std::io::Lines<R>,
    line: usize,
}

impl<R: BufRead> GraphReader<R> {
    pub fn new(reader: R) -> Self {
        GraphReader {
            lines: reader.lines(),
            line: 0,
        }
    }
}

impl<R: BufRead> Iterator for GraphReader<R> {
    type Item = Result<Graph, InputError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let text = match self.lines.next()? {
                Ok(text) => text,
                Err(e) => return Some(Err(e.into())),
            };
            self.line += 1;
            let trimmed = text.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            return Some(parse_graph_line(trimmed, self.line));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_lines() {
        let text = "# corpus\nC~\n\n{\"n\":2,\"edges\":[[0,1]]}\n>>graph6<<DQc\n";
        let graphs: Vec<Graph> = GraphReader::new(text.as_bytes())
            .map(Result::unwrap)
            .collect();
        assert_eq!(graphs.len(), 3);
        assert!(graphs[0].is_k4());
        assert_eq!(graphs[1].m(), 1);
        assert_eq!(graphs[2].n(), 5);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let mut it = GraphReader::new("C~\n~\n".as_bytes());
        assert!(it.next().unwrap().is_ok());
        let err = it.next().unwrap().unwrap_err();
        assert!(matches!(
            err,
            InputError::Graph6 {
                line: 2,
                source: Graph6Error::MalformedHeader
            }
        ));
        let bad = parse_graph_line(r#"{"n":2,"edges":[[0,2]]}"#, 7).unwrap_err();
        assert!(matches!(bad, InputError::Graph { line: 7, .. }));
        assert!(matches!(
            parse_graph_line("{nope", 1),
            Err(InputError::Json { .. })
        ));
    }
}
