//! Coloring text format.
//!
//! ```text
//! # optional comment lines
//! k 7
//! class {1,2} {1,3} {2,3}
//! class {1,4} {2,7} ...
//! ```
//!
//! One `class` line per color, classes in canonical order (by least vertex
//! index), members ascending by vertex index. Members are `{a,b,…}` subset
//! labels on labeled graphs and 1-based vertex indices otherwise.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use crate::combinatorics::SubsetLabel;
use crate::error::{Error, Result};
use crate::graph::{BitRow, Graph};

use super::Coloring;

/// Writes the canonical form of `coloring`. `header` lines, when given, are
/// emitted as leading `#` comments (e.g. a construction provenance note).
pub fn write_coloring<W: Write>(
    graph: &Graph,
    coloring: &Coloring,
    header: &[String],
    mut writer: W,
) -> Result<()> {
    if coloring.vertex_count() != graph.vertex_count() {
        return Err(Error::ShapeMismatch {
            coloring: coloring.vertex_count(),
            graph: graph.vertex_count(),
        });
    }
    for line in header {
        writeln!(writer, "# {line}")?;
    }
    let canon = coloring.canonical();
    writeln!(writer, "k {}", canon.k())?;
    for class in canon.classes() {
        write!(writer, "class")?;
        for v in class.iter_ones() {
            match graph.labels() {
                Some(labels) => write!(writer, " {}", labels[v])?,
                None => write!(writer, " {}", v + 1)?,
            }
        }
        writeln!(writer)?;
    }
    Ok(())
}

/// Reads a coloring for `graph`. Label members require a labeled graph;
/// integer members are 1-based vertex indices. The classes must partition
/// the vertex set.
pub fn read_coloring<R: BufRead>(graph: &Graph, reader: R) -> Result<Coloring> {
    let n = graph.vertex_count();
    // Keyed on elements: parsed labels infer their ground set from the max
    // element, so whole-label equality would be too strict.
    let label_index: Option<HashMap<&[u32], usize>> = graph
        .labels()
        .map(|labels| labels.iter().enumerate().map(|(i, l)| (l.elements(), i)).collect());

    let mut k: Option<usize> = None;
    let mut classes: Vec<BitRow> = Vec::new();

    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match tokens.next() {
            Some("k") => {
                if k.is_some() {
                    return Err(Error::Parse { line: line_no, msg: "duplicate k line".into() });
                }
                let value: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::Parse { line: line_no, msg: "bad k line".into() })?;
                if tokens.next().is_some() {
                    return Err(Error::Parse { line: line_no, msg: "trailing tokens on k line".into() });
                }
                k = Some(value);
            }
            Some("class") => {
                if k.is_none() {
                    return Err(Error::Parse { line: line_no, msg: "class before k".into() });
                }
                let mut class = BitRow::zeros(n);
                for tok in tokens {
                    let v = parse_member(tok, graph, label_index.as_ref(), line_no)?;
                    if class.get(v) {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("member {tok} repeated in class"),
                        });
                    }
                    class.set(v);
                }
                classes.push(class);
            }
            Some(other) => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unknown line type {other:?}"),
                });
            }
            None => {}
        }
    }

    let k = k.ok_or(Error::Parse { line: 0, msg: "missing k line".into() })?;
    if classes.len() != k {
        return Err(Error::Parse {
            line: 0,
            msg: format!("k = {k} but found {} class lines", classes.len()),
        });
    }
    Coloring::from_classes(n, classes).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })
}

fn parse_member(
    token: &str,
    graph: &Graph,
    label_index: Option<&HashMap<&[u32], usize>>,
    line_no: usize,
) -> Result<usize> {
    if token.starts_with('{') {
        let label: SubsetLabel = token.parse().map_err(|e: Error| Error::Parse {
            line: line_no,
            msg: e.to_string(),
        })?;
        let index = label_index.ok_or_else(|| Error::MissingLabels(format!(
            "coloring file refers to {token} but the graph is unlabeled"
        )))?;
        index.get(label.elements()).copied().ok_or_else(|| Error::Parse {
            line: line_no,
            msg: format!("label {token} is not a vertex of {}", graph.name()),
        })
    } else {
        let v: usize = token.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad vertex index {token:?}"),
        })?;
        if v == 0 || v > graph.vertex_count() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex index {v} out of range 1..={}", graph.vertex_count()),
            });
        }
        Ok(v - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_fall;

    #[test]
    fn labeled_roundtrip() {
        let g = Graph::kneser(4, 2).unwrap();
        let labels = g.labels().unwrap().to_vec();
        let assignment: Vec<u32> = labels.iter().map(|l| u32::from(!l.contains(1))).collect();
        let c = Coloring::from_assignment(2, assignment).unwrap();
        let mut buf = Vec::new();
        write_coloring(&g, &c, &["construction: test".into()], &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("# construction: test\nk 2\n"));
        assert!(text.contains("class {1,2} {1,3} {1,4}"));
        let back = read_coloring(&g, &buf[..]).unwrap();
        assert_eq!(back, c.canonical());
        assert_eq!(is_fall(&g, &back).unwrap(), None);
    }

    #[test]
    fn unlabeled_roundtrip_uses_indices() {
        let c5 = Graph::from_edges("C5", 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let c = Coloring::from_assignment(3, vec![0, 1, 0, 1, 2]).unwrap();
        let mut buf = Vec::new();
        write_coloring(&c5, &c, &[], &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.contains("class 1 3"));
        let back = read_coloring(&c5, &buf[..]).unwrap();
        assert_eq!(back, c.canonical());
    }

    #[test]
    fn rejects_label_members_on_unlabeled_graph() {
        let c5 = Graph::from_edges("C5", 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let text = "k 1\nclass {1,2} {1,3}\n";
        assert!(matches!(
            read_coloring(&c5, text.as_bytes()),
            Err(Error::MissingLabels(_))
        ));
    }

    #[test]
    fn rejects_unknown_label() {
        let g = Graph::kneser(4, 2).unwrap();
        let text = "k 1\nclass {1,5}\n";
        assert!(read_coloring(&g, text.as_bytes()).is_err());
    }

    #[test]
    fn rejects_non_partition() {
        let g = Graph::from_edges("P2", 2, &[(0, 1)]).unwrap();
        let missing = "k 1\nclass 1\n";
        assert!(read_coloring(&g, missing.as_bytes()).is_err());
        let doubled = "k 2\nclass 1 2\nclass 2\n";
        assert!(read_coloring(&g, doubled.as_bytes()).is_err());
        let wrong_count = "k 3\nclass 1\nclass 2\n";
        assert!(read_coloring(&g, wrong_count.as_bytes()).is_err());
    }
}
