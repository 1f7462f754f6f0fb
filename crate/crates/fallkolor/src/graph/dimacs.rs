//! DIMACS graph format: `c` comment lines, a `p edge V E` problem line, and
//! `e u v` edge lines with 1-based endpoints. Kneser labels travel in a
//! comment sidecar, one `c label i {a,b,…}` line per vertex.

use std::io::{BufRead, Write};

use crate::combinatorics::SubsetLabel;
use crate::error::{Error, Result};

use super::Graph;

/// Parses DIMACS. Edges may appear in any order; duplicates and self-loops
/// are rejected. `fallback_name` is used when no `c graph <name>` line is
/// present.
pub fn read_dimacs<R: BufRead>(reader: R, fallback_name: &str) -> Result<Graph> {
    let mut name: Option<String> = None;
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut labels: Vec<(usize, SubsetLabel)> = Vec::new();

    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match tokens.next() {
            Some("c") => {
                let rest: Vec<&str> = tokens.collect();
                match rest.first() {
                    Some(&"graph") if rest.len() >= 2 => {
                        name = Some(rest[1..].join(" "));
                    }
                    Some(&"label") if rest.len() == 3 => {
                        let idx: usize = rest[1].parse().map_err(|_| Error::Parse {
                            line: line_no,
                            msg: format!("bad label index {:?}", rest[1]),
                        })?;
                        let label: SubsetLabel = rest[2].parse().map_err(|e: Error| Error::Parse {
                            line: line_no,
                            msg: e.to_string(),
                        })?;
                        labels.push((idx, label));
                    }
                    _ => {} // ordinary comment
                }
            }
            Some("p") => {
                if header.is_some() {
                    return Err(Error::Parse { line: line_no, msg: "duplicate p line".into() });
                }
                let rest: Vec<&str> = tokens.collect();
                if rest.len() != 3 || rest[0] != "edge" {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected `p edge V E`, got {trimmed:?}"),
                    });
                }
                let v: usize = rest[1].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad vertex count {:?}", rest[1]),
                })?;
                let e: usize = rest[2].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad edge count {:?}", rest[2]),
                })?;
                header = Some((v, e));
            }
            Some("e") => {
                let (v_count, _) = header.ok_or(Error::Parse {
                    line: line_no,
                    msg: "edge before p line".into(),
                })?;
                let rest: Vec<&str> = tokens.collect();
                if rest.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected `e u v`, got {trimmed:?}"),
                    });
                }
                let parse = |s: &str| -> Result<usize> {
                    let x: usize = s.parse().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("bad endpoint {s:?}"),
                    })?;
                    if x == 0 || x > v_count {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("endpoint {x} out of range 1..={v_count}"),
                        });
                    }
                    Ok(x - 1)
                };
                edges.push((parse(rest[0])?, parse(rest[1])?));
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

    let (v_count, e_count) = header.ok_or(Error::Parse { line: 0, msg: "missing p line".into() })?;
    if edges.len() != e_count {
        return Err(Error::Parse {
            line: 0,
            msg: format!("p line declares {e_count} edges, found {}", edges.len()),
        });
    }

    let graph_name = name.unwrap_or_else(|| fallback_name.to_string());
    if labels.is_empty() {
        Graph::from_edges(graph_name, v_count, &edges)
    } else {
        if labels.len() != v_count {
            return Err(Error::Parse {
                line: 0,
                msg: format!("{} label lines for {v_count} vertices", labels.len()),
            });
        }
        let mut by_vertex: Vec<Option<SubsetLabel>> = vec![None; v_count];
        for (idx, label) in labels {
            if idx == 0 || idx > v_count {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("label index {idx} out of range 1..={v_count}"),
                });
            }
            if by_vertex[idx - 1].replace(label).is_some() {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("duplicate label line for vertex {idx}"),
                });
            }
        }
        // Label syntax does not carry the ground set; reconstruct it as the
        // largest element across all labels (exact for Kneser graphs, whose
        // labels jointly cover [n]).
        let ground = by_vertex
            .iter()
            .flat_map(|l| l.as_ref().unwrap().elements())
            .copied()
            .max()
            .unwrap_or(0);
        let labels: Vec<SubsetLabel> = by_vertex
            .into_iter()
            .map(|l| SubsetLabel::new(l.unwrap().elements().to_vec(), ground))
            .collect::<Result<_>>()?;
        Graph::with_labels(graph_name, v_count, &edges, labels)
    }
}

/// Writes DIMACS with edges `u < v` in ascending lexicographic order, plus
/// the label sidecar when the graph is labeled.
pub fn write_dimacs<W: Write>(graph: &Graph, mut writer: W) -> Result<()> {
    writeln!(writer, "c graph {}", graph.name())?;
    writeln!(writer, "p edge {} {}", graph.vertex_count(), graph.edge_count())?;
    if let Some(labels) = graph.labels() {
        for (i, label) in labels.iter().enumerate() {
            writeln!(writer, "c label {} {}", i + 1, label)?;
        }
    }
    for (u, v) in graph.edges() {
        writeln!(writer, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}
