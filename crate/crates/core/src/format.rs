use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

/// Largest graph6 size handled (single-byte length form).
pub const MAX_GRAPH6_N: usize = 62;

/// Encodes a graph in graph6: byte `n+63`, then the upper triangle read
/// column by column, packed into 6-bit groups, most significant bit first.
pub fn graph_to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_N {
        return Err(Error::TooManyVertices { n, max: MAX_GRAPH6_N });
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push((group + 63) as char);
                group = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        group <<= 6 - used;
        out.push((group + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 line; tolerates the optional `>>graph6<<` header.
pub fn graph_from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim().trim_start_matches(">>graph6<<").trim();
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "empty graph6 string".into(),
        });
    }
    let n = (bytes[0] as i32) - 63;
    if !(1..=MAX_GRAPH6_N as i32).contains(&n) {
        return Err(Error::Parse {
            line: 1,
            msg: format!("unsupported graph6 size byte {:?}", bytes[0] as char),
        });
    }
    let n = n as usize;
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() != 1 + need {
        return Err(Error::Parse {
            line: 1,
            msg: format!(
                "graph6 body for n={n} needs {need} bytes, got {}",
                bytes.len() - 1
            ),
        });
    }
    let mut bits = Vec::with_capacity(need * 6);
    for &b in &bytes[1..] {
        let v = (b as i32) - 63;
        if !(0..64).contains(&v) {
            return Err(Error::Parse {
                line: 1,
                msg: format!("invalid graph6 byte {:?}", b as char),
            });
        }
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    let mut g = Graph::new(n)?;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                g.add_edge(i, j)?;
            }
            idx += 1;
        }
    }
    if bits[idx..].iter().any(|&b| b) {
        return Err(Error::Parse {
            line: 1,
            msg: "nonzero padding in graph6 body".into(),
        });
    }
    Ok(g)
}

/// Edge-list form: first line `n`, then one `u v` line per edge.
pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected an integer, got {tok:?}"),
    })
}

pub fn graph_from_edge_list(s: &str) -> Result<Graph> {
    let mut lines = s
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, head) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty edge list".into(),
    })?;
    let n = parse_usize(head, line)?;
    let mut g = Graph::new(n)?;
    for (line, l) in lines {
        let mut toks = l.split_whitespace();
        let u = parse_usize(toks.next().unwrap_or(""), line)?;
        let v = parse_usize(
            toks.next().ok_or(Error::Parse {
                line,
                msg: "edge line needs two vertices".into(),
            })?,
            line,
        )?;
        if toks.next().is_some() {
            return Err(Error::Parse {
                line,
                msg: "edge line has trailing tokens".into(),
            });
        }
        g.add_edge(u, v).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
    }
    Ok(g)
}

/// Hypergraph text form: first line `n m`, then `m` lines of ascending vertex
/// ids. The writer emits canonical order; the reader canonicalizes unsorted
/// or duplicated input and rejects out-of-range ids.
pub fn hypergraph_to_text(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.n(), h.edge_count());
    for e in h.edges() {
        let words: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

pub fn hypergraph_from_text(s: &str) -> Result<Hypergraph> {
    let mut lines = s
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, head) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty hypergraph".into(),
    })?;
    let mut toks = head.split_whitespace();
    let n = parse_usize(toks.next().unwrap_or(""), line)?;
    let m = parse_usize(
        toks.next().ok_or(Error::Parse {
            line,
            msg: "header must be 'n m'".into(),
        })?,
        line,
    )?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, l) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: format!("expected {m} hyperedge lines"),
        })?;
        let mut e = VertexSet::EMPTY;
        for tok in l.split_whitespace() {
            let v = parse_usize(tok, line)?;
            if v >= n {
                return Err(Error::Parse {
                    line,
                    msg: format!("vertex {v} out of range for n={n}"),
                });
            }
            e.insert(v);
        }
        edges.push(e);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            msg: "trailing content after the hyperedge list".into(),
        });
    }
    Hypergraph::new(n, edges).map_err(|e| Error::Parse {
        line: 1,
        msg: e.to_string(),
    })
}

/// Guesses the graph format: a leading integer means edge list, anything else
/// graph6.
pub fn parse_graph_auto(s: &str) -> Result<Graph> {
    let first = s
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first
        .chars()
        .next()
        .map_or(false, |c| c.is_ascii_digit())
    {
        graph_from_edge_list(s)
    } else {
        graph_from_graph6(s)
    }
}

/// Reads a whole graph6 file (one graph per line, blank lines skipped).
pub fn graphs_from_graph6_stream(s: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in s.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = graph_from_graph6(line).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse { line: i + 1, msg },
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}
