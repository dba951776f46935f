//! Bit-exact text formats for tournaments, graphs, and their colored
//! variants.
//!
//! Layout: a header line `tournament K`, `graph K`, `tournament colored K P`
//! or `graph colored K P`; then `K` rows of `K` characters over `{0,1,-}`
//! forming the pair matrix; colored objects end with one line
//! `colors c1 … cK` (1-based colors in `1..=P`).
//!
//! For a tournament, entry `(i, j) = 1` means `i → j` and the mirror entry
//! must be `0`; a graph matrix must be symmetric. Serialization always emits
//! the normalized form — `-` on the diagonal and explicit `0`/`1` everywhere
//! else — while the parser is lenient about redundancy: the diagonal may be
//! `-` or `0`, and a mirror entry may be `-` to defer to its counterpart.
//! Inconsistent mirror entries are rejected with the offending pair named.

use crate::error::{Error, Result};
use crate::structures::{Coloring, ColoredGraph, ColoredTournament, Graph, Tournament};

/// Any object the text format can carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedObject {
    Tournament(Tournament),
    Graph(Graph),
    ColoredTournament(ColoredTournament),
    ColoredGraph(ColoredGraph),
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Tournament,
    Graph,
}

struct Header {
    kind: Kind,
    order: usize,
    palette: Option<usize>,
}

fn parse_header(line: &str) -> Result<Header> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let kind = match tokens.first() {
        Some(&"tournament") => Kind::Tournament,
        Some(&"graph") => Kind::Graph,
        _ => {
            return Err(perr(
                1,
                1,
                "header must start with `tournament` or `graph`",
            ))
        }
    };
    let parse_num = |tok: &str, what: &str| -> Result<usize> {
        let n: usize = tok
            .parse()
            .map_err(|_| perr(1, 1, format!("{what} `{tok}` is not a positive integer")))?;
        if n == 0 {
            return Err(perr(1, 1, format!("{what} must be at least 1")));
        }
        Ok(n)
    };
    match tokens.as_slice() {
        [_, k] => Ok(Header {
            kind,
            order: parse_num(k, "order")?,
            palette: None,
        }),
        [_, "colored", k, p] => Ok(Header {
            kind,
            order: parse_num(k, "order")?,
            palette: Some(parse_num(p, "palette")?),
        }),
        _ => Err(perr(
            1,
            1,
            "header must be `<kind> K` or `<kind> colored K P`",
        )),
    }
}

/// Reads the K×K character matrix from `lines[1..=K]`.
fn parse_matrix(lines: &[&str], k: usize) -> Result<Vec<Vec<char>>> {
    let mut rows = Vec::with_capacity(k);
    for i in 1..=k {
        let line_no = i + 1;
        let Some(raw) = lines.get(i) else {
            return Err(perr(line_no, 1, format!("missing matrix row {i} of {k}")));
        };
        let row: Vec<char> = raw.trim_end().chars().collect();
        if row.len() != k {
            return Err(perr(
                line_no,
                row.len().min(k) + 1,
                format!("matrix row {i} has {} entries, expected {k}", row.len()),
            ));
        }
        for (col, &ch) in row.iter().enumerate() {
            if !matches!(ch, '0' | '1' | '-') {
                return Err(perr(
                    line_no,
                    col + 1,
                    format!("invalid matrix character `{ch}` (expected 0, 1 or -)"),
                ));
            }
        }
        rows.push(row);
    }
    // Diagonal must be `-` (normalized) or `0` (tolerated redundancy).
    for (i, row) in rows.iter().enumerate() {
        if row[i] == '1' {
            return Err(perr(i + 2, i + 1, "diagonal entry must be `-`"));
        }
    }
    Ok(rows)
}

fn parse_colors_line(lines: &[&str], k: usize, palette: usize) -> Result<Coloring> {
    let line_no = k + 2;
    let Some(raw) = lines.get(k + 1) else {
        return Err(perr(line_no, 1, "missing `colors` line"));
    };
    let tokens: Vec<&str> = raw.split_whitespace().collect();
    if tokens.first() != Some(&"colors") {
        return Err(perr(line_no, 1, "expected line starting with `colors`"));
    }
    if tokens.len() != k + 1 {
        return Err(perr(
            line_no,
            1,
            format!("expected {k} colors, found {}", tokens.len() - 1),
        ));
    }
    let mut colors = Vec::with_capacity(k);
    for (idx, tok) in tokens[1..].iter().enumerate() {
        let c: usize = tok
            .parse()
            .map_err(|_| perr(line_no, 1, format!("color `{tok}` is not an integer")))?;
        if c == 0 || c > palette {
            return Err(perr(
                line_no,
                1,
                format!("color {c} of vertex {} outside 1..={palette}", idx + 1),
            ));
        }
        colors.push(c);
    }
    Ok(Coloring::new(palette, colors).expect("range checked above"))
}

fn reject_trailing(lines: &[&str], first_unused: usize) -> Result<()> {
    for (offset, raw) in lines.iter().enumerate().skip(first_unused) {
        if !raw.trim().is_empty() {
            return Err(perr(offset + 1, 1, "unexpected content after the object"));
        }
    }
    Ok(())
}

fn tournament_from_matrix(rows: &[Vec<char>], k: usize) -> Result<Tournament> {
    let mut t = Tournament::new_ascending(k);
    for i in 1..=k {
        for j in i + 1..=k {
            let upper = rows[i - 1][j - 1];
            let lower = rows[j - 1][i - 1];
            let forward = match (upper, lower) {
                ('1', '0') | ('1', '-') | ('-', '0') => true,
                ('0', '1') | ('0', '-') | ('-', '1') => false,
                ('-', '-') | ('0', '0') => {
                    return Err(perr(
                        j + 1,
                        i,
                        format!("pair {{{i},{j}}} has no orientation"),
                    ))
                }
                ('1', '1') => {
                    return Err(perr(
                        j + 1,
                        i,
                        format!("pair {{{i},{j}}} is oriented both ways"),
                    ))
                }
                _ => unreachable!("matrix characters are pre-validated"),
            };
            if !forward {
                t.flip_pair(i, j);
            }
        }
    }
    Ok(t)
}

fn graph_from_matrix(rows: &[Vec<char>], k: usize) -> Result<Graph> {
    let mut g = Graph::empty(k);
    for i in 1..=k {
        for j in i + 1..=k {
            let upper = rows[i - 1][j - 1];
            let lower = rows[j - 1][i - 1];
            let present = match (upper, lower) {
                ('1', '1') | ('1', '-') | ('-', '1') => true,
                ('0', '0') | ('0', '-') | ('-', '0') => false,
                ('-', '-') => {
                    return Err(perr(
                        j + 1,
                        i,
                        format!("pair {{{i},{j}}} is unspecified"),
                    ))
                }
                _ => {
                    return Err(perr(
                        j + 1,
                        i,
                        format!("graph entries for pair {{{i},{j}}} are asymmetric"),
                    ))
                }
            };
            if present {
                g.set_edge(i, j, true);
            }
        }
    }
    Ok(g)
}

/// Parses any of the four object kinds.
pub fn parse_any(text: &str) -> Result<ParsedObject> {
    let lines: Vec<&str> = text.lines().collect();
    let header_line = lines.first().copied().unwrap_or("");
    let header = parse_header(header_line)?;
    let k = header.order;
    let rows = parse_matrix(&lines, k)?;
    match (header.kind, header.palette) {
        (Kind::Tournament, None) => {
            reject_trailing(&lines, k + 1)?;
            Ok(ParsedObject::Tournament(tournament_from_matrix(&rows, k)?))
        }
        (Kind::Graph, None) => {
            reject_trailing(&lines, k + 1)?;
            Ok(ParsedObject::Graph(graph_from_matrix(&rows, k)?))
        }
        (Kind::Tournament, Some(p)) => {
            let coloring = parse_colors_line(&lines, k, p)?;
            reject_trailing(&lines, k + 2)?;
            let t = tournament_from_matrix(&rows, k)?;
            Ok(ParsedObject::ColoredTournament(
                ColoredTournament::new(t, coloring).expect("lengths match by construction"),
            ))
        }
        (Kind::Graph, Some(p)) => {
            let coloring = parse_colors_line(&lines, k, p)?;
            reject_trailing(&lines, k + 2)?;
            let g = graph_from_matrix(&rows, k)?;
            Ok(ParsedObject::ColoredGraph(
                ColoredGraph::new(g, coloring).expect("lengths match by construction"),
            ))
        }
    }
}

/// Parses a plain tournament; rejects other kinds.
pub fn parse_tournament(text: &str) -> Result<Tournament> {
    match parse_any(text)? {
        ParsedObject::Tournament(t) => Ok(t),
        _ => Err(perr(1, 1, "expected a plain tournament")),
    }
}

/// Parses a plain graph; rejects other kinds.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match parse_any(text)? {
        ParsedObject::Graph(g) => Ok(g),
        _ => Err(perr(1, 1, "expected a plain graph")),
    }
}

/// Parses a colored tournament; rejects other kinds.
pub fn parse_colored_tournament(text: &str) -> Result<ColoredTournament> {
    match parse_any(text)? {
        ParsedObject::ColoredTournament(t) => Ok(t),
        _ => Err(perr(1, 1, "expected a colored tournament")),
    }
}

/// Parses a colored graph; rejects other kinds.
pub fn parse_colored_graph(text: &str) -> Result<ColoredGraph> {
    match parse_any(text)? {
        ParsedObject::ColoredGraph(g) => Ok(g),
        _ => Err(perr(1, 1, "expected a colored graph")),
    }
}

fn matrix_rows_tournament(t: &Tournament) -> String {
    let k = t.order();
    let mut out = String::new();
    for i in 1..=k {
        for j in 1..=k {
            out.push(if i == j {
                '-'
            } else if t.orients(i, j) {
                '1'
            } else {
                '0'
            });
        }
        out.push('\n');
    }
    out
}

fn matrix_rows_graph(g: &Graph) -> String {
    let k = g.order();
    let mut out = String::new();
    for i in 1..=k {
        for j in 1..=k {
            out.push(if i == j {
                '-'
            } else if g.adjacent(i, j) {
                '1'
            } else {
                '0'
            });
        }
        out.push('\n');
    }
    out
}

fn colors_line(c: &Coloring) -> String {
    let mut out = String::from("colors");
    for &col in c.colors() {
        out.push(' ');
        out.push_str(&col.to_string());
    }
    out.push('\n');
    out
}

/// Serializes a tournament in normalized form.
pub fn serialize_tournament(t: &Tournament) -> String {
    format!("tournament {}\n{}", t.order(), matrix_rows_tournament(t))
}

/// Serializes a graph in normalized form.
pub fn serialize_graph(g: &Graph) -> String {
    format!("graph {}\n{}", g.order(), matrix_rows_graph(g))
}

/// Serializes a colored tournament in normalized form.
pub fn serialize_colored_tournament(t: &ColoredTournament) -> String {
    format!(
        "tournament colored {} {}\n{}{}",
        t.order(),
        t.palette(),
        matrix_rows_tournament(t.tournament()),
        colors_line(t.coloring())
    )
}

/// Serializes a colored graph in normalized form.
pub fn serialize_colored_graph(g: &ColoredGraph) -> String {
    format!(
        "graph colored {} {}\n{}{}",
        g.order(),
        g.palette(),
        matrix_rows_graph(g.graph()),
        colors_line(g.coloring())
    )
}

/// Serializes any parsed object (normalized form).
pub fn serialize_any(obj: &ParsedObject) -> String {
    match obj {
        ParsedObject::Tournament(t) => serialize_tournament(t),
        ParsedObject::Graph(g) => serialize_graph(g),
        ParsedObject::ColoredTournament(t) => serialize_colored_tournament(t),
        ParsedObject::ColoredGraph(g) => serialize_colored_graph(g),
    }
}
