//! Plain-text formats. Vertices, rows and columns are 1-based in text and
//! 0-based in memory.
//!
//! * digraph: line 1 is `n`, then `n` lines of `n` characters over `{0,1}`;
//!   entry `(i, j)` is 1 iff the arc `i -> j` is present.
//! * matrix: line 1 is `R C`, then `R` lines of `C` characters over `{0,1}`.
//! * ordering: one line of `n` space-separated vertex ids.
//! * ordered graph: line 1 is `n m`, then `m` lines `u v`.
//!
//! Blank lines and lines starting with `#` are skipped everywhere.

use crate::digraph::{Digraph, SemiCompleteDigraph, Tournament};
use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
use crate::ordering::{UndirectedOrderedGraph, VertexOrdering};

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
}

struct Lines<'a, I: Iterator<Item = (usize, &'a str)>> {
    inner: I,
    last_line: usize,
}

impl<'a, I: Iterator<Item = (usize, &'a str)>> Lines<'a, I> {
    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((no, l)) => {
                self.last_line = no;
                Ok((no, l))
            }
            None => Err(Error::parse(
                self.last_line + 1,
                1,
                format!("expected {what}, found end of input"),
            )),
        }
    }

    fn finish(mut self) -> Result<()> {
        match self.inner.next() {
            Some((no, _)) => Err(Error::parse(no, 1, "unexpected trailing content")),
            None => Ok(()),
        }
    }
}

fn lines(text: &str) -> Lines<'_, impl Iterator<Item = (usize, &str)>> {
    Lines {
        inner: content_lines(text),
        last_line: 0,
    }
}

/// Parses whitespace-separated unsigned integers, reporting the column of a bad token.
fn integers(line_no: usize, line: &str, expected: usize, what: &str) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(expected);
    let mut col = 1;
    for token in line.split(' ') {
        if !token.is_empty() {
            let trimmed = token.trim();
            let value = trimmed.parse::<usize>().map_err(|_| {
                Error::parse(
                    line_no,
                    col,
                    format!("expected a non-negative integer, found {trimmed:?}"),
                )
            })?;
            out.push(value);
        }
        col += token.len() + 1;
    }
    if out.len() != expected {
        return Err(Error::parse(
            line_no,
            1,
            format!(
                "expected {expected} integer(s) for {what}, found {}",
                out.len()
            ),
        ));
    }
    Ok(out)
}

fn bit_rows<'a, I: Iterator<Item = (usize, &'a str)>>(
    it: &mut Lines<'a, I>,
    rows: usize,
    cols: usize,
) -> Result<Vec<Vec<bool>>> {
    let mut out = Vec::with_capacity(rows);
    for r in 0..rows {
        let (no, line) = it.next(&format!("row {}", r + 1))?;
        let line = line.trim();
        let mut row = Vec::with_capacity(cols);
        for (c, ch) in line.chars().enumerate() {
            match ch {
                '0' => row.push(false),
                '1' => row.push(true),
                _ => {
                    return Err(Error::parse(
                        no,
                        c + 1,
                        format!("expected 0 or 1, found {ch:?}"),
                    ))
                }
            }
        }
        if row.len() != cols {
            return Err(Error::parse(
                no,
                row.len().min(cols) + 1,
                format!("row {} has {} entries, expected {cols}", r + 1, row.len()),
            ));
        }
        out.push(row);
    }
    Ok(out)
}

fn adjacency(text: &str) -> Result<(Vec<Vec<bool>>, Vec<usize>)> {
    let mut it = lines(text);
    let (no, line) = it.next("vertex count")?;
    let n = integers(no, line, 1, "vertex count")?[0];
    let start = it.last_line;
    let rows = bit_rows(&mut it, n, n)?;
    it.finish()?;
    // recover line numbers of the n rows for diagnostics
    let row_lines: Vec<usize> = content_lines(text)
        .map(|(no, _)| no)
        .filter(|&no| no > start)
        .take(n)
        .collect();
    for (i, row) in rows.iter().enumerate() {
        if row[i] {
            return Err(Error::parse(
                row_lines[i],
                i + 1,
                "diagonal entry must be 0",
            ));
        }
    }
    Ok((rows, row_lines))
}

pub fn parse_tournament(text: &str) -> Result<Tournament> {
    let (rows, row_lines) = adjacency(text)?;
    let n = rows.len();
    for i in 0..n {
        for j in i + 1..n {
            if rows[i][j] == rows[j][i] {
                return Err(Error::parse(
                    row_lines[j],
                    i + 1,
                    format!(
                        "entries ({}, {}) and ({}, {}) must sum to 1 in a tournament",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    ),
                ));
            }
        }
    }
    Ok(Tournament::from_fn(n, |i, j| rows[i][j]))
}

pub fn parse_semi_complete(text: &str) -> Result<SemiCompleteDigraph> {
    let (rows, row_lines) = adjacency(text)?;
    let n = rows.len();
    for i in 0..n {
        for j in i + 1..n {
            if !rows[i][j] && !rows[j][i] {
                return Err(Error::parse(
                    row_lines[j],
                    i + 1,
                    format!(
                        "entries ({}, {}) and ({}, {}) must sum to at least 1",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    ),
                ));
            }
        }
    }
    SemiCompleteDigraph::from_arcs(n, |i, j| rows[i][j])
}

pub fn write_digraph<D: Digraph + ?Sized>(g: &D) -> String {
    let n = g.order();
    let mut s = format!("{n}\n");
    for i in 0..n {
        for j in 0..n {
            s.push(if g.has_arc(i, j) { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

pub fn parse_matrix(text: &str) -> Result<BinaryMatrix> {
    let mut it = lines(text);
    let (no, line) = it.next("matrix dimensions")?;
    let dims = integers(no, line, 2, "matrix dimensions")?;
    let rows = bit_rows(&mut it, dims[0], dims[1])?;
    it.finish()?;
    Ok(BinaryMatrix::from_fn(dims[0], dims[1], |r, c| rows[r][c]))
}

pub fn write_matrix(m: &BinaryMatrix) -> String {
    let mut s = format!("{} {}\n", m.rows(), m.cols());
    for row in m.to_rows() {
        s.push_str(&row);
        s.push('\n');
    }
    s
}

pub fn parse_ordering(text: &str) -> Result<VertexOrdering> {
    let mut it = lines(text);
    let (no, line) = it.next("ordering")?;
    let count = line.split_whitespace().count();
    let ids = integers(no, line, count, "ordering")?;
    it.finish()?;
    let n = ids.len();
    let mut perm = Vec::with_capacity(n);
    for (k, &id) in ids.iter().enumerate() {
        if id == 0 || id > n {
            return Err(Error::parse(
                no,
                1,
                format!("vertex id {id} at entry {} outside 1..{n}", k + 1),
            ));
        }
        perm.push(id - 1);
    }
    VertexOrdering::new(perm).map_err(|e| Error::parse(no, 1, e.to_string()))
}

pub fn write_ordering(o: &VertexOrdering) -> String {
    let ids: Vec<String> = o.as_slice().iter().map(|v| (v + 1).to_string()).collect();
    format!("{}\n", ids.join(" "))
}

pub fn parse_ordered_graph(text: &str) -> Result<UndirectedOrderedGraph> {
    let mut it = lines(text);
    let (no, line) = it.next("graph header")?;
    let header = integers(no, line, 2, "graph header `n m`")?;
    let (n, m) = (header[0], header[1]);
    let mut g = UndirectedOrderedGraph::new(n);
    for e in 0..m {
        let (no, line) = it.next(&format!("edge {}", e + 1))?;
        let uv = integers(no, line, 2, "edge")?;
        if uv[0] == 0 || uv[1] == 0 || uv[0] > n || uv[1] > n || uv[0] == uv[1] {
            return Err(Error::parse(
                no,
                1,
                format!(
                    "edge {} {} needs distinct endpoints in 1..{n}",
                    uv[0], uv[1]
                ),
            ));
        }
        if !g.add_edge(uv[0] - 1, uv[1] - 1)? {
            return Err(Error::parse(
                no,
                1,
                format!("duplicate edge {} {}", uv[0], uv[1]),
            ));
        }
    }
    it.finish()?;
    Ok(g)
}

pub fn write_ordered_graph(g: &UndirectedOrderedGraph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tournament_round_trip() {
        let c5 = Tournament::circulant(5).unwrap();
        let text = write_digraph(&c5);
        assert_eq!(parse_tournament(&text).unwrap(), c5);
    }

    #[test]
    fn tournament_diagnostics() {
        let err = parse_tournament("3\n011\n001\n010\n").unwrap_err();
        assert_eq!(
            err,
            Error::parse(
                4,
                2,
                "entries (2, 3) and (3, 2) must sum to 1 in a tournament"
            )
        );
        let err = parse_tournament("2\n11\n00\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                line: 2,
                column: 1,
                ..
            }
        ));
        let err = parse_tournament("2\n01\n0x\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                line: 3,
                column: 2,
                ..
            }
        ));
        let err = parse_tournament("3\n011\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = parse_tournament("two\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                line: 1,
                column: 1,
                ..
            }
        ));
    }

    #[test]
    fn comments_and_blank_lines() {
        let t = parse_tournament("# C_3\n3\n\n010\n001\n100\n\n").unwrap();
        assert_eq!(t, Tournament::circulant(3).unwrap());
    }

    #[test]
    fn semi_complete_round_trip() {
        let g = SemiCompleteDigraph::complete(4);
        assert_eq!(parse_semi_complete(&write_digraph(&g)).unwrap(), g);
        assert!(parse_semi_complete("2\n00\n00\n").is_err());
    }

    #[test]
    fn matrix_and_ordering() {
        let m = BinaryMatrix::from_rows(&["110", "001"]).unwrap();
        assert_eq!(parse_matrix(&write_matrix(&m)).unwrap(), m);
        assert!(parse_matrix("2 2\n10\n").is_err());

        let o = VertexOrdering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(write_ordering(&o), "3 1 2\n");
        assert_eq!(parse_ordering("3 1 2").unwrap(), o);
        assert!(parse_ordering("1 1").is_err());
        assert!(parse_ordering("0 1").is_err());
    }

    #[test]
    fn ordered_graph_round_trip() {
        let g = UndirectedOrderedGraph::from_edges(4, &[(0, 3), (1, 2)]).unwrap();
        let s = write_ordered_graph(&g);
        assert_eq!(s, "4 2\n1 4\n2 3\n");
        assert_eq!(parse_ordered_graph(&s).unwrap(), g);
        assert!(parse_ordered_graph("3 1\n1 1\n").is_err());
        assert!(parse_ordered_graph("3 2\n1 2\n2 1\n").is_err());
    }
}
