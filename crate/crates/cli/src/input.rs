//! Command-line inputs: a path to a file in one of the text formats, or an
//! inline spec.
//!
//! Digraphs: `transitive:N`, `circulant:N`, `u5`, `delta:K`, `paley7`,
//! `complete:N` (every pair bidirectional), `turan:N:R`.
//! Matrices: `m1`, `m2`, `identity:K`, `zeros:R:C`, `rows:101/011`.
//! Orderings: `identity:N` or 1-based ids separated by commas or spaces.
//! Ordered graphs: `path:N`, `empty:N`, `edges:N:1-2,3-4`.

use std::path::Path;

use tourpat_core::embed::turan_blowup;
use tourpat_core::reduce::figure1_matrices;
use tourpat_core::{
    io, BinaryMatrix, Error, Result, SemiCompleteDigraph, Tournament, UndirectedOrderedGraph,
    VertexOrdering,
};

fn read_file(spec: &str) -> Option<Result<String>> {
    let path = Path::new(spec);
    if !path.is_file() {
        return None;
    }
    Some(
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {spec}: {e}"))),
    )
}

fn split(spec: &str) -> (&str, Vec<&str>) {
    let mut parts = spec.split(':');
    let head = parts.next().unwrap_or("");
    (head, parts.collect())
}

fn number(spec: &str, args: &[&str], idx: usize) -> Result<usize> {
    let raw = args
        .get(idx)
        .ok_or_else(|| Error::InvalidInput(format!("`{spec}` is missing argument {}", idx + 1)))?;
    raw.parse().map_err(|_| {
        Error::InvalidInput(format!("`{raw}` in `{spec}` is not a non-negative integer"))
    })
}

fn unknown(kind: &str, spec: &str) -> Error {
    Error::InvalidInput(format!(
        "`{spec}` is neither a readable file nor a known inline {kind}"
    ))
}

fn paley7() -> Tournament {
    // i beats i + d for the quadratic residues d in {1, 2, 4} mod 7
    Tournament::from_fn(7, |i, j| matches!((j + 7 - i) % 7, 1 | 2 | 4))
}

pub fn tournament(spec: &str) -> Result<Tournament> {
    if let Some(text) = read_file(spec) {
        return io::parse_tournament(&text?);
    }
    let (head, args) = split(spec);
    match head {
        "transitive" => Tournament::transitive(number(spec, &args, 0)?),
        "circulant" => Tournament::circulant(number(spec, &args, 0)?),
        "u5" => Ok(Tournament::u5()),
        "delta" => Tournament::delta(number(spec, &args, 0)?),
        "paley7" => Ok(paley7()),
        _ => Err(unknown("tournament", spec)),
    }
}

pub fn semi_complete(spec: &str) -> Result<SemiCompleteDigraph> {
    if let Some(text) = read_file(spec) {
        return io::parse_semi_complete(&text?);
    }
    let (head, args) = split(spec);
    match head {
        "complete" => Ok(SemiCompleteDigraph::complete(number(spec, &args, 0)?)),
        "turan" => turan_blowup(number(spec, &args, 0)?, number(spec, &args, 1)?),
        _ => tournament(spec).map(|t| SemiCompleteDigraph::from(&t)),
    }
}

pub fn matrix(spec: &str) -> Result<BinaryMatrix> {
    if let Some(text) = read_file(spec) {
        return io::parse_matrix(&text?);
    }
    let (head, args) = split(spec);
    match head {
        "m1" => Ok(figure1_matrices().0),
        "m2" => Ok(figure1_matrices().1),
        "identity" => Ok(BinaryMatrix::identity(number(spec, &args, 0)?)),
        "zeros" => Ok(BinaryMatrix::zeros(
            number(spec, &args, 0)?,
            number(spec, &args, 1)?,
        )),
        "rows" => {
            let rows: Vec<&str> = args
                .first()
                .map(|r| r.split('/').collect())
                .unwrap_or_default();
            BinaryMatrix::from_rows(&rows)
        }
        _ => Err(unknown("matrix", spec)),
    }
}

pub fn ordering(spec: &str) -> Result<VertexOrdering> {
    if let Some(text) = read_file(spec) {
        return io::parse_ordering(&text?);
    }
    let (head, args) = split(spec);
    if head == "identity" {
        return Ok(VertexOrdering::identity(number(spec, &args, 0)?));
    }
    io::parse_ordering(&spec.replace(',', " "))
}

pub fn ordered_graph(spec: &str) -> Result<UndirectedOrderedGraph> {
    if let Some(text) = read_file(spec) {
        return io::parse_ordered_graph(&text?);
    }
    let (head, args) = split(spec);
    match head {
        "empty" => Ok(UndirectedOrderedGraph::new(number(spec, &args, 0)?)),
        "path" => {
            let n = number(spec, &args, 0)?;
            let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
            UndirectedOrderedGraph::from_edges(n, &edges)
        }
        "edges" => {
            let n = number(spec, &args, 0)?;
            let mut edges = Vec::new();
            for e in args
                .get(1)
                .map(|s| s.split(','))
                .into_iter()
                .flatten()
                .filter(|s| !s.is_empty())
            {
                let (u, v) = e.split_once('-').ok_or_else(|| {
                    Error::InvalidInput(format!("edge `{e}` is not of the form u-v"))
                })?;
                let parse = |x: &str| -> Result<usize> {
                    match x.parse::<usize>() {
                        Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                        _ => Err(Error::InvalidInput(format!("vertex `{x}` outside 1..{n}"))),
                    }
                };
                edges.push((parse(u)?, parse(v)?));
            }
            UndirectedOrderedGraph::from_edges(n, &edges)
        }
        _ => Err(unknown("ordered graph", spec)),
    }
}

/// Vertex lists like `1,2;3,4`, converted to 0-based.
pub fn vertex_sets(spec: &str) -> Result<Vec<Vec<usize>>> {
    spec.split(';')
        .map(|part| {
            part.split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| match s.trim().parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(Error::InvalidInput(format!(
                        "`{s}` is not a 1-based vertex id"
                    ))),
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use tourpat_core::Digraph;

    #[test]
    fn inline_specs() {
        assert_eq!(
            tournament("circulant:5").unwrap(),
            Tournament::circulant(5).unwrap()
        );
        assert!(paley7().is_regular());
        assert_eq!(
            semi_complete("complete:4").unwrap().bidirectional_count(),
            6
        );
        assert_eq!(matrix("rows:10/01").unwrap(), BinaryMatrix::identity(2));
        assert_eq!(ordering("2,1,3").unwrap().as_slice(), &[1, 0, 2]);
        assert_eq!(ordered_graph("edges:4:1-2,3-4").unwrap().edge_count(), 2);
        assert_eq!(vertex_sets("1,2;3").unwrap(), vec![vec![0, 1], vec![2]]);
        assert!(tournament("nonsense:3").is_err());
        assert!(ordered_graph("edges:3:1-5").is_err());
        assert_eq!(semi_complete("u5").unwrap().order(), 5);
    }
}
