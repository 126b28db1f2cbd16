//! Plain-text graph format: a header line `n m`, then `m` lines `i j` with
//! `1 <= i < j <= n`.

use super::Graph;
use crate::error::{Error, Result};
use std::str::FromStr;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line_no, format!("{what} {tok:?} is not a nonnegative integer")))
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if it.next().is_some() {
        return Err(parse_err(line_no, "trailing tokens"));
    }
    Ok((a, b))
}

impl Graph {
    /// Serialises in the text format; edges appear in lexicographic order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (i, j) in &self.edges {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }

    /// Parses the text format. Blank lines are ignored; errors carry the
    /// 1-based line number.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
        let (n, m) = two_numbers(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        let mut last = hline;
        for (line_no, line) in lines.by_ref().take(m) {
            last = line_no;
            let (i, j) = two_numbers(line_no, line)?;
            if !(1 <= i && i < j && j <= n) {
                return Err(parse_err(line_no, format!("edge {i} {j} must satisfy 1 <= i < j <= {n}")));
            }
            edges.push((i, j));
        }
        if edges.len() != m {
            return Err(parse_err(last + 1, format!("expected {m} edges, found {}", edges.len())));
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(parse_err(line_no, "more edge lines than announced"));
        }
        let mut seen = std::collections::HashSet::new();
        for (k, &(i, j)) in edges.iter().enumerate() {
            if !seen.insert((i, j)) {
                return Err(parse_err(hline + k + 1, format!("duplicate edge {i} {j}")));
            }
        }
        Graph::new(n, edges).map_err(|e| parse_err(hline, e.to_string()))
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::from_text(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_header_then_sorted_edges() {
        let g = Graph::cycle(3).unwrap();
        assert_eq!(g.to_text(), "3 3\n1 2\n1 3\n2 3\n");
        assert_eq!(Graph::from_text(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn reports_line_numbers() {
        match Graph::from_text("3 2\n1 2\n7 7\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        match Graph::from_text("3 2\n1 2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        match Graph::from_text("3 1\n2 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        match Graph::from_text("3 2\n1 2\n1 2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(Graph::from_text("x y\n").is_err());
        assert!(Graph::from_text("").is_err());
    }
}
