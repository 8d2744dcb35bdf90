//! graph6 (short form) and plain edge-list text formats.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable in short-form graph6.
pub const MAX_GRAPH6_ORDER: usize = 62;

fn graph6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Parses one short-form graph6 line. Surrounding whitespace is ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim().as_bytes();
    let (&head, body) = bytes.split_first().ok_or_else(|| graph6_err("empty line"))?;
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(graph6_err(format!("byte {b} outside the printable range 63..=126")));
    }
    if head == 126 {
        return Err(graph6_err("long-form orders (n > 62) are not supported"));
    }
    let n = (head - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(graph6_err(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(graph6_err("padding bits are not zero"));
    }
    let mut k = 0;
    Ok(Graph::from_fn(n, |_, _| {
        // from_fn visits (0,1), (0,2), (1,2), ... which is graph6 order
        let b = bit(k);
        k += 1;
        b
    }))
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_GRAPH6_ORDER,
        });
    }
    let mut out = vec![n as u8 + 63];
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                (acc, filled) = (0, 0);
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses `"n m"` followed by `m` lines `"i j"` (0-based). Blank lines are
/// skipped; line numbers in errors are 1-based.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let bad = |line: usize, msg: &str| Error::EdgeList {
        line,
        msg: msg.to_string(),
    };
    let pair = |line: usize, text: &str| -> Result<(usize, usize)> {
        let mut it = text.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(bad(line, "expected two non-negative integers")),
        }
    };
    let (line, header) = lines.next().ok_or_else(|| bad(1, "missing header \"n m\""))?;
    let (n, m) = pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines.by_ref().take(m) {
        let (i, j) = pair(line, text)?;
        for index in [i, j] {
            if index >= n {
                return Err(bad(line, &format!("vertex {index} out of range for order {n}")));
            }
        }
        if i == j {
            return Err(bad(line, &format!("self-loop at vertex {i}")));
        }
        edges.push((i, j));
    }
    if edges.len() != m {
        return Err(bad(line, &format!("header announces {m} edges, found {}", edges.len())));
    }
    if let Some((line, _)) = lines.next() {
        return Err(bad(line, "more edges than announced"));
    }
    Graph::from_edges(n, &edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_examples() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph6("B?").unwrap(), Graph::empty(3));
        assert_eq!(emit_graph6(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(emit_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(emit_graph6(&Graph::empty(3)).unwrap(), "B?");
        assert_eq!(emit_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn graph6_rejections() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("A").is_err());
        assert!(parse_graph6("A_?").is_err());
        // K2 has one data bit; '`' sets a padding bit
        assert!(parse_graph6("A`").is_err());
        assert!(parse_graph6("A\u{7f}").is_err());
        assert!(parse_graph6("~?@?").is_err());
        assert!(emit_graph6(&Graph::empty(63)).is_err());
    }

    #[test]
    fn graph6_round_trip_p4() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let line = emit_graph6(&p4).unwrap();
        assert_eq!(line, "Ch");
        assert_eq!(parse_graph6(&line).unwrap(), p4);
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("2 1\n0 1").unwrap(), Graph::complete(2));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(parse_edge_list("4 3\n0 1\n1 2\n2 3").unwrap(), p4);
        assert_eq!(parse_edge_list("3 0").unwrap(), Graph::empty(3));
        assert_eq!(parse_edge_list(&emit_edge_list(&p4)).unwrap(), p4);
    }

    #[test]
    fn edge_list_errors() {
        for bad in ["", "2", "2 1", "2 1\n0 2", "2 1\n1 1", "2 1\n0 x", "2 1\n0 1\n0 1"] {
            assert!(parse_edge_list(bad).is_err(), "{bad:?}");
        }
        assert_eq!(
            parse_edge_list("3 1\n\n0 5").unwrap_err(),
            Error::EdgeList {
                line: 3,
                msg: "vertex 5 out of range for order 3".into()
            }
        );
    }
}
