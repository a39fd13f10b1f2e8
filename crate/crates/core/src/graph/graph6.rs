use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("byte {b:#04x} outside the printable graph6 range")));
    }
    let (n, body) = decode_order(bytes)?;
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if body.len() < bytes_needed {
        return Err(err(format!(
            "truncated bit field: {} bytes for {} vertices, need {}",
            body.len(),
            n,
            bytes_needed
        )));
    }
    if body.len() > bytes_needed {
        return Err(err("trailing bytes after the bit field"));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if (bits_needed..bytes_needed * 6).any(bit) {
        return Err(err("non-zero padding bits"));
    }
    Graph::from_edges(n, &edges)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let take = |count: usize, from: usize| -> Result<usize, GraphError> {
        let chunk = bytes.get(from..from + count).ok_or_else(|| err("truncated header"))?;
        Ok(chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.get(1) == Some(&126) {
        let n = take(6, 2)?;
        Ok((n, &bytes[8..]))
    } else {
        let n = take(3, 1)?;
        Ok((n, &bytes[4..]))
    }
}

/// Encodes a graph as a graph6 line (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
