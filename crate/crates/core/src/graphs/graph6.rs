use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        position,
        message: message.into(),
    }
}

/// Encodes `g` in graph6: a size prefix followed by the upper triangle,
/// column by column, packed six bits per printable byte.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes one graph6 string. Trailing `\n`/`\r` and the optional
/// `>>graph6<<` header are accepted; anything else after the data is not.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (offset, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if body.is_empty() {
        return Err(err(offset, "empty input"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(offset + i, format!("byte 0x{b:02x} outside the graph6 range")));
        }
    }
    let (n, data_start) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else {
        if body.get(1) == Some(&126) {
            return Err(err(offset + 1, "eight-byte size form exceeds the 64-vertex capacity"));
        }
        if body.len() < 4 {
            return Err(err(offset + body.len(), "truncated size header"));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 63 {
            return Err(err(offset, format!("non-canonical size header for n = {n}")));
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(err(
            offset,
            format!("graph on {n} vertices exceeds capacity {MAX_VERTICES}"),
        ));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &body[data_start..];
    if data.len() < need {
        return Err(err(
            offset + body.len(),
            format!("expected {need} data bytes for n = {n}, found {}", data.len()),
        ));
    }
    if data.len() > need {
        return Err(err(offset + data_start + need, "trailing characters after graph data"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[need - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(offset + data_start + need - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parses a graph6 file: one graph per line, blank lines and lines starting
/// with `#` skipped. Errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let word = line.split_whitespace().next().unwrap_or("");
        let g = parse_graph6(word).map_err(|e| match e {
            Error::Graph6 { position, message } => Error::Graph6 {
                position,
                message: format!("line {}: {message}", lineno + 1),
            },
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}
