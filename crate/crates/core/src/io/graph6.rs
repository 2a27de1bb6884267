//! The graph6 format: a size prefix `N(n)` followed by the upper triangle of
//! the adjacency matrix, column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ..`),
//! packed six bits per byte, most significant bit first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const MAX_N: u64 = (1 << 36) - 1;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(err(offset, format!("byte 0x{b:02x} outside 63..=126"))),
        None => Err(err(offset, "unexpected end of input")),
    }
}

/// Decodes `N(n)`; returns `n` and the offset of the first adjacency byte.
fn parse_size(bytes: &[u8]) -> Result<(u64, usize)> {
    let first = sextet(bytes, 0)?;
    if first != 63 {
        return Ok((first as u64, 1));
    }
    let (start, width) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    let mut n = 0u64;
    for k in 0..width {
        n = n << 6 | sextet(bytes, start + k)? as u64;
    }
    Ok((n, start + width))
}

fn adjacency_bytes(n: u64) -> u64 {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 record with no surrounding whitespace.
pub fn parse_graph6(line: &[u8]) -> Result<Graph> {
    let (n, start) = parse_size(line)?;
    let expected = adjacency_bytes(n);
    let actual = (line.len() - start) as u64;
    if actual < expected {
        return Err(err(line.len(), format!("expected {expected} adjacency bytes for n={n}, found {actual}")));
    }
    if actual > expected {
        return Err(err(start + expected as usize, "trailing bytes after adjacency data"));
    }
    let n = n as usize;
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let offset = start + bit / 6;
            let value = sextet(line, offset)?;
            if value >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    // Padding bits in the last byte must be zero.
    if bit % 6 != 0 {
        let offset = start + bit / 6;
        let value = sextet(line, offset)?;
        if value & ((1 << (6 - bit % 6)) - 1) != 0 {
            return Err(err(offset, "nonzero padding bits"));
        }
    }
    for offset in start..line.len() {
        sextet(line, offset)?;
    }
    Graph::new(n, &edges)
}

/// Encodes `g` in graph6.
pub fn write_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.vertex_count() as u64;
    if n > MAX_N {
        return Err(Error::Graph6TooLarge(g.vertex_count()));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        let width = if n <= 258_047 {
            out.push(126);
            3
        } else {
            out.extend_from_slice(&[126, 126]);
            6
        };
        for k in (0..width).rev() {
            out.push((n >> (6 * k) & 0x3f) as u8 + BIAS);
        }
    }
    let n = n as usize;
    let mut current = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            current = current << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(current + BIAS);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((current << (6 - filled)) + BIAS);
    }
    Ok(out)
}

/// [`write_graph6`] as a `String`; graph6 output is always ASCII.
pub fn graph6_string(g: &Graph) -> Result<String> {
    Ok(String::from_utf8(write_graph6(g)?).expect("graph6 bytes are ASCII"))
}
