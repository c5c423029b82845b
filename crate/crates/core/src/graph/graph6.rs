//! graph6 encoding (https://users.cecs.anu.edu.au/~bdm/data/formats.txt).
//!
//! Bytes are 6-bit groups offset by 63. The header is `n + 63` for
//! `n <= 62`, or `~` followed by three 6-bit groups for `63 <= n <= 258047`.
//! The body is the upper triangle in column order: `(0,1), (0,2), (1,2),
//! (0,3), ...`, zero-padded to a multiple of 6 bits.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let sextet = |i: usize| -> Result<u32> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u32),
            Some(&b) => Err(err(i, format!("byte 0x{b:02x} is outside the printable range 63..=126"))),
            None => Err(err(i, "truncated input")),
        }
    };

    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    let (n, body_start) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            return Err(err(1, "eight-byte headers encode more than 64 vertices"));
        }
        let n = (sextet(1)? << 12 | sextet(2)? << 6 | sextet(3)?) as usize;
        if n < 63 {
            return Err(err(0, format!("long header used for n = {n}")));
        }
        (n, 4)
    } else {
        (sextet(0)? as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(err(0, format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < body_start + nbytes {
        return Err(err(bytes.len(), format!("truncated bit section: expected {nbytes} body bytes")));
    }
    if bytes.len() > body_start + nbytes {
        return Err(err(body_start + nbytes, "trailing bytes after bit section"));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(body_start + k / 6)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = body_start + k / 6;
        let pad = sextet(last)? & ((1 << (6 - k % 6)) - 1);
        if pad != 0 {
            return Err(err(last, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
