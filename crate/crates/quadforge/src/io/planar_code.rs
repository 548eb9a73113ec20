//! The planar_code binary format used by plantri and friends.
//!
//! A file is the ASCII header `>>planar_code<<` followed by records: one
//! byte with the vertex count, then for each vertex its neighbours in
//! rotation order as 1-based bytes, each list terminated by a zero byte.
//! The format identifies edges by their endpoints, so only simple maps can
//! be written or read without ambiguity.

use crate::error::{Error, Result};
use crate::map::{is_simple, EmbeddedMap};

const HEADER: &[u8] = b">>planar_code<<";

pub fn write_planar_code(maps: &[EmbeddedMap]) -> Result<Vec<u8>> {
    let mut out = HEADER.to_vec();
    for map in maps {
        if !is_simple(map) {
            return Err(Error::NotSimple);
        }
        if map.vertex_count() > u8::MAX as usize {
            return Err(Error::Parse {
                line: 0,
                msg: "planar_code records hold at most 255 vertices".into(),
            });
        }
        out.push(map.vertex_count() as u8);
        for v in map.vertices() {
            for neighbour in map.neighbours(v) {
                out.push(neighbour as u8 + 1);
            }
            out.push(0);
        }
    }
    Ok(out)
}

pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<EmbeddedMap>> {
    let parse_err = |msg: &str| Error::Parse {
        line: 0,
        msg: msg.into(),
    };
    let body = bytes
        .strip_prefix(HEADER)
        .ok_or_else(|| parse_err("missing >>planar_code<< header"))?;
    let mut maps = Vec::new();
    let mut rest = body;
    while let Some((&count, mut tail)) = rest.split_first() {
        let n = count as usize;
        if n == 0 {
            return Err(parse_err("record with zero vertices"));
        }
        let mut rotations = Vec::with_capacity(n);
        for _ in 0..n {
            let end = tail
                .iter()
                .position(|&b| b == 0)
                .ok_or_else(|| parse_err("unterminated neighbour list"))?;
            let rotation: Vec<usize> = tail[..end].iter().map(|&b| b as usize - 1).collect();
            if rotation.iter().any(|&w| w >= n) {
                return Err(parse_err("neighbour out of range"));
            }
            rotations.push(rotation);
            tail = &tail[end + 1..];
        }
        maps.push(EmbeddedMap::from_rotations(&rotations)?);
        rest = tail;
    }
    Ok(maps)
}
