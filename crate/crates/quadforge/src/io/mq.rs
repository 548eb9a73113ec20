//! The native text format.
//!
//! One record is a header line `MQ1 <vertices> <edges>` (with a trailing `C`
//! when colours are present) followed by one line per vertex: an optional
//! `S` or `U` colour token, then the vertex's darts in clockwise order
//! starting at its smallest dart. Lines appear in order of that smallest
//! dart, which matches the library's vertex numbering, so vertex ids
//! round-trip. Blank lines and lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::map::{Colour, Colouring, EmbeddedMap};

pub fn write_mq(map: &EmbeddedMap, colouring: Option<&Colouring>) -> String {
    let mut out = format!(
        "MQ1 {} {}{}\n",
        map.vertex_count(),
        map.edge_count(),
        if colouring.is_some() { " C" } else { "" }
    );
    for v in map.vertices() {
        let mut line = String::new();
        if let Some(chi) = colouring {
            line.push(chi.colour(v).letter());
        }
        for d in map.rotation(v) {
            if !line.is_empty() {
                line.push(' ');
            }
            line.push_str(&d.to_string());
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Read one record and insist on a valid multiquadrangulation.
pub fn read_mq(text: &str) -> Result<(EmbeddedMap, Option<Colouring>)> {
    let (map, colouring) = read_mq_any(text)?;
    map.ensure_quadrangulation()?;
    Ok((map, colouring))
}

/// Read one record, checking only that it describes some embedded map.
/// Inputs that are deliberately not quadrangulations (polyhedral skeletons,
/// the one-edge map) come through here.
pub fn read_mq_any(text: &str) -> Result<(EmbeddedMap, Option<Colouring>)> {
    let lines: Vec<(usize, &str)> = meaningful_lines(text).collect();
    let mut pos = 0;
    let record = parse_record(&lines, &mut pos)?;
    if pos < lines.len() {
        return Err(Error::Parse {
            line: lines[pos].0,
            msg: "trailing content after the record".into(),
        });
    }
    Ok(record)
}

/// Read every record in the text, insisting each is a valid
/// multiquadrangulation.
pub fn read_mq_stream(text: &str) -> Result<Vec<(EmbeddedMap, Option<Colouring>)>> {
    let lines: Vec<(usize, &str)> = meaningful_lines(text).collect();
    let mut pos = 0;
    let mut out = Vec::new();
    while pos < lines.len() {
        let (map, colouring) = parse_record(&lines, &mut pos)?;
        map.ensure_quadrangulation()?;
        out.push((map, colouring));
    }
    Ok(out)
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_record(
    lines: &[(usize, &str)],
    pos: &mut usize,
) -> Result<(EmbeddedMap, Option<Colouring>)> {
    let err = |line: usize, msg: &str| Error::Parse {
        line,
        msg: msg.into(),
    };
    let &(header_no, header) = lines.get(*pos).ok_or_else(|| err(0, "empty input"))?;
    *pos += 1;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("MQ1") {
        return Err(err(header_no, "expected header starting with MQ1"));
    }
    let n: usize = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(header_no, "expected a vertex count"))?;
    let m: usize = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(header_no, "expected an edge count"))?;
    let coloured = match tokens.next() {
        None => false,
        Some("C") => true,
        Some(other) => {
            return Err(err(header_no, &format!("unexpected header token {other:?}")));
        }
    };
    if tokens.next().is_some() {
        return Err(err(header_no, "too many header tokens"));
    }
    if n == 0 || m == 0 {
        return Err(err(header_no, "vertex and edge counts must be positive"));
    }

    let dart_count = 2 * m;
    let mut sigma = vec![usize::MAX; dart_count];
    let mut colours = Vec::with_capacity(n);
    let mut previous_first: Option<usize> = None;
    for _ in 0..n {
        let &(line_no, line) = lines
            .get(*pos)
            .ok_or_else(|| err(header_no, "fewer vertex lines than the header promises"))?;
        *pos += 1;
        let mut tokens = line.split_whitespace().peekable();
        if coloured {
            let colour = match tokens.next() {
                Some("S") => Colour::Stable,
                Some("U") => Colour::Unstable,
                _ => return Err(err(line_no, "expected a colour token S or U")),
            };
            colours.push(colour);
        } else if matches!(tokens.peek(), Some(&"S") | Some(&"U")) {
            return Err(err(line_no, "colour token on a record not marked C"));
        }
        let darts: Vec<usize> = tokens
            .map(|t| {
                t.parse()
                    .map_err(|_| err(line_no, &format!("bad dart {t:?}")))
            })
            .collect::<Result<_>>()?;
        if darts.is_empty() {
            return Err(err(line_no, "vertex line lists no darts"));
        }
        if darts.iter().any(|&d| d >= dart_count) {
            return Err(err(line_no, "dart out of range for the edge count"));
        }
        if darts[0] != *darts.iter().min().unwrap() {
            return Err(err(line_no, "rotation must start at its smallest dart"));
        }
        if previous_first.is_some_and(|prev| prev >= darts[0]) {
            return Err(err(line_no, "vertex lines must be ordered by smallest dart"));
        }
        previous_first = Some(darts[0]);
        for (i, &d) in darts.iter().enumerate() {
            if sigma[d] != usize::MAX {
                return Err(err(line_no, &format!("dart {d} listed twice")));
            }
            sigma[d] = darts[(i + 1) % darts.len()];
        }
    }
    if let Some(missing) = sigma.iter().position(|&s| s == usize::MAX) {
        return Err(err(header_no, &format!("dart {missing} is never listed")));
    }
    let map = EmbeddedMap::from_sigma(sigma)?;
    let colouring = if coloured {
        let chi = Colouring::new(colours);
        if !chi.is_proper(&map) {
            return Err(Error::ImproperColouring);
        }
        Some(chi)
    } else {
        None
    };
    Ok((map, colouring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::{p2, q3, q4};

    #[test]
    fn round_trip_preserves_every_dart() {
        for map in [p2(), q3(), q4()] {
            let text = write_mq(&map, None);
            let (back, colouring) = read_mq(&text).unwrap();
            assert_eq!(back, map);
            assert!(colouring.is_none());
        }
    }

    #[test]
    fn round_trip_preserves_colours() {
        let map = q4();
        let (chi, _) = Colouring::bipartitions(&map).unwrap();
        let text = write_mq(&map, Some(&chi));
        let (back, colouring) = read_mq(&text).unwrap();
        assert_eq!(back, map);
        assert_eq!(colouring.unwrap(), chi);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = format!("# a comment\n\n{}\n# trailing\n", write_mq(&p2(), None));
        assert!(read_mq(&text).is_ok());
    }

    #[test]
    fn streams_hold_multiple_records() {
        let text = format!("{}\n{}", write_mq(&p2(), None), write_mq(&q3(), None));
        let records = read_mq_stream(&text).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].0, p2());
        assert_eq!(records[1].0, q3());
    }

    #[test]
    fn strict_reading_rejects_non_quadrangulations() {
        // A triangle: three vertices, three edges, two triangular faces.
        let triangle = "MQ1 3 3\n0 2\n1 4\n3 5\n";
        assert!(read_mq(triangle).is_err());
        let (map, _) = read_mq_any(triangle).unwrap();
        assert_eq!(map.vertex_count(), 3);
        assert_eq!(map.face_count(), 2);
    }

    #[test]
    fn malformed_records_name_the_offending_line() {
        let bad = [
            ("MQ2 3 2\n", "header"),
            ("MQ1 3 2\n0 2\n1 3\n", "fewer"),
            ("MQ1 2 2\n0 1 0 2\n3\n", "twice"),
            ("MQ1 3 2\n0 2\n3\n1\n", "ordered"),
            ("MQ1 3 2\n2 0\n1\n3\n", "smallest"),
            ("MQ1 3 2\n0 9\n1\n3\n", "range"),
        ];
        for (text, needle) in bad {
            let msg = read_mq_any(text).unwrap_err().to_string();
            assert!(msg.contains(needle), "{text:?} gave {msg:?}");
        }
    }

    #[test]
    fn improper_colours_are_rejected() {
        let map = p2();
        let all_stable = Colouring::new(vec![Colour::Stable; 3]);
        let text = write_mq(&map, Some(&all_stable));
        assert!(matches!(read_mq(&text), Err(Error::ImproperColouring)));
    }
}
