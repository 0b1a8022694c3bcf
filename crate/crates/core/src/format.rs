//! The `.tri` text format.
//!
//! ```text
//! tri 1
//! t 0 1 2
//! t 0 2 3
//! ```
//!
//! The header line is mandatory, then one counterclockwise face per line.
//! Blank lines and lines starting with `#` are ignored. The serializer
//! writes faces in canonical order, so serialize → parse → serialize is
//! byte-identical.

use std::fmt::Write;

use crate::mesh::{CombinatorialDisc, MeshError};

pub const HEADER: &str = "tri 1";

pub fn parse_tri(text: &str) -> Result<CombinatorialDisc, MeshError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, HEADER)) => {}
        Some((line, other)) => {
            return Err(MeshError::Parse {
                line,
                message: format!("expected header `{HEADER}`, found `{other}`"),
            })
        }
        None => {
            return Err(MeshError::Parse {
                line: 1,
                message: "missing header".into(),
            })
        }
    }

    let mut faces = Vec::new();
    for (line, l) in lines {
        let mut parts = l.split_whitespace();
        if parts.next() != Some("t") {
            return Err(MeshError::Parse {
                line,
                message: format!("expected `t <a> <b> <c>`, found `{l}`"),
            });
        }
        let ids: Vec<usize> = parts
            .map(|p| p.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|e| MeshError::Parse {
                line,
                message: format!("bad vertex id: {e}"),
            })?;
        if ids.len() != 3 {
            return Err(MeshError::Parse {
                line,
                message: format!("face has {} vertices", ids.len()),
            });
        }
        faces.push([ids[0], ids[1], ids[2]]);
    }
    CombinatorialDisc::from_triangles(&faces)
}

pub fn to_tri(disc: &CombinatorialDisc) -> String {
    let mut out = String::with_capacity(16 * disc.num_faces() + 8);
    out.push_str(HEADER);
    out.push('\n');
    for f in disc.faces() {
        writeln!(out, "t {} {} {}", f[0], f[1], f[2]).unwrap();
    }
    out
}
