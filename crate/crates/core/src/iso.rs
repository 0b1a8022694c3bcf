//! Canonical codes of rooted oriented discs.
//!
//! Rooting a disc at a boundary vertex fixes everything: the vertex's
//! outgoing boundary dart gives a direction, and a breadth-first walk that
//! lists each vertex's neighbours counterclockwise (starting from the
//! boundary successor for boundary vertices and from the discovering
//! neighbour for interior ones) labels every vertex canonically. The
//! sequence of `(interior?, degree, neighbour labels…)` records is the code
//! of that root. Two discs are isomorphic with roots matched exactly when
//! these codes agree, and the code of a disc under a [`IsoMode`] is the
//! minimum over the roots the mode allows.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::mesh::{CombinatorialDisc, MeshError, VertexId};

/// Which homeomorphisms count as equivalences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsoMode {
    /// Orientation preserving, marked boundary start mapped to marked start.
    FixStart,
    /// Orientation preserving, any boundary rotation.
    RotateStart,
    /// Any boundary rotation, reflections allowed.
    AllowReflection,
}

impl IsoMode {
    pub const ALL: [IsoMode; 3] = [IsoMode::FixStart, IsoMode::RotateStart, IsoMode::AllowReflection];
}

impl fmt::Display for IsoMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsoMode::FixStart => "fix-start",
            IsoMode::RotateStart => "rotate-start",
            IsoMode::AllowReflection => "allow-reflection",
        })
    }
}

impl FromStr for IsoMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fix-start" => Ok(IsoMode::FixStart),
            "rotate-start" => Ok(IsoMode::RotateStart),
            "allow-reflection" => Ok(IsoMode::AllowReflection),
            _ => Err(format!(
                "unknown mode `{s}` (expected fix-start, rotate-start or allow-reflection)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub mode: IsoMode,
    pub words: Vec<u32>,
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.mode)?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

struct Traversal {
    code: Vec<u32>,
    /// Vertex → canonical label.
    labels: Vec<u32>,
}

fn traverse(disc: &CombinatorialDisc, root: VertexId) -> Traversal {
    const UNSEEN: u32 = u32::MAX;
    let n = disc.num_vertices();
    let mut labels = vec![UNSEEN; n];
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut code = Vec::with_capacity(n * 8);

    labels[root] = 0;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let w = order[head];
        head += 1;
        let mut ns = disc.neighbors(w);
        if disc.is_interior(w) {
            let k = ns.iter().position(|&u| u == parent[w]).unwrap();
            ns.rotate_left(k);
        }
        code.push(disc.is_interior(w) as u32);
        code.push(ns.len() as u32);
        for u in ns {
            if labels[u] == UNSEEN {
                labels[u] = order.len() as u32;
                parent[u] = w;
                order.push(u);
            }
            code.push(labels[u]);
        }
    }
    Traversal { code, labels }
}

/// Best root under `mode`: (code, mirrored?, root).
fn best_root(disc: &CombinatorialDisc, mode: IsoMode) -> (Vec<u32>, bool, VertexId) {
    let mut best: Option<(Vec<u32>, bool, VertexId)> = None;
    let mut consider = |d: &CombinatorialDisc, mirrored: bool, roots: &[VertexId]| {
        for &r in roots {
            let t = traverse(d, r);
            if best.as_ref().is_none_or(|b| t.code < b.0) {
                best = Some((t.code, mirrored, r));
            }
        }
    };
    match mode {
        IsoMode::FixStart => consider(disc, false, &[disc.boundary_start()]),
        IsoMode::RotateStart => consider(disc, false, disc.boundary_cycle()),
        IsoMode::AllowReflection => {
            consider(disc, false, disc.boundary_cycle());
            let m = disc.mirrored();
            consider(&m, true, m.boundary_cycle());
        }
    }
    best.unwrap()
}

pub fn canonical_code(disc: &CombinatorialDisc, mode: IsoMode) -> CanonicalCode {
    CanonicalCode {
        mode,
        words: best_root(disc, mode).0,
    }
}

/// An explicit isomorphism: vertex `v` of the first disc maps to `map[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub map: Vec<VertexId>,
    /// The map reverses orientation.
    pub reflected: bool,
}

impl Isomorphism {
    /// Checks the witness directly: a bijection preserving interior flags
    /// and degrees whose neighbour rotations agree at every vertex
    /// (reversed when `reflected`), respecting the marked start when `mode`
    /// requires it.
    pub fn verify(&self, d1: &CombinatorialDisc, d2: &CombinatorialDisc, mode: IsoMode) -> bool {
        let n = d1.num_vertices();
        if n != d2.num_vertices() || self.map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in &self.map {
            if m >= n || hit[m] {
                return false;
            }
            hit[m] = true;
        }
        if self.reflected && mode != IsoMode::AllowReflection {
            return false;
        }
        if mode == IsoMode::FixStart && self.map[d1.boundary_start()] != d2.boundary_start() {
            return false;
        }
        (0..n).all(|v| {
            let w = self.map[v];
            if d1.is_interior(v) != d2.is_interior(w) || d1.degree(v) != d2.degree(w) {
                return false;
            }
            let mut image: Vec<VertexId> = d1.neighbors(v).iter().map(|&u| self.map[u]).collect();
            if self.reflected {
                image.reverse();
            }
            let target = d2.neighbors(w);
            if d1.is_interior(v) {
                (0..target.len()).any(|k| {
                    target.iter().cycle().skip(k).take(target.len()).eq(image.iter())
                })
            } else {
                image == target
            }
        })
    }
}

/// Decides equivalence under `mode`; on success returns a witness.
pub fn is_isomorphic(
    d1: &CombinatorialDisc,
    d2: &CombinatorialDisc,
    mode: IsoMode,
) -> Option<Isomorphism> {
    if d1.num_vertices() != d2.num_vertices() || d1.num_faces() != d2.num_faces() {
        return None;
    }
    let (c1, m1, r1) = best_root(d1, mode);
    let (c2, m2, r2) = best_root(d2, mode);
    if c1 != c2 {
        return None;
    }
    let t1 = if m1 { traverse(&d1.mirrored(), r1) } else { traverse(d1, r1) };
    let t2 = if m2 { traverse(&d2.mirrored(), r2) } else { traverse(d2, r2) };
    let mut by_label = vec![0; d2.num_vertices()];
    for (v, &l) in t2.labels.iter().enumerate() {
        by_label[l as usize] = v;
    }
    Some(Isomorphism {
        map: t1.labels.iter().map(|&l| by_label[l as usize]).collect(),
        reflected: m1 != m2,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error("disc has no irregular interior vertex")]
    NotIrregular,
    #[error("disc has no corner")]
    NoCorners,
}

/// Smallest edge distance from the irregular vertex to a corner (a
/// boundary vertex of degree 2). Preserved by every isomorphism.
pub fn distance_invariant(disc: &CombinatorialDisc) -> Result<usize, InvariantError> {
    let v = disc
        .classify_type()?
        .irregular_vertex()
        .ok_or(InvariantError::NotIrregular)?;
    let dist = disc.distances_from(v);
    disc.corners()
        .into_iter()
        .map(|c| dist[c])
        .min()
        .ok_or(InvariantError::NoCorners)
}
