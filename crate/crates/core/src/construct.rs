//! Regular lattice patches and branched covers over them.
//!
//! A k-sheeted cover is built from k copies of a patch, each cut along the
//! same shortest path from the branch vertex to the boundary. Sheet `s`'s
//! end bank is glued to sheet `s + 1`'s start bank (indices mod k) and the k
//! copies of the branch vertex become one vertex of valence 6k. Away from
//! that vertex the cover is unbranched, so every other vertex keeps the
//! degree of its projection and the boundary word is the base word repeated
//! k times.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::eisenstein::Eisenstein;
use crate::mesh::{CombinatorialDisc, MeshError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error("invalid patch shape: {0}")]
    InvalidShape(String),
    #[error("branch vertex {0} lies on the boundary")]
    BranchOnBoundary(VertexId),
    #[error("no interior vertex at distance {0} from the nearest corner")]
    NotRealizable(usize),
    #[error("both branch distances are {0}")]
    EqualDistances(usize),
    #[error("a branched cover needs at least 2 sheets, got {0}")]
    TooFewSheets(usize),
}

/// Convex pieces of the unit triangular lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatchShape {
    /// Equilateral triangle with `s` edges per side.
    Triangle(u32),
    /// 60° rhombus with `s` edges per side.
    Rhombus(u32),
    /// Regular hexagon with `s` edges per side.
    Hexagon(u32),
    /// 60° parallelogram with sides `s1` (along 1) and `s2` (along ω).
    Parallelogram(u32, u32),
}

impl PatchShape {
    fn validate(&self) -> Result<(), ConstructError> {
        let ok = match *self {
            PatchShape::Triangle(s) | PatchShape::Rhombus(s) | PatchShape::Hexagon(s) => s >= 1,
            PatchShape::Parallelogram(a, b) => a >= 1 && b >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(ConstructError::InvalidShape(format!("{self} has a zero side")))
        }
    }

    fn contains(&self, i: i64, j: i64) -> bool {
        match *self {
            PatchShape::Triangle(s) => i >= 0 && j >= 0 && i + j <= s as i64,
            PatchShape::Rhombus(s) => (0..=s as i64).contains(&i) && (0..=s as i64).contains(&j),
            PatchShape::Parallelogram(a, b) => {
                (0..=a as i64).contains(&i) && (0..=b as i64).contains(&j)
            }
            PatchShape::Hexagon(s) => i.abs().max(j.abs()).max((i + j).abs()) <= s as i64,
        }
    }

    fn extent(&self) -> i64 {
        match *self {
            PatchShape::Triangle(s) | PatchShape::Rhombus(s) | PatchShape::Hexagon(s) => s as i64,
            PatchShape::Parallelogram(a, b) => a.max(b) as i64,
        }
    }
}

impl fmt::Display for PatchShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PatchShape::Triangle(s) => write!(f, "triangle:{s}"),
            PatchShape::Rhombus(s) => write!(f, "rhombus:{s}"),
            PatchShape::Hexagon(s) => write!(f, "hexagon:{s}"),
            PatchShape::Parallelogram(a, b) => write!(f, "parallelogram:{a}x{b}"),
        }
    }
}

impl FromStr for PatchShape {
    type Err = ConstructError;

    /// `triangle:3`, `rhombus:4`, `hexagon:2`, `parallelogram:2x4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ConstructError::InvalidShape(s.to_string());
        let (kind, size) = s.split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let shape = match kind.trim() {
            "triangle" => PatchShape::Triangle(num(size)?),
            "rhombus" => PatchShape::Rhombus(num(size)?),
            "hexagon" => PatchShape::Hexagon(num(size)?),
            "parallelogram" => {
                let (a, b) = size.split_once('x').ok_or_else(bad)?;
                PatchShape::Parallelogram(num(a)?, num(b)?)
            }
            _ => return Err(bad()),
        };
        shape.validate()?;
        Ok(shape)
    }
}

/// Lattice positions of the patch vertices, in vertex-id order (row-major:
/// by `b`, then by `a`).
pub fn patch_coordinates(shape: PatchShape) -> Vec<Eisenstein> {
    let r = shape.extent();
    let mut pts = Vec::new();
    for j in -r..=r {
        for i in -r..=r {
            if shape.contains(i, j) {
                pts.push(Eisenstein::new(i, j));
            }
        }
    }
    pts
}

pub fn generate_patch(shape: PatchShape) -> Result<CombinatorialDisc, ConstructError> {
    shape.validate()?;
    let pts = patch_coordinates(shape);
    let id = |i: i64, j: i64| pts.binary_search_by_key(&(j, i), |p| (p.b, p.a)).ok();
    let r = shape.extent();
    let mut faces = Vec::new();
    for (j, i) in (-r - 1..=r).flat_map(|j| (-r - 1..=r).map(move |i| (j, i))) {
        if let (Some(a), Some(b), Some(c)) = (id(i, j), id(i + 1, j), id(i, j + 1)) {
            faces.push([a, b, c]);
        }
        if let (Some(a), Some(b), Some(c)) = (id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)) {
            faces.push([a, b, c]);
        }
    }
    Ok(CombinatorialDisc::from_triangles(&faces)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchSelector {
    Vertex(VertexId),
    /// The smallest-id interior vertex at this distance from its nearest
    /// corner.
    CornerDistance(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverSpec {
    pub base: PatchShape,
    pub branch: BranchSelector,
    pub sheets: usize,
}

#[derive(Debug, Clone)]
pub struct Cover {
    pub disc: CombinatorialDisc,
    /// The branch vertex of the cover (always id 0).
    pub branch: VertexId,
    /// The branch vertex in the base.
    pub base_branch: VertexId,
    /// Cover vertex → base vertex.
    pub projection: Vec<VertexId>,
    pub sheets: usize,
    /// Base path along which the sheets were cut.
    pub cut_path: Vec<VertexId>,
}

/// Distance from `v` to the nearest degree-2 boundary vertex.
pub fn corner_distance(disc: &CombinatorialDisc, v: VertexId) -> Option<usize> {
    let dist = disc.distances_from(v);
    disc.corners().into_iter().map(|c| dist[c]).min()
}

pub fn select_branch(
    base: &CombinatorialDisc,
    selector: BranchSelector,
) -> Result<VertexId, ConstructError> {
    match selector {
        BranchSelector::Vertex(v) => {
            base.check_vertex(v)?;
            if base.is_interior(v) {
                Ok(v)
            } else {
                Err(ConstructError::BranchOnBoundary(v))
            }
        }
        BranchSelector::CornerDistance(d) => base
            .interior_vertices()
            .find(|&v| corner_distance(base, v) == Some(d))
            .ok_or(ConstructError::NotRealizable(d)),
    }
}

pub fn branched_cover(spec: &CoverSpec) -> Result<Cover, ConstructError> {
    let base = generate_patch(spec.base)?;
    let v = select_branch(&base, spec.branch)?;
    branched_cover_of(&base, v, spec.sheets)
}

/// Branched cover of `base` with `sheets` sheets around interior vertex
/// `branch`.
pub fn branched_cover_of(
    base: &CombinatorialDisc,
    branch: VertexId,
    sheets: usize,
) -> Result<Cover, ConstructError> {
    if sheets < 2 {
        return Err(ConstructError::TooFewSheets(sheets));
    }
    let branch = select_branch(base, BranchSelector::Vertex(branch))?;
    let path = base.shortest_path_to_boundary(branch)?;
    let left = base.left_faces_along(&path);

    let n = base.num_vertices();
    let rank = |x: VertexId| if x < branch { x } else { x - 1 };
    let lift = |s: usize, x: VertexId| {
        if x == branch {
            0
        } else {
            1 + s * (n - 1) + rank(x)
        }
    };

    // For each face, which corners sit on the start bank of the cut.
    let mut on_left = vec![[false; 3]; base.num_faces()];
    for (i, fs) in left.iter().enumerate() {
        for &f in fs {
            let k = base.faces()[f].iter().position(|&x| x == path[i + 1]).unwrap();
            on_left[f][k] = true;
        }
    }

    let mut faces = Vec::with_capacity(sheets * base.num_faces());
    for s in 0..sheets {
        let prev = (s + sheets - 1) % sheets;
        for (f, tri) in base.faces().iter().enumerate() {
            let mut lifted = [0; 3];
            for k in 0..3 {
                let sheet = if on_left[f][k] { prev } else { s };
                lifted[k] = lift(sheet, tri[k]);
            }
            faces.push(lifted);
        }
    }
    let disc = CombinatorialDisc::from_triangles(&faces)?;

    let mut projection = vec![0; disc.num_vertices()];
    for s in 0..sheets {
        for x in 0..n {
            projection[lift(s, x)] = x;
        }
    }
    Ok(Cover {
        disc,
        branch: 0,
        base_branch: branch,
        projection,
        sheets,
        cut_path: path,
    })
}

/// Two covers of the same patch, branched at vertices whose distances to
/// the nearest corner are `d1` and `d2`. Both have the same boundary word
/// and irregular valence `6k`; the corner distance of the branch vertex is
/// an isomorphism invariant, so they are not isomorphic.
pub fn counterexample_pair(
    base: PatchShape,
    d1: usize,
    d2: usize,
    sheets: usize,
) -> Result<(Cover, Cover), ConstructError> {
    if d1 == d2 {
        return Err(ConstructError::EqualDistances(d1));
    }
    let disc = generate_patch(base)?;
    let v1 = select_branch(&disc, BranchSelector::CornerDistance(d1))?;
    let v2 = select_branch(&disc, BranchSelector::CornerDistance(d2))?;
    Ok((
        branched_cover_of(&disc, v1, sheets)?,
        branched_cover_of(&disc, v2, sheets)?,
    ))
}
