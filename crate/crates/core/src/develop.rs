//! Cutting a disc open at its cone point and unfolding it onto the
//! triangular lattice.
//!
//! Cutting along an edge path γ from the irregular vertex `v0` to the
//! boundary turns every path vertex after `v0` into two boundary vertices,
//! one per bank of the cut. The result has no interior cone point, so it
//! unfolds isometrically into the plane, and with unit edges every vertex
//! lands on an Eisenstein integer.
//!
//! Going counterclockwise around `v0` in the cut disc one meets the *start*
//! bank first and the *end* bank last. The end bank is the start bank turned
//! about the image of `v0` by the cone angle, so with `p1`, `p2` the images
//! of the cut endpoint on the start and end banks,
//!
//! ```text
//! p2 − v0 = ω^n · (p1 − v0)
//! ```
//!
//! which recovers `v0` from `p1`, `p2` and `n` unless `n` is a multiple of 6.

use std::collections::VecDeque;

use thiserror::Error;

use crate::eisenstein::Eisenstein;
use crate::mesh::{CombinatorialDisc, MeshError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DevelopError {
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error("disc has no irregular interior vertex")]
    NoIrregularVertex,
    #[error("vertex {0} is not the irregular vertex")]
    NotIrregular(VertexId),
    #[error("invalid cut path: {0}")]
    InvalidPath(String),
    #[error("vertex {vertex} placed at both {first} and {second}")]
    PropagationConflict {
        vertex: VertexId,
        first: Eisenstein,
        second: Eisenstein,
    },
    #[error("cut endpoints coincide although n = {0} is not a multiple of 6")]
    DegenerateCut(i64),
    #[error("holonomy rotation {found} does not match n = {n}")]
    HolonomyMismatch { found: u8, n: i64 },
    #[error("development has no cut")]
    Uncut,
    #[error("isosceles apex is not a lattice point")]
    NonLatticeApex,
}

/// The two banks of a cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seam {
    /// The cone vertex; same id in the base and in the cut surface.
    pub cone: VertexId,
    /// Cut path in base ids, cone first.
    pub path: Vec<VertexId>,
    /// Cut-surface ids of `path[1..]` on the bank met first when turning
    /// counterclockwise around the cone.
    pub start_bank: Vec<VertexId>,
    /// Cut-surface ids of `path[1..]` on the other bank. These keep their
    /// base ids.
    pub end_bank: Vec<VertexId>,
}

#[derive(Debug, Clone)]
pub struct CutDisc {
    base: CombinatorialDisc,
    surface: CombinatorialDisc,
    origin: Vec<VertexId>,
    seam: Option<Seam>,
}

impl CutDisc {
    /// A regular disc needs no cut; it develops as it is.
    pub fn uncut(disc: &CombinatorialDisc) -> Self {
        CutDisc {
            base: disc.clone(),
            surface: disc.clone(),
            origin: (0..disc.num_vertices()).collect(),
            seam: None,
        }
    }

    /// Cuts `disc` along `path`, which must run from an interior vertex
    /// through interior vertices to one boundary vertex.
    pub fn along_path(disc: &CombinatorialDisc, path: &[VertexId]) -> Result<Self, DevelopError> {
        disc.check_cut_path(path).map_err(DevelopError::InvalidPath)?;
        let n = disc.num_vertices();
        let left = disc.left_faces_along(path);

        let mut faces: Vec<[usize; 3]> = disc.faces().to_vec();
        for (i, fs) in left.iter().enumerate() {
            let v = path[i + 1];
            for &f in fs {
                for slot in faces[f].iter_mut() {
                    if *slot == v {
                        *slot = n + i;
                    }
                }
            }
        }
        let surface = CombinatorialDisc::from_triangles(&faces)?;

        let mut origin: Vec<VertexId> = (0..n).collect();
        origin.extend_from_slice(&path[1..]);
        let seam = Seam {
            cone: path[0],
            path: path.to_vec(),
            start_bank: (n..n + path.len() - 1).collect(),
            end_bank: path[1..].to_vec(),
        };
        Ok(CutDisc {
            base: disc.clone(),
            surface,
            origin,
            seam: Some(seam),
        })
    }

    pub fn base(&self) -> &CombinatorialDisc {
        &self.base
    }

    /// The cut-open disc.
    pub fn surface(&self) -> &CombinatorialDisc {
        &self.surface
    }

    /// Base vertex a cut-surface vertex comes from.
    pub fn origin(&self, v: VertexId) -> VertexId {
        self.origin[v]
    }

    pub fn seam(&self) -> Option<&Seam> {
        self.seam.as_ref()
    }

    /// Glues the two banks back together.
    pub fn reglue(&self) -> Result<CombinatorialDisc, MeshError> {
        let faces: Vec<[usize; 3]> = self
            .surface
            .faces()
            .iter()
            .map(|f| [self.origin[f[0]], self.origin[f[1]], self.origin[f[2]]])
            .collect();
        CombinatorialDisc::from_triangles_with_start(&faces, self.base.boundary_start())
    }
}

/// Cuts along the shortest path from the irregular vertex `v0` to the
/// boundary (smallest-id neighbour at every step).
pub fn cut_along_shortest_path(
    disc: &CombinatorialDisc,
    v0: VertexId,
) -> Result<CutDisc, DevelopError> {
    disc.check_vertex(v0)?;
    match disc.classify_type()?.irregular_vertex() {
        None => Err(DevelopError::NoIrregularVertex),
        Some(v) if v != v0 => Err(DevelopError::NotIrregular(v0)),
        Some(_) => {
            let path = disc.shortest_path_to_boundary(v0)?;
            CutDisc::along_path(disc, &path)
        }
    }
}

/// Vertex positions of a developed cut disc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Development {
    /// Position of every cut-surface vertex.
    pub coords: Vec<Eisenstein>,
    /// Cut-surface faces, counterclockwise.
    pub faces: Vec<[VertexId; 3]>,
    /// The first face placed, at `0`, `1`, `ω`.
    pub seed: [VertexId; 3],
    pub cone: Option<VertexId>,
    /// Cut-surface ids of the cut endpoint on the start and end banks.
    pub cut_ends: Option<(VertexId, VertexId)>,
    /// Rotation taking the start bank to the end bank, in 60° steps.
    pub holonomy: u8,
}

impl Development {
    /// Images `p1`, `p2` of the cut endpoint.
    pub fn cut_points(&self) -> Option<(Eisenstein, Eisenstein)> {
        self.cut_ends.map(|(a, b)| (self.coords[a], self.coords[b]))
    }

    pub fn cone_image(&self) -> Option<Eisenstein> {
        self.cone.map(|v| self.coords[v])
    }

    /// Every edge has squared length 1.
    pub fn edges_are_unit(&self) -> bool {
        self.faces.iter().all(|f| {
            (0..3).all(|i| (self.coords[f[(i + 1) % 3]] - self.coords[f[i]]).norm() == 1)
        })
    }

    /// Every face is laid down counterclockwise, so neighbouring faces lie
    /// on opposite sides of their shared edge.
    pub fn faces_are_positive(&self) -> bool {
        self.faces.iter().all(|f| {
            let [a, b, c] = f.map(|v| self.coords[v]);
            (b - a).det(c - a) == 1
        })
    }
}

/// Unfolds a cut disc face by face, breadth first from the seed face.
///
/// The seed is the face holding the outgoing boundary dart of the boundary
/// start vertex; that dart is laid from `0` to `1`.
pub fn develop(cut: &CutDisc) -> Result<Development, DevelopError> {
    let s = cut.surface();
    let d0 = s.out_darts(s.boundary_start())[0];
    let seed = [s.dart_origin(d0), s.dart_target(d0), s.dart_origin(s.prev_in_face(d0))];

    let mut coords: Vec<Option<Eisenstein>> = vec![None; s.num_vertices()];
    coords[seed[0]] = Some(Eisenstein::ZERO);
    coords[seed[1]] = Some(Eisenstein::ONE);
    coords[seed[2]] = Some(Eisenstein::OMEGA);

    let mut placed = vec![false; s.num_faces()];
    placed[s.dart_face(d0)] = true;
    let mut queue = VecDeque::from([s.dart_face(d0)]);
    while let Some(f) = queue.pop_front() {
        for d in 3 * f..3 * f + 3 {
            let Some(t) = s.twin(d) else { continue };
            let g = s.dart_face(t);
            if placed[g] {
                continue;
            }
            placed[g] = true;
            let u = coords[s.dart_origin(t)].unwrap();
            let v = coords[s.dart_target(t)].unwrap();
            let w = s.dart_origin(s.prev_in_face(t));
            let pos = u + (v - u) * Eisenstein::OMEGA;
            match coords[w] {
                Some(prev) if prev != pos => {
                    return Err(DevelopError::PropagationConflict {
                        vertex: w,
                        first: prev,
                        second: pos,
                    })
                }
                _ => coords[w] = Some(pos),
            }
            queue.push_back(g);
        }
    }
    let coords: Vec<Eisenstein> = coords.into_iter().map(Option::unwrap).collect();

    // A face whose corners were all placed before the face itself is only
    // checked here.
    for f in s.faces() {
        let [a, b, c] = f.map(|v| coords[v]);
        if c != a + (b - a) * Eisenstein::OMEGA || (b - a).norm() != 1 {
            return Err(DevelopError::PropagationConflict {
                vertex: f[2],
                first: c,
                second: a + (b - a) * Eisenstein::OMEGA,
            });
        }
    }

    let (cone, cut_ends, holonomy) = match cut.seam() {
        None => (None, None, 0),
        Some(seam) => {
            let o = coords[seam.cone];
            let ea = coords[seam.start_bank[0]] - o;
            let eb = coords[seam.end_bank[0]] - o;
            let h = (0..6).find(|&k| ea.rotate(k) == eb).unwrap() as u8;
            (
                Some(seam.cone),
                Some((*seam.start_bank.last().unwrap(), *seam.end_bank.last().unwrap())),
                h,
            )
        }
    };

    Ok(Development {
        coords,
        faces: s.faces().to_vec(),
        seed,
        cone,
        cut_ends,
        holonomy,
    })
}

/// Rotation class of the cone holonomy, in 60° steps.
pub fn holonomy_rotation(dev: &Development) -> u8 {
    dev.holonomy
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Localization {
    Apex(Eisenstein),
    /// Cone angle a multiple of 2π: the banks coincide and every point is a
    /// (degenerate) apex.
    Degenerate,
}

/// The point `m` with `p2 − m = ω^k (p1 − m)`, if it is a lattice point.
pub fn isosceles_apex(p1: Eisenstein, p2: Eisenstein, k: i64) -> Option<Eisenstein> {
    let rot = Eisenstein::omega_pow(k);
    (p2 - p1 * rot).checked_div(Eisenstein::ONE - rot)
}

/// Both apexes of an isosceles triangle on base `p1 p2` with apex angle
/// `k·π/3`: one on each side of the base.
pub fn isosceles_candidates(p1: Eisenstein, p2: Eisenstein, k: i64) -> [Option<Eisenstein>; 2] {
    [isosceles_apex(p1, p2, k), isosceles_apex(p1, p2, -k)]
}

/// Recovers the image of the cone vertex from the cut endpoint images alone.
///
/// Of the two isosceles candidates the one reached by turning the start bank
/// counterclockwise onto the end bank is returned, which is the side the
/// development puts the cut sector on.
pub fn locate_singularity(dev: &Development, n: i64) -> Result<Localization, DevelopError> {
    if n.rem_euclid(6) == 0 {
        return Ok(Localization::Degenerate);
    }
    let (p1, p2) = dev.cut_points().ok_or(DevelopError::Uncut)?;
    if p1 == p2 {
        return Err(DevelopError::DegenerateCut(n));
    }
    if dev.holonomy as i64 != n.rem_euclid(6) {
        return Err(DevelopError::HolonomyMismatch { found: dev.holonomy, n });
    }
    isosceles_apex(p1, p2, n)
        .map(Localization::Apex)
        .ok_or(DevelopError::NonLatticeApex)
}

/// Unfolds a boundary word on its own: start at `0` heading along `1` and
/// turn left by `4 − deg` wedges at every vertex after an edge.
///
/// Returns the `q + 1` visited points and the final heading. A regular disc
/// closes up: last point `0`, heading `1`.
pub fn boundary_walk(word: &[usize]) -> (Vec<Eisenstein>, Eisenstein) {
    let mut pos = Eisenstein::ZERO;
    let mut dir = Eisenstein::ONE;
    let mut points = vec![pos];
    for i in 1..=word.len() {
        pos += dir;
        points.push(pos);
        dir = dir.rotate(4 - word[i % word.len()] as i64);
    }
    (points, dir)
}
