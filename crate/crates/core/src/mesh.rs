//! Oriented combinatorial discs.
//!
//! A [`CombinatorialDisc`] is stored as a list of counterclockwise triangles.
//! Every triangle `f = [a, b, c]` owns three darts `3f`, `3f + 1`, `3f + 2`
//! running `a -> b`, `b -> c` and `c -> a`. Two darts on the same edge are
//! linked by the opposite involution ([`CombinatorialDisc::twin`]); a dart
//! without a twin lies on the boundary and has the outside of the disc on its
//! right. The counterclockwise rotation around a vertex is derived from these
//! two pieces of data: `rotate_ccw(d) = twin(prev_in_face(d))`.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

pub type VertexId = usize;
pub type DartId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeshError {
    #[error("empty face list")]
    Empty,
    #[error("face ({}, {}, {}) repeats a vertex", .0[0], .0[1], .0[2])]
    DegenerateFace([usize; 3]),
    #[error("edge {0}-{1} is not manifold")]
    NonManifoldEdge(usize, usize),
    #[error("edge {0}->{1} appears twice with the same direction")]
    InconsistentOrientation(usize, usize),
    #[error("faces do not form a connected surface")]
    NotConnected,
    #[error("not a disc: {0}")]
    NotADisc(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("several irregular interior vertices: {0:?}")]
    MultipleIrregular(Vec<VertexId>),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Degree data of a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexProfile {
    pub vertex: VertexId,
    pub degree: usize,
    pub interior: bool,
    /// Number of incident triangles. Equals `degree` for interior vertices
    /// and `degree - 1` on the boundary.
    pub triangles: usize,
}

/// Result of checking the "all interior vertices have valence 6 except one"
/// condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeClassification {
    Regular,
    Irregular { vertex: VertexId, valence: usize },
}

impl TypeClassification {
    pub fn irregular_vertex(&self) -> Option<VertexId> {
        match *self {
            TypeClassification::Regular => None,
            TypeClassification::Irregular { vertex, .. } => Some(vertex),
        }
    }

    /// Valence of the irregular vertex, or 6 for a regular disc.
    pub fn valence(&self) -> usize {
        match *self {
            TypeClassification::Regular => 6,
            TypeClassification::Irregular { valence, .. } => valence,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialDisc {
    faces: Vec<[VertexId; 3]>,
    twin: Vec<Option<DartId>>,
    /// Per vertex, the first outgoing dart in counterclockwise order. For a
    /// boundary vertex this is its outgoing boundary dart.
    first_dart: Vec<DartId>,
    degree: Vec<usize>,
    interior: Vec<bool>,
    boundary: Vec<VertexId>,
    edge_count: usize,
}

/// Rotates a triangle so that its smallest vertex comes first.
pub fn normalize_face(f: [usize; 3]) -> [usize; 3] {
    let i = (0..3).min_by_key(|&i| f[i]).unwrap();
    [f[i], f[(i + 1) % 3], f[(i + 2) % 3]]
}

impl CombinatorialDisc {
    /// Builds and validates a disc from counterclockwise triangles.
    ///
    /// Vertex ids are compacted to `0..V` preserving their order, faces are
    /// stored in canonical order and the boundary cycle starts at the lowest
    /// boundary id.
    pub fn from_triangles(triples: &[[usize; 3]]) -> Result<Self, MeshError> {
        Self::build(triples, None)
    }

    /// Like [`from_triangles`](Self::from_triangles) but marks `start` (an
    /// input id) as the distinguished boundary vertex.
    pub fn from_triangles_with_start(
        triples: &[[usize; 3]],
        start: usize,
    ) -> Result<Self, MeshError> {
        Self::build(triples, Some(start))
    }

    fn build(triples: &[[usize; 3]], start: Option<usize>) -> Result<Self, MeshError> {
        if triples.is_empty() {
            return Err(MeshError::Empty);
        }
        for t in triples {
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(MeshError::DegenerateFace(*t));
            }
        }

        let mut ids: Vec<usize> = triples.iter().flatten().copied().collect();
        ids.sort_unstable();
        ids.dedup();
        let compact = |v: usize| ids.binary_search(&v).unwrap();
        let start = match start {
            Some(s) => Some(ids.binary_search(&s).map_err(|_| MeshError::UnknownVertex(s))?),
            None => None,
        };

        let mut faces: Vec<[usize; 3]> = triples
            .iter()
            .map(|t| normalize_face([compact(t[0]), compact(t[1]), compact(t[2])]))
            .collect();
        faces.sort_unstable();
        for w in faces.windows(2) {
            if w[0] == w[1] {
                return Err(MeshError::NonManifoldEdge(ids[w[0][0]], ids[w[0][1]]));
            }
        }

        let mut undirected: HashMap<(usize, usize), usize> = HashMap::new();
        for f in &faces {
            for i in 0..3 {
                let (a, b) = (f[i], f[(i + 1) % 3]);
                *undirected.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        if let Some((&(a, b), _)) = undirected
            .iter()
            .filter(|(_, &c)| c > 2)
            .min_by_key(|(&k, _)| k)
        {
            return Err(MeshError::NonManifoldEdge(ids[a], ids[b]));
        }

        let mut directed: HashMap<(usize, usize), DartId> = HashMap::new();
        for (fi, f) in faces.iter().enumerate() {
            for i in 0..3 {
                let key = (f[i], f[(i + 1) % 3]);
                if directed.insert(key, 3 * fi + i).is_some() {
                    return Err(MeshError::InconsistentOrientation(ids[key.0], ids[key.1]));
                }
            }
        }

        let n_darts = 3 * faces.len();
        let mut twin = vec![None; n_darts];
        for (&(a, b), &d) in &directed {
            twin[d] = directed.get(&(b, a)).copied();
        }

        // Connectivity through shared edges.
        let mut seen = vec![false; faces.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(f) = queue.pop_front() {
            for t in twin[3 * f..3 * f + 3].iter().flatten() {
                if !seen[t / 3] {
                    seen[t / 3] = true;
                    queue.push_back(t / 3);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(MeshError::NotConnected);
        }

        let n_vertices = ids.len();
        let mut out: Vec<Vec<DartId>> = vec![Vec::new(); n_vertices];
        for d in 0..n_darts {
            out[faces[d / 3][d % 3]].push(d);
        }

        let mut disc = CombinatorialDisc {
            faces,
            twin,
            first_dart: vec![0; n_vertices],
            degree: vec![0; n_vertices],
            interior: vec![false; n_vertices],
            boundary: Vec::new(),
            edge_count: 0,
        };

        for v in 0..n_vertices {
            let boundary_out: Vec<DartId> =
                out[v].iter().copied().filter(|&d| disc.twin[d].is_none()).collect();
            match boundary_out.len() {
                0 => {
                    let first = out[v][0];
                    let mut d = first;
                    let mut count = 0;
                    loop {
                        count += 1;
                        d = match disc.rotate_ccw(d) {
                            Some(n) => n,
                            None => {
                                return Err(MeshError::NotADisc(format!(
                                    "vertex {} has a broken link",
                                    ids[v]
                                )))
                            }
                        };
                        if d == first {
                            break;
                        }
                    }
                    if count != out[v].len() {
                        return Err(MeshError::NotADisc(format!("vertex {} is pinched", ids[v])));
                    }
                    disc.first_dart[v] = first;
                    disc.interior[v] = true;
                    disc.degree[v] = count;
                }
                1 => {
                    let first = boundary_out[0];
                    let mut d = first;
                    let mut count = 1;
                    while let Some(n) = disc.rotate_ccw(d) {
                        d = n;
                        count += 1;
                        if count > out[v].len() {
                            break;
                        }
                    }
                    if count != out[v].len() {
                        return Err(MeshError::NotADisc(format!("vertex {} is pinched", ids[v])));
                    }
                    disc.first_dart[v] = first;
                    disc.degree[v] = count + 1;
                }
                _ => {
                    return Err(MeshError::NotADisc(format!(
                        "vertex {} is pinched",
                        ids[v]
                    )))
                }
            }
        }

        let boundary_count = disc.interior.iter().filter(|i| !**i).count();
        if boundary_count == 0 {
            return Err(MeshError::NotADisc("surface has no boundary".into()));
        }
        let start = match start {
            Some(s) if disc.interior[s] => {
                return Err(MeshError::NotADisc(format!(
                    "marked start {} is not on the boundary",
                    ids[s]
                )))
            }
            Some(s) => s,
            None => (0..n_vertices).find(|&v| !disc.interior[v]).unwrap(),
        };
        let mut v = start;
        loop {
            disc.boundary.push(v);
            v = disc.dart_target(disc.first_dart[v]);
            if v == start || disc.boundary.len() > boundary_count {
                break;
            }
        }
        if disc.boundary.len() != boundary_count {
            return Err(MeshError::NotADisc("more than one boundary component".into()));
        }

        let boundary_darts = disc.twin.iter().filter(|t| t.is_none()).count();
        disc.edge_count = (n_darts + boundary_darts) / 2;
        let euler =
            n_vertices as i64 - disc.edge_count as i64 + disc.faces.len() as i64;
        if euler != 1 {
            return Err(MeshError::NotADisc(format!("Euler characteristic {euler}")));
        }
        Ok(disc)
    }

    pub fn num_vertices(&self) -> usize {
        self.degree.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_count
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Faces in canonical order: each rotated to start at its smallest id,
    /// sorted lexicographically.
    pub fn faces(&self) -> &[[VertexId; 3]] {
        &self.faces
    }

    pub fn num_darts(&self) -> usize {
        self.twin.len()
    }

    pub fn dart_origin(&self, d: DartId) -> VertexId {
        self.faces[d / 3][d % 3]
    }

    pub fn dart_target(&self, d: DartId) -> VertexId {
        self.faces[d / 3][(d + 1) % 3]
    }

    pub fn dart_face(&self, d: DartId) -> usize {
        d / 3
    }

    pub fn next_in_face(&self, d: DartId) -> DartId {
        d - d % 3 + (d + 1) % 3
    }

    pub fn prev_in_face(&self, d: DartId) -> DartId {
        d - d % 3 + (d + 2) % 3
    }

    pub fn twin(&self, d: DartId) -> Option<DartId> {
        self.twin[d]
    }

    /// Next outgoing dart counterclockwise around the origin of `d`, or
    /// `None` when `d` is the last one before the boundary.
    pub fn rotate_ccw(&self, d: DartId) -> Option<DartId> {
        self.twin[self.prev_in_face(d)]
    }

    /// Next outgoing dart clockwise around the origin of `d`.
    pub fn rotate_cw(&self, d: DartId) -> Option<DartId> {
        self.twin[d].map(|t| self.next_in_face(t))
    }

    /// Outgoing darts of `v` in counterclockwise order. Boundary vertices
    /// start with their outgoing boundary dart.
    pub fn out_darts(&self, v: VertexId) -> Vec<DartId> {
        let first = self.first_dart[v];
        let mut darts = vec![first];
        let mut d = first;
        while let Some(n) = self.rotate_ccw(d) {
            if n == first {
                break;
            }
            darts.push(n);
            d = n;
        }
        darts
    }

    /// Neighbours of `v` in counterclockwise order. For a boundary vertex the
    /// list runs from its boundary successor to its boundary predecessor.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let darts = self.out_darts(v);
        let mut ns: Vec<VertexId> = darts.iter().map(|&d| self.dart_target(d)).collect();
        if !self.interior[v] {
            let last = *darts.last().unwrap();
            ns.push(self.dart_origin(self.prev_in_face(last)));
        }
        ns
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.degree[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    pub fn is_interior(&self, v: VertexId) -> bool {
        self.interior[v]
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.num_vertices()).filter(|&v| self.interior[v])
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), MeshError> {
        if v < self.num_vertices() {
            Ok(())
        } else {
            Err(MeshError::UnknownVertex(v))
        }
    }

    pub fn profile(&self, v: VertexId) -> Result<VertexProfile, MeshError> {
        self.check_vertex(v)?;
        let degree = self.degree[v];
        let interior = self.interior[v];
        Ok(VertexProfile {
            vertex: v,
            degree,
            interior,
            triangles: if interior { degree } else { degree - 1 },
        })
    }

    /// Boundary vertices in counterclockwise order from the marked start.
    pub fn boundary_cycle(&self) -> &[VertexId] {
        &self.boundary
    }

    pub fn boundary_start(&self) -> VertexId {
        self.boundary[0]
    }

    /// Degrees of the boundary vertices read along the boundary cycle.
    pub fn boundary_word(&self) -> Vec<usize> {
        self.boundary.iter().map(|&v| self.degree[v]).collect()
    }

    /// Boundary vertices of degree 2, in boundary order.
    pub fn corners(&self) -> Vec<VertexId> {
        self.boundary
            .iter()
            .copied()
            .filter(|&v| self.degree[v] == 2)
            .collect()
    }

    pub fn classify_type(&self) -> Result<TypeClassification, MeshError> {
        let odd: Vec<VertexId> = self
            .interior_vertices()
            .filter(|&v| self.degree[v] != 6)
            .collect();
        match odd.as_slice() {
            [] => Ok(TypeClassification::Regular),
            [v] => Ok(TypeClassification::Irregular {
                vertex: *v,
                valence: self.degree[*v],
            }),
            _ => Err(MeshError::MultipleIrregular(odd)),
        }
    }

    /// Breadth-first edge distances from `source` to every vertex.
    pub fn distances_from(&self, source: VertexId) -> Vec<usize> {
        self.bfs(&[source])
    }

    /// Edge distance from every vertex to the nearest boundary vertex.
    pub fn distances_to_boundary(&self) -> Vec<usize> {
        self.bfs(&self.boundary)
    }

    fn bfs(&self, sources: &[VertexId]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.num_vertices()];
        let mut queue = VecDeque::new();
        for &s in sources {
            dist[s] = 0;
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn graph_distance(&self, a: VertexId, b: VertexId) -> Result<usize, MeshError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        Ok(self.distances_from(a)[b])
    }

    /// Shortest edge path from `v` to the boundary. At every step the
    /// smallest-id neighbour one step closer to the boundary is taken.
    pub fn shortest_path_to_boundary(&self, v: VertexId) -> Result<Vec<VertexId>, MeshError> {
        self.check_vertex(v)?;
        let dist = self.distances_to_boundary();
        let mut path = vec![v];
        let mut cur = v;
        while dist[cur] > 0 {
            cur = self
                .neighbors(cur)
                .into_iter()
                .filter(|&u| dist[u] + 1 == dist[cur])
                .min()
                .unwrap();
            path.push(cur);
        }
        Ok(path)
    }

    /// Every shortest edge path from `v` to the boundary, in lexicographic
    /// order.
    pub fn all_shortest_paths_to_boundary(
        &self,
        v: VertexId,
    ) -> Result<Vec<Vec<VertexId>>, MeshError> {
        self.check_vertex(v)?;
        let dist = self.distances_to_boundary();
        let mut paths = Vec::new();
        let mut stack = vec![vec![v]];
        while let Some(path) = stack.pop() {
            let cur = *path.last().unwrap();
            if dist[cur] == 0 {
                paths.push(path);
                continue;
            }
            for u in self.neighbors(cur) {
                if dist[u] + 1 == dist[cur] {
                    let mut p = path.clone();
                    p.push(u);
                    stack.push(p);
                }
            }
        }
        paths.sort();
        Ok(paths)
    }

    /// The same disc with vertex `v` renamed to `perm[v]`. The marked
    /// boundary start follows the permutation.
    pub fn relabeled(&self, perm: &[VertexId]) -> Result<Self, MeshError> {
        let faces: Vec<[usize; 3]> = self
            .faces
            .iter()
            .map(|f| [perm[f[0]], perm[f[1]], perm[f[2]]])
            .collect();
        Self::from_triangles_with_start(&faces, perm[self.boundary_start()])
    }

    /// The mirror image: every face reversed, same marked start.
    pub fn mirrored(&self) -> Self {
        let faces: Vec<[usize; 3]> = self.faces.iter().map(|f| [f[0], f[2], f[1]]).collect();
        Self::from_triangles_with_start(&faces, self.boundary_start())
            .expect("mirror of a disc is a disc")
    }

    /// The same disc with a different marked boundary vertex.
    pub fn with_boundary_start(&self, start: VertexId) -> Result<Self, MeshError> {
        self.check_vertex(start)?;
        Self::from_triangles_with_start(&self.faces, start)
    }

    /// Checks that `path` runs from an interior vertex through interior
    /// vertices to a single boundary vertex along edges, without repeats.
    pub(crate) fn check_cut_path(&self, path: &[VertexId]) -> Result<(), String> {
        if path.len() < 2 {
            return Err("cut path needs at least one edge".into());
        }
        for &v in path {
            if v >= self.num_vertices() {
                return Err(format!("unknown vertex {v}"));
            }
        }
        let mut sorted = path.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != path.len() {
            return Err("cut path repeats a vertex".into());
        }
        let last = path.len() - 1;
        for (i, &v) in path.iter().enumerate() {
            if (i == last) == self.interior[v] {
                return Err(format!("cut path vertex {v} is on the wrong side of the boundary"));
            }
        }
        for w in path.windows(2) {
            if !self.neighbors(w[0]).contains(&w[1]) {
                return Err(format!("{} and {} are not adjacent", w[0], w[1]));
            }
        }
        Ok(())
    }

    /// For every path vertex after the first, the faces incident to it that
    /// lie on the left of the walk along `path`.
    pub(crate) fn left_faces_along(&self, path: &[VertexId]) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(path.len() - 1);
        for i in 1..path.len() {
            let v = path[i];
            let prev = path[i - 1];
            let darts = self.out_darts(v);
            let begin = if i + 1 < path.len() {
                let next = path[i + 1];
                darts.iter().position(|&d| self.dart_target(d) == next).unwrap()
            } else {
                0
            };
            let mut faces = Vec::new();
            let mut k = begin;
            while self.dart_target(darts[k]) != prev {
                faces.push(self.dart_face(darts[k]));
                k = (k + 1) % darts.len();
            }
            out.push(faces);
        }
        out
    }
}
