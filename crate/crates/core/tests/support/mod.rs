//! Independent oracles shared by the integration tests.
//!
//! Nothing here uses canonical codes or the enumerator's frontier search:
//! isomorphism is decided by backtracking over vertex bijections and
//! checking oriented face sets, and discs are generated by shelling.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use conedisc::iso::IsoMode;
use conedisc::mesh::CombinatorialDisc;

pub fn wheel(n: usize) -> CombinatorialDisc {
    let faces: Vec<[usize; 3]> = (0..n).map(|i| [0, 1 + i, 1 + (i + 1) % n]).collect();
    CombinatorialDisc::from_triangles(&faces).unwrap()
}

fn rotate_min(f: [usize; 3]) -> [usize; 3] {
    let k = (0..3).min_by_key(|&i| f[i]).unwrap();
    [f[k], f[(k + 1) % 3], f[(k + 2) % 3]]
}

/// Backtracking search for a vertex bijection mapping oriented faces onto
/// oriented faces (or all onto reversed faces, when reflections count).
pub fn brute_force_isomorphic(d1: &CombinatorialDisc, d2: &CombinatorialDisc, mode: IsoMode) -> bool {
    let n = d1.num_vertices();
    if n != d2.num_vertices() || d1.num_faces() != d2.num_faces() {
        return false;
    }
    let target: HashSet<[usize; 3]> = d2.faces().iter().map(|&f| rotate_min(f)).collect();
    let adj2: Vec<BTreeSet<usize>> = (0..n).map(|v| d2.neighbors(v).into_iter().collect()).collect();

    // Assign in breadth-first order so partial maps are connected.
    let dist = d1.distances_from(d1.boundary_start());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (dist[v], v));

    let reflections: &[bool] = if mode == IsoMode::AllowReflection { &[false, true] } else { &[false] };
    reflections.iter().any(|&reflected| {
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        extend(d1, d2, mode, &adj2, &target, reflected, &order, 0, &mut map, &mut used)
    })
}

#[allow(clippy::too_many_arguments)]
fn extend(
    d1: &CombinatorialDisc,
    d2: &CombinatorialDisc,
    mode: IsoMode,
    adj2: &[BTreeSet<usize>],
    target: &HashSet<[usize; 3]>,
    reflected: bool,
    order: &[usize],
    k: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if k == order.len() {
        return d1.faces().iter().all(|f| {
            let g = if reflected {
                [map[f[0]], map[f[2]], map[f[1]]]
            } else {
                [map[f[0]], map[f[1]], map[f[2]]]
            };
            target.contains(&rotate_min(g))
        });
    }
    let v = order[k];
    let nbrs: BTreeSet<usize> = d1.neighbors(v).into_iter().collect();
    for w in 0..d2.num_vertices() {
        if used[w] || d1.degree(v) != d2.degree(w) || d1.is_interior(v) != d2.is_interior(w) {
            continue;
        }
        if mode == IsoMode::FixStart && (v == d1.boundary_start()) != (w == d2.boundary_start()) {
            continue;
        }
        let consistent = order[..k]
            .iter()
            .all(|&u| nbrs.contains(&u) == adj2[w].contains(&map[u]));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(d1, d2, mode, adj2, target, reflected, order, k + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Cheap isomorphism invariant: sizes, least boundary rotation and sorted
/// interior degrees.
pub type BucketKey = (usize, usize, Vec<usize>, Vec<usize>);

pub fn bucket_key(d: &CombinatorialDisc) -> BucketKey {
    let word = all_rotations(&d.boundary_word()).into_iter().min().unwrap();
    let mut inner: Vec<usize> = d.interior_vertices().map(|v| d.degree(v)).collect();
    inner.sort_unstable();
    (d.num_vertices(), d.num_faces(), word, inner)
}

/// Keeps one disc per rotate-start class, in first-seen order.
#[derive(Default)]
pub struct ClassSet {
    buckets: BTreeMap<BucketKey, Vec<CombinatorialDisc>>,
}

impl ClassSet {
    /// Returns false if an isomorphic disc is already present.
    pub fn insert(&mut self, d: CombinatorialDisc) -> bool {
        let reps = self.buckets.entry(bucket_key(&d)).or_default();
        if reps.iter().any(|r| brute_force_isomorphic(r, &d, IsoMode::RotateStart)) {
            return false;
        }
        reps.push(d);
        true
    }

    pub fn into_discs(self) -> Vec<CombinatorialDisc> {
        self.buckets.into_values().flatten().collect()
    }
}

/// One disc per rotate-start class for every face count `1..=max_faces`.
///
/// Every triangulated disc is shellable, so it can be grown from one
/// triangle by gluing a triangle along a single boundary edge (new vertex)
/// or into a boundary corner `u v w` whose ends are not yet joined.
pub fn shelled_discs(max_faces: usize) -> Vec<CombinatorialDisc> {
    let mut all = Vec::new();
    let mut level = vec![CombinatorialDisc::from_triangles(&[[0, 1, 2]]).unwrap()];
    for _ in 1..max_faces {
        let mut next = ClassSet::default();
        for d in &level {
            for child in shell_children(d) {
                next.insert(child);
            }
        }
        all.append(&mut level);
        level = next.into_discs();
    }
    all.extend(level);
    all
}

/// Glues a triangle with a new vertex onto boundary edge `i`.
pub fn glue_edge(d: &CombinatorialDisc, i: usize) -> CombinatorialDisc {
    let b = d.boundary_cycle();
    let (u, v) = (b[i % b.len()], b[(i + 1) % b.len()]);
    let mut faces = d.faces().to_vec();
    faces.push([v, u, d.num_vertices()]);
    CombinatorialDisc::from_triangles(&faces).expect("edge gluing keeps a disc")
}

/// Fills the boundary corner at position `i`, if its neighbours are not
/// already joined and the boundary is longer than a triangle.
pub fn close_corner(d: &CombinatorialDisc, i: usize) -> Option<CombinatorialDisc> {
    let b = d.boundary_cycle();
    let q = b.len();
    let (u, v, w) = (b[(i + q - 1) % q], b[i % q], b[(i + 1) % q]);
    if q < 4 || d.neighbors(u).contains(&w) {
        return None;
    }
    let mut faces = d.faces().to_vec();
    faces.push([u, w, v]);
    Some(CombinatorialDisc::from_triangles(&faces).expect("corner closing keeps a disc"))
}

fn shell_children(d: &CombinatorialDisc) -> Vec<CombinatorialDisc> {
    let q = d.boundary_cycle().len();
    let mut out: Vec<CombinatorialDisc> = (0..q).map(|i| glue_edge(d, i)).collect();
    out.extend((0..q).filter_map(|i| close_corner(d, i)));
    out
}

/// A disc grown by a script of shelling moves; `(true, i)` tries to close
/// corner `i` and falls back to gluing on edge `i`.
pub fn shelled(moves: &[(bool, usize)]) -> CombinatorialDisc {
    let mut d = CombinatorialDisc::from_triangles(&[[0, 1, 2]]).unwrap();
    for &(corner, i) in moves {
        d = if corner { close_corner(&d, i) } else { None }.unwrap_or_else(|| glue_edge(&d, i));
    }
    d
}

/// Interior degrees all 6 except at most one.
pub fn is_adapted(d: &CombinatorialDisc) -> bool {
    d.interior_vertices().filter(|&v| d.degree(v) != 6).count() <= 1
}

/// Boundary word read from every possible start.
pub fn all_rotations(word: &[usize]) -> Vec<Vec<usize>> {
    (0..word.len())
        .map(|k| word[k..].iter().chain(&word[..k]).copied().collect())
        .collect()
}

pub fn shuffled(n: usize, rng: &mut impl rand::Rng) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
