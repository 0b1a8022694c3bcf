//! Exhaustive fillings of a boundary word.
//!
//! The search keeps a list of open regions, each a simple frontier cycle
//! whose vertices carry the number of edges they still need. In a region it
//! picks the vertex `x` with the smallest remaining budget and looks at the
//! frontier edge `x → b`. A budget of zero forces the ear `(a, x, b)`;
//! otherwise the triangle on `x → b` either has a fresh apex (regular, or
//! the irregular vertex if it is still unplaced) or an apex `y` further
//! along the frontier, which splits the region in two.
//!
//! Every region is checked exactly before it is explored. Developing its
//! frontier with unit steps and turns of `2 − r` sixths at a vertex of
//! budget `r` must close up (regular region) or rotate about a lattice point
//! (region still owing the irregular vertex); the signed area around that
//! point is then the exact number of triangles the region will hold. Since
//! these areas add up to a constant, the triangle count of every filling is
//! known before the search starts and the cap is decided up front.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::eisenstein::Eisenstein;
use crate::iso::{canonical_code, CanonicalCode, IsoMode};
use crate::mesh::CombinatorialDisc;
use crate::metric::{irregular_valence_from_boundary, MetricError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error(transparent)]
    Word(#[from] MetricError),
    #[error("boundary word forces irregular valence {forced}, requested {requested}")]
    InfeasibleByGaussBonnet { forced: i64, requested: String },
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub word: Vec<usize>,
    /// Requested irregular valence; `None` for regular fillings.
    pub n: Option<usize>,
    /// Pairwise non-isomorphic fillings (rotate-start), sorted by code.
    pub discs: Vec<CombinatorialDisc>,
    pub codes: Vec<CanonicalCode>,
    /// Number of triangles every filling must have, when the word admits
    /// one at all.
    pub triangles: Option<usize>,
    /// False when the cap cut the search short.
    pub complete: bool,
}

fn describe(n: Option<usize>) -> String {
    n.map_or_else(|| "regular".to_string(), |n| n.to_string())
}

#[derive(Debug, Clone)]
struct Region {
    cycle: Vec<u32>,
    budget: Vec<i32>,
    /// The irregular vertex goes inside this region.
    pending: bool,
}

/// Exact triangle count of a region, or `None` if it cannot be filled.
fn region_area(budget: &[i32], pending: bool, n: i64) -> Option<i64> {
    let l = budget.len();
    if l < 3 || budget.iter().any(|&r| r < 0) {
        return None;
    }
    let turning: i64 = budget.iter().map(|&r| 2 - r as i64).sum();
    if turning != if pending { n } else { 6 } {
        return None;
    }
    let mut pts = Vec::with_capacity(l + 1);
    let mut pos = Eisenstein::ZERO;
    let mut dir = Eisenstein::ONE;
    pts.push(pos);
    for i in 1..=l {
        pos += dir;
        pts.push(pos);
        dir = dir.rotate(2 - budget[i % l] as i64);
    }
    let end = pts[l];
    let centre = if pending && n.rem_euclid(6) != 0 {
        end.checked_div(Eisenstein::ONE - Eisenstein::omega_pow(n))?
    } else if end == Eisenstein::ZERO {
        Eisenstein::ZERO
    } else {
        return None;
    };
    let area: i64 = pts.windows(2).map(|w| (w[0] - centre).det(w[1] - centre)).sum();
    let l = l as i64;
    if area < l - 2 || (area - l) % 2 != 0 {
        return None;
    }
    if pending && area - l + 2 < 2 {
        return None;
    }
    Some(area)
}

struct Search {
    n: i64,
    next_id: u32,
    faces: Vec<[u32; 3]>,
    adj: Vec<Vec<u32>>,
    found: Vec<Vec<[u32; 3]>>,
}

impl Search {
    fn adjacent(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].contains(&v)
    }

    fn link(&mut self, u: u32, v: u32) {
        self.adj[u as usize].push(v);
        self.adj[v as usize].push(u);
    }

    fn unlink(&mut self, u: u32, v: u32) {
        self.adj[u as usize].pop();
        self.adj[v as usize].pop();
    }

    fn fresh(&mut self) -> u32 {
        let z = self.next_id;
        self.next_id += 1;
        if self.adj.len() <= z as usize {
            self.adj.push(Vec::new());
        }
        z
    }

    fn run(&mut self, mut open: Vec<Region>) {
        match open.pop() {
            None => self.found.push(self.faces.clone()),
            Some(region) => self.fill(region, open),
        }
    }

    fn push_if_viable(&self, open: &mut Vec<Region>, r: Region) -> bool {
        if region_area(&r.budget, r.pending, self.n).is_some() {
            open.push(r);
            true
        } else {
            false
        }
    }

    fn fill(&mut self, region: Region, open: Vec<Region>) {
        let Region { cycle, budget, pending } = region;
        let l = cycle.len();
        let xi = (0..l).min_by_key(|&i| budget[i]).unwrap();
        let ai = (xi + l - 1) % l;
        let bi = (xi + 1) % l;
        let (a, x, b) = (cycle[ai], cycle[xi], cycle[bi]);

        if budget[xi] == 0 {
            if l == 3 {
                if !pending && budget.iter().all(|&r| r == 0) {
                    self.faces.push([a, x, b]);
                    self.run(open);
                    self.faces.pop();
                }
                return;
            }
            if self.adjacent(a, b) {
                return;
            }
            let mut c = cycle.clone();
            let mut r = budget.clone();
            r[ai] -= 1;
            r[bi] -= 1;
            c.remove(xi);
            r.remove(xi);
            let mut next = open;
            if self.push_if_viable(&mut next, Region { cycle: c, budget: r, pending }) {
                self.faces.push([a, x, b]);
                self.link(a, b);
                self.run(next);
                self.unlink(a, b);
                self.faces.pop();
            }
            return;
        }

        if budget[bi] < 1 {
            return;
        }

        // Fresh apex.
        for irregular in [false, true] {
            if irregular && !pending {
                continue;
            }
            let target = if irregular { self.n as i32 } else { 6 };
            let z = self.fresh();
            let mut c = cycle.clone();
            let mut r = budget.clone();
            r[xi] -= 1;
            r[bi] -= 1;
            c.insert(xi + 1, z);
            r.insert(xi + 1, target - 2);
            let mut next = open.clone();
            let region = Region {
                cycle: c,
                budget: r,
                pending: pending && !irregular,
            };
            if self.push_if_viable(&mut next, region) {
                self.faces.push([x, b, z]);
                self.link(x, z);
                self.link(b, z);
                self.run(next);
                self.unlink(b, z);
                self.unlink(x, z);
                self.faces.pop();
            }
            self.next_id -= 1;
        }

        // Apex on the frontier: y ranges over b+2 .. a-1.
        for step in 2..l - 1 {
            let yi = (bi + step) % l;
            let y = cycle[yi];
            if budget[yi] < 2 || self.adjacent(x, y) || self.adjacent(b, y) {
                continue;
            }
            // R1 runs b .. y, R2 runs y .. a, x.
            let take = |from: usize, len: usize| -> (Vec<u32>, Vec<i32>) {
                (0..len)
                    .map(|k| (cycle[(from + k) % l], budget[(from + k) % l]))
                    .unzip()
            };
            let (c1, mut r1) = take(bi, step + 1);
            let (c2, mut r2) = take(yi, l - step);
            r1[0] -= 1;
            *r2.last_mut().unwrap() -= 1;
            let spare = budget[yi] - 2;

            let splits: &[(bool, bool)] = if pending {
                &[(true, false), (false, true)]
            } else {
                &[(false, false)]
            };
            for &(p1, p2) in splits {
                // y's share in the regular side follows from that side's
                // turning; the other side gets the rest.
                let (y1, y2) = if !p1 {
                    let s = share(&r1, c1.len() - 1, 6);
                    (s, spare - s)
                } else {
                    let s = share(&r2, 0, 6);
                    (spare - s, s)
                };
                if y1 < 0 || y2 < 0 {
                    continue;
                }
                let mut r1 = r1.clone();
                let mut r2 = r2.clone();
                *r1.last_mut().unwrap() = y1;
                r2[0] = y2;
                let mut next = open.clone();
                if !self.push_if_viable(&mut next, Region { cycle: c2.clone(), budget: r2, pending: p2 })
                    || !self.push_if_viable(&mut next, Region { cycle: c1.clone(), budget: r1, pending: p1 })
                {
                    continue;
                }
                self.faces.push([x, b, y]);
                self.link(x, y);
                self.link(b, y);
                self.run(next);
                self.unlink(b, y);
                self.unlink(x, y);
                self.faces.pop();
            }
        }
    }
}

/// Budget at position `at` that makes the region's turning equal `total`.
fn share(budget: &[i32], at: usize, total: i32) -> i32 {
    let rest: i32 = budget
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != at)
        .map(|(_, &r)| 2 - r)
        .sum();
    2 + rest - total
}

/// Irregular valence forced by `word`, checked against the request.
fn check_request(word: &[usize], n: Option<usize>) -> Result<Option<usize>, EnumerateError> {
    let n = n.filter(|&n| n != 6);
    let forced = match irregular_valence_from_boundary(word) {
        Ok(f) => f,
        Err(MetricError::Infeasible(f)) => {
            return Err(EnumerateError::InfeasibleByGaussBonnet {
                forced: f,
                requested: describe(n),
            })
        }
        Err(e) => return Err(e.into()),
    };
    let wanted = n.map_or(6, |n| n as i64);
    if forced != wanted {
        return Err(EnumerateError::InfeasibleByGaussBonnet {
            forced,
            requested: describe(n),
        });
    }
    Ok(n)
}

/// All fillings of `word` by discs whose interior vertices have degree 6,
/// except one of degree `n` when `n` is given (and not 6), using at most
/// `cap` triangles.
pub fn enumerate_fillings(
    word: &[usize],
    n: Option<usize>,
    cap: usize,
) -> Result<Enumeration, EnumerateError> {
    let n = check_request(word, n)?;
    let mut out = Enumeration {
        word: word.to_vec(),
        n,
        discs: Vec::new(),
        codes: Vec::new(),
        triangles: None,
        complete: true,
    };
    let q = word.len();
    let root = Region {
        cycle: (0..q as u32).collect(),
        budget: word.iter().map(|&d| d as i32 - 2).collect(),
        pending: n.is_some(),
    };
    let nn = n.map_or(6, |n| n as i64);
    let Some(area) = region_area(&root.budget, root.pending, nn) else {
        return Ok(out);
    };
    out.triangles = Some(area as usize);
    if area as usize > cap {
        out.complete = false;
        return Ok(out);
    }

    let mut search = Search {
        n: nn,
        next_id: q as u32,
        faces: Vec::new(),
        adj: vec![Vec::new(); q],
        found: Vec::new(),
    };
    for i in 0..q as u32 {
        search.link(i, (i + 1) % q as u32);
    }
    search.run(vec![root]);

    let mut classes = BTreeMap::new();
    for faces in search.found {
        let faces: Vec<[usize; 3]> = faces
            .iter()
            .map(|f| [f[0] as usize, f[1] as usize, f[2] as usize])
            .collect();
        let disc = CombinatorialDisc::from_triangles(&faces)
            .expect("enumerator produced an invalid disc");
        classes
            .entry(canonical_code(&disc, IsoMode::RotateStart))
            .or_insert(disc);
    }
    for (code, disc) in classes {
        out.codes.push(code);
        out.discs.push(disc);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct UniquenessReport {
    pub word: Vec<usize>,
    pub n: Option<usize>,
    pub count: usize,
    pub discs: Vec<CombinatorialDisc>,
    pub triangles: Option<usize>,
    pub complete: bool,
}

impl UniquenessReport {
    /// At-most-one is only claimed for an irregular valence that is not a
    /// multiple of 6.
    pub fn theorem_applies(&self) -> bool {
        matches!(self.n, Some(n) if n % 6 != 0)
    }

    /// A complete search that found two non-isomorphic fillings where the
    /// theorem says there is at most one.
    pub fn falsified(&self) -> bool {
        self.theorem_applies() && self.complete && self.count >= 2
    }
}

pub fn verify_uniqueness(
    word: &[usize],
    n: Option<usize>,
    cap: usize,
) -> Result<UniquenessReport, EnumerateError> {
    let e = enumerate_fillings(word, n, cap)?;
    Ok(UniquenessReport {
        word: e.word,
        n: e.n,
        count: e.discs.len(),
        discs: e.discs,
        triangles: e.triangles,
        complete: e.complete,
    })
}

/// Words of length `min_len..=max_len` over `alphabet` whose forced
/// irregular valence is positive and not a multiple of 6, in
/// length-then-lexicographic order.
pub fn theorem_words(min_len: usize, max_len: usize, alphabet: &[usize]) -> Vec<Vec<usize>> {
    let mut alphabet = alphabet.to_vec();
    alphabet.sort_unstable();
    alphabet.dedup();
    let mut out = Vec::new();
    for len in min_len..=max_len {
        let mut idx = vec![0usize; len];
        'outer: loop {
            let word: Vec<usize> = idx.iter().map(|&i| alphabet[i]).collect();
            if let Ok(n) = irregular_valence_from_boundary(&word) {
                if n % 6 != 0 {
                    out.push(word);
                }
            }
            for k in (0..len).rev() {
                idx[k] += 1;
                if idx[k] < alphabet.len() {
                    continue 'outer;
                }
                idx[k] = 0;
            }
            break;
        }
    }
    out
}

/// Runs [`verify_uniqueness`] on every word in parallel at the valence its
/// boundary forces. Reports come back in input order.
pub fn uniqueness_sweep(words: &[Vec<usize>], cap: usize) -> Vec<UniquenessReport> {
    words
        .par_iter()
        .map(|w| {
            let n = irregular_valence_from_boundary(w).ok().map(|n| n as usize);
            verify_uniqueness(w, n, cap).expect("sweep word fails its own precheck")
        })
        .collect()
}
