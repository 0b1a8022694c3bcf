//! The equilateral flat structure: every edge has length 1, so the angle at
//! a vertex is π/3 times the number of incident triangles.
//!
//! Angles are counted in *wedges* (units of π/3) and cone orders are exact
//! rationals; nothing here touches floating point.
//!
//! An interior vertex with cone angle θ has order β where θ = 2π(β + 1); a
//! boundary vertex has order γ where θ = 2π(γ + 1/2). Flat points are
//! interior vertices of degree 6 and boundary vertices of degree 4.

use std::fmt;

use num_rational::Rational64;
use thiserror::Error;

use crate::mesh::{CombinatorialDisc, MeshError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("boundary word is empty")]
    EmptyWord,
    #[error("boundary degree {degree} at position {position} is below 2")]
    DegreeTooSmall { position: usize, degree: usize },
    #[error("no type (6,n) filling: the boundary forces n = {0}")]
    Infeasible(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConeData {
    pub vertex: VertexId,
    pub interior: bool,
    /// Cone angle in units of π/3.
    pub wedges: u32,
    /// Flat angle minus cone angle, in units of π/3.
    pub defect: i32,
    pub order: Rational64,
}

impl ConeData {
    pub fn is_singular(&self) -> bool {
        self.defect != 0
    }

    /// Cone angle as a reduced multiple of π, e.g. `5π/3`, `4π`, `π/3`.
    pub fn angle_label(&self) -> String {
        let r = Rational64::new(self.wedges as i64, 3);
        match (*r.numer(), *r.denom()) {
            (0, _) => "0".into(),
            (1, 1) => "π".into(),
            (n, 1) => format!("{n}π"),
            (1, d) => format!("π/{d}"),
            (n, d) => format!("{n}π/{d}"),
        }
    }
}

/// Formal sum of the singular vertices weighted by their orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divisor {
    pub terms: Vec<(VertexId, Rational64)>,
    pub degree: Rational64,
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(v, o)| format!("({o})·v{v}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightedEuler {
    pub chi_top: i64,
    pub chi_weighted: Rational64,
}

pub fn cone_data(disc: &CombinatorialDisc, v: VertexId) -> Result<ConeData, MeshError> {
    let p = disc.profile(v)?;
    let wedges = p.triangles as u32;
    let (flat, half) = if p.interior {
        (6, Rational64::from_integer(1))
    } else {
        (3, Rational64::new(1, 2))
    };
    Ok(ConeData {
        vertex: v,
        interior: p.interior,
        wedges,
        defect: flat - wedges as i32,
        order: Rational64::new(wedges as i64, 6) - half,
    })
}

/// Cone data of every vertex, by vertex id.
pub fn cone_table(disc: &CombinatorialDisc) -> Vec<ConeData> {
    (0..disc.num_vertices())
        .map(|v| cone_data(disc, v).unwrap())
        .collect()
}

pub fn divisor(disc: &CombinatorialDisc) -> Divisor {
    let terms: Vec<(VertexId, Rational64)> = cone_table(disc)
        .into_iter()
        .filter(|c| c.is_singular())
        .map(|c| (c.vertex, c.order))
        .collect();
    let degree = terms.iter().map(|(_, o)| *o).sum();
    Divisor { terms, degree }
}

pub fn weighted_euler(disc: &CombinatorialDisc) -> WeightedEuler {
    let chi_top = disc.num_vertices() as i64 - disc.num_edges() as i64 + disc.num_faces() as i64;
    WeightedEuler {
        chi_top,
        chi_weighted: Rational64::from_integer(chi_top) + divisor(disc).degree,
    }
}

/// Discrete Gauss–Bonnet residual in wedge units:
/// `Σ_interior (6 − deg) + Σ_boundary (4 − deg) − 6`.
///
/// For a disc with geodesic (straight-edged) boundary the total curvature
/// equals 2π, so this is zero for every valid disc.
pub fn check_gauss_bonnet(disc: &CombinatorialDisc) -> i64 {
    let total: i64 = (0..disc.num_vertices())
        .map(|v| {
            let d = disc.degree(v) as i64;
            if disc.is_interior(v) {
                6 - d
            } else {
                4 - d
            }
        })
        .sum();
    total - 6
}

/// The only valence a single irregular interior vertex can have inside a
/// disc with this boundary word: `n = Σ (4 − deg w)`.
///
/// `n == 6` means only regular fillings are possible.
pub fn irregular_valence_from_boundary(word: &[usize]) -> Result<i64, MetricError> {
    if word.is_empty() {
        return Err(MetricError::EmptyWord);
    }
    if let Some((position, &degree)) = word.iter().enumerate().find(|(_, &d)| d < 2) {
        return Err(MetricError::DegreeTooSmall { position, degree });
    }
    let n: i64 = word.iter().map(|&d| 4 - d as i64).sum();
    if n <= 0 {
        return Err(MetricError::Infeasible(n));
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan(n: usize) -> CombinatorialDisc {
        let faces: Vec<[usize; 3]> = (0..n).map(|i| [0, 1 + i, 1 + (i + 1) % n]).collect();
        CombinatorialDisc::from_triangles(&faces).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn interior_cone_data() {
        let c = cone_data(&fan(6), 0).unwrap();
        assert_eq!((c.wedges, c.defect, c.order), (6, 0, r(0, 1)));
        assert_eq!(c.angle_label(), "2π");

        let c = cone_data(&fan(12), 0).unwrap();
        assert_eq!(c.angle_label(), "4π");
        assert_eq!(c.order, r(1, 1));

        let c = cone_data(&fan(5), 0).unwrap();
        assert_eq!(c.angle_label(), "5π/3");
        assert_eq!(c.order, r(-1, 6));
        assert_eq!(c.defect, 1);
    }

    #[test]
    fn angle_order_relation() {
        for n in 3..=12 {
            let d = fan(n);
            for c in cone_table(&d) {
                // θ = 2π(β + 1) inside, θ = 2π(γ + 1/2) on the boundary;
                // in wedges θ/(π/3) = 6(order + shift).
                let shift = if c.interior { r(1, 1) } else { r(1, 2) };
                assert_eq!(Rational64::from_integer(c.wedges as i64), (c.order + shift) * 6);
                assert!(c.order > -shift);
            }
        }
    }

    #[test]
    fn unknown_vertex() {
        assert_eq!(cone_data(&fan(6), 99), Err(MeshError::UnknownVertex(99)));
    }

    #[test]
    fn divisors() {
        let d = divisor(&fan(6));
        assert_eq!(d.terms.len(), 6);
        assert!(d.terms.iter().all(|&(v, o)| v != 0 && o == r(-1, 6)));
        assert_eq!(d.degree, r(-1, 1));

        let tri = CombinatorialDisc::from_triangles(&[[0, 1, 2]]).unwrap();
        let d = divisor(&tri);
        assert_eq!(d.terms, vec![(0, r(-1, 3)), (1, r(-1, 3)), (2, r(-1, 3))]);
        assert_eq!(d.degree, r(-1, 1));

        let d = divisor(&fan(5));
        assert_eq!(d.terms.len(), 6);
        assert!(d.terms.iter().all(|&(_, o)| o == r(-1, 6)));
        assert_eq!(d.degree, r(-1, 1));

        let e = weighted_euler(&fan(5));
        assert_eq!(e.chi_top, 1);
        assert_eq!(e.chi_weighted, r(0, 1));
    }

    #[test]
    fn gauss_bonnet_examples() {
        let tri = CombinatorialDisc::from_triangles(&[[0, 1, 2]]).unwrap();
        assert_eq!(check_gauss_bonnet(&tri), 0);
        assert_eq!(check_gauss_bonnet(&fan(9)), 0);
        assert_eq!(check_gauss_bonnet(&fan(6)), 0);
    }

    #[test]
    fn valence_from_word() {
        assert_eq!(irregular_valence_from_boundary(&[3, 3, 3, 3, 3]), Ok(5));
        assert_eq!(irregular_valence_from_boundary(&[2, 2, 2]), Ok(6));
        assert_eq!(irregular_valence_from_boundary(&[3; 12]), Ok(12));
        assert_eq!(irregular_valence_from_boundary(&[]), Err(MetricError::EmptyWord));
        assert_eq!(
            irregular_valence_from_boundary(&[3, 1, 3]),
            Err(MetricError::DegreeTooSmall { position: 1, degree: 1 })
        );
        assert_eq!(
            irregular_valence_from_boundary(&[4, 4, 4]),
            Err(MetricError::Infeasible(0))
        );
    }
}
