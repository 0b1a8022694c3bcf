mod support;

use conedisc::construct::{
    branched_cover, branched_cover_of, counterexample_pair, corner_distance, generate_patch, BranchSelector,
    CoverSpec, PatchShape,
};
use conedisc::develop::{
    cut_along_shortest_path, develop, holonomy_rotation, locate_singularity, CutDisc, Localization,
};
use conedisc::enumerate::{theorem_words, uniqueness_sweep};
use conedisc::iso::{canonical_code, distance_invariant, is_isomorphic, IsoMode};
use conedisc::mesh::TypeClassification;
use conedisc::metric::check_gauss_bonnet;

use support::wheel;

const SHAPES: [PatchShape; 6] = [
    PatchShape::Triangle(3),
    PatchShape::Rhombus(3),
    PatchShape::Rhombus(4),
    PatchShape::Hexagon(2),
    PatchShape::Parallelogram(2, 4),
    PatchShape::Parallelogram(3, 5),
];

#[test]
fn patches_are_flat_and_close() {
    for shape in SHAPES {
        let p = generate_patch(shape).unwrap();
        assert_eq!(p.classify_type().unwrap(), TypeClassification::Regular);
        assert_eq!(check_gauss_bonnet(&p), 0);
        let dev = develop(&CutDisc::uncut(&p)).unwrap();
        assert!(dev.edges_are_unit());
        assert!(dev.faces_are_positive());
        assert_eq!(holonomy_rotation(&dev), 0);
    }
}

#[test]
fn every_cover_is_a_cover() {
    for shape in SHAPES {
        let base = generate_patch(shape).unwrap();
        for v in base.interior_vertices() {
            for k in 2..=3 {
                let c = branched_cover_of(&base, v, k).unwrap();
                let d = &c.disc;
                assert_eq!(check_gauss_bonnet(d), 0);
                assert_eq!(
                    d.classify_type().unwrap(),
                    TypeClassification::Irregular { vertex: 0, valence: 6 * k }
                );
                assert_eq!(d.num_faces(), k * base.num_faces());
                assert_eq!(d.boundary_word(), base.boundary_word().repeat(k));
                for w in 1..d.num_vertices() {
                    assert_eq!(d.degree(w), base.degree(c.projection[w]));
                }
                assert_eq!(corner_distance(d, 0), corner_distance(&base, v));

                let dev = develop(&cut_along_shortest_path(d, 0).unwrap()).unwrap();
                assert!(dev.edges_are_unit());
                assert_eq!(holonomy_rotation(&dev), 0);
                assert_eq!(locate_singularity(&dev, 6 * k as i64), Ok(Localization::Degenerate));
            }
        }
    }
}

#[test]
fn cover_by_selector() {
    let c = branched_cover(&CoverSpec {
        base: PatchShape::Rhombus(4),
        branch: BranchSelector::CornerDistance(3),
        sheets: 3,
    })
    .unwrap();
    assert_eq!(distance_invariant(&c.disc), Ok(3));
    assert_eq!(c.disc.degree(0), 18);
}

#[test]
fn the_counterexample() {
    let (a, b) = counterexample_pair(PatchShape::Rhombus(4), 2, 3, 2).unwrap();
    assert_eq!(a.disc.boundary_word(), b.disc.boundary_word());
    assert_eq!(distance_invariant(&a.disc), Ok(2));
    assert_eq!(distance_invariant(&b.disc), Ok(3));
    for mode in IsoMode::ALL {
        assert!(is_isomorphic(&a.disc, &b.disc, mode).is_none());
        assert_ne!(canonical_code(&a.disc, mode), canonical_code(&b.disc, mode));
    }
}

#[test]
fn wheels_localize() {
    for n in (3..=12).filter(|n| n % 6 != 0) {
        let w = wheel(n);
        let dev = develop(&cut_along_shortest_path(&w, 0).unwrap()).unwrap();
        assert!(dev.edges_are_unit());
        assert_eq!(holonomy_rotation(&dev) as usize, n % 6);
        assert_eq!(
            locate_singularity(&dev, n as i64),
            Ok(Localization::Apex(dev.cone_image().unwrap()))
        );
    }
}

#[test]
fn enumerated_discs_localize_along_every_shortest_cut() {
    let mut checked = 0;
    for r in uniqueness_sweep(&theorem_words(3, 7, &[2, 3, 4, 5]), 30) {
        for d in &r.discs {
            let TypeClassification::Irregular { vertex, valence } = d.classify_type().unwrap() else {
                unreachable!()
            };
            for path in d.all_shortest_paths_to_boundary(vertex).unwrap() {
                let cut = CutDisc::along_path(d, &path).unwrap();
                let dev = develop(&cut).unwrap();
                assert!(dev.edges_are_unit());
                assert_eq!(holonomy_rotation(&dev) as usize, valence % 6);
                let Ok(Localization::Apex(m)) = locate_singularity(&dev, valence as i64) else {
                    panic!("no apex for {:?}", r.word)
                };
                let hits: Vec<usize> = (0..dev.coords.len()).filter(|&v| dev.coords[v] == m).collect();
                assert!(hits.iter().any(|&v| cut.origin(v) == vertex));
                checked += 1;
            }
        }
    }
    assert!(checked >= 100, "only {checked} developments");
}
