//! Ready-made diagrams and shadows: small hand-encoded curves used across
//! the test suites, and the figure fixtures built from divides.
//!
//! The hand-encoded crossing tables follow the dart conventions of
//! [`crate::planar`]: darts `4v..4v+3` sit at crossing `v` in
//! counterclockwise rotation order.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builders;
use crate::cutting::CuttingSystem;
use crate::error::Error;
use crate::planar::{build_disk_map, DartId, DiskMap, EdgeId, RegionId};
use crate::shadow::{
    GleamFunction, Label, LinkDiagramPresentation, OverPair, ShadowedPolyhedron,
};

/// The 1-crossing lemniscate: two lobes, one above and one below the
/// crossing. Regions: both lobe interiors plus the outer region.
pub fn figure_eight() -> DiskMap {
    build_disk_map(&[vec![0, 1, 2, 3]], &[1, 0, 3, 2], 1).unwrap()
}

/// Two circles crossing twice (a lens). Crossing 0 on top, 1 below.
pub fn lens() -> DiskMap {
    build_disk_map(
        &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]],
        &[7, 6, 5, 4, 3, 2, 1, 0],
        0,
    )
    .unwrap()
}

/// The standard 3-crossing trefoil projection (triquetra): three inner
/// triangle edges and three outer lobes.
pub fn trefoil_curve() -> DiskMap {
    // Crossing k: slot 0 = lobe exit right, 1 = lobe exit left,
    // 2 = toward crossing k+1, 3 = toward crossing k-1.
    build_disk_map(
        &[vec![0, 1, 2, 3], vec![4, 5, 6, 7], vec![8, 9, 10, 11]],
        &[9, 4, 7, 10, 1, 8, 11, 2, 5, 0, 3, 6],
        0,
    )
    .unwrap()
}

/// The alternating trefoil diagram on [`trefoil_curve`].
pub fn trefoil_diagram() -> LinkDiagramPresentation {
    LinkDiagramPresentation::with_default_orientation(
        trefoil_curve(),
        vec![OverPair::Slots02; 3],
    )
    .unwrap()
}

/// Chain of three circles A - B - C, overlapping pairwise in a row.
/// Crossings: 0 = A/B top, 1 = A/B bottom, 2 = B/C top, 3 = B/C bottom.
pub fn chain_three() -> DiskMap {
    build_disk_map(
        &[
            vec![0, 1, 2, 3],
            vec![4, 5, 6, 7],
            vec![8, 9, 10, 11],
            vec![12, 13, 14, 15],
        ],
        &[9, 6, 5, 4, 3, 2, 1, 14, 15, 0, 13, 12, 11, 10, 7, 8],
        0,
    )
    .unwrap()
}

/// The path-shaped cutting system on [`chain_three`]:
/// outer - Ao - AB - Bo - BC - Co.
pub fn chain_three_path_cut(map: &DiskMap) -> CuttingSystem {
    let ao = map.left_of(DartId(1));
    let ab = map.left_of(DartId(4));
    let bo = map.left_of(DartId(3));
    let bc = map.left_of(DartId(10));
    let co = map.left_of(DartId(11));
    CuttingSystem::from_links(
        map,
        &[
            (ao, map.edge_of(DartId(1))),
            (ab, map.edge_of(DartId(2))),
            (bo, map.edge_of(DartId(3))),
            (bc, map.edge_of(DartId(10))),
            (co, map.edge_of(DartId(11))),
        ],
    )
    .unwrap()
}

/// Root of the path in [`chain_three_path_cut`].
pub fn chain_three_first_region(map: &DiskMap) -> RegionId {
    map.left_of(DartId(1))
}

/// The doubled curve of the two-segment divide: two ovals crossing at four
/// points. Crossings 0..3 sit at NE, NW, SW, SE; slots 0..3 point E, N, W,
/// S. Regions come out as: 0 outer, 1 top digon, 2 square, 3 right digon,
/// 4 left digon, 5 bottom digon.
pub fn fig15_curve() -> DiskMap {
    build_disk_map(
        &[
            vec![0, 1, 2, 3],
            vec![4, 5, 6, 7],
            vec![8, 9, 10, 11],
            vec![12, 13, 14, 15],
        ],
        &[12, 5, 4, 13, 2, 1, 10, 9, 14, 7, 6, 15, 0, 3, 8, 11],
        0,
    )
    .unwrap()
}

/// The alternating over/under choice on [`fig15_curve`] that makes the
/// diagram a (2,4)-torus link diagram: the horizontal oval passes over at
/// NE and SW.
pub fn fig15_over() -> Vec<OverPair> {
    vec![
        OverPair::Slots02,
        OverPair::Slots13,
        OverPair::Slots02,
        OverPair::Slots13,
    ]
}

/// The divide shadow of the two-segment divide: digons labeled c with gleam
/// 0, the square labeled b with gleam -1, over/under as in [`fig15_over`].
pub fn fig15_shadow() -> ShadowedPolyhedron {
    let map = fig15_curve();
    debug_assert_eq!(map.regions()[2].boundary.len(), 4);
    let gleams = GleamFunction::from_internal_order(&map, &[0, -2, 0, 0, 0]).unwrap();
    let labels = vec![
        Label::Outer,
        Label::C,
        Label::B,
        Label::C,
        Label::C,
        Label::C,
    ];
    let diagram = LinkDiagramPresentation::with_default_orientation(map, fig15_over()).unwrap();
    ShadowedPolyhedron::new(diagram, gleams, Some(labels)).unwrap()
}

/// The cutting system of the worked example on [`fig15_curve`]: each digon
/// hangs off the outer region, and the square hangs off the right digon
/// through the right chord. Its reduction keeps the single path
/// outer - right digon - square.
pub fn fig15_path_cut(map: &DiskMap) -> CuttingSystem {
    CuttingSystem::from_links(
        map,
        &[
            (RegionId(1), EdgeId(1)), // top digon through the top cap
            (RegionId(2), EdgeId(3)), // square through the right chord
            (RegionId(3), EdgeId(0)), // right digon through the right loop
            (RegionId(4), EdgeId(4)), // left digon through the left loop
            (RegionId(5), EdgeId(7)), // bottom digon through the bottom cap
        ],
    )
    .unwrap()
}

/// The loop divide of the cusp: a single immersed interval whose middle
/// crosses itself once, bounding one chamber. Doubling it yields the
/// 5-crossing shadow of the worked trefoil example.
pub fn fig16_divide() -> builders::Divide {
    builders::ingest_polyline_divide(&[builders::PolylineComponent::open(&[
        (-4, -2),
        (2, 2),
        (4, 0),
        (2, -2),
        (-1, 2),
    ])])
    .unwrap()
}

/// The doubled cusp divide with the over/under choice under which both
/// gleam -1 regions satisfy gl = c, matching the worked example where the
/// conjugating word at their cutting points is trivial.
pub fn fig16_shadow() -> ShadowedPolyhedron {
    let base = builders::double_divide(&fig16_divide()).unwrap();
    let map = base.map();
    let targets: Vec<RegionId> = map
        .internal_regions()
        .filter(|&r| matches!(base.label_of(r), Some(Label::B) | Some(Label::Chamber)))
        .collect();
    let n = map.crossing_count();
    for bits in 0..(1u32 << n) {
        let over: Vec<OverPair> = (0..n)
            .map(|i| {
                if bits >> i & 1 == 0 {
                    OverPair::Slots02
                } else {
                    OverPair::Slots13
                }
            })
            .collect();
        let candidate = base.with_over(over).unwrap();
        let twice_c = crate::shadow::compute_c(&candidate.diagram);
        if targets.iter().all(|r| twice_c[r] == -2) {
            return candidate;
        }
    }
    unreachable!("an over/under choice with gl = c on the b-regions exists");
}

/// Four generic lines: the arrangement of the worked example.
pub fn fig18_arrangement() -> builders::LineArrangement {
    // y = 0; y = 2x + 2; y = -2x + 2; y = x/2 + 3, as a*u + b*v + c = 0.
    builders::LineArrangement::new(&[
        ((0, 1), (1, 1), (0, 1)),
        ((2, 1), (-1, 1), (2, 1)),
        ((-2, 1), (-1, 1), (2, 1)),
        ((1, 2), (-1, 1), (3, 1)),
    ])
    .unwrap()
}

/// The doubled 4-line arrangement with the default over/under policy.
pub fn fig18_shadow() -> ShadowedPolyhedron {
    let divide = builders::arrangement_to_divide(&fig18_arrangement()).unwrap();
    builders::double_divide(&divide).unwrap()
}

/// The subpolyhedron of a doubled arrangement keeping the fibers, the
/// squares, and one triangle chamber (a chamber with six boundary corners,
/// bounded by three lines); the smallest such region id is chosen.
pub fn fig18_yb3_selection(shadow: &ShadowedPolyhedron) -> crate::shadow::SubSelection {
    let map = shadow.map();
    let (mut sel, _) = crate::shadow::select_regions(
        shadow,
        &crate::shadow::SelectionPreset::YaSquareC,
    )
    .unwrap();
    let triangle = map
        .internal_regions()
        .find(|&r| {
            shadow.label_of(r) == Some(Label::Chamber)
                && map.regions()[r.idx()].boundary.len() == 6
        })
        .expect("a generic arrangement of four lines has a triangle chamber");
    sel.regions.insert(triangle);
    sel
}

/// Small curve catalog used by property suites.
pub fn catalog() -> Vec<DiskMap> {
    vec![
        figure_eight(),
        lens(),
        trefoil_curve(),
        chain_three(),
        fig15_curve(),
    ]
}

/// Seeded over/under assignment.
pub fn random_over(map: &DiskMap, seed: u64) -> Vec<OverPair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..map.crossing_count())
        .map(|_| {
            if rng.gen::<bool>() {
                OverPair::Slots02
            } else {
                OverPair::Slots13
            }
        })
        .collect()
}

/// Seeded orientation seeds, one dart per component.
pub fn random_orientation(map: &DiskMap, seed: u64) -> Vec<DartId> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    map.components()
        .iter()
        .map(|edges| {
            let e = edges[rng.gen_range(0..edges.len())];
            let [a, b] = map.edge_darts(e);
            if rng.gen::<bool>() {
                a
            } else {
                b
            }
        })
        .collect()
}

/// Seeded gleams with the parity forced by each region's corner count, so
/// gleam - c is always an integer.
pub fn random_parity_gleams(map: &DiskMap, seed: u64) -> GleamFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51_7c_c1_b7);
    let twice: BTreeMap<RegionId, i64> = map
        .internal_regions()
        .map(|r| {
            let parity = (map.regions()[r.idx()].boundary.len() % 2) as i64;
            (r, parity + 2 * rng.gen_range(-2..=2))
        })
        .collect();
    GleamFunction::from_map(map, twice).unwrap()
}

/// Gleams equal to the corner sums of the given diagram.
pub fn gleams_equal_c(diagram: &LinkDiagramPresentation) -> GleamFunction {
    let twice_c = crate::shadow::compute_c(diagram);
    let map = diagram.map();
    let twice = map.internal_regions().map(|r| (r, twice_c[&r])).collect();
    GleamFunction::from_map(map, twice).unwrap()
}

/// Decorated variants of the catalog curves for property tests.
pub fn decorated_catalog(variants: u64) -> Vec<LinkDiagramPresentation> {
    let mut out = Vec::new();
    for map in catalog() {
        for v in 0..variants {
            let over = random_over(&map, v * 31 + 7);
            let seeds = random_orientation(&map, v * 17 + 3);
            out.push(LinkDiagramPresentation::new(map.clone(), over, &seeds).unwrap());
        }
    }
    out
}

/// A labeled shadow for every catalog curve with seeded decorations; the
/// gleams have the right parity for any selection.
pub fn decorated_shadows(variants: u64) -> Result<Vec<ShadowedPolyhedron>, Error> {
    let mut out = Vec::new();
    for (i, diagram) in decorated_catalog(variants).into_iter().enumerate() {
        let gleams = random_parity_gleams(diagram.map(), i as u64);
        out.push(ShadowedPolyhedron::new(diagram, gleams, None)?);
    }
    Ok(out)
}
