//! Shadowed polyhedra: link diagram presentations, gleams, the corner sum
//! c(R), and subpolyhedron selections.
//!
//! Gleams and c-values are stored doubled (as `2*gl(R)` and `2*c(R)`) so all
//! arithmetic stays in exact integers.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::planar::{CrossingId, DartId, DiskMap, EdgeId, RegionId};

/// Region labels produced by the divide doubling construction.
///
/// `B` marks the square regions at doubled crossings, `Chamber` the doubled
/// bounded chambers of the divide; both carry gleam -1 but select
/// differently (`Y_a□c` keeps squares and drops chambers).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    A,
    B,
    C,
    Chamber,
    Outer,
}

/// Which opposite dart pair is the overstrand at a crossing, indexed by
/// rotation slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverPair {
    /// Slots 0 and 2 of the crossing's rotation.
    Slots02,
    /// Slots 1 and 3.
    Slots13,
}

/// An immersed curve presentation with over/under data at every crossing and
/// a coherent orientation on every component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagramPresentation {
    map: DiskMap,
    over: Vec<OverPair>,
    /// Forward dart of each edge; coherent along each component.
    forward: Vec<DartId>,
}

impl LinkDiagramPresentation {
    /// Assembles a diagram from over/under choices (one per crossing) and one
    /// seed dart per component giving the travel direction.
    pub fn new(map: DiskMap, over: Vec<OverPair>, seeds: &[DartId]) -> Result<Self, Error> {
        if over.len() != map.crossing_count() {
            return Err(Error::Schema(format!(
                "over/under data for {} crossings, map has {}",
                over.len(),
                map.crossing_count()
            )));
        }
        if seeds.len() != map.components().len() {
            return Err(Error::Schema(format!(
                "{} orientation seeds for {} components",
                seeds.len(),
                map.components().len()
            )));
        }
        let mut forward = vec![DartId(u32::MAX); map.edge_count()];
        for (cid, seed) in seeds.iter().enumerate() {
            if seed.idx() >= map.dart_count() {
                return Err(Error::UnknownDart { dart: seed.0 });
            }
            let e0 = map.edge_of(*seed);
            if map.component_of_edge(e0).idx() != cid {
                return Err(Error::Schema(format!(
                    "orientation seed dart {} is not on component {}",
                    seed, cid
                )));
            }
            let mut d = *seed;
            loop {
                let e = map.edge_of(d);
                if forward[e.idx()].0 != u32::MAX {
                    break;
                }
                forward[e.idx()] = d;
                d = map.opposite(map.twin(d));
            }
        }
        Ok(Self { map, over, forward })
    }

    /// Default orientation: each component travels in the direction of the
    /// smaller dart of its smallest edge.
    pub fn with_default_orientation(map: DiskMap, over: Vec<OverPair>) -> Result<Self, Error> {
        let seeds: Vec<DartId> = map
            .components()
            .iter()
            .map(|edges| map.edge_darts(edges[0])[0])
            .collect();
        Self::new(map, over, &seeds)
    }

    pub fn map(&self) -> &DiskMap {
        &self.map
    }

    pub fn over(&self) -> &[OverPair] {
        &self.over
    }

    /// True when `d` lies on the overstrand of its crossing.
    pub fn is_over(&self, d: DartId) -> bool {
        let v = self.map.crossing_of(d);
        let even = self.map.slot_of(d).is_multiple_of(2);
        match self.over[v.idx()] {
            OverPair::Slots02 => even,
            OverPair::Slots13 => !even,
        }
    }

    /// Forward dart of an edge under the component orientation.
    pub fn forward(&self, e: EdgeId) -> DartId {
        self.forward[e.idx()]
    }

    pub fn is_forward(&self, d: DartId) -> bool {
        self.forward[self.map.edge_of(d).idx()] == d
    }

    /// Same diagram with every component orientation reversed.
    pub fn reversed(&self) -> Self {
        Self {
            map: self.map.clone(),
            over: self.over.clone(),
            forward: self.forward.iter().map(|&d| self.map.twin(d)).collect(),
        }
    }

    /// Same map and orientations with different over/under choices.
    pub fn with_over(&self, over: Vec<OverPair>) -> Result<Self, Error> {
        if over.len() != self.over.len() {
            return Err(Error::Schema("over/under data length mismatch".into()));
        }
        Ok(Self {
            map: self.map.clone(),
            over,
            forward: self.forward.clone(),
        })
    }

    /// Orientation seeds (forward dart of the first edge of each component),
    /// for serialization.
    pub fn orientation_seeds(&self) -> Vec<DartId> {
        self.map
            .components()
            .iter()
            .map(|edges| self.forward(edges[0]))
            .collect()
    }
}

/// Per-crossing corner sums `2*c(R)` for every region, the outer one
/// included (its value participates in the global zero-sum check only).
///
/// At a crossing the corner between a dart `d` and its counterclockwise
/// successor belongs to the region on the left of `d`; it contributes -1/2
/// when `d` lies on the overstrand and +1/2 when it lies on the understrand.
/// The pattern depends only on the over/under data, so each crossing
/// contributes two +1/2 and two -1/2 corners. Calibrated against the doubled
/// Morse divide, whose alternating diagram has c = 1 on the four digons and
/// c = -2 on the square.
pub fn compute_c(diagram: &LinkDiagramPresentation) -> BTreeMap<RegionId, i64> {
    let map = diagram.map();
    let mut twice_c: BTreeMap<RegionId, i64> =
        map.regions().iter().map(|r| (r.id, 0)).collect();
    for d in 0..map.dart_count() as u32 {
        let d = DartId(d);
        let contribution = if diagram.is_over(d) { -1 } else { 1 };
        *twice_c.get_mut(&map.left_of(d)).unwrap() += contribution;
    }
    twice_c
}

/// Sign of a crossing of the oriented diagram: +1 when the understrand
/// leaves the crossing one counterclockwise step after the overstrand.
pub fn crossing_sign(diagram: &LinkDiagramPresentation, v: CrossingId) -> i8 {
    let map = diagram.map();
    let darts = map.crossing_darts(v);
    let out = |pair: [DartId; 2]| -> DartId {
        let [a, b] = pair;
        if diagram.is_forward(a) {
            a
        } else {
            debug_assert!(diagram.is_forward(b));
            b
        }
    };
    let (over_pair, under_pair) = match diagram.over()[v.idx()] {
        OverPair::Slots02 => ([darts[0], darts[2]], [darts[1], darts[3]]),
        OverPair::Slots13 => ([darts[1], darts[3]], [darts[0], darts[2]]),
    };
    let o = out(over_pair);
    let u = out(under_pair);
    if map.sigma(o) == u {
        1
    } else {
        -1
    }
}

/// Gleam function: `2*gl(R)` on every internal region and only those.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GleamFunction {
    twice: BTreeMap<RegionId, i64>,
}

impl GleamFunction {
    /// Gleams listed per internal region in region-id order.
    pub fn from_internal_order(map: &DiskMap, twice: &[i64]) -> Result<Self, Error> {
        let internal: Vec<RegionId> = map.internal_regions().collect();
        if twice.len() != internal.len() {
            return Err(Error::GleamDomain {
                region: twice.len() as u32,
            });
        }
        Ok(Self {
            twice: internal.iter().copied().zip(twice.iter().copied()).collect(),
        })
    }

    pub fn from_map(map: &DiskMap, twice: BTreeMap<RegionId, i64>) -> Result<Self, Error> {
        for &r in twice.keys() {
            if !map.is_internal(r) || map.region(r).is_err() {
                return Err(Error::GleamDomain { region: r.0 });
            }
        }
        for r in map.internal_regions() {
            if !twice.contains_key(&r) {
                return Err(Error::GleamDomain { region: r.0 });
            }
        }
        Ok(Self { twice })
    }

    pub fn twice_gleam(&self, r: RegionId) -> Result<i64, Error> {
        self.twice
            .get(&r)
            .copied()
            .ok_or(Error::GleamDomain { region: r.0 })
    }

    pub fn iter(&self) -> impl Iterator<Item = (RegionId, i64)> + '_ {
        self.twice.iter().map(|(&r, &g)| (r, g))
    }
}

/// A link diagram presentation with gleams and optional labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowedPolyhedron {
    pub diagram: LinkDiagramPresentation,
    pub gleams: GleamFunction,
    labels: Option<Vec<Label>>,
}

impl ShadowedPolyhedron {
    pub fn new(
        diagram: LinkDiagramPresentation,
        gleams: GleamFunction,
        labels: Option<Vec<Label>>,
    ) -> Result<Self, Error> {
        if let Some(labels) = &labels {
            let map = diagram.map();
            if labels.len() != map.region_count() {
                return Err(Error::Schema(format!(
                    "{} labels for {} regions",
                    labels.len(),
                    map.region_count()
                )));
            }
            let outers = labels.iter().filter(|&&l| l == Label::Outer).count();
            if outers != 1 || labels[map.outer_region().idx()] != Label::Outer {
                return Err(Error::Schema(
                    "labels must mark exactly the outer region as outer".into(),
                ));
            }
        }
        Ok(Self {
            diagram,
            gleams,
            labels,
        })
    }

    pub fn map(&self) -> &DiskMap {
        self.diagram.map()
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, r: RegionId) -> Option<Label> {
        self.labels.as_ref().map(|l| l[r.idx()])
    }

    /// Same shadow with new gleams (for comparison experiments).
    pub fn with_gleams(&self, gleams: GleamFunction) -> Self {
        Self {
            diagram: self.diagram.clone(),
            gleams,
            labels: self.labels.clone(),
        }
    }

    /// Same shadow with different over/under data, gleams fixed.
    pub fn with_over(&self, over: Vec<OverPair>) -> Result<Self, Error> {
        Ok(Self {
            diagram: self.diagram.with_over(over)?,
            gleams: self.gleams.clone(),
            labels: self.labels.clone(),
        })
    }

    /// Same shadow with all component orientations reversed.
    pub fn reversed(&self) -> Self {
        Self {
            diagram: self.diagram.reversed(),
            gleams: self.gleams.clone(),
            labels: self.labels.clone(),
        }
    }
}

/// A subpolyhedron selection: the disk regions kept in Y. The annular
/// regions along the curve are always implicitly included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubSelection {
    pub regions: BTreeSet<RegionId>,
}

impl SubSelection {
    pub fn contains(&self, r: RegionId) -> bool {
        self.regions.contains(&r)
    }
}

/// Subpolyhedron presets named after the divide construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SelectionPreset {
    /// Everything except the region containing the disk boundary.
    Yabc,
    /// Closure of the a- and c-labeled regions: the regular fiber.
    Yac,
    /// `Yac` plus the square regions: the complexified arrangement.
    YaSquareC,
    /// An explicit region set.
    Custom(BTreeSet<RegionId>),
}

/// Non-fatal findings from selection construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SelectionWarning {
    OuterInCustomSelection,
}

/// Builds the region subset of a subpolyhedron. Presets require labels;
/// custom selections may include the outer region (the Y = X case) but this
/// is flagged with a warning.
pub fn select_regions(
    shadow: &ShadowedPolyhedron,
    preset: &SelectionPreset,
) -> Result<(SubSelection, Vec<SelectionWarning>), Error> {
    let map = shadow.map();
    let mut warnings = Vec::new();
    let regions = match preset {
        SelectionPreset::Custom(set) => {
            for &r in set {
                map.region(r)?;
            }
            if set.contains(&map.outer_region()) {
                warnings.push(SelectionWarning::OuterInCustomSelection);
            }
            set.clone()
        }
        preset => {
            let labels = shadow.labels().ok_or(Error::MissingLabels)?;
            let keep: &[Label] = match preset {
                SelectionPreset::Yabc => &[Label::A, Label::B, Label::C, Label::Chamber],
                SelectionPreset::Yac => &[Label::A, Label::C],
                SelectionPreset::YaSquareC => &[Label::A, Label::B, Label::C],
                SelectionPreset::Custom(_) => unreachable!(),
            };
            map.internal_regions()
                .filter(|r| keep.contains(&labels[r.idx()]))
                .collect()
        }
    };
    Ok((SubSelection { regions }, warnings))
}

/// All internal regions, without requiring labels.
pub fn select_all_internal(map: &DiskMap) -> SubSelection {
    SubSelection {
        regions: map.internal_regions().collect(),
    }
}

/// Checks that `gl(R) - c(R)` is an integer on every selected region, so the
/// conjugating words downstream have integer exponents.
pub fn validate_shadow(shadow: &ShadowedPolyhedron, selection: &SubSelection) -> Result<(), Error> {
    let twice_c = compute_c(&shadow.diagram);
    for &r in &selection.regions {
        if !shadow.map().is_internal(r) {
            continue;
        }
        let tg = shadow.gleams.twice_gleam(r)?;
        let tc = twice_c[&r];
        if (tg - tc).rem_euclid(2) != 0 {
            return Err(Error::HalfIntegerExponent {
                region: r.0,
                twice_gleam: tg,
                twice_c: tc,
            });
        }
    }
    Ok(())
}
