//! Systems of cutting trees, modelled as rooted spanning trees of the
//! region-adjacency dual graph.
//!
//! Every internal region gets exactly one parent link crossing one diagram
//! edge shared with the parent region; links form a forest rooted at the
//! outer region. By planar tree/cotree duality the uncrossed edges then form
//! a spanning tree of the 4-valent graph, which is exactly the condition
//! that the curve minus the cutting points is simply connected.
//!
//! [`analyze`] derives everything the presentation engine needs: strand
//! classes (maximal over-passing runs cut at undercrossings and cutting
//! points), region pieces between consecutive tree attachments, the
//! forward/backward strands at each cutting point, and the counterclockwise
//! subtree ordering.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::planar::{CrossingId, DartId, DiskMap, EdgeId, RegionId};
use crate::shadow::LinkDiagramPresentation;

macro_rules! id_like {
    ($name:ident) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub u32);
        impl $name {
            pub fn idx(self) -> usize {
                self.0 as usize
            }
        }
        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

id_like!(StrandId);

/// A system of cutting trees: one crossed edge per internal region, plus the
/// set of single-edge trees marked as removed for reduced systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuttingSystem {
    links: BTreeMap<RegionId, EdgeId>,
    removed: BTreeSet<RegionId>,
}

impl CuttingSystem {
    /// Builds from (region, crossed edge) pairs. Duplicate regions are
    /// rejected here; geometric validity is checked by [`validate_cut`].
    pub fn from_links(map: &DiskMap, pairs: &[(RegionId, EdgeId)]) -> Result<Self, Error> {
        let mut links = BTreeMap::new();
        for &(r, e) in pairs {
            map.region(r)?;
            if !map.is_internal(r) || links.insert(r, e).is_some() {
                return Err(Error::NotAForest { region: r.0 });
            }
        }
        Ok(Self {
            links,
            removed: BTreeSet::new(),
        })
    }

    pub fn links(&self) -> impl Iterator<Item = (RegionId, EdgeId)> + '_ {
        self.links.iter().map(|(&r, &e)| (r, e))
    }

    pub fn crossed_edge(&self, r: RegionId) -> Option<EdgeId> {
        self.links.get(&r).copied()
    }

    pub fn removed(&self) -> &BTreeSet<RegionId> {
        &self.removed
    }

    pub fn is_removed(&self, r: RegionId) -> bool {
        self.removed.contains(&r)
    }

    /// Parent region: the other side of the crossed edge.
    pub fn parent(&self, map: &DiskMap, r: RegionId) -> Option<RegionId> {
        let e = self.crossed_edge(r)?;
        let [a, b] = map.edge_regions(e);
        Some(if a == r { b } else { a })
    }

    /// Edges crossed by the surviving trees.
    pub fn crossed_edges(&self) -> BTreeSet<EdgeId> {
        self.links
            .iter()
            .filter(|(r, _)| !self.removed.contains(r))
            .map(|(_, &e)| e)
            .collect()
    }

    /// Cutting points of the surviving trees, one per non-removed internal
    /// region.
    pub fn cutting_point_count(&self) -> usize {
        self.links.len() - self.removed.len()
    }
}

/// Breadth-first spanning tree of the region dual graph rooted at the outer
/// region. Seed 0 prefers the lowest edge id; other seeds permute the edge
/// priorities deterministically.
pub fn auto_cut(map: &DiskMap, seed: u64) -> Result<CuttingSystem, Error> {
    let mut priority: Vec<u32> = (0..map.edge_count() as u32).collect();
    if seed != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        priority.shuffle(&mut rng);
    }

    let mut links = BTreeMap::new();
    let mut visited = BTreeSet::from([map.outer_region()]);
    let mut frontier = std::collections::VecDeque::from([map.outer_region()]);
    while let Some(region) = frontier.pop_front() {
        let mut exits: Vec<EdgeId> = map.regions()[region.idx()]
            .boundary
            .iter()
            .map(|&d| map.edge_of(d))
            .collect();
        exits.sort_by_key(|&e| priority[e.idx()]);
        for e in exits {
            let [a, b] = map.edge_regions(e);
            let other = if a == region { b } else { a };
            if visited.insert(other) {
                links.insert(other, e);
                frontier.push_back(other);
            }
        }
    }
    let cs = CuttingSystem {
        links,
        removed: BTreeSet::new(),
    };
    validate_cut(map, &cs)?;
    Ok(cs)
}

/// Checks the defining conditions of a system of cutting trees.
pub fn validate_cut(map: &DiskMap, cs: &CuttingSystem) -> Result<(), Error> {
    // Every internal region carries exactly one tree vertex.
    for r in map.internal_regions() {
        if !cs.links.contains_key(&r) {
            return Err(Error::RegionWithoutVertex { region: r.0 });
        }
    }
    // Each link crosses an edge on the child's own boundary.
    for (&r, &e) in &cs.links {
        if e.idx() >= map.edge_count() {
            return Err(Error::EdgeNotOnSharedBoundary {
                region: r.0,
                edge: e.0,
            });
        }
        let [a, b] = map.edge_regions(e);
        if a != r && b != r {
            return Err(Error::EdgeNotOnSharedBoundary {
                region: r.0,
                edge: e.0,
            });
        }
    }
    // Parent links form a forest rooted at the outer region.
    for r in map.internal_regions() {
        let mut cur = r;
        let mut hops = 0usize;
        loop {
            match cs.parent(map, cur) {
                None => break,
                Some(p) if !map.is_internal(p) => break,
                Some(p) => {
                    cur = p;
                    hops += 1;
                    if hops > map.region_count() {
                        return Err(Error::NotAForest { region: r.0 });
                    }
                }
            }
        }
    }
    // Distinct crossed edges; two regions crossing one edge close a dual
    // cycle.
    let crossed: BTreeSet<EdgeId> = cs.links.values().copied().collect();
    if crossed.len() != cs.links.len() {
        return Err(Error::NotAForest {
            region: cs.links.keys().next().map_or(0, |r| r.0),
        });
    }
    // The uncrossed edges form a spanning tree of the 4-valent graph,
    // checked with union-find.
    let v = map.crossing_count();
    let mut parent: Vec<usize> = (0..v).collect();
    let mut merged = 0usize;
    for e in 0..map.edge_count() as u32 {
        let e = EdgeId(e);
        if crossed.contains(&e) {
            continue;
        }
        let [d, t] = map.edge_darts(e);
        let a = uf_find(&mut parent, map.crossing_of(d).idx());
        let b = uf_find(&mut parent, map.crossing_of(t).idx());
        if a == b {
            return Err(Error::ComplementNotSpanningTree);
        }
        parent[a] = b;
        merged += 1;
    }
    if merged != v - 1 {
        return Err(Error::ComplementNotSpanningTree);
    }
    Ok(())
}

fn uf_find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Marks as removed every tree meeting the curve exactly once: the trees
/// consisting of one edge from the outer region to a childless region.
pub fn reduce_system(map: &DiskMap, cs: &CuttingSystem) -> CuttingSystem {
    let outer = map.outer_region();
    let has_children: BTreeSet<RegionId> = map
        .internal_regions()
        .filter_map(|r| {
            let p = cs.parent(map, r)?;
            map.is_internal(p).then_some(p)
        })
        .collect();
    let removed = map
        .internal_regions()
        .filter(|&r| cs.parent(map, r) == Some(outer) && !has_children.contains(&r))
        .collect();
    CuttingSystem {
        links: cs.links.clone(),
        removed,
    }
}

/// Which part of an edge an atom occupies. Halves are named relative to the
/// edge's forward dart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Half {
    Whole,
    Tail,
    Head,
}

/// An arc of the diagram minus the cutting points, before gluing across
/// overcrossings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Atom {
    pub edge: EdgeId,
    pub half: Half,
}

/// A piece of a region cut off between two consecutive tree attachments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Piece {
    pub region: RegionId,
    pub index: u32,
}

/// A strand class: a maximal run of atoms glued across crossings where the
/// run passes over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandClass {
    pub id: StrandId,
    pub atoms: Vec<Atom>,
}

/// One tree-edge attachment on a region boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Attachment {
    pub edge: EdgeId,
    /// The dart of `edge` whose left region is the attachment's region.
    pub dart: DartId,
    /// Position of that dart in the region's boundary cycle.
    pub pos: usize,
    /// `Some(child)` when the link is the parent link of `child` hanging
    /// off this region; `None` when it is this region's own parent link.
    pub child: Option<RegionId>,
}

/// Cutting point data for one internal region. Walking the region boundary
/// counterclockwise through the cutting point, the half entered first is
/// the backward strand and the half after it the forward strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutPoint {
    pub region: RegionId,
    pub edge: EdgeId,
    pub backward_atom: Atom,
    pub forward_atom: Atom,
    /// The piece of the region adjacent to the forward strand at the
    /// cutting point.
    pub forward_piece: Piece,
}

/// Everything derived from a diagram and a cutting system that the
/// presentation engine consumes.
#[derive(Debug, Clone)]
pub struct CutAnalysis {
    attachments: BTreeMap<RegionId, Vec<Attachment>>,
    piece_count: BTreeMap<RegionId, u32>,
    piece_whole: BTreeMap<DartId, u32>,
    piece_first: BTreeMap<DartId, u32>,
    piece_second: BTreeMap<DartId, u32>,
    strands: Vec<StrandClass>,
    strand_of: BTreeMap<Atom, StrandId>,
    cut_points: BTreeMap<RegionId, CutPoint>,
    crossed: BTreeSet<EdgeId>,
}

impl CutAnalysis {
    pub fn strands(&self) -> &[StrandClass] {
        &self.strands
    }

    pub fn strand_of(&self, atom: Atom) -> StrandId {
        self.strand_of[&atom]
    }

    pub fn piece_count(&self, r: RegionId) -> u32 {
        self.piece_count[&r]
    }

    pub fn pieces(&self) -> Vec<Piece> {
        self.piece_count
            .iter()
            .flat_map(|(&region, &n)| (0..n).map(move |index| Piece { region, index }))
            .collect()
    }

    pub fn attachments(&self, r: RegionId) -> &[Attachment] {
        &self.attachments[&r]
    }

    pub fn cut_points(&self) -> impl Iterator<Item = &CutPoint> {
        self.cut_points.values()
    }

    pub fn cut_point(&self, r: RegionId) -> Option<&CutPoint> {
        self.cut_points.get(&r)
    }

    pub fn is_crossed(&self, e: EdgeId) -> bool {
        self.crossed.contains(&e)
    }

    /// Piece of the region left of `d` along the whole (uncrossed) edge.
    pub fn piece_left_of_whole(&self, d: DartId) -> u32 {
        self.piece_whole[&d]
    }

    /// Piece of the region left of `d` along the half of the edge nearest
    /// the tail of `d` (entered before the cutting point).
    pub fn piece_left_of_first_half(&self, d: DartId) -> u32 {
        self.piece_first[&d]
    }

    pub fn piece_left_of_second_half(&self, d: DartId) -> u32 {
        self.piece_second[&d]
    }

    fn parent_attachment_index(&self, r: RegionId) -> usize {
        self.attachments[&r]
            .iter()
            .position(|a| a.child.is_none())
            .expect("internal region has a parent attachment")
    }

    /// Regions of the subtree beyond the cutting point of `root`, ordered by
    /// first visit of the counterclockwise boundary walk of a neighborhood
    /// of the subtree, started just past the cutting point. The root is
    /// always first.
    ///
    /// The walk is a preorder traversal that takes the children of each
    /// region in counterclockwise attachment order after the entry edge.
    pub fn subtree_regions_ccw(&self, root: RegionId) -> Vec<RegionId> {
        let mut order = Vec::new();
        let mut stack = vec![(root, self.parent_attachment_index(root))];
        while let Some((region, entry)) = stack.pop() {
            order.push(region);
            let atts = &self.attachments[&region];
            let k = atts.len();
            let children: Vec<RegionId> = (1..k)
                .map(|i| atts[(entry + i) % k])
                .filter_map(|a| a.child)
                .collect();
            for c in children.into_iter().rev() {
                stack.push((c, self.parent_attachment_index(c)));
            }
        }
        order
    }
}

/// The atom of `edge(d)` adjacent to the tail of `d`.
fn atom_near_tail(
    diagram: &LinkDiagramPresentation,
    crossed: &BTreeSet<EdgeId>,
    d: DartId,
) -> Atom {
    let edge = diagram.map().edge_of(d);
    if !crossed.contains(&edge) {
        Atom {
            edge,
            half: Half::Whole,
        }
    } else if diagram.forward(edge) == d {
        Atom {
            edge,
            half: Half::Tail,
        }
    } else {
        Atom {
            edge,
            half: Half::Head,
        }
    }
}

fn atom_near_head(
    diagram: &LinkDiagramPresentation,
    crossed: &BTreeSet<EdgeId>,
    d: DartId,
) -> Atom {
    atom_near_tail(diagram, crossed, diagram.map().twin(d))
}

/// Strand classes for a given set of cut edges: atoms glued across every
/// crossing along the over branch. With no cut edges these are the
/// classical diagram arcs.
pub(crate) fn strand_classes(
    diagram: &LinkDiagramPresentation,
    crossed: &BTreeSet<EdgeId>,
) -> (Vec<StrandClass>, BTreeMap<Atom, StrandId>) {
    let map = diagram.map();
    let mut atoms: Vec<Atom> = Vec::new();
    for e in 0..map.edge_count() as u32 {
        let e = EdgeId(e);
        if crossed.contains(&e) {
            atoms.push(Atom {
                edge: e,
                half: Half::Tail,
            });
            atoms.push(Atom {
                edge: e,
                half: Half::Head,
            });
        } else {
            atoms.push(Atom {
                edge: e,
                half: Half::Whole,
            });
        }
    }
    let index: BTreeMap<Atom, usize> = atoms.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let mut uf: Vec<usize> = (0..atoms.len()).collect();
    for v in 0..map.crossing_count() as u32 {
        for d in map.crossing_darts(CrossingId(v)) {
            if !diagram.is_over(d) {
                continue;
            }
            let partner = map.opposite(d);
            let a = uf_find(&mut uf, index[&atom_near_tail(diagram, crossed, d)]);
            let b = uf_find(&mut uf, index[&atom_near_tail(diagram, crossed, partner)]);
            if a != b {
                uf[a] = b;
            }
        }
    }
    let mut class_atoms: BTreeMap<usize, Vec<Atom>> = BTreeMap::new();
    for (i, &a) in atoms.iter().enumerate() {
        class_atoms.entry(uf_find(&mut uf, i)).or_default().push(a);
    }
    let mut classes: Vec<Vec<Atom>> = class_atoms.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    let mut strands = Vec::with_capacity(classes.len());
    let mut strand_of = BTreeMap::new();
    for (i, atoms) in classes.into_iter().enumerate() {
        let id = StrandId(i as u32);
        for &a in &atoms {
            strand_of.insert(a, id);
        }
        strands.push(StrandClass { id, atoms });
    }
    (strands, strand_of)
}

/// Derives strand classes, pieces, attachments and cutting points for a
/// diagram with a (possibly reduced) cutting system.
pub fn analyze(
    diagram: &LinkDiagramPresentation,
    cs: &CuttingSystem,
) -> Result<CutAnalysis, Error> {
    let map = diagram.map();
    validate_cut(map, cs)?;
    let crossed = cs.crossed_edges();

    let mut child_of_edge: BTreeMap<EdgeId, RegionId> = BTreeMap::new();
    for (r, e) in cs.links() {
        if !cs.is_removed(r) {
            child_of_edge.insert(e, r);
        }
    }

    // Attachments per region, in boundary-cycle order.
    let mut attachments: BTreeMap<RegionId, Vec<Attachment>> = BTreeMap::new();
    for region in map.regions() {
        let mut list = Vec::new();
        for (pos, &d) in region.boundary.iter().enumerate() {
            let edge = map.edge_of(d);
            if let Some(&c) = child_of_edge.get(&edge) {
                let child = if c == region.id { None } else { Some(c) };
                list.push(Attachment {
                    edge,
                    dart: d,
                    pos,
                    child,
                });
            }
        }
        attachments.insert(region.id, list);
    }

    // Pieces between consecutive attachments: piece j starts at the cutting
    // point on attachment j and runs counterclockwise to attachment j+1.
    let mut piece_count = BTreeMap::new();
    let mut piece_whole = BTreeMap::new();
    let mut piece_first = BTreeMap::new();
    let mut piece_second = BTreeMap::new();
    for region in map.regions() {
        let atts = &attachments[&region.id];
        let m = atts.len();
        piece_count.insert(region.id, m.max(1) as u32);
        if m == 0 {
            for &d in &region.boundary {
                piece_whole.insert(d, 0);
            }
            continue;
        }
        let n = region.boundary.len();
        let start = atts[0].pos;
        let mut next_att = 0usize;
        let mut current = m - 1;
        for step in 0..n {
            let pos = (start + step) % n;
            let d = region.boundary[pos];
            if next_att < m && atts[next_att].pos == pos {
                piece_first.insert(d, current as u32);
                current = next_att;
                piece_second.insert(d, current as u32);
                next_att += 1;
            } else {
                piece_whole.insert(d, current as u32);
            }
        }
    }

    let (strands, strand_of) = strand_classes(diagram, &crossed);

    // Cutting points, keyed by their region.
    let mut cut_points = BTreeMap::new();
    for (&edge, &region) in &child_of_edge {
        let [d0, d1] = map.edge_darts(edge);
        let d = if map.left_of(d0) == region { d0 } else { d1 };
        debug_assert_eq!(map.left_of(d), region);
        let backward_atom = atom_near_tail(diagram, &crossed, d);
        let forward_atom = atom_near_head(diagram, &crossed, d);
        let forward_piece = Piece {
            region,
            index: piece_second[&d],
        };
        cut_points.insert(
            region,
            CutPoint {
                region,
                edge,
                backward_atom,
                forward_atom,
                forward_piece,
            },
        );
    }

    Ok(CutAnalysis {
        attachments,
        piece_count,
        piece_whole,
        piece_first,
        piece_second,
        strands,
        strand_of,
        cut_points,
        crossed,
    })
}

/// The counterclockwise subtree ordering used by the conjugating words;
/// convenience wrapper over [`analyze`].
pub fn subtree_regions_ccw(
    diagram: &LinkDiagramPresentation,
    cs: &CuttingSystem,
    region: RegionId,
) -> Result<Vec<RegionId>, Error> {
    Ok(analyze(diagram, cs)?.subtree_regions_ccw(region))
}

/// Forward and backward atoms at the cutting point of `region`.
pub fn forward_backward(
    diagram: &LinkDiagramPresentation,
    cs: &CuttingSystem,
    region: RegionId,
) -> Result<(Atom, Atom), Error> {
    let analysis = analyze(diagram, cs)?;
    let cp = analysis
        .cut_point(region)
        .ok_or(Error::RegionWithoutVertex { region: region.0 })?;
    Ok((cp.forward_atom, cp.backward_atom))
}

/// Strand classes of the diagram cut along the system.
pub fn strands_mod_a(
    diagram: &LinkDiagramPresentation,
    cs: &CuttingSystem,
) -> Result<Vec<StrandClass>, Error> {
    Ok(analyze(diagram, cs)?.strands().to_vec())
}

/// Region pieces plus the forward piece at each cutting point.
pub fn region_pieces(
    diagram: &LinkDiagramPresentation,
    cs: &CuttingSystem,
) -> Result<(Vec<Piece>, BTreeMap<RegionId, Piece>), Error> {
    let analysis = analyze(diagram, cs)?;
    let forward = analysis
        .cut_points()
        .map(|cp| (cp.region, cp.forward_piece))
        .collect();
    Ok((analysis.pieces(), forward))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use crate::shadow::OverPair;

    fn any_diagram(map: DiskMap) -> LinkDiagramPresentation {
        let over = vec![OverPair::Slots02; map.crossing_count()];
        LinkDiagramPresentation::with_default_orientation(map, over).unwrap()
    }

    #[test]
    fn auto_cut_counts() {
        let fig8 = samples::figure_eight();
        let cs = auto_cut(&fig8, 0).unwrap();
        assert_eq!(cs.cutting_point_count(), 2);

        let fig15 = samples::fig15_curve();
        let cs = auto_cut(&fig15, 0).unwrap();
        assert_eq!(cs.cutting_point_count(), 5);
    }

    #[test]
    fn auto_cut_validates_across_seeds() {
        for map in samples::catalog() {
            for seed in 0..6 {
                let cs = auto_cut(&map, seed).unwrap();
                validate_cut(&map, &cs).unwrap();
                assert_eq!(cs.cutting_point_count(), map.crossing_count() + 1);
            }
        }
    }

    #[test]
    fn bad_systems_rejected() {
        let map = samples::fig15_curve();
        let good = auto_cut(&map, 0).unwrap();
        let links: Vec<_> = good.links().collect();

        // Duplicate region.
        let mut dup = links.clone();
        dup.push(links[0]);
        assert!(matches!(
            CuttingSystem::from_links(&map, &dup),
            Err(Error::NotAForest { .. })
        ));

        // Edge not on the region's boundary.
        let mut wrong = links.clone();
        let r0 = wrong[0].0;
        let bad_edge = (0..map.edge_count() as u32)
            .map(EdgeId)
            .find(|&e| {
                let [a, b] = map.edge_regions(e);
                a != r0 && b != r0
            })
            .unwrap();
        wrong[0].1 = bad_edge;
        let cs = CuttingSystem::from_links(&map, &wrong).unwrap();
        assert!(matches!(
            validate_cut(&map, &cs),
            Err(Error::EdgeNotOnSharedBoundary { .. })
        ));

        // Missing region.
        let partial = CuttingSystem::from_links(&map, &links[1..]).unwrap();
        assert!(matches!(
            validate_cut(&map, &partial),
            Err(Error::RegionWithoutVertex { .. })
        ));

        // Two regions crossing the same edge close a dual cycle.
        let square = map
            .internal_regions()
            .find(|r| map.regions()[r.idx()].boundary.len() == 4)
            .unwrap();
        let digon = map
            .internal_regions()
            .find(|r| map.shared_edge(square, *r).is_some() && map.is_internal(*r) && *r != square)
            .unwrap();
        let shared = map.shared_edge(square, digon).unwrap();
        let mut cyclic: Vec<(RegionId, EdgeId)> = links.clone();
        for l in cyclic.iter_mut() {
            if l.0 == square || l.0 == digon {
                l.1 = shared;
            }
        }
        let cs = CuttingSystem::from_links(&map, &cyclic).unwrap();
        assert!(validate_cut(&map, &cs).is_err());
    }

    #[test]
    fn reduce_removes_single_edge_trees() {
        let map = samples::fig15_curve();
        let cs = samples::fig15_path_cut(&map);
        let reduced = reduce_system(&map, &cs);
        // Three childless digons hang directly off the outer region; the
        // path through the fourth digon to the square survives.
        assert_eq!(reduced.removed().len(), 3);
        assert_eq!(reduced.cutting_point_count(), 2);

        // A system with no single-edge trees reduces to itself.
        let again = reduce_system(&map, &reduced);
        assert_eq!(again.removed(), reduced.removed());
    }

    #[test]
    fn leaf_subtree_is_singleton() {
        let diagram = any_diagram(samples::fig15_curve());
        let cs = samples::fig15_path_cut(diagram.map());
        let analysis = analyze(&diagram, &cs).unwrap();
        let square = diagram
            .map()
            .internal_regions()
            .find(|r| diagram.map().regions()[r.idx()].boundary.len() == 4)
            .unwrap();
        assert_eq!(analysis.subtree_regions_ccw(square), vec![square]);
    }

    #[test]
    fn path_subtree_orders_root_to_leaf() {
        // Chain of three closed curves: the dual tree is the path
        // outer - Ao - AB - Bo - BC - Co, so the subtree walk from Ao must
        // visit the five regions in path order (the hand-traced contour of
        // a path-shaped tree).
        let diagram = any_diagram(samples::chain_three());
        let map = diagram.map();
        let path = samples::chain_three_path_cut(map);
        validate_cut(map, &path).unwrap();
        let analysis = analyze(&diagram, &path).unwrap();
        let first = samples::chain_three_first_region(map);
        let mut expected = vec![first];
        loop {
            let last = *expected.last().unwrap();
            match map
                .internal_regions()
                .find(|&r| path.parent(map, r) == Some(last))
            {
                Some(r) => expected.push(r),
                None => break,
            }
        }
        assert_eq!(expected.len(), 5);
        assert_eq!(analysis.subtree_regions_ccw(first), expected);
    }

    #[test]
    fn subtree_visits_each_region_once_rooted_first() {
        for map in samples::catalog() {
            let diagram = any_diagram(map);
            for seed in 0..4 {
                let cs = auto_cut(diagram.map(), seed).unwrap();
                let analysis = analyze(&diagram, &cs).unwrap();
                for r in diagram.map().internal_regions() {
                    let order = analysis.subtree_regions_ccw(r);
                    assert_eq!(order[0], r);
                    let set: BTreeSet<_> = order.iter().collect();
                    assert_eq!(set.len(), order.len());
                    for &s in &order {
                        let mut cur = s;
                        let mut found = s == r;
                        while let Some(p) = cs.parent(diagram.map(), cur) {
                            if !diagram.map().is_internal(p) {
                                break;
                            }
                            if p == r {
                                found = true;
                            }
                            cur = p;
                        }
                        assert!(found, "{s} not under {r}");
                    }
                }
            }
        }
    }

    #[test]
    fn figure_eight_strand_count() {
        let diagram = any_diagram(samples::figure_eight());
        let cs = auto_cut(diagram.map(), 0).unwrap();
        let strands = strands_mod_a(&diagram, &cs).unwrap();
        // Both lobes are cut into two halves; the over branch glues one
        // pair, the under branch leaves the other two halves separate.
        assert_eq!(strands.len(), 3);
        let atom_total: usize = strands.iter().map(|s| s.atoms.len()).sum();
        assert_eq!(atom_total, 4);
    }

    #[test]
    fn piece_counts_match_tree_degrees() {
        for map in samples::catalog() {
            let diagram = any_diagram(map);
            for seed in 0..4 {
                let cs = auto_cut(diagram.map(), seed).unwrap();
                let analysis = analyze(&diagram, &cs).unwrap();
                let map = diagram.map();
                let mut degree: BTreeMap<RegionId, u32> =
                    map.regions().iter().map(|r| (r.id, 0)).collect();
                for (r, e) in cs.links() {
                    *degree.get_mut(&r).unwrap() += 1;
                    let [a, b] = map.edge_regions(e);
                    let p = if a == r { b } else { a };
                    *degree.get_mut(&p).unwrap() += 1;
                }
                let mut total = 0;
                for region in map.regions() {
                    let expect = degree[&region.id].max(1);
                    assert_eq!(analysis.piece_count(region.id), expect);
                    total += expect;
                }
                assert_eq!(analysis.pieces().len() as u32, total);
                for cp in analysis.cut_points() {
                    if degree[&cp.region] == 1 {
                        assert_eq!(analysis.piece_count(cp.region), 1);
                        assert_eq!(cp.forward_piece.index, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn forward_backward_ignores_curve_orientation() {
        let diagram = any_diagram(samples::fig15_curve());
        let cs = samples::fig15_path_cut(diagram.map());
        let reversed = diagram.reversed();
        // Halves are named relative to forward darts, so reversal renames
        // Tail and Head; the geometric halves must be unchanged.
        let flip = |a: Atom| Atom {
            edge: a.edge,
            half: match a.half {
                Half::Whole => Half::Whole,
                Half::Tail => Half::Head,
                Half::Head => Half::Tail,
            },
        };
        let fwd = analyze(&diagram, &cs).unwrap();
        let rev = analyze(&reversed, &cs).unwrap();
        for r in diagram.map().internal_regions() {
            let cp = fwd.cut_point(r).unwrap();
            let cr = rev.cut_point(r).unwrap();
            assert_eq!(flip(cp.forward_atom), cr.forward_atom);
            assert_eq!(flip(cp.backward_atom), cr.backward_atom);
        }
    }

    #[test]
    fn uncut_strand_classes_are_wirtinger_arcs() {
        for map in samples::catalog() {
            let diagram = any_diagram(map);
            let (strands, _) = strand_classes(&diagram, &BTreeSet::new());
            // Classical arc count: one arc per undercrossing passage on
            // each component, except crossing-free components (none here);
            // an all-over component contributes one closed arc.
            let map = diagram.map();
            let mut under_breaks = 0usize;
            let mut unbroken_components = 0usize;
            for comp in map.components() {
                let mut breaks = 0;
                for &e in comp {
                    let d = diagram.forward(e);
                    // The strand breaks where it enters a crossing on the
                    // under branch.
                    let arrive = map.twin(d);
                    if !diagram.is_over(arrive) {
                        breaks += 1;
                    }
                }
                if breaks == 0 {
                    unbroken_components += 1;
                } else {
                    under_breaks += breaks;
                }
            }
            assert_eq!(strands.len(), under_breaks + unbroken_components);
        }
    }
}
