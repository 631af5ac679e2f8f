//! 4-valent planar combinatorial maps on the disk.
//!
//! A map is given by a rotation system: every crossing lists its four
//! incident darts in counterclockwise order, and a fixed-point-free
//! involution pairs darts into edges. Darts emanate from their crossing.
//! Faces are orbits of `sigma_inv . twin`; the face containing a dart in
//! its orbit is the region on the left of that dart, and internal regions
//! are traced counterclockwise. The embedding is purely combinatorial;
//! geometry appears only in the builders that produce crossing tables.


use crate::error::Error;

macro_rules! id_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
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

id_type!(
    /// A dart (half-edge) emanating from a crossing.
    DartId
);
id_type!(
    /// A crossing (4-valent vertex) of the immersed curve.
    CrossingId
);
id_type!(
    /// An unordered pair of twin darts.
    EdgeId
);
id_type!(
    /// A connected component of the disk minus the curve.
    RegionId
);
id_type!(
    /// An immersed circle component of the curve.
    ComponentId
);

/// A region of the disk map: the face on the left of each boundary dart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub id: RegionId,
    /// Boundary darts in traversal order (counterclockwise for internal
    /// regions), starting from the smallest dart id on the cycle.
    pub boundary: Vec<DartId>,
    pub is_outer: bool,
}

/// A validated 4-valent map of generically immersed closed curves on the
/// disk, with a marked outer region. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskMap {
    rotation: Vec<[DartId; 4]>,
    dart_crossing: Vec<CrossingId>,
    dart_slot: Vec<u8>,
    twin: Vec<DartId>,
    edges: Vec<[DartId; 2]>,
    dart_edge: Vec<EdgeId>,
    regions: Vec<Region>,
    dart_region: Vec<RegionId>,
    outer: RegionId,
    components: Vec<Vec<EdgeId>>,
    edge_component: Vec<ComponentId>,
}

/// Builds and validates a [`DiskMap`] from a crossing table.
///
/// `crossings[v]` lists the four darts at crossing `v` in counterclockwise
/// order; `twins` pairs darts into edges; the region on the left of
/// `outer_mark` becomes the outer region.
pub fn build_disk_map(
    crossings: &[Vec<u32>],
    twins: &[u32],
    outer_mark: u32,
) -> Result<DiskMap, Error> {
    if crossings.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    for (v, tuple) in crossings.iter().enumerate() {
        if tuple.len() != 4 {
            return Err(Error::NonQuadrivalent {
                crossing: v,
                arity: tuple.len(),
            });
        }
    }
    let n_darts = 4 * crossings.len();
    let mut seen = vec![false; n_darts];
    let mut rotation = Vec::with_capacity(crossings.len());
    let mut dart_crossing = vec![CrossingId(0); n_darts];
    let mut dart_slot = vec![0u8; n_darts];
    for (v, tuple) in crossings.iter().enumerate() {
        let mut row = [DartId(0); 4];
        for (slot, &d) in tuple.iter().enumerate() {
            if d as usize >= n_darts || seen[d as usize] {
                return Err(Error::InconsistentDarts { dart: d });
            }
            seen[d as usize] = true;
            row[slot] = DartId(d);
            dart_crossing[d as usize] = CrossingId(v as u32);
            dart_slot[d as usize] = slot as u8;
        }
        rotation.push(row);
    }

    if twins.len() != n_darts {
        return Err(Error::InconsistentDarts {
            dart: twins.len() as u32,
        });
    }
    let mut twin = vec![DartId(0); n_darts];
    for (d, &t) in twins.iter().enumerate() {
        if t as usize >= n_darts {
            return Err(Error::InconsistentDarts { dart: t });
        }
        if t as usize == d || twins[t as usize] as usize != d {
            return Err(Error::BrokenInvolution { dart: d as u32 });
        }
        twin[d] = DartId(t);
    }

    // Edges keyed by their smaller dart, in dart order.
    let mut edges = Vec::with_capacity(n_darts / 2);
    let mut dart_edge = vec![EdgeId(0); n_darts];
    for d in 0..n_darts {
        let t = twin[d].idx();
        if d < t {
            let e = EdgeId(edges.len() as u32);
            edges.push([DartId(d as u32), DartId(t as u32)]);
            dart_edge[d] = e;
            dart_edge[t] = e;
        }
    }

    // Connectivity of the 4-valent graph.
    let mut reached = vec![false; crossings.len()];
    let mut stack = vec![0usize];
    reached[0] = true;
    while let Some(v) = stack.pop() {
        for &d in &rotation[v] {
            let w = dart_crossing[twin[d.idx()].idx()].idx();
            if !reached[w] {
                reached[w] = true;
                stack.push(w);
            }
        }
    }
    if reached.iter().any(|&r| !r) {
        return Err(Error::DisconnectedCurve);
    }

    // Face tracing: orbits of d -> sigma_inv(twin(d)); the orbit of d is
    // the region on the left of d, traced counterclockwise when internal.
    let sigma_inv = |d: DartId| -> DartId {
        let v = dart_crossing[d.idx()].idx();
        let slot = dart_slot[d.idx()] as usize;
        rotation[v][(slot + 3) % 4]
    };
    let mut dart_region = vec![RegionId(u32::MAX); n_darts];
    let mut regions = Vec::new();
    for start in 0..n_darts {
        if dart_region[start].0 != u32::MAX {
            continue;
        }
        let id = RegionId(regions.len() as u32);
        let mut boundary = Vec::new();
        let mut d = DartId(start as u32);
        loop {
            dart_region[d.idx()] = id;
            boundary.push(d);
            d = sigma_inv(twin[d.idx()]);
            if d.idx() == start {
                break;
            }
        }
        regions.push(Region {
            id,
            boundary,
            is_outer: false,
        });
    }

    let v = crossings.len();
    let e = edges.len();
    let f = regions.len();
    if v + f != e + 2 {
        return Err(Error::EulerMismatch { v, e, f });
    }

    if outer_mark as usize >= n_darts {
        return Err(Error::UnknownDart { dart: outer_mark });
    }
    let outer = dart_region[outer_mark as usize];
    regions[outer.idx()].is_outer = true;

    // Immersed circle components: follow each curve straight through
    // crossings (opposite dart in the rotation).
    let mut edge_component = vec![ComponentId(u32::MAX); e];
    let mut components = Vec::new();
    for e0 in 0..e {
        if edge_component[e0].0 != u32::MAX {
            continue;
        }
        let cid = ComponentId(components.len() as u32);
        let mut cycle = Vec::new();
        // Travel in the direction of the smaller dart of e0.
        let mut d = edges[e0][0];
        loop {
            let eid = dart_edge[d.idx()];
            if edge_component[eid.idx()].0 != u32::MAX {
                break;
            }
            edge_component[eid.idx()] = cid;
            cycle.push(eid);
            // Arrive at the head crossing and continue on the opposite dart.
            let arrive = twin[d.idx()];
            let vtx = dart_crossing[arrive.idx()].idx();
            let slot = dart_slot[arrive.idx()] as usize;
            d = rotation[vtx][(slot + 2) % 4];
        }
        components.push(cycle);
    }

    Ok(DiskMap {
        rotation,
        dart_crossing,
        dart_slot,
        twin,
        edges,
        dart_edge,
        regions,
        dart_region,
        outer,
        components,
        edge_component,
    })
}

impl DiskMap {
    pub fn crossing_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn region_count(&self) -> usize {
        self.regions.len()
    }

    pub fn internal_region_count(&self) -> usize {
        self.regions.len() - 1
    }

    fn check_dart(&self, d: DartId) -> Result<(), Error> {
        if d.idx() >= self.twin.len() {
            Err(Error::UnknownDart { dart: d.0 })
        } else {
            Ok(())
        }
    }

    /// Counterclockwise-next dart at the same crossing.
    pub fn sigma(&self, d: DartId) -> DartId {
        let v = self.dart_crossing[d.idx()].idx();
        let slot = self.dart_slot[d.idx()] as usize;
        self.rotation[v][(slot + 1) % 4]
    }

    pub fn sigma_inv(&self, d: DartId) -> DartId {
        let v = self.dart_crossing[d.idx()].idx();
        let slot = self.dart_slot[d.idx()] as usize;
        self.rotation[v][(slot + 3) % 4]
    }

    /// The dart opposite `d` at its crossing: the other end of the strand
    /// branch passing straight through.
    pub fn opposite(&self, d: DartId) -> DartId {
        let v = self.dart_crossing[d.idx()].idx();
        let slot = self.dart_slot[d.idx()] as usize;
        self.rotation[v][(slot + 2) % 4]
    }

    pub fn twin(&self, d: DartId) -> DartId {
        self.twin[d.idx()]
    }

    pub fn crossing_of(&self, d: DartId) -> CrossingId {
        self.dart_crossing[d.idx()]
    }

    pub fn slot_of(&self, d: DartId) -> u8 {
        self.dart_slot[d.idx()]
    }

    pub fn edge_of(&self, d: DartId) -> EdgeId {
        self.dart_edge[d.idx()]
    }

    /// The two darts of an edge, smaller first.
    pub fn edge_darts(&self, e: EdgeId) -> [DartId; 2] {
        self.edges[e.idx()]
    }

    /// Darts at a crossing in counterclockwise order.
    pub fn crossing_darts(&self, v: CrossingId) -> [DartId; 4] {
        self.rotation[v.idx()]
    }

    /// The region on the left of `d` (walking from its crossing outward).
    pub fn left_region(&self, d: DartId) -> Result<RegionId, Error> {
        self.check_dart(d)?;
        Ok(self.dart_region[d.idx()])
    }

    /// Infallible variant for internal use with known-good darts.
    pub fn left_of(&self, d: DartId) -> RegionId {
        self.dart_region[d.idx()]
    }

    pub fn right_of(&self, d: DartId) -> RegionId {
        self.dart_region[self.twin[d.idx()].idx()]
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn region(&self, r: RegionId) -> Result<&Region, Error> {
        self.regions
            .get(r.idx())
            .ok_or(Error::UnknownRegion { region: r.0 })
    }

    pub fn outer_region(&self) -> RegionId {
        self.outer
    }

    pub fn is_internal(&self, r: RegionId) -> bool {
        r != self.outer
    }

    pub fn internal_regions(&self) -> impl Iterator<Item = RegionId> + '_ {
        let outer = self.outer;
        self.regions
            .iter()
            .map(|r| r.id)
            .filter(move |&r| r != outer)
    }

    pub fn components(&self) -> &[Vec<EdgeId>] {
        &self.components
    }

    pub fn component_of_edge(&self, e: EdgeId) -> ComponentId {
        self.edge_component[e.idx()]
    }

    /// The two regions on either side of an edge.
    pub fn edge_regions(&self, e: EdgeId) -> [RegionId; 2] {
        let [d, t] = self.edges[e.idx()];
        [self.left_of(d), self.left_of(t)]
    }

    /// The edge between two regions with the smallest id, if any.
    pub fn shared_edge(&self, a: RegionId, b: RegionId) -> Option<EdgeId> {
        (0..self.edges.len()).map(|i| EdgeId(i as u32)).find(|&e| {
            let [x, y] = self.edge_regions(e);
            (x, y) == (a, b) || (x, y) == (b, a)
        })
    }

    /// Serializes back to the crossing-table form accepted by
    /// [`build_disk_map`].
    pub fn to_crossing_table(&self) -> (Vec<Vec<u32>>, Vec<u32>, u32) {
        let crossings = self
            .rotation
            .iter()
            .map(|row| row.iter().map(|d| d.0).collect())
            .collect();
        let twins = self.twin.iter().map(|d| d.0).collect();
        let outer_mark = self.regions[self.outer.idx()].boundary[0].0;
        (crossings, twins, outer_mark)
    }
}

/// Region list of a validated map. Regions carry deterministic ids ordered
/// by their smallest boundary dart.
pub fn trace_regions(map: &DiskMap) -> Vec<Region> {
    map.regions.to_vec()
}
