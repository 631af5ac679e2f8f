//! Geometric ingestion of divides and real line arrangements with exact
//! rational arithmetic, and the combinatorial doubling construction that
//! turns a divide into a labeled, gleamed shadow.
//!
//! All genericity predicates (transverse double points, distinctness,
//! concurrency) are decided exactly over `BigRational`; floating point
//! appears only in the optional layout data attached for rendering.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::planar::{build_disk_map, DartId, RegionId};
use crate::shadow::{
    GleamFunction, Label, LinkDiagramPresentation, OverPair, ShadowedPolyhedron,
};

pub type Rational = BigRational;
pub type Point = (Rational, Rational);
/// A rational as a (numerator, denominator) pair.
pub type RatPair = (i64, i64);
/// Line coefficients (a, b, c) of a*u + b*v + c = 0 as rational pairs.
pub type LineCoeffs = (RatPair, RatPair, RatPair);

pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn point_f64(p: &Point) -> (f64, f64) {
    (p.0.to_f64().unwrap_or(0.0), p.1.to_f64().unwrap_or(0.0))
}

/// One immersed interval or circle, given as a polyline with rational
/// vertices. Closed components do not repeat their first point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolylineComponent {
    pub closed: bool,
    pub points: Vec<Point>,
}

impl PolylineComponent {
    pub fn open(points: &[(i64, i64)]) -> Self {
        Self {
            closed: false,
            points: points
                .iter()
                .map(|&(x, y)| (rational(x, 1), rational(y, 1)))
                .collect(),
        }
    }

    pub fn closed(points: &[(i64, i64)]) -> Self {
        Self {
            closed: true,
            points: points
                .iter()
                .map(|&(x, y)| (rational(x, 1), rational(y, 1)))
                .collect(),
        }
    }

    pub fn from_rationals(closed: bool, points: Vec<Point>) -> Self {
        Self { closed, points }
    }
}

/// Whether a divide component is an immersed interval or circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Interval,
    Circle,
}

/// A divide as a combinatorial planar map: 4-valent double points in the
/// interior, 1-valent endpoints on the disk boundary, edges carrying their
/// polyline paths for rendering.
#[derive(Debug, Clone)]
pub struct Divide {
    /// Counterclockwise darts per vertex; length 4 for double points,
    /// 1 for interval endpoints.
    vertex_darts: Vec<Vec<u32>>,
    vertex_pos: Vec<(f64, f64)>,
    twin: Vec<u32>,
    dart_vertex: Vec<usize>,
    dart_slot: Vec<usize>,
    dart_edge: Vec<usize>,
    edges: Vec<[u32; 2]>,
    /// Path of each edge from the vertex of its first dart to the other.
    edge_paths: Vec<Vec<(f64, f64)>>,
    components: Vec<ComponentKind>,
    /// A dart whose left face is the outer region of the divide.
    outer_anchor: u32,
}

impl Divide {
    pub fn double_point_count(&self) -> usize {
        self.vertex_darts.iter().filter(|d| d.len() == 4).count()
    }

    pub fn boundary_point_count(&self) -> usize {
        self.vertex_darts.iter().filter(|d| d.len() == 1).count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn components(&self) -> &[ComponentKind] {
        &self.components
    }

    fn is_crossing(&self, v: usize) -> bool {
        self.vertex_darts[v].len() == 4
    }

    fn dart_dir(&self, d: u32) -> (f64, f64) {
        let e = self.dart_edge[d as usize];
        let path = &self.edge_paths[e];
        let from_start = self.edges[e][0] == d;
        let (a, b) = if from_start {
            (path[0], path[1])
        } else {
            (path[path.len() - 1], path[path.len() - 2])
        };
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let len = (dx * dx + dy * dy).sqrt().max(1e-12);
        (dx / len, dy / len)
    }
}

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

fn sub(a: &Point, b: &Point) -> Point {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn cross_vec(u: &Point, v: &Point) -> Rational {
    &u.0 * &v.1 - &u.1 * &v.0
}

fn dot(u: &Point, v: &Point) -> Rational {
    &u.0 * &v.0 + &u.1 * &v.1
}

/// Strictly inside the closed segment's bounding collinear span.
fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if !cross(a, b, p).is_zero() {
        return false;
    }
    let d = sub(b, a);
    let t = dot(&sub(p, a), &d);
    !t.is_negative() && t <= dot(&d, &d)
}

/// Counterclockwise-from-east ordering of direction vectors.
fn angle_cmp(u: &Point, v: &Point) -> std::cmp::Ordering {
    let half = |w: &Point| -> u8 {
        if w.1.is_negative() || (w.1.is_zero() && w.0.is_negative()) {
            1
        } else {
            0
        }
    };
    half(u).cmp(&half(v)).then_with(|| {
        let c = cross_vec(u, v);
        if c.is_positive() {
            std::cmp::Ordering::Less
        } else if c.is_negative() {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    })
}

struct Segment {
    comp: usize,
    idx: usize,
    a: Point,
    b: Point,
}

/// Ingests rational polylines as a divide: exact pairwise intersection,
/// genericity validation, rotation orders from exact angle comparison, and
/// dissolution of polyline bends into divide edges.
pub fn ingest_polyline_divide(components: &[PolylineComponent]) -> Result<Divide, Error> {
    // Collect segments.
    let mut segments: Vec<Segment> = Vec::new();
    for (ci, comp) in components.iter().enumerate() {
        let n = comp.points.len();
        let needed = if comp.closed { 3 } else { 2 };
        if n < needed {
            return Err(Error::BadPolyline {
                component: ci,
                reason: format!("needs at least {needed} points"),
            });
        }
        let count = if comp.closed { n } else { n - 1 };
        for s in 0..count {
            let a = comp.points[s].clone();
            let b = comp.points[(s + 1) % n].clone();
            if a == b {
                return Err(Error::BadPolyline {
                    component: ci,
                    reason: "repeated consecutive points".into(),
                });
            }
            segments.push(Segment {
                comp: ci,
                idx: s,
                a,
                b,
            });
        }
        // Collinear back-tracking at a bend means overlapping segments.
        for s in 0..count {
            let nxt = (s + 1) % count;
            if !comp.closed && nxt == 0 {
                continue;
            }
            let p = &comp.points[s];
            let q = &comp.points[(s + 1) % n];
            let r = &comp.points[(s + 2) % n];
            if cross(p, q, r).is_zero() {
                let u = sub(p, q);
                let v = sub(r, q);
                if dot(&u, &v).is_positive() {
                    return Err(Error::OverlappingSegments);
                }
            }
        }
    }

    let seg_count_of = |ci: usize| {
        let n = components[ci].points.len();
        if components[ci].closed {
            n
        } else {
            n - 1
        }
    };
    let adjacent = |s1: &Segment, s2: &Segment| -> bool {
        if s1.comp != s2.comp {
            return false;
        }
        let count = seg_count_of(s1.comp);
        let d = (s1.idx + count - s2.idx) % count;
        if components[s1.comp].closed {
            d == 1 || d == count - 1
        } else {
            s1.idx.abs_diff(s2.idx) == 1
        }
    };

    // Terminal endpoints of open components.
    let mut terminals: Vec<Point> = Vec::new();
    for comp in components.iter().filter(|c| !c.closed) {
        terminals.push(comp.points[0].clone());
        terminals.push(comp.points[comp.points.len() - 1].clone());
    }
    // All polyline vertices.
    let mut poly_vertices: BTreeSet<Point> = BTreeSet::new();
    for (ci, comp) in components.iter().enumerate() {
        for p in &comp.points {
            if !poly_vertices.insert(p.clone()) {
                // The same point used twice is a tangency or an endpoint
                // touching, never a transverse double point.
                return Err(Error::TangencyOrTriplePoint {
                    x: p.0.to_string(),
                    y: p.1.to_string(),
                });
            }
            let _ = ci;
        }
    }

    // Pairwise intersection scan.
    let mut crossings: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
    for i in 0..segments.len() {
        for j in i + 1..segments.len() {
            let (s1, s2) = (&segments[i], &segments[j]);
            let o1 = cross(&s1.a, &s1.b, &s2.a);
            let o2 = cross(&s1.a, &s1.b, &s2.b);
            let o3 = cross(&s2.a, &s2.b, &s1.a);
            let o4 = cross(&s2.a, &s2.b, &s1.b);
            if o1.is_zero() && o2.is_zero() {
                // Collinear.
                if adjacent(s1, s2) {
                    continue;
                }
                let overlap = on_segment(&s2.a, &s1.a, &s1.b)
                    || on_segment(&s2.b, &s1.a, &s1.b)
                    || on_segment(&s1.a, &s2.a, &s2.b);
                if overlap {
                    return Err(Error::OverlappingSegments);
                }
                continue;
            }
            if adjacent(s1, s2) {
                continue;
            }
            let proper = (o1.is_positive() != o2.is_positive() && !o1.is_zero() && !o2.is_zero())
                && (o3.is_positive() != o4.is_positive() && !o3.is_zero() && !o4.is_zero());
            if proper {
                // p = s1.a + t (s1.b - s1.a) with t = o3 / (o3 - o4).
                let t = &o3 / (&o3 - &o4);
                let p = (
                    &s1.a.0 + &t * (&s1.b.0 - &s1.a.0),
                    &s1.a.1 + &t * (&s1.b.1 - &s1.a.1),
                );
                crossings.entry(p).or_default().extend([i, j]);
                continue;
            }
            // Non-proper contact between non-adjacent segments.
            let touches = [&s2.a, &s2.b]
                .into_iter()
                .filter(|p| on_segment(p, &s1.a, &s1.b))
                .chain(
                    [&s1.a, &s1.b]
                        .into_iter()
                        .filter(|p| on_segment(p, &s2.a, &s2.b)),
                )
                .next();
            if let Some(p) = touches {
                let err = if terminals.contains(p) {
                    Error::EndpointInInterior {
                        x: p.0.to_string(),
                        y: p.1.to_string(),
                    }
                } else {
                    Error::TangencyOrTriplePoint {
                        x: p.0.to_string(),
                        y: p.1.to_string(),
                    }
                };
                return Err(err);
            }
        }
    }

    for (p, segs) in &crossings {
        if segs.len() != 2 {
            return Err(Error::TangencyOrTriplePoint {
                x: p.0.to_string(),
                y: p.1.to_string(),
            });
        }
        if poly_vertices.contains(p) {
            return Err(Error::TangencyOrTriplePoint {
                x: p.0.to_string(),
                y: p.1.to_string(),
            });
        }
    }

    // Raw graph: nodes are polyline vertices and crossings; edges are
    // segment chunks between consecutive split points.
    let mut node_of: BTreeMap<Point, usize> = BTreeMap::new();
    let mut node_points: Vec<Point> = Vec::new();
    let intern = |p: &Point, node_of: &mut BTreeMap<Point, usize>,
                      node_points: &mut Vec<Point>| {
        *node_of.entry(p.clone()).or_insert_with(|| {
            node_points.push(p.clone());
            node_points.len() - 1
        })
    };
    struct RawEdge {
        n1: usize,
        n2: usize,
        comp: usize,
    }
    let mut raw_edges: Vec<RawEdge> = Vec::new();
    // (component, segment index, order along segment) for reconstruction.
    for (si, seg) in segments.iter().enumerate() {
        let mut cuts: Vec<Point> = crossings
            .iter()
            .filter(|(_, segs)| segs.contains(&si))
            .map(|(p, _)| p.clone())
            .collect();
        let d = sub(&seg.b, &seg.a);
        cuts.sort_by(|p, q| {
            let tp = dot(&sub(p, &seg.a), &d);
            let tq = dot(&sub(q, &seg.a), &d);
            tp.cmp(&tq)
        });
        let mut pts = Vec::with_capacity(cuts.len() + 2);
        pts.push(seg.a.clone());
        pts.extend(cuts);
        pts.push(seg.b.clone());
        for w in pts.windows(2) {
            let n1 = intern(&w[0], &mut node_of, &mut node_points);
            let n2 = intern(&w[1], &mut node_of, &mut node_points);
            raw_edges.push(RawEdge {
                n1,
                n2,
                comp: seg.comp,
            });
        }
    }

    // Incidence and rotation.
    let n_nodes = node_points.len();
    let mut incident: Vec<Vec<(usize, u8)>> = vec![Vec::new(); n_nodes]; // (raw edge, end)
    for (ei, e) in raw_edges.iter().enumerate() {
        incident[e.n1].push((ei, 0));
        incident[e.n2].push((ei, 1));
    }
    let raw_dir = |(ei, end): (usize, u8)| -> Point {
        let e = &raw_edges[ei];
        let (from, to) = if end == 0 { (e.n1, e.n2) } else { (e.n2, e.n1) };
        sub(&node_points[to], &node_points[from])
    };
    for darts in incident.iter_mut() {
        darts.sort_by(|&a, &b| angle_cmp(&raw_dir(a), &raw_dir(b)));
    }
    for (ni, darts) in incident.iter().enumerate() {
        if ![1, 2, 4].contains(&darts.len()) {
            let p = &node_points[ni];
            return Err(Error::TangencyOrTriplePoint {
                x: p.0.to_string(),
                y: p.1.to_string(),
            });
        }
    }

    // Outer anchor on the raw graph: at the lexicographically smallest
    // node, the face left of the dart with the largest direction angle in
    // (-180, 180] contains the far west.
    let min_node = (0..n_nodes)
        .min_by(|&a, &b| {
            (&node_points[a].0, &node_points[a].1).cmp(&(&node_points[b].0, &node_points[b].1))
        })
        .unwrap();
    let anchor_raw = *incident[min_node]
        .iter()
        .max_by(|&&a, &&b| {
            // Rotate by +90 degrees into the open upper half plane, where
            // the cross product is a total order on directions.
            let ra = {
                let d = raw_dir(a);
                (-d.1.clone(), d.0.clone())
            };
            let rb = {
                let d = raw_dir(b);
                (-d.1.clone(), d.0.clone())
            };
            let c = cross_vec(&ra, &rb);
            if c.is_negative() {
                std::cmp::Ordering::Greater
            } else if c.is_positive() {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Equal
            }
        })
        .unwrap();

    // Reject components that carry no double point: their doubled curve
    // has no crossing and falls outside the connected 4-valent model.
    let mut comp_has_crossing = vec![false; components.len()];
    for (ni, darts) in incident.iter().enumerate() {
        if darts.len() == 4 {
            let _ = ni;
            for &(ei, _) in darts {
                comp_has_crossing[raw_edges[ei].comp] = true;
            }
        }
    }
    if let Some(ci) = comp_has_crossing.iter().position(|&c| !c) {
        return Err(Error::UnsupportedDegenerate {
            reason: format!("component {ci} has no double point"),
        });
    }

    // Dissolve degree-2 bends into divide edges (chains between crossings
    // and endpoints).
    let keep: Vec<bool> = incident.iter().map(|d| d.len() != 2).collect();
    let mut new_index = vec![usize::MAX; n_nodes];
    let mut vertex_darts: Vec<Vec<u32>> = Vec::new();
    let mut vertex_pos = Vec::new();
    for ni in 0..n_nodes {
        if keep[ni] {
            new_index[ni] = vertex_darts.len();
            vertex_darts.push(Vec::new());
            vertex_pos.push(point_f64(&node_points[ni]));
        }
    }

    let other_end = |ei: usize, end: u8| -> (usize, u8) { (ei, 1 - end) };
    let node_of_dart = |(ei, end): (usize, u8)| -> usize {
        if end == 0 {
            raw_edges[ei].n1
        } else {
            raw_edges[ei].n2
        }
    };

    let mut twin: Vec<u32> = Vec::new();
    let mut dart_vertex: Vec<usize> = Vec::new();
    let mut dart_slot: Vec<usize> = Vec::new();
    let mut dart_edge: Vec<usize> = Vec::new();
    let mut edges: Vec<[u32; 2]> = Vec::new();
    let mut edge_paths: Vec<Vec<(f64, f64)>> = Vec::new();
    let mut chain_dart_of_raw: BTreeMap<(usize, u8), u32> = BTreeMap::new();
    let mut raw_done: BTreeSet<(usize, u8)> = BTreeSet::new();

    for ni in 0..n_nodes {
        if !keep[ni] {
            continue;
        }
        for &start in &incident[ni] {
            if raw_done.contains(&start) {
                continue;
            }
            // Walk the chain to the far anchor node, collecting the raw
            // darts pointing along the travel direction.
            let mut path = vec![point_f64(&node_points[ni])];
            let mut along = vec![start];
            let mut cur = start;
            loop {
                let far = node_of_dart(other_end(cur.0, cur.1));
                path.push(point_f64(&node_points[far]));
                if keep[far] {
                    break;
                }
                let nexts = &incident[far];
                let arrived = other_end(cur.0, cur.1);
                cur = if nexts[0] == arrived { nexts[1] } else { nexts[0] };
                along.push(cur);
            }
            let far_dart = other_end(cur.0, cur.1);
            let eid = edges.len();
            let d1 = twin.len() as u32;
            let d2 = d1 + 1;
            twin.extend([d2, d1]);
            dart_vertex.extend([new_index[ni], new_index[node_of_dart(far_dart)]]);
            dart_slot.extend([0, 0]);
            dart_edge.extend([eid, eid]);
            edges.push([d1, d2]);
            edge_paths.push(path);
            // Every raw dart along the chain shares its left face with the
            // chain dart of the same direction.
            for raw in along {
                raw_done.insert(raw);
                raw_done.insert(other_end(raw.0, raw.1));
                chain_dart_of_raw.insert(raw, d1);
                chain_dart_of_raw.insert(other_end(raw.0, raw.1), d2);
            }
        }
    }

    // Rotations at the surviving vertices, inherited from the raw order.
    for ni in 0..n_nodes {
        if !keep[ni] {
            continue;
        }
        let v = new_index[ni];
        for (slot, &raw) in incident[ni].iter().enumerate() {
            let d = chain_dart_of_raw[&raw];
            dart_slot[d as usize] = slot;
            vertex_darts[v].push(d);
        }
    }

    let outer_anchor = chain_dart_of_raw[&anchor_raw];
    let components_kinds: Vec<ComponentKind> = components
        .iter()
        .map(|c| {
            if c.closed {
                ComponentKind::Circle
            } else {
                ComponentKind::Interval
            }
        })
        .collect();

    Ok(Divide {
        vertex_darts,
        vertex_pos,
        twin,
        dart_vertex,
        dart_slot,
        dart_edge,
        edges,
        edge_paths,
        components: components_kinds,
        outer_anchor,
    })
}

/// Per-crossing positions attached to shadows built from geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    pub crossings: Vec<(f64, f64)>,
}

/// Doubles a connected divide into its shadowed polyhedron: each edge
/// splits into two parallel copies, each double point becomes four
/// crossings around a square (label b, gleam -1), each edge between double
/// points gets a crossing between its copies flanked by two triangles
/// (label a, gleam 1/2), each edge reaching the disk boundary closes into a
/// bigon (label c, gleam 0), and the bounded chambers keep label b. The
/// over/under data follows the deterministic component/edge-id policy.
pub fn double_divide(divide: &Divide) -> Result<ShadowedPolyhedron, Error> {
    Ok(double_divide_with_layout(divide)?.0)
}

pub fn double_divide_with_layout(
    divide: &Divide,
) -> Result<(ShadowedPolyhedron, Layout), Error> {
    // Connectivity over divide vertices.
    let n_vertices = divide.vertex_darts.len();
    if n_vertices == 0 {
        return Err(Error::UnsupportedDegenerate {
            reason: "divide has no vertices".into(),
        });
    }
    let mut seen = vec![false; n_vertices];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &d in &divide.vertex_darts[v] {
            let w = divide.dart_vertex[divide.twin[d as usize] as usize];
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::DisconnectedDivide);
    }

    // Crossing allocation: four per double point, one per middle edge.
    let mut crossing_pos: Vec<(f64, f64)> = Vec::new();
    let mut corner_crossing: BTreeMap<(usize, usize), u32> = BTreeMap::new(); // (vertex, slot)
    let mut middle_crossing: BTreeMap<usize, u32> = BTreeMap::new(); // edge
    for v in 0..n_vertices {
        if !divide.is_crossing(v) {
            continue;
        }
        for i in 0..4 {
            corner_crossing.insert((v, i), crossing_pos.len() as u32);
            let d1 = divide.dart_dir(divide.vertex_darts[v][i]);
            let d2 = divide.dart_dir(divide.vertex_darts[v][(i + 1) % 4]);
            let (bx, by) = (d1.0 + d2.0, d1.1 + d2.1);
            let norm = (bx * bx + by * by).sqrt().max(1e-9);
            let delta = 0.22;
            let p = divide.vertex_pos[v];
            crossing_pos.push((p.0 + delta * bx / norm, p.1 + delta * by / norm));
        }
    }
    let is_middle = |e: usize| -> bool {
        let [d1, d2] = divide.edges[e];
        divide.is_crossing(divide.dart_vertex[d1 as usize])
            && divide.is_crossing(divide.dart_vertex[d2 as usize])
    };
    for e in 0..divide.edges.len() {
        if is_middle(e) {
            middle_crossing.insert(e, crossing_pos.len() as u32);
            let path = &divide.edge_paths[e];
            crossing_pos.push(path[path.len() / 2]);
        }
    }

    // Doubled darts are 4c + slot. Corner crossing at (v, i) between divide
    // darts h_i and h_{i+1}, counterclockwise slots:
    //   0: outward along h_i on its left side
    //   1: outward along h_{i+1} on its right side
    //   2: toward the corner crossing (v, i+1)
    //   3: toward the corner crossing (v, i-1)
    // Middle crossing on edge e with darts h (tail side) and h' (head
    // side), counterclockwise slots:
    //   0: toward h' on the right side of h'   (strand swapping sides)
    //   1: toward h on the left side of h
    //   2: toward h on the right side of h
    //   3: toward h' on the left side of h'
    let dart = |crossing: u32, slot: u32| -> u32 { 4 * crossing + slot };
    let terminal_left = |h: u32| -> u32 {
        let v = divide.dart_vertex[h as usize];
        let slot = divide.dart_slot[h as usize];
        dart(corner_crossing[&(v, slot)], 0)
    };
    let terminal_right = |h: u32| -> u32 {
        let v = divide.dart_vertex[h as usize];
        let slot = divide.dart_slot[h as usize];
        dart(corner_crossing[&(v, (slot + 3) % 4)], 1)
    };

    let n_crossings = crossing_pos.len();
    let mut twins = vec![u32::MAX; 4 * n_crossings];
    let join = |a: u32, b: u32, twins: &mut Vec<u32>| {
        debug_assert!(twins[a as usize] == u32::MAX && twins[b as usize] == u32::MAX);
        twins[a as usize] = b;
        twins[b as usize] = a;
    };

    // Square sides.
    for (&(v, i), &k) in &corner_crossing {
        let next = corner_crossing[&(v, (i + 1) % 4)];
        join(dart(k, 2), dart(next, 3), &mut twins);
    }
    // Lanes.
    for e in 0..divide.edges.len() {
        let [h, h2] = divide.edges[e];
        let v1 = divide.dart_vertex[h as usize];
        let v2 = divide.dart_vertex[h2 as usize];
        if let Some(&m) = middle_crossing.get(&e) {
            join(dart(m, 1), terminal_left(h), &mut twins);
            join(dart(m, 2), terminal_right(h), &mut twins);
            join(dart(m, 0), terminal_right(h2), &mut twins);
            join(dart(m, 3), terminal_left(h2), &mut twins);
        } else if divide.is_crossing(v1) {
            // End edge toward a boundary point: the two copies close up
            // around the endpoint into one cap edge.
            join(terminal_left(h), terminal_right(h), &mut twins);
        } else if divide.is_crossing(v2) {
            join(terminal_left(h2), terminal_right(h2), &mut twins);
        } else {
            return Err(Error::UnsupportedDegenerate {
                reason: "edge with two boundary endpoints".into(),
            });
        }
    }
    debug_assert!(twins.iter().all(|&t| t != u32::MAX));

    // Outer region: left of the left copy of an edge bordering the
    // divide's outer face.
    let anchor = {
        let a = divide.outer_anchor;
        if divide.is_crossing(divide.dart_vertex[a as usize]) {
            a
        } else {
            divide.twin[a as usize]
        }
    };
    let outer_mark = terminal_left(anchor);

    let crossings_table: Vec<Vec<u32>> = (0..n_crossings as u32)
        .map(|c| (0..4).map(|s| dart(c, s)).collect())
        .collect();
    let map = build_disk_map(&crossings_table, &twins, outer_mark)?;

    // Labels.
    let mut labels = vec![Label::Chamber; map.region_count()];
    labels[map.outer_region().idx()] = Label::Outer;
    for (&(v, i), &k) in &corner_crossing {
        if i == 0 {
            let _ = v;
            labels[map.left_of(DartId(dart(k, 2))).idx()] = Label::B;
        }
    }
    for &m in middle_crossing.values() {
        labels[map.left_of(DartId(dart(m, 1))).idx()] = Label::A;
        labels[map.left_of(DartId(dart(m, 3))).idx()] = Label::A;
    }
    for e in 0..divide.edges.len() {
        if middle_crossing.contains_key(&e) {
            continue;
        }
        let [h, h2] = divide.edges[e];
        let hh = if divide.is_crossing(divide.dart_vertex[h as usize]) {
            h
        } else {
            h2
        };
        labels[map.left_of(map.twin(DartId(terminal_left(hh)))).idx()] = Label::C;
    }

    // Gleams by label.
    let twice: BTreeMap<RegionId, i64> = map
        .internal_regions()
        .map(|r| {
            let g = match labels[r.idx()] {
                Label::A => 1,
                Label::B | Label::Chamber => -2,
                Label::C => 0,
                Label::Outer => unreachable!(),
            };
            (r, g)
        })
        .collect();
    let gleams = GleamFunction::from_map(&map, twice)?;

    // Over/under policy: at each crossing the strand with the smaller
    // (component id, smallest edge id) key passes over.
    let over: Vec<OverPair> = (0..map.crossing_count())
        .map(|v| {
            let darts = map.crossing_darts(crate::planar::CrossingId(v as u32));
            let key = |a: DartId, b: DartId| {
                let ea = map.edge_of(a);
                let eb = map.edge_of(b);
                (map.component_of_edge(ea), ea.min(eb))
            };
            if key(darts[0], darts[2]) <= key(darts[1], darts[3]) {
                OverPair::Slots02
            } else {
                OverPair::Slots13
            }
        })
        .collect();
    let diagram = LinkDiagramPresentation::with_default_orientation(map, over)?;
    let shadow = ShadowedPolyhedron::new(diagram, gleams, Some(labels))?;
    Ok((
        shadow,
        Layout {
            crossings: crossing_pos,
        },
    ))
}

/// A real line arrangement given by exact coefficient triples of
/// a*u + b*v + c = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineArrangement {
    pub lines: Vec<(Rational, Rational, Rational)>,
}

impl LineArrangement {
    pub fn new(coeffs: &[LineCoeffs]) -> Result<Self, Error> {
        let lines = coeffs
            .iter()
            .map(|&((an, ad), (bn, bd), (cn, cd))| {
                (rational(an, ad), rational(bn, bd), rational(cn, cd))
            })
            .collect();
        Self::from_rationals(lines)
    }

    pub fn from_rationals(
        lines: Vec<(Rational, Rational, Rational)>,
    ) -> Result<Self, Error> {
        for (i, (a, b, _)) in lines.iter().enumerate() {
            if a.is_zero() && b.is_zero() {
                return Err(Error::Schema(format!("line {i} has zero normal")));
            }
        }
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let (a1, b1, c1) = &lines[i];
                let (a2, b2, c2) = &lines[j];
                let ab = a1 * b2 - a2 * b1;
                let ac = a1 * c2 - a2 * c1;
                let bc = b1 * c2 - b2 * c1;
                if ab.is_zero() && ac.is_zero() && bc.is_zero() {
                    return Err(Error::DuplicateLines { a: i, b: j });
                }
            }
        }
        Ok(Self { lines })
    }

    /// Exact intersection of two lines, if not parallel.
    fn meet(&self, i: usize, j: usize) -> Option<Point> {
        let (a1, b1, c1) = &self.lines[i];
        let (a2, b2, c2) = &self.lines[j];
        let det = a1 * b2 - a2 * b1;
        if det.is_zero() {
            return None;
        }
        let x = (b1 * c2 - b2 * c1) / &det;
        let y = (a2 * c1 - a1 * c2) / &det;
        Some((x, y))
    }
}

/// Clips every line to a segment extending beyond all its intersection
/// points and ingests the result as a divide of interval components.
pub fn arrangement_to_divide(arr: &LineArrangement) -> Result<Divide, Error> {
    let k = arr.lines.len();
    if k < 2 {
        return Err(Error::NoIntersections { line: 0 });
    }
    // Concurrency check: all pairwise meets must be distinct.
    let mut seen: BTreeMap<Point, (usize, usize)> = BTreeMap::new();
    for i in 0..k {
        for j in i + 1..k {
            if let Some(p) = arr.meet(i, j) {
                if let Some(&(a, b)) = seen.get(&p) {
                    let third = if i == a || i == b { j } else { i };
                    return Err(Error::ConcurrentLines {
                        a,
                        b,
                        c: third,
                    });
                }
                seen.insert(p, (i, j));
            }
        }
    }
    let mut polylines = Vec::with_capacity(k);
    for i in 0..k {
        let (a, b, _) = &arr.lines[i];
        // Direction (b, -a); a point on the line; parameters of the meets.
        let dir: Point = (b.clone(), -a.clone());
        let p0 = point_on_line(&arr.lines[i]);
        let mut params: Vec<Rational> = (0..k)
            .filter(|&j| j != i)
            .filter_map(|j| arr.meet(i, j))
            .map(|p| dot(&sub(&p, &p0), &dir))
            .collect();
        if params.is_empty() {
            return Err(Error::NoIntersections { line: i });
        }
        params.sort();
        let lo = params.first().unwrap().clone();
        let hi = params.last().unwrap().clone();
        let span = &hi - &lo;
        let margin = if span.is_zero() {
            BigRational::from(BigInt::from(1))
        } else {
            span
        };
        let d2 = dot(&dir, &dir);
        let t_lo = (&lo - &margin) / &d2;
        let t_hi = (&hi + &margin) / &d2;
        let start = (&p0.0 + &t_lo * &dir.0, &p0.1 + &t_lo * &dir.1);
        let end = (&p0.0 + &t_hi * &dir.0, &p0.1 + &t_hi * &dir.1);
        polylines.push(PolylineComponent::from_rationals(
            false,
            vec![start, end],
        ));
    }
    ingest_polyline_divide(&polylines)
}

fn point_on_line(line: &(Rational, Rational, Rational)) -> Point {
    let (a, b, c) = line;
    // a x + b y + c = 0.
    if !b.is_zero() {
        (BigRational::zero(), -c / b)
    } else {
        (-c / a, BigRational::zero())
    }
}
