use thiserror::Error;

/// Errors across the whole pipeline, from map validation to geometry
/// ingestion and group computations.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    // --- planar map construction ---
    #[error("empty diagram: a disk map needs at least one crossing")]
    EmptyDiagram,
    #[error("crossing {crossing} lists {arity} darts, expected 4")]
    NonQuadrivalent { crossing: usize, arity: usize },
    #[error("twin table is not a fixed-point-free involution at dart {dart}")]
    BrokenInvolution { dart: u32 },
    #[error("dart {dart} is out of range or not referenced exactly once")]
    InconsistentDarts { dart: u32 },
    #[error("the underlying 4-valent graph is disconnected")]
    DisconnectedCurve,
    #[error("Euler identity V-E+F=2 fails (V={v}, E={e}, F={f}); the rotation system is not planar")]
    EulerMismatch { v: usize, e: usize, f: usize },
    #[error("unknown dart {dart}")]
    UnknownDart { dart: u32 },
    #[error("unknown region {region}")]
    UnknownRegion { region: u32 },

    // --- shadow data ---
    #[error("gleam missing or defined on a non-internal region {region}")]
    GleamDomain { region: u32 },
    #[error("region {region}: gleam - c is not an integer (2gl={twice_gleam}, 2c={twice_c})")]
    HalfIntegerExponent {
        region: u32,
        twice_gleam: i64,
        twice_c: i64,
    },
    #[error("selection preset requires region labels, but the shadow has none")]
    MissingLabels,

    // --- cutting systems ---
    #[error("cutting system has no tree vertex in region {region}")]
    RegionWithoutVertex { region: u32 },
    #[error("cutting system parent links do not form a forest rooted at the outer region (at region {region})")]
    NotAForest { region: u32 },
    #[error("cutting edge {edge} is not on the boundary between region {region} and its parent")]
    EdgeNotOnSharedBoundary { region: u32, edge: u32 },
    #[error("edges not crossed by the cutting system do not form a spanning tree of the curve")]
    ComplementNotSpanningTree,

    // --- presentation ---
    #[error("reduced-system presentation requires a selection avoiding the outer region")]
    SelectionTouchesBoundary,

    // --- geometric ingestion ---
    #[error("degenerate intersection (tangency, triple point, or crossing at a polyline vertex) at ({x}, {y})")]
    TangencyOrTriplePoint { x: String, y: String },
    #[error("interval endpoint lies on another curve at ({x}, {y})")]
    EndpointInInterior { x: String, y: String },
    #[error("two segments overlap along a subsegment")]
    OverlappingSegments,
    #[error("polyline component {component} is invalid: {reason}")]
    BadPolyline { component: usize, reason: String },
    #[error("divide is disconnected; its doubled curve has disconnected singular set")]
    DisconnectedDivide,
    #[error("degenerate divide: {reason}")]
    UnsupportedDegenerate { reason: String },
    #[error("lines {a} and {b} coincide")]
    DuplicateLines { a: usize, b: usize },
    #[error("three or more lines pass through one point (lines {a}, {b}, {c})")]
    ConcurrentLines { a: usize, b: usize, c: usize },
    #[error("line {line} meets no other line of the arrangement")]
    NoIntersections { line: usize },

    // --- group computations ---
    #[error("homomorphism search space {tuples} exceeds the ceiling {ceiling}; simplify the presentation first")]
    SearchSpaceTooLarge { tuples: f64, ceiling: f64 },
    #[error("relator references generator {gen} not declared in the presentation")]
    UnknownGenerator { gen: String },

    // --- file formats ---
    #[error("schema error: {0}")]
    Schema(String),
}

impl Error {
    /// Stable machine-readable code, used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyDiagram => "EmptyDiagram",
            Error::NonQuadrivalent { .. } => "NonQuadrivalent",
            Error::BrokenInvolution { .. } => "BrokenInvolution",
            Error::InconsistentDarts { .. } => "InconsistentDarts",
            Error::DisconnectedCurve => "DisconnectedCurve",
            Error::EulerMismatch { .. } => "EulerMismatch",
            Error::UnknownDart { .. } => "UnknownDart",
            Error::UnknownRegion { .. } => "UnknownRegion",
            Error::GleamDomain { .. } => "GleamDomain",
            Error::HalfIntegerExponent { .. } => "HalfIntegerExponent",
            Error::MissingLabels => "MissingLabels",
            Error::RegionWithoutVertex { .. } => "RegionWithoutVertex",
            Error::NotAForest { .. } => "NotAForest",
            Error::EdgeNotOnSharedBoundary { .. } => "EdgeNotOnSharedBoundary",
            Error::ComplementNotSpanningTree => "ComplementNotSpanningTree",
            Error::SelectionTouchesBoundary => "SelectionTouchesBoundary",
            Error::TangencyOrTriplePoint { .. } => "TangencyOrTriplePoint",
            Error::EndpointInInterior { .. } => "EndpointInInterior",
            Error::OverlappingSegments => "OverlappingSegments",
            Error::BadPolyline { .. } => "BadPolyline",
            Error::DisconnectedDivide => "DisconnectedDivide",
            Error::UnsupportedDegenerate { .. } => "UnsupportedDegenerate",
            Error::DuplicateLines { .. } => "DuplicateLines",
            Error::ConcurrentLines { .. } => "ConcurrentLines",
            Error::NoIntersections { .. } => "NoIntersections",
            Error::SearchSpaceTooLarge { .. } => "SearchSpaceTooLarge",
            Error::UnknownGenerator { .. } => "UnknownGenerator",
            Error::Schema(_) => "Schema",
        }
    }
}
