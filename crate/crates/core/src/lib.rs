//! Combinatorial shadows on the disk and fundamental groups of their
//! subpolyhedron complements in the 4-ball.
//!
//! The pipeline is:
//!
//! 1. Ingest a geometric object — a divide (immersed intervals/circles in the
//!    disk, [`builders::ingest_polyline_divide`]) or a real line arrangement
//!    ([`builders::arrangement_to_divide`]) — with exact rational arithmetic.
//! 2. Compile it to a [`shadow::ShadowedPolyhedron`]: a 4-valent planar map
//!    ([`planar::DiskMap`]) with over/under data, orientations, half-integer
//!    gleams and region labels ([`builders::double_divide`]).
//! 3. Choose a subpolyhedron selection ([`shadow::select_regions`]) and a
//!    system of cutting trees ([`cutting::auto_cut`]).
//! 4. Produce a finite presentation of the fundamental group of the
//!    complement ([`present::present`], [`present::present_reduced`],
//!    [`present::wirtinger`]).
//! 5. Simplify and compare presentations through abelian invariants and
//!    finite-quotient homomorphism counts ([`group`]).
//!
//! Everything downstream of ingestion is exact integer arithmetic; gleams are
//! stored doubled so half-integers never touch floating point.

pub mod builders;
pub mod cutting;
pub mod error;
pub mod group;
pub mod io;
pub mod planar;
pub mod present;
pub mod render;
pub mod samples;
pub mod shadow;

pub use error::Error;
pub use group::{AbelianInvariants, Fingerprint, Presentation, Word};
pub use planar::{DartId, DiskMap, EdgeId, Region, RegionId};
pub use shadow::{GleamFunction, Label, LinkDiagramPresentation, ShadowedPolyhedron, SubSelection};
