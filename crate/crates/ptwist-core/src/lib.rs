//! Combinatorial toolkit for Lefschetz-fibration computations:
//! braid-group verification of lantern relations via exact curve coordinates,
//! Floer-cohomology spectral sequences over F2, based-loop-space homology,
//! Lefschetz-pencil arithmetic, and the planar bookkeeping (vanishing paths,
//! intersection gradings, loop classification) that feeds them.
//!
//! Everything is exact: integer, rational, or F2 arithmetic throughout. The
//! only floating point lives in the polyline realization of vanishing paths,
//! which exists as a geometric cross-check and for SVG output; its
//! intersection counts are still evaluated with exact rational predicates.

pub mod base_plane;
pub mod braid;
pub mod floer;
pub mod graded;
pub mod loop_space;
pub mod pencil;
pub mod scenario;

pub use base_plane::{
    CriticalConfig, IntersectionDiagram, LoopClass, LoopKind, Polyline, VanishingPath,
};
pub use braid::{ActionReport, BraidWord, LanternReport, MultiCurve, NormalForm};
pub use floer::{Candidate, FibreFloerData, HFResult, SpectralPage, TwistParams};
pub use graded::{ChainComplexF2, GradedSpace, MatrixF2};
pub use pencil::{FillingDescriptor, MatrixModelReport, PencilData};
pub use scenario::Scenario;

/// Library version string, echoed into reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
