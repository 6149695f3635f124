//! Standard realizations of topological crystals, trivalent discrete surface
//! geometry, nanotube construction and tight-binding spectra.

pub mod electronic;
pub mod error;
pub mod graph;
pub mod homology;
pub mod io;
pub mod nanotube;
pub mod rational;
pub mod realization;
pub mod surface;

pub use error::{Error, Result};
pub use graph::{Dart, MultiGraph, SpanningTree};
pub use homology::{Chain, CycleBasis};
pub use nanotube::{ChiralIndex, TubeFrame};
pub use realization::{CrystalRealization, EnergyReport, PeriodLattice, StandardReport};
pub use surface::{DiscreteSurface, EulerStats, Neighbor, VertexGeometry};
