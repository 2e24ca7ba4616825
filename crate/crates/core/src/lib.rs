//! Constructions, detectors and exact search for subsets of the integer grid
//! avoiding forbidden point configurations.

pub mod additive;
pub mod constructions;
pub mod detectors;
pub mod error;
pub mod grid;
pub mod io;
pub mod predicates;
pub mod search;

pub use additive::ResidueSet;
pub use constructions::{Construction, ConstructionReport};
pub use detectors::{count_all, find_any, verify_free, CountMethod, CountReport, FreeCheck};
pub use error::{Error, Result};
pub use grid::{canonical_order, ConfigClass, GridSpec, Point, PointSet, Witness};
pub use search::{max_free_subset_exact, SearchOptions, SearchResult};
