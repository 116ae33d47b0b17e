//! Cell partitioning for GAF-family sleep scheduling in wireless sensor networks.
//!
//! The crate builds the virtual-cell layouts of GAF, HGAF, eHGAF and the two
//! eHGAF variants (triangle cells, two cell types), checks the radio-range
//! requirements those layouts must satisfy, simulates active-node energy
//! drain, and evaluates the closed-form cell-size bounds.
//!
//! Start with [`partition::build_partition`]; the `examples/` directory has
//! one runnable program per capability.

// `!(x > 0.0)` is used on purpose so NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod geometry;
pub mod constraints;
pub mod partition;
pub mod backbone;
pub mod energysim;
pub mod bounds;
pub mod cli;

pub use error::{Error, Result};
pub use geometry::{CellShape, Point};
pub use partition::{build_partition, Cell, CellId, CellType, FieldSpec, Partition, Scheme, SchemeParams};
pub use backbone::{build_backbone, elect_active, BackboneGraph, NodeId, NodeState, Role};
pub use energysim::{run_simulation, LifetimeCriterion, SimConfig, SimResult};
