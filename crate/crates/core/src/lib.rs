//! Core library for quantum algorithm scaling studies: circuit construction
//! and gate counting, qubit routing over device coupling maps, calibration
//! data models, and quantum-vs-classical crossover analysis.
//!
//! The crate is `no_std` (with `alloc`) so the algorithmic layer stays free
//! of IO; file handling and reporting live in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod builders;
pub mod circuit;
pub mod device;
pub mod estimator;
pub mod routing;
pub mod statevector;

pub use circuit::{Axis, Circuit, Gate, GateCensus, GateClass, GateKind};
pub use device::DeviceModel;
pub use estimator::{ComplexityModel, DepthLimit, FeasibilityReport, RoadmapModel};
pub use routing::{CouplingGraph, QubitMapping};
pub use statevector::StateVector;
