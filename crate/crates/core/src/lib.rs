//! Radiation of breathing Laguerre-Gaussian (vortex) electron packets in a
//! uniform longitudinal magnetic field.
//!
//! Internal units are Gaussian CGS with a negative electron charge. The
//! [`observables`] module holds the closed-form period averages; the
//! [`oracle`] module recomputes them by brute-force quadrature of the
//! Poynting vector from [`fields`].

pub mod constants;
pub mod dynamics;
pub mod error;
pub mod fields;
pub mod fringe;
pub mod observables;
pub mod oracle;
pub mod real;
pub mod sources;
pub mod state;
pub mod vector;
pub mod verify;

pub use constants::{FieldSpec, PhysicalConstants};
pub use dynamics::{BreathingParams, InitialTransverseState, QuantumNumbers};
pub use error::{Error, Result};
pub use fields::{EmFieldSample, ObservationPoint, PoyntingDecomposition};
pub use observables::{RadiationReport, Scenario};
pub use state::{LongitudinalPacket, PacketState};
pub use vector::{CylVec, OrderSplit};
