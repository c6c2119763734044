//! Numerical toolkit for differential inclusions with discontinuous
//! right-hand sides: set-valued dynamics with exact support functions,
//! proximal calculus on a catalog of closed sets, bump-kernel
//! time-mollification of Carathéodory feedbacks, Euler polygonal-arc
//! construction of viable trajectories, and certifiers for strong
//! invariance (Hamiltonian and proximal-normal-cone criteria).
//!
//! All computations are deterministic: samplers use fixed low-discrepancy
//! sequences and grids, never randomness, so identical inputs produce
//! bit-identical outputs.

pub mod error;
pub mod euler;
pub mod invariance;
pub mod mollifier;
pub mod multifunction;
pub mod nonsmooth;
pub mod parallel;
pub mod quad;
pub mod sampling;
pub mod scenarios;
pub mod vecmath;

pub use error::{Error, Result};
pub use euler::{EscapeClass, EulerConfig, HullSample, Trajectory};
pub use invariance::{Certificate, EquivalenceReport, EscapeReport, InvarianceReport, Verdict};
pub use mollifier::{BumpKernel, Feedback, TimeRegularity};
pub use multifunction::{Multifunction, SetRepr};
pub use nonsmooth::{ClosedSet, LscFunction, ProxWitness};
pub use scenarios::Scenario;
