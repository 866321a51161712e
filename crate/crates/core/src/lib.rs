//! Tools for deciding whether quantum measurements (POVMs) can be simulated
//! by restricted measurement classes, and for quantifying how much white
//! noise a measurement tolerates before such a simulation becomes possible.
//!
//! The crate is organised in five layers:
//!
//! - [`hermitian`]: finite-dimensional Hermitian operator algebra with
//!   generalized Pauli (Bloch) decompositions and spectral queries.
//! - [`povm`]: measurement objects, classical pre/post-processing,
//!   depolarisation, joint measurements and the named measurement families
//!   used throughout the regression suite.
//! - [`sdp`]: a self-contained dense semidefinite-program solver (primal-dual
//!   interior point on the homogeneous self-dual embedding) sized for the
//!   small structured programs this crate produces.
//! - [`simulability`]: the simulability programs themselves — joint
//!   measurability, k-outcome simulability, fixed-assignment multi-simulator
//!   protocols and projective simulability for qubits — together with
//!   certificate transformations between equivalent forms.
//! - [`oracle`]: independent, solver-free verification of simulation
//!   certificates, statistical Born-rule checks, grid-search lower bounds and
//!   resource-monotonicity checks.

mod linalg;

pub mod hermitian;
pub mod povm;




