//! Exact symbolic engine for finite-dimensional Lie algebras and their
//! universal enveloping algebras, paired with truncated matrix realizations,
//! mechanical controllability-criteria checks, and piecewise-constant
//! propagation experiments.
//!
//! Layering, bottom up:
//! - [`scalar`]: exact Gaussian-rational coefficients;
//! - [`algebra`]: structure-constant Lie algebras with validity gates;
//! - [`env`]: PBW monomials, normal ordering and the enveloping product;
//! - [`elim`] / [`closure`]: exact elimination, capped Lie closures,
//!   bracket-condition and coverage checks;
//! - [`rep`]: spin / discrete-series / Fock matrix truncations, the Nelson
//!   operator and Sobolev-type diagnostic norms;
//! - [`system`] / [`classify`]: control systems and the controllability
//!   verdicts with their evidence records;
//! - [`dynamics`]: unitary propagation, product-formula error curves, the
//!   attainability bound and the reachability probe;
//! - [`presets`]: the built-in model systems.

pub mod algebra;
pub mod classify;
pub mod closure;
pub mod dynamics;
pub mod elim;
pub mod env;
pub mod error;
pub mod presets;
pub mod rep;
pub mod scalar;
pub mod system;

pub use algebra::{AlgebraElement, Involution, JacobiWitness, StructureAlgebra};
pub use classify::{classify, tangent_rank, Classification, Evidence, Verdict};
pub use closure::{
    build_c, check_bc_in_b, lie_closure, pbw_coverage, BcOutcome, ClosureCaps, CoverageReport,
    LieClosureResult,
};
pub use dynamics::{
    attainability_experiment, expm_skew, fidelity, probe_states, propagate, reach_probe,
    trotter_commutator_error, trotter_sum_error, ControlSchedule, FlowExperimentResult,
    ReachBudget, ReachOutcome, ScheduleSegment,
};
pub use env::{env_adjoint, env_bracket, grade_truncate, multiply, normal_order, EnvElement, PbwMonomial, Rewriter};
pub use error::{CoreError, Result};
pub use presets::{preset, Preset, PRESET_NAMES};
pub use rep::{
    env_to_matrix, homomorphism_check, nelson_delta, sobolev_norm, CMatrix, CompactAxis, RepKind,
    RepSpec, StateVector,
};
pub use scalar::GaussianRational;
pub use system::{ControlSystem, ManifoldTarget};
