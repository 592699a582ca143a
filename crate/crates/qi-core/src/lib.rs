//! Error-probability bounds for quantum-illumination, single-photon, and
//! coherent-state target detection, each paired with an independent
//! numerical oracle.
//!
//! A target embedded in thermal background light is interrogated by repeated
//! transmissions; the figure of merit everywhere is the per-shot error
//! exponent ℰ of the detection error bound e^{−N·ℰ}/2. This crate provides:
//!
//! - **[`fock`]**: truncated Fock-space state construction (coherent,
//!   thermal, displaced thermal) and exact detection linear algebra:
//!   Helstrom minimum error, fractional matrix powers, photon statistics.
//!   Constructors track truncation leakage and fail loudly instead of
//!   renormalizing.
//! - **[`chernoff`]**: numerical quantum and classical Chernoff bounds,
//!   minimizing Tr(ρ0^s ρ1^{1−s}) (or its classical analogue) over
//!   s ∈ [0, 1] with a grid-plus-golden-section search.
//! - **[`bounds`]**: the closed-form exponents for each transmitter, with
//!   explicit good/bad/outside-model regime classification in place of the
//!   asymptotic ≪ conditions they are stated under.
//! - **[`receivers`]**: exact receiver error probabilities (super-mode
//!   photon counting, homodyne, majority-vote fusion) and a seeded,
//!   parallelism-independent Monte Carlo harness.
//!
//! Everything is a pure function of its inputs; values are immutable after
//! construction and safe to share across threads.
//!
//! ```
//! use num_complex::Complex64;
//! use qi_core::{
//!     cs_bound, displaced_thermal_state, quantum_chernoff, thermal_state, ChannelParams,
//!     TruncationConfig,
//! };
//!
//! // Closed-form coherent-state exponent vs the truncated-space optimizer.
//! let params = ChannelParams::new(0.02, 0.1, 1, 1000)?;
//! let closed_form = cs_bound(&params).exponent_per_shot;
//!
//! let trunc = TruncationConfig::adaptive(params.kappa, params.n_b);
//! let rho0 = thermal_state(params.n_b, &trunc)?;
//! let alpha = Complex64::new(params.kappa.sqrt(), 0.0);
//! let rho1 = displaced_thermal_state(alpha, params.n_b, &trunc)?;
//! let oracle = quantum_chernoff(&rho0, &rho1)?.exponent;
//!
//! assert!((closed_form - oracle).abs() / oracle < 2e-2);
//! # Ok::<(), qi_core::Error>(())
//! ```

pub mod bounds;
pub mod chernoff;
pub mod error;
pub mod fock;
pub mod receivers;

pub use bounds::{
    classify_regime, cs_bound, cs_single_shot_error, cs_single_shot_error_approx, homodyne_bound,
    majority_vote_bound, qi_bound, sp_bound, BoundResult, ChannelParams, Formula, MarginPolicy,
    Regime, RegimeCheck, RegimeLabel, System,
};
pub use chernoff::{
    bound_from_exponent, classical_chernoff, gaussian_chernoff, quantum_chernoff, ChernoffResult,
    DiscreteDistribution,
};
pub use error::{Error, Result};
pub use fock::{
    coherent_state, displaced_thermal_state, helstrom_error, matrix_fractional_power, number_state,
    photon_number_distribution, thermal_state, DensityOperator, StateVector, TruncationConfig,
};
pub use receivers::{
    homodyne_error, homodyne_statistics, majority_vote_exact, monte_carlo, photon_counting_error,
    scenario_exact_error, super_mode_distributions, GaussianPair, Scenario, ThresholdPolicy,
    TrialStats,
};
