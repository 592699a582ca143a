//! Exact and Monte-Carlo simulation of the concrete receivers: photon
//! counting on the coherently combined super-mode, homodyne detection, and
//! single-shot detection fused by majority vote.
//!
//! Quadrature convention: vacuum variance 1/4, so a thermal background of
//! N_B photons per mode gives quadrature variance (2·N_B + 1)/4, and a
//! coherent state's quadrature mean equals its real displacement amplitude.
//! This convention reproduces the homodyne exponent κ/(4·N_B + 2) exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::bounds::{cs_single_shot_error, ChannelParams};
use crate::chernoff::DiscreteDistribution;
use crate::error::{Error, Result};
use crate::fock::{
    displaced_thermal_state, photon_number_distribution, thermal_state, TruncationConfig,
};

/// A pair of equal-variance Gaussian outcome distributions, one per
/// hypothesis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianPair {
    pub mean0: f64,
    pub mean1: f64,
    /// Common variance in quadrature units (vacuum = 1/4).
    pub variance: f64,
}

impl GaussianPair {
    pub fn new(mean0: f64, mean1: f64, variance: f64) -> Result<Self> {
        if variance <= 0.0 || !variance.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "variance must be positive and finite, got {variance}"
            )));
        }
        if mean1 < mean0 {
            return Err(Error::InvalidParameter(format!(
                "mean1 ({mean1}) must not be below mean0 ({mean0})"
            )));
        }
        Ok(Self {
            mean0,
            mean1,
            variance,
        })
    }

    pub fn separation(&self) -> f64 {
        self.mean1 - self.mean0
    }

    pub fn sigma(&self) -> f64 {
        self.variance.sqrt()
    }
}

/// How a decision threshold is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ThresholdPolicy {
    /// Midpoint between the two hypothesis means; optimal for equal priors
    /// and equal variances.
    Midpoint,
    /// Scan every integer threshold and keep the best (photon counting).
    ExhaustiveOptimal,
    Fixed(f64),
}

/// Tally of a seeded Monte Carlo run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialStats {
    pub trials: u64,
    pub errors: u64,
    pub seed: u64,
}

impl TrialStats {
    pub fn error_rate(&self) -> f64 {
        self.errors as f64 / self.trials as f64
    }

    /// 3·sqrt(p̂(1−p̂)/n) from the empirical rate.
    pub fn ci_halfwidth_3sigma(&self) -> f64 {
        let rate = self.error_rate();
        3.0 * (rate * (1.0 - rate) / self.trials as f64).sqrt()
    }
}

/// Receiver scenarios the Monte Carlo harness can exercise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    /// Photon counting on the super-mode: thermal(N_B) vs
    /// displaced_thermal(√(N·κ), N_B) with the exhaustively optimal
    /// integer threshold.
    PhotonCounting,
    /// Homodyne on the coherently combined return with the midpoint
    /// threshold.
    Homodyne,
    /// Majority vote over `shots` single-shot decisions, each wrong with
    /// probability `cs_single_shot_error(κ)`.
    MajorityVote,
}

impl Scenario {
    pub fn as_str(&self) -> &'static str {
        match self {
            Scenario::PhotonCounting => "photon-counting",
            Scenario::Homodyne => "homodyne",
            Scenario::MajorityVote => "majority-vote",
        }
    }
}

impl std::str::FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "photon-counting" => Ok(Scenario::PhotonCounting),
            "homodyne" => Ok(Scenario::Homodyne),
            "majority-vote" => Ok(Scenario::MajorityVote),
            other => Err(Error::InvalidParameter(format!(
                "unknown scenario '{other}' (expected photon-counting, homodyne, or majority-vote)"
            ))),
        }
    }
}

/// Error probability of threshold photon counting between two count
/// distributions under equal priors, together with the threshold used:
/// decide hypothesis 1 when the count is ≥ t, so
/// error(t) = (Σ_{n≥t} p0(n) + Σ_{n<t} p1(n)) / 2.
///
/// `ExhaustiveOptimal` scans every integer threshold (ties resolve to the
/// smallest); `Midpoint` rounds up the midpoint of the two means; `Fixed(v)`
/// rounds v up to the next integer threshold.
pub fn photon_counting_error(
    dist0: &DiscreteDistribution,
    dist1: &DiscreteDistribution,
    policy: ThresholdPolicy,
) -> Result<(f64, i64)> {
    if !dist0.same_support(dist1) {
        return Err(Error::SupportMismatch {
            left_first: dist0.first(),
            left_len: dist0.len(),
            right_first: dist1.first(),
            right_len: dist1.len(),
        });
    }
    let len = dist0.len();
    // error(t) for t in 0..=len (t indexes into the support, threshold value
    // is first + t): (tail0(t) + head1(t)) / 2.
    let error_at = |t: usize| -> f64 {
        let tail0: f64 = dist0.mass()[t..].iter().sum();
        let head1: f64 = dist1.mass()[..t].iter().sum();
        (tail0 + head1) / 2.0
    };

    let index = match policy {
        ThresholdPolicy::ExhaustiveOptimal => {
            let mut best = 0;
            let mut best_error = f64::INFINITY;
            for t in 0..=len {
                let error = error_at(t);
                if error < best_error {
                    best_error = error;
                    best = t;
                }
            }
            best
        }
        ThresholdPolicy::Midpoint => {
            let midpoint = (dist0.mean() + dist1.mean()) / 2.0;
            clamp_threshold(midpoint.ceil() as i64 - dist0.first(), len)
        }
        ThresholdPolicy::Fixed(value) => clamp_threshold(value.ceil() as i64 - dist0.first(), len),
    };
    Ok((error_at(index), dist0.first() + index as i64))
}

fn clamp_threshold(index: i64, len: usize) -> usize {
    index.clamp(0, len as i64) as usize
}

/// Quadrature statistics of the coherent-state transmitter seen by a
/// homodyne receiver.
///
/// With coherent combining over the `shots` transmissions the return is a
/// single super-mode of mean √(κ·N·n_s); without it, a per-shot pair with
/// mean √(κ·n_s). Either way the variance is (2·N_B + 1)/4.
pub fn homodyne_statistics(
    params: &ChannelParams,
    signal_photons_per_shot: f64,
    coherent_combining: bool,
) -> GaussianPair {
    assert!(
        signal_photons_per_shot > 0.0,
        "signal photons per shot must be positive"
    );
    let photons = if coherent_combining {
        params.kappa * params.shots as f64 * signal_photons_per_shot
    } else {
        params.kappa * signal_photons_per_shot
    };
    GaussianPair {
        mean0: 0.0,
        mean1: photons.sqrt(),
        variance: (2.0 * params.n_b + 1.0) / 4.0,
    }
}

/// Error probability of threshold detection between the two Gaussians under
/// equal priors. The midpoint threshold is optimal for equal variances, so
/// `Midpoint` and `ExhaustiveOptimal` coincide: Φ(−Δμ/2σ).
pub fn homodyne_error(pair: &GaussianPair, policy: ThresholdPolicy) -> f64 {
    let sigma = pair.sigma();
    match policy {
        ThresholdPolicy::Midpoint | ThresholdPolicy::ExhaustiveOptimal => {
            normal_cdf(-pair.separation() / (2.0 * sigma))
        }
        ThresholdPolicy::Fixed(threshold) => {
            let false_alarm = normal_cdf((pair.mean0 - threshold) / sigma);
            let miss = normal_cdf((threshold - pair.mean1) / sigma);
            (false_alarm + miss) / 2.0
        }
    }
}

/// Standard normal CDF via the complementary error function.
fn normal_cdf(z: f64) -> f64 {
    0.5 * libm::erfc(-z / std::f64::consts::SQRT_2)
}

/// Exact probability that a majority of `n_shots` independent per-shot
/// decisions, each wrong with probability p, is wrong:
/// Σ_{k > N/2} C(N,k) p^k (1−p)^{N−k}.
///
/// Terms are assembled in the log domain so large N stays stable. Requires
/// odd `n_shots`; an even count would need a tie rule.
pub fn majority_vote_exact(p: f64, n_shots: u64) -> Result<f64> {
    if n_shots.is_multiple_of(2) || n_shots == 0 {
        return Err(Error::EvenVoteCount(n_shots));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "per-shot error probability must lie in [0, 1], got {p}"
        )));
    }
    if p == 0.0 {
        return Ok(0.0);
    }
    if p == 1.0 {
        return Ok(1.0);
    }
    let n = n_shots as f64;
    let ln_p = p.ln();
    let ln_q = (1.0 - p).ln();
    let mut total = 0.0;
    for k in (n_shots / 2 + 1)..=n_shots {
        let kf = k as f64;
        let ln_term = ln_choose(n, kf) + kf * ln_p + (n - kf) * ln_q;
        total += ln_term.exp();
    }
    Ok(total.min(1.0))
}

fn ln_choose(n: f64, k: f64) -> f64 {
    libm::lgamma(n + 1.0) - libm::lgamma(k + 1.0) - libm::lgamma(n - k + 1.0)
}

/// The exact error probability the Monte Carlo harness is calibrated
/// against for each scenario.
pub fn scenario_exact_error(scenario: Scenario, params: &ChannelParams) -> Result<f64> {
    match scenario {
        Scenario::PhotonCounting => {
            let (dist0, dist1) = super_mode_distributions(params)?;
            Ok(photon_counting_error(&dist0, &dist1, ThresholdPolicy::ExhaustiveOptimal)?.0)
        }
        Scenario::Homodyne => {
            let pair = homodyne_statistics(params, 1.0, true);
            Ok(homodyne_error(&pair, ThresholdPolicy::Midpoint))
        }
        Scenario::MajorityVote => {
            let p = cs_single_shot_error(params.kappa)?;
            majority_vote_exact(p, params.shots)
        }
    }
}

/// Photon-count distributions of the coherently combined super-mode under
/// each hypothesis: thermal(N_B) vs displaced_thermal(√(N·κ), N_B), with
/// unity signal photons per shot.
pub fn super_mode_distributions(
    params: &ChannelParams,
) -> Result<(DiscreteDistribution, DiscreteDistribution)> {
    let received = params.kappa * params.shots as f64;
    let trunc = TruncationConfig::adaptive(received, params.n_b);
    let rho0 = thermal_state(params.n_b, &trunc)?;
    let rho1 = displaced_thermal_state(
        num_complex::Complex64::new(received.sqrt(), 0.0),
        params.n_b,
        &trunc,
    )?;
    Ok((
        photon_number_distribution(&rho0),
        photon_number_distribution(&rho1),
    ))
}

/// Runs `trials` seeded Monte Carlo trials of a receiver scenario: each
/// trial draws an equiprobable hypothesis, samples the scenario's outcome
/// distribution, applies the receiver rule, and tallies errors.
///
/// Every trial uses its own counter-based random substream derived from
/// (seed, trial index), so the tally is bit-identical for a given
/// (scenario, params, trials, seed) no matter how many workers execute it.
pub fn monte_carlo(
    scenario: Scenario,
    params: &ChannelParams,
    trials: u64,
    seed: u64,
) -> Result<TrialStats> {
    if trials < 10_000 {
        return Err(Error::InvalidParameter(format!(
            "at least 10000 trials required for a meaningful tally, got {trials}"
        )));
    }

    let errors = match scenario {
        Scenario::PhotonCounting => {
            let (dist0, dist1) = super_mode_distributions(params)?;
            let (_, threshold) =
                photon_counting_error(&dist0, &dist1, ThresholdPolicy::ExhaustiveOptimal)?;
            let cdf0 = dist0.cumulative();
            let cdf1 = dist1.cumulative();
            run_trials(trials, seed, move |rng| {
                let target_present = rng.random::<bool>();
                let cdf = if target_present { &cdf1 } else { &cdf0 };
                let count = sample_from_cdf(cdf, rng.random::<f64>());
                let decide_present = count >= threshold;
                decide_present != target_present
            })
        }
        Scenario::Homodyne => {
            let pair = homodyne_statistics(params, 1.0, true);
            let threshold = (pair.mean0 + pair.mean1) / 2.0;
            let sigma = pair.sigma();
            run_trials(trials, seed, move |rng| {
                let target_present = rng.random::<bool>();
                let mean = if target_present {
                    pair.mean1
                } else {
                    pair.mean0
                };
                let noise: f64 = StandardNormal.sample(rng);
                let quadrature = mean + sigma * noise;
                let decide_present = quadrature >= threshold;
                decide_present != target_present
            })
        }
        Scenario::MajorityVote => {
            if params.shots.is_multiple_of(2) {
                return Err(Error::EvenVoteCount(params.shots));
            }
            let p = cs_single_shot_error(params.kappa)?;
            let shots = params.shots;
            run_trials(trials, seed, move |rng| {
                let _target_present = rng.random::<bool>();
                // Each per-shot decision is wrong with probability p under
                // either hypothesis; the vote errs when wrong decisions win.
                let mut wrong = 0u64;
                for _ in 0..shots {
                    if rng.random::<f64>() < p {
                        wrong += 1;
                    }
                }
                wrong > shots / 2
            })
        }
    };

    Ok(TrialStats {
        trials,
        errors,
        seed,
    })
}

/// First index whose cumulative mass exceeds u; the sub-tolerance tail past
/// the cutoff collapses onto the last outcome.
fn sample_from_cdf(cdf: &[f64], u: f64) -> i64 {
    match cdf.binary_search_by(|probe| probe.partial_cmp(&u).unwrap()) {
        Ok(index) => index as i64 + 1,
        Err(index) => index.min(cdf.len() - 1) as i64,
    }
}

fn run_trials(trials: u64, seed: u64, trial: impl Fn(&mut ChaCha8Rng) -> bool + Sync) -> u64 {
    let base = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .into_par_iter()
        .map(|index| {
            let mut rng = base.clone();
            rng.set_stream(index);
            u64::from(trial(&mut rng))
        })
        .sum()
}
