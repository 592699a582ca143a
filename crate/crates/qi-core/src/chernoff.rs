//! Numerical quantum and classical Chernoff bounds.
//!
//! Both routes minimize the same kind of objective over s ∈ [0, 1]:
//! Tr(ρ0^s ρ1^{1−s}) for density operators, Σ p0(x)^s p1(x)^{1−s} for
//! discrete distributions. The minimum q gives the per-shot error exponent
//! −ln q, and the N-shot bound e^{−N·exponent}/2.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::fock::{clipped_pow, DensityOperator};

/// Number of points in the coarse s-grid scanned before refinement.
const S_GRID_POINTS: usize = 41;
/// Golden-section refinement stops once the bracket is narrower than this.
const S_REFINE_TOL: f64 = 1e-6;
/// Relative spread below which the objective counts as flat (pure states);
/// ties are reported at s* = 0.5 for deterministic output.
const FLAT_SPREAD_REL: f64 = 1e-12;

/// Result of a Chernoff minimization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChernoffResult {
    /// The Chernoff quantity q = min_s of the objective, in (0, 1].
    pub q: f64,
    /// Minimizing s.
    pub s_star: f64,
    /// Per-shot error exponent, −ln q.
    pub exponent: f64,
    /// Objective evaluations spent by the optimizer.
    pub evaluations: u32,
}

/// Error probability bound e^{−n_shots·exponent}/2, clipped to [0, 1/2].
pub fn bound_from_exponent(exponent: f64, n_shots: u64) -> f64 {
    assert!(exponent.is_finite(), "exponent must be finite");
    ((-(n_shots as f64) * exponent).exp() / 2.0).clamp(0.0, 0.5)
}

/// A probability mass function over a contiguous integer support
/// `first..first + len`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    first: i64,
    mass: Vec<f64>,
}

impl DiscreteDistribution {
    /// Total mass must be within 1e-9 of one; outcomes binned past the ends
    /// of the support have to be accounted for explicitly by the caller.
    pub fn new(first: i64, mass: Vec<f64>) -> Result<Self> {
        Self::with_mass_tolerance(first, mass, 1e-9)
    }

    /// As [`Self::new`] but with an explicit total-mass tolerance, for
    /// distributions read off states built under a looser leakage budget.
    pub fn with_mass_tolerance(first: i64, mass: Vec<f64>, tolerance: f64) -> Result<Self> {
        if mass.is_empty() {
            return Err(Error::InvalidParameter(
                "distribution must have at least one outcome".into(),
            ));
        }
        if let Some(bad) = mass.iter().find(|&&p| p < 0.0 || !p.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "probability mass must be finite and >= 0, got {bad}"
            )));
        }
        let total: f64 = mass.iter().sum();
        if (total - 1.0).abs() > tolerance {
            return Err(Error::InvalidParameter(format!(
                "total mass {total} deviates from 1 by more than {tolerance:e}"
            )));
        }
        Ok(Self { first, mass })
    }

    /// Counting distribution on 0..mass.len().
    pub fn from_counts(mass: Vec<f64>) -> Result<Self> {
        Self::new(0, mass)
    }

    pub fn first(&self) -> i64 {
        self.first
    }

    pub fn len(&self) -> usize {
        self.mass.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mass.is_empty()
    }

    pub fn mass(&self) -> &[f64] {
        &self.mass
    }

    pub fn total_mass(&self) -> f64 {
        self.mass.iter().sum()
    }

    pub fn mean(&self) -> f64 {
        self.mass
            .iter()
            .enumerate()
            .map(|(i, &p)| (self.first + i as i64) as f64 * p)
            .sum()
    }

    pub fn same_support(&self, other: &Self) -> bool {
        self.first == other.first && self.mass.len() == other.mass.len()
    }

    /// Running cumulative sums, used for inverse-CDF sampling.
    pub fn cumulative(&self) -> Vec<f64> {
        let mut acc = 0.0;
        self.mass
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect()
    }
}

struct Minimum {
    s_star: f64,
    value: f64,
    evaluations: u32,
}

/// Grid-then-golden-section minimizer on [0, 1]. The objective is assumed
/// smooth and convex in practice; the returned value is the best one seen,
/// so it never exceeds any grid evaluation (including s = 1/2).
fn minimize_unit_interval(mut objective: impl FnMut(f64) -> f64) -> Result<Minimum> {
    let mut evaluations = 0u32;
    let mut eval = |s: f64| -> Result<f64> {
        evaluations += 1;
        let value = objective(s);
        if !value.is_finite() {
            return Err(Error::NonFiniteObjective { s });
        }
        Ok(value)
    };

    let step = 1.0 / (S_GRID_POINTS - 1) as f64;
    let mut grid = Vec::with_capacity(S_GRID_POINTS);
    for k in 0..S_GRID_POINTS {
        let s = k as f64 * step;
        grid.push((s, eval(s)?));
    }

    let (mut best_s, mut best_value) = grid[0];
    let mut best_index = 0;
    let mut spread_max = f64::MIN;
    for (k, &(s, value)) in grid.iter().enumerate() {
        spread_max = spread_max.max(value);
        if value < best_value {
            best_value = value;
            best_s = s;
            best_index = k;
        }
    }

    if spread_max - best_value <= FLAT_SPREAD_REL * spread_max.max(f64::MIN_POSITIVE) {
        // Flat objective: report the midpoint for deterministic output.
        let value = grid[S_GRID_POINTS / 2].1;
        return Ok(Minimum {
            s_star: 0.5,
            value,
            evaluations,
        });
    }

    let mut lo = grid[best_index.saturating_sub(1)].0;
    let mut hi = grid[(best_index + 1).min(S_GRID_POINTS - 1)].0;

    // Golden-section on the bracketing interval.
    let inv_phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut s_b = hi - inv_phi * (hi - lo);
    let mut s_c = lo + inv_phi * (hi - lo);
    let mut f_b = eval(s_b)?;
    let mut f_c = eval(s_c)?;
    while hi - lo > S_REFINE_TOL {
        if f_b <= f_c {
            hi = s_c;
            s_c = s_b;
            f_c = f_b;
            s_b = hi - inv_phi * (hi - lo);
            f_b = eval(s_b)?;
        } else {
            lo = s_b;
            s_b = s_c;
            f_b = f_c;
            s_c = lo + inv_phi * (hi - lo);
            f_c = eval(s_c)?;
        }
        let (s, value) = if f_b <= f_c { (s_b, f_b) } else { (s_c, f_c) };
        if value < best_value {
            best_value = value;
            best_s = s;
        }
    }

    Ok(Minimum {
        s_star: best_s,
        value: best_value,
        evaluations,
    })
}

fn result_from_minimum(min: Minimum) -> ChernoffResult {
    let q = min.value.min(1.0);
    let exponent = (-q.ln()).max(0.0);
    ChernoffResult {
        q,
        s_star: min.s_star,
        exponent,
        evaluations: min.evaluations,
    }
}

/// Quantum Chernoff quantity q = min over s in \[0, 1\] of Tr(ρ0^s ρ1^{1−s}).
///
/// Both states are eigendecomposed once; every s-evaluation then reduces to
/// a weighted sum over eigenvalue powers with the squared eigenvector
/// overlaps as weights. Endpoints use the support-projector convention
/// ρ^0 := projector onto the support (eigenvalues above the clip).
pub fn quantum_chernoff(rho0: &DensityOperator, rho1: &DensityOperator) -> Result<ChernoffResult> {
    if rho0.dim() != rho1.dim() {
        return Err(Error::DimensionMismatch {
            left: rho0.dim(),
            right: rho1.dim(),
        });
    }
    let (lambda0, vectors0) = rho0.eigendecompose();
    let (lambda1, vectors1) = rho1.eigendecompose();
    let overlaps: DMatrix<f64> = (vectors0.adjoint() * vectors1).map(|z| z.norm_sqr());
    let dim = rho0.dim();

    let objective = |s: f64| -> f64 {
        let pow0: Vec<f64> = lambda0.iter().map(|&l| clipped_pow(l, s)).collect();
        let pow1: Vec<f64> = lambda1.iter().map(|&l| clipped_pow(l, 1.0 - s)).collect();
        let mut total = 0.0;
        for i in 0..dim {
            if pow0[i] == 0.0 {
                continue;
            }
            let mut row = 0.0;
            for j in 0..dim {
                row += overlaps[(i, j)] * pow1[j];
            }
            total += pow0[i] * row;
        }
        total
    };

    Ok(result_from_minimum(minimize_unit_interval(objective)?))
}

/// Classical Chernoff quantity q = min over s in \[0, 1\] of Σ_x p0(x)^s p1(x)^{1−s},
/// with 0^s·0^{1−s} := 0 on outcomes outside either support.
pub fn classical_chernoff(
    p0: &DiscreteDistribution,
    p1: &DiscreteDistribution,
) -> Result<ChernoffResult> {
    if !p0.same_support(p1) {
        return Err(Error::SupportMismatch {
            left_first: p0.first(),
            left_len: p0.len(),
            right_first: p1.first(),
            right_len: p1.len(),
        });
    }
    let objective = |s: f64| -> f64 {
        p0.mass()
            .iter()
            .zip(p1.mass())
            .map(|(&a, &b)| positive_pow(a, s) * positive_pow(b, 1.0 - s))
            .sum()
    };
    Ok(result_from_minimum(minimize_unit_interval(objective)?))
}

/// p^s with 0^s := 0 for every s in [0, 1], including s = 0.
fn positive_pow(p: f64, s: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else if s == 0.0 {
        1.0
    } else if s == 1.0 {
        p
    } else {
        p.powf(s)
    }
}

/// Classical Chernoff quantity for two equal-variance Gaussian densities,
/// evaluated by Simpson quadrature of ∫ p0(x)^s p1(x)^{1−s} dx.
///
/// This is the continuous-outcome oracle used to check homodyne exponents;
/// it shares the s-minimizer with the discrete routes but integrates the
/// exact normal densities instead of binning them.
pub fn gaussian_chernoff(mean0: f64, mean1: f64, variance: f64) -> Result<ChernoffResult> {
    if variance <= 0.0 || !variance.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "variance must be positive and finite, got {variance}"
        )));
    }
    let sigma = variance.sqrt();
    let lo = mean0.min(mean1) - 12.0 * sigma;
    let hi = mean0.max(mean1) + 12.0 * sigma;
    const INTERVALS: usize = 16_384; // Simpson error ~ (h/sigma)^4, far below 1e-12 here
    let h = (hi - lo) / INTERVALS as f64;
    let ln_norm = -(sigma * (2.0 * std::f64::consts::PI).sqrt()).ln();

    let objective = |s: f64| -> f64 {
        let ln_density = |x: f64, mean: f64| -> f64 {
            let z = (x - mean) / sigma;
            ln_norm - 0.5 * z * z
        };
        let integrand =
            |x: f64| -> f64 { (s * ln_density(x, mean0) + (1.0 - s) * ln_density(x, mean1)).exp() };
        let mut total = integrand(lo) + integrand(hi);
        for k in 1..INTERVALS {
            let weight = if k % 2 == 1 { 4.0 } else { 2.0 };
            total += weight * integrand(lo + k as f64 * h);
        }
        total * h / 3.0
    };

    Ok(result_from_minimum(minimize_unit_interval(objective)?))
}
