//! Truncated Fock-space state construction and exact quantum-detection
//! linear algebra.
//!
//! States live in the finite number basis |0⟩…|dim−1⟩. Constructors track how
//! much probability mass the cutoff discards and fail loudly when it exceeds
//! the configured tolerance; states are never silently renormalized, so
//! downstream consistency checks see truncation error directly.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::chernoff::DiscreteDistribution;
use crate::error::{Error, Result};

/// Elementwise Hermiticity tolerance for density operators.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Eigenvalues with magnitude below this are treated as exactly zero in
/// fractional powers and trace norms. Finite-precision eigensolvers emit
/// tiny negative eigenvalues for rank-deficient states; the clip keeps
/// 0^s well defined on the support.
pub const EIGENVALUE_CLIP: f64 = 1e-12;

/// Most negative eigenvalue tolerated from a finite-precision eigensolver
/// before a matrix is rejected as non-positive.
pub const MIN_EIGENVALUE: f64 = -1e-10;

/// Fock-basis truncation: dimension and the probability mass allowed to
/// fall outside it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationConfig {
    pub dim: usize,
    pub leakage_tol: f64,
}

impl TruncationConfig {
    pub const DEFAULT_LEAKAGE_TOL: f64 = 1e-10;

    pub fn new(dim: usize, leakage_tol: f64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidParameter(format!(
                "truncation dim must be >= 2, got {dim}"
            )));
        }
        if !(leakage_tol > 0.0 && leakage_tol < 1e-3) {
            return Err(Error::InvalidParameter(format!(
                "leakage tolerance must lie in (0, 1e-3), got {leakage_tol:e}"
            )));
        }
        Ok(Self { dim, leakage_tol })
    }

    pub fn with_dim(dim: usize) -> Result<Self> {
        Self::new(dim, Self::DEFAULT_LEAKAGE_TOL)
    }

    /// Picks a dimension large enough for a displaced thermal state with
    /// coherent mean photon number `coherent_mean` and thermal occupation
    /// `nbar`.
    ///
    /// `mean + 10·sqrt(mean+1) + 10` covers Poissonian tails, but thermal
    /// occupation decays only geometrically, so the rule takes whichever is
    /// larger: the Poissonian estimate or the geometric-tail cutoff (with two
    /// extra decades of headroom plus room for the displacement).
    pub fn adaptive(coherent_mean: f64, nbar: f64) -> Self {
        let tol = Self::DEFAULT_LEAKAGE_TOL;
        let mean = coherent_mean + nbar;
        let poissonian = mean + 10.0 * (mean + 1.0).sqrt() + 10.0;
        let geometric = if nbar > 0.0 {
            let ratio = nbar / (nbar + 1.0);
            (tol * 1e-2).ln() / ratio.ln() + coherent_mean + 10.0 * (coherent_mean + 1.0).sqrt()
        } else {
            0.0
        };
        let dim = (poissonian.max(geometric).ceil() as usize).max(2);
        Self {
            dim,
            leakage_tol: tol,
        }
    }
}

/// A pure state in the truncated Fock basis. The squared norm may fall short
/// of one by at most the construction tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: DVector<Complex64>,
    leakage_tol: f64,
}

impl StateVector {
    pub fn new(amplitudes: DVector<Complex64>, leakage_tol: f64) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        let deficiency = 1.0 - norm_sq;
        if deficiency > leakage_tol || deficiency < -1e-12 {
            return Err(Error::InvalidState(format!(
                "state vector squared norm {norm_sq} outside [1 - {leakage_tol:e}, 1]"
            )));
        }
        Ok(Self {
            amplitudes,
            leakage_tol,
        })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn leakage_tol(&self) -> f64 {
        self.leakage_tol
    }

    /// The projector |ψ⟩⟨ψ| as a density operator.
    pub fn to_density(&self) -> DensityOperator {
        let outer = &self.amplitudes * self.amplitudes.adjoint();
        DensityOperator::new(outer, self.leakage_tol)
            .expect("outer product of a valid state vector is a valid density operator")
    }
}

/// A Hermitian, positive, trace-(almost-)one operator in the truncated Fock
/// basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    matrix: DMatrix<Complex64>,
    leakage_tol: f64,
}

impl DensityOperator {
    /// Validates Hermiticity (elementwise within [`HERMITICITY_TOL`]), the
    /// trace window `[1 - leakage_tol, 1]`, and positivity down to
    /// [`MIN_EIGENVALUE`].
    pub fn new(matrix: DMatrix<Complex64>, leakage_tol: f64) -> Result<Self> {
        let n = matrix.nrows();
        if n != matrix.ncols() || n < 1 {
            return Err(Error::InvalidState(format!(
                "matrix is not square: {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        for i in 0..n {
            for j in i..n {
                let delta = matrix[(i, j)] - matrix[(j, i)].conj();
                if delta.norm() > HERMITICITY_TOL {
                    return Err(Error::InvalidState(format!(
                        "not Hermitian at ({i}, {j}): asymmetry {:.3e}",
                        delta.norm()
                    )));
                }
            }
        }
        let trace: Complex64 = matrix.diagonal().iter().sum();
        if trace.im.abs() > HERMITICITY_TOL {
            return Err(Error::InvalidState(format!(
                "trace has imaginary part {:.3e}",
                trace.im
            )));
        }
        if trace.re < 1.0 - leakage_tol || trace.re > 1.0 + 1e-12 {
            return Err(Error::InvalidState(format!(
                "trace {} outside [1 - {leakage_tol:e}, 1]",
                trace.re
            )));
        }
        let min_eig = matrix
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min);
        if min_eig < MIN_EIGENVALUE {
            return Err(Error::InvalidState(format!(
                "minimum eigenvalue {min_eig:.3e} below {MIN_EIGENVALUE:e}"
            )));
        }
        Ok(Self {
            matrix,
            leakage_tol,
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn leakage_tol(&self) -> f64 {
        self.leakage_tol
    }

    pub fn trace(&self) -> f64 {
        self.matrix.diagonal().iter().map(|z| z.re).sum()
    }

    /// Probability mass lost to the truncation, `1 - trace`.
    pub fn trace_deficiency(&self) -> f64 {
        1.0 - self.trace()
    }

    /// ⟨n̂⟩ = Tr(ρ n̂).
    pub fn mean_photon_number(&self) -> f64 {
        self.matrix
            .diagonal()
            .iter()
            .enumerate()
            .map(|(n, z)| n as f64 * z.re)
            .sum()
    }

    /// Eigenvalues and eigenvectors. The eigenvalue order is unspecified but
    /// always pairs with the eigenvector columns.
    pub fn eigendecompose(&self) -> (DVector<f64>, DMatrix<Complex64>) {
        let eig = self.matrix.clone().symmetric_eigen();
        (eig.eigenvalues, eig.eigenvectors)
    }

    /// Smallest eigenvalue; useful when asserting positivity.
    pub fn min_eigenvalue(&self) -> f64 {
        self.matrix
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

/// Coherent state |α⟩ with amplitude `alpha^n e^{-|α|²/2} / √(n!)` at photon
/// number n.
pub fn coherent_state(alpha: Complex64, trunc: &TruncationConfig) -> Result<StateVector> {
    let dim = trunc.dim;
    let mut amplitudes = DVector::zeros(dim);
    let mut coeff = Complex64::new((-alpha.norm_sqr() / 2.0).exp(), 0.0);
    amplitudes[0] = coeff;
    for n in 1..dim {
        coeff *= alpha / Complex64::new((n as f64).sqrt(), 0.0);
        amplitudes[n] = coeff;
    }
    let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
    let leakage = 1.0 - norm_sq;
    if leakage > trunc.leakage_tol {
        return Err(Error::TruncationInadequate {
            dim,
            leakage,
            tolerance: trunc.leakage_tol,
            suggested_dim: suggest_dim(alpha.norm_sqr(), 0.0, dim),
        });
    }
    StateVector::new(amplitudes, trunc.leakage_tol)
}

/// Number state |n⟩.
pub fn number_state(n: usize, trunc: &TruncationConfig) -> Result<StateVector> {
    if n >= trunc.dim {
        return Err(Error::InvalidParameter(format!(
            "number state {n} does not fit in dim {}",
            trunc.dim
        )));
    }
    let mut amplitudes = DVector::zeros(trunc.dim);
    amplitudes[n] = Complex64::new(1.0, 0.0);
    StateVector::new(amplitudes, trunc.leakage_tol)
}

/// Thermal state with mean photon number `nbar`: diagonal Bose–Einstein
/// weights `nbar^n / (nbar+1)^(n+1)`.
pub fn thermal_state(nbar: f64, trunc: &TruncationConfig) -> Result<DensityOperator> {
    if nbar < 0.0 || !nbar.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "thermal occupation must be >= 0, got {nbar}"
        )));
    }
    let dim = trunc.dim;
    let ratio = nbar / (nbar + 1.0);
    // Geometric tail beyond the cutoff: sum_{n >= dim} p_n = ratio^dim.
    let leakage = ratio.powi(dim as i32);
    if leakage > trunc.leakage_tol {
        return Err(Error::TruncationInadequate {
            dim,
            leakage,
            tolerance: trunc.leakage_tol,
            suggested_dim: suggest_dim(0.0, nbar, dim),
        });
    }
    let mut matrix = DMatrix::zeros(dim, dim);
    let mut weight = 1.0 / (nbar + 1.0);
    for n in 0..dim {
        matrix[(n, n)] = Complex64::new(weight, 0.0);
        weight *= ratio;
    }
    DensityOperator::new(matrix, trunc.leakage_tol)
}

/// Displaced thermal state D(α) ρ_thermal(nbar) D†(α): a coherent return of
/// amplitude α embedded in thermal background.
///
/// The displacement is applied on a workspace of twice the target dimension
/// and then cropped; under truncation the displacement unitary is only
/// approximately unitary, and oversizing confines that error to the discarded
/// block. The cropped trace must still be within tolerance of one.
pub fn displaced_thermal_state(
    alpha: Complex64,
    nbar: f64,
    trunc: &TruncationConfig,
) -> Result<DensityOperator> {
    if nbar < 0.0 || !nbar.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "thermal occupation must be >= 0, got {nbar}"
        )));
    }
    let dim = trunc.dim;
    let workspace = 2 * dim;

    // Thermal weights on the workspace, built raw: the authoritative leakage
    // check happens after displacing and cropping.
    let ratio = nbar / (nbar + 1.0);
    let mut weights = DVector::zeros(workspace);
    let mut weight = 1.0 / (nbar + 1.0);
    for n in 0..workspace {
        weights[n] = weight;
        weight *= ratio;
    }

    let displacement = displacement_operator(alpha, workspace);
    // D · diag(w) · D†
    let mut scaled = displacement.clone();
    for (j, &w) in weights.iter().enumerate() {
        let mut col = scaled.column_mut(j);
        col *= Complex64::new(w, 0.0);
    }
    let displaced = scaled * displacement.adjoint();

    // Crop to the target dimension and restore exact Hermiticity, which
    // matrix products erode at the few-ulp level.
    let cropped = displaced.view((0, 0), (dim, dim)).into_owned();
    let matrix = (&cropped + cropped.adjoint()) * Complex64::new(0.5, 0.0);

    let trace: f64 = matrix.diagonal().iter().map(|z| z.re).sum();
    let leakage = 1.0 - trace;
    if leakage > trunc.leakage_tol {
        return Err(Error::TruncationInadequate {
            dim,
            leakage,
            tolerance: trunc.leakage_tol,
            suggested_dim: suggest_dim(alpha.norm_sqr(), nbar, dim),
        });
    }
    DensityOperator::new(matrix, trunc.leakage_tol)
}

/// Displacement unitary exp(α a† − α* a) on a `dim`-dimensional space.
///
/// α a† − α* a is anti-Hermitian, so i(α a† − α* a) is Hermitian and the
/// exponential follows from one eigendecomposition.
fn displacement_operator(alpha: Complex64, dim: usize) -> DMatrix<Complex64> {
    let i = Complex64::new(0.0, 1.0);
    let mut herm = DMatrix::zeros(dim, dim);
    for n in 1..dim {
        let root = Complex64::new((n as f64).sqrt(), 0.0);
        herm[(n, n - 1)] = i * alpha * root;
        herm[(n - 1, n)] = -i * alpha.conj() * root;
    }
    let eig = herm.symmetric_eigen();
    let mut columns = eig.eigenvectors.clone();
    for (j, &lambda) in eig.eigenvalues.iter().enumerate() {
        let phase = Complex64::new(0.0, -lambda).exp();
        let mut col = columns.column_mut(j);
        col *= phase;
    }
    columns * eig.eigenvectors.adjoint()
}

fn suggest_dim(coherent_mean: f64, nbar: f64, current: usize) -> usize {
    let adaptive = TruncationConfig::adaptive(coherent_mean, nbar).dim;
    if adaptive > current {
        adaptive
    } else {
        current * 2
    }
}

/// ρ^s via eigendecomposition, for s ∈ [0, 1]. Eigenvalues below
/// [`EIGENVALUE_CLIP`] are treated as exactly zero and 0^s := 0, so s = 0
/// yields the support projector.
pub fn matrix_fractional_power(rho: &DensityOperator, s: f64) -> DMatrix<Complex64> {
    assert!(
        (0.0..=1.0).contains(&s),
        "fractional power exponent must lie in [0, 1], got {s}"
    );
    let (eigenvalues, vectors) = rho.eigendecompose();
    let mut scaled = vectors.clone();
    for (j, &lambda) in eigenvalues.iter().enumerate() {
        let powered = clipped_pow(lambda, s);
        let mut col = scaled.column_mut(j);
        col *= Complex64::new(powered, 0.0);
    }
    scaled * vectors.adjoint()
}

/// λ^s with the support convention: anything below the clip is exactly zero,
/// including 0^0.
pub(crate) fn clipped_pow(lambda: f64, s: f64) -> f64 {
    if lambda < EIGENVALUE_CLIP {
        0.0
    } else if s == 1.0 {
        lambda
    } else if s == 0.0 {
        1.0
    } else {
        lambda.powf(s)
    }
}

/// Minimum error probability for discriminating ρ0 (prior `prior0`) from ρ1
/// (prior `1 - prior0`) with the optimal quantum measurement:
/// `(1 − ‖p1 ρ1 − p0 ρ0‖₁) / 2`.
pub fn helstrom_error(rho0: &DensityOperator, rho1: &DensityOperator, prior0: f64) -> Result<f64> {
    if !(prior0 > 0.0 && prior0 < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "prior must lie in (0, 1), got {prior0}"
        )));
    }
    if rho0.dim() != rho1.dim() {
        return Err(Error::DimensionMismatch {
            left: rho0.dim(),
            right: rho1.dim(),
        });
    }
    let prior1 = 1.0 - prior0;
    let delta =
        rho1.matrix() * Complex64::new(prior1, 0.0) - rho0.matrix() * Complex64::new(prior0, 0.0);
    let eigenvalues = delta.symmetric_eigen().eigenvalues;
    let trace_norm: f64 = eigenvalues
        .iter()
        .map(|&lambda| {
            if lambda.abs() < EIGENVALUE_CLIP {
                0.0
            } else {
                lambda.abs()
            }
        })
        .sum();
    Ok(((1.0 - trace_norm) / 2.0).clamp(0.0, prior0.min(prior1)))
}

/// Photon counting statistics: the diagonal of ρ as a probability mass
/// function over n = 0…dim−1.
pub fn photon_number_distribution(rho: &DensityOperator) -> DiscreteDistribution {
    let mass: Vec<f64> = rho
        .matrix
        .diagonal()
        .iter()
        .map(|z| z.re.max(0.0))
        .collect();
    DiscreteDistribution::with_mass_tolerance(0, mass, rho.leakage_tol.max(1e-9))
        .expect("diagonal of a valid density operator is a valid pmf")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cfg(dim: usize) -> TruncationConfig {
        TruncationConfig::with_dim(dim).unwrap()
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn truncation_config_rejects_bad_inputs() {
        assert!(TruncationConfig::new(1, 1e-10).is_err());
        assert!(TruncationConfig::new(8, 0.0).is_err());
        assert!(TruncationConfig::new(8, 1e-2).is_err());
        assert!(TruncationConfig::new(2, 1e-10).is_ok());
    }

    #[test]
    fn adaptive_dim_covers_thermal_tails() {
        for &(coh, nbar) in &[(0.0, 0.0), (0.05, 1.0), (5.0, 0.01), (0.02, 0.5)] {
            let trunc = TruncationConfig::adaptive(coh, nbar);
            thermal_state(nbar, &trunc).unwrap();
            displaced_thermal_state(c(coh.sqrt()), nbar, &trunc).unwrap();
        }
    }

    #[test]
    fn coherent_vacuum_is_basis_state() {
        let psi = coherent_state(c(0.0), &cfg(8)).unwrap();
        assert_eq!(psi.amplitudes()[0], c(1.0));
        for n in 1..8 {
            assert_eq!(psi.amplitudes()[n], c(0.0));
        }
    }

    #[test]
    fn coherent_amplitudes_match_closed_form() {
        let psi = coherent_state(c(1.0), &cfg(16)).unwrap();
        // amplitude at n: alpha^n e^{-|alpha|^2/2} / sqrt(n!)
        let a0 = (-0.5f64).exp();
        assert_relative_eq!(psi.amplitudes()[0].re, a0, max_relative = 1e-14);
        assert_relative_eq!(psi.amplitudes()[0].re, 0.6065306597126334, epsilon = 1e-12);
        assert_relative_eq!(
            psi.amplitudes()[3].re,
            a0 / 6.0f64.sqrt(),
            max_relative = 1e-14
        );
        assert!(psi.norm_sq() >= 1.0 - 1e-10);
    }

    #[test]
    fn coherent_truncation_failure_is_loud() {
        let err = coherent_state(c(3.0), &cfg(4)).unwrap_err();
        match err {
            Error::TruncationInadequate { suggested_dim, .. } => assert!(suggested_dim > 4),
            other => panic!("expected truncation error, got {other:?}"),
        }
    }

    #[test]
    fn thermal_zero_temperature_is_vacuum_projector() {
        let rho = thermal_state(0.0, &cfg(8)).unwrap();
        assert_eq!(rho.matrix()[(0, 0)], c(1.0));
        for n in 1..8 {
            assert_eq!(rho.matrix()[(n, n)], c(0.0));
        }
    }

    #[test]
    fn thermal_entries_are_bose_einstein() {
        let rho = thermal_state(1.0, &cfg(40)).unwrap();
        for n in 0..10 {
            assert_relative_eq!(
                rho.matrix()[(n, n)].re,
                0.5f64.powi(n as i32 + 1),
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn thermal_truncation_failure_is_loud() {
        let err = thermal_state(1.0, &cfg(4)).unwrap_err();
        assert!(matches!(err, Error::TruncationInadequate { .. }));
    }

    #[test]
    fn displaced_thermal_zero_displacement_matches_thermal() {
        let trunc = cfg(32);
        let direct = thermal_state(0.5, &trunc).unwrap();
        let displaced = displaced_thermal_state(c(0.0), 0.5, &trunc).unwrap();
        let diff = (direct.matrix() - displaced.matrix())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        assert!(diff < 1e-12, "max deviation {diff:e}");
    }

    #[test]
    fn displaced_thermal_zero_temperature_matches_coherent_projector() {
        let trunc = cfg(32);
        let projector = coherent_state(c(1.0), &trunc).unwrap().to_density();
        let displaced = displaced_thermal_state(c(1.0), 0.0, &trunc).unwrap();
        let diff = (projector.matrix() - displaced.matrix())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        assert!(diff < 1e-10, "max deviation {diff:e}");
    }

    #[test]
    fn displaced_thermal_mean_photon_number() {
        let rho = displaced_thermal_state(c(0.3), 0.2, &cfg(32)).unwrap();
        assert_relative_eq!(rho.mean_photon_number(), 0.29, epsilon = 1e-8);
    }

    #[test]
    fn displaced_thermal_accepts_complex_amplitudes() {
        // |alpha|^2 = 0.25 regardless of phase.
        let alpha = Complex64::new(0.3, 0.4);
        let rho = displaced_thermal_state(alpha, 0.2, &cfg(32)).unwrap();
        assert_relative_eq!(rho.mean_photon_number(), 0.45, epsilon = 1e-8);
        let phased = displaced_thermal_state(c(0.5), 0.2, &cfg(32)).unwrap();
        // A displacement phase rotates coherences but not photon statistics.
        for n in 0..10 {
            assert_relative_eq!(
                rho.matrix()[(n, n)].re,
                phased.matrix()[(n, n)].re,
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn fractional_power_at_one_is_identity_map() {
        let rho = displaced_thermal_state(c(0.4), 0.3, &cfg(32)).unwrap();
        let powered = matrix_fractional_power(&rho, 1.0);
        let diff = (&powered - rho.matrix())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        assert!(diff < 1e-12, "max deviation {diff:e}");
    }

    #[test]
    fn fractional_power_of_projector_is_projector() {
        let projector = coherent_state(c(0.7), &cfg(24)).unwrap().to_density();
        for &s in &[0.0, 0.3, 0.5, 0.9] {
            let powered = matrix_fractional_power(&projector, s);
            let diff = (&powered - projector.matrix())
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            assert!(diff < 1e-9, "s = {s}: max deviation {diff:e}");
        }
    }

    #[test]
    fn fractional_power_of_thermal_takes_scalar_powers() {
        let rho = thermal_state(1.0, &cfg(40)).unwrap();
        let half = matrix_fractional_power(&rho, 0.5);
        for n in 0..12 {
            assert_relative_eq!(
                half[(n, n)].re,
                0.5f64.powf((n as f64 + 1.0) / 2.0),
                max_relative = 1e-10
            );
        }
    }

    #[test]
    fn helstrom_identical_states_is_half() {
        let rho = thermal_state(0.4, &cfg(32)).unwrap();
        let error = helstrom_error(&rho, &rho, 0.5).unwrap();
        assert_relative_eq!(error, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn helstrom_orthogonal_states_is_zero() {
        let trunc = cfg(8);
        let zero = number_state(0, &trunc).unwrap().to_density();
        let one = number_state(1, &trunc).unwrap().to_density();
        let error = helstrom_error(&zero, &one, 0.5).unwrap();
        assert!(error.abs() < 1e-12);
    }

    #[test]
    fn helstrom_vacuum_vs_weak_coherent_closed_form() {
        // Pure-state Helstrom with overlap e^{-kappa}:
        // (1 - sqrt(1 - e^{-kappa})) / 2.
        let trunc = cfg(30);
        let vacuum = coherent_state(c(0.0), &trunc).unwrap().to_density();
        let signal = coherent_state(c(0.04f64.sqrt()), &trunc)
            .unwrap()
            .to_density();
        let numeric = helstrom_error(&vacuum, &signal, 0.5).unwrap();
        let closed = (1.0 - (1.0 - (-0.04f64).exp()).sqrt()) / 2.0;
        assert!((numeric - closed).abs() < 1e-10);
        assert_relative_eq!(numeric, 0.40099, epsilon = 1e-5);
    }

    #[test]
    fn helstrom_swap_symmetry_with_unequal_priors() {
        let trunc = cfg(32);
        let rho0 = thermal_state(0.3, &trunc).unwrap();
        let rho1 = displaced_thermal_state(c(0.5), 0.3, &trunc).unwrap();
        let forward = helstrom_error(&rho0, &rho1, 0.3).unwrap();
        let swapped = helstrom_error(&rho1, &rho0, 0.7).unwrap();
        assert_relative_eq!(forward, swapped, epsilon = 1e-12);
    }

    #[test]
    fn helstrom_rejects_dimension_mismatch() {
        let a = thermal_state(0.1, &cfg(16)).unwrap();
        let b = thermal_state(0.1, &cfg(24)).unwrap();
        assert!(matches!(
            helstrom_error(&a, &b, 0.5),
            Err(Error::DimensionMismatch {
                left: 16,
                right: 24
            })
        ));
    }

    #[test]
    fn photon_distribution_of_vacuum() {
        let vacuum = coherent_state(c(0.0), &cfg(8)).unwrap().to_density();
        let pmf = photon_number_distribution(&vacuum);
        assert_eq!(pmf.mass()[0], 1.0);
        assert!(pmf.mass()[1..].iter().all(|&p| p == 0.0));
    }

    #[test]
    fn photon_distribution_of_coherent_is_poisson() {
        let rho = coherent_state(c(1.0), &cfg(24)).unwrap().to_density();
        let pmf = photon_number_distribution(&rho);
        assert_relative_eq!(pmf.mass()[0], (-1.0f64).exp(), max_relative = 1e-13);
        assert_relative_eq!(pmf.mass()[0], 0.36787944117144233, epsilon = 1e-12);
        // Poisson(1): p(n) = e^{-1} / n!
        assert_relative_eq!(pmf.mass()[3], (-1.0f64).exp() / 6.0, max_relative = 1e-12);
    }

    #[test]
    fn photon_distribution_of_thermal_is_geometric() {
        let rho = thermal_state(1.0, &cfg(40)).unwrap();
        let pmf = photon_number_distribution(&rho);
        for n in 0..8 {
            assert_relative_eq!(
                pmf.mass()[n],
                0.5f64.powi(n as i32 + 1),
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn density_operator_rejects_non_hermitian() {
        let mut matrix = DMatrix::<Complex64>::zeros(2, 2);
        matrix[(0, 0)] = c(0.5);
        matrix[(1, 1)] = c(0.5);
        matrix[(0, 1)] = Complex64::new(0.1, 0.1);
        matrix[(1, 0)] = Complex64::new(0.1, 0.1); // should be the conjugate
        assert!(matches!(
            DensityOperator::new(matrix, 1e-10),
            Err(Error::InvalidState(_))
        ));
    }

    #[test]
    fn density_operator_rejects_bad_trace() {
        let mut matrix = DMatrix::<Complex64>::zeros(2, 2);
        matrix[(0, 0)] = c(0.7);
        matrix[(1, 1)] = c(0.7);
        assert!(matches!(
            DensityOperator::new(matrix, 1e-10),
            Err(Error::InvalidState(_))
        ));
    }

    #[test]
    fn density_operator_rejects_negative_eigenvalues() {
        let mut matrix = DMatrix::<Complex64>::zeros(2, 2);
        matrix[(0, 0)] = c(1.1);
        matrix[(1, 1)] = c(-0.1);
        assert!(matches!(
            DensityOperator::new(matrix, 1e-10),
            Err(Error::InvalidState(_))
        ));
    }
}
