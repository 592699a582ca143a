//! Closed-form error-probability bounds for the three transmitters compared
//! here: quantum illumination (QI) in the single-photon regime, unentangled
//! single-photon (SP) transmission, and the coherent-state (CS) transmitter,
//! plus the majority-vote and homodyne receivers for the latter.
//!
//! The QI and SP bounds hold only inside their "good" (background-independent)
//! or "bad" (background-limited) regimes, stated asymptotically via ≪ / ≫.
//! Those are operationalized by [`MarginPolicy`]: `x ≪ y` means
//! `x · factor ≤ y`. Points satisfying neither regime classify as ambiguous
//! and the bounds refuse to extrapolate there.

use crate::chernoff::bound_from_exponent;
use crate::error::{Error, Result};

/// Physical scenario shared by all bound calculators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    /// Transmitter-to-receiver coupling when the target is present, in (0, 1].
    pub kappa: f64,
    /// Average received background photons per mode, ≥ 0.
    pub n_b: f64,
    /// Temporal modes over which the QI state is entangled, ≥ 1.
    pub modes: u64,
    /// Repeated transmissions, ≥ 1.
    pub shots: u64,
}

impl ChannelParams {
    pub fn new(kappa: f64, n_b: f64, modes: u64, shots: u64) -> Result<Self> {
        if !(kappa > 0.0 && kappa <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "kappa must lie in (0, 1], got {kappa}"
            )));
        }
        if n_b < 0.0 || !n_b.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "n_b must be finite and >= 0, got {n_b}"
            )));
        }
        if modes < 1 {
            return Err(Error::InvalidParameter("modes must be >= 1".into()));
        }
        if shots < 1 {
            return Err(Error::InvalidParameter("shots must be >= 1".into()));
        }
        Ok(Self {
            kappa,
            n_b,
            modes,
            shots,
        })
    }
}

/// Numeric stand-in for the asymptotic conditions: `x ≪ y` holds when
/// `x · factor ≤ y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarginPolicy {
    factor: f64,
}

impl MarginPolicy {
    pub const DEFAULT_FACTOR: f64 = 10.0;

    pub fn new(factor: f64) -> Result<Self> {
        if factor < 2.0 || !factor.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "margin factor must be finite and >= 2, got {factor}"
            )));
        }
        Ok(Self { factor })
    }

    pub fn factor(&self) -> f64 {
        self.factor
    }

    fn much_less(&self, lhs: f64, rhs: f64) -> bool {
        lhs * self.factor <= rhs
    }
}

impl Default for MarginPolicy {
    fn default() -> Self {
        Self {
            factor: Self::DEFAULT_FACTOR,
        }
    }
}

/// Which transmitter's regime conditions to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum System {
    QuantumIllumination,
    SinglePhoton,
}

impl System {
    pub fn short_name(&self) -> &'static str {
        match self {
            System::QuantumIllumination => "qi",
            System::SinglePhoton => "sp",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegimeLabel {
    Good,
    Bad,
    OutsideModel,
    Ambiguous,
}

impl RegimeLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegimeLabel::Good => "good",
            RegimeLabel::Bad => "bad",
            RegimeLabel::OutsideModel => "outside-model",
            RegimeLabel::Ambiguous => "ambiguous",
        }
    }
}

impl std::fmt::Display for RegimeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One evaluated inequality: satisfied means `lhs · margin ≤ rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegimeCheck {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub satisfied: bool,
}

/// Regime classification together with every inequality that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Regime {
    pub label: RegimeLabel,
    pub checks: Vec<RegimeCheck>,
}

/// Identifies which closed form produced a [`BoundResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    QiGoodRegime,
    QiBadRegime,
    SpGoodRegime,
    SpBadRegime,
    CoherentStateChernoff,
    MajorityVoteChernoff,
    HomodyneChernoff,
}

/// An error-probability bound as a per-shot exponent plus the N-shot bound
/// e^{−N·exponent}/2, with the regime evidence attached when the formula is
/// regime-restricted.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult {
    pub exponent_per_shot: f64,
    pub bound: f64,
    /// `None` for formulas valid at any channel parameters (CS, homodyne,
    /// majority vote); `Some` for the regime-restricted QI/SP forms.
    pub regime: Option<Regime>,
    pub formula: Formula,
}

impl BoundResult {
    fn new(exponent_per_shot: f64, shots: u64, regime: Option<Regime>, formula: Formula) -> Self {
        Self {
            exponent_per_shot,
            bound: bound_from_exponent(exponent_per_shot, shots),
            regime,
            formula,
        }
    }
}

/// Evaluates the defining inequalities of `system` at the given margin.
///
/// QI: good needs κ ≪ 1, M·N_B ≪ 1, and κ ≫ N_B/M; bad needs κ ≪ N_B/M
/// (still with M·N_B ≪ 1). SP replaces N_B/M with N_B. Whenever κ ≪ 1 or
/// M·N_B ≪ 1 fails the point is outside the single-photon model entirely;
/// in-model points satisfying neither branch are ambiguous.
pub fn classify_regime(params: &ChannelParams, system: System, margin: &MarginPolicy) -> Regime {
    let factor = margin.factor();
    let background_share = match system {
        System::QuantumIllumination => params.n_b / params.modes as f64,
        System::SinglePhoton => params.n_b,
    };
    let total_background = params.modes as f64 * params.n_b;

    let kappa_small = RegimeCheck {
        name: "kappa_well_below_unity",
        lhs: params.kappa,
        rhs: 1.0,
        margin: factor,
        satisfied: margin.much_less(params.kappa, 1.0),
    };
    let background_small = RegimeCheck {
        name: "total_background_well_below_unity",
        lhs: total_background,
        rhs: 1.0,
        margin: factor,
        satisfied: margin.much_less(total_background, 1.0),
    };
    let kappa_dominates = RegimeCheck {
        name: match system {
            System::QuantumIllumination => "kappa_well_above_background_per_mode",
            System::SinglePhoton => "kappa_well_above_background",
        },
        lhs: background_share,
        rhs: params.kappa,
        margin: factor,
        satisfied: margin.much_less(background_share, params.kappa),
    };
    let background_dominates = RegimeCheck {
        name: match system {
            System::QuantumIllumination => "kappa_well_below_background_per_mode",
            System::SinglePhoton => "kappa_well_below_background",
        },
        lhs: params.kappa,
        rhs: background_share,
        margin: factor,
        satisfied: margin.much_less(params.kappa, background_share),
    };

    let label = if !kappa_small.satisfied || !background_small.satisfied {
        RegimeLabel::OutsideModel
    } else if kappa_dominates.satisfied {
        RegimeLabel::Good
    } else if background_dominates.satisfied {
        RegimeLabel::Bad
    } else {
        RegimeLabel::Ambiguous
    };

    Regime {
        label,
        checks: vec![
            kappa_small,
            background_small,
            kappa_dominates,
            background_dominates,
        ],
    }
}

// Bad-regime exponents are built from the shared factor kappa^2 / (8 N_B) so
// the QI/SP exponent ratio is exactly `modes` in floating point, not merely
// in exact arithmetic.
fn sp_bad_exponent(params: &ChannelParams) -> f64 {
    params.kappa * params.kappa / (8.0 * params.n_b)
}

/// Quantum-illumination bound: exponent κ in the good regime,
/// κ²M/(8 N_B) in the bad regime; refuses elsewhere.
pub fn qi_bound(params: &ChannelParams, margin: &MarginPolicy) -> Result<BoundResult> {
    let regime = classify_regime(params, System::QuantumIllumination, margin);
    let (exponent, formula) = match regime.label {
        RegimeLabel::Good => (params.kappa, Formula::QiGoodRegime),
        RegimeLabel::Bad => (
            sp_bad_exponent(params) * params.modes as f64,
            Formula::QiBadRegime,
        ),
        label => {
            return Err(Error::RegimeNotApplicable {
                system: System::QuantumIllumination.short_name(),
                label,
            })
        }
    };
    Ok(BoundResult::new(
        exponent,
        params.shots,
        Some(regime),
        formula,
    ))
}

/// Single-photon bound: exponent κ in the good regime, κ²/(8 N_B) in the bad
/// regime; refuses elsewhere.
pub fn sp_bound(params: &ChannelParams, margin: &MarginPolicy) -> Result<BoundResult> {
    let regime = classify_regime(params, System::SinglePhoton, margin);
    let (exponent, formula) = match regime.label {
        RegimeLabel::Good => (params.kappa, Formula::SpGoodRegime),
        RegimeLabel::Bad => (sp_bad_exponent(params), Formula::SpBadRegime),
        label => {
            return Err(Error::RegimeNotApplicable {
                system: System::SinglePhoton.short_name(),
                label,
            })
        }
    };
    Ok(BoundResult::new(
        exponent,
        params.shots,
        Some(regime),
        formula,
    ))
}

/// Coherent-state transmitter bound: exponent κ(√(N_B+1) − √N_B)² per shot,
/// valid at any κ and N_B.
pub fn cs_bound(params: &ChannelParams) -> BoundResult {
    let gap = (params.n_b + 1.0).sqrt() - params.n_b.sqrt();
    BoundResult::new(
        params.kappa * (gap * gap),
        params.shots,
        None,
        Formula::CoherentStateChernoff,
    )
}

/// Error probability of the optimal single-transmission receiver for the
/// coherent-state transmitter in negligible background:
/// (1 − √(1 − e^{−κ})) / 2, exact in κ.
pub fn cs_single_shot_error(kappa: f64) -> Result<f64> {
    if !(kappa > 0.0 && kappa <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "kappa must lie in (0, 1], got {kappa}"
        )));
    }
    Ok((1.0 - (1.0 - (-kappa).exp()).sqrt()) / 2.0)
}

/// Small-κ approximation (1 − √κ)/2 of [`cs_single_shot_error`], exposed for
/// comparison output only.
pub fn cs_single_shot_error_approx(kappa: f64) -> f64 {
    (1.0 - kappa.sqrt()) / 2.0
}

/// Chernoff bound for majority-vote fusion of per-shot decisions each wrong
/// with probability p: bound [2√(p(1−p))]^N / 2, exponent −ln 2√(p(1−p)).
pub fn majority_vote_bound(p: f64, n_shots: u64) -> Result<BoundResult> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "per-shot error probability must lie in (0, 1), got {p}"
        )));
    }
    let exponent = (-(2.0 * (p * (1.0 - p)).sqrt()).ln()).max(0.0);
    Ok(BoundResult::new(
        exponent,
        n_shots,
        None,
        Formula::MajorityVoteChernoff,
    ))
}

/// Coherent-state transmitter with homodyne detection: exponent
/// κ/(4 N_B + 2) per shot.
pub fn homodyne_bound(params: &ChannelParams) -> BoundResult {
    BoundResult::new(
        params.kappa / (4.0 * params.n_b + 2.0),
        params.shots,
        None,
        Formula::HomodyneChernoff,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params(kappa: f64, n_b: f64, modes: u64, shots: u64) -> ChannelParams {
        ChannelParams::new(kappa, n_b, modes, shots).unwrap()
    }

    fn margin10() -> MarginPolicy {
        MarginPolicy::default()
    }

    #[test]
    fn channel_params_validation() {
        assert!(ChannelParams::new(0.0, 0.1, 1, 1).is_err());
        assert!(ChannelParams::new(1.5, 0.1, 1, 1).is_err());
        assert!(ChannelParams::new(0.1, -0.1, 1, 1).is_err());
        assert!(ChannelParams::new(0.1, 0.1, 0, 1).is_err());
        assert!(ChannelParams::new(0.1, 0.1, 1, 0).is_err());
        assert!(ChannelParams::new(1.0, 0.0, 1, 1).is_ok());
    }

    #[test]
    fn margin_policy_validation() {
        assert!(MarginPolicy::new(1.5).is_err());
        assert!(MarginPolicy::new(f64::INFINITY).is_err());
        assert_eq!(MarginPolicy::default().factor(), 10.0);
    }

    #[test]
    fn classify_good_regime_example() {
        let regime = classify_regime(
            &params(0.01, 1e-5, 100, 1),
            System::QuantumIllumination,
            &margin10(),
        );
        assert_eq!(regime.label, RegimeLabel::Good);
        assert!(regime.checks.iter().filter(|c| c.satisfied).count() >= 3);
    }

    #[test]
    fn classify_bad_regime_example() {
        let regime = classify_regime(
            &params(1e-4, 0.01, 10, 1),
            System::QuantumIllumination,
            &margin10(),
        );
        assert_eq!(regime.label, RegimeLabel::Bad);
    }

    #[test]
    fn classify_outside_model_example() {
        let regime = classify_regime(
            &params(0.5, 1e-5, 100, 1),
            System::QuantumIllumination,
            &margin10(),
        );
        assert_eq!(regime.label, RegimeLabel::OutsideModel);
    }

    #[test]
    fn classify_ambiguous_band() {
        // kappa between the good and bad conditions: in-model, neither branch.
        let regime = classify_regime(
            &params(1e-4, 3e-4, 1, 1),
            System::QuantumIllumination,
            &margin10(),
        );
        assert_eq!(regime.label, RegimeLabel::Ambiguous);
    }

    #[test]
    fn classification_records_every_inequality() {
        let regime = classify_regime(
            &params(0.01, 1e-5, 100, 1),
            System::QuantumIllumination,
            &margin10(),
        );
        assert_eq!(regime.checks.len(), 4);
        for check in &regime.checks {
            assert_eq!(check.margin, 10.0);
            assert_eq!(check.satisfied, check.lhs * check.margin <= check.rhs);
        }
        let dominates = regime
            .checks
            .iter()
            .find(|c| c.name == "kappa_well_above_background_per_mode")
            .unwrap();
        assert_eq!(dominates.lhs, 1e-5 / 100.0);
        assert_eq!(dominates.rhs, 0.01);
        assert!(dominates.satisfied);

        let sp = classify_regime(
            &params(0.01, 1e-5, 100, 1),
            System::SinglePhoton,
            &margin10(),
        );
        assert!(sp
            .checks
            .iter()
            .any(|c| c.name == "kappa_well_above_background" && c.lhs == 1e-5));
    }

    #[test]
    fn qi_bound_good_branch() {
        let result = qi_bound(&params(0.01, 1e-5, 100, 10_000), &margin10()).unwrap();
        assert_eq!(result.exponent_per_shot, 0.01);
        assert_relative_eq!(result.bound, (-100.0f64).exp() / 2.0, max_relative = 1e-12);
        assert_eq!(result.formula, Formula::QiGoodRegime);
        assert_eq!(result.regime.as_ref().unwrap().label, RegimeLabel::Good);
    }

    #[test]
    fn qi_bound_bad_branch() {
        let result = qi_bound(&params(1e-4, 0.01, 10, 1), &margin10()).unwrap();
        assert_relative_eq!(result.exponent_per_shot, 1.25e-6, max_relative = 1e-12);
        assert_eq!(result.formula, Formula::QiBadRegime);
    }

    #[test]
    fn qi_bound_refuses_outside_model() {
        let err = qi_bound(&params(0.5, 1e-5, 100, 1), &margin10()).unwrap_err();
        assert!(matches!(
            err,
            Error::RegimeNotApplicable {
                system: "qi",
                label: RegimeLabel::OutsideModel
            }
        ));
    }

    #[test]
    fn sp_bound_good_matches_qi_good() {
        let p = params(0.01, 1e-5, 100, 1);
        let qi = qi_bound(&p, &margin10()).unwrap();
        let sp = sp_bound(&p, &margin10()).unwrap();
        assert_eq!(qi.exponent_per_shot, sp.exponent_per_shot);
        assert_eq!(sp.exponent_per_shot, 0.01);
    }

    #[test]
    fn sp_bound_bad_branch_and_exact_ratio() {
        let p = params(1e-4, 0.01, 10, 1);
        let sp = sp_bound(&p, &margin10()).unwrap();
        assert_relative_eq!(sp.exponent_per_shot, 1.25e-7, max_relative = 1e-12);
        let qi = qi_bound(&p, &margin10()).unwrap();
        // Shared-subexpression construction makes the ratio exactly M.
        assert_eq!(qi.exponent_per_shot, sp.exponent_per_shot * 10.0);
    }

    #[test]
    fn cs_bound_zero_background_is_kappa_exactly() {
        let result = cs_bound(&params(0.037, 0.0, 1, 1));
        assert_eq!(result.exponent_per_shot, 0.037);
        assert!(result.regime.is_none());
    }

    #[test]
    fn cs_bound_unit_background() {
        let result = cs_bound(&params(0.01, 1.0, 1, 1));
        assert_relative_eq!(result.exponent_per_shot, 0.0017157, max_relative = 1e-4);
        assert_relative_eq!(
            result.exponent_per_shot,
            0.01 * (2.0f64.sqrt() - 1.0).powi(2),
            max_relative = 1e-14
        );
    }

    #[test]
    fn single_shot_error_approaches_half_at_small_kappa() {
        let p = cs_single_shot_error(1e-12).unwrap();
        assert!(p > 0.49999 && p < 0.5);
    }

    #[test]
    fn single_shot_error_examples() {
        assert_relative_eq!(
            cs_single_shot_error(0.01).unwrap(),
            0.450125,
            epsilon = 1e-6
        );
        assert_relative_eq!(
            cs_single_shot_error(0.04).unwrap(),
            (1.0 - (1.0 - (-0.04f64).exp()).sqrt()) / 2.0,
            epsilon = 1e-16
        );
        assert!(cs_single_shot_error(0.0).is_err());
        assert!(cs_single_shot_error(1.5).is_err());
        // The documented approximation is close at small kappa.
        assert_relative_eq!(
            cs_single_shot_error_approx(0.01),
            cs_single_shot_error(0.01).unwrap(),
            max_relative = 1e-2
        );
    }

    #[test]
    fn majority_vote_bound_examples() {
        for &n in &[1u64, 11, 101] {
            let result = majority_vote_bound(0.5, n).unwrap();
            assert_eq!(result.bound, 0.5);
            assert_eq!(result.exponent_per_shot, 0.0);
        }
        let result = majority_vote_bound(0.45, 101).unwrap();
        assert_relative_eq!(result.bound, 0.30100, epsilon = 2e-5);
        // Independent route: direct power instead of exp(-N ln).
        let direct = (2.0 * (0.45f64 * 0.55).sqrt()).powi(101) / 2.0;
        assert_relative_eq!(result.bound, direct, max_relative = 1e-12);
    }

    #[test]
    fn majority_vote_exponent_approaches_half_kappa() {
        let kappa = 1e-4;
        let p = cs_single_shot_error_approx(kappa);
        let result = majority_vote_bound(p, 1).unwrap();
        let relative = (result.exponent_per_shot - kappa / 2.0).abs() / (kappa / 2.0);
        assert!(relative < 1e-4, "relative gap {relative:.2e}");
    }

    #[test]
    fn homodyne_bound_examples() {
        let zero_background = homodyne_bound(&params(0.8, 0.0, 1, 1));
        assert_eq!(zero_background.exponent_per_shot, 0.4);
        let noisy = homodyne_bound(&params(0.1, 0.5, 1, 1));
        assert_eq!(noisy.exponent_per_shot, 0.025);
    }

    #[test]
    fn bound_matches_exponent_within_tolerance() {
        let p = params(0.02, 0.3, 4, 250);
        for result in [cs_bound(&p), homodyne_bound(&p)] {
            let reconstructed = (-(p.shots as f64) * result.exponent_per_shot).exp() / 2.0;
            assert_relative_eq!(result.bound, reconstructed, epsilon = 1e-12);
        }
    }
}
