//! Physical constants, gravitational-cavity unit scaling, and experimental
//! validity estimates (spontaneous emission during a bounce).
//!
//! All internal numerics run in scaled units with ħ = m = g = 1; SI values
//! appear only at I/O boundaries. The scale factors are fixed by the atom
//! mass and the gravitational acceleration:
//!
//! ```text
//! length  (ħ²/(m²g))^(1/3)
//! time    (ħ/(mg²))^(1/3)
//! energy  (ħ²mg²)^(1/3) = m·g·length
//! ```

use crate::error::{Result, RtmError};
use serde::{Deserialize, Serialize};

/// CODATA value of the reduced Planck constant, J·s.
pub const HBAR_SI: f64 = 1.0545718e-34;

/// Cs-133 atomic mass, kg.
pub const CS133_MASS_KG: f64 = 2.2069e-25;

/// Default gravitational acceleration, m/s².
pub const DEFAULT_GRAVITY: f64 = 9.8;

/// Dimension tag for unit conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Length,
    Time,
    Energy,
    /// mass·length/time, needed for packet mean momentum
    Momentum,
    /// 1/time (angular)
    Frequency,
    /// 1/length (mirror steepness)
    Wavenumber,
}

/// Atom mass, gravity, and the mirror parameters in SI units.
///
/// Immutable after construction; cheap to copy and share between tasks.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PhysicalParams {
    /// atom mass, kg
    pub mass: f64,
    /// gravitational acceleration, m/s²
    pub gravity: f64,
    /// reduced Planck constant, J·s
    pub hbar: f64,
    /// mirror strength V₀, J
    pub mirror_strength: f64,
    /// mirror steepness κ, 1/m
    pub mirror_decay: f64,
}

impl PhysicalParams {
    pub fn new(
        mass: f64,
        gravity: f64,
        hbar: f64,
        mirror_strength: f64,
        mirror_decay: f64,
    ) -> Result<Self> {
        for (name, v) in [
            ("mass", mass),
            ("gravity", gravity),
            ("hbar", hbar),
            ("mirror_strength", mirror_strength),
            ("mirror_decay", mirror_decay),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(RtmError::InvalidInput(format!(
                    "{name} must be strictly positive, got {v}"
                )));
            }
        }
        Ok(Self {
            mass,
            gravity,
            hbar,
            mirror_strength,
            mirror_decay,
        })
    }

    /// Cs-133 preset used throughout the reference scenarios. The mirror
    /// defaults (κ⁻¹ = 0.55 µm, V₀ = 100·mgz for a 20 µm drop) are generic
    /// evanescent-mirror figures; simulations override them per run.
    pub fn cesium() -> Self {
        let mass = CS133_MASS_KG;
        let gravity = DEFAULT_GRAVITY;
        let kappa = 1.0 / 0.55e-6;
        let v0 = 100.0 * mass * gravity * 20.1e-6;
        Self {
            mass,
            gravity,
            hbar: HBAR_SI,
            mirror_strength: v0,
            mirror_decay: kappa,
        }
    }

    pub fn scales(&self) -> ScaledUnits {
        ScaledUnits::from_params(self)
    }

    /// Checks that the mirror can actually turn a packet dropped from
    /// `z0_si` around above z = 0: V₀ must exceed the impact kinetic energy.
    pub fn check_mirror_strength(&self, z0_si: f64) -> Result<()> {
        let kinetic = self.mass * self.gravity * z0_si;
        if self.mirror_strength <= kinetic {
            return Err(RtmError::InvalidInput(format!(
                "mirror V0 = {:.3e} J does not exceed the impact kinetic energy {:.3e} J; \
                 the turning point would sit below z = 0",
                self.mirror_strength, kinetic
            )));
        }
        Ok(())
    }
}

/// Derived unit scales; never set independently of [`PhysicalParams`].
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ScaledUnits {
    /// m
    pub length: f64,
    /// s
    pub time: f64,
    /// J
    pub energy: f64,
}

impl ScaledUnits {
    pub fn from_params(p: &PhysicalParams) -> Self {
        let length = (p.hbar * p.hbar / (p.mass * p.mass * p.gravity)).cbrt();
        let time = (p.hbar / (p.mass * p.gravity * p.gravity)).cbrt();
        let energy = (p.hbar * p.hbar * p.mass * p.gravity * p.gravity).cbrt();
        Self {
            length,
            time,
            energy,
        }
    }

    fn factor(&self, kind: Quantity) -> f64 {
        match kind {
            Quantity::Length => self.length,
            Quantity::Time => self.time,
            Quantity::Energy => self.energy,
            Quantity::Momentum => self.energy * self.time / self.length,
            Quantity::Frequency => 1.0 / self.time,
            Quantity::Wavenumber => 1.0 / self.length,
        }
    }
}

/// SI value -> dimensionless number in gravitational-cavity units.
pub fn to_scaled(value: f64, kind: Quantity, params: &PhysicalParams) -> f64 {
    value / params.scales().factor(kind)
}

/// Dimensionless number -> SI value.
pub fn from_scaled(value: f64, kind: Quantity, params: &PhysicalParams) -> f64 {
    value * params.scales().factor(kind)
}

/// Laser/atom parameters for the spontaneous-emission estimate.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ValidityParams {
    /// upper-state decay rate γ, 1/s
    pub decay_rate: f64,
    /// blue detuning δ = ν − ν₀, 1/s angular, must be > 0
    pub detuning: f64,
    /// impact speed v_z at the mirror, m/s
    pub impact_speed: f64,
    /// maximum Rabi frequency at the turning point, 1/s; if absent it is
    /// eliminated via the light-shift condition ħΩ²/(4δ) = mv²/2
    pub max_rabi: Option<f64>,
}

impl ValidityParams {
    pub fn new(
        decay_rate: f64,
        detuning: f64,
        impact_speed: f64,
        max_rabi: Option<f64>,
    ) -> Result<Self> {
        if !(decay_rate >= 0.0) {
            return Err(RtmError::InvalidInput(format!(
                "decay rate must be non-negative, got {decay_rate}"
            )));
        }
        if !(detuning > 0.0) {
            return Err(RtmError::InvalidInput(format!(
                "detuning must be positive (blue), got {detuning}"
            )));
        }
        if !(impact_speed > 0.0) {
            return Err(RtmError::InvalidInput(format!(
                "impact speed must be positive, got {impact_speed}"
            )));
        }
        if let Some(o) = max_rabi {
            if !(o > 0.0) {
                return Err(RtmError::InvalidInput(format!(
                    "max Rabi frequency must be positive when given, got {o}"
                )));
            }
        }
        Ok(Self {
            decay_rate,
            detuning,
            impact_speed,
            max_rabi,
        })
    }
}

/// Probability of a spontaneous emission event during one reflection,
/// P = γ·Ω²_max/(4δ²)·τ_ref with τ_ref = 2/(κ·v_z).
///
/// When Ω_max is not supplied it is eliminated with the light-shift
/// condition, giving the closed form γ·m·v_z/(ħ·δ·κ). The caller decides
/// whether the run is flagged; this only reports the number.
pub fn spontaneous_emission_probability(
    v: &ValidityParams,
    kappa_si: f64,
    params: &PhysicalParams,
) -> Result<f64> {
    if !(kappa_si > 0.0) || !(v.impact_speed > 0.0) {
        return Err(RtmError::InvalidInput(
            "zero impact speed or mirror steepness: reflection time diverges".into(),
        ));
    }
    let tau_ref = 2.0 / (kappa_si * v.impact_speed);
    let p = match v.max_rabi {
        Some(omega_max) => {
            v.decay_rate * omega_max * omega_max / (4.0 * v.detuning * v.detuning) * tau_ref
        }
        None => v.decay_rate * params.mass * v.impact_speed / (params.hbar * v.detuning * kappa_si),
    };
    Ok(p)
}

/// Classical impact speed √(2·g·z0) for a packet released at rest from `z0`.
pub fn impact_speed_from_drop(z0_si: f64, params: &PhysicalParams) -> Result<f64> {
    if z0_si < 0.0 {
        return Err(RtmError::InvalidInput(format!(
            "drop height must be non-negative, got {z0_si}"
        )));
    }
    Ok((2.0 * params.gravity * z0_si).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cs() -> PhysicalParams {
        PhysicalParams::cesium()
    }

    #[test]
    fn unit_scales_match_reference_values() {
        let u = cs().scales();
        assert_relative_eq!(u.length, 2.8561892102227409e-7, max_relative = 1e-12);
        assert_relative_eq!(u.time, 1.7071844616038339e-4, max_relative = 1e-12);
        assert_relative_eq!(u.energy, 6.1772574886797556e-31, max_relative = 1e-12);
    }

    #[test]
    fn energy_unit_is_mass_gravity_length() {
        let p = cs();
        let u = p.scales();
        assert_relative_eq!(u.energy, p.mass * p.gravity * u.length, max_relative = 1e-12);
    }

    #[test]
    fn gravitational_scale_consistency() {
        // time² · g = length: both forms of the gravitational scale agree
        let p = cs();
        let u = p.scales();
        assert_relative_eq!(u.time * u.time * p.gravity, u.length, max_relative = 1e-12);
    }

    #[test]
    fn to_scaled_trivial_cases() {
        let p = cs();
        assert_eq!(to_scaled(0.0, Quantity::Length, &p), 0.0);
        let u = p.scales();
        assert_relative_eq!(to_scaled(u.length, Quantity::Length, &p), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn to_scaled_drop_height() {
        // 20.1 µm drop for Cs-133 at g = 9.8
        let p = cs();
        assert_relative_eq!(
            to_scaled(20.1e-6, Quantity::Length, &p),
            70.373489011368733,
            max_relative = 1e-12
        );
    }

    #[test]
    fn scaled_round_trip_identity() {
        let p = cs();
        for (v, k) in [
            (20.1e-6, Quantity::Length),
            (4.05e-3, Quantity::Time),
            (4.3e-29, Quantity::Energy),
            (1.0e-28, Quantity::Momentum),
            (6283.0, Quantity::Frequency),
            (1.8e6, Quantity::Wavenumber),
        ] {
            let rt = from_scaled(to_scaled(v, k, &p), k, &p);
            assert_relative_eq!(rt, v, max_relative = 1e-14);
        }
    }

    #[test]
    fn impact_speed_examples() {
        let p = cs();
        assert_eq!(impact_speed_from_drop(0.0, &p).unwrap(), 0.0);
        let v1 = impact_speed_from_drop(5.0e-6, &p).unwrap();
        let v4 = impact_speed_from_drop(20.0e-6, &p).unwrap();
        assert_relative_eq!(v4, 2.0 * v1, max_relative = 1e-12);
        assert_relative_eq!(
            impact_speed_from_drop(20.1e-6, &p).unwrap(),
            1.9848425630260955e-2,
            max_relative = 1e-12
        );
    }

    #[test]
    fn spontaneous_emission_reference_value() {
        // γ = 2π×5.2 MHz, δ = 2π×1 GHz, κ⁻¹ = 0.55 µm, 20.1 µm drop
        let p = cs();
        let v_z = impact_speed_from_drop(20.1e-6, &p).unwrap();
        let v = ValidityParams::new(
            2.0 * std::f64::consts::PI * 5.2e6,
            2.0 * std::f64::consts::PI * 1.0e9,
            v_z,
            None,
        )
        .unwrap();
        let psp = spontaneous_emission_probability(&v, 1.0 / 0.55e-6, &p).unwrap();
        assert_relative_eq!(psp, 0.11879511940011055, max_relative = 1e-12);
    }

    #[test]
    fn spontaneous_emission_zero_decay() {
        let p = cs();
        let v = ValidityParams::new(0.0, 1e9, 0.02, None).unwrap();
        assert_eq!(spontaneous_emission_probability(&v, 1.8e6, &p).unwrap(), 0.0);
    }

    #[test]
    fn explicit_rabi_matches_eliminated_form_on_light_shift_condition() {
        let p = cs();
        let v_z = 0.0198;
        let delta = 2.0 * std::f64::consts::PI * 1.0e9;
        // ħΩ²/(4δ) = m v²/2  =>  Ω² = 2 δ m v² / ħ
        let omega = (2.0 * delta * p.mass * v_z * v_z / p.hbar).sqrt();
        let kappa = 1.8e6;
        let with = ValidityParams::new(1e7, delta, v_z, Some(omega)).unwrap();
        let without = ValidityParams::new(1e7, delta, v_z, None).unwrap();
        let a = spontaneous_emission_probability(&with, kappa, &p).unwrap();
        let b = spontaneous_emission_probability(&without, kappa, &p).unwrap();
        assert_relative_eq!(a, b, max_relative = 1e-12);
    }

    #[test]
    fn spontaneous_emission_monotonicity() {
        let p = cs();
        let kappa = 1.8e6;
        let mut last = f64::INFINITY;
        for i in 0..100 {
            let delta = 1e9 * (1.0 + i as f64 * 0.1);
            let v = ValidityParams::new(3e7, delta, 0.02, None).unwrap();
            let psp = spontaneous_emission_probability(&v, kappa, &p).unwrap();
            assert!(psp < last, "P_sp must decrease in detuning");
            last = psp;
        }
        let mut last = 0.0;
        for i in 1..=100 {
            let gamma = 1e6 * i as f64;
            let v = ValidityParams::new(gamma, 6e9, 0.02, None).unwrap();
            let psp = spontaneous_emission_probability(&v, kappa, &p).unwrap();
            assert!(psp > last, "P_sp must increase in decay rate");
            last = psp;
        }
    }

    #[test]
    fn rejects_diverging_reflection_time() {
        let p = cs();
        let v = ValidityParams::new(1e7, 1e9, 0.02, None).unwrap();
        assert!(spontaneous_emission_probability(&v, 0.0, &p).is_err());
        assert!(ValidityParams::new(1e7, 1e9, 0.0, None).is_err());
    }

    #[test]
    fn rejects_red_detuning_and_bad_params() {
        assert!(ValidityParams::new(1e7, -1e9, 0.02, None).is_err());
        assert!(PhysicalParams::new(0.0, 9.8, HBAR_SI, 1e-28, 1e6).is_err());
        assert!(PhysicalParams::new(1e-25, 9.8, HBAR_SI, 1e-28, -1e6).is_err());
    }

    #[test]
    fn mirror_strength_check() {
        let p = cs();
        assert!(p.check_mirror_strength(20.1e-6).is_ok());
        assert!(p.check_mirror_strength(30.0e-3).is_err());
    }
}
