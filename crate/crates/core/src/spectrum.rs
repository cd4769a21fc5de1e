//! Triangular-well eigenenergies from negative Airy zeros, cubic
//! interpolation to real quantum numbers, numerical energy derivatives, and
//! the recurrence-time hierarchy T⁽ʲ⁾ = 2πħ·j!/|∂ʲE/∂nʲ|.
//!
//! Everything here is in scaled units (ħ = m = g = 1), where
//! E_n = 2^(−1/3)·z_n and the scaled gravity wavevector is κ_g = 2^(1/3).

use crate::airy::{airy_zero, ZeroMode};
use crate::error::{Result, RtmError};
use crate::par;

/// E_n = (mħ²g²/2)^(1/3)·z_n in scaled units.
pub const ENERGY_PREFACTOR: f64 = 0.7937005259840998; // 2^(-1/3)

/// Scaled gravity wavevector κ_g = (2m²g/ħ²)^(1/3); the eigenfunctions are
/// Ai(κ_g·z − z_n) for z >= 0.
pub const GRAVITY_WAVEVECTOR: f64 = 1.2599210498948732; // 2^(1/3)

/// Ordered triangular-well eigenenergies E_1..E_n_max (scaled).
#[derive(Debug, Clone)]
pub struct Spectrum {
    energies: Vec<f64>,
    zeros: Vec<f64>,
}

impl Spectrum {
    /// Builds the spectrum from exact Airy zeros.
    pub fn build(n_max: u32) -> Result<Self> {
        if n_max < 4 {
            return Err(RtmError::InvalidInput(
                "spectrum needs n_max >= 4 for cubic interpolation".into(),
            ));
        }
        let zeros = par::map_indexed(n_max as usize, |i| {
            airy_zero(i as u32 + 1, ZeroMode::Exact).expect("n >= 1")
        });
        let energies = zeros.iter().map(|z| ENERGY_PREFACTOR * z).collect();
        Ok(Self { energies, zeros })
    }

    /// Sequential twin of [`Spectrum::build`], used by the bench suite.
    pub fn build_seq(n_max: u32) -> Result<Self> {
        if n_max < 4 {
            return Err(RtmError::InvalidInput(
                "spectrum needs n_max >= 4 for cubic interpolation".into(),
            ));
        }
        let zeros = par::map_indexed_seq(n_max as usize, |i| {
            airy_zero(i as u32 + 1, ZeroMode::Exact).expect("n >= 1")
        });
        let energies = zeros.iter().map(|z| ENERGY_PREFACTOR * z).collect();
        Ok(Self { energies, zeros })
    }

    /// Builds a synthetic power-law spectrum E_n = c·n^p (test oracle for the
    /// derivative machinery; the bouncer corresponds to p = 2/3).
    pub fn power_law(n_max: u32, c: f64, p: f64) -> Self {
        let energies: Vec<f64> = (1..=n_max).map(|n| c * (n as f64).powf(p)).collect();
        let zeros = energies.iter().map(|e| e / ENERGY_PREFACTOR).collect();
        Self { energies, zeros }
    }

    pub fn n_max(&self) -> u32 {
        self.energies.len() as u32
    }

    /// E_n for integer n in 1..=n_max.
    pub fn energy(&self, n: u32) -> Result<f64> {
        if n == 0 || n > self.n_max() {
            return Err(RtmError::InvalidInput(format!(
                "level index {n} outside 1..={}",
                self.n_max()
            )));
        }
        Ok(self.energies[(n - 1) as usize])
    }

    /// Airy zero magnitude z_n for integer n.
    pub fn zero(&self, n: u32) -> Result<f64> {
        if n == 0 || n > self.n_max() {
            return Err(RtmError::InvalidInput(format!(
                "level index {n} outside 1..={}",
                self.n_max()
            )));
        }
        Ok(self.zeros[(n - 1) as usize])
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    /// Cubic interpolation of E_n through the four integer levels nearest to
    /// real-valued n (error O(Δn⁴)).
    pub fn energy_at(&self, n: f64) -> Result<f64> {
        let poly = self.local_cubic(n)?;
        Ok(poly.eval(n))
    }

    fn local_cubic(&self, n: f64) -> Result<Cubic> {
        let n_max = self.n_max() as f64;
        if !(1.0..=n_max).contains(&n) {
            return Err(RtmError::InvalidInput(format!(
                "quantum number {n} outside [1, {n_max}]"
            )));
        }
        // stencil {k-1, k, k+1, k+2} clamped to the table
        let k = (n.floor() as i64).clamp(2, self.n_max() as i64 - 2);
        let i0 = (k - 2) as usize; // zero-based index of level k-1
        let xs = [(k - 1) as f64, k as f64, (k + 1) as f64, (k + 2) as f64];
        let ys = [
            self.energies[i0],
            self.energies[i0 + 1],
            self.energies[i0 + 2],
            self.energies[i0 + 3],
        ];
        Ok(Cubic::fit(xs, ys))
    }

    /// j-th derivative of E_n at real n0, via central finite differences with
    /// unit step in n applied to the cubic interpolant.
    pub fn energy_derivative(&self, n0: f64, order: u32) -> Result<f64> {
        let j = order;
        if !(1..=3).contains(&j) {
            return Err(RtmError::UnsupportedOrder(j));
        }
        let jf = j as f64;
        let n_max = self.n_max() as f64;
        if !(n0 >= 1.0 + jf && n0 <= n_max - jf) {
            return Err(RtmError::InvalidInput(format!(
                "n0 = {n0} outside [{}, {}] for order {j}",
                1.0 + jf,
                n_max - jf
            )));
        }
        let e = |x: f64| self.energy_at(x);
        Ok(match j {
            1 => (e(n0 + 1.0)? - e(n0 - 1.0)?) / 2.0,
            2 => e(n0 + 1.0)? - 2.0 * e(n0)? + e(n0 - 1.0)?,
            3 => (e(n0 + 2.0)? - 2.0 * e(n0 + 1.0)? + 2.0 * e(n0 - 1.0)? - e(n0 - 2.0)?) / 2.0,
            _ => unreachable!(),
        })
    }

    /// Local level spacing ∂E/∂n at real n (ħω of the resonant transition).
    pub fn level_spacing(&self, n: f64) -> Result<f64> {
        self.energy_derivative(n, 1)
    }
}

/// Recurrence time T⁽ʲ⁾ = 2πħ/((1/j!)·|E⁽ʲ⁾|) at n0, scaled units.
pub fn recurrence_time(spectrum: &Spectrum, n0: f64, order: u32) -> Result<f64> {
    let deriv = spectrum.energy_derivative(n0, order)?;
    if deriv == 0.0 {
        return Err(RtmError::Numerical(format!(
            "vanishing E^({order}) at n0 = {n0}"
        )));
    }
    let factorial: f64 = (1..=order).map(|k| k as f64).product();
    Ok(2.0 * std::f64::consts::PI * factorial / deriv.abs())
}

/// Classical bounce period T⁽¹⁾ = 2πħ/|∂E/∂n|.
pub fn classical_period(spectrum: &Spectrum, n0: f64) -> Result<f64> {
    recurrence_time(spectrum, n0, 1)
}

/// How the quantum revival time is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RevivalMethod {
    /// T⁽²⁾ = 2πħ/((1/2!)|∂²E/∂n²|) from the interpolated spectrum.
    Derivative,
    /// T⁽²⁾ = 16·E²_{n0}/(mπħg²), scaled: 16E²/π.
    ClosedForm,
}

/// Quantum revival time at n0.
pub fn revival_time(spectrum: &Spectrum, n0: f64, method: RevivalMethod) -> Result<f64> {
    match method {
        RevivalMethod::Derivative => recurrence_time(spectrum, n0, 2),
        RevivalMethod::ClosedForm => {
            let e = spectrum.energy_at(n0)?;
            Ok(revival_time_from_energy(e))
        }
    }
}

/// Closed-form revival time from a scaled mean energy.
pub fn revival_time_from_energy(energy: f64) -> f64 {
    16.0 * energy * energy / std::f64::consts::PI
}

/// Classical bounce period from a scaled mean energy, 2·√(2E) in scaled
/// units (kinematics of a drop from height E/mg).
pub fn classical_period_from_energy(energy: f64) -> f64 {
    2.0 * (2.0 * energy).sqrt()
}

/// Classical period and revival time bundled with the derivatives they came
/// from.
#[derive(Debug, Clone, Copy)]
pub struct RecurrenceTimes {
    pub classical_period: f64,
    pub revival_time: f64,
    pub first_derivative: f64,
    pub second_derivative: f64,
}

impl RecurrenceTimes {
    pub fn at(spectrum: &Spectrum, n0: f64) -> Result<Self> {
        let d1 = spectrum.energy_derivative(n0, 1)?;
        let d2 = spectrum.energy_derivative(n0, 2)?;
        Ok(Self {
            classical_period: classical_period(spectrum, n0)?,
            revival_time: revival_time(spectrum, n0, RevivalMethod::Derivative)?,
            first_derivative: d1,
            second_derivative: d2,
        })
    }
}

/// Cubic polynomial through four points, Newton form evaluated via Horner.
#[derive(Debug, Clone, Copy)]
struct Cubic {
    x: [f64; 4],
    // divided differences
    c: [f64; 4],
}

impl Cubic {
    fn fit(x: [f64; 4], y: [f64; 4]) -> Self {
        let mut c = y;
        for level in 1..4 {
            for i in (level..4).rev() {
                c[i] = (c[i] - c[i - 1]) / (x[i] - x[i - level]);
            }
        }
        Self { x, c }
    }

    fn eval(&self, t: f64) -> f64 {
        let mut acc = self.c[3];
        for i in (0..3).rev() {
            acc = acc * (t - self.x[i]) + self.c[i];
        }
        acc
    }
}
