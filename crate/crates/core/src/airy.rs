//! Airy function Ai, its derivative, and the negative zeros that set the
//! triangular-well spectrum.
//!
//! Evaluation strategy, no external special-function dependency:
//! * |x| <= 4.5 — Maclaurin series (terms stay small, no cancellation)
//! * 4.5 < |x| <= 9.5 — Taylor marching of y'' = x·y from an accurate anchor
//!   (the plain series loses ~10 digits to cancellation in this band);
//!   the positive side marches downhill from x = 9.5 so the growing
//!   solution cannot contaminate the answer
//! * |x| > 9.5 — large-argument asymptotic expansions
//!
//! Zeros come from the asymptotic seed
//! f(ζ) = ζ^(2/3)·(1 + 5/(48ζ²) − 5/(36ζ⁴)), ζ = 3π(n − 1/4)/2, refined by
//! bracketed bisection plus Newton on (Ai, Ai′).

use crate::error::{Result, RtmError};

/// Ai(0) = 3^(−2/3)/Γ(2/3)
const AI_ZERO: f64 = 0.3550280538878172;
/// −Ai′(0) = 3^(−1/3)/Γ(1/3)
const AI_PRIME_ZERO: f64 = 0.2588194037928068;

/// Maclaurin series trusted up to this |x|.
const SERIES_LIMIT: f64 = 4.5;
/// Asymptotic expansions trusted beyond this |x|.
const ASYMPTOTIC_LIMIT: f64 = 9.5;
/// Taylor-march step for the mid band.
const MARCH_STEP: f64 = 0.75;

/// Number of u_k/v_k terms carried in the asymptotic sums.
const ASYMPTOTIC_TERMS: usize = 17;

/// Ai(x).
pub fn ai(x: f64) -> f64 {
    ai_and_prime(x).0
}

/// Ai′(x).
pub fn ai_prime(x: f64) -> f64 {
    ai_and_prime(x).1
}

/// (Ai(x), Ai′(x)) in one evaluation.
pub fn ai_and_prime(x: f64) -> (f64, f64) {
    if x.abs() <= SERIES_LIMIT {
        series(x)
    } else if x > ASYMPTOTIC_LIMIT {
        asymptotic_positive(x)
    } else if x > 0.0 {
        // downhill march keeps the Bi-type error mode decaying
        let (y, yp) = asymptotic_positive(ASYMPTOTIC_LIMIT);
        taylor_march(ASYMPTOTIC_LIMIT, y, yp, x)
    } else if x >= -ASYMPTOTIC_LIMIT {
        let (y, yp) = series(-SERIES_LIMIT);
        taylor_march(-SERIES_LIMIT, y, yp, x)
    } else {
        asymptotic_negative(-x)
    }
}

/// Maclaurin series Ai = c1·f − c2·g (and the derivative), |x| <= 4.5.
fn series(x: f64) -> (f64, f64) {
    if x == 0.0 {
        return (AI_ZERO, -AI_PRIME_ZERO);
    }
    let x3 = x * x * x;
    let mut f = 1.0;
    let mut fp = 0.0;
    let mut g = x;
    let mut gp = 1.0;
    let mut tf = 1.0;
    let mut tg = x;
    let mut scale = 1.0 + x.abs();
    for k in 1..=120u32 {
        // y'' = x·y gives a_{m+2} = a_{m-1}/((m+2)(m+1)) for each series
        let kf = 3.0 * k as f64;
        tf *= x3 / (kf * (kf - 1.0));
        tg *= x3 / ((kf + 1.0) * kf);
        f += tf;
        g += tg;
        fp += kf * tf / x;
        gp += (kf + 1.0) * tg / x;
        scale += tf.abs() + tg.abs();
        if tf.abs() + tg.abs() < 1e-18 * scale {
            break;
        }
    }
    (
        AI_ZERO * f - AI_PRIME_ZERO * g,
        AI_ZERO * fp - AI_PRIME_ZERO * gp,
    )
}

/// Integrates y'' = x·y from (x_from, y, y') to x_to by local Taylor steps.
fn taylor_march(x_from: f64, mut y: f64, mut yp: f64, x_to: f64) -> (f64, f64) {
    let span = x_to - x_from;
    let n_steps = (span.abs() / MARCH_STEP).ceil().max(1.0);
    let h = span / n_steps;
    let mut a = x_from;
    for _ in 0..n_steps as usize {
        // local coefficients: (m+2)(m+1)·c_{m+2} = a·c_m + c_{m-1}
        const ORDER: usize = 40;
        let mut c = [0.0f64; ORDER + 3];
        c[0] = y;
        c[1] = yp;
        c[2] = 0.5 * a * c[0];
        for m in 1..=ORDER {
            c[m + 2] = (a * c[m] + c[m - 1]) / (((m + 2) * (m + 1)) as f64);
        }
        let mut sy = 0.0;
        let mut syp = 0.0;
        for m in (1..=ORDER + 2).rev() {
            sy = (sy + c[m]) * h;
            syp = (syp + m as f64 * c[m]) * if m > 1 { h } else { 1.0 };
        }
        y = c[0] + sy;
        yp = syp;
        a += h;
    }
    (y, yp)
}

/// u_k coefficients of the asymptotic expansions, u_0 = 1,
/// u_k = u_{k−1}·(6k−5)(6k−1)/(72k); v_k = u_k·(6k+1)/(1−6k).
fn uv_coefficients() -> ([f64; ASYMPTOTIC_TERMS], [f64; ASYMPTOTIC_TERMS]) {
    let mut u = [0.0; ASYMPTOTIC_TERMS];
    let mut v = [0.0; ASYMPTOTIC_TERMS];
    u[0] = 1.0;
    v[0] = 1.0;
    for k in 1..ASYMPTOTIC_TERMS {
        let kf = k as f64;
        u[k] = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 1.0) / (72.0 * kf);
        v[k] = u[k] * (6.0 * kf + 1.0) / (1.0 - 6.0 * kf);
    }
    (u, v)
}

/// Decaying branch, x > 9.5.
fn asymptotic_positive(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    // e^{-zeta} underflows long before the prefactor matters
    if zeta > 740.0 {
        return (0.0, 0.0);
    }
    let (u, v) = uv_coefficients();
    let mut su = 0.0;
    let mut sv = 0.0;
    let mut zp = 1.0;
    let mut sign = 1.0;
    for k in 0..ASYMPTOTIC_TERMS {
        su += sign * u[k] / zp;
        sv += sign * v[k] / zp;
        zp *= zeta;
        sign = -sign;
    }
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let pre = (-zeta).exp() / (2.0 * sqrt_pi);
    (pre * su / x.powf(0.25), -pre * sv * x.powf(0.25))
}

/// Oscillatory branch: returns (Ai(−y), Ai′(−y)) for y > 9.5.
fn asymptotic_negative(y: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * y.powf(1.5);
    let (u, v) = uv_coefficients();
    // P-type sums take even-index coefficients, Q-type odd
    let mut pu = 0.0;
    let mut qu = 0.0;
    let mut pv = 0.0;
    let mut qv = 0.0;
    let z2 = zeta * zeta;
    let mut zp = 1.0;
    let mut sign = 1.0;
    for k in 0..ASYMPTOTIC_TERMS / 2 {
        pu += sign * u[2 * k] / zp;
        pv += sign * v[2 * k] / zp;
        qu += sign * u[2 * k + 1] / (zp * zeta);
        qv += sign * v[2 * k + 1] / (zp * zeta);
        zp *= z2;
        sign = -sign;
    }
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let (s, c) = (zeta + std::f64::consts::FRAC_PI_4).sin_cos();
    let ai = (s * pu - c * qu) / (sqrt_pi * y.powf(0.25));
    let aip = -(c * pv + s * qv) * y.powf(0.25) / sqrt_pi;
    (ai, aip)
}

/// How the n-th zero magnitude is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroMode {
    /// Asymptotic seed refined to |Ai(−z_n)| < 1e−12.
    Exact,
    /// f(ζ) truncated after the ζ⁻⁴ term, as-is.
    Asymptotic,
}

/// Magnitude z_n > 0 of the n-th negative zero of Ai, n >= 1.
pub fn airy_zero(n: u32, mode: ZeroMode) -> Result<f64> {
    if n == 0 {
        return Err(RtmError::InvalidInput(
            "Airy zero index must be >= 1".into(),
        ));
    }
    let seed = asymptotic_zero(n);
    match mode {
        ZeroMode::Asymptotic => Ok(seed),
        ZeroMode::Exact => Ok(refine_zero(seed)),
    }
}

fn asymptotic_zero(n: u32) -> f64 {
    let zeta = 1.5 * std::f64::consts::PI * (n as f64 - 0.25);
    let z2 = zeta * zeta;
    zeta.powf(2.0 / 3.0) * (1.0 + 5.0 / (48.0 * z2) - 5.0 / (36.0 * z2 * z2))
}

/// Bracket around the seed, bisect to safety, then Newton to convergence.
fn refine_zero(seed: f64) -> f64 {
    let f = |t: f64| ai(-t);
    let delta = 2e-3 * seed + 1e-3;
    let mut lo = seed - delta;
    let mut hi = seed + delta;
    let mut flo = f(lo);
    // widen in the rare case the seed bracket misses the sign change
    for _ in 0..8 {
        if flo * f(hi) <= 0.0 {
            break;
        }
        lo -= delta;
        hi += delta;
        flo = f(lo);
    }
    for _ in 0..20 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if flo * fm <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    let mut t = 0.5 * (lo + hi);
    for _ in 0..30 {
        let (a, ap) = ai_and_prime(-t);
        // d/dt Ai(−t) = −Ai′(−t)
        let step = a / ap;
        t += step;
        if step.abs() < 1e-15 * t {
            break;
        }
    }
    t
}
