//! Globally adaptive Gauss-Kronrod quadrature (7-point Gauss, 15-point Kronrod).
//!
//! This is the independent oracle the closed-form spectral integrals are
//! checked against, so it shares no code with them.

#![allow(clippy::excessive_precision)]

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Stopping rule: the summed error estimate must fall below
/// `max(abs, rel * |value|)`.
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_intervals: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { abs: 1e-13, rel: 1e-11, max_intervals: 4000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error: f64,
    pub evaluations: usize,
}

#[derive(Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

fn kronrod<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Segment { a, b, value: kronrod * half, error: ((kronrod - gauss) * half).abs() }
}

/// Integrates `f` over the finite interval `[a, b]`.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: Tolerance) -> Result<QuadResult> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidParameter(format!("finite bounds required, got [{a}, {b}]")));
    }
    if a == b {
        return Ok(QuadResult { value: 0.0, abs_error: 0.0, evaluations: 0 });
    }
    let mut segments: Vec<Segment> = Vec::new();
    segments.push(kronrod(&mut f, a, b));
    let mut evaluations = 15;
    loop {
        let value: f64 = segments.iter().map(|s| s.value).sum();
        let error: f64 = segments.iter().map(|s| s.error).sum();
        if !value.is_finite() {
            return Err(Error::Numerical(format!("integrand is not finite on [{a}, {b}]")));
        }
        if error <= tol.abs.max(tol.rel * value.abs()) {
            return Ok(QuadResult { value, abs_error: error, evaluations });
        }
        if segments.len() >= tol.max_intervals {
            return Err(Error::Numerical(format!(
                "quadrature did not reach tolerance after {} intervals (error {error:e})",
                segments.len()
            )));
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let s = segments.swap_remove(worst);
        let mid = 0.5 * (s.a + s.b);
        if mid <= s.a || mid >= s.b {
            return Err(Error::Numerical("quadrature interval can no longer be bisected".into()));
        }
        segments.push(kronrod(&mut f, s.a, mid));
        segments.push(kronrod(&mut f, mid, s.b));
        evaluations += 30;
    }
}

/// Integrates `f` over `[a, inf)` through the substitution `x = a + t/(1-t)`.
pub fn integrate_to_infinity<F: FnMut(f64) -> f64>(mut f: F, a: f64, tol: Tolerance) -> Result<QuadResult> {
    integrate(
        |t| {
            let s = 1.0 - t;
            f(a + t / s) / (s * s)
        },
        0.0,
        1.0,
        tol,
    )
}

/// Integrates over `[breaks[0], inf)`, treating the listed points as interior
/// breakpoints. Useful when the integrand has narrow features at known
/// locations, such as Lorentz peaks.
pub fn integrate_piecewise<F: FnMut(f64) -> f64>(mut f: F, breaks: &[f64], tol: Tolerance) -> Result<QuadResult> {
    let (&last, _) = breaks
        .split_last()
        .ok_or_else(|| Error::InvalidParameter("at least one breakpoint is required".into()))?;
    let mut total = QuadResult { value: 0.0, abs_error: 0.0, evaluations: 0 };
    for w in breaks.windows(2) {
        if w[1] < w[0] {
            return Err(Error::InvalidParameter("breakpoints must be ascending".into()));
        }
        let part = integrate(&mut f, w[0], w[1], tol)?;
        total.value += part.value;
        total.abs_error += part.abs_error;
        total.evaluations += part.evaluations;
    }
    let tail = integrate_to_infinity(&mut f, last, tol)?;
    total.value += tail.value;
    total.abs_error += tail.abs_error;
    total.evaluations += tail.evaluations;
    Ok(total)
}
