//! Scalar root finding for monotone functions.

use crate::error::{Error, Result};

/// Finds `x > 0` with `f(x) = 0` for a function that is positive for small
/// `x` and negative for large `x`.
///
/// The bracket is grown by doubling from `start` (the lower end is halved
/// instead if `f(start)` is already negative) and then shrunk by bisection
/// until the bracket is as narrow as `f64` allows. The returned point is the
/// bracket end with the smaller `|f|`.
pub fn decreasing_root<F: FnMut(f64) -> Result<f64>>(mut f: F, start: f64) -> Result<(f64, f64)> {
    if !(start > 0.0 && start.is_finite()) {
        return Err(Error::InvalidParameter("root search needs a positive finite start".into()));
    }
    let (mut lo, mut hi) = (start, start);
    let mut f_lo = f(lo)?;
    let mut f_hi = f_lo;
    let mut tries = 0;
    while f_hi > 0.0 {
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
        f_hi = f(hi)?;
        tries += 1;
        if tries > 200 || !hi.is_finite() {
            return Err(Error::BracketNotFound);
        }
    }
    while f_lo < 0.0 {
        hi = lo;
        f_hi = f_lo;
        lo *= 0.5;
        f_lo = f(lo)?;
        tries += 1;
        if tries > 200 || lo == 0.0 {
            return Err(Error::BracketNotFound);
        }
    }
    if !(f_lo.is_finite() && f_hi.is_finite()) {
        return Err(Error::Numerical("objective is not finite on the bracket".into()));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok((mid, 0.0));
        }
        if f_mid > 0.0 {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    Ok(if f_lo.abs() <= f_hi.abs() { (lo, f_lo) } else { (hi, f_hi) })
}
