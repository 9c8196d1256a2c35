//! Ordinary (Newtonian) numerics on ℝ that the conjugate-space calculus
//! delegates to: a Richardson-extrapolated central difference and an
//! adaptive Simpson quadrature.

use crate::error::{Error, Result};

/// Panel budget for [`adaptive_simpson`].
pub const MAX_PANELS: usize = 1 << 20;

/// Default absolute tolerance for integrals.
pub const DEFAULT_QUAD_TOL: f64 = 1e-10;

/// Default r-space step for derivatives at `r`.
#[inline]
pub fn default_step(r: f64) -> f64 {
    1e-4 * (1.0 + r.abs())
}

/// Two levels of Richardson extrapolation applied to a symmetric quotient
/// `q(h)` whose error expands in even powers of `h`. Evaluates `q` at `h`,
/// `h/2` and `h/4`.
pub fn richardson_extrapolate(q: impl Fn(f64) -> f64, h: f64) -> f64 {
    let d1 = q(h);
    let d2 = q(h / 2.0);
    let d4 = q(h / 4.0);
    let r1 = (4.0 * d2 - d1) / 3.0;
    let r2 = (4.0 * d4 - d2) / 3.0;
    (16.0 * r2 - r1) / 15.0
}

/// Central difference at `x` with two levels of Richardson extrapolation
/// (steps `h`, `h/2`, `h/4`). The truncation error is O(h⁶).
///
/// The stencil touches `x ± h` and nothing further out.
pub fn richardson_derivative(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    richardson_extrapolate(|h| (f(x + h) - f(x - h)) / (2.0 * h), h)
}

#[derive(Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
}

impl Panel {
    fn new(a: f64, b: f64, fa: f64, fm: f64, fb: f64, tol: f64, depth: u32) -> Self {
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        Panel {
            a,
            b,
            fa,
            fm,
            fb,
            whole,
            tol,
            depth,
        }
    }
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` with absolute tolerance
/// `tol`. Reversed limits flip the sign.
///
/// Fails with [`Error::QuadratureFailure`] once more than [`MAX_PANELS`]
/// panels have been examined, and with [`Error::NonFinite`] if the integrand
/// is not finite at a node.
///
/// ```
/// let q = nncalc::numeric::adaptive_simpson(|x| x * x, 0.0, 1.0, 1e-12).unwrap();
/// assert!((q - 1.0 / 3.0).abs() < 1e-12);
/// ```
pub fn adaptive_simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidParam(format!(
            "quadrature over [{a}, {b}] with tolerance {tol}"
        )));
    }
    if a == b {
        return Ok(0.0);
    }
    if b < a {
        return adaptive_simpson(f, b, a, tol).map(|v| -v);
    }

    let eval = |x: f64| -> Result<f64> {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFinite(format!("integrand at {x}")))
        }
    };

    let m = 0.5 * (a + b);
    let mut stack = vec![Panel::new(a, b, eval(a)?, eval(m)?, eval(b)?, tol, 0)];
    let mut total = 0.0;
    let mut panels = 0usize;

    while let Some(p) = stack.pop() {
        panels += 1;
        if panels > MAX_PANELS {
            return Err(Error::QuadratureFailure {
                tol,
                panels: MAX_PANELS,
            });
        }
        let c = 0.5 * (p.a + p.b);
        let lm = 0.5 * (p.a + c);
        let rm = 0.5 * (c + p.b);
        let left = Panel::new(p.a, c, p.fa, eval(lm)?, p.fm, 0.5 * p.tol, p.depth + 1);
        let right = Panel::new(c, p.b, p.fm, eval(rm)?, p.fb, 0.5 * p.tol, p.depth + 1);
        let delta = left.whole + right.whole - p.whole;
        // depth cap: below ~2^-50 of the interval the midpoints stop being distinct
        if delta.abs() <= 15.0 * p.tol || p.depth >= 50 {
            total += left.whole + right.whole + delta / 15.0;
        } else {
            stack.push(right);
            stack.push(left);
        }
    }
    Ok(total)
}

/// `n` log-spaced points from `lo` to `hi` inclusive. Requires `0 < lo < hi`, `n ≥ 2`.
pub fn logspace(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi > lo && hi.is_finite()) || n < 2 {
        return Err(Error::InvalidParam(format!(
            "log grid needs 0 < lo < hi and at least 2 points (lo={lo}, hi={hi}, n={n})"
        )));
    }
    let (l0, l1) = (lo.ln(), hi.ln());
    let step = (l1 - l0) / (n - 1) as f64;
    Ok((0..n)
        .map(|i| match i {
            0 => lo,
            _ if i == n - 1 => hi,
            _ => (l0 + step * i as f64).exp(),
        })
        .collect())
}

/// `n` evenly spaced points from `lo` to `hi` inclusive (`n ≥ 2`).
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { hi } else { lo + step * i as f64 })
                .collect()
        }
    }
}

/// Relative distance `|a - b| / max(1, |b|)`.
#[inline]
pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}
