//! Kaniadakis κ-arithmetic `ℝ_κ`, generated by `f_κ(x) = (1/κ) arcsinh(κx)`.
//!
//! `0_κ = 0` for every κ while `1_κ = sinh(κ)/κ ≠ 1`. The κ-derivative
//! `dA/d_κx = A′(x) √(1 + κ²x²)` is the non-Newtonian derivative of a map
//! `ℝ_κ → ℝ`, which fixes the exponential to `Exp(x) = e^{f_κ(x)}`.
//!
//! Two further objects are kept here for comparison:
//!
//! * [`kappa_dual_derivative`], the "derivative of inverse functions"
//!   `lim (A(y+δ) ⊖_κ A(y))/δ`. It divides a codomain-`ℝ_κ` difference by a
//!   plain `δ` instead of `⊘_κ δ_κ`, so it is not a non-Newtonian
//!   derivative. Applied to `Ln` it returns `1/y`, whereas the consistent
//!   [`kappa_nn_ln_derivative`] gives `(1/κ) sinh(κ/y)`.
//! * [`kappa_exp_self`], the exponential `ℝ_κ → ℝ_κ`. Its tail for negative
//!   arguments matches [`kappa_exp`] even though the two differ near zero.

use std::f64::consts::LN_2;

use serde::Serialize;

use crate::arithmetic::Arithmetic;
use crate::error::{Error, Result};
use crate::numeric::{default_step, logspace, richardson_derivative, richardson_extrapolate};
use crate::table::Table;

/// `|κx|` below which the series forms of `f_κ` and `f_κ⁻¹` are used.
const SERIES_CUTOFF: f64 = 1e-4;

/// arcsinh via `ln(|x| + √(x² + 1))`, rewritten as `ln_1p` for small `|x|` and
/// as `ln 2|x|` where `x²` would overflow. Odd by construction.
pub fn asinh_stable(x: f64) -> f64 {
    let a = x.abs();
    let r = if a > 1e8 {
        a.ln() + LN_2
    } else {
        (a + a * a / (1.0 + (a * a + 1.0).sqrt())).ln_1p()
    };
    r.copysign(x)
}

/// `f_κ(x) = (1/κ) arcsinh(κx)`, continuous through κ = 0.
pub fn arcsinh_k(kappa: f64, x: f64) -> f64 {
    let u = kappa * x;
    if u.abs() < SERIES_CUTOFF {
        let u2 = u * u;
        x * (1.0 - u2 / 6.0 + 3.0 * u2 * u2 / 40.0)
    } else {
        asinh_stable(u) / kappa
    }
}

/// `f_κ⁻¹(r) = (1/κ) sinh(κr)`, continuous through κ = 0.
pub fn sinh_k(kappa: f64, r: f64) -> f64 {
    let u = kappa * r;
    if u.abs() < SERIES_CUTOFF {
        let u2 = u * u;
        r * (1.0 + u2 / 6.0 + u2 * u2 / 120.0)
    } else {
        u.sinh() / kappa
    }
}

/// Deformation parameter κ ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KappaParams {
    kappa: f64,
}

impl KappaParams {
    pub fn new(kappa: f64) -> Result<Self> {
        if kappa.is_finite() && kappa >= 0.0 {
            Ok(KappaParams { kappa })
        } else {
            Err(Error::InvalidParam(format!("kappa must be finite and >= 0, got {kappa}")))
        }
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// `1_κ = sinh(κ)/κ`.
    pub fn one(&self) -> f64 {
        sinh_k(self.kappa, 1.0)
    }

    pub fn arithmetic(&self) -> Arithmetic {
        Arithmetic::kaniadakis(self.kappa).expect("validated kappa")
    }
}

fn finite(what: &str, v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(what.to_string()))
    }
}

/// `dA/d_κx = A′(x) √(1 + κ²x²)`; `A′` by Richardson-extrapolated central
/// difference.
pub fn kappa_derivative(a: impl Fn(f64) -> f64, x: f64, kappa: f64) -> Result<f64> {
    let k = KappaParams::new(kappa)?.kappa;
    let da = richardson_derivative(&a, x, default_step(x));
    finite("kappa derivative", da * (1.0 + (k * x).powi(2)).sqrt())
}

/// `lim_{δ→0} (A(y+δ) ⊖_κ A(y)) / δ`, evaluated as the symmetric quotient
/// `(A(y+δ) ⊖_κ A(y−δ)) / 2δ` with Richardson extrapolation.
///
/// Kept for comparison only; see the module docs for why this is not a
/// non-Newtonian derivative.
pub fn kappa_dual_derivative(a: impl Fn(f64) -> f64, y: f64, kappa: f64) -> Result<f64> {
    let k = KappaParams::new(kappa)?.kappa;
    let quotient = |h: f64| {
        let diff = arcsinh_k(k, a(y + h)) - arcsinh_k(k, a(y - h));
        sinh_k(k, diff) / (2.0 * h)
    };
    finite(
        "dual kappa derivative",
        richardson_extrapolate(quotient, default_step(y)),
    )
}

/// `Ln(y) = (1/κ) sinh(κ ln y)`, the logarithm `ℝ → ℝ_κ`.
pub fn kappa_ln(y: f64, kappa: f64) -> Result<f64> {
    let k = KappaParams::new(kappa)?.kappa;
    if !(y > 0.0) {
        return Err(Error::domain("kappa ln", y));
    }
    finite("kappa ln", sinh_k(k, y.ln()))
}

/// Non-Newtonian derivative of `Ln: ℝ → ℝ_κ`, `(1/κ) sinh(κ/y)`.
pub fn kappa_nn_ln_derivative(y: f64, kappa: f64) -> Result<f64> {
    let k = KappaParams::new(kappa)?.kappa;
    if !(y > 0.0) {
        return Err(Error::domain("kappa ln derivative", y));
    }
    let v = sinh_k(k, 1.0 / y);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!("sinh(κ/y) at y = {y}")))
    }
}

/// Kaniadakis exponential `ℝ_κ → ℝ`: `e^{(1/κ) arcsinh(κx)}`.
pub fn kappa_exp(x: f64, kappa: f64) -> Result<f64> {
    let k = KappaParams::new(kappa)?.kappa;
    let v = arcsinh_k(k, x).exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!("kappa exp at x = {x}")))
    }
}

/// Exponential `ℝ_κ → ℝ_κ`: `(1/κ) sinh(κ e^{(1/κ) arcsinh(κx)})`.
pub fn kappa_exp_self(x: f64, kappa: f64) -> Result<f64> {
    let inner = kappa_exp(x, kappa)?;
    let v = sinh_k(kappa, inner);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!("kappa self-exp at x = {x}")))
    }
}

/// One row of the tail comparison: both exponentials at `−x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailRow {
    pub x: f64,
    /// `Exp: ℝ_κ → ℝ` at `−x`.
    pub exp_k1_k0: f64,
    /// `Exp: ℝ_κ → ℝ_κ` at `−x`.
    pub exp_k1_k1: f64,
}

impl TailRow {
    /// `ln(exp_k1_k0) / ln(exp_k1_k1)`; tends to 1 as `x` grows.
    pub fn log_ratio(&self) -> f64 {
        self.exp_k1_k0.ln() / self.exp_k1_k1.ln()
    }
}

/// Both exponentials of `−x` on a log-spaced grid over `[x_lo, x_hi]`.
pub fn fig1_table(x_lo: f64, x_hi: f64, n_points: usize, kappa: f64) -> Result<Vec<TailRow>> {
    KappaParams::new(kappa)?;
    logspace(x_lo, x_hi, n_points)?
        .into_iter()
        .map(|x| {
            Ok(TailRow {
                x,
                exp_k1_k0: kappa_exp(-x, kappa)?,
                exp_k1_k1: kappa_exp_self(-x, kappa)?,
            })
        })
        .collect()
}

/// CSV header `x,exp_k1_k0,exp_k1_k1`.
pub fn tail_table(rows: &[TailRow]) -> Table {
    let mut t = Table::new(["x", "exp_k1_k0", "exp_k1_k1"]);
    for r in rows {
        t.push_nums([r.x, r.exp_k1_k0, r.exp_k1_k1]);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rel_err;

    #[test]
    fn stable_arcsinh_matches_std() {
        for x in [-1e12, -30.0, -1.0, -1e-9, 0.0, 1e-300, 1e-7, 0.3, 2.0, 1e9, 1e200] {
            let (a, b) = (asinh_stable(x), x.asinh());
            assert!((a - b).abs() <= 4e-16 * b.abs().max(1e-300), "{x}: {a} {b}");
            assert_eq!(asinh_stable(-x), -asinh_stable(x));
        }
    }

    #[test]
    fn series_branch_is_seamless() {
        // just below the cutoff the series agrees with the closed form
        for k in [1e-3, 0.5, 2.0] {
            for u in [0.5e-4, 0.9e-4, 0.999e-4] {
                let x = u / k;
                let direct = asinh_stable(u) / k;
                assert!((arcsinh_k(k, x) - direct).abs() <= 4e-16 * direct.abs(), "{k} {u}");
                let direct = u.sinh() / k;
                assert!((sinh_k(k, x) - direct).abs() <= 4e-16 * direct.abs(), "{k} {u}");
            }
        }
    }

    #[test]
    fn one_kappa() {
        let p = KappaParams::new(1.0).unwrap();
        assert!((p.one() - 1f64.sinh()).abs() < 1e-15);
        assert_eq!(KappaParams::new(0.0).unwrap().one(), 1.0);
        assert!(KappaParams::new(-0.1).is_err());
        assert!(KappaParams::new(f64::NAN).is_err());
    }

    #[test]
    fn kappa_derivative_examples() {
        let d = kappa_derivative(|x| x, 1.0, 1.0).unwrap();
        assert!((d - 2f64.sqrt()).abs() < 1e-10);
        assert!((d - 1.414214).abs() < 1e-6);
        let d0 = kappa_derivative(f64::sin, 0.4, 0.0).unwrap();
        assert!((d0 - 0.4f64.cos()).abs() < 1e-10);
        for x in [-2.0, -0.3, 0.0, 0.8, 3.0] {
            let e = |x| kappa_exp(x, 1.0).unwrap();
            let d = kappa_derivative(e, x, 1.0).unwrap();
            assert!(rel_err(d, e(x)) < 1e-9, "x={x}");
        }
    }

    #[test]
    fn dual_derivative_examples() {
        let ln = |y| kappa_ln(y, 1.0).unwrap();
        let d = kappa_dual_derivative(ln, 2.0, 1.0).unwrap();
        assert!((d - 0.5).abs() < 1e-9, "{d}");
        let d0 = kappa_dual_derivative(f64::exp, 0.5, 0.0).unwrap();
        assert!((d0 - 0.5f64.exp()).abs() < 1e-9);
        let d1 = kappa_dual_derivative(|y| y, 1.0, 1.0).unwrap();
        assert!((d1 - 0.5f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn nn_ln_derivative_examples() {
        assert!((kappa_nn_ln_derivative(2.0, 1.0).unwrap() - 0.5f64.sinh()).abs() < 1e-15);
        assert!((kappa_nn_ln_derivative(2.0, 1.0).unwrap() - 0.521095).abs() < 1e-6);
        assert_eq!(kappa_nn_ln_derivative(2.0, 0.0).unwrap(), 0.5);
        assert!((kappa_nn_ln_derivative(1.0, 1.0).unwrap() - 1.175201).abs() < 1e-6);
        assert!(matches!(
            kappa_nn_ln_derivative(0.0, 1.0),
            Err(Error::DomainViolation { .. })
        ));
        assert!(matches!(kappa_ln(-1.0, 1.0), Err(Error::DomainViolation { .. })));
    }

    #[test]
    fn exp_examples() {
        assert!((kappa_exp(1.0, 1.0).unwrap() - (1.0 + 2f64.sqrt())).abs() < 1e-14);
        assert_eq!(kappa_exp(0.0, 0.7).unwrap(), 1.0);
        for x in [0.1, 1.0, 7.0, 250.0] {
            let prod = kappa_exp(x, 1.3).unwrap() * kappa_exp(-x, 1.3).unwrap();
            assert!((prod - 1.0).abs() < 1e-14, "x={x}");
        }
        assert!(matches!(kappa_exp(1e308, 0.0), Err(Error::Overflow(_))));
        // self-exp at 0 is 1_κ
        assert!((kappa_exp_self(0.0, 1.0).unwrap() - 1f64.sinh()).abs() < 1e-15);
    }

    #[test]
    fn tail_rows() {
        let rows = fig1_table(1e-2, 1e4, 50, 0.0).unwrap();
        for r in &rows {
            assert_eq!(r.exp_k1_k0, (-r.x).exp());
            assert_eq!(r.exp_k1_k1, (-r.x).exp());
        }
        let r = fig1_table(10.0, 20.0, 2, 1.0).unwrap()[0];
        assert!((r.exp_k1_k0 - 1.0 / (10.0 + 101f64.sqrt())).abs() < 1e-15);
        assert!((r.exp_k1_k0 - 0.049876).abs() < 1e-6);
        assert!(fig1_table(0.0, 1.0, 10, 1.0).is_err());
    }
}
