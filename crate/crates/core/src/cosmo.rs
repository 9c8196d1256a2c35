//! Flat matter + Λ expansion in Hubble-time units, and its non-Newtonian
//! counterpart without a cosmological constant.
//!
//! The ordinary equation `ȧ = √(Ω_Λ a² + Ω_M/a)` is solved by
//! `a(t) = (√(Ω_M/Ω_Λ) sinh(3√Ω_Λ t/2))^{2/3}`. Replacing the time derivative
//! by the non-Newtonian one in an arithmetic `X` with generator `f_X` gives
//! `Da/Dt = √(Ω/a)` with no Λ term, solved by
//! `a(t) = ((3/2)√Ω f_X(t))^{2/3}`. The two agree exactly when
//!
//! ```text
//! f_X(t) = √(Ω_M/Ω) sinh(κt)/κ,    κ = (3/2)√Ω_Λ
//! ```
//!
//! which for `Ω_Λ = 0.7` is `κ ≈ 1.2550`. [`matched_generator`] builds it.
//!
//! [`nn_friedman_integrate`] solves the non-Newtonian equation numerically:
//! in `r = f_X(t)` it is the ordinary `da/dr = √(Ω/a)`, stepped with RK4.

use serde::Serialize;

use crate::arithmetic::{Arithmetic, Generator};
use crate::error::{Error, Result};
use crate::table::Table;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CosmologyParams {
    pub omega_m: f64,
    pub omega_lambda: f64,
    /// Constant of the Λ-free non-Newtonian equation.
    pub omega: f64,
}

impl Default for CosmologyParams {
    fn default() -> Self {
        CosmologyParams {
            omega_m: 0.3,
            omega_lambda: 0.7,
            omega: 0.3,
        }
    }
}

impl CosmologyParams {
    pub fn new(omega_m: f64, omega_lambda: f64, omega: f64) -> Result<Self> {
        for (name, v) in [("omega_m", omega_m), ("omega_lambda", omega_lambda), ("omega", omega)] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::InvalidParam(format!("{name} must be finite and >= 0, got {v}")));
            }
        }
        Ok(CosmologyParams {
            omega_m,
            omega_lambda,
            omega,
        })
    }

    /// `(3/2)√Ω_Λ`.
    pub fn kappa(&self) -> f64 {
        1.5 * self.omega_lambda.sqrt()
    }
}

/// Closed-form scale factor of the ordinary equation. `Ω_Λ = 0` gives the
/// matter-only limit `(3√Ω_M t/2)^{2/3}`.
pub fn friedman_scale_factor(t: f64, params: &CosmologyParams) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::domain("cosmic time", t));
    }
    let CosmologyParams {
        omega_m,
        omega_lambda,
        ..
    } = *params;
    let base = if omega_lambda == 0.0 {
        1.5 * omega_m.sqrt() * t
    } else {
        (omega_m / omega_lambda).sqrt() * (params.kappa() * t).sinh()
    };
    let a = base.cbrt().powi(2);
    if a.is_finite() {
        Ok(a)
    } else {
        Err(Error::Overflow(format!("scale factor at t = {t}")))
    }
}

/// `((3/2)√Ω f_X(t))^{2/3}`; needs `f_X(t) > 0`.
pub fn nn_friedman_scale_factor(t: f64, omega: f64, x_arith: &Arithmetic) -> Result<f64> {
    check_omega(omega)?;
    let r = x_arith.to_real(t)?;
    if !(r > 0.0) {
        return Err(Error::domain("f_X(t)", r));
    }
    Ok(closed_in_r(r, omega))
}

fn closed_in_r(r: f64, omega: f64) -> f64 {
    (1.5 * omega.sqrt() * r).cbrt().powi(2)
}

fn check_omega(omega: f64) -> Result<()> {
    if omega.is_finite() && omega > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParam(format!("omega must be finite and > 0, got {omega}")))
    }
}

#[derive(Debug, Clone)]
pub struct MatchedGenerator {
    pub generator: Generator,
    pub kappa: f64,
}

impl MatchedGenerator {
    pub fn arithmetic(&self) -> Arithmetic {
        Arithmetic::new(self.generator.clone())
    }
}

/// `f_X(t) = √(Ω_M/Ω) sinh(κt)/κ` with `κ = (3/2)√Ω_Λ`.
pub fn matched_generator(params: &CosmologyParams) -> Result<MatchedGenerator> {
    let CosmologyParams {
        omega_m,
        omega_lambda,
        omega,
    } = *params;
    if !(omega_m > 0.0 && omega_lambda > 0.0 && omega > 0.0) {
        return Err(Error::InvalidParam(format!(
            "matching needs positive densities, got {params:?}"
        )));
    }
    let kappa = params.kappa();
    let generator = Generator::scaled_kappa_inverse(kappa, (omega_m / omega).sqrt())?;
    Ok(MatchedGenerator { generator, kappa })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrajectoryPoint {
    pub t: f64,
    /// `f_X(t)`.
    pub r: f64,
    pub a: f64,
}

/// RK4 in `r = f_X(t)` for `da/dr = √(Ω/a)`, from the closed-form value at
/// `t_start` to `t_end`, with `steps` equal r-steps. Returns `steps + 1`
/// samples.
pub fn nn_friedman_integrate(
    t_start: f64,
    t_end: f64,
    omega: f64,
    x_arith: &Arithmetic,
    steps: usize,
) -> Result<Vec<TrajectoryPoint>> {
    check_omega(omega)?;
    if !(t_start > 0.0 && t_end > t_start) {
        return Err(Error::InvalidParam(format!(
            "need 0 < t_start < t_end, got [{t_start}, {t_end}]"
        )));
    }
    if steps < 100 {
        return Err(Error::InvalidParam(format!("need at least 100 steps, got {steps}")));
    }
    let r0 = x_arith.to_real(t_start)?;
    let r1 = x_arith.to_real(t_end)?;
    if !(r0 > 0.0) {
        return Err(Error::domain("f_X(t_start)", r0));
    }
    if !(r1 > r0) {
        return Err(Error::InvalidParam("f_X must increase over the interval".into()));
    }
    let rhs = |a: f64| (omega / a).sqrt();
    let h = (r1 - r0) / steps as f64;
    let mut a = closed_in_r(r0, omega);
    let mut out = Vec::with_capacity(steps + 1);
    out.push(TrajectoryPoint { t: t_start, r: r0, a });
    for step in 1..=steps {
        let k1 = rhs(a);
        let k2 = rhs(a + 0.5 * h * k1);
        let k3 = rhs(a + 0.5 * h * k2);
        let k4 = rhs(a + h * k3);
        a += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::StepFailure { step });
        }
        let r = if step == steps { r1 } else { r0 + h * step as f64 };
        let t = if step == steps { t_end } else { x_arith.embed(r)? };
        out.push(TrajectoryPoint { t, r, a });
    }
    Ok(out)
}

/// Columns `t,a_closed,a_integrated,a_standard`.
pub fn trajectory_table(
    points: &[TrajectoryPoint],
    params: &CosmologyParams,
    x_arith: &Arithmetic,
) -> Result<Table> {
    let mut table = Table::new(["t", "a_closed", "a_integrated", "a_standard"]);
    for p in points {
        table.push_nums([
            p.t,
            nn_friedman_scale_factor(p.t, params.omega, x_arith)?,
            p.a,
            friedman_scale_factor(p.t, params)?,
        ]);
    }
    Ok(table)
}
