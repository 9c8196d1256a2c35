//! Escort maps `g` that send every probability vector to a probability
//! vector, one component at a time.
//!
//! * Two outcomes: `g(p) + g(1 − p) = 1` for all `p` exactly when
//!   `g(p) = 1/2 + h(p − 1/2)` with `h` odd.
//! * `n ≥ 3` outcomes: only the affine family
//!   `g(p) = (1 − a + 2ap) / (n + (2 − n)a)`, `−1 ≤ a ≤ 1`, survives. It
//!   depends on `n`, and for fixed `a < 1` it flattens toward `1/n` as `n`
//!   grows; only `a = 1` (`g(p) = p`) works for every `n` at once.
//!
//! The choice `h(x) = (1/2) sin πx` gives `g(p) = sin²(πp/2)`, and with
//! `p = (π − θ)/π` this is the spin-1/2 conditional probability `cos²(θ/2)`.
//! Extending `g` periodically (`g(x) = n + sin²(π(x − n)/2)` on `[n, n+1]`)
//! gives a bijection of ℝ whose inverse generates an arithmetic in which
//! `cos²((α − β)/2)` is a non-Newtonian integral of the flat density `1/π`
//! over a half-circle ([`hidden_variable_integral`]).
//!
//! Conditional probabilities of several binary filters in sequence are
//! products of binary escorts, each factor normalized on its own:
//!
//! ```
//! use nncalc::escort::{escort_binary, EscortFamily};
//!
//! let g = EscortFamily::sine();
//! let (p1, p2) = (0.3, 0.8);
//! let branches = [
//!     escort_binary(&g, p1).unwrap() * escort_binary(&g, p2).unwrap(),
//!     escort_binary(&g, p1).unwrap() * escort_binary(&g, 1.0 - p2).unwrap(),
//!     escort_binary(&g, 1.0 - p1).unwrap() * escort_binary(&g, p2).unwrap(),
//!     escort_binary(&g, 1.0 - p1).unwrap() * escort_binary(&g, 1.0 - p2).unwrap(),
//! ];
//! assert!((branches.iter().sum::<f64>() - 1.0).abs() < 1e-12);
//! ```
//!
//! None of this is a Bell-inequality simulation; the module only evaluates
//! the maps and the integral.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::arithmetic::Arithmetic;
use crate::calculus::{nn_integral, NNFunction};
use crate::error::{Error, Result};
use crate::statmech::ProbabilityVector;

/// `g(x) = n + sin²(π(x − n)/2)` for `n ≤ x ≤ n + 1`, a strictly increasing
/// bijection of ℝ fixing the integers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SpinBijection;

impl SpinBijection {
    pub fn forward(&self, x: f64) -> f64 {
        if !x.is_finite() {
            return f64::NAN;
        }
        let n = x.floor();
        let s = (FRAC_PI_2 * (x - n)).sin();
        n + s * s
    }

    /// `g⁻¹(y)` by bisection inside the unit cell `⌊y⌋ ≤ x ≤ ⌊y⌋ + 1`
    /// (64 halvings).
    pub fn inverse(&self, y: f64) -> f64 {
        if !y.is_finite() {
            return f64::NAN;
        }
        let n = y.floor();
        let target = y - n;
        if target == 0.0 {
            return n;
        }
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..64 {
            let mid = 0.5 * (lo + hi);
            let s = (FRAC_PI_2 * mid).sin();
            if s * s < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        n + 0.5 * (lo + hi)
    }
}

type OddFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A family of escort maps.
#[derive(Clone)]
pub enum EscortFamily {
    /// `g(p) = 1/2 + h(p − 1/2)`.
    OddPart { label: String, h: OddFn },
    /// `g(p) = (1 − a + 2ap)/(n + (2 − n)a)`.
    Affine { a: f64, n: u32 },
    /// `g(p) = sin²(πp/2)`, via [`SpinBijection`].
    Spin,
}

impl fmt::Debug for EscortFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EscortFamily::OddPart { label, .. } => write!(f, "OddPart({label})"),
            EscortFamily::Affine { a, n } => write!(f, "Affine(a={a}, n={n})"),
            EscortFamily::Spin => write!(f, "Spin"),
        }
    }
}

impl EscortFamily {
    /// Validates `h(−x) = −h(x)` to 1e-12 on 1001 points of `[−1/2, 1/2]`.
    pub fn odd_part(
        label: impl Into<String>,
        h: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let label = label.into();
        for i in 0..=1000 {
            let x = -0.5 + i as f64 / 1000.0;
            let defect = h(-x) + h(x);
            if !(defect.abs() <= 1e-12) {
                return Err(Error::InvalidParam(format!(
                    "h `{label}` is not odd: h({x}) + h({}) = {defect}",
                    -x
                )));
            }
        }
        Ok(EscortFamily::OddPart {
            label,
            h: Arc::new(h),
        })
    }

    /// Skips the oddness check, for building counterexamples.
    pub fn odd_part_unchecked(
        label: impl Into<String>,
        h: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        EscortFamily::OddPart {
            label: label.into(),
            h: Arc::new(h),
        }
    }

    /// `g(p) = p`.
    pub fn identity() -> Self {
        Self::odd_part_unchecked("x", |x| x)
    }

    /// `h(x) = (1/2) sin πx`, i.e. `g(p) = sin²(πp/2)`.
    pub fn sine() -> Self {
        Self::odd_part_unchecked("sin(pi x)/2", |x| 0.5 * (PI * x).sin())
    }

    pub fn affine(a: f64, n: u32) -> Result<Self> {
        check_affine(a, n)?;
        Ok(EscortFamily::Affine { a, n })
    }

    pub fn spin() -> Self {
        EscortFamily::Spin
    }

    /// `g(p)` without range checks.
    pub fn g(&self, p: f64) -> f64 {
        match self {
            EscortFamily::OddPart { h, .. } => 0.5 + h(p - 0.5),
            EscortFamily::Affine { a, n } => affine_map(*a, *n, p),
            EscortFamily::Spin => SpinBijection.forward(p),
        }
    }
}

pub(crate) fn check_affine(a: f64, n: u32) -> Result<()> {
    if !(-1.0..=1.0).contains(&a) {
        return Err(Error::InvalidParam(format!("a must lie in [-1, 1], got {a}")));
    }
    if n < 3 {
        return Err(Error::InvalidParam(format!("n must be >= 3, got {n}")));
    }
    Ok(())
}

pub(crate) fn affine_map(a: f64, n: u32, p: f64) -> f64 {
    let n = n as f64;
    (1.0 - a + 2.0 * a * p) / (n + (2.0 - n) * a)
}

fn check_probability(context: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::domain(context, p))
    }
}

/// Binary escort `g(p) = 1/2 + h(p − 1/2)`. Rejects affine families, which
/// need `n ≥ 3`.
pub fn escort_binary(family: &EscortFamily, p: f64) -> Result<f64> {
    check_probability("binary escort", p)?;
    if let EscortFamily::Affine { .. } = family {
        return Err(Error::InvalidParam(
            "affine escort families need n >= 3 outcomes".into(),
        ));
    }
    let v = family.g(p);
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(Error::RangeViolation { p, value: v })
    }
}

/// `(1 − a + 2ap)/(n + (2 − n)a)`.
pub fn escort_affine(a: f64, n: u32, p: f64) -> Result<f64> {
    check_affine(a, n)?;
    check_probability("affine escort", p)?;
    Ok(affine_map(a, n, p))
}

/// `g((π − θ)/π)` with `g(p) = sin²(πp/2)`; equals `cos²(θ/2)`.
pub fn quantum_conditional(theta: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::domain("relative angle", theta));
    }
    Ok(SpinBijection.forward((PI - theta) / PI))
}

/// Non-Newtonian integral of the half-circle density over `[α′, π′ ⊕ β′]`
/// in the arithmetic generated by `f = g⁻¹`, where `x′ = f⁻¹(x) = g(x)`.
/// The conjugate density is `1/π`. Returns `cos²((α − β)/2)`.
pub fn hidden_variable_integral(alpha: f64, beta: f64, tol: f64) -> Result<f64> {
    let theta = alpha - beta;
    // allow rounding in α − β at the ends
    if !(theta >= -1e-15 && theta <= PI + 1e-15) || !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::domain("alpha - beta", theta));
    }
    let spin = Arithmetic::spin();
    let density = NNFunction::from_conjugate(spin.clone(), spin.clone(), |_| 1.0 / PI);
    let prime = |x: f64| spin.embed(x);
    let lower = prime(alpha)?;
    let upper = spin.oplus(prime(PI)?, prime(beta)?)?;
    nn_integral(&density, lower, upper, Some(tol))
}

/// Rescales a binary escort to half-normalized outcome pairs,
/// `g(p) ↦ (1/2) g(2p)`, and checks `Σ` of the four images is 1 to 1e-10.
///
/// `p4 = (p₊₊, p₊₋, p₋₊, p₋₋)` must be nonnegative with both pair sums 1/2.
pub fn bell_rescaled_check(family: &EscortFamily, p4: [f64; 4]) -> Result<bool> {
    if let EscortFamily::Affine { .. } = family {
        return Err(Error::InvalidParam(
            "the rescaled check needs a binary escort family".into(),
        ));
    }
    if p4.iter().any(|&p| !(p >= 0.0)) {
        return Err(Error::InvalidParam(format!("negative probability in {p4:?}")));
    }
    let (first, second) = (p4[0] + p4[1], p4[2] + p4[3]);
    if (first - 0.5).abs() > 1e-10 || (second - 0.5).abs() > 1e-10 {
        return Err(Error::InvalidParam(format!(
            "pair sums must be 1/2, got {first} and {second}"
        )));
    }
    let total: f64 = p4.iter().map(|&p| 0.5 * family.g(2.0 * p)).sum();
    Ok((total - 1.0).abs() <= 1e-10)
}

/// `P_k = p_k^q / Σ_j p_j^q`. Zero entries are allowed only for `q > 0`.
pub fn escort_renormalized(p: &ProbabilityVector, q: f64) -> Result<ProbabilityVector> {
    if !q.is_finite() {
        return Err(Error::InvalidParam(format!("escort exponent {q}")));
    }
    if q <= 0.0 && p.iter().any(|&x| x == 0.0) {
        return Err(Error::InvalidParam(format!(
            "zero probability with escort exponent {q} <= 0"
        )));
    }
    let w: Vec<f64> = p
        .iter()
        .map(|&x| if x == 0.0 { 0.0 } else { x.powf(q) })
        .collect();
    let z: f64 = w.iter().sum();
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::NonFinite(format!("escort normalization {z}")));
    }
    ProbabilityVector::new(w.into_iter().map(|x| x / z).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorrespondenceRow {
    pub n: u32,
    pub g: f64,
}

/// `g_n(p)` of the affine family for each `n`.
pub fn correspondence_limit(a: f64, p: f64, n_list: &[u32]) -> Result<Vec<CorrespondenceRow>> {
    n_list
        .iter()
        .map(|&n| Ok(CorrespondenceRow { n, g: escort_affine(a, n, p)? }))
        .collect()
}
