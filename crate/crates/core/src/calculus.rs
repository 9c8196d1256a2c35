//! Non-Newtonian calculus of maps `A: X → Y` between two arithmetics.
//!
//! Every map has a conjugate `Ã = f_Y ∘ A ∘ f_X⁻¹` on ℝ, and all calculus is
//! done there:
//!
//! | object | formula |
//! |--------|---------|
//! | derivative | `DA/Dx = f_Y⁻¹( dÃ/dr \|_{r = f_X(x)} )` |
//! | integral | `∫_y^x A Dx′ = f_Y⁻¹( ∫_{f_X(y)}^{f_X(x)} Ã(r) dr )` |
//! | exponential | `Exp(x) = f_Y⁻¹( e^{f_X(x)} )`, solving `DExp = Exp`, `Exp(0_X) = 1_Y` |
//! | logarithm | `Ln(y) = f_X⁻¹( ln f_Y(y) )` |
//!
//! Derivatives use a central difference in r-space with two Richardson
//! levels, starting from the step `1e-4 · (1 + |f_X(x)|)`. Integrals use
//! adaptive Simpson with absolute tolerance `1e-10` unless told otherwise.
//!
//! ```
//! use nncalc::arithmetic::Arithmetic;
//! use nncalc::calculus::{nn_derivative, NNFunction};
//!
//! // A(x) = x from (ℝ₊, ln) to ordinary ℝ is its own derivative
//! let a = NNFunction::new(Arithmetic::log(), Arithmetic::identity(), |x| x);
//! let d = nn_derivative(&a, 3.0, None).unwrap();
//! assert!((d - 3.0).abs() < 1e-9);
//! ```

use std::fmt;
use std::sync::Arc;

use crate::arithmetic::{Arithmetic, Op};
use crate::error::{Error, Result};
use crate::numeric::{adaptive_simpson, default_step, richardson_derivative, DEFAULT_QUAD_TOL};

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Repr {
    /// `A` itself.
    Direct(RealFn),
    /// `Ã` on ℝ.
    Conjugate(RealFn),
}

/// A map between two arithmetics together with its conjugate on ℝ.
#[derive(Clone)]
pub struct NNFunction {
    dom: Arithmetic,
    cod: Arithmetic,
    repr: Repr,
}

impl fmt::Debug for NNFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let repr = match self.repr {
            Repr::Direct(_) => "direct",
            Repr::Conjugate(_) => "conjugate",
        };
        f.debug_struct("NNFunction")
            .field("dom", &self.dom.label())
            .field("cod", &self.cod.label())
            .field("repr", &repr)
            .finish()
    }
}

impl NNFunction {
    /// Wraps `A: X → Y`.
    pub fn new(
        dom: Arithmetic,
        cod: Arithmetic,
        map: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        NNFunction {
            dom,
            cod,
            repr: Repr::Direct(Arc::new(map)),
        }
    }

    /// Builds `A = f_Y⁻¹ ∘ Ã ∘ f_X` from its conjugate.
    pub fn from_conjugate(
        dom: Arithmetic,
        cod: Arithmetic,
        conjugate: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        NNFunction {
            dom,
            cod,
            repr: Repr::Conjugate(Arc::new(conjugate)),
        }
    }

    pub fn dom(&self) -> &Arithmetic {
        &self.dom
    }

    pub fn cod(&self) -> &Arithmetic {
        &self.cod
    }

    /// `A(x)`. NaN when `x` or an intermediate leaves a generator's domain.
    pub fn eval(&self, x: f64) -> f64 {
        match &self.repr {
            Repr::Direct(a) => a(x),
            Repr::Conjugate(c) => {
                let r = self.dom.generator().forward(x);
                self.cod.generator().inverse(c(r))
            }
        }
    }

    /// `Ã(r)`. NaN under the same conditions as [`NNFunction::eval`].
    pub fn conjugate(&self, r: f64) -> f64 {
        match &self.repr {
            Repr::Direct(a) => {
                let x = self.dom.generator().inverse(r);
                self.cod.generator().forward(a(x))
            }
            Repr::Conjugate(c) => c(r),
        }
    }

    /// Checks the commutative diagram `|f_Y(A(x)) − Ã(f_X(x))| ≤ tol` at each
    /// sample point.
    pub fn check_diagram(&self, xs: &[f64], tol: f64) -> Result<()> {
        for &x in xs {
            let lhs = self.cod.to_real(self.eval(x))?;
            let rhs = self.conjugate(self.dom.to_real(x)?);
            if !((lhs - rhs).abs() <= tol) {
                return Err(Error::NonFinite(format!(
                    "diagram fails at x = {x}: f_Y(A(x)) = {lhs}, Ã(f_X(x)) = {rhs}"
                )));
            }
        }
        Ok(())
    }

    /// `x ↦ A(x) ∘_Y B(x)`, evaluated with `Y`'s arithmetic.
    pub fn pointwise(&self, op: Op, other: &NNFunction) -> NNFunction {
        let (a, b, cod) = (self.clone(), other.clone(), self.cod.clone());
        NNFunction::new(self.dom.clone(), self.cod.clone(), move |x| {
            cod.binary(op, a.eval(x), b.eval(x)).unwrap_or(f64::NAN)
        })
    }

    /// `DA/Dx` as a map `X → Y`, with conjugate `dÃ/dr`. `step` fixes the
    /// r-space step; by default it scales with `|r|`.
    pub fn derivative(&self, step: Option<f64>) -> NNFunction {
        let f = self.clone();
        NNFunction::from_conjugate(self.dom.clone(), self.cod.clone(), move |r| {
            let h = step.unwrap_or_else(|| default_step(r));
            richardson_derivative(|s| f.conjugate(s), r, h)
        })
    }

    /// `x ↦ ∫_base^x A(x′) Dx′`, with conjugate `R ↦ ∫_{f_X(base)}^R Ã dr`.
    pub fn antiderivative(&self, base: f64, tol: f64) -> NNFunction {
        let f = self.clone();
        let r0 = self.dom.generator().forward(base);
        NNFunction::from_conjugate(self.dom.clone(), self.cod.clone(), move |r| {
            adaptive_simpson(|s| f.conjugate(s), r0, r, tol).unwrap_or(f64::NAN)
        })
    }
}

/// `DA/Dx` at `x`. The initial r-space step defaults to `1e-4 · (1 + |f_X(x)|)`.
///
/// Fails with `DomainViolation` when `x` or the stencil `f_X(x) ± step`
/// leaves the domain, and `NonFinite` when the difference quotient is not finite.
pub fn nn_derivative(f: &NNFunction, x: f64, step: Option<f64>) -> Result<f64> {
    let r = f.dom.to_real(x)?;
    let h = step.unwrap_or_else(|| default_step(r));
    if !(h > 0.0) {
        return Err(Error::InvalidParam(format!("derivative step {h}")));
    }
    let conj_dom = f.dom.generator().range();
    for s in [r - h, r + h] {
        if !conj_dom.contains(s) {
            return Err(Error::domain(format!("{} (stencil)", f.dom.label()), s));
        }
    }
    let d = richardson_derivative(|s| f.conjugate(s), r, h);
    if !d.is_finite() {
        return Err(Error::NonFinite(format!("difference quotient at x = {x}")));
    }
    f.cod.embed(d)
}

/// `∫_lo^hi A(x) Dx`; the inner integral runs over `[f_X(lo), f_X(hi)]` with
/// absolute tolerance `tol` (default `1e-10`).
pub fn nn_integral(f: &NNFunction, lo: f64, hi: f64, tol: Option<f64>) -> Result<f64> {
    let a = f.dom.to_real(lo)?;
    let b = f.dom.to_real(hi)?;
    let inner = adaptive_simpson(|r| f.conjugate(r), a, b, tol.unwrap_or(DEFAULT_QUAD_TOL))?;
    f.cod.embed(inner)
}

/// `Exp(x) = f_Y⁻¹(e^{f_X(x)})`.
pub fn nn_exp(x_arith: &Arithmetic, y_arith: &Arithmetic, x: f64) -> Result<f64> {
    let r = x_arith.to_real(x)?;
    y_arith.embed(r.exp())
}

/// `Ln(y) = f_X⁻¹(ln f_Y(y))`; requires `f_Y(y) > 0`.
pub fn nn_ln(x_arith: &Arithmetic, y_arith: &Arithmetic, y: f64) -> Result<f64> {
    let fy = y_arith.to_real(y)?;
    if !(fy > 0.0) {
        return Err(Error::domain(format!("Ln over {}", y_arith.label()), y));
    }
    x_arith.embed(fy.ln())
}

/// `Exp: X → Y` as an [`NNFunction`] (conjugate `eʳ`).
pub fn exp_function(x_arith: &Arithmetic, y_arith: &Arithmetic) -> NNFunction {
    NNFunction::from_conjugate(x_arith.clone(), y_arith.clone(), f64::exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rel_err;
    use std::f64::consts::E;

    fn id() -> Arithmetic {
        Arithmetic::identity()
    }

    #[test]
    fn derivative_examples() {
        let a = NNFunction::new(Arithmetic::log(), id(), |x| x);
        assert!((nn_derivative(&a, 3.0, None).unwrap() - 3.0).abs() < 1e-9);
        let b = NNFunction::new(id(), id(), |x| x);
        for x in [-4.0, 0.0, 2.5] {
            assert!((nn_derivative(&b, x, None).unwrap() - 1.0).abs() < 1e-10);
        }
        let sq = NNFunction::new(id(), id(), |x| x * x);
        assert!((nn_derivative(&sq, 2.0, None).unwrap() - 4.0).abs() < 1e-9);
    }

    #[test]
    fn derivative_domain_errors() {
        let a = NNFunction::new(Arithmetic::log(), id(), |x| x);
        assert!(matches!(
            nn_derivative(&a, -1.0, None),
            Err(Error::DomainViolation { .. })
        ));
        // Rényi conjugate domain is (0, ∞): a stencil crossing 0 is rejected
        let r = NNFunction::new(Arithmetic::renyi(2.0).unwrap(), id(), |x| x);
        let x = 50.0; // f(x) = e^{-50}
        assert!(matches!(
            nn_derivative(&r, x, Some(1e-3)),
            Err(Error::DomainViolation { .. })
        ));
        let edge = NNFunction::new(id(), id(), f64::sqrt);
        assert!(matches!(nn_derivative(&edge, 0.0, None), Err(Error::NonFinite(_))));
    }

    #[test]
    fn integral_examples() {
        let one = NNFunction::new(id(), id(), |_| 1.0);
        assert!((nn_integral(&one, 0.0, 5.0, None).unwrap() - 5.0).abs() < 1e-12);

        // oracle: composite trapezoid on e^r over [0, 1] with 2^16 panels,
        // Richardson-corrected once
        let trap = |n: usize| {
            let h = 1.0 / n as f64;
            let inner: f64 = (1..n).map(|i| (i as f64 * h).exp()).sum();
            h * (0.5 * (1.0 + E) + inner)
        };
        let oracle = (4.0 * trap(1 << 16) - trap(1 << 15)) / 3.0;
        let a = NNFunction::new(Arithmetic::log(), id(), |x| x);
        let v = nn_integral(&a, 1.0, E, None).unwrap();
        assert!((v - oracle).abs() < 1e-10, "{v} vs {oracle}");
        assert!((v - (E - 1.0)).abs() < 1e-10);

        let back = nn_integral(&a, E, 1.0, None).unwrap();
        assert_eq!(back, -v);
    }

    #[test]
    fn exp_ln_examples() {
        assert!((nn_exp(&id(), &id(), 1.0).unwrap() - E).abs() < 1e-15);
        let k1 = Arithmetic::kaniadakis(1.0).unwrap();
        assert!((nn_exp(&k1, &id(), 1.0).unwrap() - (1.0 + 2f64.sqrt())).abs() < 1e-14);
        assert_eq!(nn_exp(&Arithmetic::log(), &id(), 1.0).unwrap(), 1.0);

        assert!((nn_ln(&id(), &id(), E).unwrap() - 1.0).abs() < 1e-15);
        assert!((nn_ln(&k1, &id(), E).unwrap() - 1f64.sinh()).abs() < 1e-14);
        assert!(matches!(
            nn_ln(&id(), &id(), -1.0),
            Err(Error::DomainViolation { .. })
        ));
        for x in [-3.0, -0.5, 0.0, 0.7, 2.0] {
            let y = nn_exp(&k1, &Arithmetic::log(), x).unwrap();
            let back = nn_ln(&k1, &Arithmetic::log(), y).unwrap();
            assert!((back - x).abs() < 1e-12, "{x} -> {back}");
        }
    }

    #[test]
    fn exp_out_of_range() {
        // e^{f_X} > 0 has no preimage in the negative-log arithmetic only when
        // it overflows; in Rényi q=2 it always has one
        let r = Arithmetic::renyi(2.0).unwrap();
        assert!(nn_exp(&id(), &r, 3.0).is_ok());
        assert!(matches!(
            nn_exp(&id(), &id(), 1e3),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn diagram_holds_for_both_representations() {
        let k = Arithmetic::kaniadakis(0.8).unwrap();
        let xs: Vec<f64> = (0..50).map(|i| 0.1 + 0.2 * i as f64).collect();
        let a = NNFunction::new(Arithmetic::log(), k.clone(), |x| x.sqrt() - 1.0);
        a.check_diagram(&xs, 1e-10).unwrap();
        let b = NNFunction::from_conjugate(Arithmetic::log(), k, |r| r * r);
        b.check_diagram(&xs, 1e-10).unwrap();
    }

    #[test]
    fn derivative_of_exp_is_exp() {
        let x = Arithmetic::kaniadakis(0.5).unwrap();
        let y = Arithmetic::log();
        let e = exp_function(&x, &y);
        for p in [-1.0, 0.0, 0.4, 1.5] {
            let d = nn_derivative(&e, p, None).unwrap();
            let v = nn_exp(&x, &y, p).unwrap();
            assert!(rel_err(d, v) < 1e-9, "{p}: {d} {v}");
        }
        // Exp(0_X) = 1_Y
        assert!(rel_err(nn_exp(&x, &y, x.zero().unwrap()).unwrap(), y.one().unwrap()) < 1e-15);
    }
}
