//! Non-Diophantine arithmetics induced by a bijection `f: X → ℝ`.
//!
//! | operation | definition |
//! |-----------|------------|
//! | `x ⊕ y` | `f⁻¹(f(x) + f(y))` |
//! | `x ⊖ y` | `f⁻¹(f(x) − f(y))` |
//! | `x ⊙ y` | `f⁻¹(f(x) · f(y))` |
//! | `x ⊘ y` | `f⁻¹(f(x) / f(y))` |
//! | `⊖x`    | `f⁻¹(−f(x))` |
//! | `r_X`   | `f⁻¹(r)`, so `0_X = f⁻¹(0)` and `1_X = f⁻¹(1)` |
//!
//! Mixed operations take operands from two arithmetics and land in a third:
//! `x ⊕_Z^{XY} y = f_Z⁻¹(f_X(x) + f_Y(y))`.
//!
//! ```
//! use nncalc::arithmetic::{mixed_add, Arithmetic};
//!
//! // "two plus two" on the positive half-line with f = ln
//! let x = Arithmetic::log();
//! let two = x.embed(2.0).unwrap();
//! let four = x.oplus(two, two).unwrap();
//! assert!((four - 4f64.exp()).abs() < 1e-12 * four);
//!
//! // the same sum seen from the negative half-line
//! let y = Arithmetic::neglog();
//! let four_y = mixed_add(&y, &x, two, &y, y.embed(2.0).unwrap()).unwrap();
//! assert!((four_y + 4f64.exp()).abs() < 1e-12 * four);
//! ```

mod generator;
mod interval;

pub use generator::{Generator, GeneratorConfig, RENYI_NEAR_ONE};
pub use interval::Interval;

use crate::error::{Error, Result};

/// One of the four field operations on ℝ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

impl Op {
    pub fn apply(self, a: f64, b: f64) -> f64 {
        match self {
            Op::Add => a + b,
            Op::Sub => a - b,
            Op::Mul => a * b,
            Op::Div => a / b,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Op::Add => "⊕",
            Op::Sub => "⊖",
            Op::Mul => "⊙",
            Op::Div => "⊘",
        }
    }
}

/// The arithmetic `(X, ⊕, ⊖, ⊙, ⊘)` induced by a [`Generator`].
#[derive(Debug, Clone)]
pub struct Arithmetic {
    generator: Generator,
}

impl From<Generator> for Arithmetic {
    fn from(generator: Generator) -> Self {
        Arithmetic { generator }
    }
}

impl Arithmetic {
    pub fn new(generator: Generator) -> Self {
        Arithmetic { generator }
    }

    /// Ordinary `(ℝ, +, ·)`.
    pub fn identity() -> Self {
        Generator::identity().into()
    }

    /// `(ℝ₊, ⊕, ⊙)` with `f = ln`.
    pub fn log() -> Self {
        Generator::log().into()
    }

    /// `(−ℝ₊, ⊕, ⊙)` with `f(x) = ln(−x)`.
    pub fn neglog() -> Self {
        Generator::neglog().into()
    }

    /// `ℝ_κ`.
    pub fn kaniadakis(kappa: f64) -> Result<Self> {
        Generator::kaniadakis(kappa).map(Into::into)
    }

    pub fn renyi(q: f64) -> Result<Self> {
        Generator::renyi(q).map(Into::into)
    }

    pub fn spin() -> Self {
        Generator::spin().into()
    }

    pub fn generator(&self) -> &Generator {
        &self.generator
    }

    pub fn label(&self) -> &str {
        self.generator.label()
    }

    pub fn domain(&self) -> Interval {
        self.generator.domain()
    }

    /// `f(x)`: the real number `x` represents.
    pub fn to_real(&self, x: f64) -> Result<f64> {
        self.generator.apply(x)
    }

    /// `r_X = f⁻¹(r)`.
    pub fn embed(&self, r: f64) -> Result<f64> {
        self.generator.apply_inverse(r)
    }

    /// `0_X`; fails when 0 is not in the generator's range (e.g. Rényi).
    pub fn zero(&self) -> Result<f64> {
        self.embed(0.0)
    }

    /// `1_X`.
    pub fn one(&self) -> Result<f64> {
        self.embed(1.0)
    }

    fn operand(&self, x: f64) -> Result<f64> {
        self.generator.apply(x)
    }

    fn land(&self, r: f64) -> Result<f64> {
        let g = &self.generator;
        if !g.range().contains(r) {
            return Err(Error::domain(format!("{} (result)", g.label()), r));
        }
        let x = g.inverse(r);
        if x.is_finite() {
            Ok(x)
        } else {
            Err(Error::Overflow(format!("{}⁻¹({r})", g.label())))
        }
    }

    /// `f⁻¹(f(x) ∘ f(y))` for the given operation.
    pub fn binary(&self, op: Op, x: f64, y: f64) -> Result<f64> {
        let (fx, fy) = (self.operand(x)?, self.operand(y)?);
        if op == Op::Div && fy == 0.0 {
            return Err(Error::DivisionByZero {
                generator: self.label().to_string(),
            });
        }
        self.land(op.apply(fx, fy))
    }

    pub fn oplus(&self, x: f64, y: f64) -> Result<f64> {
        self.binary(Op::Add, x, y)
    }

    pub fn ominus(&self, x: f64, y: f64) -> Result<f64> {
        self.binary(Op::Sub, x, y)
    }

    pub fn odot(&self, x: f64, y: f64) -> Result<f64> {
        self.binary(Op::Mul, x, y)
    }

    pub fn oslash(&self, x: f64, y: f64) -> Result<f64> {
        self.binary(Op::Div, x, y)
    }

    /// `⊖x = f⁻¹(−f(x))`. Coincides with `−x` only for odd generators.
    pub fn neg(&self, x: f64) -> Result<f64> {
        let fx = self.operand(x)?;
        self.embed(-fx)
    }

    /// `⊕_k x_k`, folded left to right. Works without a representable zero.
    pub fn sum(&self, xs: &[f64]) -> Result<f64> {
        let mut acc = 0.0;
        for &x in xs {
            acc += self.operand(x)?;
        }
        self.land(acc)
    }
}

/// `f_target⁻¹(f_{a1}(x) ∘ f_{a2}(y))`. With `target = a1` this is the
/// two-arithmetic form `x ∘_X^Y y`.
///
/// Operands outside their own arithmetic's domain are `DomainViolation`s; a
/// combined value outside the target's range is `OutOfRange`.
pub fn mixed(
    target: &Arithmetic,
    op: Op,
    a1: &Arithmetic,
    x: f64,
    a2: &Arithmetic,
    y: f64,
) -> Result<f64> {
    let fx = a1.to_real(x)?;
    let fy = a2.to_real(y)?;
    if op == Op::Div && fy == 0.0 {
        return Err(Error::DivisionByZero {
            generator: a2.label().to_string(),
        });
    }
    target.embed(op.apply(fx, fy))
}

pub fn mixed_add(target: &Arithmetic, a1: &Arithmetic, x: f64, a2: &Arithmetic, y: f64) -> Result<f64> {
    mixed(target, Op::Add, a1, x, a2, y)
}

pub fn mixed_mul(target: &Arithmetic, a1: &Arithmetic, x: f64, a2: &Arithmetic, y: f64) -> Result<f64> {
    mixed(target, Op::Mul, a1, x, a2, y)
}
