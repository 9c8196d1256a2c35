use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Interval;
use crate::error::{Error, Result};
use crate::escort::SpinBijection;
use crate::kappa::{arcsinh_k, sinh_k};

type RealMap = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Plain-text description of a catalog generator:
/// `{"name": "kaniadakis", "params": {"kappa": 1.0}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub name: String,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
}

impl GeneratorConfig {
    pub fn new(name: impl Into<String>) -> Self {
        GeneratorConfig {
            name: name.into(),
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: f64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }
}

#[derive(Clone)]
enum Kind {
    Identity,
    Log,
    NegLog,
    Kaniadakis { kappa: f64 },
    Renyi { q: f64 },
    Lemma2 { a: f64, n: u32 },
    Spin,
    Matched { kappa: f64, scale: f64 },
    Custom { forward: RealMap, inverse: RealMap },
}

/// Below this `|1 - q|` the Rényi generator switches to the affine
/// representative `(e^{(1-q)x} - 1)/(1-q)`, whose `q → 1` limit is the identity.
pub const RENYI_NEAR_ONE: f64 = 1e-4;

/// An invertible map `f` from a set `X ⊆ ℝ` onto a subset of ℝ, inducing an
/// arithmetic on `X` by conjugation.
///
/// `forward` is `f`, `inverse` is `f⁻¹`; `domain` is where `f` is defined and
/// strictly monotone, `range` is `f(domain)`.
#[derive(Clone)]
pub struct Generator {
    label: String,
    kind: Kind,
    domain: Interval,
    range: Interval,
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Generator")
            .field("label", &self.label)
            .field("params", &self.params())
            .field("domain", &self.domain)
            .field("range", &self.range)
            .finish()
    }
}

fn check_finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParam(format!("{name} must be finite, got {v}")))
    }
}

impl Generator {
    /// `f(x) = x` on ℝ.
    pub fn identity() -> Self {
        Generator {
            label: "identity".into(),
            kind: Kind::Identity,
            domain: Interval::REAL,
            range: Interval::REAL,
        }
    }

    /// `f(x) = ln x` on ℝ₊.
    pub fn log() -> Self {
        Generator {
            label: "log".into(),
            kind: Kind::Log,
            domain: Interval::positive(),
            range: Interval::REAL,
        }
    }

    /// `f(x) = ln(−x)` on −ℝ₊, with `f⁻¹(r) = −eʳ`.
    pub fn neglog() -> Self {
        Generator {
            label: "neglog".into(),
            kind: Kind::NegLog,
            domain: Interval::negative(),
            range: Interval::REAL,
        }
    }

    /// Kaniadakis `f_κ(x) = (1/κ) arcsinh(κx)` on ℝ; κ = 0 is the identity.
    pub fn kaniadakis(kappa: f64) -> Result<Self> {
        check_finite("kappa", kappa)?;
        if kappa < 0.0 {
            return Err(Error::InvalidParam(format!("kappa must be >= 0, got {kappa}")));
        }
        Ok(Generator {
            label: "kaniadakis".into(),
            kind: Kind::Kaniadakis { kappa },
            domain: Interval::REAL,
            range: Interval::REAL,
        })
    }

    /// Rényi `f_q(x) = e^{(1−q)x}`, `f_q⁻¹(y) = ln(y)/(1−q)`.
    ///
    /// For `|1 − q| <` [`RENYI_NEAR_ONE`] the affine representative
    /// `(f_q − 1)/(1 − q)` is used instead. Kolmogorov-Nagumo means are
    /// unchanged by the substitution and `q = 1` becomes the identity.
    pub fn renyi(q: f64) -> Result<Self> {
        check_finite("q", q)?;
        let eps = 1.0 - q;
        let range = if eps.abs() >= RENYI_NEAR_ONE {
            Interval::positive()
        } else if eps > 0.0 {
            Interval::open(-1.0 / eps, f64::INFINITY)
        } else if eps < 0.0 {
            Interval::open(f64::NEG_INFINITY, -1.0 / eps)
        } else {
            Interval::REAL
        };
        Ok(Generator {
            label: "renyi".into(),
            kind: Kind::Renyi { q },
            domain: Interval::REAL,
            range,
        })
    }

    /// Affine generator whose inverse is the escort map
    /// `g(p) = (1 − a + 2ap)/(n + (2 − n)a)`. Needs `a ∈ [−1, 1] \ {0}`, `n ≥ 3`.
    pub fn lemma2(a: f64, n: u32) -> Result<Self> {
        crate::escort::check_affine(a, n)?;
        if a == 0.0 {
            return Err(Error::InvalidParam(
                "a = 0 collapses every probability to 1/n and is not invertible".into(),
            ));
        }
        Ok(Generator {
            label: "lemma2".into(),
            kind: Kind::Lemma2 { a, n },
            domain: Interval::REAL,
            range: Interval::REAL,
        })
    }

    /// `f = g⁻¹` for the periodic spin bijection `g`.
    pub fn spin() -> Self {
        Generator {
            label: "spin".into(),
            kind: Kind::Spin,
            domain: Interval::REAL,
            range: Interval::REAL,
        }
    }

    /// `f(t) = scale · (1/κ) sinh(κt)`, the Friedman-matched generator.
    pub fn scaled_kappa_inverse(kappa: f64, scale: f64) -> Result<Self> {
        check_finite("kappa", kappa)?;
        check_finite("scale", scale)?;
        if kappa < 0.0 || scale <= 0.0 {
            return Err(Error::InvalidParam(format!(
                "need kappa >= 0 and scale > 0 (kappa={kappa}, scale={scale})"
            )));
        }
        Ok(Generator {
            label: "matched".into(),
            kind: Kind::Matched { kappa, scale },
            domain: Interval::REAL,
            range: Interval::REAL,
        })
    }

    /// A generator from a user-supplied pair of closed-form maps. The pair is
    /// trusted; use [`Generator::check_invariants`] to validate it.
    pub fn custom(
        label: impl Into<String>,
        domain: Interval,
        range: Interval,
        forward: impl Fn(f64) -> f64 + Send + Sync + 'static,
        inverse: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Generator {
            label: label.into(),
            kind: Kind::Custom {
                forward: Arc::new(forward),
                inverse: Arc::new(inverse),
            },
            domain,
            range,
        }
    }

    pub fn from_config(cfg: &GeneratorConfig) -> Result<Self> {
        let allowed: &[&str] = match cfg.name.as_str() {
            "identity" | "log" | "neglog" | "spin" => &[],
            "kaniadakis" => &["kappa"],
            "renyi" => &["q"],
            "lemma2" => &["a", "n"],
            other => return Err(Error::Config(format!("unknown generator `{other}`"))),
        };
        if let Some(k) = cfg.params.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(Error::Config(format!(
                "generator `{}` takes no parameter `{k}`",
                cfg.name
            )));
        }
        let get = |k: &str| {
            cfg.params
                .get(k)
                .copied()
                .ok_or_else(|| Error::Config(format!("generator `{}` needs `{k}`", cfg.name)))
        };
        match cfg.name.as_str() {
            "identity" => Ok(Self::identity()),
            "log" => Ok(Self::log()),
            "neglog" => Ok(Self::neglog()),
            "spin" => Ok(Self::spin()),
            "kaniadakis" => Self::kaniadakis(get("kappa")?),
            "renyi" => Self::renyi(get("q")?),
            "lemma2" => {
                let n = get("n")?;
                if n.fract() != 0.0 || !(3.0..=u32::MAX as f64).contains(&n) {
                    return Err(Error::Config(format!("lemma2 needs integer n >= 3, got {n}")));
                }
                Self::lemma2(get("a")?, n as u32)
            }
            _ => unreachable!(),
        }
    }

    /// Catalog generators round-trip through their config; the Friedman-matched
    /// and custom generators have none.
    pub fn to_config(&self) -> Option<GeneratorConfig> {
        match self.kind {
            Kind::Matched { .. } | Kind::Custom { .. } => None,
            _ => {
                let mut cfg = GeneratorConfig::new(self.label.clone());
                cfg.params = self.params();
                Some(cfg)
            }
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn params(&self) -> BTreeMap<String, f64> {
        let mut m = BTreeMap::new();
        match self.kind {
            Kind::Kaniadakis { kappa } => {
                m.insert("kappa".into(), kappa);
            }
            Kind::Renyi { q } => {
                m.insert("q".into(), q);
            }
            Kind::Lemma2 { a, n } => {
                m.insert("a".into(), a);
                m.insert("n".into(), n as f64);
            }
            Kind::Matched { kappa, scale } => {
                m.insert("kappa".into(), kappa);
                m.insert("scale".into(), scale);
            }
            _ => {}
        }
        m
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    /// `f(domain)`.
    pub fn range(&self) -> Interval {
        self.range
    }

    /// `f(x)` without domain checks.
    pub fn forward(&self, x: f64) -> f64 {
        match &self.kind {
            Kind::Identity => x,
            Kind::Log => x.ln(),
            Kind::NegLog => (-x).ln(),
            Kind::Kaniadakis { kappa } => arcsinh_k(*kappa, x),
            Kind::Renyi { q } => {
                let eps = 1.0 - q;
                if eps.abs() >= RENYI_NEAR_ONE {
                    (eps * x).exp()
                } else if eps == 0.0 {
                    x
                } else {
                    (eps * x).exp_m1() / eps
                }
            }
            Kind::Lemma2 { a, n } => {
                let n = *n as f64;
                ((n + (2.0 - n) * a) * x - 1.0 + a) / (2.0 * a)
            }
            Kind::Spin => SpinBijection.inverse(x),
            Kind::Matched { kappa, scale } => scale * sinh_k(*kappa, x),
            Kind::Custom { forward, .. } => forward(x),
        }
    }

    /// `f⁻¹(r)` without range checks.
    pub fn inverse(&self, r: f64) -> f64 {
        match &self.kind {
            Kind::Identity => r,
            Kind::Log => r.exp(),
            Kind::NegLog => -r.exp(),
            Kind::Kaniadakis { kappa } => sinh_k(*kappa, r),
            Kind::Renyi { q } => {
                let eps = 1.0 - q;
                if eps.abs() >= RENYI_NEAR_ONE {
                    r.ln() / eps
                } else if eps == 0.0 {
                    r
                } else {
                    (eps * r).ln_1p() / eps
                }
            }
            Kind::Lemma2 { a, n } => crate::escort::affine_map(*a, *n, r),
            Kind::Spin => SpinBijection.forward(r),
            Kind::Matched { kappa, scale } => arcsinh_k(*kappa, r / scale),
            Kind::Custom { inverse, .. } => inverse(r),
        }
    }

    /// `f(x)`, rejecting `x` outside the domain.
    pub fn apply(&self, x: f64) -> Result<f64> {
        if !self.domain.contains(x) {
            return Err(Error::domain(&self.label, x));
        }
        let r = self.forward(x);
        if r.is_finite() {
            Ok(r)
        } else {
            Err(Error::NonFinite(format!("{}({x})", self.label)))
        }
    }

    /// `f⁻¹(r)`, rejecting `r` outside `f(domain)`.
    pub fn apply_inverse(&self, r: f64) -> Result<f64> {
        if !self.range.contains(r) {
            return Err(Error::out_of_range(&self.label, r));
        }
        let x = self.inverse(r);
        if x.is_finite() {
            Ok(x)
        } else {
            Err(Error::Overflow(format!("{}⁻¹({r})", self.label)))
        }
    }

    /// Validates the round-trip `|f⁻¹(f(x)) − x| ≤ 1e-10(1 + |x|)` and strict
    /// monotonicity of `f` on an `n`-point grid inside the domain.
    pub fn check_invariants(&self, n: usize) -> Result<()> {
        let grid = self.domain.sample_grid(n);
        let images: Vec<f64> = grid.iter().map(|&x| self.forward(x)).collect();
        for (&x, &r) in grid.iter().zip(&images) {
            let back = self.inverse(r);
            if !((back - x).abs() <= 1e-10 * (1.0 + x.abs())) {
                return Err(Error::InvalidParam(format!(
                    "`{}` round trip at {x} returned {back}",
                    self.label
                )));
            }
        }
        let up = images.windows(2).all(|w| w[1] > w[0]);
        let down = images.windows(2).all(|w| w[1] < w[0]);
        if up || down {
            Ok(())
        } else {
            Err(Error::InvalidParam(format!(
                "`{}` is not strictly monotone on its domain",
                self.label
            )))
        }
    }
}
