//! Kolmogorov–Nagumo means, Rényi and Shannon entropies, the entropy of a
//! distribution living in a non-Newtonian arithmetic, and the matching
//! maximum-entropy solver ([`maxent`]).
//!
//! Entropies are in nats. [`to_bits`] converts for display.
//!
//! The KN mean with the exponential generator `f_q(x) = e^{(1−q)x}`
//! reproduces the Rényi entropy as the mean information `⟨ln 1/p⟩`:
//!
//! ```
//! use nncalc::arithmetic::Generator;
//! use nncalc::statmech::{kn_mean, renyi_entropy, ProbabilityVector};
//!
//! let p = ProbabilityVector::new(vec![0.2, 0.3, 0.5]).unwrap();
//! let info: Vec<f64> = p.iter().map(|x| (1.0 / x).ln()).collect();
//! let q = 2.5;
//! let mean = kn_mean(&Generator::renyi(q).unwrap(), &p, &info).unwrap();
//! assert!((mean - renyi_entropy(&p, q).unwrap()).abs() < 1e-12);
//! ```

pub mod maxent;

use std::ops::{Deref, Index};

use serde::Serialize;

use crate::arithmetic::{Arithmetic, Generator};
use crate::error::{Error, Result};

pub use maxent::{maxent_solve, EnergySpectrum, MaxEntSolution};

/// Sum tolerance for [`ProbabilityVector`].
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Below this `|q − 1|` the Rényi entropy is evaluated as Shannon's.
pub const SHANNON_SWITCH: f64 = 1e-6;

/// Entries in `[0, 1]` summing to 1 within [`NORMALIZATION_TOL`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbabilityVector(Vec<f64>);

impl ProbabilityVector {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::InvalidParam("empty probability vector".into()));
        }
        if let Some(&bad) = p.iter().find(|x| !(0.0..=1.0).contains(*x)) {
            return Err(Error::domain("probability", bad));
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::NormalizationError { sum });
        }
        Ok(ProbabilityVector(p))
    }

    /// Divides nonnegative finite weights by their sum.
    pub fn from_weights(w: &[f64]) -> Result<Self> {
        if w.iter().any(|x| !(x.is_finite() && *x >= 0.0)) {
            return Err(Error::InvalidParam(format!("weights must be finite and >= 0: {w:?}")));
        }
        let z: f64 = w.iter().sum();
        if !(z > 0.0) {
            return Err(Error::NormalizationError { sum: z });
        }
        Self::new(w.iter().map(|x| x / z).collect())
    }

    /// A uniformly distributed point of the `n`-simplex (normalized
    /// exponential draws).
    pub fn random<R: rand::Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Self> {
        let w: Vec<f64> = (0..n).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
        Self::from_weights(&w)
    }

    pub fn uniform(n: usize) -> Result<Self> {
        Self::new(vec![1.0 / n as f64; n])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for ProbabilityVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl Index<usize> for ProbabilityVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

fn check_lengths(p: &ProbabilityVector, a: &[f64]) -> Result<()> {
    if p.len() == a.len() {
        Ok(())
    } else {
        Err(Error::InvalidParam(format!(
            "{} probabilities for {} values",
            p.len(),
            a.len()
        )))
    }
}

/// `f⁻¹(Σ p_k f(a_k))`. Terms with `p_k = 0` are skipped.
pub fn kn_mean(f: &Generator, p: &ProbabilityVector, a: &[f64]) -> Result<f64> {
    check_lengths(p, a)?;
    let mut acc = 0.0;
    for (&pk, &ak) in p.iter().zip(a) {
        if pk > 0.0 {
            acc += pk * f.apply(ak)?;
        }
    }
    f.apply_inverse(acc)
}

/// The same mean written as `⊕_k p′_k ⊙ a_k` with `p′_k = f⁻¹(p_k)`, all in
/// the arithmetic generated by `f`. Every `p_k` must lie in the range of `f`.
pub fn kn_mean_as_nd_probability(f: &Generator, p: &ProbabilityVector, a: &[f64]) -> Result<f64> {
    check_lengths(p, a)?;
    let arith = Arithmetic::new(f.clone());
    let terms = p
        .iter()
        .zip(a)
        .map(|(&pk, &ak)| {
            let primed = arith.embed(pk)?;
            arith.odot(primed, ak)
        })
        .collect::<Result<Vec<f64>>>()?;
    arith.sum(&terms)
}

/// `p′_k = f⁻¹(p_k)`.
pub fn nd_probabilities(f: &Generator, p: &ProbabilityVector) -> Result<Vec<f64>> {
    p.iter().map(|&pk| f.apply_inverse(pk)).collect()
}

/// `true` iff `|⟨a + c⟩_f − (⟨a⟩_f + c)| < 1e-9`. Failed evaluations count
/// as `false`.
pub fn kn_translation_check(f: &Generator, p: &ProbabilityVector, a: &[f64], c: f64) -> bool {
    let shifted: Vec<f64> = a.iter().map(|x| x + c).collect();
    match (kn_mean(f, p, &shifted), kn_mean(f, p, a)) {
        (Ok(lhs), Ok(rhs)) => (lhs - (rhs + c)).abs() < 1e-9,
        _ => false,
    }
}

/// `Σ p_k ln(1/p_k)` with `0 · ln(1/0) = 0`.
pub fn shannon_entropy(p: &ProbabilityVector) -> f64 {
    p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| -x * x.ln())
        .sum()
}

/// `(1/(1−q)) ln Σ p_k^q`. Zero entries contribute nothing for `q > 0`.
pub fn renyi_entropy(p: &ProbabilityVector, q: f64) -> Result<f64> {
    if !q.is_finite() {
        return Err(Error::InvalidParam(format!("Renyi order {q}")));
    }
    if (q - 1.0).abs() < SHANNON_SWITCH {
        return Ok(shannon_entropy(p));
    }
    if q <= 0.0 && p.iter().any(|&x| x == 0.0) {
        return Err(Error::InvalidParam(format!(
            "Renyi order {q} <= 0 with a zero probability"
        )));
    }
    // ln Σ exp(q ln p_k), shifted by the largest exponent
    let logs: Vec<f64> = p.iter().filter(|&&x| x > 0.0).map(|&x| q * x.ln()).collect();
    let m = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lse = m + logs.iter().map(|l| (l - m).exp()).sum::<f64>().ln();
    Ok(lse / (1.0 - q))
}

/// Nats to bits.
pub fn to_bits(nats: f64) -> f64 {
    nats / std::f64::consts::LN_2
}

/// `f_Z⁻¹(Σ w_k ln(1/w_k))` with `w_k = f_X(p_k)`. The `w_k` must lie in
/// `(0, 1]` and sum to 1 within 1e-10.
pub fn nn_shannon_entropy(x_arith: &Arithmetic, z_arith: &Arithmetic, p: &[f64]) -> Result<f64> {
    if p.is_empty() {
        return Err(Error::InvalidParam("empty distribution".into()));
    }
    let w = p
        .iter()
        .map(|&pk| {
            let wk = x_arith.to_real(pk)?;
            if wk > 0.0 && wk <= 1.0 {
                Ok(wk)
            } else {
                Err(Error::domain("conjugate probability", wk))
            }
        })
        .collect::<Result<Vec<f64>>>()?;
    let sum: f64 = w.iter().sum();
    if (sum - 1.0).abs() > 1e-10 {
        return Err(Error::NormalizationError { sum });
    }
    let s: f64 = w.iter().map(|&wk| -wk * wk.ln()).sum();
    z_arith.embed(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, LN_2};

    fn pv(v: &[f64]) -> ProbabilityVector {
        ProbabilityVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn probability_vector_validation() {
        assert!(ProbabilityVector::new(vec![0.5, 0.5]).is_ok());
        assert!(matches!(
            ProbabilityVector::new(vec![0.5, 0.6]),
            Err(Error::NormalizationError { .. })
        ));
        assert!(matches!(
            ProbabilityVector::new(vec![1.5, -0.5]),
            Err(Error::DomainViolation { .. })
        ));
        assert!(ProbabilityVector::new(vec![]).is_err());
        let w = ProbabilityVector::from_weights(&[1.0, 3.0]).unwrap();
        assert_eq!(w.as_slice(), &[0.25, 0.75]);
    }

    #[test]
    fn kn_mean_examples() {
        let p = pv(&[0.2, 0.5, 0.3]);
        let a = [1.0, -2.0, 4.5];
        let lin: f64 = p.iter().zip(&a).map(|(p, a)| p * a).sum();
        assert!((kn_mean(&Generator::identity(), &p, &a).unwrap() - lin).abs() < 1e-15);
        // near q = 1 the mean departs from the linear one by (1−q)/2 · Var(a)
        let var: f64 = p.iter().zip(&a).map(|(p, a)| p * (a - lin).powi(2)).sum();
        for q in [1.0 - 1e-6, 1.0 + 1e-6, 1.0 - 1e-8] {
            let m = kn_mean(&Generator::renyi(q).unwrap(), &p, &a).unwrap();
            let predicted = 0.5 * (1.0 - q) * var;
            assert!((m - lin - predicted).abs() < 1e-10, "{q}: {m} vs {lin}");
        }
        let m = kn_mean(&Generator::renyi(1.0 - 1e-9).unwrap(), &p, &a).unwrap();
        assert!((m - lin).abs() < 1e-8);
        let m = kn_mean(&Generator::renyi(0.0).unwrap(), &pv(&[0.5, 0.5]), &[0.0, 1.0]).unwrap();
        assert!((m - ((1.0 + E) / 2.0).ln()).abs() < 1e-15);
        assert!((m - 0.620115).abs() < 1e-6);
    }

    #[test]
    fn kn_mean_out_of_range() {
        let err = kn_mean(&Generator::log(), &pv(&[0.5, 0.5]), &[-1.0, 2.0]).unwrap_err();
        assert!(matches!(err, Error::DomainViolation { .. }));
        let rq = Generator::renyi(2.0).unwrap();
        let err = kn_mean(&rq, &pv(&[0.5, 0.5]), &[-800.0, 0.0]).unwrap_err();
        assert!(matches!(err, Error::NonFinite(_) | Error::OutOfRange { .. }));
    }

    #[test]
    fn nd_probability_form() {
        let p = pv(&[0.1, 0.6, 0.3]);
        let a = [0.4, 2.0, -1.0];
        for f in [
            Generator::identity(),
            Generator::renyi(2.0).unwrap(),
            Generator::renyi(0.5).unwrap(),
            Generator::kaniadakis(0.7).unwrap(),
        ] {
            let direct = kn_mean(&f, &p, &a).unwrap();
            let nd = kn_mean_as_nd_probability(&f, &p, &a).unwrap();
            assert!((direct - nd).abs() < 1e-10, "{}: {direct} vs {nd}", f.label());
        }
        assert_eq!(nd_probabilities(&Generator::identity(), &p).unwrap(), p.to_vec());
        let primed = nd_probabilities(&Generator::renyi(2.0).unwrap(), &p).unwrap();
        for (pp, pk) in primed.iter().zip(p.iter()) {
            assert!((pp - (1.0 / pk).ln()).abs() < 1e-14);
        }
    }

    #[test]
    fn shannon_examples() {
        assert!((shannon_entropy(&pv(&[0.5, 0.5])) - LN_2).abs() < 1e-15);
        assert_eq!(shannon_entropy(&pv(&[1.0, 0.0])), 0.0);
        assert!((shannon_entropy(&pv(&[0.3, 0.7])) - 0.610864).abs() < 1e-6);
        assert!((to_bits(shannon_entropy(&pv(&[0.5, 0.5]))) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn renyi_examples() {
        let u = ProbabilityVector::uniform(4).unwrap();
        for q in [0.0, 0.5, 2.0, 5.0, 40.0] {
            assert!((renyi_entropy(&u, q).unwrap() - 4f64.ln()).abs() < 1e-12, "{q}");
        }
        for q in [0.5, 2.0] {
            assert_eq!(renyi_entropy(&pv(&[1.0, 0.0, 0.0]), q).unwrap(), 0.0);
        }
        let p = pv(&[0.3, 0.7]);
        assert_eq!(renyi_entropy(&p, 1.0 + 1e-7).unwrap(), shannon_entropy(&p));
        assert!(matches!(
            renyi_entropy(&pv(&[1.0, 0.0]), -1.0),
            Err(Error::InvalidParam(_))
        ));
        let s2 = renyi_entropy(&p, 2.0).unwrap();
        assert!((s2 + (0.09f64 + 0.49).ln()).abs() < 1e-15);
    }

    #[test]
    fn translation_examples() {
        let p = pv(&[0.25, 0.25, 0.5]);
        let a = [0.3, -1.2, 2.0];
        assert!(kn_translation_check(&Generator::renyi(0.5).unwrap(), &p, &a, 0.7));
        assert!(kn_translation_check(&Generator::identity(), &p, &a, -3.0));
        let cube = Generator::custom(
            "cube",
            crate::arithmetic::Interval::REAL,
            crate::arithmetic::Interval::REAL,
            |x| x * x * x,
            f64::cbrt,
        );
        assert!(!kn_translation_check(&cube, &pv(&[0.5, 0.5]), &[0.0, 1.0], 1.0));
    }

    #[test]
    fn nn_shannon_examples() {
        let id = Arithmetic::identity();
        let p = [0.2, 0.8];
        let s = nn_shannon_entropy(&id, &id, &p).unwrap();
        assert!((s - shannon_entropy(&pv(&p))).abs() < 1e-15);
        let half = [0.5f64.exp(), 0.5f64.exp()];
        let s = nn_shannon_entropy(&Arithmetic::log(), &id, &half).unwrap();
        assert!((s - LN_2).abs() < 1e-14);
        let s = nn_shannon_entropy(&Arithmetic::log(), &Arithmetic::log(), &half).unwrap();
        assert!((s - 2.0).abs() < 1e-14);
        assert!(matches!(
            nn_shannon_entropy(&id, &id, &[0.5, 0.6]),
            Err(Error::NormalizationError { .. })
        ));
    }
}
