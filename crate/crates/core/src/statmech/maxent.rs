//! Maximum entropy at fixed mean energy when probabilities live in an
//! arithmetic `X` and energies in an arithmetic `𝔼`.
//!
//! In conjugate coordinates `w_k = f_X(p_k)`, `e_k = f_E(E_k)` the objective
//!
//! ```text
//! F(w) = Σ w_k ln(1/w_k) + α (Σ w_k − 1) − β Σ w_k e_k
//! ```
//!
//! is the ordinary one, so `w_k = C e^{−β e_k}` with `C = 1/Σ e^{−β e_k}`,
//! `p_k = f_X⁻¹(w_k)`, and stationarity gives `α = 1 + ln C`.

use serde::Serialize;

use crate::arithmetic::Arithmetic;
use crate::error::{Error, Result};

use super::ProbabilityVector;

/// Energies `E_k` in the arithmetic `𝔼`.
#[derive(Debug, Clone)]
pub struct EnergySpectrum {
    energies: Vec<f64>,
    arith: Arithmetic,
}

impl EnergySpectrum {
    pub fn new(energies: Vec<f64>, arith: Arithmetic) -> Result<Self> {
        if energies.is_empty() {
            return Err(Error::InvalidParam("empty energy spectrum".into()));
        }
        for &e in &energies {
            if !e.is_finite() {
                return Err(Error::InvalidParam(format!("energy {e}")));
            }
            arith.to_real(e)?;
        }
        Ok(EnergySpectrum { energies, arith })
    }

    /// Energies in the ordinary arithmetic.
    pub fn plain(energies: Vec<f64>) -> Result<Self> {
        Self::new(energies, Arithmetic::identity())
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn arith(&self) -> &Arithmetic {
        &self.arith
    }

    /// `f_E(E_k)`.
    pub fn conjugate(&self) -> Vec<f64> {
        self.energies
            .iter()
            .map(|&e| self.arith.generator().forward(e))
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MaxEntSolution {
    /// `p_k` as elements of `X`.
    pub p: Vec<f64>,
    /// `f_X(p_k)`, an ordinary probability vector.
    pub weights: ProbabilityVector,
    /// Normalization `C`.
    pub c: f64,
    /// `ln C`, finite even when `C` overflows.
    pub ln_c: f64,
    pub beta: f64,
    /// Recovered multiplier of the normalization constraint.
    pub alpha: f64,
    /// Conjugate energies `f_E(E_k)`.
    pub conj_energies: Vec<f64>,
}

impl MaxEntSolution {
    /// `max_k |−ln w_k − 1 + α − β e_k|`, the gradient of `F` at the solution.
    pub fn stationarity_residual(&self) -> f64 {
        self.weights
            .iter()
            .zip(&self.conj_energies)
            .map(|(&w, &e)| (-w.ln() - 1.0 + self.alpha - self.beta * e).abs())
            .fold(0.0, f64::max)
    }

    /// `F(w)` with this solution's `α` and `β`.
    pub fn objective(&self, w: &[f64]) -> f64 {
        free_energy_bracket(w, &self.conj_energies, self.alpha, self.beta)
    }
}

/// `Σ w_k ln(1/w_k) + α(Σ w_k − 1) − β Σ w_k e_k`, with `0 ln(1/0) = 0`.
pub fn free_energy_bracket(w: &[f64], e: &[f64], alpha: f64, beta: f64) -> f64 {
    let mut entropy = 0.0;
    let mut total = 0.0;
    let mut energy = 0.0;
    for (&wk, &ek) in w.iter().zip(e) {
        if wk > 0.0 {
            entropy -= wk * wk.ln();
        }
        total += wk;
        energy += wk * ek;
    }
    entropy + alpha * (total - 1.0) - beta * energy
}

/// Closed-form maximizer `p_k = f_X⁻¹(C e^{−β f_E(E_k)})`.
pub fn maxent_solve(x_arith: &Arithmetic, spectrum: &EnergySpectrum, beta: f64) -> Result<MaxEntSolution> {
    if !beta.is_finite() {
        return Err(Error::InvalidParam(format!("beta {beta}")));
    }
    let e = spectrum.conjugate();
    let exps: Vec<f64> = e.iter().map(|&ek| -beta * ek).collect();
    let m = exps.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let z_shifted: f64 = exps.iter().map(|x| (x - m).exp()).sum();
    let ln_c = -(m + z_shifted.ln());
    let w: Vec<f64> = exps.iter().map(|x| (x - m).exp() / z_shifted).collect();
    let p = w
        .iter()
        .map(|&wk| x_arith.embed(wk))
        .collect::<Result<Vec<f64>>>()?;
    let weights = ProbabilityVector::new(w)?;
    Ok(MaxEntSolution {
        p,
        weights,
        c: ln_c.exp(),
        ln_c,
        beta,
        alpha: 1.0 + ln_c,
        conj_energies: e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gibbs_two_level() {
        let spec = EnergySpectrum::plain(vec![0.0, 1.0]).unwrap();
        let sol = maxent_solve(&Arithmetic::identity(), &spec, 1.0).unwrap();
        let z = 1.0 + (-1f64).exp();
        assert!((sol.p[0] - 1.0 / z).abs() < 1e-15);
        assert!((sol.p[1] - (-1f64).exp() / z).abs() < 1e-15);
        assert!((sol.p[0] - 0.731059).abs() < 1e-6);
        assert!((sol.c - 1.0 / z).abs() < 1e-15);
        assert!(sol.stationarity_residual() < 1e-12);
    }

    #[test]
    fn infinite_temperature_is_uniform() {
        let spec = EnergySpectrum::plain(vec![0.3, -2.0, 7.0, 1.0]).unwrap();
        let sol = maxent_solve(&Arithmetic::log(), &spec, 0.0).unwrap();
        for &w in sol.weights.iter() {
            assert!((w - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn log_probabilities() {
        let spec = EnergySpectrum::plain(vec![0.0, 1.0]).unwrap();
        let plain = maxent_solve(&Arithmetic::identity(), &spec, 1.0).unwrap();
        let sol = maxent_solve(&Arithmetic::log(), &spec, 1.0).unwrap();
        for (pk, gk) in sol.p.iter().zip(&plain.p) {
            assert!((pk - gk.exp()).abs() < 1e-14);
        }
    }

    #[test]
    fn energies_in_another_arithmetic() {
        let spec = EnergySpectrum::new(vec![1.0, std::f64::consts::E], Arithmetic::log()).unwrap();
        assert_eq!(spec.conjugate(), vec![0.0, 1.0]);
        assert!(EnergySpectrum::new(vec![-1.0], Arithmetic::log()).is_err());
        assert!(EnergySpectrum::plain(vec![]).is_err());
    }

    #[test]
    fn out_of_range_weights() {
        // weights in (0, 1) have no preimage under a generator onto (−∞, 0)
        let neg = Arithmetic::new(crate::arithmetic::Generator::custom(
            "neg",
            crate::arithmetic::Interval::REAL,
            crate::arithmetic::Interval::negative(),
            |x| -x.exp(),
            |r| (-r).ln(),
        ));
        let spec = EnergySpectrum::plain(vec![0.0, 1.0]).unwrap();
        assert!(matches!(
            maxent_solve(&neg, &spec, 1.0),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn large_beta_stays_finite() {
        let spec = EnergySpectrum::plain(vec![0.0, 1.0, 2.0]).unwrap();
        let sol = maxent_solve(&Arithmetic::identity(), &spec, 800.0).unwrap();
        assert!(sol.ln_c.is_finite());
        assert!((sol.weights[0] - 1.0).abs() < 1e-15);
    }
}
