use std::fmt;

/// A real interval with independently open or closed ends. Infinite ends are
/// always open.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub const REAL: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
        lo_closed: false,
        hi_closed: false,
    };

    pub const fn open(lo: f64, hi: f64) -> Self {
        Interval {
            lo,
            hi,
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub const fn closed(lo: f64, hi: f64) -> Self {
        Interval {
            lo,
            hi,
            lo_closed: true,
            hi_closed: true,
        }
    }

    /// (0, ∞)
    pub const fn positive() -> Self {
        Self::open(0.0, f64::INFINITY)
    }

    /// (−∞, 0)
    pub const fn negative() -> Self {
        Self::open(f64::NEG_INFINITY, 0.0)
    }

    pub fn contains(&self, x: f64) -> bool {
        if x.is_nan() || x.is_infinite() {
            return false;
        }
        let above = if self.lo_closed { x >= self.lo } else { x > self.lo };
        let below = if self.hi_closed { x <= self.hi } else { x < self.hi };
        above && below
    }

    pub fn is_real_line(&self) -> bool {
        self.lo == f64::NEG_INFINITY && self.hi == f64::INFINITY
    }

    /// `n` sample points strictly inside the interval, used by invariant
    /// checks. Unbounded ends are truncated: the real line to `[-10, 10]`,
    /// half-lines to a log-spaced window of six decades.
    pub fn sample_grid(&self, n: usize) -> Vec<f64> {
        let n = n.max(2);
        let frac = |i: usize| (i as f64 + 0.5) / n as f64;
        match (self.lo.is_finite(), self.hi.is_finite()) {
            (false, false) => (0..n).map(|i| -10.0 + 20.0 * frac(i)).collect(),
            (true, true) => (0..n)
                .map(|i| self.lo + (self.hi - self.lo) * frac(i))
                .collect(),
            (true, false) => (0..n)
                .map(|i| self.lo + 10f64.powf(-3.0 + 6.0 * frac(i)))
                .collect(),
            (false, true) => (0..n)
                .map(|i| self.hi - 10f64.powf(3.0 - 6.0 * frac(i)))
                .collect(),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{}, {}{r}", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        let p = Interval::positive();
        assert!(p.contains(1e-300));
        assert!(!p.contains(0.0));
        assert!(!p.contains(f64::NAN));
        assert!(!Interval::REAL.contains(f64::INFINITY));
        let c = Interval::closed(0.0, 1.0);
        assert!(c.contains(0.0) && c.contains(1.0) && !c.contains(1.0 + 1e-15));
    }

    #[test]
    fn grids_stay_inside() {
        for iv in [
            Interval::REAL,
            Interval::positive(),
            Interval::negative(),
            Interval::open(-1.0, 2.0),
        ] {
            let g = iv.sample_grid(1000);
            assert_eq!(g.len(), 1000);
            assert!(g.iter().all(|&x| iv.contains(x)), "{iv}");
            assert!(g.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
