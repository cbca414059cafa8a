use num_complex::Complex64;

use crate::{Error, Result};

/// Mixed absolute/relative comparison threshold.
///
/// Two scalars `x`, `y` are tol-equal iff
/// `|x − y| ≤ abs_eps + rel_eps · max(|x|, |y|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_eps: f64,
    pub rel_eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_eps: 1e-9,
            rel_eps: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(abs_eps: f64, rel_eps: f64) -> Result<Self> {
        if !(abs_eps.is_finite() && abs_eps >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "abs_eps must be a finite value >= 0, got {abs_eps}"
            )));
        }
        if !(rel_eps.is_finite() && rel_eps >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "rel_eps must be a finite value >= 0, got {rel_eps}"
            )));
        }
        Ok(Self { abs_eps, rel_eps })
    }

    /// Purely absolute tolerance.
    pub fn absolute(abs_eps: f64) -> Self {
        Self { abs_eps, rel_eps: 0.0 }
    }

    /// Allowed deviation for quantities of magnitude `scale`.
    #[inline]
    pub fn bound(&self, scale: f64) -> f64 {
        self.abs_eps + self.rel_eps * scale.abs()
    }

    #[inline]
    pub fn eq(&self, x: f64, y: f64) -> bool {
        (x - y).abs() <= self.bound(x.abs().max(y.abs()))
    }

    #[inline]
    pub fn eq_c(&self, x: Complex64, y: Complex64) -> bool {
        (x - y).norm() <= self.bound(x.norm().max(y.norm()))
    }

    /// Same shape, scaled by `factor` on both components.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            abs_eps: self.abs_eps * factor,
            rel_eps: self.rel_eps * factor,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_comparison() {
        let tol = Tolerance::new(1e-9, 1e-6).unwrap();
        assert!(tol.eq(1.0, 1.0 + 5e-7));
        assert!(!tol.eq(1.0, 1.0 + 5e-6));
        assert!(tol.eq(0.0, 5e-10));
        assert!(!tol.eq(0.0, 5e-9));
    }

    #[test]
    fn rejects_negative_and_nan() {
        assert!(Tolerance::new(-1.0, 0.0).is_err());
        assert!(Tolerance::new(0.0, f64::NAN).is_err());
        assert!(Tolerance::new(f64::INFINITY, 0.0).is_err());
    }
}
