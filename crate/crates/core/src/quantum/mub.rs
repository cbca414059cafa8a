use std::f64::consts::PI;

use num_complex::Complex64;

use super::QuantumDesign;
use crate::classical::is_prime;
use crate::numkit::{inner, ComplexMatrix, Tolerance, Vector};
use crate::{Error, Result};

/// `k` orthonormal bases of `C^d`, each a list of `d` unit vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct MubFamily {
    pub d: usize,
    pub bases: Vec<Vec<Vector>>,
}

impl MubFamily {
    pub fn new(d: usize, bases: Vec<Vec<Vector>>) -> Result<Self> {
        for (a, basis) in bases.iter().enumerate() {
            if basis.len() != d {
                return Err(Error::DimensionMismatch(format!(
                    "basis {a} has {} vectors, expected {d}",
                    basis.len()
                )));
            }
            if let Some(i) = basis.iter().position(|x| x.len() != d) {
                return Err(Error::DimensionMismatch(format!(
                    "vector {i} of basis {a} has length {}, expected {d}",
                    basis[i].len()
                )));
            }
        }
        Ok(Self { d, bases })
    }

    pub fn k(&self) -> usize {
        self.bases.len()
    }
}

/// The first `k` bases of the standard complete family in prime dimension `d`.
///
/// Basis 0 is the computational basis. For `d = 2` the others are the
/// eigenbases of σ_x and σ_y. For odd `d`, basis `t ∈ 1..=d` has vectors
/// `|ψ_j⟩_l = ω^{t·l² + j·l} / √d` with `ω = e^{2πi/d}`; `t = d` is the
/// Fourier basis.
pub fn mub_generate(d: usize, k: usize) -> Result<MubFamily> {
    if !is_prime(d as u64) {
        return Err(Error::InvalidArgument(format!("MUB dimension must be prime, got {d}")));
    }
    if k == 0 || k > d + 1 {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= d + 1 = {}, got {k}",
            d + 1
        )));
    }
    let zero = Complex64::new(0.0, 0.0);
    let computational: Vec<Vector> = (0..d)
        .map(|i| {
            let mut e = vec![zero; d];
            e[i] = Complex64::new(1.0, 0.0);
            e
        })
        .collect();
    let mut bases = vec![computational];

    let s = 1.0 / (d as f64).sqrt();
    if d == 2 {
        let x = vec![
            vec![Complex64::new(s, 0.0), Complex64::new(s, 0.0)],
            vec![Complex64::new(s, 0.0), Complex64::new(-s, 0.0)],
        ];
        let y = vec![
            vec![Complex64::new(s, 0.0), Complex64::new(0.0, s)],
            vec![Complex64::new(s, 0.0), Complex64::new(0.0, -s)],
        ];
        bases.push(x);
        bases.push(y);
    } else {
        for t in 1..=d {
            let basis = (0..d)
                .map(|j| {
                    (0..d)
                        .map(|l| {
                            let exponent = (t * l * l + j * l) % d;
                            Complex64::from_polar(s, 2.0 * PI * exponent as f64 / d as f64)
                        })
                        .collect()
                })
                .collect();
            bases.push(basis);
        }
    }
    bases.truncate(k);
    MubFamily::new(d, bases)
}

/// Outcome of a successful [`mub_verify`].
#[derive(Debug, Clone)]
pub struct MubVerification {
    /// The `d·k` rank-one projectors, basis-major.
    pub design: QuantumDesign,
    /// Largest deviation from the trace law over all projector pairs.
    pub trace_law_residual: f64,
    /// `max |Σ p − k·I|`.
    pub sum_residual: f64,
}

/// Checks orthonormality of each basis, the trace law
/// `Tr(p^a_i p^b_j) = (1/d)(1 − δ_ab) + δ_ij δ_ab` for every pair, and
/// `Σ_{a,i} p^a_i = k·I`.
pub fn mub_verify(family: &MubFamily, tol: Tolerance) -> Result<MubVerification> {
    let d = family.d;
    for (a, basis) in family.bases.iter().enumerate() {
        for i in 0..d {
            for j in i..d {
                let value = inner(&basis[i], &basis[j]);
                let expected = if i == j { 1.0 } else { 0.0 };
                if (value - Complex64::new(expected, 0.0)).norm() > tol.bound(1.0) {
                    return Err(Error::NotOrthonormal {
                        basis: a,
                        i,
                        j,
                        value: value.norm(),
                    });
                }
            }
        }
    }

    let labels: Vec<(usize, usize)> = (0..family.k()).flat_map(|a| (0..d).map(move |i| (a, i))).collect();
    let vectors: Vec<Vector> = family.bases.iter().flatten().cloned().collect();
    let design = QuantumDesign::from_unit_vectors(d, &vectors)?;
    let ps = design.projectors();

    let mut worst = 0.0f64;
    for (x, &(a, i)) in labels.iter().enumerate() {
        for (y, &(b, j)) in labels.iter().enumerate().skip(x) {
            let got = ps[x].trace_of_product(&ps[y])?;
            let expected = if a == b {
                if i == j {
                    1.0
                } else {
                    0.0
                }
            } else {
                1.0 / d as f64
            };
            let dev = (got - Complex64::new(expected, 0.0)).norm();
            if dev > tol.bound(expected) {
                return Err(Error::TraceLaw {
                    a,
                    i,
                    b,
                    j,
                    got: got.re,
                    expected,
                });
            }
            worst = worst.max(dev);
        }
    }

    let k = family.k() as f64;
    let sum_residual = design
        .projector_sum()
        .max_abs_diff(&ComplexMatrix::identity(d).scale(Complex64::new(k, 0.0)))?;
    if sum_residual > tol.bound(k) {
        return Err(Error::CheckFailed(format!(
            "projectors sum to k·I only within {sum_residual:e}"
        )));
    }
    Ok(MubVerification {
        design,
        trace_law_residual: worst,
        sum_residual,
    })
}
