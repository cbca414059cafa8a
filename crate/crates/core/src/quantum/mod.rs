//! Quantum designs: ordered families of orthogonal projectors on `C^b`.
//!
//! A family `{p_1, …, p_v}` is `r`-regular when every `Tr(p_i) = r` for a
//! natural `r`, and `k`-uniform when `Σ p_i = k·I` for a real `k`. Its degree
//! is the number of distinct values of `Tr(p_i p_j)` over `i ≠ j`; degree 1
//! is λ-balance.

mod mub;

pub use mub::{mub_generate, mub_verify, MubFamily, MubVerification};

use num_complex::Complex64;

use crate::classical::{ClassicalDesign, IdentityCheck};
use crate::numkit::{split_by_projector, ComplexMatrix, NatMatrix, Tolerance, Vector};
use crate::{Error, Result};

pub const EQ_BLOCKS_POINTS_Q: &str = "b·k = v·r";
pub const EQ_PAIRS_Q: &str = "λ(v−1) = r(k−1)";

/// Ordered family of `v` complex `b × b` matrices meant to be projectors.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumDesign {
    b: usize,
    projectors: Vec<ComplexMatrix>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectorVerdict {
    /// `max |p − p†|`.
    pub hermiticity_residual: f64,
    /// `max |p² − p|`.
    pub idempotency_residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Validation {
    pub projectors: Vec<ProjectorVerdict>,
    pub pass: bool,
}

impl Validation {
    pub fn first_failure(&self) -> Option<usize> {
        self.projectors.iter().position(|p| !p.pass)
    }
}

/// Parameters detected by [`QuantumDesign::classify`].
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumParams {
    pub r: Option<u64>,
    pub k: Option<f64>,
    /// `lambda_set.len()`.
    pub degree: usize,
    /// Distinct values of `Re Tr(p_i p_j)`, `i ≠ j`, ascending, after
    /// single-linkage clustering.
    pub lambda_set: Vec<f64>,
    pub commutative: bool,
}

impl QuantumParams {
    /// The single λ of a degree-1 design.
    pub fn lambda(&self) -> Option<f64> {
        (self.degree == 1).then(|| self.lambda_set[0])
    }
}

/// `Tr(p_i p_j)` over all unordered pairs `i < j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairTraces {
    pub values: Vec<((usize, usize), Complex64)>,
}

impl PairTraces {
    /// Pair with the largest `|Im Tr(p_i p_j)|`, and that value.
    pub fn max_imaginary(&self) -> Option<((usize, usize), f64)> {
        self.values
            .iter()
            .map(|&(ij, t)| (ij, t.im.abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
    }

    /// Pair with the smallest `Re Tr(p_i p_j)`, and that value.
    pub fn min_real(&self) -> Option<((usize, usize), f64)> {
        self.values
            .iter()
            .map(|&(ij, t)| (ij, t.re))
            .min_by(|a, b| a.1.total_cmp(&b.1))
    }
}

/// Single-linkage clustering of reals with gap threshold `10·tol`; returns
/// cluster means in ascending order.
pub fn cluster_values(values: &[f64], tol: Tolerance) -> Vec<f64> {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut clusters: Vec<Vec<f64>> = Vec::new();
    for x in sorted {
        match clusters.last_mut() {
            Some(c) if x - c.last().unwrap() <= 10.0 * tol.bound(x.abs().max(c.last().unwrap().abs())) => c.push(x),
            _ => clusters.push(vec![x]),
        }
    }
    clusters
        .into_iter()
        .map(|c| c.iter().sum::<f64>() / c.len() as f64)
        .collect()
}

impl QuantumDesign {
    pub fn new(b: usize, projectors: Vec<ComplexMatrix>) -> Result<Self> {
        if b == 0 {
            return Err(Error::InvalidArgument(
                "Hilbert space dimension must be at least 1".into(),
            ));
        }
        if projectors.is_empty() {
            return Err(Error::InvalidArgument(
                "a quantum design needs at least one projector".into(),
            ));
        }
        if let Some(i) = projectors.iter().position(|p| p.rows() != b || p.cols() != b) {
            return Err(Error::DimensionMismatch(format!(
                "projector {i} is {}x{}, expected {b}x{b}",
                projectors[i].rows(),
                projectors[i].cols()
            )));
        }
        Ok(Self { b, projectors })
    }

    /// Rank-one projectors `|ψ⟩⟨ψ|` onto the given unit vectors.
    pub fn from_unit_vectors(b: usize, vectors: &[Vector]) -> Result<Self> {
        Self::new(b, vectors.iter().map(|psi| ComplexMatrix::outer(psi, psi)).collect())
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn v(&self) -> usize {
        self.projectors.len()
    }

    pub fn projectors(&self) -> &[ComplexMatrix] {
        &self.projectors
    }

    /// Hermiticity and idempotency residual of every projector.
    pub fn validate(&self, tol: Tolerance) -> Result<Validation> {
        let projectors = self
            .projectors
            .iter()
            .map(|p| {
                let scale = p.max_abs();
                let hermiticity_residual = p.hermiticity_residual()?;
                let idempotency_residual = p.matmul(p)?.max_abs_diff(p)?;
                Ok(ProjectorVerdict {
                    hermiticity_residual,
                    idempotency_residual,
                    pass: hermiticity_residual <= tol.bound(scale) && idempotency_residual <= tol.bound(scale),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let pass = projectors.iter().all(|p| p.pass);
        Ok(Validation { projectors, pass })
    }

    pub fn pair_traces(&self) -> Result<PairTraces> {
        let v = self.v();
        let mut values = Vec::with_capacity(v * v.saturating_sub(1) / 2);
        for i in 0..v {
            for j in i + 1..v {
                values.push(((i, j), self.projectors[i].trace_of_product(&self.projectors[j])?));
            }
        }
        Ok(PairTraces { values })
    }

    /// First pair `(i, j)` with `‖p_i p_j − p_j p_i‖_max` above tolerance.
    pub fn first_noncommuting_pair(&self, tol: Tolerance) -> Result<Option<(usize, usize)>> {
        let v = self.v();
        for i in 0..v {
            for j in i + 1..v {
                let ab = self.projectors[i].matmul(&self.projectors[j])?;
                let ba = self.projectors[j].matmul(&self.projectors[i])?;
                if ab.max_abs_diff(&ba)? > tol.bound(ab.max_abs().max(ba.max_abs())) {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// `Σ p_i`.
    pub fn projector_sum(&self) -> ComplexMatrix {
        self.projectors
            .iter()
            .skip(1)
            .fold(self.projectors[0].clone(), |acc, p| acc.add(p).expect("shapes checked"))
    }

    /// `(k, max |Σ p_i − k·I|)` with `k = Re Tr(Σ p_i) / b`.
    pub fn uniformity_fit(&self) -> Result<(f64, f64)> {
        let sum = self.projector_sum();
        let k = sum.trace()?.re / self.b as f64;
        let residual = sum.max_abs_diff(&ComplexMatrix::identity(self.b).scale(Complex64::new(k, 0.0)))?;
        Ok((k, residual))
    }

    pub fn classify(&self, tol: Tolerance) -> Result<QuantumParams> {
        let traces = self
            .projectors
            .iter()
            .map(ComplexMatrix::trace)
            .collect::<Result<Vec<_>>>()?;
        let t0 = traces[0];
        let r = if traces.iter().all(|t| tol.eq_c(*t, t0)) && t0.im.abs() <= tol.bound(t0.re) {
            let rounded = t0.re.round();
            (rounded >= 0.0 && tol.eq(t0.re, rounded)).then_some(rounded as u64)
        } else {
            None
        };

        let (k_fit, k_residual) = self.uniformity_fit()?;
        let k = (k_residual <= tol.bound(k_fit)).then_some(k_fit);

        let pairs = self.pair_traces()?;
        let reals: Vec<f64> = pairs.values.iter().map(|(_, t)| t.re).collect();
        let lambda_set = cluster_values(&reals, tol);

        Ok(QuantumParams {
            r,
            k,
            degree: lambda_set.len(),
            lambda_set,
            commutative: self.first_noncommuting_pair(tol)?.is_none(),
        })
    }

    /// Recovers the classical block design of a commutative family.
    ///
    /// A common eigenbasis is built by splitting `C^b` with each projector in
    /// turn; every basis vector becomes one block, in refinement order, and
    /// `χ[i][j]` is the eigenvalue (0 or 1) of `p_i` on basis vector `j`.
    pub fn to_classical(&self, tol: Tolerance) -> Result<ClassicalDesign> {
        if let Some((i, j)) = self.first_noncommuting_pair(tol)? {
            return Err(Error::NotCommutative(i, j));
        }
        let b = self.b;
        let standard: Vec<Vector> = (0..b)
            .map(|i| {
                let mut e = vec![Complex64::new(0.0, 0.0); b];
                e[i] = Complex64::new(1.0, 0.0);
                e
            })
            .collect();
        let mut parts: Vec<Vec<Vector>> = vec![standard];
        for p in &self.projectors {
            let mut next = Vec::with_capacity(parts.len() * 2);
            for part in &parts {
                let split = split_by_projector(part, p, tol)?;
                if !split.image.is_empty() {
                    next.push(split.image);
                }
                if !split.kernel.is_empty() {
                    next.push(split.kernel);
                }
            }
            parts = next;
        }
        let basis: Vec<Vector> = parts.into_iter().flatten().collect();

        let mut data = Vec::with_capacity(self.v() * b);
        for (i, p) in self.projectors.iter().enumerate() {
            for u in &basis {
                let pu = p.mat_vec(u)?;
                let value = crate::numkit::inner(u, &pu).re;
                let bit = if tol.eq(value, 0.0) {
                    0
                } else if tol.eq(value, 1.0) {
                    1
                } else {
                    return Err(Error::NotBinaryEigenvalue { projector: i, value });
                };
                data.push(bit);
            }
        }
        ClassicalDesign::new(NatMatrix::new(self.v(), basis.len(), data)?)
    }

    /// `{p_i ⊗ q_j}` in lexicographic `(i, j)` order, on `C^{b₁b₂}`.
    pub fn tensor(&self, other: &QuantumDesign) -> QuantumDesign {
        let projectors = self
            .projectors
            .iter()
            .flat_map(|p| other.projectors.iter().map(move |q| p.kron(q)))
            .collect();
        QuantumDesign {
            b: self.b * other.b,
            projectors,
        }
    }

    /// Every projector replaced by `u p u†`.
    pub fn conjugate_by(&self, u: &ComplexMatrix) -> Result<QuantumDesign> {
        let projectors = self
            .projectors
            .iter()
            .map(|p| p.conjugate_by(u))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.b, projectors)
    }
}

/// Evaluates `b·k = v·r` and, for degree-1 designs, `λ(v−1) = r(k−1)` within `tol`.
pub fn check_identities_q(
    v: usize,
    b: usize,
    params: &QuantumParams,
    tol: Tolerance,
) -> Result<Vec<IdentityCheck<f64>>> {
    let k = params.k.ok_or(Error::MissingParameter("k"))?;
    let r = params.r.ok_or(Error::MissingParameter("r"))? as f64;
    let (v, b) = (v as f64, b as f64);
    let mut out = vec![approx(EQ_BLOCKS_POINTS_Q, b * k, v * r, tol)];
    if let Some(lambda) = params.lambda() {
        out.push(approx(EQ_PAIRS_Q, lambda * (v - 1.0), r * (k - 1.0), tol));
    }
    Ok(out)
}

fn approx(name: &'static str, lhs: f64, rhs: f64, tol: Tolerance) -> IdentityCheck<f64> {
    IdentityCheck {
        name,
        lhs,
        rhs,
        pass: tol.eq(lhs, rhs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::gen_projective_plane;
    use crate::numkit::orthonormalize;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pvm2() -> QuantumDesign {
        QuantumDesign::new(
            2,
            vec![ComplexMatrix::diag(&[1.0, 0.0]), ComplexMatrix::diag(&[0.0, 1.0])],
        )
        .unwrap()
    }

    fn fano_image() -> QuantumDesign {
        let fano = gen_projective_plane(2).unwrap();
        let projectors = (0..7)
            .map(|i| ComplexMatrix::diag(&fano.incidence().row(i).iter().map(|&x| x as f64).collect::<Vec<_>>()))
            .collect();
        QuantumDesign::new(7, projectors).unwrap()
    }

    /// A fixed unitary built by Gram–Schmidt from a deterministic pseudo-random
    /// matrix.
    fn scrambler(n: usize) -> ComplexMatrix {
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let cols: Vec<Vector> = (0..n).map(|_| (0..n).map(|_| c(next(), next())).collect()).collect();
        let q = orthonormalize(&cols, Tolerance::default()).unwrap();
        assert_eq!(q.len(), n);
        ComplexMatrix::from_columns(n, &q).unwrap()
    }

    #[test]
    fn validate_examples() {
        let tol = Tolerance::default();
        let id = QuantumDesign::new(3, vec![ComplexMatrix::identity(3)]).unwrap();
        assert!(id.validate(tol).unwrap().pass);
        assert!(pvm2().validate(tol).unwrap().pass);
        let nilpotent =
            QuantumDesign::new(2, vec![ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap()]).unwrap();
        let v = nilpotent.validate(tol).unwrap();
        assert!(!v.pass);
        assert_eq!(v.projectors[0].hermiticity_residual, 1.0);
        assert_eq!(v.first_failure(), Some(0));
    }

    #[test]
    fn shape_errors() {
        assert!(QuantumDesign::new(2, vec![ComplexMatrix::identity(3)]).is_err());
        assert!(QuantumDesign::new(2, vec![]).is_err());
    }

    #[test]
    fn classify_fano_image() {
        let p = fano_image().classify(Tolerance::default()).unwrap();
        assert_eq!(p.r, Some(3));
        assert!((p.k.unwrap() - 3.0).abs() < 1e-12);
        assert_eq!(p.degree, 1);
        assert!((p.lambda_set[0] - 1.0).abs() < 1e-12);
        assert!(p.commutative);
    }

    #[test]
    fn classify_pvm() {
        let p = pvm2().classify(Tolerance::default()).unwrap();
        assert_eq!((p.r, p.k, p.degree, p.commutative), (Some(1), Some(1.0), 1, true));
        assert_eq!(p.lambda_set, vec![0.0]);
    }

    #[test]
    fn single_projector_has_degree_zero() {
        let p = QuantumDesign::new(2, vec![ComplexMatrix::identity(2)])
            .unwrap()
            .classify(Tolerance::default())
            .unwrap();
        assert_eq!(p.degree, 0);
        assert!(p.lambda_set.is_empty());
        assert_eq!(p.lambda(), None);
    }

    #[test]
    fn non_integer_trace_has_no_r() {
        let d = QuantumDesign::new(1, vec![ComplexMatrix::diag(&[0.5])]).unwrap();
        assert_eq!(d.classify(Tolerance::default()).unwrap().r, None);
    }

    #[test]
    fn identities_q() {
        let tol = Tolerance::default();
        let fano = fano_image().classify(tol).unwrap();
        let checks = check_identities_q(7, 7, &fano, tol).unwrap();
        assert_eq!(checks.len(), 2);
        assert!(checks.iter().all(|c| c.pass));

        let real_lambda = QuantumParams {
            r: Some(1),
            k: Some(2.0),
            degree: 1,
            lambda_set: vec![1.0 / 3.0],
            commutative: false,
        };
        let checks = check_identities_q(4, 2, &real_lambda, tol).unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");

        let missing = QuantumParams { r: None, ..real_lambda };
        assert_eq!(
            check_identities_q(4, 2, &missing, tol),
            Err(Error::MissingParameter("r"))
        );
    }

    #[test]
    fn clustering() {
        let tol = Tolerance::default();
        assert_eq!(cluster_values(&[0.5, 0.0, 0.5 + 1e-12, 1e-13], tol).len(), 2);
        assert_eq!(cluster_values(&[0.0, 1e-6], tol).len(), 2);
        assert!(cluster_values(&[], tol).is_empty());
    }

    #[test]
    fn diagonal_round_trip_is_exact() {
        let tol = Tolerance::default();
        let fano = gen_projective_plane(2).unwrap();
        let back = fano_image().to_classical(tol).unwrap();
        assert!(back.eq_up_to_column_permutation(&fano));
        assert_eq!(pvm2().to_classical(tol).unwrap().incidence(), &NatMatrix::identity(2));
    }

    #[test]
    fn round_trip_survives_unitary_conjugation() {
        let tol = Tolerance::default();
        let fano = gen_projective_plane(2).unwrap();
        let rotated = fano_image().conjugate_by(&scrambler(7)).unwrap();
        assert!(rotated.validate(tol).unwrap().pass);
        let back = rotated.to_classical(tol).unwrap();
        assert!(back.eq_up_to_column_permutation(&fano));
    }

    #[test]
    fn multidimensional_eigenspaces() {
        // p = diag(1,1,0) and q = diag(1,0,0): the common eigenspaces are one
        // dimensional, but p alone has a 2-dimensional image.
        let tol = Tolerance::default();
        let d = QuantumDesign::new(3, vec![ComplexMatrix::diag(&[1.0, 1.0, 0.0])]).unwrap();
        let back = d.to_classical(tol).unwrap();
        assert_eq!(back.incidence().to_rows(), vec![vec![1, 1, 0]]);
    }

    #[test]
    fn non_commuting_rejected() {
        let s = 0.5;
        let d = QuantumDesign::new(
            2,
            vec![
                ComplexMatrix::diag(&[1.0, 0.0]),
                ComplexMatrix::from_real(2, 2, &[s, s, s, s]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(d.to_classical(Tolerance::default()), Err(Error::NotCommutative(0, 1)));
        assert!(!d.classify(Tolerance::default()).unwrap().commutative);
    }

    #[test]
    fn non_binary_eigenvalue_rejected() {
        let d = QuantumDesign::new(2, vec![ComplexMatrix::diag(&[0.5, 0.0])]).unwrap();
        assert!(d.to_classical(Tolerance::default()).is_err());
    }

    #[test]
    fn tensor_parameters() {
        let tol = Tolerance::default();
        let t = pvm2().tensor(&pvm2());
        assert_eq!((t.v(), t.b()), (4, 4));
        let p = t.classify(tol).unwrap();
        assert_eq!((p.r, p.k), (Some(1), Some(1.0)));

        let p = fano_image().tensor(&pvm2()).classify(tol).unwrap();
        assert_eq!(p.r, Some(3));
        assert!((p.k.unwrap() - 3.0).abs() < 1e-12);

        let p = fano_image().tensor(&fano_image()).classify(tol).unwrap();
        assert_eq!(p.r, Some(9));
        // Tr((p⊗q)(p'⊗q')) = Tr(pp')·Tr(qq') takes the values 1·1 and 1·3 off
        // the diagonal; 9 only occurs for identical factors.
        assert_eq!(p.degree, 2);
        assert!((p.lambda_set[0] - 1.0).abs() < 1e-9);
        assert!((p.lambda_set[1] - 3.0).abs() < 1e-9);
    }
}
