//! Linear maps between concrete algebras, complete positivity, and the
//! functor from block designs to diagonal projector designs.
//!
//! A [`CpMap`] stores the matrix of a map on coordinates. The commutative
//! algebra `C^n` has coordinates in `C^n`; the matrix algebra `M_n` has
//! `n²` coordinates given by row-major vectorization, `vec(X)[i·n + j] =
//! X[i][j]`. Whenever a Choi matrix is needed, `C^n` is embedded as the
//! diagonal matrices in `M_n`.
//!
//! Choi matrices use the index order (input ⊗ output):
//! `C = Σ_ij E_ij ⊗ f(E_ij)`.

use num_complex::Complex64;

use crate::classical::{verify_hom, ClassicalDesign, HomPair};
use crate::numkit::{hermitian_eigenvalues, min_eigenvalue_hermitian, ComplexMatrix, Tolerance, Vector};
use crate::quantum::QuantumDesign;
use crate::{Error, Result};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// A concrete finite-dimensional algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algebra {
    /// `C^n` with pointwise multiplication.
    Commutative(usize),
    /// The full matrix algebra `M_n`.
    Matrix(usize),
}

impl Algebra {
    /// `n` for both `C^n` and `M_n`.
    pub fn size(&self) -> usize {
        match *self {
            Algebra::Commutative(n) | Algebra::Matrix(n) => n,
        }
    }

    /// Length of a coordinate vector.
    pub fn coord_dim(&self) -> usize {
        match *self {
            Algebra::Commutative(n) => n,
            Algebra::Matrix(n) => n * n,
        }
    }

    /// Coordinates of the unit: all ones for `C^n`, `vec(I_n)` for `M_n`.
    pub fn unit(&self) -> Vector {
        match *self {
            Algebra::Commutative(n) => vec![ONE; n],
            Algebra::Matrix(n) => ComplexMatrix::identity(n).vectorize(),
        }
    }

    /// Element with coordinates `x`, as an `n × n` matrix.
    fn as_matrix(&self, x: &[Complex64]) -> ComplexMatrix {
        match *self {
            Algebra::Commutative(n) => {
                let mut m = ComplexMatrix::zeros(n, n);
                for (i, z) in x.iter().enumerate() {
                    m.set(i, i, *z);
                }
                m
            }
            Algebra::Matrix(n) => ComplexMatrix::unvectorize(x, n).expect("coordinate length checked"),
        }
    }
}

/// How the stored matrix acts. Only the superoperator reading (the matrix
/// multiplies coordinate vectors) is used for stored maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    Superoperator,
}

/// A linear map `in_alg → out_alg` given by its coordinate matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CpMap {
    in_alg: Algebra,
    out_alg: Algebra,
    m: ComplexMatrix,
    convention: Convention,
}

impl CpMap {
    pub fn new(in_alg: Algebra, out_alg: Algebra, m: ComplexMatrix) -> Result<Self> {
        if m.rows() != out_alg.coord_dim() || m.cols() != in_alg.coord_dim() {
            return Err(Error::DimensionMismatch(format!(
                "{in_alg:?} → {out_alg:?} needs a {}x{} matrix, got {}x{}",
                out_alg.coord_dim(),
                in_alg.coord_dim(),
                m.rows(),
                m.cols()
            )));
        }
        Ok(Self {
            in_alg,
            out_alg,
            m,
            convention: Convention::Superoperator,
        })
    }

    /// The map `X ↦ f(X)` on `M_n → M_m`, tabulated on matrix units.
    pub fn from_fn(n: usize, m: usize, f: impl Fn(&ComplexMatrix) -> ComplexMatrix) -> Result<Self> {
        let mut columns = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut e = ComplexMatrix::zeros(n, n);
                e.set(i, j, ONE);
                let image = f(&e);
                if image.rows() != m || image.cols() != m {
                    return Err(Error::DimensionMismatch(format!(
                        "map returned {}x{}, expected {m}x{m}",
                        image.rows(),
                        image.cols()
                    )));
                }
                columns.push(image.vectorize());
            }
        }
        Self::new(
            Algebra::Matrix(n),
            Algebra::Matrix(m),
            ComplexMatrix::from_columns(m * m, &columns)?,
        )
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Algebra::Matrix(n), Algebra::Matrix(n), ComplexMatrix::identity(n * n)).expect("square")
    }

    pub fn transpose_map(n: usize) -> Self {
        Self::from_fn(n, n, |x| x.transpose()).expect("square")
    }

    /// `ρ ↦ Tr(ρ)·I/n`.
    pub fn depolarizing(n: usize) -> Self {
        Self::from_fn(n, n, |x| {
            let t = x.trace().expect("square");
            ComplexMatrix::identity(n).scale(t / n as f64)
        })
        .expect("square")
    }

    /// `ρ ↦ u ρ u†`.
    pub fn unitary_channel(u: &ComplexMatrix) -> Result<Self> {
        if !u.is_square() {
            return Err(Error::NotSquare {
                rows: u.rows(),
                cols: u.cols(),
            });
        }
        Self::from_fn(u.rows(), u.rows(), |x| x.conjugate_by(u).expect("square"))
    }

    pub fn in_alg(&self) -> Algebra {
        self.in_alg
    }

    pub fn out_alg(&self) -> Algebra {
        self.out_alg
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.m
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Hilbert-space adjoint: `out_alg → in_alg` with matrix `m†`.
    pub fn adjoint(&self) -> CpMap {
        Self {
            in_alg: self.out_alg,
            out_alg: self.in_alg,
            m: self.m.adjoint(),
            convention: self.convention,
        }
    }

    /// `f(E_ij)` as an output-side matrix. For a commutative input only the
    /// diagonal units are nonzero.
    pub fn image_of_unit(&self, i: usize, j: usize) -> ComplexMatrix {
        let n_out = self.out_alg.size();
        let column = match self.in_alg {
            Algebra::Commutative(_) if i != j => return ComplexMatrix::zeros(n_out, n_out),
            Algebra::Commutative(_) => i,
            Algebra::Matrix(n) => i * n + j,
        };
        self.out_alg.as_matrix(&self.m.column(column))
    }

    /// Reads the stored matrix as a Choi matrix instead and returns the
    /// superoperator it corresponds to. Only defined for `M_n → M_m`.
    pub fn choi_reading(&self) -> Option<CpMap> {
        let (Algebra::Matrix(n), Algebra::Matrix(m)) = (self.in_alg, self.out_alg) else {
            return None;
        };
        if n * m != self.m.rows() || self.m.rows() != self.m.cols() {
            return None;
        }
        let mut s = ComplexMatrix::zeros(m * m, n * n);
        for i in 0..n {
            for j in 0..n {
                for a in 0..m {
                    for b in 0..m {
                        s.set(a * m + b, i * n + j, self.m.get(i * m + a, j * m + b));
                    }
                }
            }
        }
        Some(Self {
            in_alg: self.in_alg,
            out_alg: self.out_alg,
            m: s,
            convention: self.convention,
        })
    }
}

/// `C = Σ_ij E_ij ⊗ f(E_ij)`, index order (input ⊗ output).
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix {
    pub m: ComplexMatrix,
    pub n_in: usize,
    pub n_out: usize,
}

impl ChoiMatrix {
    /// `Tr_out C`, an `n_in × n_in` matrix.
    pub fn partial_trace_output(&self) -> ComplexMatrix {
        let (n, m) = (self.n_in, self.n_out);
        let mut out = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, (0..m).map(|a| self.m.get(i * m + a, j * m + a)).sum());
            }
        }
        out
    }
}

pub fn choi(f: &CpMap) -> ChoiMatrix {
    let (n, m) = (f.in_alg.size(), f.out_alg.size());
    let mut c = ComplexMatrix::zeros(n * m, n * m);
    for i in 0..n {
        for j in 0..n {
            let image = f.image_of_unit(i, j);
            for a in 0..m {
                for b in 0..m {
                    c.set(i * m + a, j * m + b, image.get(a, b));
                }
            }
        }
    }
    ChoiMatrix {
        m: c,
        n_in: n,
        n_out: m,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CpVerdict {
    pub completely_positive: bool,
    /// Smallest eigenvalue of the Choi matrix.
    pub min_eigenvalue: f64,
}

/// Complete positivity via positive semidefiniteness of the Choi matrix.
///
/// For a commutative input the Choi matrix is block diagonal with blocks
/// `f(E_ii)`, and the blocks are checked one at a time.
pub fn is_cp(f: &CpMap, tol: Tolerance) -> Result<CpVerdict> {
    let (min_eigenvalue, scale) = match f.in_alg {
        Algebra::Commutative(n) => {
            let mut worst = f64::INFINITY;
            let mut scale = 0.0f64;
            for i in 0..n {
                let block = f.image_of_unit(i, i);
                scale = scale.max(block.max_abs());
                worst = worst.min(min_eigenvalue_hermitian(&block, tol)?);
            }
            (worst, scale)
        }
        Algebra::Matrix(_) => {
            let c = choi(f).m;
            (min_eigenvalue_hermitian(&c, tol)?, c.max_abs())
        }
    };
    Ok(CpVerdict {
        completely_positive: min_eigenvalue >= -tol.bound(scale),
        min_eigenvalue,
    })
}

/// Full Choi spectrum, ascending.
pub fn choi_spectrum(f: &CpMap, tol: Tolerance) -> Result<Vec<f64>> {
    hermitian_eigenvalues(&choi(f).m, tol)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TpVerdict {
    pub trace_preserving: bool,
    /// `max |Tr_out C − I|`.
    pub residual: f64,
}

/// Trace preservation: `Tr f(E_ij) = δ_ij` for all matrix units, i.e. the
/// output partial trace of the Choi matrix is the identity.
pub fn is_trace_preserving(f: &CpMap, tol: Tolerance) -> Result<TpVerdict> {
    let n = f.in_alg.size();
    let mut residual = 0.0f64;
    for i in 0..n {
        let js: Vec<usize> = match f.in_alg {
            Algebra::Commutative(_) => vec![i],
            Algebra::Matrix(_) => (0..n).collect(),
        };
        for j in js {
            let t = f.image_of_unit(i, j).trace()?;
            let expected = if i == j { ONE } else { ZERO };
            residual = residual.max((t - expected).norm());
        }
    }
    Ok(TpVerdict {
        trace_preserving: residual <= tol.bound(1.0),
        residual,
    })
}

/// `χ` as a map `C^b → C^v`.
pub fn classical_to_cp(d: &ClassicalDesign) -> CpMap {
    CpMap::new(
        Algebra::Commutative(d.b()),
        Algebra::Commutative(d.v()),
        ComplexMatrix::from_nat(d.incidence()),
    )
    .expect("shape follows the design")
}

/// `|i⟩ ↦ p_i` as a map `C^v → M_b`; column `i` is `vec(p_i)`.
pub fn quantum_design_to_cp(qd: &QuantumDesign) -> CpMap {
    let columns: Vec<Vector> = qd.projectors().iter().map(ComplexMatrix::vectorize).collect();
    let m = ComplexMatrix::from_columns(qd.b() * qd.b(), &columns).expect("projectors are b x b");
    CpMap::new(Algebra::Commutative(qd.v()), Algebra::Matrix(qd.b()), m).expect("shape follows the design")
}

/// Comultiplication `Δ: C^b → C^b ⊗ C^b`, `e_j ↦ e_j ⊗ e_j`.
pub fn comultiplication(b: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(b * b, b);
    for j in 0..b {
        m.set(j * b + j, j, ONE);
    }
    m
}

/// Multiplication `μ: C^b ⊗ C^b → C^b`, `e_i ⊗ e_j ↦ δ_ij e_i`.
pub fn multiplication(b: usize) -> ComplexMatrix {
    comultiplication(b).adjoint()
}

/// `χ ∘ μ: C^b ⊗ C^b → C^v`, the block design composed with the Cayley
/// embedding of `C^b`. Its adjoint sends `|i⟩` to `vec(diag(χ[i]))`.
pub fn cayley_map(d: &ClassicalDesign) -> CpMap {
    let chi = ComplexMatrix::from_nat(d.incidence());
    let m = chi.matmul(&multiplication(d.b())).expect("inner dimension b");
    CpMap::new(Algebra::Matrix(d.b()), Algebra::Commutative(d.v()), m).expect("shape follows the design")
}

/// Sends a 0/1 block design to the commutative quantum design of diagonal
/// projectors `p_i = diag(χ[i])` on `C^b`.
///
/// Non-0/1 designs are refused rather than thresholded: thresholding changes
/// the parameters.
pub fn functor_q(d: &ClassicalDesign) -> Result<QuantumDesign> {
    if !d.is_zero_one() {
        let chi = d.incidence();
        let (row, col) = (0..d.v())
            .flat_map(|i| (0..d.b()).map(move |j| (i, j)))
            .find(|&(i, j)| chi.get(i, j) > 1)
            .expect("some entry exceeds 1");
        return Err(Error::NotZeroOne {
            row,
            col,
            value: chi.get(row, col),
        });
    }
    let params = d.classify()?;
    if !params.is_block_design() {
        let missing: Vec<&str> = [
            ("k", params.k.is_none()),
            ("r", params.r.is_none()),
            ("λ", params.lambda.is_none()),
        ]
        .into_iter()
        .filter_map(|(n, m)| m.then_some(n))
        .collect();
        return Err(Error::NotBlockDesign(format!("missing {}", missing.join(", "))));
    }
    let adjoint = cayley_map(d).adjoint();
    let b = d.b();
    let projectors = (0..d.v())
        .map(|i| ComplexMatrix::unvectorize(&adjoint.matrix().column(i), b))
        .collect::<Result<Vec<_>>>()?;
    QuantumDesign::new(b, projectors)
}

/// Residuals of the squares a design homomorphism lifts to under
/// [`functor_q`]. All entries are exact 0/1 arithmetic in floating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomLift {
    /// `‖F_v χ − χ′ F_b‖`.
    pub base: f64,
    /// `‖(F_b ⊗ F_b) Δ_b − Δ_b′ F_b‖`.
    pub comultiplication: f64,
    /// `‖F_v (χ μ_b) Δ_b − (χ′ μ_b′)(F_b ⊗ F_b) Δ_b‖`.
    pub outer: f64,
    /// `‖μ_b′ (F_b ⊗ F_b) − F_b μ_b‖`; zero exactly when `f_b` is injective.
    pub multiplication: f64,
}

impl HomLift {
    /// The three required squares commute within `tol`.
    pub fn commutes(&self, tol: Tolerance) -> bool {
        [self.base, self.comultiplication, self.outer]
            .iter()
            .all(|&r| r <= tol.bound(1.0))
    }
}

/// Lifts a verified homomorphism between block designs through [`functor_q`]
/// and measures the lifted squares.
pub fn functor_q_on_hom(src: &ClassicalDesign, dst: &ClassicalDesign, h: &HomPair) -> Result<HomLift> {
    let check = verify_hom(src, dst, h)?;
    if let Some(cell) = check.counterexample {
        return Err(Error::HomNotCommuting {
            row: cell.point,
            col: cell.block,
            lhs: cell.lhs,
            rhs: cell.rhs,
        });
    }
    functor_q(src)?;
    functor_q(dst)?;

    let fv = ComplexMatrix::from_nat(&h.point_matrix());
    let fb = ComplexMatrix::from_nat(&h.block_matrix());
    let fbb = fb.kron(&fb);
    let chi = ComplexMatrix::from_nat(src.incidence());
    let chi2 = ComplexMatrix::from_nat(dst.incidence());
    let (b, b2) = (src.b(), dst.b());
    let delta = comultiplication(b);
    let delta2 = comultiplication(b2);

    let base = fv.matmul(&chi)?.max_abs_diff(&chi2.matmul(&fb)?)?;
    let comultiplication_res = fbb.matmul(&delta)?.max_abs_diff(&delta2.matmul(&fb)?)?;
    let left = fv.matmul(cayley_map(src).matrix())?.matmul(&delta)?;
    let right = cayley_map(dst).matrix().matmul(&fbb)?.matmul(&delta)?;
    let outer = left.max_abs_diff(&right)?;
    let multiplication_res = multiplication(b2)
        .matmul(&fbb)?
        .max_abs_diff(&fb.matmul(&multiplication(b))?)?;
    Ok(HomLift {
        base,
        comultiplication: comultiplication_res,
        outer,
        multiplication: multiplication_res,
    })
}

/// Uniformity, regularity and balance of a map read as a design.
///
/// With units `1_in`, `1_out` of the two algebras:
/// uniformity is `1_out† · m = k · 1_in†`, regularity is `m · 1_in = r · 1_out`,
/// and balance is `m m† = λ(1_out 1_out† − I) + r·I`. The λ residual is the
/// smallest achievable max-entry deviation over real λ; it is reported, not
/// asserted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CpDesignReport {
    pub k_fit: f64,
    pub k_residual: f64,
    /// Input coordinate attaining `k_residual`.
    pub k_worst_index: usize,
    pub k: Option<f64>,
    pub r_fit: f64,
    pub r_residual: f64,
    /// Output coordinate attaining `r_residual`.
    pub r_worst_index: usize,
    pub r: Option<f64>,
    /// λ minimizing the balance residual (`None` when λ does not enter,
    /// i.e. a one-dimensional output).
    pub lambda_fit: Option<f64>,
    pub lambda_residual: f64,
    /// Cell of `m m†` attaining `lambda_residual`.
    pub lambda_worst_cell: (usize, usize),
    /// `lambda_residual ≤ tol.abs_eps`.
    pub lambda_balanced: bool,
}

/// Index and value of the largest entry (first on ties); `(0, 0.0)` when empty.
fn worst_entry(values: impl Iterator<Item = f64>) -> (usize, f64) {
    values
        .enumerate()
        .fold((0, 0.0), |best, (i, x)| if x > best.1 { (i, x) } else { best })
}

pub fn verify_cp_design(f: &CpMap, tol: Tolerance) -> Result<CpDesignReport> {
    let m = &f.m;
    let unit_in = f.in_alg.unit();
    let unit_out = f.out_alg.unit();
    let n_in = unit_in.iter().map(|z| z.norm_sqr()).sum::<f64>();
    let n_out = unit_out.iter().map(|z| z.norm_sqr()).sum::<f64>();

    // 1_out† · m, as a row.
    let u: Vector = m.adjoint().mat_vec(&unit_out)?.into_iter().map(|z| z.conj()).collect();
    let k_fit = u.iter().zip(&unit_in).map(|(a, b)| (a * b).re).sum::<f64>() / n_in;
    let (k_worst_index, k_residual) = worst_entry(u.iter().zip(&unit_in).map(|(a, b)| (a - b * k_fit).norm()));

    let w = m.mat_vec(&unit_in)?;
    let r_fit = w.iter().zip(&unit_out).map(|(a, b)| (b.conj() * a).re).sum::<f64>() / n_out;
    let (r_worst_index, r_residual) = worst_entry(w.iter().zip(&unit_out).map(|(a, b)| (a - b * r_fit).norm()));

    let gram = m.matmul(&m.adjoint())?;
    let ee = ComplexMatrix::outer(&unit_out, &unit_out);
    let dim = gram.rows();
    // residual entries are |a_t − λ g_t| with g = (E − I) real
    let mut terms: Vec<(Complex64, f64)> = Vec::with_capacity(dim * dim);
    for x in 0..dim {
        for y in 0..dim {
            let id = if x == y { 1.0 } else { 0.0 };
            let g = ee.get(x, y).re - id;
            terms.push((gram.get(x, y) - Complex64::new(r_fit * id, 0.0), g));
        }
    }
    let residual_at = |lambda: f64| {
        terms
            .iter()
            .map(|&(a, g)| (a - Complex64::new(lambda * g, 0.0)).norm())
            .fold(0.0, f64::max)
    };
    let optima: Vec<f64> = terms.iter().filter(|t| t.1 != 0.0).map(|&(a, g)| a.re / g).collect();
    let (lambda_fit, lambda_residual) = if optima.is_empty() {
        (None, residual_at(0.0))
    } else {
        let mut lo = optima.iter().copied().fold(f64::INFINITY, f64::min);
        let mut hi = optima.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        for _ in 0..200 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if residual_at(m1) <= residual_at(m2) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        let lambda = 0.5 * (lo + hi);
        (Some(lambda), residual_at(lambda))
    };

    let at = lambda_fit.unwrap_or(0.0);
    let (worst, _) = worst_entry(terms.iter().map(|&(a, g)| (a - Complex64::new(at * g, 0.0)).norm()));

    Ok(CpDesignReport {
        k_fit,
        k_residual,
        k_worst_index,
        k: (k_residual <= tol.bound(k_fit)).then_some(k_fit),
        r_fit,
        r_residual,
        r_worst_index,
        r: (r_residual <= tol.bound(r_fit)).then_some(r_fit),
        lambda_fit,
        lambda_residual,
        lambda_worst_cell: (worst / dim, worst % dim),
        lambda_balanced: lambda_residual <= tol.abs_eps,
    })
}

/// The 4×4 map on `M_2` used as a worked example of a design-like CP map.
pub fn example_cp_map() -> CpMap {
    #[rustfmt::skip]
    let m = ComplexMatrix::from_real(4, 4, &[
        1.0, 0.0, 0.0, 1.0,
        0.0, 0.5, 0.5, 0.0,
        0.0, 0.5, 0.5, 0.0,
        1.0, 0.0, 0.0, 1.0,
    ])
    .expect("finite");
    CpMap::new(Algebra::Matrix(2), Algebra::Matrix(2), m).expect("4x4 on M_2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{find_isomorphisms, gen_complete, gen_projective_plane};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn close(a: &[f64], b: &[f64], eps: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= eps)
    }

    #[test]
    fn identity_choi_is_maximally_entangled() {
        let eigs = choi_spectrum(&CpMap::identity(2), tol()).unwrap();
        assert!(close(&eigs, &[0.0, 0.0, 0.0, 2.0], 1e-12), "{eigs:?}");
        let c = choi(&CpMap::identity(2)).m;
        for (x, y) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            assert_eq!(c.get(x, y), ONE);
        }
    }

    #[test]
    fn transpose_choi_is_swap() {
        let eigs = choi_spectrum(&CpMap::transpose_map(2), tol()).unwrap();
        assert!(close(&eigs, &[-1.0, 1.0, 1.0, 1.0], 1e-12), "{eigs:?}");
        let v = is_cp(&CpMap::transpose_map(2), tol()).unwrap();
        assert!(!v.completely_positive);
        assert!((v.min_eigenvalue + 1.0).abs() < 1e-12);
    }

    #[test]
    fn depolarizing_choi_is_half_identity() {
        let c = choi(&CpMap::depolarizing(2)).m;
        assert!(
            c.max_abs_diff(&ComplexMatrix::identity(4).scale(Complex64::new(0.5, 0.0)))
                .unwrap()
                < 1e-15
        );
        assert!(is_cp(&CpMap::depolarizing(2), tol()).unwrap().completely_positive);
    }

    #[test]
    fn trace_preservation() {
        assert!(
            is_trace_preserving(&CpMap::identity(2), tol())
                .unwrap()
                .trace_preserving
        );
        assert!(
            is_trace_preserving(&CpMap::depolarizing(3), tol())
                .unwrap()
                .trace_preserving
        );
        assert!(
            is_trace_preserving(&CpMap::transpose_map(2), tol())
                .unwrap()
                .trace_preserving
        );
        let ex = is_trace_preserving(&example_cp_map(), tol()).unwrap();
        assert!(!ex.trace_preserving);
        assert!((ex.residual - 1.0).abs() < 1e-15);
    }

    #[test]
    fn partial_trace_agrees_with_direct_check() {
        let c = choi(&CpMap::depolarizing(2));
        assert!(
            c.partial_trace_output()
                .max_abs_diff(&ComplexMatrix::identity(2))
                .unwrap()
                < 1e-15
        );
        let c = choi(&example_cp_map());
        assert!(
            c.partial_trace_output()
                .max_abs_diff(&ComplexMatrix::identity(2).scale(Complex64::new(2.0, 0.0)))
                .unwrap()
                < 1e-15
        );
    }

    #[test]
    fn example_parameters() {
        let rep = verify_cp_design(&example_cp_map(), tol()).unwrap();
        assert_eq!(rep.k, Some(2.0));
        assert_eq!(rep.r, Some(2.0));
        // m m† has 1/2 in the (1,2) slot where λ(E − I) + rI is 0.
        assert!((rep.lambda_residual - 0.5).abs() < 1e-9, "{rep:?}");
        let (x, y) = rep.lambda_worst_cell;
        let g = example_cp_map()
            .matrix()
            .matmul(&example_cp_map().matrix().adjoint())
            .unwrap();
        assert!(g.get(x, y).re > 0.0 && x != y);
        assert!(!rep.lambda_balanced);
        assert!(is_cp(&example_cp_map(), tol()).unwrap().completely_positive);
    }

    #[test]
    fn example_choi_reading() {
        let alt = example_cp_map().choi_reading().unwrap();
        let rep = verify_cp_design(&alt, tol()).unwrap();
        assert_eq!(rep.k, Some(1.5));
        assert_eq!(rep.r, Some(1.5));
        assert!(!rep.lambda_balanced);
        // reading twice returns the original
        assert_eq!(alt.choi_reading().unwrap(), example_cp_map());
    }

    #[test]
    fn identity_and_depolarizing_designs() {
        let rep = verify_cp_design(&CpMap::identity(2), tol()).unwrap();
        assert_eq!((rep.k, rep.r), (Some(1.0), Some(1.0)));
        let rep = verify_cp_design(&CpMap::depolarizing(2), tol()).unwrap();
        assert_eq!((rep.k, rep.r), (Some(1.0), Some(1.0)));
    }

    #[test]
    fn classical_maps() {
        let fano = gen_projective_plane(2).unwrap();
        let f = classical_to_cp(&fano);
        assert_eq!(f.matrix(), &ComplexMatrix::from_nat(fano.incidence()));
        assert!(is_cp(&f, tol()).unwrap().completely_positive);
        let rep = verify_cp_design(&f, tol()).unwrap();
        assert_eq!((rep.k, rep.r), (Some(3.0), Some(3.0)));
        assert_eq!(rep.lambda_fit, Some(1.0));
        assert!(rep.lambda_balanced);
        assert!(!is_trace_preserving(&f, tol()).unwrap().trace_preserving);

        let stochastic = CpMap::new(
            f.in_alg(),
            f.out_alg(),
            f.matrix().scale(Complex64::new(1.0 / 3.0, 0.0)),
        )
        .unwrap();
        assert!(is_trace_preserving(&stochastic, tol()).unwrap().trace_preserving);
    }

    #[test]
    fn classical_choi_is_nonnegative_diagonal() {
        let d = gen_complete(4, 2).unwrap();
        let c = choi(&classical_to_cp(&d)).m;
        for x in 0..c.rows() {
            for y in 0..c.cols() {
                let z = c.get(x, y);
                if x != y {
                    assert_eq!(z, ZERO);
                } else {
                    assert!(z.re >= 0.0 && z.im == 0.0);
                }
            }
        }
    }

    #[test]
    fn block_check_matches_full_choi() {
        let qd = functor_q(&gen_complete(3, 2).unwrap()).unwrap();
        let f = quantum_design_to_cp(&qd);
        let blockwise = is_cp(&f, tol()).unwrap().min_eigenvalue;
        let full = min_eigenvalue_hermitian(&choi(&f).m, tol()).unwrap();
        assert!((blockwise - full).abs() < 1e-12);
    }

    #[test]
    fn pvm_to_cp() {
        let pvm = QuantumDesign::new(
            2,
            vec![ComplexMatrix::diag(&[1.0, 0.0]), ComplexMatrix::diag(&[0.0, 1.0])],
        )
        .unwrap();
        let f = quantum_design_to_cp(&pvm);
        assert_eq!(f.matrix().column(0), ComplexMatrix::diag(&[1.0, 0.0]).vectorize());
        assert_eq!(f.matrix().column(1), ComplexMatrix::diag(&[0.0, 1.0]).vectorize());
        assert!(is_cp(&f, tol()).unwrap().completely_positive);
        assert!(is_trace_preserving(&f, tol()).unwrap().trace_preserving);
    }

    #[test]
    fn quantum_design_as_cp_design() {
        // The adjoint C^v ← M_b carries the design conditions.
        let fano = gen_projective_plane(2).unwrap();
        let qd = functor_q(&fano).unwrap();
        let f = quantum_design_to_cp(&qd);
        assert_eq!((f.matrix().rows(), f.matrix().cols()), (49, 7));
        let rep = verify_cp_design(&f.adjoint(), tol()).unwrap();
        assert_eq!((rep.k, rep.r), (Some(3.0), Some(3.0)));
        assert_eq!(rep.lambda_fit, Some(1.0));
        assert!(rep.lambda_balanced);
    }

    #[test]
    fn functor_q_examples() {
        let fano = gen_projective_plane(2).unwrap();
        let qd = functor_q(&fano).unwrap();
        assert_eq!((qd.v(), qd.b()), (7, 7));
        let p = qd.classify(tol()).unwrap();
        assert_eq!((p.r, p.k, p.degree, p.commutative), (Some(3), Some(3.0), 1, true));
        assert_eq!(p.lambda_set, vec![1.0]);

        let p = functor_q(&gen_complete(3, 2).unwrap())
            .unwrap()
            .classify(tol())
            .unwrap();
        assert_eq!((p.r, p.k, p.lambda_set.clone()), (Some(2), Some(2.0), vec![1.0]));

        let id = ClassicalDesign::from_rows(&[[1, 0], [0, 1]]).unwrap();
        let qd = functor_q(&id).unwrap();
        assert_eq!(qd.projectors()[0], ComplexMatrix::diag(&[1.0, 0.0]));
        assert_eq!(qd.projectors()[1], ComplexMatrix::diag(&[0.0, 1.0]));
        assert_eq!(qd.classify(tol()).unwrap().lambda_set, vec![0.0]);
    }

    #[test]
    fn functor_q_refusals() {
        let heavy = ClassicalDesign::from_rows(&[[2, 0], [0, 2]]).unwrap();
        assert_eq!(
            functor_q(&heavy),
            Err(Error::NotZeroOne {
                row: 0,
                col: 0,
                value: 2
            })
        );
        let lopsided = ClassicalDesign::from_rows(&[[1, 1], [0, 1]]).unwrap();
        assert!(matches!(functor_q(&lopsided), Err(Error::NotBlockDesign(_))));
    }

    #[test]
    fn hom_lifts() {
        let fano = gen_projective_plane(2).unwrap();
        let id = HomPair::identity(&fano);
        let lift = functor_q_on_hom(&fano, &fano, &id).unwrap();
        assert_eq!(
            (lift.base, lift.comultiplication, lift.outer, lift.multiplication),
            (0.0, 0.0, 0.0, 0.0)
        );

        for h in find_isomorphisms(&fano, &fano, Some(5)).unwrap() {
            let lift = functor_q_on_hom(&fano, &fano, &h).unwrap();
            assert!(lift.commutes(Tolerance::absolute(1e-12)));
            assert_eq!(lift.multiplication, 0.0);
        }

        let mut f_b: Vec<usize> = (0..7).collect();
        f_b.swap(0, 1);
        let bad = HomPair::new((0..7).collect(), f_b, 7, 7).unwrap();
        assert!(matches!(
            functor_q_on_hom(&fano, &fano, &bad),
            Err(Error::HomNotCommuting { .. })
        ));
    }

    #[test]
    fn map_shape_errors() {
        assert!(CpMap::new(Algebra::Matrix(2), Algebra::Matrix(2), ComplexMatrix::identity(3)).is_err());
        assert!(CpMap::unitary_channel(&ComplexMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn unitary_channel_is_a_channel() {
        let s = 0.5f64.sqrt();
        let h = ComplexMatrix::from_real(2, 2, &[s, s, s, -s]).unwrap();
        let f = CpMap::unitary_channel(&h).unwrap();
        assert!(is_cp(&f, tol()).unwrap().completely_positive);
        assert!(is_trace_preserving(&f, tol()).unwrap().trace_preserving);
        let rep = verify_cp_design(&f, tol()).unwrap();
        assert!((rep.k.unwrap() - 1.0).abs() < 1e-12);
    }
}
