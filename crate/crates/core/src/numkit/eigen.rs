use num_complex::Complex64;

use super::{ComplexMatrix, Tolerance};
use crate::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// All eigenvalues of a Hermitian matrix, ascending, by cyclic complex Jacobi.
///
/// The input must be Hermitian within `tol` (scaled by its largest entry);
/// it is symmetrized before iterating.
pub fn hermitian_eigenvalues(m: &ComplexMatrix, tol: Tolerance) -> Result<Vec<f64>> {
    let residual = m.hermiticity_residual()?;
    if residual > tol.bound(m.max_abs()) {
        return Err(Error::NotHermitian { residual });
    }
    let n = m.rows();
    let mut a = m.add(&m.adjoint())?.scale(Complex64::new(0.5, 0.0));

    let frob: f64 = a.data().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if frob == 0.0 {
        return Ok(vec![0.0; n]);
    }

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a.get(p, q).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= f64::EPSILON * frob {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue_hermitian(m: &ComplexMatrix, tol: Tolerance) -> Result<f64> {
    if m.rows() == 0 {
        return Err(Error::InvalidArgument("empty matrix has no eigenvalues".into()));
    }
    Ok(hermitian_eigenvalues(m, tol)?[0])
}

/// One Jacobi step annihilating `a[p][q]`: `a ← W† a W` with
/// `W = diag(1, e^{-iφ}) · R(θ)` acting on coordinates `(p, q)`.
fn rotate(a: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let phase = apq.conj() / g;
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;

    let theta = (aqq - app) / (2.0 * g);
    let t = if theta == 0.0 {
        1.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let w_pp = Complex64::new(c, 0.0);
    let w_pq = Complex64::new(s, 0.0);
    let w_qp = phase * (-s);
    let w_qq = phase * c;

    let n = a.rows();
    for k in 0..n {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, akp * w_pp + akq * w_qp);
        a.set(k, q, akp * w_pq + akq * w_qq);
    }
    for k in 0..n {
        let bpk = a.get(p, k);
        let bqk = a.get(q, k);
        a.set(p, k, w_pp.conj() * bpk + w_qp.conj() * bqk);
        a.set(q, k, w_pq.conj() * bpk + w_qq.conj() * bqk);
    }
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));
    a.set(p, p, Complex64::new(a.get(p, p).re, 0.0));
    a.set(q, q, Complex64::new(a.get(q, q).re, 0.0));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_input() {
        let m = ComplexMatrix::diag(&[2.0, 0.5, 3.0]);
        assert_eq!(min_eigenvalue_hermitian(&m, Tolerance::default()).unwrap(), 0.5);
    }

    #[test]
    fn pauli_x_and_y() {
        let x = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let e = hermitian_eigenvalues(&x, Tolerance::default()).unwrap();
        assert!((e[0] + 1.0).abs() < 1e-14 && (e[1] - 1.0).abs() < 1e-14);

        let y = ComplexMatrix::from_rows(&[[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]]).unwrap();
        let e = hermitian_eigenvalues(&y, Tolerance::default()).unwrap();
        assert!((e[0] + 1.0).abs() < 1e-14 && (e[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn transpose_map_choi_spectrum() {
        // Choi matrix of the qubit transpose map is the swap operator.
        let swap = ComplexMatrix::from_real(
            4,
            4,
            &[
                1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0,
            ],
        )
        .unwrap();
        let e = hermitian_eigenvalues(&swap, Tolerance::default()).unwrap();
        let expected = [-1.0, 1.0, 1.0, 1.0];
        for (a, b) in e.iter().zip(expected) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            hermitian_eigenvalues(&m, Tolerance::default()),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn complex_hermitian_3x3() {
        // [[2, i, 0], [-i, 2, 0], [0, 0, 5]] has spectrum {1, 3, 5}.
        let m = ComplexMatrix::from_rows(&[
            [c(2.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)],
            [c(0.0, -1.0), c(2.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(5.0, 0.0)],
        ])
        .unwrap();
        let e = hermitian_eigenvalues(&m, Tolerance::default()).unwrap();
        for (a, b) in e.iter().zip([1.0, 3.0, 5.0]) {
            assert!((a - b).abs() < 1e-13, "{e:?}");
        }
    }
}
