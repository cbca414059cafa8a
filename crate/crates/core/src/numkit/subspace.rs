use num_complex::Complex64;

use super::{inner, norm, ComplexMatrix, Tolerance, Vector};
use crate::{Error, Result};

/// Modified Gram–Schmidt with one re-orthogonalization pass.
///
/// Vectors whose remaining norm after projection is at most `tol.abs_eps`
/// are dropped, so the output may be shorter than the input (or empty).
pub fn orthonormalize(vectors: &[Vector], tol: Tolerance) -> Result<Vec<Vector>> {
    let dim = vectors.first().map_or(0, Vec::len);
    if let Some(bad) = vectors.iter().position(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch(format!(
            "vector {bad} has length {}, expected {dim}",
            vectors[bad].len()
        )));
    }
    let mut basis: Vec<Vector> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for q in &basis {
                project_out(&mut w, q);
            }
        }
        let len = norm(&w);
        if len > tol.abs_eps {
            basis.push(scaled(&w, 1.0 / len));
        }
    }
    Ok(basis)
}

/// Orthonormal bases of `S ∩ im(p)` and `S ∩ ker(p)`.
#[derive(Debug, Clone)]
pub struct SubspaceSplit {
    pub image: Vec<Vector>,
    pub kernel: Vec<Vector>,
}

/// Splits the span of an orthonormal `basis` into the parts where the
/// projector `p` acts as the identity and as zero.
///
/// `p` must commute with the orthogonal projection onto the span. When it
/// does not, the two parts fail to reassemble the span and
/// [`Error::SplitFailed`] is returned.
pub fn split_by_projector(basis: &[Vector], p: &ComplexMatrix, tol: Tolerance) -> Result<SubspaceSplit> {
    if !p.is_square() {
        return Err(Error::NotSquare {
            rows: p.rows(),
            cols: p.cols(),
        });
    }
    if let Some(bad) = basis.iter().position(|v| v.len() != p.rows()) {
        return Err(Error::DimensionMismatch(format!(
            "basis vector {bad} has length {}, projector is {}x{}",
            basis[bad].len(),
            p.rows(),
            p.cols()
        )));
    }
    let dim = basis.len();
    if dim == 0 {
        return Ok(SubspaceSplit {
            image: Vec::new(),
            kernel: Vec::new(),
        });
    }

    let mut images = Vec::with_capacity(dim);
    let mut complements = Vec::with_capacity(dim);
    for s in basis {
        let ps = p.mat_vec(s)?;
        complements.push(s.iter().zip(&ps).map(|(a, b)| a - b).collect::<Vector>());
        images.push(ps);
    }

    // Restricted to S, p and 1 - p are projectors, so the largest remaining
    // column norm of a nonzero part is at least 1/sqrt(dim).
    let threshold = 0.5 / (dim as f64).sqrt();
    let image = pivoted_gram_schmidt(images, threshold);
    let kernel = pivoted_gram_schmidt(complements, threshold);

    if image.len() + kernel.len() != dim {
        return Err(Error::SplitFailed(format!(
            "parts of dimension {} + {} do not reassemble a subspace of dimension {dim}",
            image.len(),
            kernel.len()
        )));
    }

    let bound = 10.0 * tol.bound(1.0);
    for u in &image {
        let pu = p.mat_vec(u)?;
        let r = norm(&pu.iter().zip(u).map(|(a, b)| a - b).collect::<Vector>());
        if r > bound {
            return Err(Error::SplitFailed(format!("projector moves an image vector by {r:e}")));
        }
    }
    for w in &kernel {
        let r = norm(&p.mat_vec(w)?);
        if r > bound {
            return Err(Error::SplitFailed(format!(
                "projector does not annihilate a kernel vector ({r:e})"
            )));
        }
        for u in &image {
            let overlap = inner(u, w).norm();
            if overlap > bound {
                return Err(Error::SplitFailed(format!("image and kernel overlap by {overlap:e}")));
            }
        }
    }
    for x in image.iter().chain(&kernel) {
        let mut rest = x.clone();
        for s in basis {
            project_out(&mut rest, s);
        }
        let r = norm(&rest);
        if r > bound {
            return Err(Error::SplitFailed(format!(
                "split vector leaves the subspace by {r:e}; projector does not commute with it"
            )));
        }
    }
    Ok(SubspaceSplit { image, kernel })
}

/// Greedy column-pivoted Gram–Schmidt: repeatedly normalizes the largest
/// remaining vector and projects it out of the rest.
fn pivoted_gram_schmidt(mut pool: Vec<Vector>, threshold: f64) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    while !pool.is_empty() {
        let (idx, len) = pool
            .iter()
            .enumerate()
            .map(|(i, v)| (i, norm(v)))
            .fold((0, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if len <= threshold {
            break;
        }
        let mut q = pool.swap_remove(idx);
        for prev in &out {
            project_out(&mut q, prev);
        }
        let q = scaled(&q, 1.0 / norm(&q));
        for v in &mut pool {
            project_out(v, &q);
        }
        out.push(q);
    }
    out
}

fn project_out(w: &mut [Complex64], q: &[Complex64]) {
    let c = inner(q, w);
    for (x, y) in w.iter_mut().zip(q) {
        *x -= c * y;
    }
}

fn scaled(v: &[Complex64], s: f64) -> Vector {
    v.iter().map(|z| z * s).collect()
}
