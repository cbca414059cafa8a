use super::ClassicalDesign;
use crate::numkit::NatMatrix;
use crate::{Error, Result};

/// A pair of total functions on point and block indices (0-based).
///
/// Read as a candidate design homomorphism `χ → χ′`: `f_v` sends the points
/// of `χ` to points of `χ′`, `f_b` sends blocks to blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomPair {
    f_v: Vec<usize>,
    f_b: Vec<usize>,
    v_target: usize,
    b_target: usize,
}

impl HomPair {
    pub fn new(f_v: Vec<usize>, f_b: Vec<usize>, v_target: usize, b_target: usize) -> Result<Self> {
        if let Some(&bad) = f_v.iter().find(|&&x| x >= v_target) {
            return Err(Error::OutOfRange {
                what: "point image",
                index: bad,
                size: v_target,
            });
        }
        if let Some(&bad) = f_b.iter().find(|&&x| x >= b_target) {
            return Err(Error::OutOfRange {
                what: "block image",
                index: bad,
                size: b_target,
            });
        }
        Ok(Self {
            f_v,
            f_b,
            v_target,
            b_target,
        })
    }

    pub fn identity(d: &ClassicalDesign) -> Self {
        Self {
            f_v: (0..d.v()).collect(),
            f_b: (0..d.b()).collect(),
            v_target: d.v(),
            b_target: d.b(),
        }
    }

    pub fn f_v(&self) -> &[usize] {
        &self.f_v
    }

    pub fn f_b(&self) -> &[usize] {
        &self.f_b
    }

    pub fn v_target(&self) -> usize {
        self.v_target
    }

    pub fn b_target(&self) -> usize {
        self.b_target
    }

    /// 0/1 matrix of `f_v`, shape `v′ × v`.
    pub fn point_matrix(&self) -> NatMatrix {
        NatMatrix::from_function(&self.f_v, self.v_target).expect("images checked at construction")
    }

    /// 0/1 matrix of `f_b`, shape `b′ × b`.
    pub fn block_matrix(&self) -> NatMatrix {
        NatMatrix::from_function(&self.f_b, self.b_target).expect("images checked at construction")
    }

    fn check_shapes(&self, src: &ClassicalDesign, dst: &ClassicalDesign) -> Result<()> {
        if self.f_v.len() != src.v() || self.f_b.len() != src.b() {
            return Err(Error::DimensionMismatch(format!(
                "hom domain is ({}, {}) but source design is {}x{}",
                self.f_v.len(),
                self.f_b.len(),
                src.v(),
                src.b()
            )));
        }
        if self.v_target != dst.v() || self.b_target != dst.b() {
            return Err(Error::DimensionMismatch(format!(
                "hom codomain is ({}, {}) but target design is {}x{}",
                self.v_target,
                self.b_target,
                dst.v(),
                dst.b()
            )));
        }
        Ok(())
    }
}

/// A cell where `F_v · χ` and `χ′ · F_b` differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomCell {
    pub point: usize,
    pub block: usize,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCheck {
    pub holds: bool,
    pub counterexample: Option<HomCell>,
}

/// Checks that the square `F_v · χ = χ′ · F_b` commutes exactly.
pub fn verify_hom(src: &ClassicalDesign, dst: &ClassicalDesign, h: &HomPair) -> Result<HomCheck> {
    h.check_shapes(src, dst)?;
    let lhs = h.point_matrix().matmul(src.incidence())?;
    let rhs = dst.incidence().matmul(&h.block_matrix())?;
    let counterexample = (0..lhs.rows())
        .flat_map(|i| (0..lhs.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| lhs.get(i, j) != rhs.get(i, j))
        .map(|(i, j)| HomCell {
            point: i,
            block: j,
            lhs: lhs.get(i, j),
            rhs: rhs.get(i, j),
        });
    Ok(HomCheck {
        holds: counterexample.is_none(),
        counterexample,
    })
}

/// `h2 ∘ h1`, componentwise.
pub fn compose_hom(h1: &HomPair, h2: &HomPair) -> Result<HomPair> {
    if h1.v_target != h2.f_v.len() || h1.b_target != h2.f_b.len() {
        return Err(Error::DimensionMismatch(format!(
            "first hom lands in ({}, {}) but second starts at ({}, {})",
            h1.v_target,
            h1.b_target,
            h2.f_v.len(),
            h2.f_b.len()
        )));
    }
    Ok(HomPair {
        f_v: h1.f_v.iter().map(|&i| h2.f_v[i]).collect(),
        f_b: h1.f_b.iter().map(|&j| h2.f_b[j]).collect(),
        v_target: h2.v_target,
        b_target: h2.b_target,
    })
}
