//! Classical designs as incidence matrices.
//!
//! A design with `v` points and `b` blocks is a `v × b` matrix `χ` over the
//! natural numbers, `χ[i][j]` being the multiplicity of point `i` in block
//! `j`. Entries above 1 are allowed; [`ClassicalDesign::to_block`] thresholds
//! them back to an ordinary 0/1 incidence structure.

mod generate;
mod hom;
mod search;

pub use generate::{gen_complete, gen_projective_plane, is_prime};
pub use hom::{compose_hom, verify_hom, HomCell, HomCheck, HomPair};
pub use search::{are_isomorphic, find_isomorphisms, search_designs, SearchParams};

use crate::numkit::NatMatrix;
use crate::{Error, Result};

/// A design `χ: b → v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassicalDesign {
    chi: NatMatrix,
}

/// Parameters detected by [`ClassicalDesign::classify`].
///
/// `lambda` is only ever present together with `k` and `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DesignParams {
    pub k: Option<u64>,
    pub r: Option<u64>,
    pub lambda: Option<u64>,
    pub symmetric: bool,
}

impl DesignParams {
    /// All of `k`, `r` and `λ` are present.
    pub fn is_block_design(&self) -> bool {
        self.k.is_some() && self.r.is_some() && self.lambda.is_some()
    }
}

/// One counting identity evaluated on both sides.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck<T> {
    pub name: &'static str,
    pub lhs: T,
    pub rhs: T,
    pub pass: bool,
}

pub const EQ_BLOCKS_POINTS: &str = "b·k = r·v";
pub const EQ_PAIRS: &str = "λ(v−1) = r(k−1)";

/// Evaluates `b·k = r·v` and, when `λ` is known, `λ(v−1) = r(k−1)` exactly.
pub fn check_identities(v: u64, b: u64, params: &DesignParams) -> Result<Vec<IdentityCheck<i128>>> {
    let k = params.k.ok_or(Error::MissingParameter("k"))? as i128;
    let r = params.r.ok_or(Error::MissingParameter("r"))? as i128;
    let (v, b) = (v as i128, b as i128);
    let mut out = vec![exact(EQ_BLOCKS_POINTS, b * k, r * v)];
    if let Some(lambda) = params.lambda {
        out.push(exact(EQ_PAIRS, lambda as i128 * (v - 1), r * (k - 1)));
    }
    Ok(out)
}

fn exact(name: &'static str, lhs: i128, rhs: i128) -> IdentityCheck<i128> {
    IdentityCheck {
        name,
        lhs,
        rhs,
        pass: lhs == rhs,
    }
}

fn common_value(values: &[u64]) -> Option<u64> {
    let first = *values.first()?;
    values.iter().all(|&x| x == first).then_some(first)
}

impl ClassicalDesign {
    pub fn new(chi: NatMatrix) -> Result<Self> {
        if chi.rows() == 0 || chi.cols() == 0 {
            return Err(Error::InvalidArgument(format!(
                "a design needs at least one point and one block, got {}x{}",
                chi.rows(),
                chi.cols()
            )));
        }
        Ok(Self { chi })
    }

    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self> {
        Self::new(NatMatrix::from_rows(rows)?)
    }

    /// Design from block supports: block `j` contains the points in `blocks[j]`.
    pub fn from_blocks(v: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut rows = vec![vec![0u64; blocks.len()]; v];
        for (j, block) in blocks.iter().enumerate() {
            for &i in block {
                if i >= v {
                    return Err(Error::OutOfRange {
                        what: "point",
                        index: i,
                        size: v,
                    });
                }
                rows[i][j] += 1;
            }
        }
        Self::from_rows(&rows)
    }

    #[inline]
    pub fn v(&self) -> usize {
        self.chi.rows()
    }

    #[inline]
    pub fn b(&self) -> usize {
        self.chi.cols()
    }

    pub fn incidence(&self) -> &NatMatrix {
        &self.chi
    }

    pub fn into_incidence(self) -> NatMatrix {
        self.chi
    }

    pub fn is_zero_one(&self) -> bool {
        self.chi.data().iter().all(|&x| x <= 1)
    }

    /// `χ · χᵀ`.
    pub fn gram(&self) -> Result<NatMatrix> {
        self.chi.matmul(&self.chi.transpose())
    }

    pub fn classify(&self) -> Result<DesignParams> {
        let k = common_value(&self.chi.col_sums()?);
        let r = common_value(&self.chi.row_sums()?);
        let lambda = match (k, r) {
            (Some(_), Some(r)) if self.v() >= 2 => {
                let g = self.gram()?;
                let lambda = g.get(0, 1);
                self.balance_defect_in(&g, r, lambda).is_none().then_some(lambda)
            }
            _ => None,
        };
        Ok(DesignParams {
            k,
            r,
            lambda,
            symmetric: self.v() == self.b(),
        })
    }

    /// First cell of `χχᵀ` that breaks `λ(E − I) + rI`, using `(χχᵀ)[0][1]`
    /// as the candidate `λ`.
    pub fn balance_defect(&self, r: u64) -> Result<Option<(usize, usize)>> {
        if self.v() < 2 {
            return Ok(None);
        }
        let g = self.gram()?;
        Ok(self.balance_defect_in(&g, r, g.get(0, 1)))
    }

    fn balance_defect_in(&self, g: &NatMatrix, r: u64, lambda: u64) -> Option<(usize, usize)> {
        let n = g.rows();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| g.get(i, j) != if i == j { r } else { lambda })
    }

    /// Entrywise indicator `χ > 0`.
    pub fn to_block(&self) -> ClassicalDesign {
        Self {
            chi: self.chi.map(|x| u64::from(x > 0)),
        }
    }

    /// Kronecker product of incidence matrices: `v₁v₂` points, `b₁b₂` blocks.
    pub fn tensor(&self, other: &ClassicalDesign) -> Result<ClassicalDesign> {
        Ok(Self {
            chi: self.chi.kron(&other.chi)?,
        })
    }

    /// Transposed design: points and blocks swap roles.
    pub fn dual(&self) -> ClassicalDesign {
        Self {
            chi: self.chi.transpose(),
        }
    }

    /// Same design with columns in a canonical order.
    pub fn canonical_columns(&self) -> ClassicalDesign {
        Self {
            chi: self.chi.sorted_columns(),
        }
    }

    /// Equal up to a permutation of blocks.
    pub fn eq_up_to_column_permutation(&self, other: &ClassicalDesign) -> bool {
        self.chi.rows() == other.chi.rows()
            && self.chi.cols() == other.chi.cols()
            && self.chi.sorted_columns() == other.chi.sorted_columns()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> ClassicalDesign {
        gen_projective_plane(2).unwrap()
    }

    #[test]
    fn fano_gram_matrix() {
        let g = fano().gram().unwrap();
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(g.get(i, j), if i == j { 3 } else { 1 });
            }
        }
    }

    #[test]
    fn classify_fano() {
        let p = fano().classify().unwrap();
        assert_eq!(
            p,
            DesignParams {
                k: Some(3),
                r: Some(3),
                lambda: Some(1),
                symmetric: true
            }
        );
    }

    #[test]
    fn classify_all_ones() {
        let d = ClassicalDesign::new(NatMatrix::ones(3, 3)).unwrap();
        let p = d.classify().unwrap();
        assert_eq!((p.k, p.r, p.lambda, p.symmetric), (Some(3), Some(3), Some(3), true));
    }

    #[test]
    fn classify_identity_gives_lambda_zero() {
        let d = ClassicalDesign::from_rows(&[[1, 0], [0, 1]]).unwrap();
        let p = d.classify().unwrap();
        assert_eq!((p.k, p.r, p.lambda, p.symmetric), (Some(1), Some(1), Some(0), true));
    }

    #[test]
    fn single_point_has_no_lambda() {
        let d = ClassicalDesign::from_rows(&[[1, 1, 1]]).unwrap();
        let p = d.classify().unwrap();
        assert_eq!((p.k, p.r, p.lambda, p.symmetric), (Some(1), Some(3), None, false));
    }

    #[test]
    fn non_uniform_design() {
        let d = ClassicalDesign::from_rows(&[[1, 1], [0, 1]]).unwrap();
        let p = d.classify().unwrap();
        assert_eq!((p.k, p.r, p.lambda), (None, None, None));
    }

    #[test]
    fn multiplicities_use_the_full_gram_diagonal() {
        // Row sums are 2 but χχᵀ has 4 on the diagonal, so not balanced.
        let d = ClassicalDesign::from_rows(&[[2, 0], [0, 2]]).unwrap();
        let p = d.classify().unwrap();
        assert_eq!((p.k, p.r, p.lambda), (Some(2), Some(2), None));
    }

    #[test]
    fn identities_projective_plane() {
        let p = fano().classify().unwrap();
        let checks = check_identities(7, 7, &p).unwrap();
        assert_eq!(checks.len(), 2);
        assert_eq!((checks[0].lhs, checks[0].rhs), (21, 21));
        assert_eq!((checks[1].lhs, checks[1].rhs), (6, 6));
        assert!(checks.iter().all(|c| c.pass));
    }

    #[test]
    fn identities_complete_3_2() {
        let p = DesignParams {
            k: Some(2),
            r: Some(2),
            lambda: Some(1),
            symmetric: true,
        };
        let checks = check_identities(3, 3, &p).unwrap();
        assert_eq!((checks[0].lhs, checks[1].lhs, checks[1].rhs), (6, 2, 2));
        assert!(checks.iter().all(|c| c.pass));
    }

    #[test]
    fn identities_fail_for_4_4_2_2_1() {
        let p = DesignParams {
            k: Some(2),
            r: Some(2),
            lambda: Some(1),
            symmetric: true,
        };
        let checks = check_identities(4, 4, &p).unwrap();
        assert!(checks[0].pass);
        assert!(!checks[1].pass);
        assert_eq!((checks[1].lhs, checks[1].rhs), (3, 2));
    }

    #[test]
    fn identities_need_k_and_r() {
        let p = DesignParams {
            k: Some(2),
            ..Default::default()
        };
        assert_eq!(check_identities(3, 3, &p), Err(Error::MissingParameter("r")));
    }

    #[test]
    fn to_block_thresholds() {
        let d = ClassicalDesign::from_rows(&[[2, 0], [0, 3]]).unwrap();
        assert_eq!(d.to_block(), ClassicalDesign::from_rows(&[[1, 0], [0, 1]]).unwrap());
        assert_eq!(fano().to_block(), fano());
        let ff = fano().tensor(&fano()).unwrap();
        assert_eq!(ff.to_block(), ff);
    }

    #[test]
    fn tensor_fano_fano() {
        let ff = fano().tensor(&fano()).unwrap();
        assert_eq!((ff.v(), ff.b()), (49, 49));
        let p = ff.classify().unwrap();
        assert_eq!((p.k, p.r, p.lambda), (Some(9), Some(9), None));
        let g = ff.gram().unwrap();
        let mut off: Vec<u64> = (0..49)
            .flat_map(|i| (0..49).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| g.get(i, j))
            .collect();
        off.sort_unstable();
        off.dedup();
        assert_eq!(off, vec![1, 3]);
    }

    #[test]
    fn tensor_with_unit() {
        let unit = ClassicalDesign::from_rows(&[[1]]).unwrap();
        assert_eq!(fano().tensor(&unit).unwrap(), fano());
    }

    #[test]
    fn dual_swaps_parameters() {
        let d = ClassicalDesign::from_rows(&[[1, 0], [1, 0], [0, 1], [0, 1]]).unwrap();
        let p = d.classify().unwrap();
        assert_eq!((p.k, p.r), (Some(2), Some(1)));
        let q = d.dual().classify().unwrap();
        assert_eq!((q.k, q.r), (Some(1), Some(2)));
        assert_eq!(d.dual().dual(), d);
        let f = fano().dual().classify().unwrap();
        assert_eq!((f.k, f.r), (Some(3), Some(3)));
    }

    #[test]
    fn empty_design_rejected() {
        assert!(ClassicalDesign::new(NatMatrix::zeros(0, 3)).is_err());
    }

    #[test]
    fn from_blocks_builds_incidence() {
        let d = ClassicalDesign::from_blocks(3, &[vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        assert_eq!(d, gen_complete(3, 2).unwrap());
        assert!(ClassicalDesign::from_blocks(2, &[vec![5]]).is_err());
    }
}
