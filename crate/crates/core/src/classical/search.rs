use std::collections::HashMap;

use super::generate::k_subsets;
use super::{check_identities, ClassicalDesign, DesignParams, HomPair};
use crate::numkit::NatMatrix;
use crate::{Error, Result};

const MAX_SEARCH_POINTS: usize = 64;
const MAX_CANDIDATE_BLOCKS: usize = 1 << 16;
const MAX_ISOMORPHISM_SIZE: usize = 8;

/// Target parameters for [`search_designs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchParams {
    pub v: usize,
    pub b: usize,
    pub k: usize,
    pub r: usize,
    pub lambda: usize,
}

impl SearchParams {
    pub fn new(v: usize, b: usize, k: usize, r: usize, lambda: usize) -> Self {
        Self { v, b, k, r, lambda }
    }

    fn as_design_params(&self) -> DesignParams {
        DesignParams {
            k: Some(self.k as u64),
            r: Some(self.r as u64),
            lambda: Some(self.lambda as u64),
            symmetric: self.v == self.b,
        }
    }
}

/// Backtracking search for 0/1 designs with the given `(v, b, k, r, λ)`.
///
/// Blocks are chosen one column at a time among the `k`-subsets of points.
/// Row sums are kept at most `r` and pairwise point co-occurrences at most
/// `λ`. With `canonical_only` the columns are taken in nondecreasing
/// lexicographic order of their supports, which removes column permutations
/// from the output. At most `limit` solutions are returned (`None` for all).
///
/// Parameters violating `b·k = r·v` or `λ(v−1) = r(k−1)` are rejected up
/// front with [`Error::Infeasible`].
pub fn search_designs(
    params: SearchParams,
    limit: Option<usize>,
    canonical_only: bool,
) -> Result<Vec<ClassicalDesign>> {
    let SearchParams { v, b, k, .. } = params;
    if v == 0 || b == 0 {
        return Err(Error::InvalidArgument("v and b must be at least 1".into()));
    }
    if k == 0 || k > v {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= v, got k={k}, v={v}")));
    }
    if v > MAX_SEARCH_POINTS {
        return Err(Error::InvalidArgument(format!(
            "search supports at most {MAX_SEARCH_POINTS} points"
        )));
    }
    let failed: Vec<String> = check_identities(v as u64, b as u64, &params.as_design_params())?
        .into_iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{}: {} != {}", c.name, c.lhs, c.rhs))
        .collect();
    if !failed.is_empty() {
        return Err(Error::Infeasible(failed.join("; ")));
    }

    let subsets = k_subsets(v, k);
    if subsets.len() > MAX_CANDIDATE_BLOCKS {
        return Err(Error::InvalidArgument(format!(
            "{} candidate blocks is too many",
            subsets.len()
        )));
    }
    let mut s = Searcher {
        params,
        subsets,
        canonical: canonical_only,
        limit: limit.unwrap_or(usize::MAX),
        row_sum: vec![0; v],
        pair: vec![0; v * v],
        chosen: Vec::with_capacity(b),
        found: Vec::new(),
    };
    if s.limit > 0 {
        s.descend(0);
    }

    let out = s
        .found
        .iter()
        .map(|cols| {
            let blocks: Vec<Vec<usize>> = cols.iter().map(|&c| s.subsets[c].clone()).collect();
            ClassicalDesign::from_blocks(v, &blocks)
        })
        .collect::<Result<Vec<_>>>()?;
    debug_assert!(out.iter().all(|d| d.classify().ok() == Some(params.as_design_params())));
    Ok(out)
}

struct Searcher {
    params: SearchParams,
    subsets: Vec<Vec<usize>>,
    canonical: bool,
    limit: usize,
    row_sum: Vec<usize>,
    pair: Vec<usize>,
    chosen: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl Searcher {
    fn done(&self) -> bool {
        self.found.len() >= self.limit
    }

    fn descend(&mut self, start: usize) {
        let SearchParams { v, b, r, lambda, .. } = self.params;
        if self.chosen.len() == b {
            let complete = self.row_sum.iter().all(|&x| x == r)
                && (0..v).all(|i| (i + 1..v).all(|j| self.pair[i * v + j] == lambda));
            if complete {
                self.found.push(self.chosen.clone());
            }
            return;
        }
        let remaining_after = b - self.chosen.len() - 1;
        let first = if self.canonical { start } else { 0 };
        for c in first..self.subsets.len() {
            if !self.fits(c) {
                continue;
            }
            self.apply(c, true);
            if self.feasible(remaining_after) {
                self.chosen.push(c);
                self.descend(c);
                self.chosen.pop();
            }
            self.apply(c, false);
            if self.done() {
                return;
            }
        }
    }

    fn fits(&self, c: usize) -> bool {
        let SearchParams { v, r, lambda, .. } = self.params;
        let block = &self.subsets[c];
        block.iter().all(|&i| self.row_sum[i] < r)
            && block
                .iter()
                .enumerate()
                .all(|(a, &i)| block[a + 1..].iter().all(|&j| self.pair[i * v + j] < lambda))
    }

    fn apply(&mut self, c: usize, add: bool) {
        let v = self.params.v;
        let block = &self.subsets[c];
        for (a, &i) in block.iter().enumerate() {
            if add {
                self.row_sum[i] += 1;
            } else {
                self.row_sum[i] -= 1;
            }
            for &j in &block[a + 1..] {
                if add {
                    self.pair[i * v + j] += 1;
                } else {
                    self.pair[i * v + j] -= 1;
                }
            }
        }
    }

    /// Every point still needs at most `remaining` more blocks, and so does
    /// every pair.
    fn feasible(&self, remaining: usize) -> bool {
        let SearchParams { v, r, lambda, .. } = self.params;
        self.row_sum.iter().all(|&x| r - x <= remaining)
            && (0..v).all(|i| (i + 1..v).all(|j| lambda - self.pair[i * v + j] <= remaining))
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Isomorphisms `a → b` as point/block bijections, by exhaustive search over
/// point permutations. Restricted to `v, b ≤ 8`.
pub fn find_isomorphisms(a: &ClassicalDesign, b: &ClassicalDesign, limit: Option<usize>) -> Result<Vec<HomPair>> {
    if a.v() > MAX_ISOMORPHISM_SIZE || a.b() > MAX_ISOMORPHISM_SIZE {
        return Err(Error::InvalidArgument(format!(
            "exhaustive isomorphism search is limited to v, b <= {MAX_ISOMORPHISM_SIZE}"
        )));
    }
    let limit = limit.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    if a.v() != b.v() || a.b() != b.b() || limit == 0 {
        return Ok(out);
    }
    let (v, nb) = (a.v(), a.b());

    let mut target_cols: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for t in 0..nb {
        target_cols.entry(b.incidence().column(t)).or_default().push(t);
    }

    let mut sigma: Vec<usize> = (0..v).collect();
    let mut inverse = vec![0usize; v];
    loop {
        for (i, &s) in sigma.iter().enumerate() {
            inverse[s] = i;
        }
        let relabeled: NatMatrix = a.incidence().permute_rows(&inverse);
        let mut used: HashMap<&Vec<u64>, usize> = HashMap::new();
        let mut tau = Vec::with_capacity(nb);
        for j in 0..nb {
            let col = relabeled.column(j);
            let Some((key, slots)) = target_cols.get_key_value(&col) else {
                break;
            };
            let n = used.entry(key).or_insert(0);
            if *n >= slots.len() {
                break;
            }
            tau.push(slots[*n]);
            *n += 1;
        }
        if tau.len() == nb {
            out.push(HomPair::new(sigma.clone(), tau, v, nb)?);
            if out.len() >= limit {
                break;
            }
        }
        if !next_permutation(&mut sigma) {
            break;
        }
    }
    Ok(out)
}

pub fn are_isomorphic(a: &ClassicalDesign, b: &ClassicalDesign) -> Result<bool> {
    Ok(!find_isomorphisms(a, b, Some(1))?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::super::{gen_complete, gen_projective_plane, verify_hom};
    use super::*;

    #[test]
    fn complete_3_2_is_the_only_canonical_solution() {
        let found = search_designs(SearchParams::new(3, 3, 2, 2, 1), None, true).unwrap();
        assert_eq!(found, vec![gen_complete(3, 2).unwrap()]);
    }

    #[test]
    fn non_canonical_counts_column_orders() {
        let found = search_designs(SearchParams::new(3, 3, 2, 2, 1), None, false).unwrap();
        assert_eq!(found.len(), 6);
        let reference = gen_complete(3, 2).unwrap();
        assert!(found.iter().all(|d| d.eq_up_to_column_permutation(&reference)));
    }

    #[test]
    fn counting_identity_precheck() {
        let err = search_designs(SearchParams::new(4, 4, 2, 2, 1), None, true).unwrap_err();
        assert!(matches!(err, Error::Infeasible(ref m) if m.contains("3 != 2")), "{err}");
    }

    #[test]
    fn limit_is_honored() {
        let found = search_designs(SearchParams::new(7, 7, 3, 3, 1), Some(2), true).unwrap();
        assert_eq!(found.len(), 2);
        assert!(search_designs(SearchParams::new(7, 7, 3, 3, 1), Some(0), true)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn fano_automorphism_group_order() {
        let fano = gen_projective_plane(2).unwrap();
        let autos = find_isomorphisms(&fano, &fano, None).unwrap();
        assert_eq!(autos.len(), 168);
        assert!(autos.iter().all(|h| verify_hom(&fano, &fano, h).unwrap().holds));
    }

    #[test]
    fn non_isomorphic_designs() {
        let a = gen_complete(4, 2).unwrap();
        let b = ClassicalDesign::from_blocks(
            4,
            &[vec![0, 1], vec![0, 1], vec![2, 3], vec![2, 3], vec![0, 2], vec![1, 3]],
        )
        .unwrap();
        assert!(!are_isomorphic(&a, &b).unwrap());
        assert!(are_isomorphic(&a, &a.canonical_columns()).unwrap());
    }

    #[test]
    fn isomorphism_size_limit() {
        let big = gen_projective_plane(3).unwrap();
        assert!(are_isomorphic(&big, &big).is_err());
    }

    #[test]
    fn permutation_enumeration() {
        let mut p = vec![0, 1, 2];
        let mut n = 1;
        while next_permutation(&mut p) {
            n += 1;
        }
        assert_eq!(n, 6);
    }
}
