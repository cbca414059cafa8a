use super::ClassicalDesign;
use crate::numkit::NatMatrix;
use crate::{Error, Result};

const MAX_COMPLETE_BLOCKS: u128 = 1 << 20;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Normalized representatives of the 1-dimensional subspaces of `F_d³`: the
/// first nonzero coordinate is 1. Listed in lexicographic order.
fn projective_points(d: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let v = [x, y, z];
                if v.iter().find(|&&c| c != 0) == Some(&1) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// The projective plane `PG(2, d)` over the prime field of order `d`.
///
/// Points are the 1-dimensional subspaces of `F_d³`; blocks are the
/// 2-dimensional subspaces, each given by a normal vector `n`, and point `x`
/// lies on block `n` iff `n · x ≡ 0 (mod d)`. The result has
/// `v = b = d² + d + 1`, `k = r = d + 1` and `λ = 1`.
pub fn gen_projective_plane(order: u64) -> Result<ClassicalDesign> {
    if !is_prime(order) {
        return Err(Error::InvalidArgument(format!(
            "projective plane order must be prime, got {order}"
        )));
    }
    if order > 1000 {
        return Err(Error::InvalidArgument(format!("order {order} is too large")));
    }
    let pts = projective_points(order);
    let n = pts.len();
    let mut data = Vec::with_capacity(n * n);
    for p in &pts {
        for line in &pts {
            let dot: u64 = p.iter().zip(line).map(|(a, b)| a * b).sum();
            data.push(u64::from(dot.is_multiple_of(order)));
        }
    }
    ClassicalDesign::new(NatMatrix::new(n, n, data)?)
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// All `k`-subsets of `v` points as blocks, in lexicographic order.
pub fn gen_complete(v: usize, k: usize) -> Result<ClassicalDesign> {
    if k == 0 || k > v {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= v, got v={v}, k={k}")));
    }
    if binomial(v as u64, k as u64) > MAX_COMPLETE_BLOCKS {
        return Err(Error::InvalidArgument(format!("C({v}, {k}) blocks is too many")));
    }
    let blocks = k_subsets(v, k);
    ClassicalDesign::from_blocks(v, &blocks)
}

/// `k`-subsets of `{0..n}` in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
