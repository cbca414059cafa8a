//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use qdesign::classical::{gen_complete, ClassicalDesign, HomPair};
use qdesign::numkit::{orthonormalize, ComplexMatrix, NatMatrix, Tolerance};
use qdesign::quantum::QuantumDesign;
use qdesign::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Sum of `r` random `n × n` permutation matrices: every row and column sums
/// to `r`, entries may exceed 1.
pub fn biregular(rng: &mut ChaCha8Rng, n: usize, r: usize) -> ClassicalDesign {
    let mut data = vec![0u64; n * n];
    for _ in 0..r {
        for (i, j) in permutation(rng, n).into_iter().enumerate() {
            data[i * n + j] += 1;
        }
    }
    ClassicalDesign::new(NatMatrix::new(n, n, data).unwrap()).unwrap()
}

/// Random 0/1 matrix with the given density.
pub fn random_zero_one(rng: &mut ChaCha8Rng, v: usize, b: usize, p: f64) -> ClassicalDesign {
    let data = (0..v * b).map(|_| u64::from(rng.gen_bool(p))).collect();
    ClassicalDesign::new(NatMatrix::new(v, b, data).unwrap()).unwrap()
}

/// Random natural-number matrix with entries below `max`.
pub fn random_nat(rng: &mut ChaCha8Rng, v: usize, b: usize, max: u64) -> ClassicalDesign {
    let data = (0..v * b).map(|_| rng.gen_range(0..max)).collect();
    ClassicalDesign::new(NatMatrix::new(v, b, data).unwrap()).unwrap()
}

/// A complete design on at most `max_v` points with shuffled points and blocks.
pub fn shuffled_complete_upto(rng: &mut ChaCha8Rng, max_v: usize) -> ClassicalDesign {
    let v = rng.gen_range(2..=max_v);
    let k = rng.gen_range(1..=v);
    let d = gen_complete(v, k).unwrap();
    let chi = d
        .incidence()
        .permute_rows(&permutation(rng, d.v()))
        .permute_columns(&permutation(rng, d.b()));
    ClassicalDesign::new(chi).unwrap()
}

pub fn shuffled_complete(rng: &mut ChaCha8Rng) -> ClassicalDesign {
    shuffled_complete_upto(rng, 7)
}

pub fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    loop {
        let columns: Vec<Vec<Complex64>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                    .collect()
            })
            .collect();
        let q = orthonormalize(&columns, Tolerance::absolute(1e-6)).unwrap();
        if q.len() == n {
            return ComplexMatrix::from_columns(n, &q).unwrap();
        }
    }
}

/// Rank-`rank` projector onto the span of the first columns of a random unitary.
pub fn random_projector(rng: &mut ChaCha8Rng, n: usize, rank: usize) -> ComplexMatrix {
    let u = random_unitary(rng, n);
    let mut diag = vec![0.0; n];
    diag[..rank].iter_mut().for_each(|x| *x = 1.0);
    ComplexMatrix::diag(&diag).conjugate_by(&u).unwrap()
}

pub fn random_quantum(rng: &mut ChaCha8Rng) -> QuantumDesign {
    let b = rng.gen_range(1..=4);
    let v = rng.gen_range(1..=5);
    let ps = (0..v).map(|_| {
        let rank = rng.gen_range(0..=b);
        random_projector(rng, b, rank)
    });
    QuantumDesign::new(b, ps.collect()).unwrap()
}

/// A design `χ′` and a hom `χ → χ′`: `f_b` is injective into `b′ ≥ b` blocks
/// and the image columns of `χ′` are forced to `F_v χ`.
pub fn random_hom(rng: &mut ChaCha8Rng, src: &ClassicalDesign) -> (ClassicalDesign, HomPair) {
    let v2 = rng.gen_range(1..=src.v() + 2);
    let b2 = src.b() + rng.gen_range(0..=2);
    let f_v: Vec<usize> = (0..src.v()).map(|_| rng.gen_range(0..v2)).collect();
    let f_b: Vec<usize> = permutation(rng, b2)[..src.b()].to_vec();
    let h = HomPair::new(f_v, f_b.clone(), v2, b2).unwrap();
    let pushed = h.point_matrix().matmul(src.incidence()).unwrap();
    let mut data: Vec<u64> = (0..v2 * b2).map(|_| rng.gen_range(0..2)).collect();
    for (j, &t) in f_b.iter().enumerate() {
        for i in 0..v2 {
            data[i * b2 + t] = pushed.get(i, j);
        }
    }
    (ClassicalDesign::new(NatMatrix::new(v2, b2, data).unwrap()).unwrap(), h)
}
