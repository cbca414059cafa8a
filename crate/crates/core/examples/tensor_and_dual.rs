//! Tensor products and duals of classical and quantum designs.

use qdesign::classical::{gen_complete, gen_projective_plane};
use qdesign::cpmaps::functor_q;
use qdesign::numkit::Tolerance;

fn main() -> qdesign::Result<()> {
    let fano = gen_projective_plane(2)?;
    let pair = gen_complete(3, 2)?;

    let t = fano.tensor(&pair)?;
    let p = t.classify()?;
    println!(
        "PG(2,2) ⊗ complete(3,2): v={} b={} k={:?} r={:?} λ={:?}",
        t.v(),
        t.b(),
        p.k,
        p.r,
        p.lambda
    );
    // Pair counts of a tensor product take several values, so λ is lost.
    println!("balanced: {}", p.lambda.is_some());

    let dual = pair.dual();
    let pd = dual.classify()?;
    println!(
        "dual of complete(3,2): v={} b={} k={:?} r={:?} λ={:?}",
        dual.v(),
        dual.b(),
        pd.k,
        pd.r,
        pd.lambda
    );

    let tol = Tolerance::default();
    let q = functor_q(&pair)?;
    let qt = q.tensor(&q);
    let pq = qt.classify(tol)?;
    println!(
        "quantum tensor: v={} on C^{} r={:?} k={:?} Λ={:?}",
        qt.v(),
        qt.b(),
        pq.r,
        pq.k,
        pq.lambda_set
    );
    Ok(())
}
