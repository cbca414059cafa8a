//! Send a block design to its diagonal projector design and back.

use qdesign::classical::gen_complete;
use qdesign::cpmaps::functor_q;
use qdesign::numkit::{ComplexMatrix, Tolerance};

fn main() -> qdesign::Result<()> {
    let tol = Tolerance::default();
    let d = gen_complete(4, 2)?;
    let p = d.classify()?;
    println!(
        "complete(4,2): v={} b={} k={:?} r={:?} λ={:?}",
        d.v(),
        d.b(),
        p.k,
        p.r,
        p.lambda
    );

    let q = functor_q(&d)?;
    let pq = q.classify(tol)?;
    println!(
        "projectors on C^{}: r={:?} k={:?} Λ={:?} commutative={}",
        q.b(),
        pq.r,
        pq.k,
        pq.lambda_set,
        pq.commutative
    );
    println!(
        "back to incidence, same design: {}",
        q.to_classical(tol)?.eq_up_to_column_permutation(&d)
    );

    // A rotation hides the diagonal form but keeps every trace.
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let rot = ComplexMatrix::from_real(2, 2, &[h, -h, h, h])?;
    let u = rot.kron(&ComplexMatrix::identity(3));
    let rotated = q.conjugate_by(&u)?;
    let pr = rotated.classify(tol)?;
    println!("after conjugation: r={:?} k={:?} Λ={:?}", pr.r, pr.k, pr.lambda_set);
    println!(
        "still recovers the design: {}",
        rotated.to_classical(tol)?.eq_up_to_column_permutation(&d)
    );

    // Designs with multiplicities are not 0/1 and have no projector image.
    let doubled = qdesign::classical::ClassicalDesign::from_rows(&[[2u64]])?;
    println!("functor on [[2]]: {}", functor_q(&doubled).unwrap_err());
    Ok(())
}
