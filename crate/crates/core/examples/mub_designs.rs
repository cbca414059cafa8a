//! Mutually unbiased bases in prime dimension as quantum designs.

use qdesign::numkit::Tolerance;
use qdesign::quantum::{check_identities_q, mub_generate, mub_verify};

fn main() -> qdesign::Result<()> {
    let tol = Tolerance::default();
    for (d, k) in [(2, 3), (3, 4), (5, 6)] {
        let family = mub_generate(d, k)?;
        let checked = mub_verify(&family, tol)?;
        let q = &checked.design;
        let p = q.classify(tol)?;
        println!(
            "d={d}, {k} bases: v={} r={:?} k={:?} Λ={:?} degree={} commutative={}",
            q.v(),
            p.r,
            p.k,
            p.lambda_set,
            p.degree,
            p.commutative
        );
        println!(
            "  trace-law residual {:.1e}, sum residual {:.1e}",
            checked.trace_law_residual, checked.sum_residual
        );
        for c in check_identities_q(q.v(), q.b(), &p, tol)? {
            println!(
                "  {}: {:.3} vs {:.3} {}",
                c.name,
                c.lhs,
                c.rhs,
                if c.pass { "ok" } else { "FAILS" }
            );
        }
    }
    println!("composite dimension: {}", mub_generate(4, 2).unwrap_err());
    Ok(())
}
