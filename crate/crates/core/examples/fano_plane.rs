//! Build the Fano plane from its lines, classify it, and print the report.

use qdesign::classical::{check_identities, gen_projective_plane, ClassicalDesign};
use qdesign::report::classical_report;

fn main() -> qdesign::Result<()> {
    let lines = [
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ];
    let blocks: Vec<Vec<usize>> = lines.iter().map(|l| l.to_vec()).collect();
    let fano = ClassicalDesign::from_blocks(7, &blocks)?;
    print!("incidence:\n{}", fano.incidence());

    let p = fano.classify()?;
    println!("k={:?} r={:?} λ={:?} symmetric={}", p.k, p.r, p.lambda, p.symmetric);
    for c in check_identities(7, 7, &p)? {
        println!(
            "{}: {} = {} ({})",
            c.name,
            c.lhs,
            c.rhs,
            if c.pass { "ok" } else { "FAILS" }
        );
    }

    // The generator labels points differently; the two agree up to isomorphism.
    let generated = gen_projective_plane(2)?;
    println!(
        "isomorphic to PG(2,2): {}",
        qdesign::classical::are_isomorphic(&fano, &generated)?
    );

    print!("\n{}", classical_report(&fano, true)?.to_text());
    Ok(())
}
