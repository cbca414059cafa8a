//! Design homomorphisms, isomorphisms, and their lifts to projector designs.

use qdesign::classical::{find_isomorphisms, gen_complete, gen_projective_plane, verify_hom, ClassicalDesign, HomPair};
use qdesign::cpmaps::functor_q_on_hom;
use qdesign::numkit::Tolerance;

fn main() -> qdesign::Result<()> {
    let fano = gen_projective_plane(2)?;
    let autos = find_isomorphisms(&fano, &fano, None)?;
    println!("automorphisms of PG(2,2): {}", autos.len());

    // Collapse everything onto a single point in a single block of multiplicity 3.
    let point = ClassicalDesign::from_rows(&[[3u64]])?;
    let collapse = HomPair::new(vec![0; 7], vec![0; 7], 1, 1)?;
    println!("collapse commutes: {}", verify_hom(&fano, &point, &collapse)?.holds);

    // A point relabelling that is not induced by any block map.
    let swap = HomPair::new(vec![1, 0, 2, 3, 4, 5, 6], (0..7).collect(), 7, 7)?;
    let check = verify_hom(&fano, &fano, &swap)?;
    println!(
        "naive swap commutes: {} (counterexample {:?})",
        check.holds, check.counterexample
    );

    let d = gen_complete(4, 2)?;
    let autos = find_isomorphisms(&d, &d, Some(3))?;
    for h in &autos {
        let lift = functor_q_on_hom(&d, &d, h)?;
        println!(
            "lift of f_v={:?}: base {:.0e} Δ {:.0e} outer {:.0e} μ {:.0e} commutes={}",
            h.f_v(),
            lift.base,
            lift.comultiplication,
            lift.outer,
            lift.multiplication,
            lift.commutes(Tolerance::default())
        );
    }
    Ok(())
}
