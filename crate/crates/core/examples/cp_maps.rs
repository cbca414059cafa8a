//! Choi matrices, complete positivity, trace preservation and design
//! parameters of linear maps on matrix algebras.

use qdesign::cpmaps::{choi_spectrum, example_cp_map, is_cp, is_trace_preserving, verify_cp_design, CpMap};
use qdesign::numkit::Tolerance;
use qdesign::report::cpmap_report;

fn describe(name: &str, f: &CpMap, tol: Tolerance) -> qdesign::Result<()> {
    let cp = is_cp(f, tol)?;
    let tp = is_trace_preserving(f, tol)?;
    let rep = verify_cp_design(f, tol)?;
    let spectrum: Vec<String> = choi_spectrum(f, tol)?.iter().map(|x| format!("{x:.3}")).collect();
    println!(
        "{name:<12} Choi spectrum [{}]  CP={} TP={}  k={:?} r={:?} λ≈{:?} (residual {:.3})",
        spectrum.join(", "),
        cp.completely_positive,
        tp.trace_preserving,
        rep.k,
        rep.r,
        rep.lambda_fit,
        rep.lambda_residual
    );
    Ok(())
}

fn main() -> qdesign::Result<()> {
    let tol = Tolerance::default();
    describe("identity", &CpMap::identity(2), tol)?;
    describe("transpose", &CpMap::transpose_map(2), tol)?;
    describe("depolarizing", &CpMap::depolarizing(2), tol)?;

    let f = example_cp_map();
    describe("example", &f, tol)?;
    if let Some(g) = f.choi_reading() {
        describe("as Choi", &g, tol)?;
    }
    print!("\n{}", cpmap_report(&f, tol)?.to_text());
    Ok(())
}
