//! Enumerate block designs with given parameters by backtracking.

use qdesign::classical::{are_isomorphic, search_designs, SearchParams};

fn main() -> qdesign::Result<()> {
    let fano = SearchParams::new(7, 7, 3, 3, 1);
    let labelled = search_designs(fano, None, true)?;
    println!("(7,7,3,3,1): {} designs with sorted blocks", labelled.len());

    let mut classes: Vec<_> = Vec::new();
    for d in &labelled {
        if !classes.iter().any(|c| are_isomorphic(c, d).unwrap_or(false)) {
            classes.push(d.clone());
        }
    }
    println!("isomorphism classes: {}", classes.len());

    let biplane = SearchParams::new(7, 7, 4, 4, 2);
    println!("(7,7,4,4,2): {} designs", search_designs(biplane, None, true)?.len());

    // Parameters breaking λ(v−1) = r(k−1) are refused before any search.
    match search_designs(SearchParams::new(4, 4, 2, 2, 1), None, true) {
        Err(e) => println!("(4,4,2,2,1): {e}"),
        Ok(found) => println!("(4,4,2,2,1): unexpectedly found {}", found.len()),
    }
    Ok(())
}
