//! Canonical JSON documents, the bundled catalog, and machine-readable reports.

use qdesign::catalog_io::{self, Document};
use qdesign::cpmaps::functor_q;
use qdesign::report::classical_report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for entry in catalog_io::catalog_index() {
        println!("{:<16} {:<20} {}", entry.name, entry.schema, entry.description);
    }

    let fano = match catalog_io::catalog_get("fano")? {
        Document::Classical(d) => d,
        other => panic!("fano is a {}", other.schema()),
    };
    let text = catalog_io::classical_to_json(&fano);
    print!("\n{text}");
    println!(
        "round trip is byte-identical: {}",
        catalog_io::classical_to_json(&catalog_io::classical_from_json(&text)?) == text
    );

    let dir = std::env::temp_dir().join("qdesign-file-formats");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("fano-q.json");
    catalog_io::save(&path, &Document::Quantum(functor_q(&fano)?))?;
    println!("saved {} ({})", path.display(), catalog_io::load(&path)?.schema());

    let bad = r#"{"schema":"classical-design/1","v":2,"b":2,"incidence":[[1,0],[1]]}"#;
    println!("malformed input: {}", catalog_io::parse_document(bad).unwrap_err());

    print!("\n{}", classical_report(&fano, true)?.to_json());
    Ok(())
}
