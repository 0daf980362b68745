//! Adds a user-written presentation to the catalog and tabulates it.

use k4coh::catalog::{load_catalog_with, DegreeBox};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/sign_line.toml").into()
    });
    let text = std::fs::read_to_string(&path)?;
    let key: String = toml::from_str::<toml::Table>(&text)?["key"]
        .as_str()
        .ok_or("presentation has no key")?
        .into();

    let cat = load_catalog_with(&[(path, text)])?;
    let obj = cat.object(&key)?;
    println!("{key}: {}", cat.provenance(&key)?);
    for g in DegreeBox::cube(1).degrees() {
        let basis = obj.basis_in_degree(g)?;
        if !basis.is_empty() {
            let shown: Vec<String> = basis.iter().map(|e| obj.show_element(e)).collect();
            println!("  {g}: {}", shown.join(", "));
        }
    }
    Ok(())
}
