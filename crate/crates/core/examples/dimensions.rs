//! Dimensions of the built-in graded objects in a few RO(K4) degrees.

use k4coh::catalog::load_catalog;
use k4coh::rodegree::{regular_rep, RODegree};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cat = load_catalog()?;
    let degrees = [
        RODegree::ZERO,
        RODegree::new(-1, 1, 1, 0),
        "2-A0+B".parse::<RODegree>()?,
        regular_rep(1),
        -regular_rep(1),
    ];
    print!("{:<16}", "object");
    for g in &degrees {
        print!("{:>20}", g.to_string());
    }
    println!();
    for key in cat.keys() {
        print!("{key:<16}");
        for &g in &degrees {
            print!("{:>20}", cat.dim(&key, g)?);
        }
        println!();
    }
    Ok(())
}
