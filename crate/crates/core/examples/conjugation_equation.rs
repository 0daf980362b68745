//! The conjugation equation for quaternionic projective space with its
//! real projective fixed points, term by term.

use k4coh::conjugation::{
    check_multiplicativity, conjugation_rhs, conjugation_terms, purity_certificate, SpaceModel,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let space = SpaceModel::hp(Some(3));
    let fixed_names: Vec<&str> = space.fixed.names.iter().map(String::as_str).collect();
    let y = space.ambient.parse("y")?;

    for term in conjugation_terms(&space, &y)? {
        println!(
            "Sq({},{}) kappa(y) = {:<8} dickson factor {}",
            term.j,
            term.i,
            term.coefficient.show(&fixed_names),
            term.dickson.show(&["t", "t'"]),
        );
    }
    let rhs = conjugation_rhs(&space, &y)?;
    println!("Phi(y) = {}", rhs.show(&space.fixed.names));

    let y2 = space.ambient.parse("y^2")?;
    let ok = check_multiplicativity(&space, &y, &y)?;
    println!("Phi(y)^2 == Phi(y^2): {ok}");
    println!(
        "Phi(y^2) = {}",
        conjugation_rhs(&space, &y2)?.show(&space.fixed.names)
    );

    if let Some((bx, bf)) = space.betti() {
        match purity_certificate(&bx, &bf) {
            Ok(cells) => println!("purity: cells {cells:?}"),
            Err(f) => println!("purity fails at {}: {}", f.index, f.reason),
        }
    }
    Ok(())
}
