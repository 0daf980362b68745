//! Smith-Thom and Galois maximality for a few K4-spaces.

use k4coh::maximality::{galois_maximal, group_h1, smith_thom, K4Module};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("H^1(K4; F2) = {}", group_h1(&K4Module::trivial(1)));
    println!("H^1(K4; F2[K4]) = {}", group_h1(&K4Module::free()));

    // HP^2 with trivial action on cohomology; candidate fixed sets RP^2, a
    // point, and something too large to occur.
    let betti_x = [1, 0, 0, 0, 1, 0, 0, 0, 1];
    let modules: Vec<K4Module> = betti_x
        .iter()
        .map(|&b| K4Module::trivial(b as usize))
        .collect();
    for fixed in [vec![1, 1, 1], vec![1], vec![2, 1, 1]] {
        let st = smith_thom(&betti_x, &fixed);
        let gm = galois_maximal(&betti_x, &modules, &fixed)?;
        println!(
            "fixed {fixed:?}: smith-thom {:?} ({} vs {}), galois {:?} ({} vs {})",
            st.status, st.lhs, st.rhs, gm.status, gm.lhs, gm.rhs
        );
    }
    Ok(())
}
