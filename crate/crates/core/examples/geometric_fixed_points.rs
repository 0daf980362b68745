//! The geometric fixed point ring F2[x0, x1, x2]/(x0x1 + x0x2 + x1x2):
//! its F2-points, its explicit basis, and its Laurent model.

use k4coh::catalog::{
    f2_points_of_euler, is_basis_of_quotient, laurent_vs_r, load_catalog, remark_basis, AuditReport,
};
use k4coh::rodegree::RODegree;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("F2-points: {:?}", f2_points_of_euler());
    let cat = load_catalog()?;
    let r = cat.object("R.phi")?;
    for d in 0..6 {
        let g = RODegree::new(d, 0, 0, 0);
        let basis = remark_basis(r, d)?;
        println!(
            "degree {d}: dim {} (2d+1 = {}), explicit basis ok: {}",
            r.dim_in_degree(g)?,
            2 * d + 1,
            is_basis_of_quotient(r, g, &basis)?
        );
    }
    let cmp = laurent_vs_r(&cat, 8)?;
    println!(
        "R.phi vs Laurent model up to degree 8: {} mismatches",
        cmp.failures()
    );
    Ok(())
}
