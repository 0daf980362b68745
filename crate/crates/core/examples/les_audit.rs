//! Runs the long-exact-sequence and δ^u bookkeeping audits on a small box
//! and prints the failing degrees.

use k4coh::catalog::{audit_delta_u, audit_les, load_catalog, AuditReport, DegreeBox, ExactTriple};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k: i64 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(2);
    let cat = load_catalog()?;
    let bx = DegreeBox::cube(k);

    let les = audit_les(&cat, &ExactTriple::free_to_subk(), &bx)?;
    println!(
        "{}: {}/{} degrees pass",
        les.triple.name,
        les.total() - les.failures(),
        les.total()
    );

    let delta = audit_delta_u(&cat, &bx)?;
    println!(
        "delta^u: {}/{} degrees pass",
        delta.total() - delta.failures(),
        delta.total()
    );
    for r in delta.rows.iter().filter(|r| !r.pass).take(5) {
        println!(
            "  {}: EC2 {} + coker {} != ker {} + EF<K> {}",
            r.degree, r.ec2, r.coker_next, r.kernel, r.efk_next
        );
    }
    Ok(())
}
